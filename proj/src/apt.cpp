// Copyright 2026 The qapt Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "qapt/apt.hpp"

#include <algorithm>
#include <cmath>

namespace qapt {

namespace {

void check_params(double eps, double delta) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidArgument("eps must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in (0, 1)");
}

void require_square_oracle(const QueryOracle& oracle) {
  if (oracle.output_qubits() != oracle.num_qubits())
    throw InvalidArgument("learner needs a channel with equal input and output arity");
}

nlohmann::json support_json(const std::vector<PauliString>& xs) {
  nlohmann::json out = nlohmann::json::array();
  for (const PauliString& x : xs) out.push_back(x.code());
  return out;
}

}  // namespace

LearnReport apt_pauli_string(QueryOracle& oracle, double eps, double delta) {
  require_square_oracle(oracle);
  LearnReport r = learn_pauli_string(oracle, eps, delta);
  return r;
}

LearnReport apt_pauli_channel(QueryOracle& oracle, double eps, double delta) {
  check_params(eps, delta);
  require_square_oracle(oracle);
  const std::uint64_t before = oracle.queries();
  const std::uint64_t n = l2_samples(eps, delta);
  std::vector<double> p = empirical_frequencies(oracle, n);
  LearnReport r;
  r.hypothesis = Hypothesis::of_channel(Channel::pauli_channel(oracle.num_qubits(), p),
                                        "pauli_channels", true);
  r.queries_used = oracle.queries() - before;
  r.eps = eps;
  r.delta = delta;
  r.internals = {{"samples", n}, {"p_hat", p}};
  return r;
}

double junta_channel_eps1(int k, double eps) { return eps * eps / (8.0 * std::pow(16.0, k)); }

LearnReport apt_junta_channel(QueryOracle& oracle, int k, double eps, double delta) {
  check_params(eps, delta);
  require_square_oracle(oracle);
  const int n = oracle.num_qubits();
  if (k < 1 || k > n) throw InvalidArgument("junta size k out of range");
  const std::uint64_t before = oracle.queries();
  const double eps1 = junta_channel_eps1(k, eps);
  FourierEstimate est = estimate_fourier_coeffs(oracle, strings_up_to_degree(n, k), eps1, delta);

  const auto d = static_cast<Eigen::Index>(est.index.size());
  nlohmann::json weights = nlohmann::json::object();
  QubitSet best = 0;
  double best_w = -1.0;
  for (QubitSet s : subsets_of_size(n, k)) {
    double w = 0.0;
    for (Eigen::Index i = 0; i < d; ++i) {
      if ((est.index[i].support() & ~s) != 0) continue;
      for (Eigen::Index j = 0; j < d; ++j)
        if ((est.index[j].support() & ~s) == 0) w += std::norm(est.values(i, j));
    }
    weights[qubit_set_str(s)] = w;
    if (w > best_w) {
      best_w = w;
      best = s;
    }
  }

  std::vector<PauliString> on_s = strings_on_subset(n, best);
  Mat f = Mat::Zero(pauli_count(n), pauli_count(n));
  for (Eigen::Index i = 0; i < d; ++i) {
    if ((est.index[i].support() & ~best) != 0) continue;
    for (Eigen::Index j = 0; j < d; ++j)
      if ((est.index[j].support() & ~best) == 0)
        f(est.index[i].code(), est.index[j].code()) = est.values(i, j);
  }
  LearnReport r;
  r.hypothesis = Hypothesis::of_fourier(std::move(f), n, "junta_channel");
  r.queries_used = oracle.queries() - before;
  r.eps = eps;
  r.delta = delta;
  r.internals = {{"subset", qubit_list(best)},
                 {"eps1", eps1},
                 {"weights", weights},
                 {"weight_error_bound", std::pow(16.0, k) * (2.0 * eps1 + eps1 * eps1)},
                 {"support", support_json(on_s)}};
  return r;
}

double low_degree_channel_eps1(int n, int d, double eps) {
  const double pairs = std::pow(static_cast<double>(strings_up_to_degree(n, d).size()), 2);
  const double stated = std::pow(static_cast<double>(n), d) * std::pow(16.0, d);
  return eps * std::sqrt(2.0) / std::sqrt(std::max(stated, pairs));
}

LearnReport apt_low_degree_channel(QueryOracle& oracle, int d, double eps, double delta) {
  check_params(eps, delta);
  require_square_oracle(oracle);
  const int n = oracle.num_qubits();
  if (d < 0 || d > n) throw InvalidArgument("degree out of range");
  const std::uint64_t before = oracle.queries();
  const double eps1 = low_degree_channel_eps1(n, d, eps);
  FourierEstimate est = estimate_fourier_coeffs(oracle, strings_up_to_degree(n, d), eps1, delta);
  LearnReport r;
  r.hypothesis = Hypothesis::of_fourier(embed_fourier(est.values, est.index, n), n,
                                        "low_degree_channel");
  r.queries_used = oracle.queries() - before;
  r.eps = eps;
  r.delta = delta;
  r.internals = {{"eps1", eps1}, {"degree", d}, {"support", support_json(est.index)}};
  return r;
}

int qac0_degree(int n, double size, int depth, double eps) {
  if (!(size > 0.0) || depth < 1) throw InvalidArgument("QAC0 size and depth must be positive");
  const double l = std::log2(std::pow(size / eps, 4.0));
  const double k = std::ceil(std::pow(std::max(l, 0.0), depth));
  if (!(k < static_cast<double>(n + 1))) return n + 1;
  return std::max(0, static_cast<int>(k));
}

LearnReport apt_qac0(QueryOracle& oracle, double size, int depth, double eps, double delta) {
  check_params(eps, delta);
  if (oracle.output_qubits() != 1)
    throw InvalidArgument("QAC0 learner needs a channel with one output qubit");
  const int n = oracle.num_qubits();
  const int m = n + 1;
  const int kt = qac0_degree(n, size, depth, eps);
  const std::uint64_t before = oracle.queries();
  std::vector<PauliString> ys = strings_up_to_degree(m, kt);
  const double eps1 = 2.0 * std::sqrt(2.0) * eps / std::sqrt(static_cast<double>(ys.size()));
  std::vector<double> beta = shadow_all_expectations(oracle, kt, eps1, delta, ys.size());
  std::vector<cplx> alpha(pauli_count(m), 0.0);
  for (const PauliString& y : ys) alpha[y.code()] = beta[y.code()] / 2.0;
  LearnReport r;
  r.hypothesis = Hypothesis::of_operator(reconstruct_dense(m, alpha), "qac0");
  r.queries_used = oracle.queries() - before;
  r.eps = eps;
  r.delta = delta;
  r.internals = {{"degree", kt}, {"eps1", eps1}, {"coefficients", ys.size()},
                 {"hypothesis_is", "choi_operator"}};
  return r;
}

LearnReport apt_finite_class(QueryOracle& oracle, const std::vector<Mat>& cls, double eps,
                             double delta, Ensemble e, SampleRule rule) {
  LearnReport r = learn_finite_class(oracle, cls, eps, delta, e, rule);
  r.hypothesis.class_tag = "finite_class_channel";
  return r;
}

LearnReport apt_from_state_learner(QueryOracle& oracle, const StateLearner& learner,
                                   std::string class_tag, double eps, double delta) {
  return aue_from_state_learner(oracle, learner, std::move(class_tag), eps, delta);
}

LearnReport proper_apt_wrap(const LearnReport& improper, double eps1, ProperWrapOptions opts) {
  const Hypothesis& h = improper.hypothesis;
  if (h.form != HypothesisForm::Fourier || !improper.internals.contains("support"))
    throw InvalidArgument("proper wrap needs a Fourier hypothesis with a recorded support");
  std::vector<PauliString> index;
  for (const auto& c : improper.internals["support"]) index.emplace_back(h.n, c.get<std::uint64_t>());
  CptpProjection pr = project_to_cptp(h.matrix, index, h.n, opts.dykstra, opts.rule);
  const double eps2_target = eps1 / (4.0 * static_cast<double>(index.size()));
  LearnReport r = improper;
  if (pr.channel) {
    r.hypothesis = Hypothesis::of_channel(*pr.channel, h.class_tag, true);
  } else {
    r.hypothesis = Hypothesis::of_fourier(pr.fourier, h.n, h.class_tag);
  }
  r.alpha = 2.0;
  r.internals["projection"] = pr.report.to_json();
  r.internals["projection_failed"] = !pr.channel.has_value();
  r.internals["eps2_target"] = eps2_target;
  r.internals["eps2_met"] = pr.report.eps2 <= eps2_target;
  r.internals["conditional"] = "2 opt bound assumes an unproven convergence condition";
  return r;
}

}  // namespace qapt
