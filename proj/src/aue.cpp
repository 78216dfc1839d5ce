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


#include "qapt/aue.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "qapt/projections.hpp"

namespace qapt {

namespace {

void check_params(double eps, double delta) {
  if (!(eps > 0.0 && eps < 1.0)) throw InvalidArgument("eps must lie in (0, 1)");
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in (0, 1)");
}

void require_unitary_oracle(const QueryOracle& oracle, const char* who) {
  if (!oracle.unitary_target())
    throw UnsupportedProtocol(std::string(who) + " needs a unitary target");
}

std::size_t argmax_lowest(const std::vector<double>& v) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < v.size(); ++i)
    if (v[i] > v[best]) best = i;
  return best;
}

nlohmann::json codes_json(const std::vector<PauliString>& xs) {
  nlohmann::json out = nlohmann::json::array();
  for (const PauliString& x : xs) out.push_back(x.str());
  return out;
}

}  // namespace

LearnReport learn_pauli_string(QueryOracle& oracle, double eps, double delta) {
  check_params(eps, delta);
  const std::uint64_t before = oracle.queries();
  const double eps1 = eps * eps / 2.0;
  std::vector<double> f = empirical_frequencies(oracle, sup_norm_samples(eps1, delta));
  PauliString best(oracle.num_qubits(), argmax_lowest(f));
  LearnReport r;
  r.hypothesis = Hypothesis::of_pauli(best, "pauli_strings");
  r.queries_used = oracle.queries() - before;
  r.eps = eps;
  r.delta = delta;
  r.internals = {{"eps1", eps1}, {"frequency", f[best.code()]}};
  return r;
}

LearnReport learn_unitary_junta(QueryOracle& oracle, int k, double eps, double delta,
                                bool proper) {
  check_params(eps, delta);
  require_unitary_oracle(oracle, "learn_unitary_junta");
  const int n = oracle.num_qubits();
  if (k < 1 || k > n) throw InvalidArgument("junta size k out of range");
  const std::uint64_t before = oracle.queries();

  const double eps1 = eps * eps / 16.0;
  std::vector<QubitSet> subsets = subsets_of_size(n, k);
  EstimateTable weights = estimate_subset_weights(oracle, subsets, eps1, delta / 2.0);
  QubitSet best = subsets.front();
  double best_w = -1.0;
  for (QubitSet s : subsets) {
    double w = weights.at(qubit_set_str(s)).value.real();
    if (w > best_w) {
      best_w = w;
      best = s;
    }
  }

  const double eps2 = eps / (2.0 * std::sqrt(2.0) * std::pow(2.0, k));
  std::vector<PauliString> on_s = strings_on_subset(n, best);
  EstimateTable coeffs = estimate_pauli_coeffs(oracle, on_s, eps2, delta / 2.0);
  std::vector<cplx> local(pauli_count(k), 0.0);
  for (const PauliString& x : on_s) local[restrict_to(x, best).code()] = coeffs.at(x.str()).value;
  Mat v1_local = reconstruct_dense(k, local);

  LearnReport r;
  if (proper) {
    r.hypothesis = Hypothesis::of_unitary(lift_operator(proj_unitary(v1_local), best, n), "junta", true);
    r.alpha = 2.0;
  } else {
    r.hypothesis = Hypothesis::of_operator(lift_operator(v1_local, best, n), "junta");
  }
  r.queries_used = oracle.queries() - before;
  r.eps = eps;
  r.delta = delta;
  r.internals = {{"subset", qubit_list(best)},
                 {"eps1", eps1},
                 {"eps2", eps2},
                 {"weights", weights.to_json()},
                 {"coefficients", coeffs.to_json()}};
  return r;
}

LearnReport learn_low_degree_all(QueryOracle& oracle, int d, double eps, double delta) {
  check_params(eps, delta);
  require_unitary_oracle(oracle, "learn_low_degree_all");
  const int n = oracle.num_qubits();
  if (d < 0) throw InvalidArgument("degree must be non-negative");
  const std::uint64_t before = oracle.queries();
  std::vector<PauliString> xs = strings_up_to_degree(n, d);
  const double budget = std::pow(static_cast<double>(n), d) * std::pow(4.0, d);
  if (static_cast<double>(xs.size()) > budget) throw Error("degree-d string count exceeds n^d 4^d");
  const double eps1 = eps * std::sqrt(2.0) / std::sqrt(budget);
  EstimateTable coeffs = estimate_pauli_coeffs(oracle, xs, eps1, delta);
  std::vector<cplx> a(pauli_count(n), 0.0);
  for (const PauliString& x : xs) a[x.code()] = coeffs.at(x.str()).value;
  LearnReport r;
  r.hypothesis = Hypothesis::of_operator(reconstruct_dense(n, a), "low_degree");
  r.queries_used = oracle.queries() - before;
  r.eps = eps;
  r.delta = delta;
  r.internals = {{"eps1", eps1}, {"coefficients", coeffs.to_json()}};
  return r;
}

double bh_u(int n, int d, const BhOptions& opts) {
  double u = std::pow(static_cast<double>(n), d / 2.0) * std::pow(2.0, d);
  if (opts.opt_hint) u = std::min(u, 1.0 + std::pow(2.0, (n + 1) / 2.0) * *opts.opt_hint);
  return u;
}

double bh_threshold(int n, int d, double eps, const BhOptions& opts) {
  if (!(opts.bh_constant > 0.0)) throw InvalidArgument("BH constant must be positive");
  return std::pow(eps, d + 1) /
         (2.0 * std::pow(opts.bh_constant, static_cast<double>(d) * d) * std::pow(bh_u(n, d, opts), d));
}

LearnReport learn_low_degree_bh(QueryOracle& oracle, int d, double eps, double delta,
                                BhOptions opts) {
  check_params(eps, delta);
  require_unitary_oracle(oracle, "learn_low_degree_bh");
  const int n = oracle.num_qubits();
  if (d < 0) throw InvalidArgument("degree must be non-negative");
  const double c = bh_threshold(n, d, eps, opts);
  if (!(c * c > std::numeric_limits<double>::min()))
    throw RegimeUnusable("BH threshold c underflows double precision");
  const std::uint64_t before = oracle.queries();

  std::vector<double> f;
  try {
    f = empirical_frequencies(oracle, sup_norm_samples(c * c, delta / 2.0));
  } catch (const ResourceLimit& e) {
    throw RegimeUnusable(std::string("BH stage 1: ") + e.what());
  }
  const std::uint64_t stage1 = oracle.queries() - before;
  std::vector<PauliString> chi;
  for (std::size_t x = 0; x < f.size(); ++x) {
    PauliString p(n, x);
    if (p.degree() <= d && std::sqrt(f[x]) >= c) chi.push_back(p);
  }

  std::vector<cplx> a(pauli_count(n), 0.0);
  nlohmann::json coeff_json = nlohmann::json::object();
  if (!chi.empty()) {
    EstimateTable coeffs;
    try {
      coeffs = estimate_pauli_coeffs(oracle, chi, c * eps, delta / 2.0);
    } catch (const ResourceLimit& e) {
      throw RegimeUnusable(std::string("BH stage 2: ") + e.what());
    }
    for (const PauliString& x : chi) a[x.code()] = coeffs.at(x.str()).value;
    coeff_json = coeffs.to_json();
  }
  LearnReport r;
  r.hypothesis = Hypothesis::of_operator(reconstruct_dense(n, a), "low_degree");
  r.queries_used = oracle.queries() - before;
  r.eps = eps;
  r.delta = delta;
  r.internals = {{"c", c},
                 {"u", bh_u(n, d, opts)},
                 {"bh_constant", opts.bh_constant},
                 {"chi_c", codes_json(chi)},
                 {"chi_size", chi.size()},
                 {"stage1_queries", stage1},
                 {"stage2_queries", r.queries_used - stage1},
                 {"coefficients", coeff_json}};
  if (opts.opt_hint) r.internals["opt_hint"] = *opts.opt_hint;
  return r;
}

LearnReport learn_finite_class(QueryOracle& oracle, const std::vector<Mat>& cls, double eps,
                               double delta, Ensemble e, SampleRule rule) {
  check_params(eps, delta);
  if (cls.empty()) throw InvalidArgument("finite class is empty");
  const std::uint64_t before = oracle.queries();
  const double eps1 = eps * eps / 2.0;
  EstimateTable scores = finite_class_scores(oracle, cls, e, eps1, delta, rule);
  std::size_t best = 0;
  double best_score = std::numeric_limits<double>::infinity();
  nlohmann::json sj = nlohmann::json::array();
  for (std::size_t i = 0; i < cls.size(); ++i) {
    double s = scores.at(std::to_string(i)).value.real();
    sj.push_back(s);
    if (s < best_score) {
      best_score = s;
      best = i;
    }
  }
  LearnReport r;
  r.hypothesis = Hypothesis::of_unitary(cls[best], "finite_class", true);
  r.hypothesis.class_index = best;
  r.queries_used = oracle.queries() - before;
  r.eps = eps;
  r.delta = delta;
  r.internals = {{"eps1", eps1}, {"scores", sj}, {"index", best}};
  return r;
}

LearnReport aue_from_state_learner(QueryOracle& oracle, const StateLearner& learner,
                                   std::string class_tag, double eps, double delta) {
  check_params(eps, delta);
  const int n = oracle.num_qubits();
  if (oracle.output_qubits() != n) throw InvalidArgument("state-learner route needs n -> n maps");
  const std::uint64_t before = oracle.queries();
  Mat rho = learner(oracle, eps * eps, delta);
  check_state_learner_output(rho, 2 * n);
  Mat f = fourier_from_choi(rho * static_cast<double>(dim_of(n)), n);
  LearnReport r;
  r.hypothesis = Hypothesis::of_fourier(std::move(f), n, std::move(class_tag));
  r.queries_used = oracle.queries() - before;
  r.eps = eps;
  r.delta = delta;
  r.internals = {{"state_accuracy", eps * eps}};
  return r;
}

}  // namespace qapt
