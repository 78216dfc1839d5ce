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


#include "qapt/estimators.hpp"

#include <algorithm>
#include <cmath>

namespace qapt {

namespace {

constexpr double kSqrt2 = 1.4142135623730951;

std::uint64_t to_count(double x) {
  if (!std::isfinite(x) || x > 9.0e18)
    throw ResourceLimit("sample count overflows 64-bit counters");
  return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(x)));
}

void check_eps_delta(double eps, double delta) {
  if (!(eps > 0.0)) throw InvalidArgument("eps must be positive");
  if (!(delta > 0.0 && delta < 1.0)) throw InvalidArgument("delta must lie in (0, 1)");
}

double median(std::vector<double> v) {
  std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  double hi = v[mid];
  if (v.size() % 2 == 1) return hi;
  double lo = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lo + hi);
}

// Mean of 2 * accepts / count - 1, the SWAP-test estimate of <p|v|p>.
double swap_expectation(QueryOracle& oracle, const Vec& probe, std::uint64_t count) {
  std::uint64_t acc = oracle.swap_test_accepts(probe, count);
  return 2.0 * static_cast<double>(acc) / static_cast<double>(count) - 1.0;
}

// Per-qubit estimator weights g[p][2 s + o] for Pauli digit p (0 = I) from a
// snapshot in basis s (0 = X, 1 = Y, 2 = Z) with outcome o.
double shadow_weight(int p, int cell) {
  if (p == 0) return 1.0;
  int s = cell / 2, o = cell % 2;
  if (s != p - 1) return 0.0;
  return o == 0 ? 3.0 : -3.0;
}

// Batch means for every Pauli string on m qubits, indexed by code.
std::vector<double> batch_means(const ShadowCounts& sc) {
  const int m = sc.qubits;
  const std::size_t outcomes = dim_of(m);
  std::size_t cells = 1;
  for (int q = 0; q < m; ++q) cells *= 6;
  std::vector<double> t(cells, 0.0);
  for (std::size_t idx = 0; idx < sc.counts.size(); ++idx) {
    if (sc.counts[idx] == 0) continue;
    std::size_t setting = idx / outcomes, outcome = idx % outcomes;
    std::vector<int> s(m);
    for (int q = m - 1; q >= 0; --q) {
      s[q] = static_cast<int>(setting % 3);
      setting /= 3;
    }
    std::size_t cell = 0;
    for (int q = 0; q < m; ++q) {
      int o = static_cast<int>((outcome >> (m - 1 - q)) & 1u);
      cell = cell * 6 + static_cast<std::size_t>(2 * s[q] + o);
    }
    t[cell] += static_cast<double>(sc.counts[idx]);
  }
  // Contract one axis at a time: leading axes already hold Pauli digits.
  std::size_t before = 1, after = cells / 6;
  for (int q = 0; q < m; ++q) {
    std::vector<double> next(before * 4 * after, 0.0);
    for (std::size_t b = 0; b < before; ++b)
      for (int c = 0; c < 6; ++c)
        for (std::size_t a = 0; a < after; ++a) {
          double v = t[(b * 6 + c) * after + a];
          if (v == 0.0) continue;
          for (int p = 0; p < 4; ++p) {
            double g = shadow_weight(p, c);
            if (g != 0.0) next[(b * 4 + p) * after + a] += g * v;
          }
        }
    t = std::move(next);
    before *= 4;
    after /= 6;
  }
  for (double& v : t) v /= static_cast<double>(sc.total);
  return t;
}

}  // namespace

nlohmann::json EstimateTable::to_json() const {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [key, e] : entries) {
    out[key] = {{"re", e.value.real()},
                {"im", e.value.imag()},
                {"target_eps", e.target_eps},
                {"samples", e.samples}};
  }
  return {{"entries", out}, {"delta_budget", delta_budget}, {"queries", queries}};
}

std::uint64_t hoeffding_samples(double eps, double delta) {
  check_eps_delta(eps, delta);
  return to_count(std::log(2.0 / delta) / (2.0 * eps * eps));
}

std::uint64_t sup_norm_samples(double eps, double delta) {
  check_eps_delta(eps, delta);
  return to_count(2.0 * std::log(2.0 / delta) / (eps * eps));
}

std::uint64_t l2_samples(double eps, double delta) {
  check_eps_delta(eps, delta);
  double r = 1.0 + std::sqrt(std::log(1.0 / delta));
  return to_count(r * r / (2.0 * eps * eps));
}

std::uint64_t mom_batches(std::size_t m, double delta) {
  check_eps_delta(1.0, delta);
  return to_count(8.0 * std::log(static_cast<double>(std::max<std::size_t>(m, 1)) / delta));
}

std::uint64_t mom_batch_size(int k, double eps) {
  if (!(eps > 0.0)) throw InvalidArgument("eps must be positive");
  return to_count(4.0 * std::pow(3.0, k) / (eps * eps));
}

std::vector<double> empirical_frequencies(QueryOracle& oracle, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("empirical distribution needs at least one sample");
  std::vector<std::uint64_t> c = oracle.sample_choi_pauli_basis_counts(n);
  std::vector<double> f(c.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    f[i] = static_cast<double>(c[i]) / static_cast<double>(n);
  return f;
}

EstimateTable empirical_distribution(QueryOracle& oracle, std::uint64_t n) {
  const std::uint64_t before = oracle.queries();
  std::vector<double> f = empirical_frequencies(oracle, n);
  EstimateTable t;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[x] > 0.0) t.entries[PauliString(oracle.num_qubits(), x).str()] = {f[x], 0.0, n};
  t.queries = oracle.queries() - before;
  return t;
}

cplx estimate_pauli_coeff(QueryOracle& oracle, const PauliString& x, double eps,
                          double delta) {
  check_eps_delta(eps, delta);
  // Each part is 2 p0 - 1 (or 1 - 2 p0); p0 to eps / (2 sqrt 2) gives eps / sqrt 2.
  const std::uint64_t n = hoeffding_samples(eps / (2.0 * kSqrt2), delta / 2.0);
  const double nd = static_cast<double>(n);
  double re = 2.0 * static_cast<double>(oracle.hadamard_test_zeros(x, HadamardPart::Real, n)) / nd - 1.0;
  double im = 1.0 - 2.0 * static_cast<double>(oracle.hadamard_test_zeros(x, HadamardPart::Imag, n)) / nd;
  return {re, im};
}

EstimateTable estimate_pauli_coeffs(QueryOracle& oracle, const std::vector<PauliString>& xs,
                                    double eps, double delta) {
  check_eps_delta(eps, delta);
  if (xs.empty()) throw InvalidArgument("no Pauli strings to estimate");
  const std::uint64_t before = oracle.queries();
  const double share = delta / static_cast<double>(xs.size());
  const std::uint64_t n = hoeffding_samples(eps / (2.0 * kSqrt2), share / 2.0);
  EstimateTable t;
  t.delta_budget = delta;
  for (const PauliString& x : xs) t.entries[x.str()] = {estimate_pauli_coeff(oracle, x, eps, share), eps, 2 * n};
  t.queries = oracle.queries() - before;
  return t;
}

cplx estimate_fourier_coeff(QueryOracle& oracle, const PauliString& x, const PauliString& y,
                            double eps, double delta) {
  check_eps_delta(eps, delta);
  if (x.num_qubits() != y.num_qubits() || x.num_qubits() != oracle.num_qubits() ||
      oracle.output_qubits() != oracle.num_qubits())
    throw InvalidArgument("Fourier coefficient: arity mismatch");
  if (x == y) return swap_expectation(oracle, pauli_choi_vector(x), hoeffding_samples(eps / 2.0, delta));
  const std::uint64_t n = hoeffding_samples(eps / (4.0 * kSqrt2), delta / 4.0);
  Vec vx = pauli_choi_vector(x), vy = pauli_choi_vector(y);
  double fxx = swap_expectation(oracle, vx, n);
  double fyy = swap_expectation(oracle, vy, n);
  double plus = swap_expectation(oracle, (vx + vy) / kSqrt2, n);
  double minus = swap_expectation(oracle, (vx - kI * vy) / kSqrt2, n);
  double mid = 0.5 * (fxx + fyy);
  return {plus - mid, minus - mid};
}

FourierEstimate estimate_fourier_coeffs(QueryOracle& oracle, std::vector<PauliString> index,
                                        double eps, double delta) {
  check_eps_delta(eps, delta);
  if (index.empty()) throw InvalidArgument("empty index set");
  std::sort(index.begin(), index.end());
  const int n = oracle.num_qubits();
  for (const PauliString& x : index)
    if (x.num_qubits() != n) throw InvalidArgument("index string length mismatch");
  if (oracle.output_qubits() != n) throw InvalidArgument("Fourier estimation needs n -> n maps");
  const std::uint64_t before = oracle.queries();
  const std::size_t d = index.size();
  const double scalars = static_cast<double>(d + d * (d - 1));
  const std::uint64_t count = hoeffding_samples(eps / (4.0 * kSqrt2), delta / scalars);

  FourierEstimate out;
  out.index = index;
  out.values = Mat::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  std::vector<Vec> v(d);
  for (std::size_t i = 0; i < d; ++i) {
    v[i] = pauli_choi_vector(index[i]);
    out.values(i, i) = swap_expectation(oracle, v[i], count);
  }
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i + 1; j < d; ++j) {
      double mid = 0.5 * (out.values(i, i).real() + out.values(j, j).real());
      double plus = swap_expectation(oracle, (v[i] + v[j]) / kSqrt2, count);
      double minus = swap_expectation(oracle, (v[i] - kI * v[j]) / kSqrt2, count);
      out.values(i, j) = cplx(plus - mid, minus - mid);
      out.values(j, i) = std::conj(out.values(i, j));
    }
  out.table.delta_budget = delta;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j)
      out.table.entries[index[i].str() + "," + index[j].str()] = {out.values(i, j), eps,
                                                                   i == j ? count : 3 * count};
  out.table.queries = oracle.queries() - before;
  return out;
}

EstimateTable estimate_subset_weights(QueryOracle& oracle, const std::vector<QubitSet>& subsets,
                                      double eps, double delta) {
  check_eps_delta(eps, delta);
  if (subsets.empty()) throw InvalidArgument("no subsets given");
  const std::uint64_t before = oracle.queries();
  const double m = static_cast<double>(subsets.size());
  const std::uint64_t n = hoeffding_samples(eps, delta / m);
  std::vector<double> f = empirical_frequencies(oracle, n);
  EstimateTable t;
  t.delta_budget = delta;
  const int nq = oracle.num_qubits();
  for (QubitSet s : subsets) {
    double w = 0.0;
    for (std::size_t x = 0; x < f.size(); ++x)
      if ((PauliString(nq, x).support() & ~s) == 0) w += f[x];
    t.entries[qubit_set_str(s)] = {w, eps, n};
  }
  t.queries = oracle.queries() - before;
  return t;
}

std::vector<double> shadow_all_expectations(QueryOracle& oracle, int max_degree, double eps,
                                            double delta, std::size_t m) {
  check_eps_delta(eps, delta);
  const std::uint64_t k = mom_batches(m, delta);
  const std::uint64_t b = mom_batch_size(max_degree, eps);
  std::vector<std::vector<double>> batches;
  batches.reserve(k);
  for (std::uint64_t i = 0; i < k; ++i) batches.push_back(batch_means(oracle.pauli_shadow_counts(b)));
  std::vector<double> out(batches.front().size());
  std::vector<double> col(k);
  for (std::size_t c = 0; c < out.size(); ++c) {
    for (std::uint64_t i = 0; i < k; ++i) col[i] = batches[i][c];
    out[c] = median(col);
  }
  return out;
}

EstimateTable shadow_pauli_expectations(QueryOracle& oracle,
                                        const std::vector<PauliString>& observables,
                                        double eps, double delta, ShadowOptions opts) {
  check_eps_delta(eps, delta);
  if (observables.empty()) throw InvalidArgument("no observables given");
  int k = 0;
  for (const PauliString& y : observables) {
    if (y.num_qubits() != oracle.choi_qubits())
      throw InvalidArgument("observable must act on the Choi qubits");
    if (y.degree() > opts.k_max)
      throw InvalidArgument("observable degree " + std::to_string(y.degree()) +
                            " exceeds the cap " + std::to_string(opts.k_max));
    k = std::max(k, y.degree());
  }
  const std::uint64_t before = oracle.queries();
  std::vector<double> all = shadow_all_expectations(oracle, k, eps, delta, observables.size());
  EstimateTable t;
  t.delta_budget = delta;
  for (const PauliString& y : observables) t.entries[y.str()] = {all[y.code()], eps, 0};
  t.queries = oracle.queries() - before;
  for (auto& [key, e] : t.entries) e.samples = t.queries;
  return t;
}

std::uint64_t finite_class_samples(std::size_t class_size, double eps, double delta,
                                   SampleRule rule) {
  check_eps_delta(eps, delta);
  const double l = std::log(2.0 * static_cast<double>(class_size) / delta);
  if (rule == SampleRule::Conservative) return to_count(204.0 * l / (eps * eps));
  return to_count(l / (2.0 * eps * eps));
}

EstimateTable finite_class_scores(QueryOracle& oracle, const std::vector<Channel>& cls,
                                  Ensemble e, double eps, double delta, SampleRule rule) {
  if (cls.empty()) throw InvalidArgument("finite class is empty");
  const std::uint64_t before = oracle.queries();
  const std::uint64_t n = finite_class_samples(cls.size(), eps, delta, rule);
  Rng rng = oracle.spawn_rng();
  std::vector<std::uint64_t> ones(cls.size(), 0);
  for (std::uint64_t s = 0; s < n; ++s) {
    Vec psi = sample_input_state(oracle.num_qubits(), e, rng);
    std::vector<bool> bits = oracle.fidelity_bits(psi, cls);
    for (std::size_t i = 0; i < bits.size(); ++i) ones[i] += bits[i] ? 1 : 0;
  }
  EstimateTable t;
  t.delta_budget = delta;
  for (std::size_t i = 0; i < cls.size(); ++i)
    t.entries[std::to_string(i)] = {1.0 - static_cast<double>(ones[i]) / static_cast<double>(n), eps, n};
  t.queries = oracle.queries() - before;
  return t;
}

EstimateTable finite_class_scores(QueryOracle& oracle, const std::vector<Mat>& cls, Ensemble e,
                                  double eps, double delta, SampleRule rule) {
  std::vector<Channel> chans;
  chans.reserve(cls.size());
  for (const Mat& u : cls) chans.push_back(Channel::from_unitary(u, 1e-8));
  return finite_class_scores(oracle, chans, e, eps, delta, rule);
}

}  // namespace qapt
