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


#include "qapt/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "qapt/metrics.hpp"

namespace qapt {

namespace {

constexpr int kMaxShadowQubits = 10;

std::size_t sample_index(Rng& rng, const std::vector<double>& probs) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double r = u(rng), acc = 0.0;
  std::size_t last = 0;
  for (std::size_t i = 0; i < probs.size(); ++i) {
    if (probs[i] <= 0.0) continue;
    last = i;
    acc += probs[i];
    if (r < acc) return i;
  }
  return last;
}

double clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

std::vector<double> normalized(std::vector<double> p) {
  double s = 0.0;
  for (double& v : p) {
    v = std::max(v, 0.0);
    s += v;
  }
  if (s > 0.0)
    for (double& v : p) v /= s;
  return p;
}

}  // namespace

QueryOracle::QueryOracle(const Channel& target, std::uint64_t seed)
    : target_(target), rng_(make_rng(seed)) {
  init();
}

QueryOracle::QueryOracle(const Mat& unitary, std::uint64_t seed)
    : target_(Channel::from_unitary(unitary, 1e-8)), rng_(make_rng(seed)) {
  unitary_ = true;
  unitary_coeffs_ = decompose_dense(unitary);
  init();
}

void QueryOracle::init() {
  n_in_ = target_.n_in();
  n_out_ = target_.n_out();
  const std::size_t din = dim_of(n_in_), dout = dim_of(n_out_);
  const double scale = 1.0 / std::sqrt(static_cast<double>(din));
  choi_state_ = Mat::Zero(din * dout, din * dout);
  for (const Mat& k : target_.kraus()) {
    Vec v(din * dout);
    for (std::size_t a = 0; a < dout; ++a)
      for (std::size_t i = 0; i < din; ++i) v(a * din + i) = k(a, i) * scale;
    choi_state_ += v * v.adjoint();
    choi_vectors_.push_back(std::move(v));
  }
  if (n_in_ == n_out_) {
    basis_probs_.assign(pauli_count(n_in_), 0.0);
    for (const Mat& k : target_.kraus()) {
      std::vector<cplx> a = decompose_dense(k);
      for (std::size_t x = 0; x < a.size(); ++x) basis_probs_[x] += std::norm(a[x]);
    }
    basis_probs_ = normalized(std::move(basis_probs_));
  }
}

void QueryOracle::charge(std::uint64_t count) { queries_ += count; }

void QueryOracle::log(const char* protocol, nlohmann::json params, nlohmann::json outcome) {
  if (!transcript_) return;
  nlohmann::json line = {{"protocol", protocol},
                         {"params", std::move(params)},
                         {"outcome", std::move(outcome)},
                         {"cumulative_queries", queries_}};
  (*transcript_) << line.dump() << '\n';
}

Rng QueryOracle::spawn_rng() { return make_rng(rng_(), ++spawned_); }

PauliString QueryOracle::sample_choi_pauli_basis() {
  if (basis_probs_.empty())
    throw UnsupportedProtocol("Pauli-basis Choi measurement needs equal input and output arity");
  std::size_t x = sample_index(rng_, basis_probs_);
  charge(1);
  PauliString out(n_in_, x);
  if (transcript_) log("sample_choi_pauli_basis", nlohmann::json::object(), out.str());
  return out;
}

std::vector<std::uint64_t> QueryOracle::sample_choi_pauli_basis_counts(std::uint64_t count) {
  if (basis_probs_.empty())
    throw UnsupportedProtocol("Pauli-basis Choi measurement needs equal input and output arity");
  std::vector<std::uint64_t> c = multinomial(rng_, count, basis_probs_);
  charge(count);
  if (transcript_) log("sample_choi_pauli_basis", {{"count", count}}, c);
  return c;
}

bool QueryOracle::hadamard_test_bit(const PauliString& x, HadamardPart part) {
  return hadamard_test_zeros(x, part, 1) == 0;
}

std::uint64_t QueryOracle::hadamard_test_zeros(const PauliString& x, HadamardPart part,
                                               std::uint64_t count) {
  if (!unitary_) throw UnsupportedProtocol("Hadamard test needs a unitary target");
  if (x.num_qubits() != n_in_) throw InvalidArgument("Hadamard test: string length mismatch");
  const cplx a = (*unitary_coeffs_)[x.code()];
  const double p0 = part == HadamardPart::Real ? 0.5 + 0.5 * a.real() : 0.5 - 0.5 * a.imag();
  std::uint64_t zeros = binomial(rng_, count, clamp01(p0));
  charge(count);
  if (transcript_) {
    log("hadamard_test", {{"x", x.str()}, {"part", part == HadamardPart::Real ? "real" : "imag"},
                          {"count", count}},
        {{"zeros", zeros}});
  }
  return zeros;
}

void QueryOracle::check_state(const Vec& v, Eigen::Index dim, const char* what) const {
  if (v.size() != dim) throw InvalidArgument(std::string(what) + ": wrong dimension");
  if (std::abs(v.norm() - 1.0) > 1e-9) throw InvalidArgument(std::string(what) + ": not normalized");
}

bool QueryOracle::swap_test_bit(const Vec& probe) { return swap_test_accepts(probe, 1) == 1; }

std::uint64_t QueryOracle::swap_test_accepts(const Vec& probe, std::uint64_t count) {
  check_state(probe, choi_state_.rows(), "swap test probe");
  double overlap = 0.0;
  for (const Vec& k : choi_vectors_) overlap += std::norm(probe.dot(k));
  std::uint64_t acc = binomial(rng_, count, clamp01(0.5 * (1.0 + overlap)));
  charge(count);
  if (transcript_) log("swap_test", {{"count", count}}, {{"accepts", acc}});
  return acc;
}

const std::vector<double>& QueryOracle::setting_distribution(std::uint64_t setting) {
  const int m = choi_qubits();
  if (shadow_cache_.empty()) {
    std::uint64_t settings = 1;
    for (int q = 0; q < m; ++q) settings *= 3;
    shadow_cache_.resize(settings);
  }
  auto& slot = shadow_cache_[setting];
  if (slot) return *slot;
  static const double r = 1.0 / std::sqrt(2.0);
  // Rows map the measured basis onto the computational basis.
  const cplx gates[3][2][2] = {{{r, r}, {r, -r}},
                               {{r, -kI * r}, {r, kI * r}},
                               {{1.0, 0.0}, {0.0, 1.0}}};
  std::vector<int> bases(m);
  std::uint64_t s = setting;
  for (int q = m - 1; q >= 0; --q) {
    bases[q] = static_cast<int>(s % 3);
    s /= 3;
  }
  const std::size_t dim = dim_of(m);
  std::vector<double> probs(dim, 0.0);
  for (const Vec& k : choi_vectors_) {
    Vec v = k;
    for (int q = 0; q < m; ++q) {
      if (bases[q] == 2) continue;
      const auto& g = gates[bases[q]];
      const std::size_t bit = std::size_t{1} << (m - 1 - q);
      for (std::size_t i = 0; i < dim; ++i) {
        if (i & bit) continue;
        cplx a0 = v(i), a1 = v(i | bit);
        v(i) = g[0][0] * a0 + g[0][1] * a1;
        v(i | bit) = g[1][0] * a0 + g[1][1] * a1;
      }
    }
    for (std::size_t i = 0; i < dim; ++i) probs[i] += std::norm(v(i));
  }
  for (double p : probs)
    if (p < -1e-12 || p > 1.0 + 1e-12) throw Error("shadow outcome probability outside [0,1]");
  slot = normalized(std::move(probs));
  return *slot;
}

ShadowSnapshot QueryOracle::pauli_shadow_snapshot() {
  const int m = choi_qubits();
  if (m > kMaxShadowQubits) throw ResourceLimit("shadow snapshots limited to 10 Choi qubits");
  ShadowSnapshot snap;
  snap.bases.resize(m);
  std::uniform_int_distribution<int> pick(0, 2);
  std::uint64_t setting = 0;
  for (int q = 0; q < m; ++q) {
    snap.bases[q] = pick(rng_);
    setting = setting * 3 + static_cast<std::uint64_t>(snap.bases[q]);
  }
  std::size_t o = sample_index(rng_, setting_distribution(setting));
  snap.outcomes.resize(m);
  for (int q = 0; q < m; ++q) snap.outcomes[q] = static_cast<int>((o >> (m - 1 - q)) & 1u);
  charge(1);
  if (transcript_) log("pauli_shadow_snapshot", nlohmann::json::object(),
                       {{"bases", snap.bases}, {"outcomes", snap.outcomes}});
  return snap;
}

ShadowCounts QueryOracle::pauli_shadow_counts(std::uint64_t count) {
  const int m = choi_qubits();
  if (m > kMaxShadowQubits) throw ResourceLimit("shadow snapshots limited to 10 Choi qubits");
  std::uint64_t settings = 1;
  for (int q = 0; q < m; ++q) settings *= 3;
  const std::size_t outcomes = dim_of(m);
  ShadowCounts sc;
  sc.qubits = m;
  sc.total = count;
  sc.counts.assign(settings * outcomes, 0);
  std::vector<double> uniform(settings, 1.0 / static_cast<double>(settings));
  std::vector<std::uint64_t> per_setting = multinomial(rng_, count, uniform);
  for (std::uint64_t s = 0; s < settings; ++s) {
    if (per_setting[s] == 0) continue;
    std::vector<std::uint64_t> c = multinomial(rng_, per_setting[s], setting_distribution(s));
    std::copy(c.begin(), c.end(), sc.counts.begin() + static_cast<std::ptrdiff_t>(s * outcomes));
  }
  charge(count);
  if (transcript_) log("pauli_shadow_snapshot", {{"count", count}}, {{"counts", sc.counts}});
  return sc;
}

Mat QueryOracle::target_output(const Vec& input) const {
  const Eigen::Index d = target_.kraus().front().rows();
  Mat out = Mat::Zero(d, d);
  for (const Mat& k : target_.kraus()) {
    Vec v = k * input;
    out += v * v.adjoint();
  }
  return out;
}

std::size_t QueryOracle::output_state_sample(const Vec& input, const Mat& basis) {
  check_state(input, static_cast<Eigen::Index>(dim_of(n_in_)), "input state");
  Mat rho = target_output(input);
  std::vector<double> probs(rho.rows());
  if (basis.size() == 0) {
    for (Eigen::Index i = 0; i < rho.rows(); ++i) probs[i] = rho(i, i).real();
  } else {
    if (basis.rows() != rho.rows() || basis.cols() != rho.rows() || unitarity_error(basis) > 1e-9)
      throw InvalidArgument("measurement basis must be an orthonormal basis of the output");
    for (Eigen::Index i = 0; i < rho.rows(); ++i)
      probs[i] = basis.col(i).dot(rho * basis.col(i)).real();
  }
  std::size_t o = sample_index(rng_, normalized(std::move(probs)));
  charge(1);
  if (transcript_) log("output_state_sample", {{"povm", basis.size() == 0 ? "computational" : "given"}}, o);
  return o;
}

bool QueryOracle::fidelity_bit(const Vec& input, const Channel& reference) {
  return fidelity_bits(input, {reference}).front();
}

std::vector<bool> QueryOracle::fidelity_bits(const Vec& input,
                                             const std::vector<Channel>& refs) {
  check_state(input, static_cast<Eigen::Index>(dim_of(n_in_)), "input state");
  Mat rho = target_output(input);
  std::vector<bool> bits;
  bits.reserve(refs.size());
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const Channel& ref : refs) {
    if (ref.n_in() != n_in_ || ref.n_out() != n_out_)
      throw InvalidArgument("reference channel arity differs from the target");
    double f;
    if (ref.kraus().size() == 1) {
      f = fidelity_pure(rho, ref.kraus().front() * input);
    } else {
      Mat sigma = Mat::Zero(rho.rows(), rho.cols());
      for (const Mat& k : ref.kraus()) {
        Vec v = k * input;
        sigma += v * v.adjoint();
      }
      f = fidelity(rho, sigma);
    }
    bits.push_back(u(rng_) < f);
  }
  charge(refs.size());
  if (transcript_) {
    std::vector<int> b(bits.begin(), bits.end());
    log("fidelity_bit", {{"references", refs.size()}}, b);
  }
  return bits;
}

}  // namespace qapt
