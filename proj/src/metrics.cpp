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


#include "qapt/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace qapt {

namespace {

void check_square_pow2(const Mat& a, const Mat& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows() || b.rows() != b.cols())
    throw InvalidArgument("operators must be square and of equal size");
  if (log2_exact(static_cast<std::size_t>(a.rows())) < 0)
    throw InvalidArgument("operator dimension is not a power of two");
}

Mat apply_pure(const Channel& c, const Vec& psi) {
  const Eigen::Index d = c.kraus().front().rows();
  Mat out = Mat::Zero(d, d);
  for (const Mat& k : c.kraus()) {
    Vec v = k * psi;
    out += v * v.adjoint();
  }
  return out;
}

RVec hermitian_eigenvalues(const Mat& a) {
  Mat h = 0.5 * (a + a.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues();
}

struct Running {
  std::uint64_t n = 0;
  double mean = 0.0, m2 = 0.0;
  void add(double x) {
    ++n;
    double delta = x - mean;
    mean += delta / static_cast<double>(n);
    m2 += delta * (x - mean);
  }
  double std_error() const {
    if (n < 2) return 0.0;
    return std::sqrt(m2 / static_cast<double>(n - 1) / static_cast<double>(n));
  }
};

void check_pair(const Channel& a, const Channel& b) {
  if (a.n_in() != b.n_in() || a.n_out() != b.n_out())
    throw InvalidArgument("channels differ in arity");
}

}  // namespace

double df_operator(const Mat& a, const Mat& b) {
  check_square_pow2(a, b);
  return (a - b).norm() / std::sqrt(2.0 * static_cast<double>(a.rows()));
}

double df_choi(const Mat& j1, const Mat& j2, int n_in) {
  if (j1.rows() != j2.rows() || j1.cols() != j2.cols())
    throw InvalidArgument("Choi matrices differ in size");
  return (j1 - j2).norm() / (static_cast<double>(dim_of(n_in)) * std::sqrt(2.0));
}

double df_superop(const Channel& a, const Channel& b) {
  check_pair(a, b);
  return df_choi(choi_matrix(a), choi_matrix(b), a.n_in());
}

double df_fourier(const Mat& f1, const Mat& f2) {
  if (f1.rows() != f2.rows() || f1.cols() != f2.cols())
    throw InvalidArgument("Fourier matrices differ in size");
  return std::sqrt(0.5 * (f1 - f2).squaredNorm());
}

double davg_unitary(const Mat& u, const Mat& v, double tol) {
  check_square_pow2(u, v);
  if (unitarity_error(u) > tol || unitarity_error(v) > tol)
    throw InvalidArgument("davg_unitary needs unitary inputs");
  const double d = static_cast<double>(u.rows());
  const double t = std::norm((u.adjoint() * v).trace());
  return std::sqrt(std::max(0.0, (d * d - t) / (d * (d + 1.0))));
}

Vec sample_input_state(int n, Ensemble e, Rng& rng) {
  check_qubits(n);
  const std::size_t d = dim_of(n);
  if (e == Ensemble::Haar) {
    Mat g = random_ginibre(d, 1, rng);
    Vec v = g.col(0);
    return v / v.norm();
  }
  static const double r = 1.0 / std::sqrt(2.0);
  const cplx states[6][2] = {{1.0, 0.0}, {0.0, 1.0}, {r, r},
                             {r, -r},    {r, kI * r}, {r, -kI * r}};
  std::uniform_int_distribution<int> pick(0, 5);
  Vec v = Vec::Ones(1);
  for (int q = 0; q < n; ++q) {
    const cplx* s = states[pick(rng)];
    Vec w(v.size() * 2);
    for (Eigen::Index i = 0; i < v.size(); ++i) {
      w(2 * i) = v(i) * s[0];
      w(2 * i + 1) = v(i) * s[1];
    }
    v = std::move(w);
  }
  return v;
}

double trace_distance(const Mat& rho, const Mat& sigma) {
  return 0.5 * hermitian_eigenvalues(rho - sigma).cwiseAbs().sum();
}

double fidelity(const Mat& rho, const Mat& sigma) {
  Mat h = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  // Round-off eigenvalues would otherwise contribute their square roots.
  auto clipped_sqrt = [](const RVec& v) {
    return v.unaryExpr([](double x) { return x > 1e-14 ? std::sqrt(x) : 0.0; }).eval();
  };
  RVec ev = clipped_sqrt(es.eigenvalues());
  Mat sq = es.eigenvectors() * ev.cast<cplx>().asDiagonal() * es.eigenvectors().adjoint();
  RVec inner = clipped_sqrt(hermitian_eigenvalues(sq * sigma * sq));
  double f = inner.sum();
  return std::min(1.0, f * f);
}

double fidelity_pure(const Mat& rho, const Vec& phi) {
  return std::clamp(phi.dot(rho * phi).real(), 0.0, 1.0);
}

DistanceReport davg_channel_mc(const Channel& a, const Channel& b, Ensemble e,
                               std::uint64_t samples, std::uint64_t seed) {
  check_pair(a, b);
  if (samples == 0) throw InvalidArgument("Monte Carlo needs at least one sample");
  Rng rng = make_rng(seed);
  Running acc;
  for (std::uint64_t s = 0; s < samples; ++s) {
    Vec psi = sample_input_state(a.n_in(), e, rng);
    double t = trace_distance(apply_pure(a, psi), apply_pure(b, psi));
    acc.add(t * t);
  }
  DistanceReport r;
  r.kind = DistanceReport::Kind::MonteCarlo;
  r.samples = samples;
  r.mean = std::max(0.0, acc.mean);
  r.mean_std_error = acc.std_error();
  r.value = std::sqrt(r.mean);
  r.std_error = r.value > 0.0 ? r.mean_std_error / (2.0 * r.value) : r.mean_std_error;
  return r;
}

DistanceReport avg_infidelity_mc(const Channel& a, const Channel& b, Ensemble e,
                                 std::uint64_t samples, std::uint64_t seed) {
  check_pair(a, b);
  if (samples == 0) throw InvalidArgument("Monte Carlo needs at least one sample");
  Rng rng = make_rng(seed);
  Running acc;
  for (std::uint64_t s = 0; s < samples; ++s) {
    Vec psi = sample_input_state(a.n_in(), e, rng);
    acc.add(1.0 - fidelity(apply_pure(a, psi), apply_pure(b, psi)));
  }
  DistanceReport r;
  r.kind = DistanceReport::Kind::MonteCarlo;
  r.samples = samples;
  r.mean = acc.mean;
  r.mean_std_error = acc.std_error();
  r.value = acc.mean;
  r.std_error = r.mean_std_error;
  return r;
}

double avg_infidelity_vs_unitary(const Channel& a, const Mat& v) {
  if (a.n_in() != a.n_out() || v.rows() != a.kraus().front().rows())
    throw InvalidArgument("avg_infidelity_vs_unitary: size mismatch");
  const double d = static_cast<double>(v.rows());
  double s = 0.0;
  for (const Mat& k : a.kraus()) s += std::norm((v.adjoint() * k).trace());
  return std::max(0.0, 1.0 - (d + s) / (d * (d + 1.0)));
}

double entanglement_infidelity(const Channel& a, const Channel& b) {
  check_pair(a, b);
  return std::max(0.0, 1.0 - fidelity(choi_state(a), choi_state(b)));
}

}  // namespace qapt
