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


#include "qapt/optimal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "qapt/projections.hpp"

namespace qapt {

const char* opt_kind_name(OptKind k) {
  switch (k) {
    case OptKind::Exact: return "exact";
    case OptKind::LowerBound: return "lower_bound";
    case OptKind::UpperBound: return "upper_bound";
  }
  return "unknown";
}

namespace {

int qubits_of_operator(const Mat& u) {
  int n = log2_exact(static_cast<std::size_t>(u.rows()));
  if (n < 0 || u.rows() != u.cols()) throw InvalidArgument("operator must be 2^n x 2^n");
  return n;
}

int qubits_of_fourier(const Mat& f) {
  int n2 = log2_exact(static_cast<std::size_t>(f.rows()));
  if (n2 < 0 || n2 % 2 != 0 || f.rows() != f.cols())
    throw InvalidArgument("Fourier matrix must be 4^n x 4^n");
  return n2 / 2;
}

void require_unitary(const Mat& u) {
  if (unitarity_error(u) > 1e-8) throw InvalidArgument("target is not unitary");
}

// Junta unitary on S from the coefficients of U supported in S: project the
// 2^k-dimensional restriction to the nearest unitary and lift it back.
Mat junta_unitary_witness(const std::vector<cplx>& coeffs, int n, QubitSet s) {
  const int k = std::popcount(s);
  std::vector<cplx> local(pauli_count(k), 0.0);
  for (std::uint64_t c = 0; c < local.size(); ++c)
    local[c] = coeffs[lift(PauliString(k, c), s, n).code()];
  Mat v_local = proj_unitary(reconstruct_dense(k, local));
  std::vector<cplx> vloc = decompose_dense(v_local);
  std::vector<cplx> full(pauli_count(n), 0.0);
  for (std::uint64_t c = 0; c < vloc.size(); ++c)
    full[lift(PauliString(k, c), s, n).code()] = vloc[c];
  return reconstruct_dense(n, full);
}

Mat identity_fourier(int n) {
  Mat f = Mat::Zero(pauli_count(n), pauli_count(n));
  f(0, 0) = 1.0;
  return f;
}

}  // namespace

OptReport opt_pauli_strings_davg(const Mat& u) {
  const int n = qubits_of_operator(u);
  require_unitary(u);
  std::vector<cplx> a = decompose_dense(u);
  std::size_t best = 0;
  for (std::size_t c = 1; c < a.size(); ++c)
    if (std::norm(a[c]) > std::norm(a[best])) best = c;
  const double d = static_cast<double>(dim_of(n));
  OptReport r;
  r.kind = OptKind::Exact;
  r.value = std::sqrt(std::max(0.0, d / (d + 1.0) * (1.0 - std::norm(a[best]))));
  r.witness = Hypothesis::of_pauli(PauliString(n, best), "pauli_strings");
  return r;
}

OptReport opt_pauli_strings_df(const Mat& f) {
  const int n = qubits_of_fourier(f);
  Eigen::Index best = 0;
  for (Eigen::Index z = 1; z < f.rows(); ++z)
    if (f(z, z).real() > f(best, best).real()) best = z;
  OptReport r;
  r.kind = OptKind::Exact;
  r.value = std::sqrt(std::max(0.0, 0.5 * (1.0 + f.squaredNorm()) - f(best, best).real()));
  r.witness = Hypothesis::of_pauli(PauliString(n, best), "pauli_strings");
  return r;
}

OptReport opt_pauli_channels(const Mat& f) {
  const int n = qubits_of_fourier(f);
  double diag = 0.0;
  std::vector<double> p(f.rows());
  for (Eigen::Index x = 0; x < f.rows(); ++x) {
    diag += std::norm(f(x, x));
    p[x] = std::max(0.0, f(x, x).real());
  }
  double total = 0.0;
  for (double v : p) total += v;
  for (double& v : p) v /= total;
  OptReport r;
  r.kind = OptKind::Exact;
  r.value = std::sqrt(std::max(0.0, 0.5 * (f.squaredNorm() - diag)));
  r.witness = Hypothesis::of_channel(Channel::pauli_channel(n, p), "pauli_channels", true);
  return r;
}

// sqrt(1 - sqrt(w)) written as sqrt((1 - w) / (1 + sqrt(w))) with 1 - w
// passed in as the mass outside, which avoids cancellation near w = 1.
static double unitary_lower_bound(double w, double outside) {
  return std::sqrt(std::max(0.0, outside) / (1.0 + std::sqrt(std::max(0.0, w))));
}

OptBounds opt_junta_bounds_unitary(const Mat& u, int k) {
  const int n = qubits_of_operator(u);
  require_unitary(u);
  if (k < 1 || k > n) throw InvalidArgument("junta size k out of range");
  std::vector<cplx> a = decompose_dense(u);
  PauliSpectrum spec = PauliSpectrum::from_dense(n, a);
  OptBounds b;
  double best_w = -1.0;
  for (QubitSet s : subsets_of_size(n, k)) {
    double w = weight_on_subset(spec, s);
    if (w > best_w) {
      best_w = w;
      b.subset = s;
    }
  }
  b.lower.kind = OptKind::LowerBound;
  const QubitSet rest = ((QubitSet{1} << n) - 1) & ~b.subset;
  b.lower.value = unitary_lower_bound(best_w, influence_on_subset(spec, rest));
  b.upper.kind = OptKind::UpperBound;
  b.upper.value = std::numeric_limits<double>::infinity();
  for (QubitSet s : subsets_of_size(n, k)) {
    Mat v = junta_unitary_witness(a, n, s);
    double dist = df_operator(u, v);
    if (dist < b.upper.value) {
      b.upper.value = dist;
      b.upper.witness = Hypothesis::of_unitary(v, "junta", true);
    }
  }
  return b;
}

OptBounds opt_junta_bounds_channel(const Mat& f, int k) {
  const int n = qubits_of_fourier(f);
  if (k < 1 || k > n) throw InvalidArgument("junta size k out of range");
  OptBounds b;
  double best_w = -1.0;
  for (QubitSet s : subsets_of_size(n, k)) {
    double w = superop_subset_weight(f, s);
    if (w > best_w) {
      best_w = w;
      b.subset = s;
    }
  }
  b.lower.kind = OptKind::LowerBound;
  b.lower.value = std::sqrt(std::max(0.0, 0.5 * (f.squaredNorm() - best_w)));
  b.upper.kind = OptKind::UpperBound;
  Mat id = identity_fourier(n);
  b.upper.value = df_fourier(f, id);
  b.upper.witness = Hypothesis::of_channel(Channel::identity(n), "junta_channel", true);
  for (QubitSet s : subsets_of_size(n, k)) {
    CptpProjection pr = project_to_cptp(f, strings_on_subset(n, s), n);
    if (!pr.channel) continue;
    double dist = df_fourier(f, pr.fourier);
    if (dist < b.upper.value) {
      b.upper.value = dist;
      b.upper.witness = Hypothesis::of_channel(*pr.channel, "junta_channel", true);
    }
  }
  return b;
}

OptBounds opt_lowdeg_bounds_unitary(const Mat& u, int d) {
  const int n = qubits_of_operator(u);
  require_unitary(u);
  if (d < 0) throw InvalidArgument("degree must be non-negative");
  std::vector<cplx> a = decompose_dense(u);
  PauliSpectrum spec = PauliSpectrum::from_dense(n, a);
  OptBounds b;
  b.lower.kind = OptKind::LowerBound;
  b.lower.value = unitary_lower_bound(weight_at_level(spec, DegreePredicate::le(d)),
                                      weight_at_level(spec, DegreePredicate::gt(d)));
  b.upper.kind = OptKind::UpperBound;
  b.upper.value = std::numeric_limits<double>::infinity();
  auto consider = [&](const Mat& v) {
    double dist = df_operator(u, v);
    if (dist < b.upper.value) {
      b.upper.value = dist;
      b.upper.witness = Hypothesis::of_unitary(v, "low_degree", true);
    }
  };
  // The projected truncation only counts when it stayed inside the class.
  Mat polar = proj_unitary(reconstruct(truncate(spec, DegreePredicate::le(d))));
  if (weight_at_level(decompose(polar), DegreePredicate::gt(d)) <= 1e-20) consider(polar);
  const int k = std::min(d, n);
  if (k == 0) {
    consider(proj_unitary(a[0] * Mat::Identity(u.rows(), u.cols())));
    if (a[0] == cplx(0.0)) consider(Mat::Identity(u.rows(), u.cols()));
  } else {
    for (QubitSet s : subsets_of_size(n, k)) consider(junta_unitary_witness(a, n, s));
  }
  return b;
}

OptBounds opt_lowdeg_bounds_channel(const Mat& f, int d) {
  const int n = qubits_of_fourier(f);
  if (d < 0) throw InvalidArgument("degree must be non-negative");
  double w = superop_weight(f, [d](const PauliString& x, const PauliString& y) {
    return x.degree() <= d && y.degree() <= d;
  });
  OptBounds b;
  b.lower.kind = OptKind::LowerBound;
  b.lower.value = std::sqrt(std::max(0.0, 0.5 * (f.squaredNorm() - w)));
  b.upper.kind = OptKind::UpperBound;
  b.upper.value = df_fourier(f, identity_fourier(n));
  b.upper.witness = Hypothesis::of_channel(Channel::identity(n), "low_degree_channel", true);
  CptpProjection pr = project_to_cptp(f, strings_up_to_degree(n, d), n);
  if (pr.channel) {
    double dist = df_fourier(f, pr.fourier);
    if (dist < b.upper.value) {
      b.upper.value = dist;
      b.upper.witness = Hypothesis::of_channel(*pr.channel, "low_degree_channel", true);
    }
  }
  return b;
}

OptReport opt_finite_class(const Mat& u, const std::vector<Mat>& cls) {
  if (cls.empty()) throw InvalidArgument("finite class is empty");
  OptReport r;
  r.kind = OptKind::Exact;
  r.value = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cls.size(); ++i) {
    double dist = davg_unitary(u, cls[i]);
    if (dist < r.value) {
      r.value = dist;
      Hypothesis h = Hypothesis::of_unitary(cls[i], "finite_class", true);
      h.class_index = i;
      r.witness = h;
    }
  }
  return r;
}

OptBounds opt_finite_class_channel(const Channel& target, const std::vector<Mat>& cls,
                                   Ensemble e, std::uint64_t samples, std::uint64_t seed) {
  if (cls.empty()) throw InvalidArgument("finite class is empty");
  OptBounds b;
  b.lower.kind = OptKind::LowerBound;
  b.upper.kind = OptKind::UpperBound;
  b.lower.value = b.upper.value = std::numeric_limits<double>::infinity();
  double best_mean = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < cls.size(); ++i) {
    DistanceReport mc =
        davg_channel_mc(target, Channel::from_unitary(cls[i], 1e-8), e, samples, seed);
    double hi = std::sqrt(mc.mean + 3.0 * mc.mean_std_error);
    double lo = std::sqrt(std::max(0.0, mc.mean - 3.0 * mc.mean_std_error));
    b.upper.value = std::min(b.upper.value, hi);
    b.lower.value = std::min(b.lower.value, lo);
    if (mc.mean < best_mean) {
      best_mean = mc.mean;
      Hypothesis h = Hypothesis::of_unitary(cls[i], "finite_class", true);
      h.class_index = i;
      b.upper.witness = h;
    }
  }
  return b;
}

}  // namespace qapt
