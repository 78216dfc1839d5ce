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


#include "qapt/channel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace qapt {

namespace {

int qubits_of(Eigen::Index d, const char* what) {
  int n = log2_exact(static_cast<std::size_t>(d));
  if (n < 0) throw InvalidArgument(std::string(what) + ": dimension is not a power of two");
  return n;
}

double tp_error(const std::vector<Mat>& kraus) {
  const Eigen::Index d = kraus.front().cols();
  Mat s = Mat::Zero(d, d);
  for (const Mat& k : kraus) s += k.adjoint() * k;
  return (s - Mat::Identity(d, d)).cwiseAbs().maxCoeff();
}

}  // namespace

Channel Channel::from_kraus(std::vector<Mat> kraus, double tp_tol) {
  if (kraus.empty()) throw InvalidArgument("channel needs at least one Kraus operator");
  const Eigen::Index rows = kraus.front().rows(), cols = kraus.front().cols();
  for (const Mat& k : kraus)
    if (k.rows() != rows || k.cols() != cols)
      throw InvalidArgument("Kraus operators differ in shape");
  const int n_out = qubits_of(rows, "Kraus operator");
  const int n_in = qubits_of(cols, "Kraus operator");
  check_qubits(n_in);
  check_qubits(n_out);
  double err = tp_error(kraus);
  if (!(err <= tp_tol))
    throw InvalidArgument("Kraus operators are not trace preserving (residual " +
                          std::to_string(err) + ")");
  return Channel(n_in, n_out, std::move(kraus));
}

Channel Channel::from_unitary(const Mat& u, double tol) {
  if (u.rows() != u.cols()) throw InvalidArgument("unitary must be square");
  if (unitarity_error(u) > tol) throw InvalidArgument("matrix is not unitary");
  return from_kraus({u}, tol);
}

Channel Channel::identity(int n) {
  check_qubits(n);
  return from_kraus({Mat::Identity(dim_of(n), dim_of(n))});
}

Channel Channel::pauli_channel(int n, const std::vector<double>& probs) {
  check_qubits(n);
  if (probs.size() != pauli_count(n))
    throw InvalidArgument("Pauli channel needs 4^n probabilities");
  double total = 0.0;
  for (double p : probs) {
    if (p < -1e-12) throw InvalidArgument("negative Pauli channel probability");
    total += p;
  }
  if (std::abs(total - 1.0) > 1e-9)
    throw InvalidArgument("Pauli channel probabilities do not sum to 1");
  std::vector<Mat> kraus;
  for (std::uint64_t c = 0; c < probs.size(); ++c)
    if (probs[c] > 0.0) kraus.push_back(std::sqrt(probs[c]) * pauli_matrix(PauliString(n, c)));
  return from_kraus(std::move(kraus));
}

Channel Channel::depolarizing(int n, double p) {
  if (p < 0.0 || p > 1.0) throw InvalidArgument("depolarizing parameter outside [0,1]");
  std::vector<double> probs(pauli_count(n), p / static_cast<double>(pauli_count(n)));
  probs[0] += 1.0 - p;
  return pauli_channel(n, probs);
}

Channel Channel::random(int n, Rng& rng, std::size_t env_dim) {
  check_qubits(n);
  const std::size_t d = dim_of(n);
  if (env_dim == 0) env_dim = d;
  Mat u = haar_unitary(d * env_dim, rng);
  std::vector<Mat> kraus;
  for (std::size_t e = 0; e < env_dim; ++e) {
    Mat k(d, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) k(i, j) = u(i * env_dim + e, j * env_dim);
    kraus.push_back(std::move(k));
  }
  return from_kraus(std::move(kraus));
}

Mat Channel::apply(const Mat& rho) const {
  const Eigen::Index d = kraus_.front().rows();
  Mat out = Mat::Zero(d, d);
  for (const Mat& k : kraus_) out += k * rho * k.adjoint();
  return out;
}

Channel Channel::compose(const Channel& first) const {
  if (first.n_out_ != n_in_) throw InvalidArgument("compose: arity mismatch");
  std::vector<Mat> kraus;
  for (const Mat& a : kraus_)
    for (const Mat& b : first.kraus_) kraus.push_back(a * b);
  return Channel(first.n_in_, n_out_, std::move(kraus));
}

Mat choi_matrix(const Channel& c) {
  const std::size_t din = dim_of(c.n_in()), dout = dim_of(c.n_out());
  Mat j = Mat::Zero(dout * din, dout * din);
  Vec k(dout * din);
  for (const Mat& m : c.kraus()) {
    for (std::size_t a = 0; a < dout; ++a)
      for (std::size_t i = 0; i < din; ++i) k(a * din + i) = m(a, i);
    j += k * k.adjoint();
  }
  return j;
}

Mat choi_state(const Channel& c) {
  return choi_matrix(c) / static_cast<double>(dim_of(c.n_in()));
}

Vec pauli_choi_vector(const PauliString& x) {
  const int n = x.num_qubits();
  const std::size_t d = dim_of(n);
  Mat s = pauli_matrix(x);
  Vec v(d * d);
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t i = 0; i < d; ++i) v(a * d + i) = s(a, i) * scale;
  return v;
}

Mat pauli_choi_basis(int n) {
  check_superop_qubits(n);
  const std::size_t m = pauli_count(n);
  Mat b(m, m);
  for (std::uint64_t c = 0; c < m; ++c) b.col(c) = pauli_choi_vector(PauliString(n, c));
  return b;
}

Mat fourier_matrix(const Channel& c) {
  if (c.n_in() != c.n_out())
    throw InvalidArgument("Fourier matrix needs equal input and output arity");
  const int n = c.n();
  check_superop_qubits(n);
  const std::size_t m = pauli_count(n);
  Mat f = Mat::Zero(m, m);
  for (const Mat& k : c.kraus()) {
    std::vector<cplx> a = decompose_dense(k);
    Eigen::Map<Vec> av(a.data(), static_cast<Eigen::Index>(a.size()));
    f += av * av.adjoint();
  }
  return f;
}

Mat fourier_from_choi(const Mat& j, int n) {
  Mat b = pauli_choi_basis(n);
  if (j.rows() != b.rows() || j.cols() != b.rows())
    throw InvalidArgument("fourier_from_choi: Choi matrix has the wrong size");
  return b.adjoint() * j * b / static_cast<double>(dim_of(n));
}

Mat choi_from_fourier(const Mat& f, int n) {
  Mat b = pauli_choi_basis(n);
  if (f.rows() != b.rows() || f.cols() != b.rows())
    throw InvalidArgument("choi_from_fourier: Fourier matrix has the wrong size");
  return static_cast<double>(dim_of(n)) * b * f * b.adjoint();
}

Mat unitary_fourier_matrix(const Mat& u) {
  std::vector<cplx> a = decompose_dense(u);
  Eigen::Map<Vec> av(a.data(), static_cast<Eigen::Index>(a.size()));
  return av * av.adjoint();
}

Mat partial_trace_output(const Mat& j, int n_in, int n_out) {
  const std::size_t din = dim_of(n_in), dout = dim_of(n_out);
  if (static_cast<std::size_t>(j.rows()) != din * dout)
    throw InvalidArgument("partial_trace_output: size mismatch");
  Mat t = Mat::Zero(din, din);
  for (std::size_t a = 0; a < dout; ++a) t += j.block(a * din, a * din, din, din);
  return t;
}

CptpCheck check_fourier(const Mat& f, double psd_tol, double affine_tol) {
  if (f.rows() != f.cols()) throw InvalidArgument("Fourier matrix must be square");
  const int n2 = log2_exact(static_cast<std::size_t>(f.rows()));
  if (n2 < 0 || n2 % 2 != 0) throw InvalidArgument("Fourier matrix size is not 4^n");
  const int n = n2 / 2;
  CptpCheck out;
  out.hermiticity = hermiticity_error(f);
  Mat h = 0.5 * (f + f.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  out.min_eig = es.eigenvalues().minCoeff();
  Mat t = partial_trace_output(choi_from_fourier(h, n), n, n);
  std::vector<cplx> c = decompose_dense(t);
  double res = std::abs(c[0] - 1.0);
  for (std::size_t i = 1; i < c.size(); ++i) res = std::max(res, std::abs(c[i]));
  out.affine_residual = std::max(res, out.hermiticity);
  out.psd_ok = out.min_eig >= -psd_tol;
  out.affine_ok = out.affine_residual <= affine_tol;
  return out;
}

Channel channel_from_choi(const Mat& j, int n_in, int n_out, double psd_tol,
                          double tp_tol) {
  const std::size_t din = dim_of(n_in), dout = dim_of(n_out);
  if (static_cast<std::size_t>(j.rows()) != din * dout || j.rows() != j.cols())
    throw InvalidArgument("channel_from_choi: size mismatch");
  Mat h = 0.5 * (j + j.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h);
  const RVec& ev = es.eigenvalues();
  const double scale = static_cast<double>(din);
  double min_eig = ev.minCoeff() / scale;
  Mat t = partial_trace_output(h, n_in, n_out);
  double tp = (t - Mat::Identity(din, din)).cwiseAbs().maxCoeff();
  if (min_eig < -psd_tol || tp > tp_tol) {
    throw NotAChannel("Choi matrix rejected: min eigenvalue " + std::to_string(min_eig) +
                          ", trace-preservation residual " + std::to_string(tp),
                      min_eig < -psd_tol, tp > tp_tol, min_eig, tp);
  }
  std::vector<Mat> kraus;
  double clipped = 0.0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev(i) <= 0.0) {
      clipped += -ev(i);
      continue;
    }
    Vec k = std::sqrt(ev(i)) * es.eigenvectors().col(i);
    Mat m(dout, din);
    for (std::size_t a = 0; a < dout; ++a)
      for (std::size_t b = 0; b < din; ++b) m(a, b) = k(a * din + b);
    kraus.push_back(std::move(m));
  }
  if (kraus.empty()) throw NotAChannel("Choi matrix has no positive part", true, false, min_eig, tp);
  return Channel::from_kraus(std::move(kraus), tp + clipped + 1e-12);
}

Channel channel_from_fourier(const Mat& f, double psd_tol, double affine_tol) {
  CptpCheck chk = check_fourier(f, psd_tol, affine_tol);
  if (!chk.ok()) {
    std::string why;
    if (!chk.psd_ok) why += "negative eigenvalue " + std::to_string(chk.min_eig);
    if (!chk.affine_ok) {
      if (!why.empty()) why += "; ";
      why += "affine residual " + std::to_string(chk.affine_residual);
    }
    throw NotAChannel("Fourier matrix is not a channel: " + why, !chk.psd_ok,
                      !chk.affine_ok, chk.min_eig, chk.affine_residual);
  }
  const int n = log2_exact(static_cast<std::size_t>(f.rows())) / 2;
  Mat h = 0.5 * (f + f.adjoint());
  return channel_from_choi(choi_from_fourier(h, n), n, n, psd_tol,
                           affine_tol * static_cast<double>(pauli_count(n)));
}

double superop_weight(const Mat& f, const std::function<bool(const PauliString&,
                                                             const PauliString&)>& pred) {
  const int n = log2_exact(static_cast<std::size_t>(f.rows())) / 2;
  double w = 0.0;
  for (Eigen::Index x = 0; x < f.rows(); ++x)
    for (Eigen::Index y = 0; y < f.cols(); ++y)
      if (pred(PauliString(n, x), PauliString(n, y))) w += std::norm(f(x, y));
  return w;
}

double superop_subset_weight(const Mat& f, QubitSet subset) {
  return superop_weight(f, [subset](const PauliString& x, const PauliString& y) {
    return ((x.support() | y.support()) & ~subset) == 0;
  });
}

}  // namespace qapt
