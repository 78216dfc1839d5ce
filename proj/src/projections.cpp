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


#include "qapt/projections.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_map>

namespace qapt {

Mat proj_unitary(const Mat& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("proj_unitary: matrix not square");
  if (!a.allFinite()) throw InvalidArgument("proj_unitary: non-finite entries");
  Eigen::JacobiSVD<Mat> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  return svd.matrixU() * svd.matrixV().adjoint();
}

AffineConstraintSet build_cptp_constraints(int n) {
  check_superop_qubits(n);
  std::vector<PauliString> all;
  for (std::uint64_t c = 0; c < pauli_count(n); ++c) all.emplace_back(n, c);
  return build_cptp_constraints(n, std::move(all));
}

AffineConstraintSet build_cptp_constraints(int n, std::vector<PauliString> index) {
  AffineConstraintSet cs;
  cs.n = n;
  std::sort(index.begin(), index.end());
  index.erase(std::unique(index.begin(), index.end()), index.end());
  for (const PauliString& x : index)
    if (x.num_qubits() != n) throw InvalidArgument("index set mixes string lengths");
  cs.index = std::move(index);
  std::map<std::uint64_t, AffineRow> rows;
  const int d = cs.dim();
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      PauliProduct pr = pauli_product(cs.index[i], cs.index[j]);
      auto [it, fresh] = rows.try_emplace(pr.z.code());
      if (fresh) {
        it->second.z = pr.z;
        it->second.rhs = pr.z.code() == 0 ? 1.0 : 0.0;
      }
      it->second.terms.push_back({i, j, pr.conj_phase * pr.phase});
    }
  }
  for (auto& [code, row] : rows) cs.rows.push_back(std::move(row));
  return cs;
}

double affine_residual(const AffineConstraintSet& cs, const Mat& f) {
  if (f.rows() != cs.dim() || f.cols() != cs.dim())
    throw InvalidArgument("affine_residual: size mismatch");
  double worst = 0.0;
  for (const AffineRow& r : cs.rows) {
    cplx s = -r.rhs;
    for (const AffineTerm& t : r.terms) s += t.coeff * f(t.row_index, t.col_index);
    worst = std::max(worst, std::abs(s));
  }
  return worst;
}

RMat real_embed(const Mat& h, double herm_tol) {
  if (h.rows() != h.cols()) throw InvalidArgument("real_embed: matrix not square");
  if (hermiticity_error(h) > herm_tol) throw InvalidArgument("real_embed: matrix not Hermitian");
  const Eigen::Index d = h.rows();
  RMat m(2 * d, 2 * d);
  m.topLeftCorner(d, d) = h.real();
  m.topRightCorner(d, d) = -h.imag();
  m.bottomLeftCorner(d, d) = h.imag();
  m.bottomRightCorner(d, d) = h.real();
  return m;
}

Mat real_unembed(const RMat& m) {
  if (m.rows() != m.cols() || m.rows() % 2 != 0)
    throw InvalidArgument("real_unembed: expected a 2D x 2D matrix");
  const Eigen::Index d = m.rows() / 2;
  RMat x = 0.5 * (m.topLeftCorner(d, d) + m.bottomRightCorner(d, d));
  RMat y = 0.5 * (m.bottomLeftCorner(d, d) - m.topRightCorner(d, d));
  Mat h(d, d);
  h.real() = x;
  h.imag() = y;
  return h;
}

namespace {

// Affine projection in the coordinates u = [vec Re F; vec Im F], row-major.
class AffineProjector {
 public:
  explicit AffineProjector(const AffineConstraintSet& cs) : d_(cs.dim()) {
    const Eigen::Index nvar = 2 * d_ * d_;
    const Eigen::Index nrow = 2 * static_cast<Eigen::Index>(cs.rows.size());
    a_ = RMat::Zero(nrow, nvar);
    b_ = RVec::Zero(nrow);
    for (std::size_t r = 0; r < cs.rows.size(); ++r) {
      const AffineRow& row = cs.rows[r];
      const Eigen::Index re = 2 * r, im = 2 * r + 1;
      b_(re) = row.rhs.real();
      b_(im) = row.rhs.imag();
      for (const AffineTerm& t : row.terms) {
        const Eigen::Index k = t.row_index * d_ + t.col_index;
        a_(re, k) += t.coeff.real();
        a_(re, d_ * d_ + k) -= t.coeff.imag();
        a_(im, k) += t.coeff.imag();
        a_(im, d_ * d_ + k) += t.coeff.real();
      }
    }
    pinv_ = Eigen::CompleteOrthogonalDecomposition<RMat>(a_).pseudoInverse();
  }

  RMat project(const RMat& m) const {
    const Eigen::Index d = d_;
    RMat x = 0.5 * (m.topLeftCorner(d, d) + m.bottomRightCorner(d, d));
    RMat y = 0.5 * (m.bottomLeftCorner(d, d) - m.topRightCorner(d, d));
    RVec u(2 * d * d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) {
        u(i * d + j) = x(i, j);
        u(d * d + i * d + j) = y(i, j);
      }
    u -= pinv_ * (a_ * u - b_);
    RMat out(2 * d, 2 * d);
    for (Eigen::Index i = 0; i < d; ++i)
      for (Eigen::Index j = 0; j < d; ++j) {
        const double xr = u(i * d + j), yi = u(d * d + i * d + j);
        out(i, j) = xr;
        out(d + i, d + j) = xr;
        out(d + i, j) = yi;
        out(i, d + j) = -yi;
      }
    return out;
  }

 private:
  Eigen::Index d_;
  RMat a_;
  RVec b_;
  RMat pinv_;
};

RMat project_psd(const RMat& m) {
  RMat s = 0.5 * (m + m.transpose());
  Eigen::SelfAdjointEigenSolver<RMat> es(s);
  RVec ev = es.eigenvalues().cwiseMax(0.0);
  return es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().transpose();
}

double min_hermitian_eig(const Mat& f) {
  Mat h = 0.5 * (f + f.adjoint());
  Eigen::SelfAdjointEigenSolver<Mat> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

}  // namespace

DykstraState dykstra_project(const Mat& x0, const AffineConstraintSet& cs,
                             DykstraOptions opts) {
  if (x0.rows() != cs.dim() || x0.cols() != cs.dim())
    throw InvalidArgument("dykstra_project: input does not match the index set");
  AffineProjector aff(cs);
  DykstraState st;
  RMat x = real_embed(x0, 1e-8);
  RMat p = RMat::Zero(x.rows(), x.cols());
  RMat q = RMat::Zero(x.rows(), x.cols());
  const double to_complex = 1.0 / std::sqrt(2.0);
  for (int it = 1; it <= opts.max_iters; ++it) {
    RMat y = project_psd(x + p);
    p = x + p - y;
    RMat z = aff.project(y + q);
    q = y + q - z;
    st.last_change = (z - x).norm() * to_complex;
    x = std::move(z);
    st.iters = it;
    if (st.last_change <= opts.tol) {
      st.converged = true;
      break;
    }
  }
  st.real_iterate = x;
  st.psd_correction = p;
  st.affine_correction = q;
  st.iterate = real_unembed(x);
  st.affine_residual = affine_residual(cs, st.iterate);
  st.min_eig = min_hermitian_eig(st.iterate);
  st.eps2 = 10.0 * st.last_change;
  return st;
}

MixResult mix_to_cptp(const Mat& psi2, double eps2, MixRule rule) {
  if (psi2.rows() != psi2.cols()) throw InvalidArgument("mix_to_cptp: matrix not square");
  const double d = static_cast<double>(psi2.rows());
  MixResult r;
  if (rule == MixRule::Formula) {
    r.p = 2.0 * d * eps2 / (1.0 + 2.0 * d * eps2);
  } else {
    const double lam = min_hermitian_eig(psi2);
    r.p = lam < 0.0 ? d * -lam / (1.0 + d * -lam) : 0.0;
  }
  Mat target = Mat::Identity(psi2.rows(), psi2.cols()) / d;
  r.fourier = (1.0 - r.p) * psi2 + r.p * target;
  r.deviation = 0.5 * (psi2 - r.fourier).norm();
  r.bound = 4.0 * d * eps2 / (1.0 + 2.0 * d * eps2);
  r.bound_ok = r.deviation <= r.bound;
  return r;
}

Mat embed_fourier(const Mat& sub, const std::vector<PauliString>& index, int n) {
  if (sub.rows() != static_cast<Eigen::Index>(index.size()) || sub.cols() != sub.rows())
    throw InvalidArgument("embed_fourier: size mismatch");
  const std::size_t m = pauli_count(n);
  Mat full = Mat::Zero(m, m);
  for (std::size_t i = 0; i < index.size(); ++i)
    for (std::size_t j = 0; j < index.size(); ++j)
      full(index[i].code(), index[j].code()) = sub(i, j);
  return full;
}

Mat restrict_fourier(const Mat& full, const std::vector<PauliString>& index) {
  const Eigen::Index d = static_cast<Eigen::Index>(index.size());
  Mat sub(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) sub(i, j) = full(index[i].code(), index[j].code());
  return sub;
}

nlohmann::json ProjectionReport::to_json() const {
  return {{"iters", iters},        {"affine_residual", affine_residual},
          {"min_eig", min_eig},    {"eps2", eps2},
          {"p", p},                {"converged", converged},
          {"mixing_bound_ok", mixing_bound_ok}};
}

CptpProjection project_to_cptp(const Mat& full, const std::vector<PauliString>& index,
                               int n, DykstraOptions opts, MixRule rule) {
  AffineConstraintSet cs = build_cptp_constraints(n, index);
  Mat sub = restrict_fourier(full, cs.index);
  sub = 0.5 * (sub + sub.adjoint());
  DykstraState st = dykstra_project(sub, cs, opts);
  MixResult mix = mix_to_cptp(st.iterate, st.eps2, rule);
  CptpProjection out;
  out.fourier = embed_fourier(mix.fourier, cs.index, n);
  out.report.iters = st.iters;
  out.report.affine_residual = st.affine_residual;
  out.report.min_eig = st.min_eig;
  out.report.eps2 = st.eps2;
  out.report.p = mix.p;
  out.report.converged = st.converged;
  out.report.mixing_bound_ok = mix.bound_ok;
  try {
    out.channel = channel_from_fourier(out.fourier);
  } catch (const NotAChannel&) {
    out.channel.reset();
  }
  return out;
}

}  // namespace qapt
