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


#include "qapt/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qapt {

PauliString::PauliString(int n, std::uint64_t code) : n_(n), code_(code) {
  if (n < 0 || n > 31) throw InvalidArgument("Pauli string length out of range");
  if (n < 32 && (code >> (2 * n)) != 0)
    throw InvalidArgument("Pauli code does not fit the string length");
}

PauliString PauliString::parse(std::string_view text) {
  std::uint64_t code = 0;
  for (char c : text) {
    int d;
    switch (c) {
      case '0': case 'I': d = 0; break;
      case '1': case 'X': d = 1; break;
      case '2': case 'Y': d = 2; break;
      case '3': case 'Z': d = 3; break;
      default:
        throw InvalidArgument(std::string("bad Pauli character '") + c + "'");
    }
    code = (code << 2) | static_cast<std::uint64_t>(d);
  }
  return PauliString(static_cast<int>(text.size()), code);
}

int PauliString::degree() const { return std::popcount(support()); }

std::uint32_t PauliString::support() const {
  std::uint32_t s = 0;
  for (int q = 0; q < n_; ++q)
    if (digit(q) != 0) s |= 1u << q;
  return s;
}

std::string PauliString::str() const {
  std::string out(n_, '0');
  for (int q = 0; q < n_; ++q) out[q] = static_cast<char>('0' + digit(q));
  return out;
}

std::uint64_t PauliString::flip_mask() const {
  std::uint64_t m = 0;
  for (int q = 0; q < n_; ++q) {
    int d = digit(q);
    if (d == 1 || d == 2) m |= std::uint64_t{1} << (n_ - 1 - q);
  }
  return m;
}

std::uint64_t PauliString::phase_mask() const {
  std::uint64_t m = 0;
  for (int q = 0; q < n_; ++q) {
    int d = digit(q);
    if (d == 2 || d == 3) m |= std::uint64_t{1} << (n_ - 1 - q);
  }
  return m;
}

int PauliString::y_count() const {
  int c = 0;
  for (int q = 0; q < n_; ++q) c += digit(q) == 2;
  return c;
}

QubitSet qubit_set(std::initializer_list<int> one_based) {
  QubitSet s = 0;
  for (int q : one_based) {
    if (q < 1 || q > 31) throw InvalidArgument("qubit label out of range");
    s |= 1u << (q - 1);
  }
  return s;
}

std::vector<int> qubit_list(QubitSet s) {
  std::vector<int> out;
  for (int q = 0; q < 32; ++q)
    if (s & (1u << q)) out.push_back(q + 1);
  return out;
}

std::string qubit_set_str(QubitSet s) {
  std::string out = "{";
  bool first = true;
  for (int q : qubit_list(s)) {
    if (!first) out += ",";
    out += std::to_string(q);
    first = false;
  }
  return out + "}";
}

std::vector<QubitSet> subsets_of_size(int n, int k) {
  std::vector<QubitSet> out;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    QubitSet s = 0;
    for (int i : idx) s |= 1u << i;
    out.push_back(s);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

PauliString lift(const PauliString& local, QubitSet s, int n) {
  std::vector<int> qs = qubit_list(s);
  if (static_cast<int>(qs.size()) != local.num_qubits())
    throw InvalidArgument("lift: subset size does not match the local string");
  std::uint64_t code = 0;
  for (int i = 0; i < local.num_qubits(); ++i) {
    int q = qs[i] - 1;
    if (q >= n) throw InvalidArgument("lift: subset exceeds register");
    code |= static_cast<std::uint64_t>(local.digit(i)) << (2 * (n - 1 - q));
  }
  return PauliString(n, code);
}

PauliString restrict_to(const PauliString& x, QubitSet s) {
  std::uint64_t code = 0;
  int k = 0;
  for (int q = 0; q < x.num_qubits(); ++q) {
    if (!(s & (1u << q))) continue;
    code = (code << 2) | static_cast<std::uint64_t>(x.digit(q));
    ++k;
  }
  return PauliString(k, code);
}

std::vector<PauliString> strings_on_subset(int n, QubitSet s) {
  int k = std::popcount(s);
  std::vector<PauliString> out;
  out.reserve(pauli_count(k));
  for (std::uint64_t c = 0; c < pauli_count(k); ++c)
    out.push_back(lift(PauliString(k, c), s, n));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PauliString> strings_up_to_degree(int n, int d) {
  std::vector<PauliString> out;
  for (std::uint64_t c = 0; c < pauli_count(n); ++c) {
    PauliString x(n, c);
    if (x.degree() <= d) out.push_back(x);
  }
  return out;
}

namespace {

// sigma_x |j> = phase(j) |j ^ flip>.
inline cplx column_phase(std::uint64_t j, std::uint64_t phase_mask, int ny) {
  static const cplx ipow[4] = {1.0, kI, -1.0, -kI};
  cplx p = ipow[ny & 3];
  return (std::popcount(j & phase_mask) & 1) ? -p : p;
}

}  // namespace

Mat pauli_matrix(const PauliString& x) {
  const int n = x.num_qubits();
  check_qubits(n);
  const std::size_t d = dim_of(n);
  const std::uint64_t f = x.flip_mask(), pm = x.phase_mask();
  const int ny = x.y_count();
  Mat m = Mat::Zero(d, d);
  for (std::size_t j = 0; j < d; ++j) m(j ^ f, j) = column_phase(j, pm, ny);
  return m;
}

PauliProduct pauli_product(const PauliString& x, const PauliString& y) {
  if (x.num_qubits() != y.num_qubits())
    throw InvalidArgument("pauli_product: length mismatch");
  const int n = x.num_qubits();
  std::uint64_t code = 0;
  int ipower = 0;  // phase = i^ipower
  for (int q = 0; q < n; ++q) {
    int a = x.digit(q), b = y.digit(q);
    int c = a ^ b;
    if (a != 0 && b != 0 && a != b) {
      bool cyclic = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
      ipower += cyclic ? 1 : 3;
    }
    code = (code << 2) | static_cast<std::uint64_t>(c);
  }
  static const cplx ipow[4] = {1.0, kI, -1.0, -kI};
  PauliProduct out{PauliString(n, code), ipow[ipower & 3],
                   ((x.y_count() + y.y_count()) & 1) ? cplx(-1.0) : cplx(1.0)};
  return out;
}

PauliSpectrum::PauliSpectrum(int n,
                             std::vector<std::pair<std::uint64_t, cplx>> entries)
    : n_(n), entries_(std::move(entries)) {
  std::sort(entries_.begin(), entries_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
}

PauliSpectrum PauliSpectrum::from_dense(int n, const std::vector<cplx>& dense) {
  if (dense.size() != pauli_count(n))
    throw InvalidArgument("from_dense: wrong coefficient count");
  std::vector<std::pair<std::uint64_t, cplx>> e;
  for (std::size_t c = 0; c < dense.size(); ++c)
    if (dense[c] != cplx(0.0)) e.emplace_back(c, dense[c]);
  return PauliSpectrum(n, std::move(e));
}

cplx PauliSpectrum::coeff(const PauliString& x) const {
  if (x.num_qubits() != n_) throw InvalidArgument("coeff: length mismatch");
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), x.code(),
      [](const auto& e, std::uint64_t c) { return e.first < c; });
  if (it != entries_.end() && it->first == x.code()) return it->second;
  return 0.0;
}

std::vector<cplx> PauliSpectrum::dense() const {
  std::vector<cplx> out(pauli_count(n_), 0.0);
  for (const auto& [c, v] : entries_) out[c] = v;
  return out;
}

double PauliSpectrum::total_weight() const {
  double w = 0.0;
  for (const auto& e : entries_) w += std::norm(e.second);
  return w;
}

std::vector<cplx> decompose_dense(const Mat& a) {
  if (a.rows() != a.cols()) throw InvalidArgument("decompose: matrix not square");
  const int n = log2_exact(static_cast<std::size_t>(a.rows()));
  if (n < 0) throw InvalidArgument("decompose: dimension is not a power of two");
  check_qubits(n);
  const std::size_t d = dim_of(n);
  const double scale = 1.0 / static_cast<double>(d);
  std::vector<cplx> out(pauli_count(n));
  for (std::uint64_t c = 0; c < out.size(); ++c) {
    PauliString x(n, c);
    const std::uint64_t f = x.flip_mask(), pm = x.phase_mask();
    const int ny = x.y_count();
    // tr(sigma_x A) = sum_j phase(j) A(j, j ^ f)
    cplx acc = 0.0;
    for (std::size_t j = 0; j < d; ++j) acc += column_phase(j, pm, ny) * a(j, j ^ f);
    out[c] = acc * scale;
  }
  return out;
}

PauliSpectrum decompose(const Mat& a) {
  std::vector<cplx> dense = decompose_dense(a);
  return PauliSpectrum::from_dense(log2_exact(static_cast<std::size_t>(a.rows())),
                                   dense);
}

Mat reconstruct_dense(int n, const std::vector<cplx>& coeffs) {
  check_qubits(n);
  if (coeffs.size() != pauli_count(n))
    throw InvalidArgument("reconstruct: wrong coefficient count");
  const std::size_t d = dim_of(n);
  Mat m = Mat::Zero(d, d);
  for (std::uint64_t c = 0; c < coeffs.size(); ++c) {
    if (coeffs[c] == cplx(0.0)) continue;
    PauliString x(n, c);
    const std::uint64_t f = x.flip_mask(), pm = x.phase_mask();
    const int ny = x.y_count();
    for (std::size_t j = 0; j < d; ++j)
      m(j ^ f, j) += coeffs[c] * column_phase(j, pm, ny);
  }
  return m;
}

Mat reconstruct(const PauliSpectrum& s) {
  return reconstruct_dense(s.num_qubits(), s.dense());
}

double weight_on_subset(const PauliSpectrum& s, QubitSet subset) {
  double w = 0.0;
  for (const auto& [c, v] : s.entries())
    if ((PauliString(s.num_qubits(), c).support() & ~subset) == 0) w += std::norm(v);
  return w;
}

double influence_on_subset(const PauliSpectrum& s, QubitSet subset) {
  double w = 0.0;
  for (const auto& [c, v] : s.entries())
    if (PauliString(s.num_qubits(), c).support() & subset) w += std::norm(v);
  return w;
}

double weight_at_level(const PauliSpectrum& s, DegreePredicate pred) {
  double w = 0.0;
  for (const auto& [c, v] : s.entries())
    if (pred(PauliString(s.num_qubits(), c).degree())) w += std::norm(v);
  return w;
}

PauliSpectrum truncate(const PauliSpectrum& s, DegreePredicate pred) {
  std::vector<std::pair<std::uint64_t, cplx>> e;
  for (const auto& [c, v] : s.entries())
    if (pred(PauliString(s.num_qubits(), c).degree())) e.emplace_back(c, v);
  return PauliSpectrum(s.num_qubits(), std::move(e));
}

PauliSpectrum truncate_to_subset(const PauliSpectrum& s, QubitSet subset) {
  std::vector<std::pair<std::uint64_t, cplx>> e;
  for (const auto& [c, v] : s.entries())
    if ((PauliString(s.num_qubits(), c).support() & ~subset) == 0) e.emplace_back(c, v);
  return PauliSpectrum(s.num_qubits(), std::move(e));
}

Mat haar_unitary(std::size_t dim, Rng& rng) {
  Mat z = random_ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Mat> qr(z);
  Mat q = qr.householderQ() * Mat::Identity(dim, dim);
  Mat r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (std::size_t i = 0; i < dim; ++i) {
    cplx d = r(i, i);
    double a = std::abs(d);
    q.col(i) *= (a > 0.0) ? d / a : cplx(1.0);
  }
  return q;
}

Mat lift_operator(const Mat& local, QubitSet s, int n) {
  const int k = log2_exact(static_cast<std::size_t>(local.rows()));
  if (k < 0 || local.rows() != local.cols() || k != std::popcount(s))
    throw InvalidArgument("local operator size does not match the subset");
  std::vector<cplx> a = decompose_dense(local);
  std::vector<cplx> full(pauli_count(n), 0.0);
  for (std::uint64_t c = 0; c < a.size(); ++c) full[lift(PauliString(k, c), s, n).code()] = a[c];
  return reconstruct_dense(n, full);
}

}  // namespace qapt
