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


#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qapt/common.hpp"

namespace qapt {

// Word over {0,1,2,3} = {I,X,Y,Z}. Qubit 0 is the leftmost character and the
// leftmost tensor factor; the integer code reads the word in base 4, so
// numeric order of codes is lexicographic order of words.
class PauliString {
 public:
  PauliString() = default;
  PauliString(int n, std::uint64_t code);

  static PauliString identity(int n) { return PauliString(n, 0); }
  static PauliString parse(std::string_view text);

  int num_qubits() const { return n_; }
  std::uint64_t code() const { return code_; }
  int digit(int q) const {
    return static_cast<int>((code_ >> (2 * (n_ - 1 - q))) & 3u);
  }
  int degree() const;
  // Bit q is set when qubit q carries a non-identity factor.
  std::uint32_t support() const;
  std::string str() const;

  // Mask of basis-index bits flipped by the operator (X or Y factors) and of
  // bits picking up a sign (Y or Z factors). Qubit 0 is the most significant
  // basis bit.
  std::uint64_t flip_mask() const;
  std::uint64_t phase_mask() const;
  int y_count() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  friend auto operator<=>(const PauliString& a, const PauliString& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.code_ <=> b.code_;
  }

 private:
  int n_ = 0;
  std::uint64_t code_ = 0;
};

// Subset of qubits as a bitmask, bit q for qubit q (0-based from the left).
using QubitSet = std::uint32_t;

QubitSet qubit_set(std::initializer_list<int> one_based);
std::vector<int> qubit_list(QubitSet s);  // 1-based, ascending
std::string qubit_set_str(QubitSet s);
// All k-subsets of n qubits in lexicographic order of their sorted lists.
std::vector<QubitSet> subsets_of_size(int n, int k);

// Places a k-qubit word onto the qubits of S (ascending) inside n qubits.
PauliString lift(const PauliString& local, QubitSet s, int n);
// Reads the factors of x on the qubits of S.
PauliString restrict_to(const PauliString& x, QubitSet s);
// Every string supported inside S, ascending by code.
std::vector<PauliString> strings_on_subset(int n, QubitSet s);
// Every string of degree at most d, ascending by code.
std::vector<PauliString> strings_up_to_degree(int n, int d);

Mat pauli_matrix(const PauliString& x);

// Operator acting as `local` on the qubits of S (ascending) and as the
// identity elsewhere.
Mat lift_operator(const Mat& local, QubitSet s, int n);

struct PauliProduct {
  PauliString z;
  cplx phase;       // sigma_x sigma_y = phase * sigma_z
  cplx conj_phase;  // (-1)^(#Y in x + #Y in y)
};
PauliProduct pauli_product(const PauliString& x, const PauliString& y);

// Sparse Pauli coefficients A_x = tr(sigma_x A) / 2^n. Only entries that are
// not exactly zero are kept.
class PauliSpectrum {
 public:
  PauliSpectrum() = default;
  PauliSpectrum(int n, std::vector<std::pair<std::uint64_t, cplx>> entries);
  static PauliSpectrum from_dense(int n, const std::vector<cplx>& dense);

  int num_qubits() const { return n_; }
  const std::vector<std::pair<std::uint64_t, cplx>>& entries() const {
    return entries_;
  }
  cplx coeff(const PauliString& x) const;
  std::vector<cplx> dense() const;
  double total_weight() const;

 private:
  int n_ = 0;
  std::vector<std::pair<std::uint64_t, cplx>> entries_;
};

PauliSpectrum decompose(const Mat& a);
std::vector<cplx> decompose_dense(const Mat& a);
Mat reconstruct(const PauliSpectrum& s);
Mat reconstruct_dense(int n, const std::vector<cplx>& coeffs);

double weight_on_subset(const PauliSpectrum& s, QubitSet subset);
double influence_on_subset(const PauliSpectrum& s, QubitSet subset);

struct DegreePredicate {
  enum class Cmp { Eq, Le, Gt };
  Cmp cmp = Cmp::Le;
  int k = 0;
  bool operator()(int degree) const {
    switch (cmp) {
      case Cmp::Eq: return degree == k;
      case Cmp::Le: return degree <= k;
      case Cmp::Gt: return degree > k;
    }
    return false;
  }
  static DegreePredicate eq(int k) { return {Cmp::Eq, k}; }
  static DegreePredicate le(int k) { return {Cmp::Le, k}; }
  static DegreePredicate gt(int k) { return {Cmp::Gt, k}; }
};

double weight_at_level(const PauliSpectrum& s, DegreePredicate pred);
PauliSpectrum truncate(const PauliSpectrum& s, DegreePredicate pred);
PauliSpectrum truncate_to_subset(const PauliSpectrum& s, QubitSet subset);

// Haar-distributed unitary from the QR decomposition of a complex Gaussian
// matrix with the phases of R's diagonal moved into Q.
Mat haar_unitary(std::size_t dim, Rng& rng);

}  // namespace qapt
