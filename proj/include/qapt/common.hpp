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

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace qapt {

using cplx = std::complex<double>;
using Mat = Eigen::MatrixXcd;
using Vec = Eigen::VectorXcd;
using RMat = Eigen::MatrixXd;
using RVec = Eigen::VectorXd;
using Rng = std::mt19937_64;

inline constexpr cplx kI{0.0, 1.0};

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Bad shapes, out-of-range parameters, inputs violating a precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Requested size exceeds the configured qubit caps.
class ResourceLimit : public Error {
 public:
  using Error::Error;
};

// The oracle cannot serve this protocol for the hidden target.
class UnsupportedProtocol : public Error {
 public:
  using Error::Error;
};

// Parameters push a sample count or threshold outside double/uint64 range.
class RegimeUnusable : public Error {
 public:
  using Error::Error;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

struct Limits {
  int max_qubits = 8;          // dense operators, 2^n x 2^n
  int max_superop_qubits = 4;  // Fourier matrices, 4^n x 4^n
};

Limits& limits();
void check_qubits(int n);
void check_superop_qubits(int n);

inline std::size_t dim_of(int n) { return std::size_t{1} << n; }
inline std::size_t pauli_count(int n) { return std::size_t{1} << (2 * n); }

// Returns n with 2^n == d, or -1 when d is not a power of two.
int log2_exact(std::size_t d);

// Substream `stream` of `seed`, derived through std::seed_seq so that the
// mapping is fixed by the standard rather than the library.
Rng make_rng(std::uint64_t seed, std::uint64_t stream = 0);

// Binomial and multinomial draws for large counts.
std::uint64_t binomial(Rng& rng, std::uint64_t trials, double p);
std::vector<std::uint64_t> multinomial(Rng& rng, std::uint64_t trials,
                                       const std::vector<double>& probs);

Mat random_ginibre(std::size_t rows, std::size_t cols, Rng& rng);

double hermiticity_error(const Mat& a);
double unitarity_error(const Mat& u);

}  // namespace qapt
