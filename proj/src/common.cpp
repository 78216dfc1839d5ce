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


#include "qapt/common.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace qapt {

Limits& limits() {
  static Limits l;
  return l;
}

void check_qubits(int n) {
  if (n < 0) throw InvalidArgument("negative qubit count");
  if (n > limits().max_qubits) {
    throw ResourceLimit("n=" + std::to_string(n) + " exceeds the qubit cap " +
                        std::to_string(limits().max_qubits));
  }
}

void check_superop_qubits(int n) {
  check_qubits(n);
  if (n > limits().max_superop_qubits) {
    throw ResourceLimit("n=" + std::to_string(n) +
                        " exceeds the superoperator qubit cap " +
                        std::to_string(limits().max_superop_qubits));
  }
}

int log2_exact(std::size_t d) {
  if (d == 0 || (d & (d - 1)) != 0) return -1;
  int n = 0;
  while ((std::size_t{1} << n) < d) ++n;
  return n;
}

Rng make_rng(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream),
                    static_cast<std::uint32_t>(stream >> 32)};
  return Rng(seq);
}

std::uint64_t binomial(Rng& rng, std::uint64_t trials, double p) {
  if (trials == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  std::binomial_distribution<long long> dist(static_cast<long long>(trials), p);
  return static_cast<std::uint64_t>(dist(rng));
}

std::vector<std::uint64_t> multinomial(Rng& rng, std::uint64_t trials,
                                       const std::vector<double>& probs) {
  std::vector<std::uint64_t> counts(probs.size(), 0);
  double mass = 0.0;
  for (double p : probs) mass += std::max(p, 0.0);
  std::uint64_t left = trials;
  for (std::size_t i = 0; i < probs.size() && left > 0; ++i) {
    double p = std::max(probs[i], 0.0);
    if (i + 1 == probs.size() || mass <= p) {
      counts[i] = left;
      left = 0;
      break;
    }
    std::uint64_t c = binomial(rng, left, std::min(1.0, p / mass));
    counts[i] = c;
    left -= c;
    mass -= p;
  }
  return counts;
}

Mat random_ginibre(std::size_t rows, std::size_t cols, Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Mat m(rows, cols);
  for (std::size_t c = 0; c < cols; ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cplx(g(rng), g(rng));
  return m;
}

double hermiticity_error(const Mat& a) {
  return (a - a.adjoint()).cwiseAbs().maxCoeff();
}

double unitarity_error(const Mat& u) {
  if (u.rows() != u.cols()) return std::numeric_limits<double>::infinity();
  return (u.adjoint() * u - Mat::Identity(u.rows(), u.cols())).norm();
}

}  // namespace qapt
