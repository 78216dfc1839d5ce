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

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "qapt/channel.hpp"
#include "qapt/common.hpp"
#include "qapt/pauli.hpp"

namespace qapt {

enum class HadamardPart { Real, Imag };

struct ShadowSnapshot {
  std::vector<int> bases;     // 0 = X, 1 = Y, 2 = Z per Choi qubit
  std::vector<int> outcomes;  // 0 for the +1 eigenvector, 1 for -1
};

// Snapshot statistics of a batch: counts[setting * 2^m + outcome] where the
// setting reads the bases in base 3 (qubit 0 most significant) and the
// outcome is the bit string with qubit 0 most significant.
struct ShadowCounts {
  int qubits = 0;
  std::uint64_t total = 0;
  std::vector<std::uint64_t> counts;
};

// Simulated query access to a hidden channel. Every endpoint costs one query
// per Choi copy or channel use it consumes; batched endpoints draw the
// sufficient statistics of `count` independent single-query outcomes and
// charge `count` queries.
class QueryOracle {
 public:
  QueryOracle(const Channel& target, std::uint64_t seed);
  // Unitary targets additionally allow Hadamard tests.
  QueryOracle(const Mat& unitary, std::uint64_t seed);

  int num_qubits() const { return n_in_; }
  int output_qubits() const { return n_out_; }
  int choi_qubits() const { return n_in_ + n_out_; }
  bool unitary_target() const { return unitary_; }
  std::uint64_t queries() const { return queries_; }

  // JSON lines {protocol, params, outcome, cumulative_queries}.
  void set_transcript(std::ostream* out) { transcript_ = out; }

  // Fresh generator for the learner's own randomness (input states etc.),
  // split off this oracle's stream.
  Rng spawn_rng();

  PauliString sample_choi_pauli_basis();
  std::vector<std::uint64_t> sample_choi_pauli_basis_counts(std::uint64_t count);

  bool hadamard_test_bit(const PauliString& x, HadamardPart part);
  std::uint64_t hadamard_test_zeros(const PauliString& x, HadamardPart part,
                                    std::uint64_t count);

  bool swap_test_bit(const Vec& probe);
  std::uint64_t swap_test_accepts(const Vec& probe, std::uint64_t count);

  ShadowSnapshot pauli_shadow_snapshot();
  ShadowCounts pauli_shadow_counts(std::uint64_t count);

  // Computational basis when `basis` is empty, else the orthonormal columns
  // of `basis`. Returns the outcome index.
  std::size_t output_state_sample(const Vec& input, const Mat& basis = Mat());

  bool fidelity_bit(const Vec& input, const Channel& reference);
  // One bit per reference on the same input; costs refs.size() queries.
  std::vector<bool> fidelity_bits(const Vec& input, const std::vector<Channel>& refs);

 private:
  void init();
  void log(const char* protocol, nlohmann::json params, nlohmann::json outcome);
  void charge(std::uint64_t count);
  const std::vector<double>& setting_distribution(std::uint64_t setting);
  Mat target_output(const Vec& input) const;
  void check_state(const Vec& v, Eigen::Index dim, const char* what) const;

  Channel target_;
  std::optional<std::vector<cplx>> unitary_coeffs_;
  bool unitary_ = false;
  int n_in_ = 0, n_out_ = 0;
  Rng rng_;
  std::uint64_t queries_ = 0;
  std::ostream* transcript_ = nullptr;
  Mat choi_state_;
  std::vector<Vec> choi_vectors_;  // v(Phi) = sum_k |k><k|
  std::vector<double> basis_probs_;
  std::vector<std::optional<std::vector<double>>> shadow_cache_;
  std::uint64_t spawned_ = 0;
};

}  // namespace qapt
