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

#include <string>
#include <vector>

#include "qapt/channel.hpp"
#include "qapt/pauli.hpp"

namespace qapt {

Mat hadamard_gate();
Mat t_gate();
// (1/sqrt 3) X Z I + sqrt(2/3) Z Z Z on three qubits.
Mat example1_unitary();

// Every Pauli string on n qubits as a matrix, ordered by code.
std::vector<Mat> pauli_class(int n);

// Haar unitary on the qubits of S, identity elsewhere.
Mat random_junta_unitary(int n, QubitSet s, Rng& rng);
// Haar single-qubit unitary on a uniformly chosen qubit.
Mat random_degree1_unitary(int n, Rng& rng);
// Pauli string with a uniformly random code.
Mat random_pauli_unitary(int n, Rng& rng);
// Nearest unitary to V + tau G for a Ginibre G with unit-variance entries.
Mat perturbed_unitary(const Mat& v, double tau, Rng& rng);

// Dirichlet(1, ..., 1) Pauli distribution.
Channel random_pauli_channel(int n, Rng& rng);
// Random channel on S (Stinespring with a 2^k environment), identity elsewhere.
Channel random_junta_channel(int n, QubitSet s, Rng& rng);
// Pauli channel supported on strings of degree at most d.
Channel random_low_degree_pauli_channel(int n, int d, Rng& rng);

struct Qac0Circuit {
  Channel channel;   // n -> 1
  Mat unitary;       // on n + ancillas qubits
  int ancillas = 0;
  int depth = 0;
  int size = 0;      // gate count
};
// Depth-many layers of Haar single-qubit gates followed by CZ gates on a
// brick pattern, then a final single-qubit layer. Ancillas start in |0> and
// sit after the inputs; everything but the last qubit is traced out.
Qac0Circuit random_qac0(int n, int depth, int ancillas, Rng& rng);

// Named fixtures: I, X, Y, Z, H, T (single qubit) and example1.
Mat named_unitary(const std::string& name);
bool is_named_unitary(const std::string& name);

}  // namespace qapt
