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

#include <functional>

#include "qapt/channel.hpp"
#include "qapt/oracle.hpp"

namespace qapt {

// A state tomography routine run on copies of the Choi state. Given accuracy
// eta (in infidelity) and failure probability delta, it returns a density
// matrix on the Choi qubits.
using StateLearner = std::function<Mat(QueryOracle& oracle, double eta, double delta)>;

// Throws Error when rho is not a density matrix on `qubits` qubits.
void check_state_learner_output(const Mat& rho, int qubits, double tol = 1e-8);

// Returns the true Choi state without querying.
StateLearner exact_state_learner(const Channel& target);
// Restricted to the pure states |v(sigma_x)>: the most frequent outcome of a
// Pauli-basis measurement, from enough draws to resolve eta / 2.
StateLearner pauli_choi_state_learner();
// (1 - eta) v(Phi) + eta sigma for a seeded random state sigma; infidelity at
// most eta against any pure target.
StateLearner injected_error_state_learner(const Channel& target, std::uint64_t seed);
// Leading eigenvector of the true Choi state.
StateLearner rank_one_state_learner(const Channel& target);

}  // namespace qapt
