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

#include <optional>
#include <string>
#include <vector>

#include "qapt/estimators.hpp"
#include "qapt/hypothesis.hpp"
#include "qapt/oracle.hpp"
#include "qapt/state_learners.hpp"

namespace qapt {

// Most frequent outcome of the Pauli-basis measurement of the Choi state.
LearnReport learn_pauli_string(QueryOracle& oracle, double eps, double delta);

// Heaviest k-subset by estimated weight, then the coefficients on it. The
// proper variant projects the 2^k-dimensional restriction to a unitary.
LearnReport learn_unitary_junta(QueryOracle& oracle, int k, double eps, double delta,
                                bool proper);

// Every coefficient of degree at most d.
LearnReport learn_low_degree_all(QueryOracle& oracle, int d, double eps, double delta);

struct BhOptions {
  double bh_constant = 1.0;
  std::optional<double> opt_hint;
};
// u = min(n^(d/2) 2^d, 1 + 2^((n+1)/2) opt_hint)
double bh_u(int n, int d, const BhOptions& opts);
// c = eps^(d+1) / (2 C^(d^2) u^d)
double bh_threshold(int n, int d, double eps, const BhOptions& opts);
// Two stages: find the coefficients of size at least about c, then estimate
// only those. Throws RegimeUnusable when c or the sample counts leave double
// or 64-bit range.
LearnReport learn_low_degree_bh(QueryOracle& oracle, int d, double eps, double delta,
                                BhOptions opts = {});

// Lowest-scoring member under the averaged infidelity; ties go to the lowest
// index.
LearnReport learn_finite_class(QueryOracle& oracle, const std::vector<Mat>& cls, double eps,
                               double delta, Ensemble e = Ensemble::Haar,
                               SampleRule rule = SampleRule::Hoeffding);

// Runs a state learner on the Choi state at accuracy eps^2 and reads the
// result as a superoperator.
LearnReport aue_from_state_learner(QueryOracle& oracle, const StateLearner& learner,
                                   std::string class_tag, double eps, double delta);

}  // namespace qapt
