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

#include "qapt/aue.hpp"
#include "qapt/projections.hpp"

namespace qapt {

LearnReport apt_pauli_string(QueryOracle& oracle, double eps, double delta);

// Pauli channel with the empirical diagonal.
LearnReport apt_pauli_channel(QueryOracle& oracle, double eps, double delta);

// Fourier coefficients with |x|, |y| <= k, then the block of the heaviest
// k-subset. Internals carry every estimated subset weight and the subset.
LearnReport apt_junta_channel(QueryOracle& oracle, int k, double eps, double delta);
// Accuracy used per Fourier coefficient.
double junta_channel_eps1(int k, double eps);

// Fourier coefficients with |x|, |y| <= d.
LearnReport apt_low_degree_channel(QueryOracle& oracle, int d, double eps, double delta);
double low_degree_channel_eps1(int n, int d, double eps);

// min(ceil(log2(s^4 / eps^4)^depth), n + 1)
int qac0_degree(int n, double size, int depth, double eps);
// Shadow estimates of the Choi operator's Pauli coefficients up to the QAC0
// degree. The hypothesis is an operator on the n + 1 Choi qubits that
// approximates J(Phi).
LearnReport apt_qac0(QueryOracle& oracle, double size, int depth, double eps, double delta);

LearnReport apt_finite_class(QueryOracle& oracle, const std::vector<Mat>& cls, double eps,
                             double delta, Ensemble e = Ensemble::Haar,
                             SampleRule rule = SampleRule::Hoeffding);

LearnReport apt_from_state_learner(QueryOracle& oracle, const StateLearner& learner,
                                   std::string class_tag, double eps, double delta);

struct ProperWrapOptions {
  DykstraOptions dykstra;
  MixRule rule = MixRule::EigenvalueExact;
};
// Projects the Fourier hypothesis of apt_junta_channel or
// apt_low_degree_channel onto channels over its support. The 2 opt bound this
// is meant to carry depends on an unproven convergence condition, which the
// report flags.
LearnReport proper_apt_wrap(const LearnReport& improper, double eps1,
                            ProperWrapOptions opts = {});

}  // namespace qapt
