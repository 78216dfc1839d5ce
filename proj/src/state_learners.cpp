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


#include "qapt/state_learners.hpp"

#include <algorithm>

#include "qapt/estimators.hpp"

namespace qapt {

void check_state_learner_output(const Mat& rho, int qubits, double tol) {
  const auto d = static_cast<Eigen::Index>(dim_of(qubits));
  if (rho.rows() != d || rho.cols() != d)
    throw Error("state learner contract violation: wrong dimension");
  if (hermiticity_error(rho) > tol) throw Error("state learner contract violation: not Hermitian");
  if (std::abs(rho.trace() - cplx(1.0)) > tol)
    throw Error("state learner contract violation: trace is not 1");
  Eigen::SelfAdjointEigenSolver<Mat> es(0.5 * (rho + rho.adjoint()), Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol)
    throw Error("state learner contract violation: not positive semidefinite");
}

StateLearner exact_state_learner(const Channel& target) {
  Mat v = choi_state(target);
  return [v](QueryOracle&, double, double) { return v; };
}

StateLearner pauli_choi_state_learner() {
  return [](QueryOracle& oracle, double eta, double delta) {
    std::vector<double> f = empirical_frequencies(oracle, sup_norm_samples(eta / 2.0, delta));
    auto best = static_cast<std::uint64_t>(std::max_element(f.begin(), f.end()) - f.begin());
    Vec v = pauli_choi_vector(PauliString(oracle.num_qubits(), best));
    return Mat(v * v.adjoint());
  };
}

StateLearner injected_error_state_learner(const Channel& target, std::uint64_t seed) {
  Mat v = choi_state(target);
  return [v, seed](QueryOracle&, double eta, double) {
    Rng rng = make_rng(seed);
    Mat g = random_ginibre(static_cast<std::size_t>(v.rows()), static_cast<std::size_t>(v.rows()), rng);
    Mat sigma = g * g.adjoint();
    sigma /= sigma.trace().real();
    return Mat((1.0 - eta) * v + eta * sigma);
  };
}

StateLearner rank_one_state_learner(const Channel& target) {
  Mat v = choi_state(target);
  return [v](QueryOracle&, double, double) {
    Eigen::SelfAdjointEigenSolver<Mat> es(v);
    Vec top = es.eigenvectors().col(v.rows() - 1);
    return Mat(top * top.adjoint());
  };
}

}  // namespace qapt
