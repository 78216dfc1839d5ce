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
#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qapt/channel.hpp"
#include "qapt/metrics.hpp"
#include "qapt/oracle.hpp"
#include "qapt/pauli.hpp"

namespace qapt {

struct Estimate {
  cplx value = 0.0;
  double target_eps = 0.0;
  std::uint64_t samples = 0;  // samples behind this entry
};

// Keyed by a label: a Pauli string, "x,y" for Fourier pairs, a 1-based
// subset such as "{1,3}", or a class index.
struct EstimateTable {
  std::map<std::string, Estimate> entries;
  double delta_budget = 0.0;
  std::uint64_t queries = 0;

  const Estimate& at(const std::string& key) const { return entries.at(key); }
  nlohmann::json to_json() const;
};

// Sample counts. Each returns the number of independent draws that meets the
// stated guarantee with probability at least 1 - delta.
//   hoeffding: one bounded-in-[0,1] mean to within eps.
//   sup_norm: every point mass of an empirical distribution to within eps
//     (Dvoretzky-Kiefer-Wolfowitz with Massart's constant, at eps / 2).
//   l2: ||p_hat - p||_2 <= sqrt(2) eps (McDiarmid on the l2 deviation).
std::uint64_t hoeffding_samples(double eps, double delta);
std::uint64_t sup_norm_samples(double eps, double delta);
std::uint64_t l2_samples(double eps, double delta);
// Median-of-means batch count for m simultaneous estimates.
std::uint64_t mom_batches(std::size_t m, double delta);
// Batch size so that one batch mean of a 3^k-variance estimator is within eps
// with probability 3/4.
std::uint64_t mom_batch_size(int k, double eps);

// Frequencies of n draws from the Pauli-basis measurement of the Choi state.
std::vector<double> empirical_frequencies(QueryOracle& oracle, std::uint64_t n);
EstimateTable empirical_distribution(QueryOracle& oracle, std::uint64_t n);

// Pauli coefficients of a unitary target from Hadamard-test bits. The real
// and imaginary parts are each estimated to eps / sqrt 2.
cplx estimate_pauli_coeff(QueryOracle& oracle, const PauliString& x, double eps, double delta);
// All strings jointly within eps (union bound with equal splits).
EstimateTable estimate_pauli_coeffs(QueryOracle& oracle, const std::vector<PauliString>& xs,
                                    double eps, double delta);

// Fourier coefficient of any channel from SWAP tests against Pauli Choi
// vectors and their two superpositions.
cplx estimate_fourier_coeff(QueryOracle& oracle, const PauliString& x, const PauliString& y,
                            double eps, double delta);

struct FourierEstimate {
  std::vector<PauliString> index;
  Mat values;  // Hermitian, over index x index
  EstimateTable table;
};
// Every entry over index x index jointly within eps. Diagonal entries are
// shared by the off-diagonal reconstructions; only x <= y is measured.
FourierEstimate estimate_fourier_coeffs(QueryOracle& oracle, std::vector<PauliString> index,
                                        double eps, double delta);

// Subset weights sum_{x inside S} Phi_hat(x, x) for every subset, all within
// eps from one batch of basis samples.
EstimateTable estimate_subset_weights(QueryOracle& oracle, const std::vector<QubitSet>& subsets,
                                      double eps, double delta);

struct ShadowOptions {
  int k_max = 6;
};
// tr(v(Phi) sigma_y) for Pauli strings on the 2n (or n_in + n_out) Choi
// qubits, by median of means over Pauli-basis snapshots.
EstimateTable shadow_pauli_expectations(QueryOracle& oracle,
                                        const std::vector<PauliString>& observables,
                                        double eps, double delta, ShadowOptions opts = {});
// Dense counterpart: estimates for every Pauli string on the Choi qubits,
// indexed by code, using the same batching.
std::vector<double> shadow_all_expectations(QueryOracle& oracle, int max_degree, double eps,
                                            double delta, std::size_t m);

// Sample count for the finite-class scores.
enum class SampleRule { Hoeffding, Conservative };
std::uint64_t finite_class_samples(std::size_t class_size, double eps, double delta,
                                   SampleRule rule);

// Average infidelity of the target against each member, from fidelity bits
// on shared random inputs. Entry i holds 1 - o_i.
EstimateTable finite_class_scores(QueryOracle& oracle, const std::vector<Channel>& cls,
                                  Ensemble e, double eps, double delta,
                                  SampleRule rule = SampleRule::Hoeffding);
EstimateTable finite_class_scores(QueryOracle& oracle, const std::vector<Mat>& cls, Ensemble e,
                                  double eps, double delta,
                                  SampleRule rule = SampleRule::Hoeffding);

}  // namespace qapt
