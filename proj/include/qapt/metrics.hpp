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

#include "qapt/channel.hpp"
#include "qapt/common.hpp"

namespace qapt {

struct DistanceReport {
  enum class Kind { ClosedForm, MonteCarlo };
  double value = 0.0;
  Kind kind = Kind::ClosedForm;
  // Standard error of `value` (delta method for Monte Carlo square roots).
  double std_error = 0.0;
  std::uint64_t samples = 0;
  // Monte Carlo only: the sample mean of the per-input quantity and its
  // standard error, before any square root.
  double mean = 0.0;
  double mean_std_error = 0.0;
};

enum class Ensemble { Haar, StabilizerProduct };

// ||A - B||_F / sqrt(2^(n+1))
double df_operator(const Mat& a, const Mat& b);
// ||J1 - J2||_F / (2^n sqrt 2)
double df_superop(const Channel& a, const Channel& b);
double df_choi(const Mat& j1, const Mat& j2, int n_in);
// sqrt(1/2 sum |F1 - F2|^2)
double df_fourier(const Mat& f1, const Mat& f2);

// Root-mean-square trace distance of output states over Haar inputs.
double davg_unitary(const Mat& u, const Mat& v, double tol = 1e-8);

Vec sample_input_state(int n, Ensemble e, Rng& rng);

double trace_distance(const Mat& rho, const Mat& sigma);
double fidelity(const Mat& rho, const Mat& sigma);
// Fidelity when sigma = |phi><phi|.
double fidelity_pure(const Mat& rho, const Vec& phi);

DistanceReport davg_channel_mc(const Channel& a, const Channel& b, Ensemble e,
                               std::uint64_t samples, std::uint64_t seed);
DistanceReport avg_infidelity_mc(const Channel& a, const Channel& b, Ensemble e,
                                 std::uint64_t samples, std::uint64_t seed);
// Closed form of the Haar-averaged infidelity against a unitary reference:
// 1 - (d + sum_K |tr(V^dag K)|^2) / (d (d + 1)).
double avg_infidelity_vs_unitary(const Channel& a, const Mat& v);

double entanglement_infidelity(const Channel& a, const Channel& b);

}  // namespace qapt
