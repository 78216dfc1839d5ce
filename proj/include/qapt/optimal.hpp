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
#include <vector>

#include "qapt/channel.hpp"
#include "qapt/hypothesis.hpp"
#include "qapt/metrics.hpp"

namespace qapt {

enum class OptKind { Exact, LowerBound, UpperBound };
const char* opt_kind_name(OptKind k);

struct OptReport {
  OptKind kind = OptKind::Exact;
  double value = 0.0;
  std::optional<Hypothesis> witness;
};

struct OptBounds {
  OptReport lower;
  OptReport upper;
  QubitSet subset = 0;  // best subset for junta classes
};

// Class of Pauli strings under d_avg for a unitary target.
OptReport opt_pauli_strings_davg(const Mat& u);
// Class of Pauli strings under superoperator d_F, from the target's Fourier
// matrix.
OptReport opt_pauli_strings_df(const Mat& f);
// Class of Pauli channels under superoperator d_F.
OptReport opt_pauli_channels(const Mat& f);

// k-junta unitaries under operator d_F.
OptBounds opt_junta_bounds_unitary(const Mat& u, int k);
// k-junta channels under superoperator d_F.
OptBounds opt_junta_bounds_channel(const Mat& f, int k);
// Degree-d unitaries under operator d_F.
OptBounds opt_lowdeg_bounds_unitary(const Mat& u, int d);
// Degree-d channels under superoperator d_F.
OptBounds opt_lowdeg_bounds_channel(const Mat& f, int d);

// Finite unitary class, unitary target: exact d_avg by enumeration.
OptReport opt_finite_class(const Mat& u, const std::vector<Mat>& cls);
// Finite unitary class, channel target: Monte Carlo d_avg per member. The
// reported value is min_i sqrt(mean_i + 3 stderr_i), an upper bound with
// high probability; `lower` uses mean - 3 stderr.
OptBounds opt_finite_class_channel(const Channel& target, const std::vector<Mat>& cls,
                                   Ensemble e, std::uint64_t samples, std::uint64_t seed);

}  // namespace qapt
