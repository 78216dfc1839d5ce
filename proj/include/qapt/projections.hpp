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

#include "json.hpp"
#include "qapt/channel.hpp"
#include "qapt/common.hpp"
#include "qapt/pauli.hpp"

namespace qapt {

// Nearest unitary in Frobenius norm: U V^dag from A = U S V^dag.
Mat proj_unitary(const Mat& a);

struct AffineTerm {
  int row_index;  // position of x in the index set
  int col_index;  // position of y in the index set
  cplx coeff;     // e^{i theta(x,y)} e^{i phi(x,y)}
};

struct AffineRow {
  PauliString z;
  cplx rhs;
  std::vector<AffineTerm> terms;
};

// Trace-preservation constraints on a Fourier matrix whose support is the
// index set (rows and columns). One row per Pauli z reachable as a product
// sigma_x sigma_y inside the set; the z = I row is the trace row.
struct AffineConstraintSet {
  int n = 0;
  std::vector<PauliString> index;
  std::vector<AffineRow> rows;
  int dim() const { return static_cast<int>(index.size()); }
};

AffineConstraintSet build_cptp_constraints(int n);
AffineConstraintSet build_cptp_constraints(int n, std::vector<PauliString> index);
// Largest |row . F - rhs| for a D x D matrix over the index set.
double affine_residual(const AffineConstraintSet& cs, const Mat& f);

// [[X, -Y], [Y, X]] for H = X + iY.
RMat real_embed(const Mat& h, double herm_tol = 1e-10);
Mat real_unembed(const RMat& m);

struct DykstraOptions {
  int max_iters = 20000;
  double tol = 1e-10;
};

struct DykstraState {
  Mat iterate;  // Hermitian D x D result after the final affine step
  RMat real_iterate;
  RMat psd_correction;
  RMat affine_correction;
  int iters = 0;
  double last_change = 0.0;
  double affine_residual = 0.0;
  double min_eig = 0.0;
  double eps2 = 0.0;  // 10 x last change, a proxy for distance to the limit
  bool converged = false;
};

DykstraState dykstra_project(const Mat& x0, const AffineConstraintSet& cs,
                             DykstraOptions opts = {});

enum class MixRule { EigenvalueExact, Formula };

struct MixResult {
  Mat fourier;
  double p = 0.0;
  double deviation = 0.0;  // ||psi2 - psi3||_F / 2
  double bound = 0.0;      // 4 D eps2 / (1 + 2 D eps2)
  bool bound_ok = false;
};

// (1 - p) psi2 + p I / D over the index set.
MixResult mix_to_cptp(const Mat& psi2, double eps2, MixRule rule = MixRule::EigenvalueExact);

// Places a D x D matrix over the index set into the full 4^n x 4^n matrix.
Mat embed_fourier(const Mat& sub, const std::vector<PauliString>& index, int n);
Mat restrict_fourier(const Mat& full, const std::vector<PauliString>& index);

struct ProjectionReport {
  int iters = 0;
  double affine_residual = 0.0;
  double min_eig = 0.0;
  double eps2 = 0.0;
  double p = 0.0;
  bool converged = false;
  bool mixing_bound_ok = false;
  nlohmann::json to_json() const;
};

struct CptpProjection {
  Mat fourier;  // full 4^n x 4^n
  std::optional<Channel> channel;
  ProjectionReport report;
};

// Dykstra then mixing over the index set; channel is set when the result
// passes channel_from_fourier.
CptpProjection project_to_cptp(const Mat& full, const std::vector<PauliString>& index,
                               int n, DykstraOptions opts = {},
                               MixRule rule = MixRule::EigenvalueExact);

}  // namespace qapt
