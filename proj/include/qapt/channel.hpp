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
#include <vector>

#include "qapt/common.hpp"
#include "qapt/pauli.hpp"

namespace qapt {

// Completely positive trace-preserving map in Kraus form. Each Kraus operator
// is 2^n_out x 2^n_in.
class Channel {
 public:
  static Channel from_kraus(std::vector<Mat> kraus, double tp_tol = 1e-9);
  static Channel from_unitary(const Mat& u, double tol = 1e-9);
  static Channel identity(int n);
  // probs indexed by Pauli code; must be a probability vector.
  static Channel pauli_channel(int n, const std::vector<double>& probs);
  // rho -> (1-p) rho + p tr(rho) I / 2^n
  static Channel depolarizing(int n, double p);
  // Stinespring: Haar unitary on system (x) environment, environment starts
  // in |0>, traced out afterwards. env_dim = 0 means 2^n.
  static Channel random(int n, Rng& rng, std::size_t env_dim = 0);

  int n_in() const { return n_in_; }
  int n_out() const { return n_out_; }
  // Only meaningful for n_in == n_out.
  int n() const { return n_in_; }
  const std::vector<Mat>& kraus() const { return kraus_; }

  Mat apply(const Mat& rho) const;
  Channel compose(const Channel& first) const;  // this o first

 private:
  Channel(int n_in, int n_out, std::vector<Mat> kraus)
      : n_in_(n_in), n_out_(n_out), kraus_(std::move(kraus)) {}
  int n_in_ = 0, n_out_ = 0;
  std::vector<Mat> kraus_;
};

// J = sum_ij Phi(|i><j|) (x) |i><j|, output register first.
Mat choi_matrix(const Channel& c);
// v(Phi) = J / 2^n_in.
Mat choi_state(const Channel& c);
// |v(sigma_x)> with components sigma_x[a,i] / sqrt(2^n) at |a,i>.
Vec pauli_choi_vector(const PauliString& x);
// Columns |v(sigma_x)> ordered by Pauli code; a unitary on 4^n dimensions.
Mat pauli_choi_basis(int n);

// Phi_hat(x, y) = <v(sigma_x)| v(Phi) |v(sigma_y)>.
Mat fourier_matrix(const Channel& c);
Mat fourier_from_choi(const Mat& j, int n);
Mat choi_from_fourier(const Mat& f, int n);
// Outer product of a unitary's Pauli coefficients, Uhat_x conj(Uhat_y).
Mat unitary_fourier_matrix(const Mat& u);

// Thrown by channel_from_fourier when the matrix is not a channel.
class NotAChannel : public InvalidArgument {
 public:
  NotAChannel(const std::string& what, bool psd_failed, bool affine_failed,
              double min_eig, double affine_residual)
      : InvalidArgument(what),
        psd_failed(psd_failed),
        affine_failed(affine_failed),
        min_eig(min_eig),
        affine_residual(affine_residual) {}
  bool psd_failed;
  bool affine_failed;
  double min_eig;
  double affine_residual;
};

struct CptpCheck {
  double min_eig = 0.0;
  double affine_residual = 0.0;
  double hermiticity = 0.0;
  bool psd_ok = false;
  bool affine_ok = false;
  bool ok() const { return psd_ok && affine_ok; }
};

// Trace-preservation residual as the largest deviation of the Pauli
// coefficients of tr_out J from those of the identity.
CptpCheck check_fourier(const Mat& f, double psd_tol = 1e-9, double affine_tol = 1e-7);
Channel channel_from_fourier(const Mat& f, double psd_tol = 1e-9,
                             double affine_tol = 1e-7);
Channel channel_from_choi(const Mat& j, int n_in, int n_out, double psd_tol = 1e-9,
                          double tp_tol = 1e-7);
Mat partial_trace_output(const Mat& j, int n_in, int n_out);

double superop_weight(const Mat& f, const std::function<bool(const PauliString&,
                                                             const PauliString&)>& pred);
// Sum of |Phi_hat(x,y)|^2 over x, y supported inside S.
double superop_subset_weight(const Mat& f, QubitSet subset);

}  // namespace qapt
