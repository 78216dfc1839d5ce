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


#include "qapt/hypothesis.hpp"

namespace qapt {

const char* form_name(HypothesisForm f) {
  switch (f) {
    case HypothesisForm::PauliString: return "pauli_string";
    case HypothesisForm::Unitary: return "unitary";
    case HypothesisForm::Operator: return "operator";
    case HypothesisForm::Fourier: return "fourier";
    case HypothesisForm::Channel: return "channel";
  }
  return "unknown";
}

Hypothesis Hypothesis::of_pauli(const PauliString& x, std::string tag) {
  Hypothesis h;
  h.form = HypothesisForm::PauliString;
  h.proper = true;
  h.class_tag = std::move(tag);
  h.n = x.num_qubits();
  h.pauli = x;
  return h;
}

Hypothesis Hypothesis::of_unitary(Mat u, std::string tag, bool proper) {
  Hypothesis h;
  h.form = HypothesisForm::Unitary;
  h.proper = proper;
  h.class_tag = std::move(tag);
  h.n = log2_exact(static_cast<std::size_t>(u.rows()));
  h.matrix = std::move(u);
  return h;
}

Hypothesis Hypothesis::of_operator(Mat a, std::string tag) {
  Hypothesis h;
  h.form = HypothesisForm::Operator;
  h.proper = false;
  h.class_tag = std::move(tag);
  h.n = log2_exact(static_cast<std::size_t>(a.rows()));
  h.matrix = std::move(a);
  return h;
}

Hypothesis Hypothesis::of_fourier(Mat f, int n, std::string tag) {
  Hypothesis h;
  h.form = HypothesisForm::Fourier;
  h.proper = false;
  h.class_tag = std::move(tag);
  h.n = n;
  h.matrix = std::move(f);
  return h;
}

Hypothesis Hypothesis::of_channel(Channel c, std::string tag, bool proper) {
  Hypothesis h;
  h.form = HypothesisForm::Channel;
  h.proper = proper;
  h.class_tag = std::move(tag);
  h.n = c.n_in();
  h.channel = std::move(c);
  return h;
}

Mat Hypothesis::fourier() const {
  switch (form) {
    case HypothesisForm::PauliString:
    case HypothesisForm::Unitary:
    case HypothesisForm::Operator:
      return unitary_fourier_matrix(op());
    case HypothesisForm::Fourier:
      return matrix;
    case HypothesisForm::Channel:
      return fourier_matrix(*channel);
  }
  throw InvalidArgument("hypothesis has no Fourier form");
}

Mat Hypothesis::op() const {
  switch (form) {
    case HypothesisForm::PauliString:
      return pauli_matrix(pauli);
    case HypothesisForm::Unitary:
    case HypothesisForm::Operator:
      return matrix;
    default:
      throw InvalidArgument(std::string("hypothesis form '") + form_name(form) +
                            "' has no operator");
  }
}

}  // namespace qapt
