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
#include <optional>
#include <string>

#include "json.hpp"
#include "qapt/channel.hpp"
#include "qapt/common.hpp"
#include "qapt/pauli.hpp"

namespace qapt {

enum class HypothesisForm { PauliString, Unitary, Operator, Fourier, Channel };

const char* form_name(HypothesisForm f);

struct Hypothesis {
  HypothesisForm form = HypothesisForm::Operator;
  bool proper = false;
  std::string class_tag;
  int n = 0;
  PauliString pauli;               // form PauliString
  Mat matrix;                      // Unitary / Operator: 2^n x 2^n; Fourier: 4^n x 4^n
  std::optional<Channel> channel;  // form Channel
  std::optional<std::size_t> class_index;  // finite classes

  static Hypothesis of_pauli(const PauliString& x, std::string tag);
  static Hypothesis of_unitary(Mat u, std::string tag, bool proper);
  static Hypothesis of_operator(Mat a, std::string tag);
  static Hypothesis of_fourier(Mat f, int n, std::string tag);
  static Hypothesis of_channel(Channel c, std::string tag, bool proper);

  // Fourier matrix of the hypothesis read as a superoperator. Operators A are
  // read as rho -> A rho A^dag.
  Mat fourier() const;
  // Operator form where one exists (Pauli strings, unitaries, operators).
  Mat op() const;
};

struct LearnReport {
  Hypothesis hypothesis;
  std::uint64_t queries_used = 0;
  double eps = 0.0;
  double delta = 0.0;
  double alpha = 1.0;
  nlohmann::json internals = nlohmann::json::object();
};

}  // namespace qapt
