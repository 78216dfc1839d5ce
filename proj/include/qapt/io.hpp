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

#include "json.hpp"
#include "qapt/channel.hpp"
#include "qapt/common.hpp"

namespace qapt {

using json = nlohmann::json;

// Matrices are nested row-major arrays of [re, im] pairs.
json matrix_to_json(const Mat& m);
Mat matrix_from_json(const json& j);

// {"n": int, "kraus": [matrix, ...]}; an optional "n_out" marks n -> m maps.
json channel_to_json(const Channel& c);
Channel channel_from_json(const json& j);

// {"n": int, "fourier": matrix}
json fourier_to_json(const Mat& f, int n);
Mat fourier_from_json(const json& j);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace qapt
