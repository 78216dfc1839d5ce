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


#include "qapt/io.hpp"

#include <fstream>
#include <sstream>

namespace qapt {

json matrix_to_json(const Mat& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      row.push_back(json::array({m(r, c).real(), m(r, c).imag()}));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw InvalidArgument("matrix must be a non-empty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array()) throw InvalidArgument("matrix rows must be arrays");
  const std::size_t cols = j[0].size();
  Mat m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    const json& row = j[r];
    if (!row.is_array() || row.size() != cols) throw InvalidArgument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) {
      const json& e = row[c];
      if (e.is_number()) {
        m(r, c) = cplx(e.get<double>(), 0.0);
      } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
        m(r, c) = cplx(e[0].get<double>(), e[1].get<double>());
      } else {
        throw InvalidArgument("matrix entries must be [re, im] pairs");
      }
    }
  }
  return m;
}

json channel_to_json(const Channel& c) {
  json j;
  j["n"] = c.n_in();
  if (c.n_out() != c.n_in()) j["n_out"] = c.n_out();
  j["kraus"] = json::array();
  for (const Mat& k : c.kraus()) j["kraus"].push_back(matrix_to_json(k));
  return j;
}

Channel channel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("kraus"))
    throw InvalidArgument("channel JSON needs \"n\" and \"kraus\"");
  const int n = j.at("n").get<int>();
  const int n_out = j.value("n_out", n);
  std::vector<Mat> kraus;
  for (const json& k : j.at("kraus")) kraus.push_back(matrix_from_json(k));
  Channel c = Channel::from_kraus(std::move(kraus));
  if (c.n_in() != n || c.n_out() != n_out)
    throw InvalidArgument("channel JSON: Kraus shapes disagree with \"n\"");
  return c;
}

json fourier_to_json(const Mat& f, int n) {
  return json{{"n", n}, {"fourier", matrix_to_json(f)}};
}

Mat fourier_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("fourier"))
    throw InvalidArgument("Fourier JSON needs \"n\" and \"fourier\"");
  const int n = j.at("n").get<int>();
  check_superop_qubits(n);
  Mat f = matrix_from_json(j.at("fourier"));
  if (static_cast<std::size_t>(f.rows()) != pauli_count(n) || f.rows() != f.cols())
    throw InvalidArgument("Fourier JSON: matrix must be 4^n x 4^n");
  return f;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidArgument(path + ": " + e.what());
  }
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write " + path);
  out << text;
}

}  // namespace qapt
