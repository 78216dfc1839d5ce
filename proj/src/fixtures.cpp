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


#include "qapt/fixtures.hpp"

#include <bit>
#include <cmath>

#include "qapt/projections.hpp"

namespace qapt {

Mat hadamard_gate() {
  Mat h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  return h / std::sqrt(2.0);
}

Mat t_gate() {
  Mat t = Mat::Identity(2, 2);
  t(1, 1) = std::polar(1.0, M_PI / 4.0);
  return t;
}

Mat example1_unitary() {
  return pauli_matrix(PauliString::parse("XZI")) / std::sqrt(3.0) +
         std::sqrt(2.0 / 3.0) * pauli_matrix(PauliString::parse("ZZZ"));
}

std::vector<Mat> pauli_class(int n) {
  std::vector<Mat> out;
  for (std::uint64_t c = 0; c < pauli_count(n); ++c) out.push_back(pauli_matrix(PauliString(n, c)));
  return out;
}

Mat random_junta_unitary(int n, QubitSet s, Rng& rng) {
  return lift_operator(haar_unitary(dim_of(std::popcount(s)), rng), s, n);
}

Mat random_degree1_unitary(int n, Rng& rng) {
  std::uniform_int_distribution<int> pick(0, n - 1);
  QubitSet s = QubitSet{1} << pick(rng);
  return random_junta_unitary(n, s, rng);
}

Mat random_pauli_unitary(int n, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(0, pauli_count(n) - 1);
  return pauli_matrix(PauliString(n, pick(rng)));
}

Mat perturbed_unitary(const Mat& v, double tau, Rng& rng) {
  return proj_unitary(v + tau * random_ginibre(static_cast<std::size_t>(v.rows()),
                                               static_cast<std::size_t>(v.cols()), rng));
}

namespace {

std::vector<double> dirichlet(std::size_t m, Rng& rng) {
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> p(m);
  double s = 0.0;
  for (double& v : p) s += (v = ex(rng));
  for (double& v : p) v /= s;
  return p;
}

}  // namespace

Channel random_pauli_channel(int n, Rng& rng) {
  return Channel::pauli_channel(n, dirichlet(pauli_count(n), rng));
}

Channel random_junta_channel(int n, QubitSet s, Rng& rng) {
  Channel local = Channel::random(std::popcount(s), rng);
  std::vector<Mat> kraus;
  for (const Mat& k : local.kraus()) kraus.push_back(lift_operator(k, s, n));
  return Channel::from_kraus(std::move(kraus), 1e-8);
}

Channel random_low_degree_pauli_channel(int n, int d, Rng& rng) {
  std::vector<PauliString> xs = strings_up_to_degree(n, d);
  std::vector<double> w = dirichlet(xs.size(), rng);
  std::vector<double> p(pauli_count(n), 0.0);
  for (std::size_t i = 0; i < xs.size(); ++i) p[xs[i].code()] = w[i];
  return Channel::pauli_channel(n, p);
}

Qac0Circuit random_qac0(int n, int depth, int ancillas, Rng& rng) {
  if (n < 1 || depth < 1 || ancillas < 0) throw InvalidArgument("bad QAC0 fixture parameters");
  const int w = n + ancillas;
  check_qubits(w);
  const std::size_t dim = dim_of(w);
  int gates = 0;
  auto single_layer = [&](Mat& u) {
    for (int q = 0; q < w; ++q) {
      u = random_junta_unitary(w, QubitSet{1} << q, rng) * u;
      ++gates;
    }
  };
  Mat u = Mat::Identity(dim, dim);
  for (int layer = 0; layer < depth; ++layer) {
    single_layer(u);
    Vec phase = Vec::Ones(dim);
    for (int q = layer % 2; q + 1 < w; q += 2) {
      ++gates;
      const std::size_t b1 = std::size_t{1} << (w - 1 - q), b2 = std::size_t{1} << (w - 2 - q);
      for (std::size_t i = 0; i < dim; ++i)
        if ((i & b1) && (i & b2)) phase(i) = -phase(i);
    }
    u = phase.asDiagonal() * u;
  }
  single_layer(u);

  // K_e[o, i] = <e, o| U |i, 0^a>, e ranging over the traced qubits.
  const std::size_t din = dim_of(n), shift = dim_of(ancillas);
  std::vector<Mat> kraus;
  for (std::size_t e = 0; e < dim / 2; ++e) {
    Mat k(2, din);
    for (std::size_t o = 0; o < 2; ++o)
      for (std::size_t i = 0; i < din; ++i) k(o, i) = u(e * 2 + o, i * shift);
    if (k.norm() > 1e-14) kraus.push_back(std::move(k));
  }
  Qac0Circuit c{Channel::from_kraus(std::move(kraus), 1e-8), u, ancillas, depth, gates};
  return c;
}

bool is_named_unitary(const std::string& name) {
  return name == "I" || name == "X" || name == "Y" || name == "Z" || name == "H" ||
         name == "T" || name == "example1";
}

Mat named_unitary(const std::string& name) {
  if (name == "H") return hadamard_gate();
  if (name == "T") return t_gate();
  if (name == "example1") return example1_unitary();
  if (name == "I" || name == "X" || name == "Y" || name == "Z")
    return pauli_matrix(PauliString::parse(name));
  throw InvalidArgument("unknown fixture '" + name + "'");
}

}  // namespace qapt
