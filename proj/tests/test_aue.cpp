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


#include <gtest/gtest.h>

#include <cmath>

#include "qapt/aue.hpp"
#include "qapt/fixtures.hpp"
#include "qapt/optimal.hpp"

namespace qapt {
namespace {

Mat pm(const char* s) { return pauli_matrix(PauliString::parse(s)); }

TEST(LearnPauliString, Examples) {
  QueryOracle x(pm("12"), 1);
  LearnReport r = learn_pauli_string(x, 0.2, 0.1);
  EXPECT_EQ(r.hypothesis.pauli.str(), "12");
  EXPECT_NEAR(davg_unitary(r.hypothesis.op(), pm("12")), 0.0, 1e-12);
  EXPECT_EQ(r.queries_used, x.queries());

  QueryOracle h(hadamard_gate(), 2);
  LearnReport rh = learn_pauli_string(h, 0.2, 0.1);
  std::string s = rh.hypothesis.pauli.str();
  EXPECT_TRUE(s == "1" || s == "3");
  EXPECT_LE(davg_unitary(rh.hypothesis.op(), hadamard_gate()), 1.0 / std::sqrt(3.0) + 0.2 + 1e-12);

  for (int seed = 0; seed < 10; ++seed) {
    QueryOracle t(t_gate(), 100 + seed);
    EXPECT_EQ(learn_pauli_string(t, 0.2, 0.1).hypothesis.pauli.str(), "0");
  }
  EXPECT_THROW(learn_pauli_string(x, 0.0, 0.1), InvalidArgument);
}

TEST(LearnUnitaryJunta, RealizableOnFourQubits) {
  Rng rng = make_rng(3);
  Mat u = random_junta_unitary(4, qubit_set({1, 3}), rng);
  QueryOracle o(u, 4);
  LearnReport r = learn_unitary_junta(o, 2, 0.3, 0.1, true);
  EXPECT_EQ(r.internals["subset"], (std::vector<int>{1, 3}));
  EXPECT_LE(df_operator(r.hypothesis.op(), u), 0.3);
  EXPECT_LT(unitarity_error(r.hypothesis.op()), 1e-10);
  EXPECT_EQ(r.alpha, 2.0);
}

TEST(LearnUnitaryJunta, Example1ImproperAgainstTruncation) {
  QueryOracle o(example1_unitary(), 5);
  LearnReport r = learn_unitary_junta(o, 2, 0.2, 0.1, false);
  EXPECT_EQ(r.internals["subset"], (std::vector<int>{1, 2}));
  EXPECT_LE(df_operator(r.hypothesis.op(), example1_unitary()), std::sqrt(1.0 / 3.0) + 0.2);
  EXPECT_EQ(r.alpha, 1.0);
}

TEST(LearnUnitaryJunta, FullSubsetLearnsEverything) {
  Rng rng = make_rng(6);
  Mat u = haar_unitary(4, rng);
  QueryOracle o(u, 7);
  LearnReport r = learn_unitary_junta(o, 2, 0.2, 0.1, false);
  EXPECT_LE(df_operator(r.hypothesis.op(), u), 0.2);
}

TEST(LearnLowDegreeAll, Examples) {
  Rng rng = make_rng(8);
  Mat u = random_degree1_unitary(3, rng);
  QueryOracle o(u, 9);
  EXPECT_LE(df_operator(learn_low_degree_all(o, 1, 0.2, 0.1).hypothesis.op(), u), 0.2);

  QueryOracle e(example1_unitary(), 10);
  LearnReport r = learn_low_degree_all(e, 2, 0.2, 0.1);
  Mat want = (1.0 / std::sqrt(3.0)) * pm("130");
  EXPECT_LE(df_operator(r.hypothesis.op(), want), 0.2);
  OptBounds b = opt_lowdeg_bounds_unitary(example1_unitary(), 2);
  EXPECT_LE(df_operator(r.hypothesis.op(), example1_unitary()), b.upper.value + 0.2);

  QueryOracle d0(u, 11);
  LearnReport r0 = learn_low_degree_all(d0, 0, 0.2, 0.1);
  cplx c0 = decompose_dense(u)[0];
  EXPECT_LE(df_operator(r0.hypothesis.op(), c0 * Mat::Identity(8, 8)), 0.2);
}

TEST(LearnLowDegreeBh, PauliTargetFindsSingleCoefficient) {
  QueryOracle o(pm("010"), 12);
  BhOptions opts;
  opts.opt_hint = 0.0;
  LearnReport r = learn_low_degree_bh(o, 1, 0.2, 0.1, opts);
  EXPECT_EQ(r.internals["chi_c"], (std::vector<std::string>{"010"}));
  EXPECT_LE(df_operator(r.hypothesis.op(), pm("010")), 0.2);
  const double c = r.internals["c"].get<double>();
  EXPECT_LE(r.internals["chi_size"].get<double>(), 1.0 / (c * c));
}

TEST(LearnLowDegreeBh, ThresholdAndRegime) {
  BhOptions none;
  EXPECT_NEAR(bh_u(3, 1, none), std::sqrt(3.0) * 2.0, 1e-12);
  BhOptions hint;
  hint.opt_hint = 0.0;
  EXPECT_NEAR(bh_u(3, 1, hint), 1.0, 1e-12);
  EXPECT_NEAR(bh_threshold(3, 1, 0.2, hint), 0.04 / 2.0, 1e-12);
  QueryOracle o(pm("000"), 13);
  EXPECT_THROW(learn_low_degree_bh(o, 3, 1e-3, 0.1), RegimeUnusable);
}

TEST(LearnLowDegreeBh, ComparableToAllCoefficients) {
  Rng rng = make_rng(14);
  Mat u = random_degree1_unitary(3, rng);
  QueryOracle a(u, 15), b(u, 16);
  BhOptions opts;
  opts.opt_hint = 0.0;
  LearnReport bh = learn_low_degree_bh(a, 1, 0.2, 0.1, opts);
  LearnReport all = learn_low_degree_all(b, 1, 0.2, 0.1);
  EXPECT_LE(df_operator(bh.hypothesis.op(), u), 0.2);
  EXPECT_LE(df_operator(all.hypothesis.op(), u), 0.2);
  EXPECT_LE(bh.internals["chi_size"].get<std::size_t>(), strings_up_to_degree(3, 1).size());
}

TEST(LearnFiniteClass, Examples) {
  std::vector<Mat> cls = pauli_class(1);
  QueryOracle y(pm("2"), 17);
  LearnReport r = learn_finite_class(y, cls, 0.2, 0.1);
  EXPECT_EQ(r.hypothesis.class_index, 2u);

  QueryOracle h(hadamard_gate(), 18);
  LearnReport rh = learn_finite_class(h, cls, 0.2, 0.1);
  EXPECT_LE(davg_unitary(rh.hypothesis.op(), hadamard_gate()), 1.0 / std::sqrt(3.0) + 0.2);

  QueryOracle i(pm("0"), 19);
  LearnReport ri = learn_finite_class(i, {pm("1"), pm("0"), pm("0")}, 0.2, 0.1);
  EXPECT_EQ(ri.hypothesis.class_index, 1u);
}

TEST(StatePlugIn, ExactPauliAndInjected) {
  Rng rng = make_rng(20);
  Mat u = haar_unitary(2, rng);
  Channel c = Channel::from_unitary(u);
  Mat f = fourier_matrix(c);

  QueryOracle e(c, 21);
  LearnReport re = aue_from_state_learner(e, exact_state_learner(c), "state", 0.2, 0.1);
  EXPECT_NEAR(df_fourier(re.hypothesis.fourier(), f), 0.0, 1e-12);

  // Restricted to Pauli Choi vectors, the plug-in picks the same string as
  // learn_pauli_string under the same seed.
  QueryOracle p1(hadamard_gate(), 22), p2(hadamard_gate(), 22);
  LearnReport rp = aue_from_state_learner(p1, pauli_choi_state_learner(), "paulis", 0.2, 0.1);
  LearnReport rs = learn_pauli_string(p2, 0.2, 0.1);
  Mat fs = fourier_matrix(Channel::from_unitary(pauli_matrix(rs.hypothesis.pauli)));
  EXPECT_NEAR(df_fourier(rp.hypothesis.fourier(), fs), 0.0, 1e-12);

  QueryOracle inj(c, 23);
  LearnReport ri = aue_from_state_learner(inj, injected_error_state_learner(c, 5), "state", 0.2, 0.1);
  EXPECT_LE(df_fourier(ri.hypothesis.fourier(), f), 0.2);
}

TEST(StatePlugIn, ContractViolationIsReported) {
  QueryOracle o(pm("0"), 24);
  StateLearner bad = [](QueryOracle&, double, double) { return Mat::Identity(4, 4).eval(); };
  EXPECT_THROW(aue_from_state_learner(o, bad, "bad", 0.2, 0.1), Error);
}

}  // namespace
}  // namespace qapt
