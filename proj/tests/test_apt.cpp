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
#include <numbers>

#include "qapt/apt.hpp"
#include "qapt/fixtures.hpp"
#include "qapt/optimal.hpp"

namespace qapt {
namespace {

double err_of(const LearnReport& r, const Channel& target) {
  return df_fourier(r.hypothesis.fourier(), fourier_matrix(target));
}

TEST(AptPauliString, Examples) {
  std::vector<double> p(4, 0.0);
  p[2] = 1.0;
  QueryOracle z(Channel::pauli_channel(1, p), 1);
  EXPECT_EQ(apt_pauli_string(z, 0.2, 0.1).hypothesis.pauli.str(), "2");

  Channel dep = Channel::depolarizing(1, 0.1);
  QueryOracle d(dep, 2);
  LearnReport r = apt_pauli_string(d, 0.2, 0.1);
  EXPECT_EQ(r.hypothesis.pauli.str(), "0");
  EXPECT_LE(err_of(r, dep), opt_pauli_strings_df(fourier_matrix(dep)).value + 0.2);

  QueryOracle h(Channel::from_unitary(hadamard_gate()), 3);
  std::string s = apt_pauli_string(h, 0.2, 0.1).hypothesis.pauli.str();
  EXPECT_TRUE(s == "1" || s == "3");
}

TEST(AptPauliChannel, Examples) {
  Rng rng = make_rng(4);
  Channel pc = random_pauli_channel(2, rng);
  QueryOracle o(pc, 5);
  LearnReport r = apt_pauli_channel(o, 0.15, 0.1);
  EXPECT_LE(err_of(r, pc), 0.15);
  EXPECT_TRUE(r.hypothesis.proper);
  Mat f = r.hypothesis.fourier();
  EXPECT_NEAR(f.trace().real(), 1.0, 1e-12);

  Channel t = Channel::from_unitary(t_gate());
  QueryOracle ot(t, 6);
  EXPECT_LE(err_of(apt_pauli_channel(ot, 0.1, 0.1), t),
            std::cos(std::numbers::pi / 8) * std::sin(std::numbers::pi / 8) + 0.1);
}

TEST(AptJuntaChannel, RealizableSubset) {
  Rng rng = make_rng(7);
  Channel j = random_junta_channel(3, qubit_set({2}), rng);
  QueryOracle o(j, 8);
  LearnReport r = apt_junta_channel(o, 1, 0.2, 0.1);
  EXPECT_EQ(r.internals["subset"], (std::vector<int>{2}));
  EXPECT_LE(err_of(r, j), 0.2);
  // The hypothesis lives on the subset block only.
  Mat f = r.hypothesis.matrix;
  for (Eigen::Index x = 0; x < f.rows(); ++x)
    for (Eigen::Index y = 0; y < f.cols(); ++y) {
      bool in = (PauliString(3, x).support() & ~qubit_set({2})) == 0 &&
                (PauliString(3, y).support() & ~qubit_set({2})) == 0;
      if (!in) EXPECT_EQ(f(x, y), cplx(0.0));
    }
}

TEST(AptJuntaChannel, Example1AndWeightErrorBound) {
  Channel u = Channel::from_unitary(example1_unitary());
  Mat fu = fourier_matrix(u);
  QueryOracle o(u, 9);
  LearnReport r = apt_junta_channel(o, 2, 0.3, 0.1);
  EXPECT_EQ(r.internals["subset"], (std::vector<int>{1, 2}));
  const double bound = r.internals["weight_error_bound"].get<double>();
  EXPECT_NEAR(bound, 256.0 * (2.0 * junta_channel_eps1(2, 0.3) + std::pow(junta_channel_eps1(2, 0.3), 2)),
              1e-15);
  for (auto& [key, w] : r.internals["weights"].items()) {
    QubitSet s = 0;
    for (char ch : key)
      if (ch >= '1' && ch <= '9') s |= QubitSet{1} << (ch - '1');
    EXPECT_LE(std::abs(w.get<double>() - superop_subset_weight(fu, s)), bound) << key;
  }
  EXPECT_NEAR(superop_subset_weight(fu, qubit_set({1, 2})), 1.0 / 9.0, 1e-12);
}

TEST(AptLowDegreeChannel, Examples) {
  QueryOracle id(Channel::identity(2), 10);
  EXPECT_LE(err_of(apt_low_degree_channel(id, 0, 0.2, 0.1), Channel::identity(2)), 0.2);

  Rng rng = make_rng(11);
  Channel lp = random_low_degree_pauli_channel(3, 1, rng);
  QueryOracle o(lp, 12);
  EXPECT_LE(err_of(apt_low_degree_channel(o, 1, 0.2, 0.1), lp), 0.2);

  Channel h = Channel::from_unitary(hadamard_gate());
  QueryOracle oh(h, 13);
  LearnReport rh = apt_low_degree_channel(oh, 0, 0.2, 0.1);
  Mat f = rh.hypothesis.fourier();
  EXPECT_NEAR(std::abs(f(0, 0)), 0.0, 0.2);
  EXPECT_NEAR(f.norm() - std::abs(f(0, 0)), 0.0, 1e-15);
  OptBounds b = opt_lowdeg_bounds_channel(fourier_matrix(h), 0);
  EXPECT_LE(err_of(rh, h), b.upper.value + 0.2);
}

TEST(AptLowDegreeChannel, Eps1UsesLargerPairCount) {
  // 10 strings of degree <= 1 at n = 3 give 100 pairs against 3 * 16 = 48.
  EXPECT_NEAR(low_degree_channel_eps1(3, 1, 0.2), 0.2 * std::sqrt(2.0) / 10.0, 1e-15);
}

TEST(Qac0, DegreeRule) {
  EXPECT_EQ(qac0_degree(3, 10, 2, 0.2), 4);
  EXPECT_EQ(qac0_degree(3, 1, 1, 1.0 - 1e-9), 1);
  EXPECT_THROW(qac0_degree(3, 0, 2, 0.2), InvalidArgument);
}

TEST(Qac0, ConstantChannelIsRealizable) {
  // Trace out everything and prepare |0>: J = |0><0| (x) I.
  const int n = 2;
  std::vector<Mat> kraus;
  for (int i = 0; i < 4; ++i) {
    Mat k = Mat::Zero(2, 4);
    k(0, i) = 1.0;
    kraus.push_back(k);
  }
  Channel c = Channel::from_kraus(kraus);
  QueryOracle o(c, 14);
  LearnReport r = apt_qac0(o, 1.0, 1, 0.2, 0.1);
  EXPECT_LE(df_operator(r.hypothesis.op(), choi_matrix(c)), 0.2);
}

TEST(Qac0, CoefficientIdentity) {
  // tr(v(Phi) sigma_y) = 2 alpha_y where alpha are the Pauli coefficients of J.
  Rng rng = make_rng(15);
  Qac0Circuit q = random_qac0(2, 2, 1, rng);
  Mat j = choi_matrix(q.channel), v = choi_state(q.channel);
  std::vector<cplx> alpha = decompose_dense(j);
  for (std::uint64_t code = 0; code < alpha.size(); ++code) {
    cplx lhs = (v * pauli_matrix(PauliString(3, code))).trace();
    EXPECT_NEAR(std::abs(lhs - 2.0 * alpha[code]), 0.0, 1e-9);
  }
}

TEST(Qac0, RejectsWideOutput) {
  QueryOracle o(Channel::identity(2), 16);
  EXPECT_THROW(apt_qac0(o, 4.0, 2, 0.2, 0.1), InvalidArgument);
}

TEST(AptFiniteClass, DepolarizedX) {
  Channel x = Channel::from_unitary(pauli_matrix(PauliString::parse("1")));
  Channel target = Channel::depolarizing(1, 0.05).compose(x);
  QueryOracle o(target, 17);
  LearnReport r = apt_finite_class(o, pauli_class(1), 0.2, 0.1);
  EXPECT_EQ(r.hypothesis.class_index, 1u);
  EXPECT_EQ(r.hypothesis.class_tag, "finite_class_channel");
}

TEST(AptFromStateLearner, ExactRankOne) {
  Rng rng = make_rng(18);
  Channel c = Channel::random(1, rng);
  QueryOracle e(c, 19);
  EXPECT_NEAR(err_of(apt_from_state_learner(e, exact_state_learner(c), "state", 0.2, 0.1), c), 0.0,
              1e-12);
  // Rank-one plug-in on a full-rank target, against the discarded weight.
  QueryOracle r1(c, 20);
  LearnReport r = apt_from_state_learner(r1, rank_one_state_learner(c), "state", 0.2, 0.1);
  Eigen::SelfAdjointEigenSolver<Mat> es(choi_state(c));
  double tail = 1.0 - es.eigenvalues()(3);
  EXPECT_LE(err_of(r, c), std::pow(2.0, 0.25) * std::sqrt(tail) + 0.2);
}

TEST(ProperWrap, RealizableJuntaChannel) {
  Rng rng = make_rng(21);
  Channel j = random_junta_channel(2, qubit_set({1}), rng);
  QueryOracle o(j, 22);
  const double eps = 0.2;
  LearnReport imp = apt_junta_channel(o, 1, eps, 0.1);
  LearnReport pr = proper_apt_wrap(imp, junta_channel_eps1(1, eps));
  ASSERT_FALSE(pr.internals["projection_failed"].get<bool>());
  ASSERT_TRUE(pr.hypothesis.channel);
  EXPECT_TRUE(pr.hypothesis.proper);
  EXPECT_EQ(pr.alpha, 2.0);
  EXPECT_LE(err_of(pr, j), 2.0 * eps);
  EXPECT_NO_THROW(channel_from_fourier(pr.hypothesis.fourier()));
  EXPECT_TRUE(pr.internals.contains("conditional"));
}

TEST(ProperWrap, GenericChannelAlwaysCptp) {
  Rng rng = make_rng(23);
  for (int t = 0; t < 5; ++t) {
    Channel c = Channel::random(1, rng);
    QueryOracle o(c, 24 + t);
    LearnReport imp = apt_low_degree_channel(o, 1, 0.3, 0.1);
    LearnReport pr = proper_apt_wrap(imp, low_degree_channel_eps1(1, 1, 0.3));
    ASSERT_TRUE(pr.hypothesis.channel);
    EXPECT_NO_THROW(channel_from_fourier(pr.hypothesis.fourier()));
  }
  LearnReport bogus;
  bogus.hypothesis = Hypothesis::of_pauli(PauliString(1, 0), "x");
  EXPECT_THROW(proper_apt_wrap(bogus, 0.1), InvalidArgument);
}

}  // namespace
}  // namespace qapt
