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

#include "qapt/estimators.hpp"
#include "qapt/fixtures.hpp"
#include "qapt/harness.hpp"

namespace qapt {
namespace {

Mat pm(const char* s) { return pauli_matrix(PauliString::parse(s)); }

// Allowed failure count for `runs` trials at nominal rate delta.
int allowed(int runs, double delta) {
  return static_cast<int>(std::floor(runs * failure_threshold(delta, runs)));
}

TEST(SampleSizes, ClosedForms) {
  EXPECT_EQ(hoeffding_samples(0.1, 0.05), static_cast<std::uint64_t>(std::ceil(std::log(40.0) / 0.02)));
  EXPECT_EQ(sup_norm_samples(0.1, 0.05),
            static_cast<std::uint64_t>(std::ceil(2.0 * std::log(40.0) / 0.01)));
  EXPECT_EQ(l2_samples(0.1, 0.05),
            static_cast<std::uint64_t>(std::ceil(std::pow(1.0 + std::sqrt(std::log(20.0)), 2) / 0.02)));
  EXPECT_EQ(mom_batches(10, 0.1), static_cast<std::uint64_t>(std::ceil(8.0 * std::log(100.0))));
  EXPECT_EQ(mom_batch_size(2, 0.1), 3600u);
  EXPECT_EQ(finite_class_samples(4, 0.1, 0.1, SampleRule::Hoeffding),
            static_cast<std::uint64_t>(std::ceil(std::log(80.0) / 0.02)));
  EXPECT_EQ(finite_class_samples(4, 0.1, 0.1, SampleRule::Conservative),
            static_cast<std::uint64_t>(std::ceil(204.0 * std::log(80.0) / 0.01)));
  EXPECT_THROW(hoeffding_samples(0.0, 0.1), InvalidArgument);
  EXPECT_THROW(hoeffding_samples(1e-12, 0.1), ResourceLimit);
}

TEST(EmpiricalDistribution, PointMassAndEmpty) {
  QueryOracle z(pm("13"), 1);
  EstimateTable t = empirical_distribution(z, 500);
  ASSERT_EQ(t.entries.size(), 1u);
  EXPECT_NEAR(t.at("13").value.real(), 1.0, 0.0);
  EXPECT_EQ(t.queries, 500u);
  EXPECT_THROW(empirical_distribution(z, 0), InvalidArgument);
}

TEST(EmpiricalDistribution, HadamardAtTenThousand) {
  int fails = 0;
  for (int r = 0; r < 200; ++r) {
    QueryOracle h(hadamard_gate(), 1000 + r);
    std::vector<double> f = empirical_frequencies(h, 10000);
    if (std::abs(f[1] - 0.5) > 0.02 || std::abs(f[3] - 0.5) > 0.02) ++fails;
  }
  EXPECT_LE(fails, allowed(200, 0.01));
}

TEST(EmpiricalDistribution, SupNormGuaranteeFailureRate) {
  Rng rng = make_rng(2);
  Channel c = Channel::random(1, rng);
  Mat f = fourier_matrix(c);
  const double eps = 0.05, delta = 0.1;
  int fails = 0;
  for (int r = 0; r < 200; ++r) {
    QueryOracle o(c, 2000 + r);
    std::vector<double> p = empirical_frequencies(o, sup_norm_samples(eps, delta));
    double worst = 0.0;
    for (int x = 0; x < 4; ++x) worst = std::max(worst, std::abs(p[x] - f(x, x).real()));
    if (worst > eps) ++fails;
  }
  EXPECT_LE(fails, allowed(200, delta));
}

TEST(PauliCoeff, Examples) {
  QueryOracle id(pm("00"), 3);
  EXPECT_NEAR(std::abs(estimate_pauli_coeff(id, PauliString(2, 0), 0.05, 0.01) - 1.0), 0.0, 0.05);
  QueryOracle h(hadamard_gate(), 4);
  EXPECT_LE(std::abs(estimate_pauli_coeff(h, PauliString(1, 2), 0.05, 0.01)), 0.05);
  QueryOracle t(t_gate(), 5);
  cplx want = (1.0 - std::exp(cplx(0, std::numbers::pi / 4))) / 2.0;
  cplx got = estimate_pauli_coeff(t, PauliString(1, 3), 0.05, 0.01);
  EXPECT_LE(std::abs(got - want), 0.05);
  EXPECT_NEAR(std::abs(want), 0.38268, 1e-5);
}

TEST(PauliCoeff, JointFailureRate) {
  Rng rng = make_rng(6);
  Mat u = haar_unitary(4, rng);
  std::vector<cplx> exact = decompose_dense(u);
  std::vector<PauliString> xs = strings_up_to_degree(2, 2);
  const double eps = 0.1, delta = 0.1;
  int fails = 0;
  for (int r = 0; r < 200; ++r) {
    QueryOracle o(u, 3000 + r);
    EstimateTable t = estimate_pauli_coeffs(o, xs, eps, delta);
    bool bad = false;
    for (const PauliString& x : xs) bad |= std::abs(t.at(x.str()).value - exact[x.code()]) > eps;
    fails += bad;
  }
  EXPECT_LE(fails, allowed(200, delta));
}

TEST(FourierCoeff, Examples) {
  QueryOracle pc(Channel::pauli_channel(1, {0.4, 0.3, 0.2, 0.1}), 7);
  EXPECT_LE(std::abs(estimate_fourier_coeff(pc, PauliString(1, 1), PauliString(1, 3), 0.05, 0.01)),
            0.05);
  EXPECT_LE(std::abs(estimate_fourier_coeff(pc, PauliString(1, 2), PauliString(1, 2), 0.05, 0.01) - 0.2),
            0.05);
  Mat ft = fourier_matrix(Channel::from_unitary(t_gate()));
  QueryOracle t(Channel::from_unitary(t_gate()), 8);
  cplx got = estimate_fourier_coeff(t, PauliString(1, 0), PauliString(1, 3), 0.05, 0.01);
  EXPECT_LE(std::abs(got - ft(0, 3)), 0.05);
}

TEST(FourierCoeff, JointFailureRateAndHermitian) {
  Rng rng = make_rng(9);
  Channel c = Channel::random(1, rng);
  Mat f = fourier_matrix(c);
  std::vector<PauliString> idx = strings_up_to_degree(1, 1);
  const double eps = 0.1, delta = 0.1;
  int fails = 0;
  for (int r = 0; r < 200; ++r) {
    QueryOracle o(c, 4000 + r);
    FourierEstimate e = estimate_fourier_coeffs(o, idx, eps, delta);
    EXPECT_LT(hermiticity_error(e.values), 1e-15);
    bool bad = false;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) bad |= std::abs(e.values(i, j) - f(i, j)) > eps;
    fails += bad;
  }
  EXPECT_LE(fails, allowed(200, delta));
}

// The Fourier matrix of a unitary channel is the outer product of its Pauli
// coefficients; the two estimators must agree.
TEST(FourierCoeff, ConsistentWithPauliCoefficients) {
  Rng rng = make_rng(10);
  Mat u = haar_unitary(2, rng);
  std::vector<PauliString> idx = strings_up_to_degree(1, 1);
  QueryOracle a(u, 11), b(Channel::from_unitary(u), 12);
  EstimateTable p = estimate_pauli_coeffs(a, idx, 0.02, 0.01);
  FourierEstimate f = estimate_fourier_coeffs(b, idx, 0.02, 0.01);
  // Compare phase-invariant products.
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      cplx outer = p.at(idx[i].str()).value * std::conj(p.at(idx[j].str()).value);
      EXPECT_LE(std::abs(outer - f.values(i, j)), 0.02 * 3 + 0.02);
    }
}

TEST(SubsetWeights, Examples) {
  Rng rng = make_rng(13);
  Mat j = random_junta_unitary(3, qubit_set({1, 3}), rng);
  QueryOracle o(j, 14);
  EstimateTable t = estimate_subset_weights(o, subsets_of_size(3, 2), 0.05, 0.01);
  EXPECT_NEAR(t.at("{1,3}").value.real(), 1.0, 0.05);
  QueryOracle e(example1_unitary(), 15);
  EstimateTable te = estimate_subset_weights(e, {qubit_set({1, 2}), qubit_set({2, 3})}, 0.05, 0.01);
  EXPECT_NEAR(te.at("{1,2}").value.real(), 1.0 / 3.0, 0.05);
  EXPECT_NEAR(te.at("{2,3}").value.real(), 0.0, 0.05);
}

TEST(Shadow, Examples) {
  QueryOracle id(Channel::identity(1), 16);
  EstimateTable t = shadow_pauli_expectations(
      id, {PauliString::parse("00"), PauliString::parse("11"), PauliString::parse("22")}, 0.1, 0.05);
  EXPECT_EQ(t.at("00").value.real(), 1.0);
  EXPECT_NEAR(t.at("11").value.real(), 1.0, 0.1);
  EXPECT_NEAR(t.at("22").value.real(), -1.0, 0.1);

  Channel dep = Channel::depolarizing(1, 1.0);
  Mat v = choi_state(dep);
  QueryOracle d(dep, 17);
  std::vector<PauliString> ys = {PauliString::parse("30"), PauliString::parse("33"),
                                 PauliString::parse("03")};
  EstimateTable td = shadow_pauli_expectations(d, ys, 0.1, 0.05);
  for (const PauliString& y : ys)
    EXPECT_NEAR(td.at(y.str()).value.real(), (v * pauli_matrix(y)).trace().real(), 0.1);

  ShadowOptions small;
  small.k_max = 1;
  EXPECT_THROW(shadow_pauli_expectations(d, {PauliString::parse("33")}, 0.1, 0.05, small),
               InvalidArgument);
}

// Single-snapshot estimator 3^|y| prod(outcome signs) when the bases match,
// else 0, averaged over raw counts; the oracle's sampling must make it
// unbiased.
TEST(Shadow, UnbiasedOverRawSnapshots) {
  Rng rng = make_rng(18);
  Channel c = Channel::random(1, rng);
  Mat v = choi_state(c);
  QueryOracle o(c, 19);
  const std::uint64_t n = 100000;
  ShadowCounts s = o.pauli_shadow_counts(n);
  for (std::uint64_t code = 1; code < 16; ++code) {
    PauliString y(2, code);
    double sum = 0.0;
    for (int setting = 0; setting < 9; ++setting) {
      int b[2] = {setting / 3, setting % 3};
      bool match = true;
      for (int q = 0; q < 2; ++q)
        if (y.digit(q) != 0 && y.digit(q) - 1 != b[q]) match = false;
      if (!match) continue;
      for (int out = 0; out < 4; ++out) {
        int sign = 1;
        for (int q = 0; q < 2; ++q)
          if (y.digit(q) != 0 && ((out >> (1 - q)) & 1)) sign = -sign;
        sum += sign * std::pow(3.0, y.degree()) * static_cast<double>(s.counts[4 * setting + out]);
      }
    }
    double mean = sum / static_cast<double>(n);
    double exact = (v * pauli_matrix(y)).trace().real();
    double sigma = std::sqrt(std::pow(3.0, y.degree()) / static_cast<double>(n));
    EXPECT_LE(std::abs(mean - exact), 4.0 * sigma) << y.str();
  }
}

TEST(FiniteClassScores, Examples) {
  std::vector<Mat> cls = {pm("0"), pm("1")};
  QueryOracle o(pm("0"), 20);
  EstimateTable t = finite_class_scores(o, cls, Ensemble::Haar, 0.03, 0.01);
  EXPECT_NEAR(t.at("0").value.real(), 0.0, 1e-12);
  EXPECT_NEAR(t.at("1").value.real(), 2.0 / 3.0, 0.03);
  QueryOracle s(pm("0"), 21);
  EXPECT_EQ(finite_class_scores(s, std::vector<Mat>{pm("3")}, Ensemble::Haar, 0.1, 0.1).entries.size(), 1u);
}

}  // namespace
}  // namespace qapt
