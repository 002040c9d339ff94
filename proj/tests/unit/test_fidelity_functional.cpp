#include "mirrorclone/cloner_models.hpp"
#include "mirrorclone/fidelity_functional.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mirrorclone;

namespace {

double max_diff(const RealMatrix8& a, const RealMatrix8& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST(RTheta, Poles) {
  RealMatrix8 north = RealMatrix8::Zero();
  north.diagonal() << 1, 0.5, 0.5, 0, 0, 0, 0, 0;
  EXPECT_LT(max_diff(r_theta(0.0).entries(), north), 1e-15);

  RealMatrix8 south = RealMatrix8::Zero();
  south.diagonal() << 0, 0, 0, 0, 0, 0.5, 0.5, 1;
  EXPECT_LT(max_diff(r_theta(kPi).entries(), south), 1e-15);
}

TEST(RTheta, Equator) {
  const FidelityOperator r = r_theta(kPi / 2);
  EXPECT_NEAR(r(0, 0), 0.25, 1e-15);
  EXPECT_NEAR(r(0, 5), 0.125, 1e-15);
  EXPECT_NEAR(r(3, 3), 0.25, 1e-15);
}

TEST(RTheta, TraceAndSymmetry) {
  for (double theta : {0.0, 0.3, 1.0, 2.0, kPi}) {
    const FidelityOperator r = r_theta(theta);
    EXPECT_NEAR(r.entries().trace(), 2.0, 1e-14);  // Tr rho^T (x) (P(x)1+1(x)P)/2
    EXPECT_LT(max_diff(r.entries(), r.entries().transpose()), 1e-16);
  }
}

TEST(ScoreOperator, MirrorPoles) {
  RealMatrix8 expected = RealMatrix8::Zero();
  expected.diagonal() << 0.5, 0.25, 0.25, 0, 0, 0.25, 0.25, 0.5;
  EXPECT_LT(max_diff(score_operator(PriorDistribution::mirror(0.0)).entries(),
                     expected),
            1e-15);
}

TEST(ScoreOperator, SelfMirrorPoint) {
  EXPECT_LT(max_diff(score_operator(PriorDistribution::mirror(kPi / 2)).entries(),
                     r_theta(kPi / 2).entries()),
            1e-15);
}

TEST(ScoreOperator, MirrorInvariantUnderReflection) {
  for (double theta : {0.2, 0.9, 1.4}) {
    const auto a = score_operator(PriorDistribution::mirror(theta)).entries();
    const auto b = score_operator(PriorDistribution::mirror(kPi - theta)).entries();
    EXPECT_LT(max_diff(a, b), 1e-15);
  }
}

TEST(ScoreOperator, OutputSwapSymmetry) {
  const RealMatrix8 s = output_swap();
  for (double theta : {0.3, 1.2, 2.5}) {
    const RealMatrix8 r = r_theta(theta).entries();
    EXPECT_LT(max_diff(s * r * s, r), 1e-15);
  }
}

TEST(ScoreOperator, MatchesQuadrature) {
  for (double theta : {kPi / 3, kPi / 2, 0.1, 2.9}) {
    const auto g = PriorDistribution::mirror(theta);
    EXPECT_LT(max_diff(score_operator(g).entries(),
                       score_operator_quadrature(g).entries()),
              1e-12)
        << "theta " << theta;
  }
  const auto pc = PriorDistribution::phase_covariant(0.0);
  EXPECT_LT(max_diff(score_operator_quadrature(pc).entries(),
                     r_theta(0.0).entries()),
            1e-12);
}

TEST(ScoreOperator, UniversalGivesFiveSixths) {
  const auto r = score_operator(PriorDistribution::universal());
  EXPECT_NEAR(average_fidelity(uc_choi(), r), 5.0 / 6.0, 1e-12);
}

TEST(PriorDistributionTest, Validation) {
  EXPECT_THROW(PriorDistribution::mirror(-0.1), DomainError);
  EXPECT_THROW(PriorDistribution::mirror(3.2), DomainError);
  EXPECT_THROW(score_operator_quadrature(PriorDistribution::mirror(1.0), 4),
               DomainError);
  const auto g = PriorDistribution::mirror(0.4);
  ASSERT_EQ(g.atoms().size(), 2u);
  EXPECT_DOUBLE_EQ(g.atoms()[0].weight + g.atoms()[1].weight, 1.0);
}

TEST(AverageFidelity, ClosedFormValues) {
  auto at = [](double theta) {
    return average_fidelity(mpcc_choi(theta),
                            score_operator(PriorDistribution::mirror(theta)));
  };
  EXPECT_NEAR(at(0.0), 1.0, 1e-12);
  EXPECT_NEAR(at(kPi / 2), 0.5 + kSqrt2 / 4, 1e-12);
  EXPECT_NEAR(at(std::acos(std::sqrt(3.0) / 3)), 5.0 / 6.0, 1e-12);
}

TEST(AverageFidelity, DirectAgreesWithTrace) {
  const double theta = kPi / 3;
  const auto g = PriorDistribution::mirror(theta);
  EXPECT_NEAR(average_fidelity_direct(mpcc_choi(theta), g),
              average_fidelity(mpcc_choi(theta), score_operator(g)), 1e-9);

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 5; ++trial) {
    const ChoiMatrix chi = random_choi(rng);
    EXPECT_NEAR(average_fidelity_direct(chi, g),
                average_fidelity(chi, score_operator(g)), 1e-9);
  }
}

TEST(AverageFidelity, FirstClonePerfectSecondFixed) {
  // |psi> -> |psi>|0>: isometry with ancilla unused.
  Isometry v = Isometry::Zero();
  v(0, 0) = 1.0;  // |0> -> |0,0,0>
  v(4, 1) = 1.0;  // |1> -> |1,0,0>
  const ChoiMatrix chi = choi_from_isometry(v);
  const auto g = PriorDistribution::mirror(0.0);
  // F1 = 1 on both atoms; F2 = 1 at theta = 0 and 0 at theta = pi.
  EXPECT_NEAR(average_fidelity_direct(chi, g), 0.5 * (1.0 + 0.5), 1e-12);
  EXPECT_NEAR(average_fidelity(chi, score_operator(g)), 0.75, 1e-12);
}

TEST(AverageFidelity, PhaseOffsetInvariance) {
  std::mt19937_64 rng(23);
  const ChoiMatrix chi = random_choi(rng);
  const auto g = PriorDistribution::mirror(kPi / 2);
  EXPECT_NEAR(average_fidelity_direct(chi, g, 64, 0.0),
              average_fidelity_direct(chi, g, 64, 0.37), 1e-12);
}

TEST(GaussLegendre, IntegratesPolynomials) {
  const QuadratureRule q = gauss_legendre(8);
  double w = 0, x4 = 0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(q.nodes.size()); ++i) {
    w += q.weights(i);
    x4 += q.weights(i) * std::pow(q.nodes(i), 4);
  }
  EXPECT_NEAR(w, 2.0, 1e-14);
  EXPECT_NEAR(x4, 0.4, 1e-14);
}
