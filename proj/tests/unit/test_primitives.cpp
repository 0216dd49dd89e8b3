#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "qutrit/congruence.hpp"
#include "qutrit/polynomial.hpp"
#include "qutrit/sampling.hpp"
#include "qutrit/section_spec.hpp"
#include "qutrit/statespace.hpp"

using namespace qutrit;

TEST(Sampler, SameSeedSameStream) {
  Sampler a(99), b(99), c(100);
  for (int i = 0; i < 20; ++i) {
    const BlochVector x = a.ball_point();
    EXPECT_EQ(x, b.ball_point());
    EXPECT_NE(x, c.ball_point());
  }
}

TEST(Sampler, DerivedSeedsAreDistinct) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 64; ++s) seen.insert(derive_seed(7, s));
  EXPECT_EQ(seen.size(), 64u);
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}

TEST(Sampler, OutputsLieWhereTheyShould) {
  Sampler rng(5);
  double max_ball = 0.0;
  for (int i = 0; i < 2000; ++i) {
    EXPECT_NEAR(rng.unit_direction().norm(), 1.0, tol::numeric);
    max_ball = std::max(max_ball, rng.ball_point().norm());
    EXPECT_NEAR(rng.hilbert_vector().norm(), 1.0, tol::numeric);
    EXPECT_TRUE(is_extremal(rng.pure_state()));
  }
  EXPECT_LE(max_ball, 1.0);
  EXPECT_GT(max_ball, 0.9);
}

TEST(Sampler, BallPointRadiusFollowsVolumeLaw) {
  // P(|n| <= 1/2) = 2^-8 in eight dimensions
  Sampler rng(6);
  int small = 0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) small += rng.ball_point().norm() <= 0.5;
  EXPECT_NEAR(static_cast<double>(small) / n, 1.0 / 256.0, 0.001);
}

TEST(Sampler, SpecialUnitaryAndHermitian) {
  Sampler rng(8);
  for (int i = 0; i < 200; ++i) {
    const Matrix3c u = rng.special_unitary();
    EXPECT_LE((u.adjoint() * u - Matrix3c::Identity()).cwiseAbs().maxCoeff(), tol::numeric);
    EXPECT_NEAR(std::abs(u.determinant() - Complex(1.0, 0.0)), 0.0, tol::numeric);
    const Matrix3c h = rng.unit_trace_hermitian();
    EXPECT_NEAR(std::abs(h.trace() - Complex(1.0, 0.0)), 0.0, tol::numeric);
    EXPECT_LE((h - h.adjoint()).cwiseAbs().maxCoeff(), tol::numeric);
  }
}

TEST(Polynomial, ArithmeticAndEvaluation) {
  const Polynomial x = Polynomial::linear(2, 0), y = Polynomial::linear(2, 1);
  const Polynomial one = Polynomial::constant(2, 1.0);
  const Polynomial p = (x + one) * (y - one);  // xy - x + y - 1
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coefficient({1, 1}), 1.0);
  EXPECT_EQ(p.coefficient({1, 0}), -1.0);
  EXPECT_EQ(p.coefficient({0, 1}), 1.0);
  EXPECT_EQ(p.coefficient({0, 0}), -1.0);
  Eigen::VectorXd at(2);
  at << 2.0, 3.0;
  EXPECT_EQ(p(at), 6.0);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(p.homogeneous_part(2).terms().size(), 1u);
  EXPECT_EQ((p * 2.0).max_abs_coefficient(), 2.0);
}

TEST(Polynomial, PruneAndPrint) {
  Polynomial p(2);
  p.add_term({2, 0}, 3.0);
  p.add_term({2, 1}, -6.0);
  p.add_term({0, 0}, -1.0);
  p.add_term({1, 0}, 1e-15);
  EXPECT_EQ(p.pruned(1e-12).terms().size(), 3u);
  EXPECT_EQ(p.pruned(1e-12).to_string({"n1", "n8"}), "-6*n1^2*n8 + 3*n1^2 - 1");
}

TEST(Polynomial, MonomialCount) {
  // C(k + d, d)
  EXPECT_EQ(monomials_up_to(2, 3).size(), 10u);
  EXPECT_EQ(monomials_up_to(3, 2).size(), 10u);
  EXPECT_EQ(monomials_up_to(3, 3).size(), 20u);
}

TEST(SectionSpec, ParseAndName) {
  const SectionSpec s = SectionSpec::parse("641");
  EXPECT_EQ(s.labels(), (std::vector<int>{1, 4, 6}));
  EXPECT_EQ(s.name(), "146");
  EXPECT_EQ(s.axis(2), 5);
  EXPECT_EQ(s.variable_names(), (std::vector<std::string>{"n1", "n4", "n6"}));
  EXPECT_TRUE(s.contains(4));
  EXPECT_FALSE(s.contains(8));
}

TEST(SectionSpec, RejectsBadLabels) {
  EXPECT_THROW(SectionSpec::parse("1"), std::invalid_argument);
  EXPECT_THROW(SectionSpec::parse("11"), std::invalid_argument);
  EXPECT_THROW(SectionSpec::parse("19"), std::invalid_argument);
  EXPECT_THROW(SectionSpec::parse("10"), std::invalid_argument);
  EXPECT_THROW(SectionSpec::parse("12345"), std::invalid_argument);
  EXPECT_THROW(SectionSpec::parse("1a"), std::invalid_argument);
  EXPECT_THROW(SectionSpec({2, 1}), std::invalid_argument);
}

TEST(SectionSpec, EmbedRestrictRoundTrip) {
  const SectionSpec s = SectionSpec::parse("348");
  Eigen::VectorXd x(3);
  x << 0.1, -0.2, 0.3;
  const BlochVector n = s.embed(x);
  EXPECT_EQ(n[2], 0.1);
  EXPECT_EQ(n[3], -0.2);
  EXPECT_EQ(n[7], 0.3);
  EXPECT_EQ(n.cwiseAbs().sum(), 0.6);
  EXPECT_EQ(s.restrict(n), x);
}

TEST(SectionSpec, Enumeration) {
  EXPECT_EQ(enumerate_sections(2).size(), 28u);
  EXPECT_EQ(enumerate_sections(3).size(), 56u);
  EXPECT_EQ(enumerate_sections(4).size(), 70u);
  const auto three = enumerate_sections(3);
  EXPECT_EQ(three.front().name(), "123");
  EXPECT_EQ(three.back().name(), "678");
  EXPECT_TRUE(std::is_sorted(three.begin(), three.end()));
  EXPECT_THROW(enumerate_sections(1), std::invalid_argument);
  EXPECT_THROW(enumerate_sections(5), std::invalid_argument);
}

namespace {

Tensor3 random_symmetric(Sampler& rng, int k) {
  Tensor3 t(k);
  for (int a = 0; a < k; ++a)
    for (int b = a; b < k; ++b)
      for (int c = b; c < k; ++c) {
        const double v = rng.normal();
        t(a, b, c) = t(a, c, b) = t(b, a, c) = t(b, c, a) = t(c, a, b) = t(c, b, a) = v;
      }
  return t;
}

Eigen::MatrixXd random_orthogonal(Sampler& rng, int k) {
  Eigen::MatrixXd m(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m(i, j) = rng.normal();
  return Eigen::HouseholderQR<Eigen::MatrixXd>(m).householderQ();
}

}  // namespace

TEST(Congruence, SignedPermutationCount) {
  EXPECT_EQ(signed_permutations(2).size(), 8u);
  EXPECT_EQ(signed_permutations(3).size(), 48u);
}

TEST(Congruence, InvariantsAreOrthogonallyInvariant) {
  Sampler rng(31);
  for (int i = 0; i < 50; ++i) {
    const int k = 2 + i % 2;
    const Tensor3 t = random_symmetric(rng, k);
    const Eigen::MatrixXd q = random_orthogonal(rng, k);
    const Tensor3 s = t.transformed(q);
    EXPECT_NEAR(s.squared_norm(), t.squared_norm(), 1e-10);
    EXPECT_LE((orthogonal_invariants(s) - orthogonal_invariants(t)).cwiseAbs().maxCoeff(), 1e-9);
    Eigen::VectorXd x = Eigen::VectorXd::Random(k);
    EXPECT_NEAR(s.contract(q * x), t.contract(x), 1e-10);
  }
}

TEST(Congruence, RecoversHiddenRotation) {
  Sampler rng(32);
  for (int i = 0; i < 10; ++i) {
    const int k = 2 + i % 2;
    const Tensor3 t = random_symmetric(rng, k);
    const Tensor3 s = t.transformed(random_orthogonal(rng, k));
    const auto w = find_congruence(t, s, 1e-9);
    ASSERT_TRUE(w.has_value());
    EXPECT_LE(t.transformed(w->q).max_abs_difference(s), 1e-9);
    EXPECT_LE((w->q.transpose() * w->q - Eigen::MatrixXd::Identity(k, k)).cwiseAbs().maxCoeff(), 1e-9);
  }
}

TEST(Congruence, DistinctNormsAreNotCongruent) {
  Sampler rng(33);
  const Tensor3 t = random_symmetric(rng, 3);
  Tensor3 s = t;
  s(0, 0, 0) += 0.5;
  EXPECT_FALSE(find_congruence(t, s, 1e-9).has_value());
}
