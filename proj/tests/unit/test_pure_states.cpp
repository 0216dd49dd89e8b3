#include <gtest/gtest.h>

#include <cmath>

#include "expected.hpp"
#include "qutrit/gellmann.hpp"
#include "qutrit/pure_states.hpp"
#include "qutrit/statespace.hpp"

using namespace qutrit;

namespace {

void expect_pure(const SectionSpec& s, const Eigen::VectorXd& x) {
  const BlochVector n = s.embed(x);
  EXPECT_LE((star(n, n) - n).cwiseAbs().maxCoeff(), tol::membership) << s.name();
  const Matrix3c rho = bloch_to_density(n);
  EXPECT_LE((rho * rho - rho).cwiseAbs().maxCoeff(), tol::membership) << s.name();
  EXPECT_NEAR(n.norm(), 1.0, tol::membership) << s.name();
}

}  // namespace

class PureStateCounts : public ::testing::TestWithParam<int> {};

TEST_P(PureStateCounts, MatchShape) {
  const int k = GetParam();
  const auto table = k == 2 ? expected::two_sections() : expected::three_sections();
  const auto counts = expected::pure_counts();
  for (const auto& [shape, members] : table) {
    const auto want = counts.at(shape);
    for (const auto& name : members) {
      const SectionSpec s = SectionSpec::parse(name);
      const PureStateSet ps = pure_states_on_section(s);
      EXPECT_EQ(ps.isolated_count(), want.isolated) << name;
      EXPECT_EQ(ps.circle.has_value(), want.circle) << name;
      for (const auto& x : ps.isolated) expect_pure(s, x);
      if (ps.circle) {
        for (int i = 0; i < 16; ++i) expect_pure(s, ps.circle->point(2.0 * M_PI * i / 16.0, k));
      }
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Sections, PureStateCounts, ::testing::Values(2, 3));

TEST(PureStates, ObeseTetrahedronVertices) {
  const PureStateSet ps = pure_states_on_section(SectionSpec::parse("146"));
  ASSERT_EQ(ps.isolated_count(), 4);
  const double a = 1.0 / std::sqrt(3.0);
  const double want[4][3] = {{a, a, a}, {a, -a, -a}, {-a, a, -a}, {-a, -a, a}};
  for (const auto& v : want) {
    const Eigen::Vector3d w(v[0], v[1], v[2]);
    double best = 1.0;
    for (const auto& x : ps.isolated) best = std::min(best, (x - w).cwiseAbs().maxCoeff());
    EXPECT_LE(best, tol::membership);
  }
}

TEST(PureStates, TriangleVertices) {
  // n8 = -1, and (+-sqrt3/2, 1/2)
  const PureStateSet ps = pure_states_on_section(SectionSpec::parse("18"));
  ASSERT_EQ(ps.isolated_count(), 3);
  const double h = std::sqrt(3.0) / 2.0;
  const double want[3][2] = {{0.0, -1.0}, {h, 0.5}, {-h, 0.5}};
  for (const auto& v : want) {
    double best = 1.0;
    for (const auto& x : ps.isolated) best = std::min(best, (x - Eigen::Vector2d(v[0], v[1])).cwiseAbs().maxCoeff());
    EXPECT_LE(best, tol::membership);
  }
}

TEST(PureStates, ConeHasApexAndRim) {
  const PureStateSet ps = pure_states_on_section(SectionSpec::parse("128"));
  ASSERT_EQ(ps.isolated_count(), 1);
  ASSERT_TRUE(ps.circle.has_value());
  EXPECT_NEAR(ps.isolated[0][2], -1.0, tol::membership);
  EXPECT_NEAR(ps.circle->radius, std::sqrt(3.0) / 2.0, 1e-6);
  EXPECT_NEAR(std::abs(ps.circle->normal[2]), 1.0, 1e-6);
}

TEST(PureStates, RejectsFourSections) {
  EXPECT_THROW(pure_states_on_section(SectionSpec::parse("1245")), std::invalid_argument);
}
