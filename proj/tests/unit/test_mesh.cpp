#include <gtest/gtest.h>

#include <cmath>
#include <map>
#include <utility>

#include "qutrit/mesh.hpp"
#include "qutrit/statespace.hpp"

using namespace qutrit;

TEST(Mesh, SizesAndEulerCharacteristic) {
  for (const int res : {2, 3, 8, 24}) {
    const SectionMesh m = section_mesh(SectionSpec::parse("146"), res);
    const long long v = static_cast<long long>(m.vertices.size());
    const long long f = static_cast<long long>(m.faces.size());
    EXPECT_EQ(v, 2 + (res - 1) * 2 * res);
    EXPECT_EQ(f, 4LL * res * (res - 1));
    EXPECT_EQ(v - 3 * f / 2 + f, 2);
  }
}

TEST(Mesh, ClosedAndConsistentlyOriented) {
  const SectionMesh m = section_mesh(SectionSpec::parse("348"), 12);
  std::map<std::pair<int, int>, int> directed;
  for (const auto& f : m.faces)
    for (int e = 0; e < 3; ++e) {
      ASSERT_GE(f[e], 0);
      ASSERT_LT(f[e], static_cast<int>(m.vertices.size()));
      ++directed[{f[e], f[(e + 1) % 3]}];
    }
  for (const auto& [edge, count] : directed) {
    EXPECT_EQ(count, 1);
    EXPECT_EQ(directed.count({edge.second, edge.first}), 1u);
  }
}

TEST(Mesh, OutwardNormals) {
  const SectionMesh m = section_mesh(SectionSpec::parse("123"), 10);
  for (const auto& f : m.faces) {
    const Eigen::Vector3d a = m.vertices[f[0]], b = m.vertices[f[1]], c = m.vertices[f[2]];
    EXPECT_GT((b - a).cross(c - a).dot(a + b + c), 0.0);
  }
}

TEST(Mesh, VerticesLieOnTheBoundary) {
  for (const char* name : {"123", "128", "146", "134", "148", "345", "458"}) {
    const SectionSpec s = SectionSpec::parse(name);
    const SectionMesh m = section_mesh(s, 16);
    for (const auto& v : m.vertices) {
      const BlochVector n = s.embed(v);
      EXPECT_NEAR(boundary_polynomial(n), 1.0, tol::membership) << name;
      EXPECT_GE(v.norm(), 0.5 - tol::membership) << name;
      EXPECT_LE(v.norm(), 1.0 + tol::membership) << name;
    }
  }
}

TEST(Mesh, SphereSectionRadius) {
  const SectionSpec s = SectionSpec::parse("123");
  for (const auto& v : section_mesh(s, 6).vertices) EXPECT_NEAR(v.norm(), 1.0 / std::sqrt(3.0), tol::numeric);
  EXPECT_NEAR(section_radius(s, Eigen::Vector3d(2.0, 0.0, 0.0)), 1.0 / std::sqrt(3.0), tol::numeric);
}

TEST(Mesh, ObeseTetrahedronRadii) {
  const SectionSpec s = SectionSpec::parse("146");
  EXPECT_NEAR(section_radius(s, Eigen::Vector3d(1, 1, 1)), 1.0, tol::membership);
  EXPECT_NEAR(section_radius(s, Eigen::Vector3d(-1, -1, -1)), 0.5, tol::membership);
}

TEST(Mesh, RejectsBadInput) {
  EXPECT_THROW(section_mesh(SectionSpec::parse("146"), 1), std::invalid_argument);
  EXPECT_THROW(section_mesh(SectionSpec::parse("14"), 8), std::invalid_argument);
  EXPECT_THROW(section_mesh(SectionSpec::parse("1467"), 8), std::invalid_argument);
}
