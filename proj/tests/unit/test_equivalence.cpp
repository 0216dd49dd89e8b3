#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <map>

#include "expected.hpp"
#include "qutrit/equivalence.hpp"
#include "qutrit/fingerprint.hpp"
#include "qutrit/gellmann.hpp"
#include "qutrit/sampling.hpp"
#include "qutrit/sections.hpp"
#include "qutrit/statespace.hpp"

using namespace qutrit;

namespace {

expected::Classes names(const std::vector<std::vector<SectionSpec>>& classes) {
  expected::Classes out;
  for (const auto& c : classes) {
    out.emplace_back();
    for (const auto& s : c) out.back().push_back(s.name());
  }
  return out;
}

}  // namespace

TEST(Unitary, ConstructorValidates) {
  Matrix3c m = Matrix3c::Identity();
  m(0, 0) = 2.0;
  EXPECT_THROW(Unitary3{m}, std::invalid_argument);
  Matrix3c phase = Matrix3c::Identity();
  phase(2, 2) = Complex(0.0, 1.0);
  EXPECT_THROW(Unitary3{phase}, std::invalid_argument);  // det = i
  const Unitary3 fixed = Unitary3::phase_fixed(phase);
  EXPECT_NEAR(std::abs(fixed.matrix().determinant() - Complex(1.0, 0.0)), 0.0, tol::numeric);
  EXPECT_NO_THROW(Unitary3::exp_lambda(0.3, 5));
}

TEST(Unitary, ExpLambdaIsRotation) {
  // exp(i pi/2 l2) maps l1 -> -l1, l3 -> -l3 and fixes l2
  const Matrix8 ad = adjoint_action(Unitary3::exp_lambda(M_PI / 2.0, 2));
  EXPECT_NEAR(ad(0, 0), -1.0, tol::numeric);
  EXPECT_NEAR(ad(1, 1), 1.0, tol::numeric);
  EXPECT_NEAR(ad(2, 2), -1.0, tol::numeric);
}

TEST(AdjointProperty, OrthogonalHomomorphism) {
  Sampler rng(51);
  for (int i = 0; i < 200; ++i) {
    const Unitary3 u(rng.special_unitary()), v(rng.special_unitary());
    const Matrix8 a = adjoint_action(u), b = adjoint_action(v);
    EXPECT_LE((a.transpose() * a - Matrix8::Identity()).cwiseAbs().maxCoeff(), tol::numeric);
    EXPECT_NEAR(a.determinant(), 1.0, 1e-10);
    EXPECT_LE((adjoint_action(u * v) - a * b).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((adjoint_action(u.adjoint()) - a.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  }
}

TEST(AdjointProperty, ConjugationAndStarCovariance) {
  Sampler rng(52);
  for (int i = 0; i < 200; ++i) {
    const Unitary3 u(rng.special_unitary());
    const Matrix8 a = adjoint_action(u);
    const BlochVector n = rng.ball_point(), m = rng.ball_point();
    const Matrix3c rho = bloch_to_density(n);
    EXPECT_LE((bloch_to_density(a * n) - u.matrix() * rho * u.matrix().adjoint()).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LE((star(a * n, a * m) - a * star(n, m)).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_NEAR(cubic_invariant(a * n), cubic_invariant(n), 1e-12);
    EXPECT_EQ(in_state_space(a * n), in_state_space(n));
  }
}

TEST(Equivalence, CatalogGenerators) {
  const auto gens = catalog_generators();
  EXPECT_EQ(gens.size(), 14u);
  for (const auto& g : gens) {
    const Matrix8 a = adjoint_action(g.u);
    EXPECT_LE((a.transpose() * a - Matrix8::Identity()).cwiseAbs().maxCoeff(), tol::numeric) << g.name;
  }
}

TEST(Equivalence, EveryCatalogWitnessValidates) {
  const auto catalog = witness_catalog();
  EXPECT_GE(catalog.size(), 50u);
  for (const auto& w : catalog) {
    EXPECT_TRUE(spans_equivalent_under(w.from, w.to, w.unitary.u))
        << w.from.name() << " -> " << w.to.name() << " via " << w.unitary.name;
    EXPECT_EQ(image_section(w.from, adjoint_action(w.unitary.u)), w.to);
  }
}

TEST(Equivalence, ImageSectionOfNonCoordinateImage) {
  // a generic rotation does not map (12) onto a coordinate plane
  EXPECT_FALSE(image_section(SectionSpec::parse("12"), adjoint_action(Unitary3::exp_lambda(0.3, 5))).has_value());
}

TEST(Equivalence, TwoSectionPartition) {
  const UnitaryPartition p = partition_unitary_classes(2);
  EXPECT_EQ(names(p.classes), expected::two_section_classes());
  EXPECT_TRUE(p.unresolved.empty());
  EXPECT_TRUE(p.inconsistent.empty());
  EXPECT_EQ(p.spanning_edges.size(), 28u - 5u);
}

TEST(Equivalence, ThreeSectionPartition) {
  const UnitaryPartition p = partition_unitary_classes(3);
  EXPECT_EQ(names(p.classes), expected::three_section_classes());
  EXPECT_TRUE(p.unresolved.empty());
  EXPECT_TRUE(p.inconsistent.empty());
  EXPECT_EQ(p.spanning_edges.size(), 56u - 10u);
}

TEST(Equivalence, PartitionRejectsOtherSizes) {
  EXPECT_THROW(partition_unitary_classes(4), std::invalid_argument);
}

TEST(Fingerprint, ConstantOnEachClass) {
  for (const auto& classes : {expected::two_section_classes(), expected::three_section_classes()})
    for (const auto& c : classes) {
      const EquivalenceFingerprint head = fingerprint(SectionSpec::parse(c.front()));
      for (const auto& name : c) EXPECT_TRUE(fingerprint(SectionSpec::parse(name)).equals(head)) << name;
    }
}

TEST(Fingerprint, SeparatesInequivalentClassesOfEqualShape) {
  for (const auto& classes : {expected::two_section_classes(), expected::three_section_classes()}) {
    for (std::size_t i = 0; i < classes.size(); ++i)
      for (std::size_t j = i + 1; j < classes.size(); ++j) {
        const SectionSpec a = SectionSpec::parse(classes[i].front());
        const SectionSpec b = SectionSpec::parse(classes[j].front());
        const bool same_shape = match_shape(a).shape == match_shape(b).shape;
        EXPECT_TRUE(!same_shape || !fingerprint(a).equals(fingerprint(b))) << a.name() << " vs " << b.name();
      }
  }
}

TEST(Fingerprint, HandValues) {
  // su(2) subalgebra: closed under commutators
  const EquivalenceFingerprint su2 = fingerprint(SectionSpec::parse("123"));
  EXPECT_TRUE(su2.commutator_closed);
  EXPECT_TRUE(su2.has_anticommuting_pair);
  // Cartan subalgebra
  const EquivalenceFingerprint cartan = fingerprint(SectionSpec::parse("38"));
  EXPECT_TRUE(cartan.commutator_closed);
  EXPECT_FALSE(cartan.has_anticommuting_pair);
  for (const double s : cartan.commutator_norms) EXPECT_NEAR(s, 0.0, tol::numeric);
  EXPECT_TRUE(cartan.squares_commute);
  // so(3) = span(2, 5, 7)
  EXPECT_TRUE(fingerprint(SectionSpec::parse("257")).commutator_closed);
  EXPECT_FALSE(fingerprint(SectionSpec::parse("124")).commutator_closed);
}
