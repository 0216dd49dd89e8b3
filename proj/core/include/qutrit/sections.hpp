#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qutrit/congruence.hpp"
#include "qutrit/polynomial.hpp"
#include "qutrit/section_spec.hpp"

namespace qutrit {

/// Boundary cubic restricted to a section:
///   sum_ab quad_ab x_a x_b + sum_abc T_abc x_a x_b x_c = 1,
/// with quad = 3 I and T_abc = -2 sqrt(3) d_{i_a i_b i_c}.
struct RestrictedCubic {
  SectionSpec spec;
  Eigen::MatrixXd quad;
  Tensor3 cubic;

  /// Left-hand side at span coordinates x.
  double evaluate(const Eigen::VectorXd& x) const;
  /// Left-hand side minus 1, as a polynomial in the span coordinates.
  Polynomial boundary_polynomial() const;
  bool cubic_vanishes(double tolerance = 0.0) const { return cubic.max_abs() <= tolerance; }
};

RestrictedCubic restricted_cubic(const SectionSpec& spec);

enum class TwoShape { Circle, Triangle, Parabola, Ellipse };
enum class ThreeShape { Sphere, Ellipsoid, Cone, ObeseTetrahedron, RS1, RS2, Paraboloid };

inline constexpr TwoShape kTwoShapes[] = {TwoShape::Circle, TwoShape::Triangle, TwoShape::Parabola,
                                          TwoShape::Ellipse};
inline constexpr ThreeShape kThreeShapes[] = {ThreeShape::Sphere, ThreeShape::Ellipsoid,
                                              ThreeShape::Cone, ThreeShape::ObeseTetrahedron,
                                              ThreeShape::RS1, ThreeShape::RS2,
                                              ThreeShape::Paraboloid};

std::string_view to_string(TwoShape shape);
std::string_view to_string(ThreeShape shape);

/// Representative section of each shape; the others are matched against it.
SectionSpec canonical_section(TwoShape shape);
SectionSpec canonical_section(ThreeShape shape);

/// Shape label plus the orthogonal map taking the section's cubic tensor onto
/// the canonical one.
struct ShapeMatch {
  std::string shape;
  SectionSpec canonical;
  CongruenceWitness witness;
};

/// k in {2, 3}. Throws std::invalid_argument otherwise and std::runtime_error
/// if no canonical shape matches.
ShapeMatch match_shape(const SectionSpec& spec);

TwoShape classify_two_section(const SectionSpec& spec);
ThreeShape classify_three_section(const SectionSpec& spec);

/// Result of splitting a linear factor off the boundary polynomial.
struct Factorization {
  int degree = 0;          // degree of the boundary polynomial
  bool reducible = false;  // a linear factor was found
  Polynomial linear;       // alpha * w.x + beta
  Polynomial quadratic;    // cofactor; linear * quadratic = boundary polynomial
  Eigen::VectorXd direction;
  double alpha = 0.0;
  double beta = 0.0;
  double residual = 0.0;   // max coefficient error of linear * quadratic
};

/// Tries planes alpha * w.x + beta = 0 with (alpha, beta) from
/// {(+-sqrt3, 1), (+-1, 1), (+-2, -+1), (+-2, 1)} and w a coordinate axis or
/// the normalized trace vector of the cubic tensor.
Factorization factor_boundary(const SectionSpec& spec);

/// Sections of size k whose cubic part vanishes identically.
std::vector<SectionSpec> vanishing_cubic_sections(int k);

}  // namespace qutrit
