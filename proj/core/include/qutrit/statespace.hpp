#pragma once

#include <array>

#include "qutrit/types.hpp"

namespace qutrit {

/// (n*n).n, the cubic SU(3) invariant.
double cubic_invariant(const BlochVector& n);

/// 3 n.n - 2 (n*n).n. Equals 1 - det(I + sqrt(3) n.lambda).
double boundary_polynomial(const BlochVector& n);

/// 3 n.n - 2 (n*n).n <= 1 and n.n <= 1.
bool in_state_space(const BlochVector& n, double tolerance = tol::membership);

/// 3 n.n - 2 (n*n).n = 1 and n.n <= 1.
bool on_boundary(const BlochVector& n, double tolerance = tol::membership);

/// n.n = 1 and n*n = n; rho(n) is then a rank-one projector.
bool is_extremal(const BlochVector& n, double tolerance = tol::membership);

/// Eigenvalues of a 3x3 Hermitian matrix in ascending order.
struct EigenTriple {
  double low = 0.0;
  double mid = 0.0;
  double high = 0.0;

  std::array<double, 3> values() const { return {low, mid, high}; }
  double sum() const { return low + mid + high; }
  double sum_of_squares() const { return low * low + mid * mid + high * high; }
};

/// Closed-form (trigonometric) eigenvalues of a Hermitian 3x3 matrix,
/// computed from its characteristic polynomial.
EigenTriple hermitian_eigenvalues(const Matrix3c& h);

/// Eigenvalues of the explicit matrix n.lambda. Uses dot_lambda and the
/// closed-form solver only, never the f/d tensors.
EigenTriple eigen_oracle(const BlochVector& n);

/// |n| recovered from the eigenvalues of n.lambda: sqrt(sum mu^2 / 2).
double norm_from_eigenvalues(const EigenTriple& mu);

/// rho(n) >= 0 according to the eigenvalue oracle: every eigenvalue of
/// n.lambda is >= -1/sqrt(3) - tolerance.
bool eigen_positive(const BlochVector& n, double tolerance = tol::numeric);

/// Smallest positive r with r*u on the boundary cubic, for a unit direction u.
/// Always lies in [1/2, 1]. Throws std::invalid_argument if |u.u - 1| > tol::numeric.
double boundary_radius(const BlochVector& direction);

/// Scalar version: smallest positive root of 3 r^2 - 2 c r^3 = 1, c in [-1, 1].
double boundary_radius_for_invariant(double c);

/// -n/2; maps a pure state to the opposite point of the radius-1/2 sphere.
BlochVector dual_point(const BlochVector& n);

/// For a boundary point on the radius-1/sqrt(3) sphere, reports whether -n is
/// also a boundary point. Throws std::domain_error when n violates the
/// precondition.
bool self_dual_check(const BlochVector& n);

/// P(y) = det(y I + H) = y^3 + c1 y^2 + c2 y + c3.
struct CharPoly {
  double c1 = 0.0;
  double c2 = 0.0;
  double c3 = 0.0;

  double value(double y) const { return ((y + c1) * y + c2) * y + c3; }
  double derivative(double y) const { return (3.0 * y + 2.0 * c1) * y + c2; }
  double second_derivative(double y) const { return 6.0 * y + 2.0 * c1; }
};

/// Coefficients from the invariant traces tr H, tr H^2, tr H^3.
CharPoly char_poly(const Matrix3c& h);

/// I + H >= 0 iff P(1), P'(1), P''(1) are all >= 0.
bool charpoly_positive(const Matrix3c& h, double tolerance = tol::membership);

}  // namespace qutrit
