#include "qutrit/statespace.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "qutrit/gellmann.hpp"

namespace qutrit {

double cubic_invariant(const BlochVector& n) { return star(n, n).dot(n); }

double boundary_polynomial(const BlochVector& n) {
  return 3.0 * n.squaredNorm() - 2.0 * cubic_invariant(n);
}

bool in_state_space(const BlochVector& n, double tolerance) {
  return boundary_polynomial(n) <= 1.0 + tolerance && n.squaredNorm() <= 1.0 + tolerance;
}

bool on_boundary(const BlochVector& n, double tolerance) {
  return std::abs(boundary_polynomial(n) - 1.0) <= tolerance &&
         n.squaredNorm() <= 1.0 + tolerance;
}

bool is_extremal(const BlochVector& n, double tolerance) {
  if (std::abs(n.squaredNorm() - 1.0) > tolerance) return false;
  return (star(n, n) - n).cwiseAbs().maxCoeff() <= tolerance;
}

namespace {

// Bilinear cross product (no conjugation).
Eigen::Vector3cd cross(const Eigen::Vector3cd& a, const Eigen::Vector3cd& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

// Null vector of the singular Hermitian matrix a: the largest cross product of
// two rows.
Eigen::Vector3cd null_vector(const Matrix3c& a) {
  const Eigen::Vector3cd r0 = a.row(0).transpose();
  const Eigen::Vector3cd r1 = a.row(1).transpose();
  const Eigen::Vector3cd r2 = a.row(2).transpose();
  const std::array<Eigen::Vector3cd, 3> cand{cross(r0, r1), cross(r0, r2), cross(r1, r2)};
  int best = 0;
  for (int i = 1; i < 3; ++i)
    if (cand[i].squaredNorm() > cand[best].squaredNorm()) best = i;
  return cand[best].normalized();
}

}  // namespace

EigenTriple hermitian_eigenvalues(const Matrix3c& h) {
  const double mean = h.trace().real() / 3.0;
  const Matrix3c b = h - mean * Matrix3c::Identity();

  // x^3 - p x - q = 0 for the traceless part.
  const double p = 0.5 * (b * b).trace().real();
  const double q = b.determinant().real();
  if (p <= 0.0) return {mean, mean, mean};

  const double scale = std::sqrt(p / 3.0);
  const double half_q = 0.5 * q;
  const double cube = scale * scale * scale;
  const double disc = std::max(0.0, cube * cube - half_q * half_q);
  const double phi = std::atan2(std::sqrt(disc), half_q) / 3.0;

  constexpr double third_turn = 2.0 * std::numbers::pi / 3.0;
  std::array<double, 3> x{2.0 * scale * std::cos(phi),
                          2.0 * scale * std::cos(phi - third_turn),
                          2.0 * scale * std::cos(phi + third_turn)};

  // The trigonometric roots are only sqrt(eps) accurate near a double root.
  // Keep the most isolated root and take the other two from the 2x2
  // compression of b onto the complement of its eigenvector.
  int iso = 0;
  double best_gap = -1.0;
  for (int i = 0; i < 3; ++i) {
    const double gap = std::min(std::abs(x[i] - x[(i + 1) % 3]), std::abs(x[i] - x[(i + 2) % 3]));
    if (gap > best_gap) {
      best_gap = gap;
      iso = i;
    }
  }
  const Eigen::Vector3cd v = null_vector(b - x[iso] * Matrix3c::Identity());
  int m = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(v[i]) < std::abs(v[m])) m = i;
  Eigen::Vector3cd w1 = Eigen::Vector3cd::Unit(m) - std::conj(v[m]) * v;
  w1.normalize();
  Eigen::Vector3cd w2 = cross(v, w1).conjugate();
  w2.normalize();

  const double a11 = w1.dot(b * w1).real();
  const double a22 = w2.dot(b * w2).real();
  const double a12 = std::abs(w1.dot(b * w2));
  const double centre = 0.5 * (a11 + a22);
  const double radius = std::hypot(0.5 * (a11 - a22), a12);

  std::array<double, 3> y{x[iso], centre - radius, centre + radius};
  std::sort(y.begin(), y.end());
  return {y[0] + mean, y[1] + mean, y[2] + mean};
}

EigenTriple eigen_oracle(const BlochVector& n) { return hermitian_eigenvalues(dot_lambda(n)); }

double norm_from_eigenvalues(const EigenTriple& mu) { return std::sqrt(0.5 * mu.sum_of_squares()); }

bool eigen_positive(const BlochVector& n, double tolerance) {
  return eigen_oracle(n).low >= -1.0 / std::sqrt(3.0) - tolerance;
}

double boundary_radius_for_invariant(double c) {
  c = std::clamp(c, -1.0, 1.0);
  if (1.0 - c <= 64.0 * std::numeric_limits<double>::epsilon()) return 1.0;

  // With s = 1/r the equation becomes s^3 - 3 s + 2c = 0, whose roots are
  // 2 cos((acos(-c) + 2 pi k)/3). The largest s gives the smallest r.
  const double s = 2.0 * std::cos(std::acos(-c) / 3.0);
  double r = 1.0 / s;

  const auto g = [c](double x) { return 3.0 * x * x - 2.0 * c * x * x * x - 1.0; };
  if (!(r >= 0.4 && r <= 1.05) || std::abs(g(r)) > tol::numeric) {
    // First sign change of g on [0.4, 1.05], then bisection.
    double lo = 0.4;
    double hi = 1.05;
    const int samples = 64;
    for (int i = 1; i <= samples; ++i) {
      const double x = 0.4 + (1.05 - 0.4) * i / samples;
      if (g(x) >= 0.0) {
        hi = x;
        lo = 0.4 + (1.05 - 0.4) * (i - 1) / samples;
        break;
      }
    }
    for (int it = 0; it < 200 && hi - lo > 1e-16; ++it) {
      const double mid = 0.5 * (lo + hi);
      (g(mid) < 0.0 ? lo : hi) = mid;
    }
    r = 0.5 * (lo + hi);
  }
  return r;
}

double boundary_radius(const BlochVector& direction) {
  if (std::abs(direction.squaredNorm() - 1.0) > tol::numeric) {
    throw std::invalid_argument("boundary_radius: direction must be a unit vector");
  }
  return boundary_radius_for_invariant(cubic_invariant(direction));
}

BlochVector dual_point(const BlochVector& n) { return -0.5 * n; }

bool self_dual_check(const BlochVector& n) {
  if (std::abs(n.norm() - 1.0 / std::sqrt(3.0)) > tol::numeric) {
    throw std::domain_error("self_dual_check: |n| must equal 1/sqrt(3)");
  }
  if (!on_boundary(n)) {
    throw std::domain_error("self_dual_check: n is not a boundary point");
  }
  return on_boundary(-n);
}

CharPoly char_poly(const Matrix3c& h) {
  const double t1 = h.trace().real();
  const Matrix3c h2 = h * h;
  const double t2 = h2.trace().real();
  const double t3 = (h2 * h).trace().real();
  CharPoly p;
  p.c1 = t1;
  p.c2 = 0.5 * (t1 * t1 - t2);
  p.c3 = (t1 * t1 * t1 - 3.0 * t1 * t2 + 2.0 * t3) / 6.0;
  return p;
}

bool charpoly_positive(const Matrix3c& h, double tolerance) {
  const CharPoly p = char_poly(h);
  return p.value(1.0) >= -tolerance && p.derivative(1.0) >= -tolerance &&
         p.second_derivative(1.0) >= -tolerance;
}

}  // namespace qutrit
