#include "qutrit/sections.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include "qutrit/gellmann.hpp"

namespace qutrit {

double RestrictedCubic::evaluate(const Eigen::VectorXd& x) const {
  return x.dot(quad * x) + cubic.contract(x);
}

Polynomial RestrictedCubic::boundary_polynomial() const {
  const int k = spec.size();
  Polynomial p = Polynomial::constant(k, -1.0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      Polynomial::Exponents e(k, 0);
      ++e[a];
      ++e[b];
      p.add_term(e, quad(a, b));
      for (int c = 0; c < k; ++c) {
        Polynomial::Exponents e3 = e;
        ++e3[c];
        p.add_term(e3, cubic(a, b, c));
      }
    }
  return p.pruned(1e-15);
}

RestrictedCubic restricted_cubic(const SectionSpec& spec) {
  const int k = spec.size();
  const auto& sc = structure_constants();
  RestrictedCubic rc{spec, 3.0 * Eigen::MatrixXd::Identity(k, k), Tensor3(k)};
  const double scale = -2.0 * std::sqrt(3.0);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        const double d = sc.d(spec.axis(a), spec.axis(b), spec.axis(c));
        rc.cubic(a, b, c) = std::abs(d) <= tol::numeric ? 0.0 : scale * d;
      }
  return rc;
}

std::string_view to_string(TwoShape shape) {
  switch (shape) {
    case TwoShape::Circle: return "Circle";
    case TwoShape::Triangle: return "Triangle";
    case TwoShape::Parabola: return "Parabola";
    case TwoShape::Ellipse: return "Ellipse";
  }
  return "?";
}

std::string_view to_string(ThreeShape shape) {
  switch (shape) {
    case ThreeShape::Sphere: return "Sphere";
    case ThreeShape::Ellipsoid: return "Ellipsoid";
    case ThreeShape::Cone: return "Cone";
    case ThreeShape::ObeseTetrahedron: return "ObeseTetrahedron";
    case ThreeShape::RS1: return "RS1";
    case ThreeShape::RS2: return "RS2";
    case ThreeShape::Paraboloid: return "Paraboloid";
  }
  return "?";
}

SectionSpec canonical_section(TwoShape shape) {
  switch (shape) {
    case TwoShape::Circle: return SectionSpec::parse("12");
    case TwoShape::Triangle: return SectionSpec::parse("18");
    case TwoShape::Parabola: return SectionSpec::parse("34");
    case TwoShape::Ellipse: return SectionSpec::parse("48");
  }
  throw std::invalid_argument("canonical_section: unknown shape");
}

SectionSpec canonical_section(ThreeShape shape) {
  switch (shape) {
    case ThreeShape::Sphere: return SectionSpec::parse("123");
    case ThreeShape::Ellipsoid: return SectionSpec::parse("468");
    case ThreeShape::Cone: return SectionSpec::parse("128");
    case ThreeShape::ObeseTetrahedron: return SectionSpec::parse("146");
    case ThreeShape::RS1: return SectionSpec::parse("134");
    case ThreeShape::RS2: return SectionSpec::parse("148");
    case ThreeShape::Paraboloid: return SectionSpec::parse("345");
  }
  throw std::invalid_argument("canonical_section: unknown shape");
}

namespace {

// Invariants are sums of products of entries in {0, +-1, +-2, +-sqrt3};
// any mismatch is O(1).
constexpr double kInvariantTolerance = 1e-8;

std::optional<ShapeMatch> try_match(const Tensor3& t, std::string_view name,
                                    const SectionSpec& canonical) {
  const Tensor3 target = restricted_cubic(canonical).cubic;
  const Eigen::VectorXd a = orthogonal_invariants(t);
  const Eigen::VectorXd b = orthogonal_invariants(target);
  if ((a - b).cwiseAbs().maxCoeff() > kInvariantTolerance) return std::nullopt;
  auto w = find_congruence(t, target, tol::numeric);
  if (!w) return std::nullopt;
  return ShapeMatch{std::string(name), canonical, *w};
}

}  // namespace

ShapeMatch match_shape(const SectionSpec& spec) {
  const Tensor3 t = restricted_cubic(spec).cubic;
  if (spec.size() == 2) {
    for (const TwoShape s : kTwoShapes)
      if (auto m = try_match(t, to_string(s), canonical_section(s))) return *m;
  } else if (spec.size() == 3) {
    for (const ThreeShape s : kThreeShapes)
      if (auto m = try_match(t, to_string(s), canonical_section(s))) return *m;
  } else {
    throw std::invalid_argument("match_shape: only two- and three-sections are classified");
  }
  throw std::runtime_error("match_shape: section " + spec.name() + " matches no canonical shape");
}

TwoShape classify_two_section(const SectionSpec& spec) {
  if (spec.size() != 2) throw std::invalid_argument("classify_two_section: need a two-section");
  const ShapeMatch m = match_shape(spec);
  for (const TwoShape s : kTwoShapes)
    if (m.shape == to_string(s)) return s;
  throw std::logic_error("classify_two_section: unreachable");
}

ThreeShape classify_three_section(const SectionSpec& spec) {
  if (spec.size() != 3) throw std::invalid_argument("classify_three_section: need a three-section");
  const ShapeMatch m = match_shape(spec);
  for (const ThreeShape s : kThreeShapes)
    if (m.shape == to_string(s)) return s;
  throw std::logic_error("classify_three_section: unreachable");
}

namespace {

// Least-squares quadratic q with l * q = p, evaluated on a fixed point set,
// then checked coefficient by coefficient.
std::optional<std::pair<Polynomial, double>> divide(const Polynomial& p, const Polynomial& l) {
  const int k = p.variables();
  const auto monos = monomials_up_to(k, 2);
  const int samples = 40;
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> coord(-1.5, 1.5);
  Eigen::MatrixXd a(samples, static_cast<Eigen::Index>(monos.size()));
  Eigen::VectorXd rhs(samples);
  for (int s = 0; s < samples; ++s) {
    Eigen::VectorXd x(k);
    for (int i = 0; i < k; ++i) x[i] = coord(rng);
    const double lx = l(x);
    for (std::size_t m = 0; m < monos.size(); ++m) {
      double v = lx;
      for (int i = 0; i < k; ++i) v *= std::pow(x[i], monos[m][i]);
      a(s, static_cast<Eigen::Index>(m)) = v;
    }
    rhs[s] = p(x);
  }
  const Eigen::VectorXd coef = a.colPivHouseholderQr().solve(rhs);
  Polynomial q(k);
  for (std::size_t m = 0; m < monos.size(); ++m) q.add_term(monos[m], coef[static_cast<Eigen::Index>(m)]);
  q = q.pruned(1e-13);
  const double residual = (l * q - p).max_abs_coefficient();
  if (residual > tol::numeric) return std::nullopt;
  return std::make_pair(q, residual);
}

}  // namespace

Factorization factor_boundary(const SectionSpec& spec) {
  if (spec.size() != 2 && spec.size() != 3) {
    throw std::invalid_argument("factor_boundary: need a two- or three-section");
  }
  const int k = spec.size();
  const RestrictedCubic rc = restricted_cubic(spec);
  const Polynomial p = rc.boundary_polynomial();

  Factorization out;
  out.degree = p.degree();
  if (out.degree < 3) return out;

  std::vector<Eigen::VectorXd> directions;
  for (int a = 0; a < k; ++a) directions.push_back(Eigen::VectorXd::Unit(k, a));
  const Eigen::VectorXd v = rc.cubic.trace_vector();
  if (v.norm() > tol::numeric) {
    const Eigen::VectorXd w = v.normalized();
    bool is_axis = false;
    for (const auto& d : directions) is_axis = is_axis || (w - d).norm() < 1e-12 || (w + d).norm() < 1e-12;
    if (!is_axis) directions.push_back(w);
  }

  const double s3 = std::sqrt(3.0);
  const std::pair<double, double> candidates[] = {{s3, 1.0}, {-s3, 1.0}, {1.0, 1.0}, {-1.0, 1.0},
                                                  {2.0, -1.0}, {-2.0, 1.0}, {2.0, 1.0}};
  for (const auto& w : directions) {
    for (const auto& [alpha, beta] : candidates) {
      Polynomial l = Polynomial::constant(k, beta);
      for (int a = 0; a < k; ++a)
        if (std::abs(w[a]) > 1e-15) l = l + Polynomial::linear(k, a, alpha * w[a]);
      if (auto res = divide(p, l)) {
        out.reducible = true;
        out.linear = l;
        out.quadratic = res->first;
        out.direction = w;
        out.alpha = alpha;
        out.beta = beta;
        out.residual = res->second;
        return out;
      }
    }
  }
  return out;
}

std::vector<SectionSpec> vanishing_cubic_sections(int k) {
  std::vector<SectionSpec> out;
  for (const auto& spec : enumerate_sections(k))
    if (restricted_cubic(spec).cubic_vanishes()) out.push_back(spec);
  return out;
}

}  // namespace qutrit
