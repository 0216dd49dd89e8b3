#include "qutrit/pure_states.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "qutrit/gellmann.hpp"

namespace qutrit {

namespace {

constexpr int kGrid = 20;
constexpr double kDedup = 1e-6;
constexpr int kCircleMinimum = 50;

struct Solve {
  Eigen::VectorXd x;
  double residual;
};

BlochVector residual(const SectionSpec& spec, const Eigen::VectorXd& x) {
  const BlochVector n = spec.embed(x);
  return star(n, n) - n;
}

Eigen::MatrixXd jacobian(const SectionSpec& spec, const Eigen::VectorXd& x) {
  const BlochVector n = spec.embed(x);
  Eigen::MatrixXd j(8, spec.size());
  for (int a = 0; a < spec.size(); ++a) {
    const BlochVector e = BlochVector::Unit(spec.axis(a));
    j.col(a) = 2.0 * star(n, e) - e;
  }
  return j;
}

// Levenberg-Marquardt on |n * n - n|^2.
Solve solve_from(const SectionSpec& spec, Eigen::VectorXd x) {
  const int k = spec.size();
  double mu = 1e-3;
  BlochVector r = residual(spec, x);
  double cost = r.squaredNorm();
  for (int it = 0; it < 200 && cost > 1e-30; ++it) {
    const Eigen::MatrixXd j = jacobian(spec, x);
    const Eigen::MatrixXd jtj = j.transpose() * j;
    const Eigen::VectorXd g = j.transpose() * r;
    bool improved = false;
    for (int tries = 0; tries < 20; ++tries) {
      const Eigen::MatrixXd a = jtj + mu * Eigen::MatrixXd::Identity(k, k);
      const Eigen::VectorXd step = a.ldlt().solve(-g);
      const Eigen::VectorXd trial = x + step;
      const BlochVector rt = residual(spec, trial);
      const double ct = rt.squaredNorm();
      if (ct < cost) {
        x = trial;
        r = rt;
        cost = ct;
        mu = std::max(mu * 0.3, 1e-15);
        improved = true;
        break;
      }
      mu *= 10.0;
    }
    if (!improved) break;
  }
  return {x, r.cwiseAbs().maxCoeff()};
}

std::optional<PureCircle> circle_through(const Eigen::Vector3d& p1, const Eigen::Vector3d& p2,
                                         const Eigen::Vector3d& p3) {
  const Eigen::Vector3d a = p2 - p1;
  const Eigen::Vector3d b = p3 - p1;
  const Eigen::Vector3d n = a.cross(b);
  const double n2 = n.squaredNorm();
  if (n2 < 1e-12) return std::nullopt;
  const Eigen::Vector3d offset = (a.squaredNorm() * b.cross(n) + b.squaredNorm() * n.cross(a)) / (2.0 * n2);
  PureCircle c;
  c.centre = p1 + offset;
  c.normal = n.normalized();
  c.radius = offset.norm();
  return c;
}

bool on_circle(const PureCircle& c, const Eigen::Vector3d& p) {
  const Eigen::Vector3d d = p - c.centre;
  return std::abs(d.dot(c.normal)) <= kDedup && std::abs(d.norm() - c.radius) <= kDedup;
}

Eigen::Vector3d lift(const Eigen::VectorXd& x) {
  Eigen::Vector3d p = Eigen::Vector3d::Zero();
  p.head(x.size()) = x;
  return p;
}

}  // namespace

Eigen::VectorXd PureCircle::point(double angle, int dim) const {
  Eigen::Vector3d u = normal.unitOrthogonal();
  const Eigen::Vector3d v = normal.cross(u);
  const Eigen::Vector3d p = centre + radius * (std::cos(angle) * u + std::sin(angle) * v);
  return p.head(dim);
}

PureStateSet pure_states_on_section(const SectionSpec& spec) {
  const int k = spec.size();
  if (k != 2 && k != 3) throw std::invalid_argument("pure_states_on_section: need a two- or three-section");

  std::vector<Eigen::VectorXd> found;
  int total = 1;
  for (int a = 0; a < k; ++a) total *= kGrid;
  for (int idx = 0; idx < total; ++idx) {
    Eigen::VectorXd seed(k);
    int rest = idx;
    for (int a = 0; a < k; ++a) {
      seed[a] = -1.0 + (rest % kGrid + 0.5) * 2.0 / kGrid;
      rest /= kGrid;
    }
    const Solve s = solve_from(spec, seed);
    if (s.residual > 1e-12) continue;
    if (std::abs(s.x.squaredNorm() - 1.0) > 1e-9) continue;
    const bool duplicate = std::any_of(found.begin(), found.end(),
                                       [&](const Eigen::VectorXd& f) { return (f - s.x).norm() <= kDedup; });
    if (!duplicate) found.push_back(s.x);
  }
  std::sort(found.begin(), found.end(), [](const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
    return std::lexicographical_compare(a.data(), a.data() + a.size(), b.data(), b.data() + b.size());
  });

  PureStateSet out{spec, {}, std::nullopt};
  if (static_cast<int>(found.size()) >= kCircleMinimum) {
    std::mt19937_64 rng(0);
    std::uniform_int_distribution<std::size_t> pick(0, found.size() - 1);
    std::optional<PureCircle> best;
    for (int trial = 0; trial < 500; ++trial) {
      const std::size_t i = pick(rng), j = pick(rng), l = pick(rng);
      if (i == j || j == l || i == l) continue;
      auto c = circle_through(lift(found[i]), lift(found[j]), lift(found[l]));
      if (!c) continue;
      c->support = static_cast<int>(
          std::count_if(found.begin(), found.end(), [&](const Eigen::VectorXd& p) { return on_circle(*c, lift(p)); }));
      if (!best || c->support > best->support) best = c;
    }
    if (best && best->support >= kCircleMinimum) out.circle = best;
  }
  for (const auto& p : found)
    if (!out.circle || !on_circle(*out.circle, lift(p))) out.isolated.push_back(p);
  return out;
}

}  // namespace qutrit
