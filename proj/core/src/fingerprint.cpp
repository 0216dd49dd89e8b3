#include "qutrit/fingerprint.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "qutrit/gellmann.hpp"

namespace qutrit {

namespace {

BlochVector commutator_vector(const BlochVector& a, const BlochVector& b) {
  const auto& sc = structure_constants();
  BlochVector out = BlochVector::Zero();
  for (int j = 0; j < 8; ++j) {
    if (a[j] == 0.0) continue;
    for (int k = 0; k < 8; ++k) {
      if (b[k] == 0.0) continue;
      for (int l = 0; l < 8; ++l) out[l] += sc.f(j, k, l) * a[j] * b[k];
    }
  }
  return out;
}

// Residuals of {a.l, b.l} = 0 with a, b orthonormal: a*b (8), a.b, |a|^2 - 1, |b|^2 - 1.
Eigen::VectorXd anticommutator_residual(const SectionSpec& spec, const Eigen::VectorXd& z) {
  const int k = spec.size();
  const BlochVector a = spec.embed(z.head(k));
  const BlochVector b = spec.embed(z.tail(k));
  Eigen::VectorXd r(11);
  r.head(8) = star(a, b);
  r[8] = a.dot(b);
  r[9] = a.squaredNorm() - 1.0;
  r[10] = b.squaredNorm() - 1.0;
  return r;
}

Eigen::MatrixXd anticommutator_jacobian(const SectionSpec& spec, const Eigen::VectorXd& z) {
  const int k = spec.size();
  const BlochVector a = spec.embed(z.head(k));
  const BlochVector b = spec.embed(z.tail(k));
  Eigen::MatrixXd j = Eigen::MatrixXd::Zero(11, 2 * k);
  for (int i = 0; i < k; ++i) {
    const BlochVector e = BlochVector::Unit(spec.axis(i));
    j.col(i).head(8) = star(e, b);
    j.col(k + i).head(8) = star(a, e);
    j(8, i) = z[k + i];
    j(8, k + i) = z[i];
    j(9, i) = 2.0 * z[i];
    j(10, k + i) = 2.0 * z[k + i];
  }
  return j;
}

bool find_anticommuting_pair(const SectionSpec& spec) {
  const int k = spec.size();
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const BlochVector a = BlochVector::Unit(spec.axis(i));
      const BlochVector b = BlochVector::Unit(spec.axis(j));
      if (star(a, b).cwiseAbs().maxCoeff() <= tol::membership) return true;
    }

  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> normal;
  for (int seed = 0; seed < 64; ++seed) {
    Eigen::VectorXd z(2 * k);
    for (int i = 0; i < 2 * k; ++i) z[i] = normal(rng);
    double mu = 1e-3;
    Eigen::VectorXd r = anticommutator_residual(spec, z);
    double cost = r.squaredNorm();
    for (int it = 0; it < 100 && cost > 1e-28; ++it) {
      const Eigen::MatrixXd jac = anticommutator_jacobian(spec, z);
      const Eigen::MatrixXd jtj = jac.transpose() * jac;
      const Eigen::VectorXd g = jac.transpose() * r;
      bool improved = false;
      for (int t = 0; t < 20; ++t) {
        const Eigen::VectorXd trial =
            z + (jtj + mu * Eigen::MatrixXd::Identity(2 * k, 2 * k)).ldlt().solve(-g);
        const Eigen::VectorXd rt = anticommutator_residual(spec, trial);
        if (rt.squaredNorm() < cost) {
          z = trial;
          r = rt;
          cost = rt.squaredNorm();
          mu = std::max(mu * 0.3, 1e-15);
          improved = true;
          break;
        }
        mu *= 10.0;
      }
      if (!improved) break;
    }
    if (r.cwiseAbs().maxCoeff() <= tol::membership) return true;
  }
  return false;
}

}  // namespace

bool EquivalenceFingerprint::equals(const EquivalenceFingerprint& other, double tolerance) const {
  if (k != other.k || has_anticommuting_pair != other.has_anticommuting_pair ||
      commutator_closed != other.commutator_closed || squares_commute != other.squares_commute ||
      commutator_norms.size() != other.commutator_norms.size()) {
    return false;
  }
  for (std::size_t i = 0; i < commutator_norms.size(); ++i)
    if (std::abs(commutator_norms[i] - other.commutator_norms[i]) > tolerance) return false;
  return true;
}

EquivalenceFingerprint fingerprint(const SectionSpec& spec) {
  const int k = spec.size();
  EquivalenceFingerprint fp;
  fp.k = k;
  fp.has_anticommuting_pair = find_anticommuting_pair(spec);

  // Commutators of basis pairs; [a.l, b.l] = 2i f(a, b, .).l has Frobenius
  // norm 2 sqrt(2) |f(a, b, .)|.
  const int pairs = k * (k - 1) / 2;
  Eigen::MatrixXd c(8, pairs);
  fp.commutator_closed = true;
  int col = 0;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const BlochVector v = commutator_vector(BlochVector::Unit(spec.axis(i)), BlochVector::Unit(spec.axis(j)));
      for (int l = 0; l < 8; ++l)
        if (!spec.contains(l + 1) && std::abs(v[l]) > tol::numeric) fp.commutator_closed = false;
      c.col(col++) = 2.0 * std::sqrt(2.0) * v;
    }
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(c);
  for (int i = 0; i < svd.singularValues().size(); ++i) {
    const double s = svd.singularValues()[i];
    fp.commutator_norms.push_back(s <= tol::numeric ? 0.0 : s);
  }
  std::sort(fp.commutator_norms.rbegin(), fp.commutator_norms.rend());

  // Squares (a.l)^2 = (2/3)|a|^2 + (a*a).l / sqrt3; all commute iff the
  // polarized products e_i*e_j pairwise commute.
  std::vector<BlochVector> products;
  for (int i = 0; i < k; ++i)
    for (int j = i; j < k; ++j)
      products.push_back(star(BlochVector::Unit(spec.axis(i)), BlochVector::Unit(spec.axis(j))));
  fp.squares_commute = true;
  for (std::size_t p = 0; p < products.size() && fp.squares_commute; ++p)
    for (std::size_t q = p + 1; q < products.size(); ++q)
      if (commutator_vector(products[p], products[q]).cwiseAbs().maxCoeff() > tol::numeric) {
        fp.squares_commute = false;
        break;
      }
  return fp;
}

}  // namespace qutrit
