#include "qutrit/congruence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include <unsupported/Eigen/MatrixFunctions>

namespace qutrit {

double Tensor3::squared_norm() const {
  return std::inner_product(data_.begin(), data_.end(), data_.begin(), 0.0);
}

double Tensor3::max_abs() const {
  double m = 0.0;
  for (const double v : data_) m = std::max(m, std::abs(v));
  return m;
}

double Tensor3::max_abs_difference(const Tensor3& other) const {
  if (other.dim_ != dim_) throw std::invalid_argument("Tensor3: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < data_.size(); ++i) m = std::max(m, std::abs(data_[i] - other.data_[i]));
  return m;
}

Tensor3 Tensor3::transformed(const Eigen::MatrixXd& q) const {
  const int k = dim_;
  // Contract one index at a time.
  Tensor3 s1(k), s2(k), s3(k);
  for (int a = 0; a < k; ++a)
    for (int e = 0; e < k; ++e)
      for (int f = 0; f < k; ++f) {
        double sum = 0.0;
        for (int d = 0; d < k; ++d) sum += q(a, d) * (*this)(d, e, f);
        s1(a, e, f) = sum;
      }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int f = 0; f < k; ++f) {
        double sum = 0.0;
        for (int e = 0; e < k; ++e) sum += q(b, e) * s1(a, e, f);
        s2(a, b, f) = sum;
      }
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        double sum = 0.0;
        for (int f = 0; f < k; ++f) sum += q(c, f) * s2(a, b, f);
        s3(a, b, c) = sum;
      }
  return s3;
}

double Tensor3::contract(const Eigen::VectorXd& x) const {
  double sum = 0.0;
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b)
      for (int c = 0; c < dim_; ++c) sum += (*this)(a, b, c) * x[a] * x[b] * x[c];
  return sum;
}

Eigen::VectorXd Tensor3::trace_vector() const {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(dim_);
  for (int a = 0; a < dim_; ++a)
    for (int b = 0; b < dim_; ++b) v[a] += (*this)(a, b, b);
  return v;
}

Eigen::VectorXd orthogonal_invariants(const Tensor3& t) {
  const int k = t.dim();
  const Eigen::VectorXd v = t.trace_vector();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(k, k);
  Eigen::MatrixXd n = Eigen::MatrixXd::Zero(k, k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        n(a, b) += t(a, b, c) * v[c];
        for (int d = 0; d < k; ++d) m(a, b) += t(a, c, d) * t(b, c, d);
      }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m, Eigen::EigenvaluesOnly);

  Eigen::VectorXd out(k + 5);
  out[0] = t.squared_norm();
  out[1] = v.squaredNorm();
  out.segment(2, k) = eig.eigenvalues();
  out[k + 2] = v.dot(m * v);
  out[k + 3] = (n * n).trace();
  const double tv = t.contract(v);
  out[k + 4] = tv * tv;
  return out;
}

std::vector<Eigen::MatrixXd> signed_permutations(int k) {
  std::vector<int> perm(k);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Eigen::MatrixXd> out;
  do {
    for (int signs = 0; signs < (1 << k); ++signs) {
      Eigen::MatrixXd q = Eigen::MatrixXd::Zero(k, k);
      for (int i = 0; i < k; ++i) q(i, perm[i]) = (signs >> i) & 1 ? -1.0 : 1.0;
      out.push_back(q);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

namespace {

std::vector<Eigen::MatrixXd> skew_generators(int k) {
  std::vector<Eigen::MatrixXd> gens;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      Eigen::MatrixXd g = Eigen::MatrixXd::Zero(k, k);
      g(i, j) = -1.0;
      g(j, i) = 1.0;
      gens.push_back(g);
    }
  return gens;
}

// Derivative of Q.T along Q -> exp(G) Q at G = 0, given S = Q.T.
Tensor3 tangent(const Tensor3& s, const Eigen::MatrixXd& g) {
  const int k = s.dim();
  Tensor3 out(k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) {
        double sum = 0.0;
        for (int d = 0; d < k; ++d) sum += g(a, d) * s(d, b, c) + g(b, d) * s(a, d, c) + g(c, d) * s(a, b, d);
        out(a, b, c) = sum;
      }
  return out;
}

Eigen::VectorXd flatten(const Tensor3& t) {
  const int k = t.dim();
  Eigen::VectorXd v(k * k * k);
  int i = 0;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c) v[i++] = t(a, b, c);
  return v;
}

}  // namespace

std::optional<CongruenceWitness> find_congruence(const Tensor3& from, const Tensor3& to,
                                                 double tolerance) {
  if (from.dim() != to.dim()) return std::nullopt;
  const int k = from.dim();
  const auto gens = skew_generators(k);

  std::vector<Eigen::MatrixXd> starts;
  const double angles[] = {0.0, std::numbers::pi / 4, std::numbers::pi / 3, std::numbers::pi / 6};
  for (const auto& p : signed_permutations(k)) {
    for (const double angle : angles) {
      if (angle == 0.0) {
        starts.push_back(p);
        continue;
      }
      for (const auto& g : gens) starts.push_back((angle * g).exp() * p);
    }
  }

  for (Eigen::MatrixXd q : starts) {
    for (int it = 0; it < 60; ++it) {
      const Tensor3 s = from.transformed(q);
      const Eigen::VectorXd r = flatten(s) - flatten(to);
      if (r.cwiseAbs().maxCoeff() <= 0.01 * tolerance) break;
      Eigen::MatrixXd jac(r.size(), static_cast<Eigen::Index>(gens.size()));
      for (std::size_t g = 0; g < gens.size(); ++g) jac.col(static_cast<Eigen::Index>(g)) = flatten(tangent(s, gens[g]));
      const Eigen::VectorXd w = jac.colPivHouseholderQr().solve(-r);
      if (!w.allFinite()) break;
      Eigen::MatrixXd step = Eigen::MatrixXd::Zero(k, k);
      for (std::size_t g = 0; g < gens.size(); ++g) step += w[static_cast<Eigen::Index>(g)] * gens[g];
      q = step.exp() * q;
    }
    const double residual = from.transformed(q).max_abs_difference(to);
    if (residual <= tolerance) return CongruenceWitness{q, residual};
  }
  return std::nullopt;
}

}  // namespace qutrit
