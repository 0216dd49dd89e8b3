#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

namespace qutrit {

/// Dense k x k x k real tensor, k <= 4.
class Tensor3 {
 public:
  explicit Tensor3(int dim = 0) : dim_(dim), data_(static_cast<std::size_t>(dim * dim * dim), 0.0) {}

  int dim() const { return dim_; }
  double& operator()(int a, int b, int c) { return data_[index(a, b, c)]; }
  double operator()(int a, int b, int c) const { return data_[index(a, b, c)]; }

  double squared_norm() const;
  double max_abs() const;
  double max_abs_difference(const Tensor3& other) const;

  /// (Q.T)_abc = Q_ad Q_be Q_cf T_def.
  Tensor3 transformed(const Eigen::MatrixXd& q) const;

  /// T(x, x, x).
  double contract(const Eigen::VectorXd& x) const;

  /// v_a = T_abb.
  Eigen::VectorXd trace_vector() const;

 private:
  std::size_t index(int a, int b, int c) const {
    return static_cast<std::size_t>((a * dim_ + b) * dim_ + c);
  }

  int dim_;
  std::vector<double> data_;
};

/// Polynomial invariants of a tensor under x -> Q x, Q in O(k):
/// |T|^2, |v|^2, spectrum of M_ab = T_acd T_bcd, v.M.v, tr(N^2) with
/// N_ab = T_abc v_c, and T(v, v, v)^2.
Eigen::VectorXd orthogonal_invariants(const Tensor3& t);

struct CongruenceWitness {
  Eigen::MatrixXd q;  // orthogonal, q.from == to
  double residual = 0.0;
};

/// Searches for Q in O(k) with Q.from = to (max-abs residual <= tolerance).
/// Gauss-Newton on the group, started from every signed permutation
/// composed with a few fixed rotations.
std::optional<CongruenceWitness> find_congruence(const Tensor3& from, const Tensor3& to,
                                                 double tolerance);

/// All k x k signed permutation matrices.
std::vector<Eigen::MatrixXd> signed_permutations(int k);

}  // namespace qutrit
