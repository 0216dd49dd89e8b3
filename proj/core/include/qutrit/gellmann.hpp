#pragma once

#include <array>
#include <vector>

#include "qutrit/types.hpp"

namespace qutrit {

/// The eight Gell-Mann matrices; element i is lambda_{i+1}.
const std::array<Matrix3c, 8>& gellmann_basis();

/// Unit vector along lambda_label, label in 1..8.
BlochVector lambda_axis(int label);

/// Totally antisymmetric f and totally symmetric d tensors of su(3),
/// obtained from the trace formulas
///   f_jkl = tr([l_j, l_k] l_l) / 4i,   d_jkl = tr({l_j, l_k} l_l) / 4.
/// Indices are zero based: f(0, 1, 2) is f_123.
class StructureConstants {
 public:
  StructureConstants();

  double f(int j, int k, int l) const { return f_[index(j, k, l)]; }
  double d(int j, int k, int l) const { return d_[index(j, k, l)]; }

  struct Entry {
    int j, k, l;
    double value;
  };
  /// Nonzero d_jkl over all ordered index triples.
  const std::vector<Entry>& d_nonzero() const { return d_nonzero_; }

 private:
  static constexpr int index(int j, int k, int l) { return (j * 8 + k) * 8 + l; }

  std::array<double, 512> f_{};
  std::array<double, 512> d_{};
  std::vector<Entry> d_nonzero_;
};

/// Process-wide instance, built on first use.
const StructureConstants& structure_constants();

/// n.lambda written out entry by entry; does not go through the basis array
/// or the structure constants.
Matrix3c dot_lambda(const BlochVector& n);

/// Symmetric bilinear star product, (n * m)_l = sqrt(3) d_jkl n_j m_k.
BlochVector star(const BlochVector& n, const BlochVector& m);

/// rho(n) = (I + sqrt(3) sum_k n_k lambda_k) / 3.
Matrix3c bloch_to_density(const BlochVector& n);

/// Inverse of bloch_to_density: n_k = (sqrt(3)/2) tr(rho lambda_k).
/// Throws std::invalid_argument if rho is not Hermitian or tr rho != 1.
BlochVector density_to_bloch(const Matrix3c& rho);

bool is_hermitian(const Matrix3c& m, double tolerance = tol::symmetry);

/// Max-norm residual of (n.l)(n.l) - (2/3) n.n I - (1/sqrt 3) (n*n).l.
double square_identity_residual(const BlochVector& n);

}  // namespace qutrit
