#include "qutrit/gellmann.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace qutrit {
namespace {

const Complex I{0.0, 1.0};

std::array<Matrix3c, 8> build_basis() {
  std::array<Matrix3c, 8> l;
  for (auto& m : l) m.setZero();
  l[0](0, 1) = 1.0;
  l[0](1, 0) = 1.0;
  l[1](0, 1) = -I;
  l[1](1, 0) = I;
  l[2](0, 0) = 1.0;
  l[2](1, 1) = -1.0;
  l[3](0, 2) = 1.0;
  l[3](2, 0) = 1.0;
  l[4](0, 2) = -I;
  l[4](2, 0) = I;
  l[5](1, 2) = 1.0;
  l[5](2, 1) = 1.0;
  l[6](1, 2) = -I;
  l[6](2, 1) = I;
  const double s = 1.0 / std::sqrt(3.0);
  l[7](0, 0) = s;
  l[7](1, 1) = s;
  l[7](2, 2) = -2.0 * s;
  return l;
}

}  // namespace

const std::array<Matrix3c, 8>& gellmann_basis() {
  static const std::array<Matrix3c, 8> basis = build_basis();
  return basis;
}

BlochVector lambda_axis(int label) {
  if (label < 1 || label > 8) {
    throw std::out_of_range("lambda label must be in 1..8, got " + std::to_string(label));
  }
  BlochVector e = BlochVector::Zero();
  e(label - 1) = 1.0;
  return e;
}

StructureConstants::StructureConstants() {
  const auto& l = gellmann_basis();
  for (int j = 0; j < 8; ++j) {
    for (int k = 0; k < 8; ++k) {
      const Matrix3c comm = l[j] * l[k] - l[k] * l[j];
      const Matrix3c anti = l[j] * l[k] + l[k] * l[j];
      for (int m = 0; m < 8; ++m) {
        f_[index(j, k, m)] = ((comm * l[m]).trace() / (4.0 * I)).real();
        d_[index(j, k, m)] = ((anti * l[m]).trace() / 4.0).real();
      }
    }
  }
  for (int j = 0; j < 8; ++j)
    for (int k = 0; k < 8; ++k)
      for (int m = 0; m < 8; ++m)
        if (d_[index(j, k, m)] != 0.0) d_nonzero_.push_back({j, k, m, d_[index(j, k, m)]});
}

const StructureConstants& structure_constants() {
  static const StructureConstants constants;
  return constants;
}

Matrix3c dot_lambda(const BlochVector& n) {
  const double s = 1.0 / std::sqrt(3.0);
  Matrix3c m;
  m(0, 0) = n(2) + s * n(7);
  m(0, 1) = Complex(n(0), -n(1));
  m(0, 2) = Complex(n(3), -n(4));
  m(1, 0) = Complex(n(0), n(1));
  m(1, 1) = -n(2) + s * n(7);
  m(1, 2) = Complex(n(5), -n(6));
  m(2, 0) = Complex(n(3), n(4));
  m(2, 1) = Complex(n(5), n(6));
  m(2, 2) = -2.0 * s * n(7);
  return m;
}

BlochVector star(const BlochVector& n, const BlochVector& m) {
  BlochVector out = BlochVector::Zero();
  for (const auto& e : structure_constants().d_nonzero()) out(e.l) += e.value * n(e.j) * m(e.k);
  return std::sqrt(3.0) * out;
}

Matrix3c bloch_to_density(const BlochVector& n) {
  const auto& l = gellmann_basis();
  Matrix3c h = Matrix3c::Zero();
  for (int k = 0; k < 8; ++k) h += n(k) * l[k];
  return (Matrix3c::Identity() + std::sqrt(3.0) * h) / 3.0;
}

bool is_hermitian(const Matrix3c& m, double tolerance) {
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tolerance;
}

BlochVector density_to_bloch(const Matrix3c& rho) {
  if (!is_hermitian(rho)) {
    throw std::invalid_argument("density_to_bloch: matrix is not Hermitian");
  }
  const Complex tr = rho.trace();
  if (std::abs(tr - 1.0) > tol::symmetry) {
    throw std::invalid_argument("density_to_bloch: trace is " + std::to_string(tr.real()) +
                                ", expected 1");
  }
  const auto& l = gellmann_basis();
  const double half_root3 = std::sqrt(3.0) / 2.0;
  BlochVector n;
  for (int k = 0; k < 8; ++k) n(k) = half_root3 * (rho * l[k]).trace().real();
  return n;
}

double square_identity_residual(const BlochVector& n) {
  const auto& l = gellmann_basis();
  Matrix3c h = Matrix3c::Zero();
  for (int k = 0; k < 8; ++k) h += n(k) * l[k];
  const BlochVector nn = star(n, n);
  Matrix3c rhs = (2.0 / 3.0) * n.squaredNorm() * Matrix3c::Identity();
  for (int k = 0; k < 8; ++k) rhs += (nn(k) / std::sqrt(3.0)) * l[k];
  return (h * h - rhs).cwiseAbs().maxCoeff();
}

}  // namespace qutrit
