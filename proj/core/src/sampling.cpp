#include "qutrit/sampling.hpp"

#include <cmath>

#include "qutrit/gellmann.hpp"

namespace qutrit {

BlochVector Sampler::unit_direction() {
  BlochVector v;
  do {
    for (int i = 0; i < 8; ++i) v[i] = normal();
  } while (v.norm() == 0.0);
  return v.normalized();
}

BlochVector Sampler::ball_point() {
  const BlochVector u = unit_direction();
  return std::pow(uniform(), 1.0 / 8.0) * u;
}

Eigen::Vector3cd Sampler::hilbert_vector() {
  Eigen::Vector3cd psi;
  do {
    for (int i = 0; i < 3; ++i) psi[i] = Complex(normal(), normal());
  } while (psi.norm() == 0.0);
  return psi.normalized();
}

BlochVector Sampler::pure_state() {
  const Eigen::Vector3cd psi = hilbert_vector();
  return density_to_bloch(psi * psi.adjoint());
}

Matrix3c Sampler::special_unitary() {
  Matrix3c z;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) z(i, j) = Complex(normal(), normal()) / std::sqrt(2.0);
  Eigen::HouseholderQR<Matrix3c> qr(z);
  Matrix3c q = qr.householderQ();
  const Matrix3c r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < 3; ++i) {
    const Complex d = r(i, i);
    if (std::abs(d) > 0.0) q.col(i) *= d / std::abs(d);
  }
  const Complex det = q.determinant();
  q /= std::pow(det, 1.0 / 3.0);
  return q;
}

Matrix3c Sampler::unit_trace_hermitian() {
  Matrix3c a;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a(i, j) = Complex(normal(), normal());
  Matrix3c h = 0.5 * (a + a.adjoint());
  h += ((1.0 - h.trace().real()) / 3.0) * Matrix3c::Identity();
  return h;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace qutrit
