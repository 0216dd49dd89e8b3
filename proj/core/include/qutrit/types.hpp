#pragma once

#include <complex>

#include <Eigen/Dense>

namespace qutrit {

using Complex = std::complex<double>;

/// 3x3 complex matrix; used for density matrices, lambda-matrices and n.lambda.
using Matrix3c = Eigen::Matrix3cd;
using Hermitian3 = Matrix3c;

/// Point n in R^8 labelling rho(n) = (I + sqrt(3) n.lambda) / 3.
/// Component i holds the coefficient of lambda_{i+1}.
using BlochVector = Eigen::Matrix<double, 8, 1>;

using Matrix8 = Eigen::Matrix<double, 8, 8>;

namespace tol {

/// Algebraic identities on exactly representable inputs.
inline constexpr double numeric = 1e-12;
/// Hermiticity checks.
inline constexpr double symmetry = 1e-12;
/// Membership / boundary predicates.
inline constexpr double membership = 1e-9;

}  // namespace tol

}  // namespace qutrit
