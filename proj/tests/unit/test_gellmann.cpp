#include <gtest/gtest.h>

#include <cmath>

#include "expected.hpp"
#include "qutrit/gellmann.hpp"
#include "qutrit/sampling.hpp"

using namespace qutrit;

namespace {

int permutation_sign(int a, int b, int c) {
  // sign of the permutation taking (0,1,2) to (a,b,c)
  return (a < b ? 1 : -1) * (a < c ? 1 : -1) * (b < c ? 1 : -1);
}

}  // namespace

TEST(GellMann, TraceOrthonormality) {
  const auto& l = gellmann_basis();
  for (int j = 0; j < 8; ++j) {
    EXPECT_NEAR(std::abs(l[j].trace()), 0.0, tol::numeric);
    EXPECT_TRUE(is_hermitian(l[j]));
    for (int k = 0; k < 8; ++k) {
      const Complex t = (l[j] * l[k]).trace();
      EXPECT_NEAR(t.real(), j == k ? 2.0 : 0.0, tol::numeric);
      EXPECT_NEAR(t.imag(), 0.0, tol::numeric);
    }
  }
}

TEST(GellMann, DotLambdaMatchesBasisExpansion) {
  Sampler rng(11);
  const auto& l = gellmann_basis();
  for (int i = 0; i < 100; ++i) {
    const BlochVector n = rng.ball_point();
    Matrix3c sum = Matrix3c::Zero();
    for (int k = 0; k < 8; ++k) sum += n[k] * l[k];
    EXPECT_LE((sum - dot_lambda(n)).cwiseAbs().maxCoeff(), tol::numeric);
  }
}

TEST(GellMann, StructureConstantValues) {
  const auto& sc = structure_constants();
  for (const auto& c : expected::f_values()) {
    const int j = c.j - 1, k = c.k - 1, l = c.l - 1;
    EXPECT_NEAR(sc.f(j, k, l), c.value, tol::numeric) << c.j << c.k << c.l;
    EXPECT_NEAR(sc.f(k, l, j), c.value, tol::numeric);
    EXPECT_NEAR(sc.f(k, j, l), -c.value, tol::numeric);
  }
  for (const auto& c : expected::d_values()) {
    EXPECT_NEAR(sc.d(c.j - 1, c.k - 1, c.l - 1), c.value, tol::numeric) << c.j << c.k << c.l;
    EXPECT_NEAR(sc.d(c.l - 1, c.j - 1, c.k - 1), c.value, tol::numeric);
  }
}

TEST(GellMann, NoOtherNonzeroConstants) {
  const auto& sc = structure_constants();
  int f_nonzero = 0, d_nonzero = 0;
  for (int j = 0; j < 8; ++j)
    for (int k = j; k < 8; ++k)
      for (int l = k; l < 8; ++l) {
        if (j < k && k < l && std::abs(sc.f(j, k, l)) > tol::numeric) ++f_nonzero;
        if (std::abs(sc.d(j, k, l)) > tol::numeric) ++d_nonzero;
      }
  EXPECT_EQ(f_nonzero, 9);
  EXPECT_EQ(d_nonzero, 16);
}

TEST(GellMann, TensorSymmetriesAreExact) {
  const auto& sc = structure_constants();
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (int j = 0; j < 8; ++j)
    for (int k = 0; k < 8; ++k)
      for (int l = 0; l < 8; ++l) {
        const int idx[3] = {j, k, l};
        for (const auto& p : perms) {
          const int s = permutation_sign(p[0], p[1], p[2]);
          EXPECT_EQ(sc.f(idx[p[0]], idx[p[1]], idx[p[2]]), s * sc.f(j, k, l));
          EXPECT_EQ(sc.d(idx[p[0]], idx[p[1]], idx[p[2]]), sc.d(j, k, l));
        }
      }
}

TEST(GellMann, CommutatorAndAnticommutatorExpansion) {
  const auto& l = gellmann_basis();
  const auto& sc = structure_constants();
  const Complex i(0.0, 1.0);
  for (int j = 0; j < 8; ++j)
    for (int k = 0; k < 8; ++k) {
      Matrix3c comm = Matrix3c::Zero();
      Matrix3c anti = (j == k ? 4.0 / 3.0 : 0.0) * Matrix3c::Identity();
      for (int m = 0; m < 8; ++m) {
        comm += 2.0 * i * sc.f(j, k, m) * l[m];
        anti += 2.0 * sc.d(j, k, m) * l[m];
      }
      EXPECT_LE((l[j] * l[k] - l[k] * l[j] - comm).cwiseAbs().maxCoeff(), tol::numeric);
      EXPECT_LE((l[j] * l[k] + l[k] * l[j] - anti).cwiseAbs().maxCoeff(), tol::numeric);
    }
}

TEST(GellMann, StarProductIsSymmetricBilinear) {
  Sampler rng(3);
  for (int i = 0; i < 50; ++i) {
    const BlochVector a = rng.ball_point(), b = rng.ball_point(), c = rng.ball_point();
    EXPECT_LE((star(a, b) - star(b, a)).cwiseAbs().maxCoeff(), tol::numeric);
    EXPECT_LE((star(2.0 * a + c, b) - 2.0 * star(a, b) - star(c, b)).cwiseAbs().maxCoeff(), tol::numeric);
  }
}

TEST(GellMann, SquareIdentityHolds) {
  Sampler rng(5);
  for (int i = 0; i < 200; ++i) EXPECT_LE(square_identity_residual(rng.ball_point()), tol::numeric);
}

TEST(GellMann, DensityRoundTrip) {
  Sampler rng(7);
  for (int i = 0; i < 200; ++i) {
    const BlochVector n = rng.ball_point();
    const Matrix3c rho = bloch_to_density(n);
    EXPECT_NEAR(rho.trace().real(), 1.0, tol::numeric);
    EXPECT_TRUE(is_hermitian(rho));
    EXPECT_LE((density_to_bloch(rho) - n).cwiseAbs().maxCoeff(), tol::numeric);
  }
}

TEST(GellMann, DensityToBlochRejectsBadInput) {
  Matrix3c m = Matrix3c::Identity();
  EXPECT_THROW(density_to_bloch(m), std::invalid_argument);  // trace 3
  m = Matrix3c::Identity() / 3.0;
  m(0, 1) = Complex(0.0, 0.2);
  EXPECT_THROW(density_to_bloch(m), std::invalid_argument);  // not Hermitian
}

TEST(GellMann, LambdaAxis) {
  for (int a = 1; a <= 8; ++a) {
    const BlochVector e = lambda_axis(a);
    EXPECT_EQ(e.sum(), 1.0);
    EXPECT_EQ(e[a - 1], 1.0);
  }
}
