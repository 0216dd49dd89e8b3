#pragma once

#include <cstdint>
#include <random>

#include "qutrit/types.hpp"

namespace qutrit {

/// Seeded source of random test points. Deterministic for a given seed.
class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  double normal() { return normal_(engine_); }
  double uniform() { return uniform_(engine_); }

  /// Uniform on the unit sphere S^7.
  BlochVector unit_direction();
  /// Uniform in the closed unit ball of R^8.
  BlochVector ball_point();
  /// Normalized complex 3-vector with Gaussian components.
  Eigen::Vector3cd hilbert_vector();
  /// Bloch vector of |psi><psi| for a random psi.
  BlochVector pure_state();
  /// Haar-random element of SU(3).
  Matrix3c special_unitary();
  /// Random Hermitian matrix with unit trace (not necessarily positive).
  Matrix3c unit_trace_hermitian();

  std::mt19937_64& engine() { return engine_; }

 private:
  std::mt19937_64 engine_;
  std::normal_distribution<double> normal_{0.0, 1.0};
  std::uniform_real_distribution<double> uniform_{0.0, 1.0};
};

/// Independent stream seed derived from a master seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream);

}  // namespace qutrit
