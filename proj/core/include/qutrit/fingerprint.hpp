#pragma once

#include <vector>

#include "qutrit/section_spec.hpp"

namespace qutrit {

/// Conjugation invariants of the real span of a set of lambda-matrices.
struct EquivalenceFingerprint {
  int k = 0;
  /// Some orthonormal a, b in the span with {a.lambda, b.lambda} = 0.
  bool has_anticommuting_pair = false;
  /// [A, B] stays inside the span for all A, B in it.
  bool commutator_closed = false;
  /// Singular values (descending) of the map a ^ b -> [a.lambda, b.lambda]
  /// on orthonormal bivectors, Frobenius norm.
  std::vector<double> commutator_norms;
  /// (a.lambda)^2 and (b.lambda)^2 commute for all a, b in the span.
  bool squares_commute = false;

  bool equals(const EquivalenceFingerprint& other, double tolerance = 1e-9) const;
};

EquivalenceFingerprint fingerprint(const SectionSpec& spec);

}  // namespace qutrit
