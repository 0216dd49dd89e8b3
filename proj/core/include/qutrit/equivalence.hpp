#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qutrit/section_spec.hpp"
#include "qutrit/types.hpp"

namespace qutrit {

/// Element of SU(3). Construction validates U^dagger U = I and det U = 1.
class Unitary3 {
 public:
  /// Throws std::invalid_argument if m is not special unitary within tolerance.
  explicit Unitary3(const Matrix3c& m, double tolerance = 1e-10);

  static Unitary3 identity();
  /// Unitary m rescaled by det(m)^(-1/3).
  static Unitary3 phase_fixed(const Matrix3c& m);
  /// exp(i theta lambda_label).
  static Unitary3 exp_lambda(double theta, int label);

  const Matrix3c& matrix() const { return m_; }
  Unitary3 operator*(const Unitary3& other) const;
  Unitary3 adjoint() const;

 private:
  struct Unchecked {};
  Unitary3(const Matrix3c& m, Unchecked) : m_(m) {}

  Matrix3c m_;
};

/// M_jk = tr(lambda_j U lambda_k U^dagger) / 2. Orthogonal with det +1.
Matrix8 adjoint_action(const Unitary3& u);

/// Coordinate support of the image of spec's subspace under ad, if that image
/// is itself a coordinate subspace of the same dimension.
std::optional<SectionSpec> image_section(const SectionSpec& spec, const Matrix8& ad,
                                         double tolerance = tol::numeric);

/// Ad(U) maps the span of a onto the span of b.
bool spans_equivalent_under(const SectionSpec& a, const SectionSpec& b, const Unitary3& u,
                            double tolerance = tol::numeric);

struct NamedUnitary {
  std::string name;
  Unitary3 u;
};

/// Conjugations used to relate standard sections: the phase-fixed diagonals
/// diag(1,1,i), diag(1,i,1), diag(i,1,1); exp(i pi/4 lambda_j) and
/// exp(i pi/2 lambda_j) for j in {1,2,3,5,7}; the cyclic permutation matrix.
std::vector<NamedUnitary> catalog_generators();

struct Witness {
  SectionSpec from;
  SectionSpec to;
  NamedUnitary unitary;
};

/// Every explicit equivalence asserted for the standard two-, three- and
/// four-sections, each with the conjugation that establishes it.
std::vector<Witness> witness_catalog();

/// Edge of the search: `word` is the product of generator names, applied
/// right to left.
struct DiscoveredEdge {
  SectionSpec from;
  SectionSpec to;
  std::string word;
};

struct UnitaryPartition {
  int k = 0;
  std::vector<std::vector<SectionSpec>> classes;  // each sorted, ordered by first member
  std::vector<DiscoveredEdge> spanning_edges;     // one edge per union performed
  /// Pairs of classes that no catalog product connects, yet which share
  /// geometric shape and fingerprint. Equivalence is undecided for these.
  std::vector<std::pair<SectionSpec, SectionSpec>> unresolved;
  /// Classes whose members disagree on the fingerprint (would indicate a bug).
  std::vector<SectionSpec> inconsistent;
};

/// Union-find over all products of catalog generators of length <= max_depth.
/// k in {2, 3}.
UnitaryPartition partition_unitary_classes(int k, int max_depth = 3);

}  // namespace qutrit
