#pragma once

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qutrit/types.hpp"

namespace qutrit {

/// 3x3 matrix with one entry +-1 in each row and column:
/// row i has sign[i] in column perm[i].
class SignedPermutation3 {
 public:
  SignedPermutation3(std::array<int, 3> perm, std::array<int, 3> sign);
  /// Throws std::invalid_argument unless m is a signed permutation matrix.
  static SignedPermutation3 from_matrix(const Eigen::Matrix3d& m);
  static SignedPermutation3 identity() { return {{0, 1, 2}, {1, 1, 1}}; }

  Eigen::Matrix3d matrix() const;
  int determinant() const;
  int trace() const;
  /// Smallest n >= 1 with R^n = I.
  int order() const;
  SignedPermutation3 operator*(const SignedPermutation3& other) const;
  SignedPermutation3 inverse() const;

  const std::array<int, 3>& perm() const { return perm_; }
  const std::array<int, 3>& sign() const { return sign_; }
  auto operator<=>(const SignedPermutation3&) const = default;

 private:
  std::array<int, 3> perm_;
  std::array<int, 3> sign_;
};

/// All 48 signed permutation matrices.
std::vector<SignedPermutation3> all_signed_permutations();

/// The 24 with determinant +1.
std::vector<SignedPermutation3> generate_td();

enum class TdClassLabel { E, C3, C2, S4, SigmaD };
inline constexpr TdClassLabel kTdClasses[] = {TdClassLabel::E, TdClassLabel::C3, TdClassLabel::C2,
                                              TdClassLabel::S4, TdClassLabel::SigmaD};
std::string_view to_string(TdClassLabel label);
int expected_class_size(TdClassLabel label);

/// Conjugacy classes, labelled by element order and the sign of det T2:
/// order 1 -> E, 3 -> C3, 4 -> S4, order 2 with det T2 = +1 -> C2, with -1 -> SigmaD.
/// Throws std::runtime_error if the group is not closed or the classes do not
/// have the expected sizes.
std::map<TdClassLabel, std::vector<SignedPermutation3>> conjugacy_classes(
    const std::vector<SignedPermutation3>& group);

/// Ad(R) in the ordered basis J = (l2, l5, l7), X = (l1, l4, l6), Q = (l3, l8).
struct BlockDecomposition {
  Eigen::Matrix3d t1;  // on J
  Eigen::Matrix3d t2;  // on X
  Eigen::Matrix2d e;   // on Q
  double leakage = 0.0;  // largest off-block entry

  Matrix8 assembled() const;
};

/// Zero-based BlochVector indices in J, X, Q order.
inline constexpr std::array<int, 8> kBlockOrder{1, 4, 6, 0, 3, 5, 2, 7};

/// Throws std::domain_error if the off-block leakage exceeds tolerance.
BlockDecomposition block_decompose(const SignedPermutation3& r, double tolerance = tol::numeric);

struct CharacterRow {
  TdClassLabel label;
  int size = 0;
  double t1 = 0.0;
  double t2 = 0.0;
  double e = 0.0;
  std::array<double, 3> expected{};
  bool matched = false;
};

struct CharacterReport {
  std::vector<CharacterRow> rows;
  int matched_values = 0;  // out of 15
  double max_leakage = 0.0;
  bool t1_trace_equals_r = true;  // chi_T1(R) = tr R for every R
  std::vector<std::string> mismatches;

  bool passed() const { return mismatches.empty() && matched_values == 15; }
};

/// Characters of T1, T2, E per class against the T_d table.
CharacterReport character_table_check(const std::vector<SignedPermutation3>& group);

struct DeterminantReport {
  int det_t1_positive = 0;
  int det_t2_positive_proper = 0;    // E, C3, C2 members with det T2 = +1
  int det_t2_negative_improper = 0;  // S4, SigmaD members with det T2 = -1
  int det_e_compensates = 0;         // det T2 * det E = +1
  int det_ad_positive = 0;
  int group_size = 0;
  std::vector<std::string> mismatches;

  bool passed() const { return mismatches.empty(); }
};

DeterminantReport determinant_signs(const std::vector<SignedPermutation3>& group);

/// R0 = [[0,0,1],[0,-1,0],[1,0,0]].
Eigen::Matrix3d default_r0();

/// R0 T1(R) R0^T = R for every R in the group.
bool verify_r0_intertwiner(const std::vector<SignedPermutation3>& group,
                           const Eigen::Matrix3d& r0 = default_r0(), double tolerance = tol::numeric);

struct StabilizerScan {
  std::vector<SignedPermutation3> members;  // det +1, preserve span(1,4,6)
  bool preserves_257 = true;
  bool preserves_38 = true;
  int candidates = 0;
};

StabilizerScan stabilizer_scan();

struct ObesityReport {
  std::array<double, 4> vertex_radii{};
  std::array<double, 4> face_radii{};
  double flat_reference = 0.0;  // inradius of the regular tetrahedron with circumradius 1
};

/// Boundary radii of the (146) section along the four vertex directions
/// (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1) and their opposites.
ObesityReport obesity_check();

}  // namespace qutrit
