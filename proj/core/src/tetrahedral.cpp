#include "qutrit/tetrahedral.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

#include "qutrit/equivalence.hpp"
#include "qutrit/mesh.hpp"
#include "qutrit/section_spec.hpp"

namespace qutrit {

SignedPermutation3::SignedPermutation3(std::array<int, 3> perm, std::array<int, 3> sign)
    : perm_(perm), sign_(sign) {
  std::array<int, 3> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<int, 3>{0, 1, 2}) throw std::invalid_argument("SignedPermutation3: not a permutation");
  for (const int s : sign)
    if (s != 1 && s != -1) throw std::invalid_argument("SignedPermutation3: signs must be +-1");
}

SignedPermutation3 SignedPermutation3::from_matrix(const Eigen::Matrix3d& m) {
  std::array<int, 3> perm{-1, -1, -1};
  std::array<int, 3> sign{0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      const double v = m(i, j);
      if (v == 0.0) continue;
      if ((v != 1.0 && v != -1.0) || perm[i] != -1) {
        throw std::invalid_argument("SignedPermutation3: not a signed permutation matrix");
      }
      perm[i] = j;
      sign[i] = v > 0 ? 1 : -1;
    }
    if (perm[i] == -1) throw std::invalid_argument("SignedPermutation3: empty row");
  }
  return {perm, sign};
}

Eigen::Matrix3d SignedPermutation3::matrix() const {
  Eigen::Matrix3d m = Eigen::Matrix3d::Zero();
  for (int i = 0; i < 3; ++i) m(i, perm_[i]) = sign_[i];
  return m;
}

int SignedPermutation3::determinant() const { return static_cast<int>(std::lround(matrix().determinant())); }

int SignedPermutation3::trace() const {
  int t = 0;
  for (int i = 0; i < 3; ++i)
    if (perm_[i] == i) t += sign_[i];
  return t;
}

int SignedPermutation3::order() const {
  SignedPermutation3 p = *this;
  int n = 1;
  while (p != identity()) {
    p = p * *this;
    ++n;
  }
  return n;
}

SignedPermutation3 SignedPermutation3::operator*(const SignedPermutation3& other) const {
  // (AB)_{i, other.perm[perm[i]]} = sign[i] * other.sign[perm[i]].
  std::array<int, 3> perm{};
  std::array<int, 3> sign{};
  for (int i = 0; i < 3; ++i) {
    perm[i] = other.perm_[perm_[i]];
    sign[i] = sign_[i] * other.sign_[perm_[i]];
  }
  return {perm, sign};
}

SignedPermutation3 SignedPermutation3::inverse() const {
  return from_matrix(matrix().transpose());
}

std::vector<SignedPermutation3> all_signed_permutations() {
  std::vector<SignedPermutation3> out;
  std::array<int, 3> perm{0, 1, 2};
  do {
    for (int bits = 0; bits < 8; ++bits) {
      out.emplace_back(perm, std::array<int, 3>{bits & 1 ? -1 : 1, bits & 2 ? -1 : 1, bits & 4 ? -1 : 1});
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<SignedPermutation3> generate_td() {
  std::vector<SignedPermutation3> out;
  for (const auto& r : all_signed_permutations())
    if (r.determinant() == 1) out.push_back(r);
  return out;
}

std::string_view to_string(TdClassLabel label) {
  switch (label) {
    case TdClassLabel::E: return "E";
    case TdClassLabel::C3: return "C3";
    case TdClassLabel::C2: return "C2";
    case TdClassLabel::S4: return "S4";
    case TdClassLabel::SigmaD: return "sigma_d";
  }
  return "?";
}

int expected_class_size(TdClassLabel label) {
  switch (label) {
    case TdClassLabel::E: return 1;
    case TdClassLabel::C3: return 8;
    case TdClassLabel::C2: return 3;
    case TdClassLabel::S4: return 6;
    case TdClassLabel::SigmaD: return 6;
  }
  return 0;
}

namespace {

Matrix8 reordered_adjoint(const SignedPermutation3& r) {
  const Matrix8 ad = adjoint_action(Unitary3(r.matrix().cast<Complex>()));
  Matrix8 m;
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) m(i, j) = ad(kBlockOrder[i], kBlockOrder[j]);
  return m;
}

BlockDecomposition split(const Matrix8& m) {
  BlockDecomposition b;
  b.t1 = m.block<3, 3>(0, 0);
  b.t2 = m.block<3, 3>(3, 3);
  b.e = m.block<2, 2>(6, 6);
  b.leakage = (m - b.assembled()).cwiseAbs().maxCoeff();
  return b;
}

TdClassLabel label_for(const SignedPermutation3& r) {
  switch (r.order()) {
    case 1: return TdClassLabel::E;
    case 3: return TdClassLabel::C3;
    case 4: return TdClassLabel::S4;
    default: break;
  }
  return split(reordered_adjoint(r)).t2.determinant() > 0 ? TdClassLabel::C2 : TdClassLabel::SigmaD;
}

std::array<double, 3> table_row(TdClassLabel label) {
  switch (label) {
    case TdClassLabel::E: return {3, 3, 2};
    case TdClassLabel::C3: return {0, 0, -1};
    case TdClassLabel::C2: return {-1, -1, 2};
    case TdClassLabel::S4: return {1, -1, 0};
    case TdClassLabel::SigmaD: return {-1, 1, 0};
  }
  return {};
}

}  // namespace

Matrix8 BlockDecomposition::assembled() const {
  Matrix8 m = Matrix8::Zero();
  m.block<3, 3>(0, 0) = t1;
  m.block<3, 3>(3, 3) = t2;
  m.block<2, 2>(6, 6) = e;
  return m;
}

BlockDecomposition block_decompose(const SignedPermutation3& r, double tolerance) {
  if (r.determinant() != 1) throw std::domain_error("block_decompose: element is not in SO(3)");
  BlockDecomposition b = split(reordered_adjoint(r));
  if (b.leakage > tolerance) throw std::domain_error("block_decompose: Ad(R) is not block diagonal");
  return b;
}

std::map<TdClassLabel, std::vector<SignedPermutation3>> conjugacy_classes(
    const std::vector<SignedPermutation3>& group) {
  const std::set<SignedPermutation3> members(group.begin(), group.end());
  for (const auto& a : group)
    for (const auto& b : group)
      if (!members.count(a * b)) throw std::runtime_error("conjugacy_classes: group is not closed");

  std::map<TdClassLabel, std::vector<SignedPermutation3>> out;
  std::set<SignedPermutation3> seen;
  for (const auto& x : group) {
    if (seen.count(x)) continue;
    std::set<SignedPermutation3> cls;
    for (const auto& g : group) cls.insert(g * x * g.inverse());
    seen.insert(cls.begin(), cls.end());
    const TdClassLabel label = label_for(x);
    if (out.count(label)) throw std::runtime_error("conjugacy_classes: two classes share a label");
    out[label] = std::vector<SignedPermutation3>(cls.begin(), cls.end());
  }
  for (const TdClassLabel label : kTdClasses) {
    if (!out.count(label) || static_cast<int>(out[label].size()) != expected_class_size(label)) {
      throw std::runtime_error("conjugacy_classes: unexpected class structure");
    }
  }
  return out;
}

CharacterReport character_table_check(const std::vector<SignedPermutation3>& group) {
  CharacterReport report;
  const auto classes = conjugacy_classes(group);
  for (const auto& [label, members] : classes) {
    CharacterRow row;
    row.label = label;
    row.size = static_cast<int>(members.size());
    row.expected = table_row(label);
    bool first = true;
    bool constant = true;
    for (const auto& r : members) {
      const BlockDecomposition b = block_decompose(r);
      report.max_leakage = std::max(report.max_leakage, b.leakage);
      const std::array<double, 3> chi{b.t1.trace(), b.t2.trace(), b.e.trace()};
      if (std::abs(chi[0] - r.trace()) > tol::numeric) report.t1_trace_equals_r = false;
      if (first) {
        row.t1 = chi[0];
        row.t2 = chi[1];
        row.e = chi[2];
        first = false;
      } else if (std::abs(chi[0] - row.t1) > tol::numeric || std::abs(chi[1] - row.t2) > tol::numeric ||
                 std::abs(chi[2] - row.e) > tol::numeric) {
        constant = false;
      }
    }
    const std::array<double, 3> got{row.t1, row.t2, row.e};
    const char* names[] = {"T1", "T2", "E"};
    row.matched = constant;
    for (int i = 0; i < 3; ++i) {
      if (std::abs(got[i] - row.expected[i]) <= tol::numeric) {
        ++report.matched_values;
      } else {
        row.matched = false;
        report.mismatches.push_back(std::string(to_string(label)) + "/" + names[i] + ": got " +
                                    std::to_string(got[i]) + ", expected " + std::to_string(row.expected[i]));
      }
    }
    if (!constant) report.mismatches.push_back(std::string(to_string(label)) + ": character not constant on class");
    report.rows.push_back(row);
  }
  if (!report.t1_trace_equals_r) report.mismatches.push_back("chi_T1(R) differs from tr R");
  return report;
}

DeterminantReport determinant_signs(const std::vector<SignedPermutation3>& group) {
  DeterminantReport report;
  report.group_size = static_cast<int>(group.size());
  for (const auto& r : group) {
    const BlockDecomposition b = block_decompose(r);
    const double d1 = b.t1.determinant();
    const double d2 = b.t2.determinant();
    const double de = b.e.determinant();
    const double dad = adjoint_action(Unitary3(r.matrix().cast<Complex>())).determinant();
    const TdClassLabel label = label_for(r);
    const bool proper = label == TdClassLabel::E || label == TdClassLabel::C3 || label == TdClassLabel::C2;
    if (std::abs(d1 - 1.0) <= tol::numeric) ++report.det_t1_positive;
    if (proper && std::abs(d2 - 1.0) <= tol::numeric) ++report.det_t2_positive_proper;
    if (!proper && std::abs(d2 + 1.0) <= tol::numeric) ++report.det_t2_negative_improper;
    if (std::abs(d2 * de - 1.0) <= tol::numeric) ++report.det_e_compensates;
    if (std::abs(dad - 1.0) <= 1e-10) ++report.det_ad_positive;
  }
  const int n = report.group_size;
  if (report.det_t1_positive != n) report.mismatches.push_back("det T1 != +1 for some element");
  if (report.det_t2_positive_proper + report.det_t2_negative_improper != n) {
    report.mismatches.push_back("det T2 sign pattern differs from proper/improper split");
  }
  if (report.det_e_compensates != n) report.mismatches.push_back("det E does not compensate det T2");
  if (report.det_ad_positive != n) report.mismatches.push_back("det Ad(R) != +1 for some element");
  return report;
}

Eigen::Matrix3d default_r0() {
  Eigen::Matrix3d r0;
  r0 << 0, 0, 1, 0, -1, 0, 1, 0, 0;
  return r0;
}

bool verify_r0_intertwiner(const std::vector<SignedPermutation3>& group, const Eigen::Matrix3d& r0,
                           double tolerance) {
  for (const auto& r : group) {
    const BlockDecomposition b = block_decompose(r);
    if ((r0 * b.t1 * r0.transpose() - r.matrix()).cwiseAbs().maxCoeff() > tolerance) return false;
  }
  return true;
}

StabilizerScan stabilizer_scan() {
  StabilizerScan scan;
  const auto span146 = SectionSpec::parse("146");
  const auto span257 = SectionSpec::parse("257");
  const auto span38 = SectionSpec::parse("38");
  for (const auto& r : all_signed_permutations()) {
    ++scan.candidates;
    if (r.determinant() != 1) continue;
    const Unitary3 u(r.matrix().cast<Complex>());
    if (!spans_equivalent_under(span146, span146, u)) continue;
    scan.members.push_back(r);
    scan.preserves_257 = scan.preserves_257 && spans_equivalent_under(span257, span257, u);
    scan.preserves_38 = scan.preserves_38 && spans_equivalent_under(span38, span38, u);
  }
  return scan;
}

ObesityReport obesity_check() {
  const auto spec = SectionSpec::parse("146");
  const std::array<Eigen::Vector3d, 4> vertices{Eigen::Vector3d(1, 1, 1), Eigen::Vector3d(1, -1, -1),
                                                Eigen::Vector3d(-1, 1, -1), Eigen::Vector3d(-1, -1, 1)};
  ObesityReport report;
  for (int i = 0; i < 4; ++i) {
    report.vertex_radii[i] = section_radius(spec, vertices[i]);
    report.face_radii[i] = section_radius(spec, -vertices[i]);
  }
  // Regular tetrahedron with unit circumradius: centroid to face centre.
  const Eigen::Vector3d v0 = vertices[0].normalized();
  const Eigen::Vector3d face = (vertices[1].normalized() + vertices[2].normalized() + vertices[3].normalized()) / 3.0;
  report.flat_reference = std::abs(face.dot(v0));
  return report;
}

}  // namespace qutrit
