#include "qutrit/equivalence.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>

#include "qutrit/fingerprint.hpp"
#include "qutrit/gellmann.hpp"
#include "qutrit/sections.hpp"

namespace qutrit {

Unitary3::Unitary3(const Matrix3c& m, double tolerance) : m_(m) {
  const double unitarity = (m.adjoint() * m - Matrix3c::Identity()).cwiseAbs().maxCoeff();
  if (unitarity > tolerance) throw std::invalid_argument("Unitary3: matrix is not unitary");
  if (std::abs(m.determinant() - Complex(1.0, 0.0)) > tolerance) {
    throw std::invalid_argument("Unitary3: determinant is not 1");
  }
}

Unitary3 Unitary3::identity() { return Unitary3(Matrix3c::Identity(), Unchecked{}); }

Unitary3 Unitary3::phase_fixed(const Matrix3c& m) {
  const Complex det = m.determinant();
  if (std::abs(det) == 0.0) throw std::invalid_argument("Unitary3::phase_fixed: singular matrix");
  return Unitary3(m / std::pow(det, 1.0 / 3.0));
}

Unitary3 Unitary3::exp_lambda(double theta, int label) {
  const Matrix3c& l = gellmann_basis().at(static_cast<std::size_t>(label - 1));
  Eigen::SelfAdjointEigenSolver<Matrix3c> eig(l);
  Eigen::Vector3cd phases;
  for (int i = 0; i < 3; ++i) phases[i] = std::exp(Complex(0.0, theta * eig.eigenvalues()[i]));
  const Matrix3c u = eig.eigenvectors() * phases.asDiagonal() * eig.eigenvectors().adjoint();
  return Unitary3(u);
}

Unitary3 Unitary3::operator*(const Unitary3& other) const { return Unitary3(m_ * other.m_, Unchecked{}); }

Unitary3 Unitary3::adjoint() const { return Unitary3(m_.adjoint(), Unchecked{}); }

Matrix8 adjoint_action(const Unitary3& u) {
  const auto& basis = gellmann_basis();
  const Matrix3c& m = u.matrix();
  const Matrix3c mh = m.adjoint();
  Matrix8 ad;
  for (int k = 0; k < 8; ++k) {
    const Matrix3c image = m * basis[k] * mh;
    for (int j = 0; j < 8; ++j) ad(j, k) = 0.5 * (basis[j] * image).trace().real();
  }
  return ad;
}

std::optional<SectionSpec> image_section(const SectionSpec& spec, const Matrix8& ad, double tolerance) {
  std::vector<int> support;
  for (int row = 0; row < 8; ++row) {
    double mass = 0.0;
    for (int a = 0; a < spec.size(); ++a) mass = std::max(mass, std::abs(ad(row, spec.axis(a))));
    if (mass > tolerance) support.push_back(row + 1);
  }
  if (static_cast<int>(support.size()) != spec.size()) return std::nullopt;
  return SectionSpec(support);
}

bool spans_equivalent_under(const SectionSpec& a, const SectionSpec& b, const Unitary3& u, double tolerance) {
  if (a.size() != b.size()) return false;
  const Matrix8 ad = adjoint_action(u);
  // Ad is orthogonal, so images inside span(b) already fill it.
  for (int i = 0; i < a.size(); ++i) {
    const BlochVector image = ad.col(a.axis(i));
    double outside = 0.0;
    for (int row = 0; row < 8; ++row)
      if (!b.contains(row + 1)) outside = std::max(outside, std::abs(image[row]));
    if (outside > tolerance) return false;
  }
  return true;
}

std::vector<NamedUnitary> catalog_generators() {
  const Complex i(0.0, 1.0);
  std::vector<NamedUnitary> g;
  g.push_back({"diag(1,1,i)", Unitary3::phase_fixed(Eigen::Vector3cd(1.0, 1.0, i).asDiagonal())});
  g.push_back({"diag(1,i,1)", Unitary3::phase_fixed(Eigen::Vector3cd(1.0, i, 1.0).asDiagonal())});
  g.push_back({"diag(i,1,1)", Unitary3::phase_fixed(Eigen::Vector3cd(i, 1.0, 1.0).asDiagonal())});
  for (const int j : {1, 2, 3, 5, 7}) {
    g.push_back({"exp(i pi/4 l" + std::to_string(j) + ")", Unitary3::exp_lambda(std::numbers::pi / 4, j)});
    g.push_back({"exp(i pi/2 l" + std::to_string(j) + ")", Unitary3::exp_lambda(std::numbers::pi / 2, j)});
  }
  Matrix3c cycle = Matrix3c::Zero();
  cycle(0, 1) = cycle(1, 2) = cycle(2, 0) = 1.0;
  g.push_back({"cycle(123)", Unitary3::phase_fixed(cycle)});
  return g;
}

std::vector<Witness> witness_catalog() {
  std::map<std::string, Unitary3> by_name;
  for (auto& g : catalog_generators()) by_name.emplace(g.name, g.u);
  const auto w = [&](const char* a, const char* b, const std::string& name) {
    return Witness{SectionSpec::parse(a), SectionSpec::parse(b), NamedUnitary{name, by_name.at(name)}};
  };
  const std::string d3 = "diag(1,1,i)", d2 = "diag(1,i,1)", d1 = "diag(i,1,1)";
  const std::string q1 = "exp(i pi/4 l1)", q2 = "exp(i pi/4 l2)", q3 = "exp(i pi/4 l3)";
  const std::string h2 = "exp(i pi/2 l2)", h5 = "exp(i pi/2 l5)", h7 = "exp(i pi/2 l7)";
  const std::string cyc = "cycle(123)";

  return {
      // Triangles.
      w("18", "28", q3), w("18", "38", q2), w("28", "38", q1),
      // Parabolas.
      w("34", "35", d3), w("36", "37", d3), w("34", "36", h2), w("35", "37", h2),
      // Ellipses.
      w("48", "58", d3), w("68", "78", d3), w("48", "68", h2), w("58", "78", h2),
      // Circles with an anticommuting pair.
      w("12", "13", q1), w("12", "23", q2), w("12", "45", h7), w("12", "67", h5),
      // Cones.
      w("128", "138", q1), w("138", "238", q3), w("138", "348", cyc),
      w("348", "358", d3), w("368", "378", d3), w("348", "368", h2), w("358", "378", h2),
      // Paraboloids.
      w("345", "367", h2),
      // Ellipsoids.
      w("468", "478", d2), w("568", "578", d2), w("468", "578", d3), w("458", "678", h2),
      // Obese tetrahedra.
      w("146", "157", d3), w("146", "247", d2), w("146", "256", d1),
      w("346", "347", d2), w("346", "356", d1), w("346", "357", d3), w("146", "346", q2),
      // RS1.
      w("134", "135", d3), w("136", "137", d3), w("134", "136", h2), w("135", "137", h2),
      w("234", "235", d3), w("236", "237", d3), w("234", "236", h2), w("235", "237", h2),
      w("134", "234", d2), w("135", "235", d2), w("136", "236", d1), w("137", "237", d1),
      // RS2: the RS1 witnesses with lambda_3 replaced by lambda_8.
      w("148", "158", d3), w("168", "178", d3), w("148", "168", h2), w("158", "178", h2),
      w("248", "258", d3), w("268", "278", d3), w("248", "268", h2), w("258", "278", h2),
      w("148", "248", d2), w("158", "258", d2), w("168", "268", d1), w("178", "278", d1),
      // Spherical four-sections.
      w("1245", "1267", h2), w("1267", "4567", h7),
  };
}

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

std::string shape_of(const SectionSpec& spec) { return match_shape(spec).shape; }

}  // namespace

UnitaryPartition partition_unitary_classes(int k, int max_depth) {
  if (k != 2 && k != 3) throw std::invalid_argument("partition_unitary_classes: k must be 2 or 3");
  const auto sections = enumerate_sections(k);
  std::map<SectionSpec, std::size_t> index;
  for (std::size_t i = 0; i < sections.size(); ++i) index.emplace(sections[i], i);

  const auto gens = catalog_generators();
  UnionFind uf(sections.size());
  UnitaryPartition out;
  out.k = k;

  // Breadth-first over words of increasing length.
  std::vector<std::pair<std::string, Unitary3>> layer{{"", Unitary3::identity()}};
  for (int depth = 1; depth <= max_depth; ++depth) {
    std::vector<std::pair<std::string, Unitary3>> next;
    for (const auto& [word, u] : layer) {
      for (const auto& g : gens) {
        const Unitary3 v = u * g.u;
        const std::string w = word.empty() ? g.name : word + " * " + g.name;
        const Matrix8 ad = adjoint_action(v);
        for (const auto& spec : sections) {
          const auto image = image_section(spec, ad);
          if (!image || *image == spec) continue;
          if (uf.unite(index.at(spec), index.at(*image))) out.spanning_edges.push_back({spec, *image, w});
        }
        next.emplace_back(w, v);
      }
    }
    layer = std::move(next);
  }

  std::map<std::size_t, std::vector<SectionSpec>> groups;
  for (std::size_t i = 0; i < sections.size(); ++i) groups[uf.find(i)].push_back(sections[i]);
  for (auto& [root, members] : groups) out.classes.push_back(members);

  std::vector<EquivalenceFingerprint> prints;
  std::vector<std::string> shapes;
  for (const auto& cls : out.classes) {
    prints.push_back(fingerprint(cls.front()));
    shapes.push_back(shape_of(cls.front()));
    for (const auto& member : cls) {
      if (!fingerprint(member).equals(prints.back())) {
        out.inconsistent.push_back(cls.front());
        break;
      }
    }
  }
  for (std::size_t a = 0; a < out.classes.size(); ++a)
    for (std::size_t b = a + 1; b < out.classes.size(); ++b)
      if (shapes[a] == shapes[b] && prints[a].equals(prints[b]))
        out.unresolved.emplace_back(out.classes[a].front(), out.classes[b].front());
  return out;
}

}  // namespace qutrit
