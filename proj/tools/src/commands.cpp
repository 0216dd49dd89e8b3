#include "qutrit_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qutrit/equivalence.hpp"
#include "qutrit/fingerprint.hpp"
#include "qutrit/gellmann.hpp"
#include "qutrit/mesh.hpp"
#include "qutrit/pure_states.hpp"
#include "qutrit/sections.hpp"
#include "qutrit/statespace.hpp"
#include "reference.hpp"

namespace qutrit::cli {

namespace {

Json matrix_json(const Matrix3c& m) {
  Json re = Json::array(), im = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json r = Json::array(), c = Json::array();
    for (int j = 0; j < 3; ++j) {
      r.push_back(m(i, j).real());
      c.push_back(m(i, j).imag());
    }
    re.push_back(r);
    im.push_back(c);
  }
  return {{"re", re}, {"im", im}};
}

std::string complex_text(Complex z) {
  std::ostringstream s;
  const auto num = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4g", std::abs(v) < 1e-15 ? 0.0 : v);
    return std::string(buf);
  };
  if (std::abs(z.imag()) < 1e-15) return num(z.real());
  if (std::abs(z.real()) < 1e-15) return num(z.imag()) + "i";
  return num(z.real()) + (z.imag() < 0 ? "" : "+") + num(z.imag()) + "i";
}

Json vector_json(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (int i = 0; i < v.size(); ++i) a.push_back(v[i]);
  return a;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

}  // namespace

ReportDocument cmd_basis(const Options& options) {
  ReportDocument doc;
  doc.command = "basis";
  doc.seed = options.seed;

  const auto& basis = gellmann_basis();
  const auto& sc = structure_constants();

  Json mats = Json::array();
  for (int i = 0; i < 8; ++i) {
    mats.push_back(matrix_json(basis[i]));
    doc.text.push_back("lambda_" + std::to_string(i + 1) + ":");
    for (int r = 0; r < 3; ++r) {
      std::string row = "  [";
      for (int c = 0; c < 3; ++c) row += (c ? ", " : "") + complex_text(basis[i](r, c));
      doc.text.push_back(row + "]");
    }
  }
  doc.results["lambda"] = mats;

  double ortho = 0.0, traceless = 0.0;
  for (int j = 0; j < 8; ++j) {
    traceless = std::max(traceless, std::abs(basis[j].trace()));
    for (int k = 0; k < 8; ++k) {
      const Complex t = (basis[j] * basis[k]).trace();
      ortho = std::max(ortho, std::abs(t - Complex(j == k ? 2.0 : 0.0, 0.0)));
    }
  }
  doc.results["orthogonality_residual"] = ortho;
  doc.add_check("tr(l_j l_k) = 2 delta_jk", ortho <= tol::numeric, 64, ortho);
  doc.add_check("lambda matrices traceless", traceless <= tol::numeric, 8, traceless);

  Json fs = Json::array(), ds = Json::array();
  doc.text.push_back("independent nonzero f_jkl:");
  int f_count = 0, d_count = 0;
  double antisym = 0.0, sym = 0.0;
  for (int j = 0; j < 8; ++j)
    for (int k = 0; k < 8; ++k)
      for (int l = 0; l < 8; ++l) {
        const double f = sc.f(j, k, l), d = sc.d(j, k, l);
        antisym = std::max({antisym, std::abs(f + sc.f(k, j, l)), std::abs(f + sc.f(j, l, k)), std::abs(f + sc.f(l, k, j))});
        sym = std::max({sym, std::abs(d - sc.d(k, j, l)), std::abs(d - sc.d(j, l, k)), std::abs(d - sc.d(l, k, j))});
        const std::string idx = std::to_string(j + 1) + std::to_string(k + 1) + std::to_string(l + 1);
        if (j < k && k < l && std::abs(f) > tol::numeric) {
          fs.push_back({{"indices", idx}, {"value", f}});
          doc.text.push_back("  f_" + idx + " = " + format_double(f));
          ++f_count;
        }
        if (j <= k && k <= l && std::abs(d) > tol::numeric) {
          ds.push_back({{"indices", idx}, {"value", d}});
          ++d_count;
        }
      }
  doc.text.push_back("independent nonzero d_jkl:");
  for (const auto& e : ds) doc.text.push_back("  d_" + e["indices"].get<std::string>() + " = " + format_double(e["value"].get<double>()));
  doc.results["f"] = fs;
  doc.results["d"] = ds;

  const auto at = [](const char* s, int i) { return s[i] - '1'; };
  double f_err = 0.0, d_err = 0.0;
  for (const auto& c : reference::f_values())
    f_err = std::max(f_err, std::abs(sc.f(at(c.indices, 0), at(c.indices, 1), at(c.indices, 2)) - c.value));
  for (const auto& c : reference::d_values())
    d_err = std::max(d_err, std::abs(sc.d(at(c.indices, 0), at(c.indices, 1), at(c.indices, 2)) - c.value));
  doc.add_check("f values match the reference list", f_err <= tol::numeric && f_count == 9, f_count, f_err,
                "9 expected");
  doc.add_check("d values match the reference list", d_err <= tol::numeric && d_count == 16, d_count, d_err,
                "16 expected");
  doc.add_check("f totally antisymmetric", antisym <= tol::numeric, 512, antisym);
  doc.add_check("d totally symmetric", sym <= tol::numeric, 512, sym);

  doc.table.push_back({"tensor", "indices", "value"});
  for (const auto& e : fs) doc.table.push_back({"f", e["indices"], format_double(e["value"].get<double>())});
  for (const auto& e : ds) doc.table.push_back({"d", e["indices"], format_double(e["value"].get<double>())});
  return doc;
}

ReportDocument cmd_classify(int k, const Options& options) {
  if (k != 2 && k != 3) throw UsageError("classify: k must be 2 or 3");
  ReportDocument doc;
  doc.command = "classify";
  doc.seed = options.seed;
  doc.parameters["k"] = k;

  const auto sections = enumerate_sections(k);
  std::map<std::string, std::vector<std::string>> by_shape;
  std::map<std::string, std::string> shape_of;
  for (const auto& s : sections) {
    const std::string shape = match_shape(s).shape;
    by_shape[shape].push_back(s.name());
    shape_of[s.name()] = shape;
  }
  doc.results["shapes"] = by_shape;

  const auto expected = k == 2 ? reference::two_section_table() : reference::three_section_table();
  bool table_ok = by_shape.size() == expected.size();
  for (const auto& [shape, members] : expected) {
    std::vector<std::string> want = members, got = by_shape[shape];
    std::sort(want.begin(), want.end());
    std::sort(got.begin(), got.end());
    table_ok = table_ok && want == got;
  }
  doc.text.push_back("geometric types (" + std::to_string(by_shape.size()) + "):");
  for (const auto& [shape, members] : by_shape)
    doc.text.push_back("  " + shape + " (" + std::to_string(members.size()) + "): " + join(members, " "));
  doc.add_check(std::string(k == 2 ? "two" : "three") + "-section table reproduced", table_ok,
                static_cast<long long>(sections.size()));

  const UnitaryPartition part = partition_unitary_classes(k);
  Json classes = Json::array();
  std::map<std::string, int> class_of;
  doc.text.push_back("unitary classes (" + std::to_string(part.classes.size()) + "):");
  for (std::size_t c = 0; c < part.classes.size(); ++c) {
    std::vector<std::string> names;
    for (const auto& s : part.classes[c]) {
      names.push_back(s.name());
      class_of[s.name()] = static_cast<int>(c);
    }
    const EquivalenceFingerprint fp = fingerprint(part.classes[c].front());
    classes.push_back({{"members", names},
                       {"shape", shape_of[names.front()]},
                       {"fingerprint",
                        {{"has_anticommuting_pair", fp.has_anticommuting_pair},
                         {"commutator_closed", fp.commutator_closed},
                         {"squares_commute", fp.squares_commute},
                         {"commutator_norms", fp.commutator_norms}}}});
    doc.text.push_back("  [" + std::to_string(c + 1) + "] " + shape_of[names.front()] + ": " + join(names, " "));
  }
  doc.results["unitary_classes"] = classes;
  Json edges = Json::array();
  for (const auto& e : part.spanning_edges) edges.push_back({{"from", e.from.name()}, {"to", e.to.name()}, {"word", e.word}});
  doc.results["witness_edges"] = edges;
  Json unresolved = Json::array();
  for (const auto& [a, b] : part.unresolved) unresolved.push_back({a.name(), b.name()});
  doc.results["unresolved_pairs"] = unresolved;

  auto want_classes = k == 2 ? reference::two_section_classes() : reference::three_section_classes();
  std::set<std::vector<std::string>> want_set, got_set;
  for (auto cls : want_classes) {
    std::sort(cls.begin(), cls.end());
    want_set.insert(cls);
  }
  for (const auto& cls : part.classes) {
    std::vector<std::string> names;
    for (const auto& s : cls) names.push_back(s.name());
    got_set.insert(names);
  }
  doc.add_check("unitary classes match", want_set == got_set, static_cast<long long>(part.classes.size()),
                0.0, std::to_string(want_classes.size()) + " expected");
  bool same_shape = true;
  for (const auto& cls : part.classes)
    for (const auto& s : cls) same_shape = same_shape && shape_of[s.name()] == shape_of[cls.front().name()];
  doc.add_check("each class has a single geometric type", same_shape);
  doc.add_check("fingerprints consistent within classes", part.inconsistent.empty(),
                static_cast<long long>(part.classes.size()));
  doc.add_check("classes of equal shape separated by fingerprint", part.unresolved.empty(),
                static_cast<long long>(part.unresolved.size()));

  const auto counts = reference::pure_state_counts();
  Json inventory = Json::object();
  bool counts_ok = true;
  double worst = 0.0;
  doc.text.push_back("pure states:");
  doc.table.push_back({"section", "shape", "unitary_class", "isolated_pure_states", "pure_circle"});
  for (const auto& s : sections) {
    const PureStateSet ps = pure_states_on_section(s);
    Json iso = Json::array();
    for (const auto& x : ps.isolated) {
      iso.push_back(vector_json(x));
      const BlochVector n = s.embed(x);
      worst = std::max(worst, (star(n, n) - n).cwiseAbs().maxCoeff());
      const Matrix3c rho = bloch_to_density(n);
      worst = std::max(worst, (rho * rho - rho).cwiseAbs().maxCoeff());
    }
    Json entry = {{"isolated", iso}};
    if (ps.circle) {
      entry["circle"] = {{"centre", vector_json(ps.circle->centre.head(s.size()))},
                         {"normal", vector_json(ps.circle->normal.head(s.size()))},
                         {"radius", ps.circle->radius}};
    } else {
      entry["circle"] = nullptr;
    }
    inventory[s.name()] = entry;
    const auto want = counts.at(shape_of[s.name()]);
    counts_ok = counts_ok && want.isolated == ps.isolated_count() && want.circle == ps.circle.has_value();
    doc.text.push_back("  " + s.name() + " " + shape_of[s.name()] + ": " + std::to_string(ps.isolated_count()) +
                       " isolated" + (ps.circle ? " + circle" : ""));
    doc.table.push_back({s.name(), shape_of[s.name()], std::to_string(class_of[s.name()] + 1),
                         std::to_string(ps.isolated_count()), ps.circle ? "true" : "false"});
  }
  doc.results["pure_states"] = inventory;
  doc.add_check("pure-state counts per type", counts_ok, static_cast<long long>(sections.size()));
  doc.add_check("pure states satisfy n*n = n and rho^2 = rho", worst <= options.tolerance,
                static_cast<long long>(sections.size()), worst);
  return doc;
}

ReportDocument cmd_mesh(const SectionSpec& spec, int resolution, MeshFormat format, const std::string& path,
                        const Options& options) {
  if (spec.size() != 3) throw UsageError("mesh: need a three-section such as 146");
  if (resolution < 2) throw UsageError("mesh: resolution must be at least 2");
  const SectionMesh mesh = section_mesh(spec, resolution);

  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("mesh: cannot open '" + path + "' for writing");
  write_mesh(mesh, format, file);
  file.flush();
  if (!file) throw IoError("mesh: failed writing '" + path + "'");

  ReportDocument doc;
  doc.command = "mesh";
  doc.seed = options.seed;
  doc.parameters = {{"section", spec.name()}, {"resolution", resolution},
                    {"format", format == MeshFormat::Json ? "json" : format == MeshFormat::Obj ? "obj" : "csv"},
                    {"output", path}};

  double rmin = 1e9, rmax = 0.0, worst = 0.0, zmin = 1e9, zmax = -1e9;
  long long off = 0;
  for (const auto& v : mesh.vertices) {
    const double r = v.norm();
    rmin = std::min(rmin, r);
    rmax = std::max(rmax, r);
    zmin = std::min(zmin, v.z());
    zmax = std::max(zmax, v.z());
    const BlochVector n = spec.embed(v);
    worst = std::max(worst, std::abs(boundary_polynomial(n) - 1.0));
    if (!on_boundary(n, options.tolerance)) ++off;
  }
  doc.results = {{"vertices", mesh.vertices.size()}, {"faces", mesh.faces.size()}, {"min_radius", rmin},
                 {"max_radius", rmax}, {"min_last_coordinate", zmin}, {"max_last_coordinate", zmax}};
  doc.text.push_back("wrote " + std::to_string(mesh.vertices.size()) + " vertices, " +
                     std::to_string(mesh.faces.size()) + " faces to " + path);
  doc.text.push_back("radius range [" + format_double(rmin) + ", " + format_double(rmax) + "]");
  doc.text.push_back("n" + std::to_string(spec.label(2)) + " range [" + format_double(zmin) + ", " +
                     format_double(zmax) + "]");
  doc.add_check("every vertex on the boundary", off == 0, static_cast<long long>(mesh.vertices.size()), worst);
  doc.add_check("vertex radii within [1/2, 1]",
                rmin >= 0.5 - options.tolerance && rmax <= 1.0 + options.tolerance,
                static_cast<long long>(mesh.vertices.size()));
  return doc;
}

ReportDocument cmd_boundary(const std::array<double, 8>& direction, const Options& options) {
  BlochVector u;
  for (int i = 0; i < 8; ++i) u[i] = direction[static_cast<std::size_t>(i)];
  if (!u.allFinite()) throw UsageError("boundary: direction must be finite");
  if (u.norm() == 0.0) throw UsageError("boundary: direction must be nonzero");
  u.normalize();

  const double c = cubic_invariant(u);
  const double r = boundary_radius(u);
  const BlochVector n = r * u;
  const EigenTriple mu = eigen_oracle(n);
  const double s3 = std::sqrt(3.0);
  std::array<double, 3> rho{(1.0 + s3 * mu.low) / 3.0, (1.0 + s3 * mu.mid) / 3.0, (1.0 + s3 * mu.high) / 3.0};
  for (double& v : rho)
    if (std::abs(v) < 1e-15) v = 0.0;
  const BlochVector dual = dual_point(n);

  ReportDocument doc;
  doc.command = "boundary";
  doc.seed = options.seed;
  doc.parameters["direction"] = direction;
  doc.results = {{"unit_direction", vector_json(u)},
                 {"cubic_invariant", c},
                 {"radius", r},
                 {"boundary_point", vector_json(n)},
                 {"rho_eigenvalues", rho},
                 {"direction_extremal", is_extremal(u, options.tolerance)},
                 {"dual_point", vector_json(dual)},
                 {"dual_on_boundary", on_boundary(dual, options.tolerance)}};
  doc.text.push_back("c = (u*u).u = " + format_double(c));
  doc.text.push_back("boundary radius r = " + format_double(r));
  doc.text.push_back("eigenvalues of rho(r u) = (" + format_double(rho[0]) + ", " + format_double(rho[1]) + ", " +
                     format_double(rho[2]) + ")");
  doc.text.push_back(std::string("dual point -r u/2 on boundary: ") + (on_boundary(dual, options.tolerance) ? "yes" : "no"));
  doc.add_check("r u on the boundary", on_boundary(n, options.tolerance), 1, std::abs(boundary_polynomial(n) - 1.0));
  doc.add_check("radius within [1/2, 1]", r >= 0.5 - options.tolerance && r <= 1.0 + options.tolerance, 1);
  doc.add_check("rho(r u) positive semidefinite and singular",
                rho[0] >= -options.tolerance && std::abs(rho[0]) <= options.tolerance, 1, std::abs(rho[0]));
  doc.table = {{"quantity", "value"},
               {"cubic_invariant", format_double(c)},
               {"radius", format_double(r)},
               {"rho_eigenvalue_1", format_double(rho[0])},
               {"rho_eigenvalue_2", format_double(rho[1])},
               {"rho_eigenvalue_3", format_double(rho[2])}};
  return doc;
}

}  // namespace qutrit::cli
