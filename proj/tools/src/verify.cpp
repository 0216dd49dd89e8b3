#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <set>

#include "qutrit/equivalence.hpp"
#include "qutrit/fingerprint.hpp"
#include "qutrit/gellmann.hpp"
#include "qutrit/mesh.hpp"
#include "qutrit/pure_states.hpp"
#include "qutrit/sampling.hpp"
#include "qutrit/sections.hpp"
#include "qutrit/statespace.hpp"
#include "qutrit/tetrahedral.hpp"
#include "qutrit_cli/commands.hpp"
#include "reference.hpp"

namespace qutrit::cli {

namespace {

double min_eigenvalue_of_identity_plus(const BlochVector& n) {
  return 1.0 + std::sqrt(3.0) * eigen_oracle(n).low;
}

void statespace_suite(ReportDocument& doc, const Options& o) {
  const long long n_main = o.samples;
  const long long n_small = std::min<long long>(o.samples, 10000);
  const double s3 = std::sqrt(3.0);

  {
    Sampler rng(derive_seed(o.seed, 1));
    long long soft = 0, hard = 0, inside = 0;
    for (long long i = 0; i < n_main; ++i) {
      const BlochVector n = rng.ball_point();
      const bool a = in_state_space(n, o.tolerance);
      const bool b = min_eigenvalue_of_identity_plus(n) >= -3.0 * o.tolerance;
      const bool c = charpoly_positive(s3 * dot_lambda(n), o.tolerance);
      inside += a;
      if (a == b && b == c) continue;
      if (std::abs(boundary_polynomial(n) - 1.0) <= o.tolerance) {
        ++soft;
      } else {
        ++hard;
      }
    }
    doc.results["statespace"]["oracle"] = {{"samples", n_main}, {"inside", inside}, {"band_disagreements", soft},
                                           {"hard_disagreements", hard}};
    doc.add_check("membership = eigenvalue oracle = characteristic polynomial", hard == 0, n_main,
                  static_cast<double>(hard), std::to_string(inside) + " inside, " + std::to_string(soft) +
                                                 " disagreements inside the boundary band");
  }
  {
    Sampler rng(derive_seed(o.seed, 2));
    double worst_eig = 0.0, worst_det = 0.0;
    long long indefinite = 0;
    for (long long i = 0; i < n_main; ++i) {
      const BlochVector u = rng.unit_direction();
      const BlochVector n = boundary_radius(u) * u;
      const double m = min_eigenvalue_of_identity_plus(n);
      worst_eig = std::min(worst_eig, m);
      worst_det = std::max(worst_det, std::abs(boundary_polynomial(n) - 1.0));
      if (m < -3.0 * o.tolerance) ++indefinite;
    }
    doc.results["statespace"]["singular_points"] = {{"samples", n_main}, {"indefinite", indefinite},
                                                    {"min_eigenvalue", worst_eig}, {"max_det_residual", worst_det}};
    doc.add_check("singular points with |n| <= 1 are never indefinite", indefinite == 0, n_main, worst_eig);
  }
  {
    Sampler rng(derive_seed(o.seed, 3));
    double lo = 1.0, hi = 0.0;
    long long false_one = 0;
    for (long long i = 0; i < n_small; ++i) {
      const BlochVector u = rng.unit_direction();
      const double r = boundary_radius(u);
      lo = std::min(lo, r);
      hi = std::max(hi, r);
      if (r == 1.0 && !is_extremal(u, o.tolerance)) ++false_one;
    }
    doc.add_check("boundary radius within [1/2, 1]", lo >= 0.5 - o.tolerance && hi <= 1.0 + o.tolerance, n_small,
                  0.0, "range [" + format_double(lo) + ", " + format_double(hi) + "]");
    doc.add_check("radius 1 only on extremal directions", false_one == 0, n_small, static_cast<double>(false_one));

    double worst_pure = 0.0, worst_dual = 0.0;
    long long dual_fail = 0, not_one = 0;
    for (long long i = 0; i < n_small; ++i) {
      const BlochVector p = rng.pure_state();
      const BlochVector u = p.normalized();
      const double r = boundary_radius(u);
      worst_pure = std::max(worst_pure, std::abs(r - 1.0));
      if (r != 1.0) ++not_one;
      const BlochVector d = dual_point(p);
      worst_dual = std::max(worst_dual, std::abs(boundary_polynomial(d) - 1.0));
      if (!on_boundary(d, o.tolerance) || std::abs(d.norm() - 0.5) > tol::numeric) ++dual_fail;
    }
    doc.add_check("radius exactly 1 along pure-state directions", not_one == 0, n_small, worst_pure);
    doc.add_check("dual points -n/2 of pure states on the boundary", dual_fail == 0, n_small, worst_dual);
  }
  {
    Sampler rng(derive_seed(o.seed, 4));
    double worst_norm = 0.0, worst_trace = 0.0, worst_sq = 0.0;
    for (long long i = 0; i < n_small; ++i) {
      const BlochVector n = rng.ball_point();
      const EigenTriple mu = eigen_oracle(n);
      worst_norm = std::max(worst_norm, std::abs(norm_from_eigenvalues(mu) - n.norm()));
      worst_trace = std::max(worst_trace, std::abs(mu.sum()));
      worst_sq = std::max(worst_sq, std::abs(mu.sum_of_squares() - 2.0 * n.squaredNorm()));
    }
    doc.add_check("|n| recovered from eigenvalues", worst_norm <= tol::numeric, n_small, worst_norm);
    doc.add_check("eigenvalues sum to 0 and squares to 2 n.n", std::max(worst_trace, worst_sq) <= tol::numeric,
                  n_small, std::max(worst_trace, worst_sq));
  }
  {
    Sampler rng(derive_seed(o.seed, 5));
    long long mismatch = 0;
    double worst = 0.0;
    for (long long i = 0; i < n_small; ++i) {
      const BlochVector n = rng.pure_state();
      const Matrix3c rho = bloch_to_density(n);
      const double res = (rho * rho - rho).cwiseAbs().maxCoeff();
      worst = std::max(worst, res);
      if (is_extremal(n, o.tolerance) != (res <= o.tolerance) || !is_extremal(n, o.tolerance)) ++mismatch;
      const BlochVector m = rng.ball_point();
      const Matrix3c sigma = bloch_to_density(m);
      if (is_extremal(m, o.tolerance) != ((sigma * sigma - sigma).cwiseAbs().maxCoeff() <= o.tolerance)) ++mismatch;
    }
    doc.add_check("is_extremal agrees with rho^2 = rho", mismatch == 0, 2 * n_small, worst);
  }
  {
    Sampler rng(derive_seed(o.seed, 6));
    double worst_sq = 0.0, worst_rt = 0.0;
    for (int i = 0; i < 1000; ++i) {
      worst_sq = std::max(worst_sq, square_identity_residual(rng.unit_direction()));
      const Matrix3c rho = rng.unit_trace_hermitian();
      worst_rt = std::max(worst_rt, (bloch_to_density(density_to_bloch(rho)) - rho).cwiseAbs().maxCoeff());
    }
    doc.add_check("(n.l)^2 = (2/3) n.n + (n*n).l / sqrt3", worst_sq <= tol::numeric, 1000, worst_sq);
    doc.add_check("density round trip", worst_rt <= tol::numeric, 1000, worst_rt);
  }
}

bool same_members(const std::vector<std::string>& a, const std::vector<std::string>& b) {
  std::vector<std::string> x = a, y = b;
  std::sort(x.begin(), x.end());
  std::sort(y.begin(), y.end());
  return x == y;
}

void sections_suite(ReportDocument& doc, const Options& o) {
  std::map<std::string, std::string> shape_of;
  for (const int k : {2, 3}) {
    std::map<std::string, std::vector<std::string>> got;
    for (const auto& s : enumerate_sections(k)) {
      const std::string shape = match_shape(s).shape;
      got[shape].push_back(s.name());
      shape_of[s.name()] = shape;
    }
    const auto want = k == 2 ? reference::two_section_table() : reference::three_section_table();
    bool ok = got.size() == want.size();
    std::string counts;
    for (const auto& [shape, members] : want) {
      ok = ok && same_members(members, got[shape]);
      counts += (counts.empty() ? "" : ", ") + shape + " " + std::to_string(got[shape].size());
    }
    doc.add_check(std::string(k == 2 ? "two" : "three") + "-section table reproduced", ok, k == 2 ? 28 : 56, 0.0,
                  counts);
  }

  const auto counts = reference::pure_state_counts();
  long long checked = 0, wrong = 0;
  double worst = 0.0;
  std::vector<Eigen::VectorXd> obese;
  std::vector<std::pair<SectionSpec, PureCircle>> circles;
  for (const int k : {2, 3}) {
    for (const auto& s : enumerate_sections(k)) {
      const PureStateSet ps = pure_states_on_section(s);
      const auto want = counts.at(shape_of[s.name()]);
      if (want.isolated != ps.isolated_count() || want.circle != ps.circle.has_value()) ++wrong;
      for (const auto& x : ps.isolated) {
        const BlochVector n = s.embed(x);
        const Matrix3c rho = bloch_to_density(n);
        worst = std::max({worst, (star(n, n) - n).cwiseAbs().maxCoeff(), (rho * rho - rho).cwiseAbs().maxCoeff()});
        ++checked;
      }
      if (s.name() == "146") obese = ps.isolated;
      if (ps.circle) circles.emplace_back(s, *ps.circle);
    }
  }
  doc.add_check("pure-state counts per type", wrong == 0, 84, static_cast<double>(wrong));
  doc.add_check("isolated pure states satisfy n*n = n and rho^2 = rho", worst <= tol::membership, checked, worst);

  const double s = 1.0 / std::sqrt(3.0);
  const std::vector<Eigen::Vector3d> vertices{{s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
  double vertex_err = obese.size() == 4 ? 0.0 : 1.0;
  for (const auto& v : vertices) {
    double best = 1e9;
    for (const auto& x : obese) best = std::min(best, (x - v).cwiseAbs().maxCoeff());
    vertex_err = std::max(vertex_err, best);
  }
  doc.add_check("obese-tetrahedron pure states at (1,1,1)/sqrt3 and even sign flips", vertex_err <= tol::membership,
                static_cast<long long>(obese.size()), vertex_err);

  double circle_worst = 0.0;
  long long circle_points = 0;
  for (const auto& [spec, c] : circles) {
    for (int i = 0; i < 64; ++i) {
      const BlochVector n = spec.embed(c.point(2.0 * std::numbers::pi * i / 64, spec.size()));
      circle_worst = std::max({circle_worst, (star(n, n) - n).cwiseAbs().maxCoeff(), std::abs(n.squaredNorm() - 1.0)});
      ++circle_points;
    }
  }
  doc.add_check("points on circles of pure states are extremal", circle_worst <= tol::membership, circle_points,
                circle_worst);

  std::vector<std::string> vanishing;
  for (const auto& spec : vanishing_cubic_sections(4)) vanishing.push_back(spec.name());
  doc.results["sections"]["vanishing_cubic_four_sections"] = vanishing;
  doc.add_check("four-sections with vanishing cubic part are 1245, 1267, 4567",
                vanishing == std::vector<std::string>{"1245", "1267", "4567"}, 70);

  long long reducible_ok = 0, total = 0;
  double factor_worst = 0.0;
  const std::set<std::string> reducible{"Triangle", "Parabola", "Ellipse", "Cone", "Paraboloid", "Ellipsoid"};
  const std::set<std::string> cubic_irreducible{"ObeseTetrahedron", "RS1", "RS2"};
  for (const int k : {2, 3}) {
    for (const auto& spec : enumerate_sections(k)) {
      const std::string shape = shape_of[spec.name()];
      if (!reducible.count(shape) && !cubic_irreducible.count(shape)) continue;
      const Factorization f = factor_boundary(spec);
      ++total;
      if (f.reducible == (reducible.count(shape) > 0)) ++reducible_ok;
      factor_worst = std::max(factor_worst, f.residual);
    }
  }
  doc.add_check("linear factor found exactly for the factorizable types", reducible_ok == total, total,
                factor_worst);

  Sampler rng(derive_seed(o.seed, 7));
  double poly_worst = 0.0;
  for (const int k : {2, 3, 4}) {
    for (const auto& spec : enumerate_sections(k)) {
      const RestrictedCubic rc = restricted_cubic(spec);
      for (int i = 0; i < 20; ++i) {
        Eigen::VectorXd x(k);
        for (int a = 0; a < k; ++a) x[a] = rng.normal() * 0.5;
        poly_worst = std::max(poly_worst, std::abs(rc.evaluate(x) - boundary_polynomial(spec.embed(x))));
      }
    }
  }
  doc.add_check("restricted cubic agrees with the full boundary polynomial", poly_worst <= tol::numeric,
                (28 + 56 + 70) * 20, poly_worst);

  long long mesh_vertices = 0, off = 0;
  double rmin = 1.0, rmax = 0.0;
  for (const auto& spec : enumerate_sections(3)) {
    const SectionMesh mesh = section_mesh(spec, 6);
    for (const auto& v : mesh.vertices) {
      ++mesh_vertices;
      if (!on_boundary(spec.embed(v), o.tolerance)) ++off;
      rmin = std::min(rmin, v.norm());
      rmax = std::max(rmax, v.norm());
    }
  }
  doc.add_check("mesh vertices on the boundary with 1/2 <= |v| <= 1",
                off == 0 && rmin >= 0.5 - o.tolerance && rmax <= 1.0 + o.tolerance, mesh_vertices, 0.0,
                "radius range [" + format_double(rmin) + ", " + format_double(rmax) + "]");
}

void equivalence_suite(ReportDocument& doc, const Options& o) {
  Sampler rng(derive_seed(o.seed, 8));
  double hom = 0.0, orth = 0.0, det = 0.0;
  for (int i = 0; i < 100; ++i) {
    const Unitary3 u(rng.special_unitary());
    const Unitary3 v(rng.special_unitary());
    const Matrix8 au = adjoint_action(u);
    hom = std::max(hom, (adjoint_action(u * v) - au * adjoint_action(v)).cwiseAbs().maxCoeff());
    orth = std::max(orth, (au.transpose() * au - Matrix8::Identity()).cwiseAbs().maxCoeff());
    det = std::max(det, std::abs(au.determinant() - 1.0));
  }
  doc.add_check("Ad(UV) = Ad(U) Ad(V)", hom <= tol::numeric, 100, hom);
  doc.add_check("Ad(U) orthogonal with det +1", std::max(orth, det) <= 1e-11, 100, std::max(orth, det));

  long long failed = 0, fp_changed = 0;
  const auto catalog = witness_catalog();
  for (const auto& w : catalog) {
    if (!spans_equivalent_under(w.from, w.to, w.unitary.u)) ++failed;
    if (!fingerprint(w.from).equals(fingerprint(w.to))) ++fp_changed;
  }
  doc.add_check("every catalog witness validates", failed == 0, static_cast<long long>(catalog.size()),
                static_cast<double>(failed));
  doc.add_check("fingerprints invariant across witnesses", fp_changed == 0, static_cast<long long>(catalog.size()));

  double cubic = 0.0;
  for (const auto& g : catalog_generators()) {
    const Matrix8 ad = adjoint_action(g.u);
    for (int i = 0; i < 50; ++i) {
      const BlochVector n = rng.ball_point();
      cubic = std::max(cubic, std::abs(cubic_invariant(ad * n) - cubic_invariant(n)));
    }
  }
  doc.add_check("(n*n).n invariant under the catalog conjugations", cubic <= tol::numeric, 14 * 50, cubic);

  for (const int k : {2, 3}) {
    const UnitaryPartition part = partition_unitary_classes(k);
    const auto want = k == 2 ? reference::two_section_classes() : reference::three_section_classes();
    std::set<std::vector<std::string>> a, b;
    for (auto cls : want) {
      std::sort(cls.begin(), cls.end());
      a.insert(cls);
    }
    std::vector<std::string> sizes;
    for (const auto& cls : part.classes) {
      std::vector<std::string> names;
      for (const auto& s : cls) names.push_back(s.name());
      b.insert(names);
      sizes.push_back(std::to_string(cls.size()));
    }
    Json& out = doc.results["equivalence"][k == 2 ? "two_sections" : "three_sections"];
    out["class_count"] = part.classes.size();
    out["unresolved_pairs"] = part.unresolved.size();
    doc.add_check(std::to_string(k) + "-sections: " + std::to_string(want.size()) + " unitary classes", a == b,
                  static_cast<long long>(part.classes.size()), 0.0, "sizes " + [&] {
                    std::string s;
                    for (const auto& x : sizes) s += (s.empty() ? "" : ",") + x;
                    return s;
                  }());
    bool same_shape = true;
    for (const auto& cls : part.classes)
      for (const auto& s : cls) same_shape = same_shape && match_shape(s).shape == match_shape(cls.front()).shape;
    doc.add_check(std::to_string(k) + "-sections: classes are geometrically homogeneous", same_shape);
    doc.add_check(std::to_string(k) + "-sections: equal-shape classes separated by fingerprint",
                  part.unresolved.empty() && part.inconsistent.empty(),
                  static_cast<long long>(part.unresolved.size()));
  }

  const auto differ = [](const char* a, const char* b) {
    return !fingerprint(SectionSpec::parse(a)).equals(fingerprint(SectionSpec::parse(b)));
  };
  const bool circles = fingerprint(SectionSpec::parse("12")).has_anticommuting_pair &&
                       !fingerprint(SectionSpec::parse("14")).has_anticommuting_pair;
  doc.add_check("circle classes differ in anticommuting pairs", circles, 2);
  doc.add_check("ellipsoid split 468 | 458 separated", differ("468", "458"), 2);
  doc.add_check("sphere split 123 | 257 | 124 separated", differ("123", "257") && differ("123", "124") && differ("257", "124"), 3);
}

void tetrahedral_suite(ReportDocument& doc, const Options&) {
  const auto group = generate_td();
  const auto all = all_signed_permutations();
  const std::set<SignedPermutation3> all_set(all.begin(), all.end());
  bool closed48 = all.size() == 48;
  for (const auto& a : all)
    for (const auto& b : all) closed48 = closed48 && all_set.count(a * b);
  doc.add_check("T_d has 24 elements", group.size() == 24, static_cast<long long>(group.size()));
  doc.add_check("all 48 signed permutations form a closed group", closed48, 48);

  std::string sizes;
  bool sizes_ok = true;
  try {
    const auto classes = conjugacy_classes(group);
    for (const TdClassLabel l : kTdClasses) {
      const int n = static_cast<int>(classes.at(l).size());
      sizes += (sizes.empty() ? "" : ",") + std::to_string(n);
      sizes_ok = sizes_ok && n == expected_class_size(l);
    }
  } catch (const std::exception& e) {
    sizes_ok = false;
    sizes = e.what();
  }
  doc.add_check("class sizes (1, 8, 3, 6, 6)", sizes_ok, 5, 0.0, sizes);

  const CharacterReport chars = character_table_check(group);
  Json rows = Json::array();
  for (const auto& r : chars.rows) {
    rows.push_back({{"class", std::string(to_string(r.label))}, {"size", r.size}, {"T1", r.t1}, {"T2", r.t2}, {"E", r.e}});
    doc.text.push_back("  " + std::string(to_string(r.label)) + " (" + std::to_string(r.size) + "): chi(T1, T2, E) = (" +
                       format_double(r.t1) + ", " + format_double(r.t2) + ", " + format_double(r.e) + ")");
  }
  doc.results["tetrahedral"]["characters"] = rows;
  std::string mism;
  for (const auto& m : chars.mismatches) mism += (mism.empty() ? "" : "; ") + m;
  doc.add_check("characters match the T_d table", chars.passed(), chars.matched_values, 0.0,
                std::to_string(chars.matched_values) + "/15" + (mism.empty() ? "" : " " + mism));
  doc.add_check("Ad(R) block diagonal on (J, X, Q)", chars.max_leakage <= tol::numeric, 24, chars.max_leakage);
  doc.add_check("chi_T1(R) = tr R", chars.t1_trace_equals_r, 24);

  const DeterminantReport dets = determinant_signs(group);
  doc.add_check("det T1 = +1, det T2 = -1 exactly on S4 and sigma_d, det E compensates", dets.passed(), 24);
  doc.add_check("R0 T1(R) R0^T = R", verify_r0_intertwiner(group), 24);

  const StabilizerScan scan = stabilizer_scan();
  std::set<SignedPermutation3> a(scan.members.begin(), scan.members.end()), b(group.begin(), group.end());
  doc.add_check("stabilizer of span(1,4,6) equals T_d", a == b && scan.preserves_257 && scan.preserves_38,
                scan.candidates, 0.0, std::to_string(scan.members.size()) + " members");

  const ObesityReport ob = obesity_check();
  double err = 0.0;
  for (int i = 0; i < 4; ++i) err = std::max({err, std::abs(ob.vertex_radii[i] - 1.0), std::abs(ob.face_radii[i] - 0.5)});
  doc.results["tetrahedral"]["obesity"] = {{"vertex_radii", ob.vertex_radii}, {"face_radii", ob.face_radii},
                                           {"flat_reference", ob.flat_reference}};
  doc.add_check("obese tetrahedron: vertices at 1, face centres at 1/2", err <= tol::membership, 8, err,
                "flat tetrahedron reference " + format_double(ob.flat_reference));
}

}  // namespace

ReportDocument cmd_verify(const std::string& suite, const Options& options) {
  static const std::vector<std::string> known{"statespace", "sections", "equivalence", "tetrahedral", "all"};
  if (std::find(known.begin(), known.end(), suite) == known.end()) {
    throw UsageError("verify: unknown suite '" + suite + "' (statespace, sections, equivalence, tetrahedral, all)");
  }
  if (options.samples < 1) throw UsageError("verify: --samples must be positive");
  ReportDocument doc;
  doc.command = "verify";
  doc.seed = options.seed;
  doc.parameters = {{"suite", suite}, {"samples", options.samples}, {"tolerance", options.tolerance}};
  const bool all = suite == "all";
  if (all || suite == "statespace") statespace_suite(doc, options);
  if (all || suite == "sections") sections_suite(doc, options);
  if (all || suite == "equivalence") equivalence_suite(doc, options);
  if (all || suite == "tetrahedral") tetrahedral_suite(doc, options);
  return doc;
}

}  // namespace qutrit::cli
