#include <fstream>
#include <ostream>

#include "CLI11.hpp"
#include "qutrit_cli/commands.hpp"

namespace qutrit::cli {

namespace {

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open '" + path + "' for writing");
  file << content;
  file.flush();
  if (!file) throw IoError("failed writing '" + path + "'");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Geometry of the qutrit state space: sections, symmetries and checks."};
  app.name("qutrit");
  app.require_subcommand(1);
  app.fallthrough();

  Options options;
  std::string json_path, csv_path;
  app.add_option("--seed", options.seed, "Master seed for sampling")->capture_default_str();
  app.add_option("--samples", options.samples, "Monte Carlo sample count")->capture_default_str();
  app.add_option("--tolerance", options.tolerance, "Membership tolerance")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  app.add_option("--json", json_path, "Also write the report as JSON to this path");
  app.add_option("--csv", csv_path, "Also write the report table as CSV to this path");

  auto* basis = app.add_subcommand("basis", "Gell-Mann matrices and structure constants");

  int k = 0;
  auto* classify = app.add_subcommand("classify", "Classify all standard k-sections");
  classify->add_option("k", k, "Section size")->required()->check(CLI::IsMember({2, 3}));

  std::string section, format = "json", output;
  int resolution = 24;
  auto* mesh = app.add_subcommand("mesh", "Triangulated boundary of a three-section");
  mesh->add_option("section", section, "Section digits, e.g. 146")->required();
  mesh->add_option("-r,--resolution", resolution, "Latitude bands")->capture_default_str();
  mesh->add_option("-f,--format", format, "json, obj or csv")->capture_default_str();
  mesh->add_option("-o,--output", output, "Output file")->required();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("suite", suite, "statespace, sections, equivalence, tetrahedral or all")->capture_default_str();

  std::vector<double> direction;
  auto* boundary = app.add_subcommand("boundary", "Cast a ray from the origin to the boundary");
  boundary->add_option("direction", direction, "Eight components")->required()->expected(8);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    ReportDocument doc;
    if (basis->parsed()) {
      doc = cmd_basis(options);
    } else if (classify->parsed()) {
      doc = cmd_classify(k, options);
    } else if (mesh->parsed()) {
      MeshFormat fmt;
      SectionSpec spec({1, 2});
      try {
        fmt = parse_mesh_format(format);
        spec = SectionSpec::parse(section);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
      doc = cmd_mesh(spec, resolution, fmt, output, options);
    } else if (verify->parsed()) {
      doc = cmd_verify(suite, options);
    } else if (boundary->parsed()) {
      std::array<double, 8> d{};
      std::copy(direction.begin(), direction.end(), d.begin());
      doc = cmd_boundary(d, options);
    }
    out << doc.to_text();
    if (!json_path.empty()) write_file(json_path, serialize(doc.to_json()));
    if (!csv_path.empty()) write_file(csv_path, doc.to_csv());
    return doc.passed() ? kOk : kCheckFailed;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIo;
  }
}

}  // namespace qutrit::cli
