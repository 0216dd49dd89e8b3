#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "qutrit/section_spec.hpp"
#include "qutrit/types.hpp"
#include "qutrit_cli/mesh_io.hpp"
#include "qutrit_cli/report.hpp"

namespace qutrit::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

/// Bad arguments that parsing alone cannot catch (zero direction, unknown suite, ...).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Unreadable or unwritable files.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::uint64_t seed = 0;
  long long samples = 100000;
  double tolerance = tol::membership;  // membership tolerance
};

ReportDocument cmd_basis(const Options& options);
ReportDocument cmd_classify(int k, const Options& options);
/// Writes the mesh to `path`; throws IoError if it cannot be written.
ReportDocument cmd_mesh(const SectionSpec& spec, int resolution, MeshFormat format, const std::string& path,
                        const Options& options);
/// suite in {statespace, sections, equivalence, tetrahedral, all}.
ReportDocument cmd_verify(const std::string& suite, const Options& options);
ReportDocument cmd_boundary(const std::array<double, 8>& direction, const Options& options);

/// Full command line front end; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace qutrit::cli
