#include "qutrit_cli/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace qutrit::cli {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Check& ReportDocument::add_check(std::string name, bool ok, long long count, double worst, std::string detail) {
  checks.push_back({std::move(name), ok, count, worst, std::move(detail)});
  return checks.back();
}

bool ReportDocument::passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return true;
}

Json ReportDocument::to_json() const {
  Json checks_json = Json::array();
  for (const auto& c : checks) {
    checks_json.push_back({{"name", c.name}, {"passed", c.passed}, {"count", c.count},
                           {"worst_residual", c.worst}, {"detail", c.detail}});
  }
  Json res = results;
  res["checks"] = checks_json;
  return {{"command", command}, {"seed", seed}, {"parameters", parameters}, {"results", res}, {"passed", passed()}};
}

std::string ReportDocument::to_text() const {
  std::ostringstream out;
  out << "== " << command << " ==\n";
  for (const auto& line : text) out << line << '\n';
  for (const auto& c : checks) {
    out << (c.passed ? "[PASS] " : "[FAIL] ") << c.name;
    if (c.count > 0) out << "  n=" << c.count;
    if (c.worst != 0.0) out << "  worst=" << format_double(c.worst);
    if (!c.detail.empty()) out << "  " << c.detail;
    out << '\n';
  }
  if (!checks.empty()) out << (passed() ? "all checks passed\n" : "some checks FAILED\n");
  return out.str();
}

std::string ReportDocument::to_csv() const {
  std::ostringstream out;
  const auto quote = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (const char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + "\"";
  };
  if (!table.empty()) {
    for (const auto& row : table) {
      for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << quote(row[i]);
      out << '\n';
    }
    return out.str();
  }
  out << "check,passed,count,worst_residual,detail\n";
  for (const auto& c : checks) {
    out << quote(c.name) << ',' << (c.passed ? "true" : "false") << ',' << c.count << ','
        << format_double(c.worst) << ',' << quote(c.detail) << '\n';
  }
  return out.str();
}

namespace {

void write(const Json& v, int indent, int depth, std::string& out) {
  const auto newline = [&](int d) {
    if (indent <= 0) return;
    out += '\n';
    out.append(static_cast<std::size_t>(indent * d), ' ');
  };
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(it.key()).dump();
        out += indent > 0 ? ": " : ":";
        write(it.value(), indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        out += "[]";
        return;
      }
      // Arrays of scalars stay on one line.
      bool flat = true;
      for (const auto& e : v) flat = flat && !e.is_structured();
      out += '[';
      bool first = true;
      for (const auto& e : v) {
        if (!first) out += flat && indent > 0 ? ", " : ",";
        first = false;
        if (!flat) newline(depth + 1);
        write(e, indent, depth + 1, out);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      out += std::isfinite(d) ? format_double(d) : "null";
      return;
    }
    default:
      out += v.dump();
  }
}

}  // namespace

std::string serialize(const Json& value, int indent) {
  std::string out;
  write(value, indent, 0, out);
  out += '\n';
  return out;
}

}  // namespace qutrit::cli
