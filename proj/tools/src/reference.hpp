#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

namespace qutrit::cli::reference {

struct Constant {
  const char* indices;  // 1-based, e.g. "123"
  double value;
};

inline std::vector<Constant> f_values() {
  const double h = 0.5, r = std::sqrt(3.0) / 2.0;
  return {{"123", 1.0}, {"147", h}, {"246", h}, {"257", h}, {"345", h},
          {"516", h},   {"637", h}, {"458", r}, {"678", r}};
}

inline std::vector<Constant> d_values() {
  const double s = 1.0 / std::sqrt(3.0), h = 0.5, q = -1.0 / (2.0 * std::sqrt(3.0));
  return {{"118", s},  {"228", s},  {"338", s},  {"888", -s}, {"146", h},  {"157", h},
          {"247", -h}, {"256", h},  {"344", h},  {"355", h},  {"366", -h}, {"377", -h},
          {"448", q},  {"558", q},  {"668", q},  {"778", q}};
}

/// Geometric type -> members, as printed in the two-section table.
inline std::map<std::string, std::vector<std::string>> two_section_table() {
  return {{"Circle", {"12", "13", "23", "14", "15", "16", "17", "24", "25", "26", "27", "45", "46", "47", "56", "57", "67"}},
          {"Triangle", {"18", "28", "38"}},
          {"Parabola", {"34", "35", "36", "37"}},
          {"Ellipse", {"48", "58", "68", "78"}}};
}

/// Geometric type -> members, as printed in the three-section table.
inline std::map<std::string, std::vector<std::string>> three_section_table() {
  return {{"Sphere", {"123", "124", "125", "126", "127", "145", "147", "156", "167", "245", "246", "257", "267", "456", "457", "467", "567"}},
          {"Ellipsoid", {"458", "468", "478", "568", "578", "678"}},
          {"Cone", {"128", "138", "238", "348", "358", "368", "378"}},
          {"ObeseTetrahedron", {"146", "157", "247", "256", "346", "347", "356", "357"}},
          {"RS1", {"134", "135", "136", "137", "234", "235", "236", "237"}},
          {"RS2", {"148", "158", "168", "178", "248", "258", "268", "278"}},
          {"Paraboloid", {"345", "367"}}};
}

struct PureCount {
  int isolated;
  bool circle;
};

inline std::map<std::string, PureCount> pure_state_counts() {
  return {{"Triangle", {3, false}}, {"Parabola", {2, false}}, {"Ellipse", {1, false}}, {"Circle", {0, false}},
          {"Cone", {1, true}},      {"Paraboloid", {0, true}}, {"Ellipsoid", {1, false}},
          {"ObeseTetrahedron", {4, false}}, {"RS1", {2, false}}, {"RS2", {3, false}}, {"Sphere", {0, false}}};
}

/// Unitary classes, each listed by its members.
inline std::vector<std::vector<std::string>> two_section_classes() {
  return {{"18", "28", "38"},
          {"34", "35", "36", "37"},
          {"48", "58", "68", "78"},
          {"12", "13", "23", "45", "67"},
          {"14", "15", "16", "17", "24", "25", "26", "27", "46", "47", "56", "57"}};
}

inline std::vector<std::vector<std::string>> three_section_classes() {
  return {{"123"},
          {"147", "156", "246", "257"},
          {"124", "125", "126", "127", "145", "167", "245", "267", "456", "457", "467", "567"},
          {"128", "138", "238", "348", "358", "368", "378"},
          {"345", "367"},
          {"458", "678"},
          {"468", "478", "568", "578"},
          {"146", "157", "247", "256", "346", "347", "356", "357"},
          {"134", "135", "136", "137", "234", "235", "236", "237"},
          {"148", "158", "168", "178", "248", "258", "268", "278"}};
}

}  // namespace qutrit::cli::reference
