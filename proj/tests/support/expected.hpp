#pragma once

#include <cmath>
#include <map>
#include <string>
#include <vector>

// Hand-transcribed reference data for the su(3) structure constants and the
// standard-section tables.
namespace expected {

struct Constant {
  int j, k, l;  // 1-based
  double value;
};

inline std::vector<Constant> f_values() {
  const double h = 0.5, r = std::sqrt(3.0) / 2.0;
  return {{1, 2, 3, 1.0}, {1, 4, 7, h}, {2, 4, 6, h}, {2, 5, 7, h}, {3, 4, 5, h},
          {5, 1, 6, h},   {6, 3, 7, h}, {4, 5, 8, r}, {6, 7, 8, r}};
}

inline std::vector<Constant> d_values() {
  const double s = 1.0 / std::sqrt(3.0), h = 0.5, q = -1.0 / (2.0 * std::sqrt(3.0));
  return {{1, 1, 8, s},  {2, 2, 8, s},  {3, 3, 8, s},  {8, 8, 8, -s}, {1, 4, 6, h},  {1, 5, 7, h},
          {2, 4, 7, -h}, {2, 5, 6, h},  {3, 4, 4, h},  {3, 5, 5, h},  {3, 6, 6, -h}, {3, 7, 7, -h},
          {4, 4, 8, q},  {5, 5, 8, q},  {6, 6, 8, q},  {7, 7, 8, q}};
}

using Table = std::map<std::string, std::vector<std::string>>;

inline Table two_sections() {
  return {{"Circle", {"12", "13", "14", "15", "16", "17", "23", "24", "25", "26", "27", "45", "46", "47", "56", "57", "67"}},
          {"Triangle", {"18", "28", "38"}},
          {"Parabola", {"34", "35", "36", "37"}},
          {"Ellipse", {"48", "58", "68", "78"}}};
}

inline Table three_sections() {
  return {{"Sphere", {"123", "124", "125", "126", "127", "145", "147", "156", "167", "245", "246", "257", "267",
                      "456", "457", "467", "567"}},
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

inline std::map<std::string, PureCount> pure_counts() {
  return {{"Circle", {0, false}},   {"Triangle", {3, false}},         {"Parabola", {2, false}},
          {"Ellipse", {1, false}},  {"Sphere", {0, false}},           {"Ellipsoid", {1, false}},
          {"Cone", {1, true}},      {"ObeseTetrahedron", {4, false}}, {"RS1", {2, false}},
          {"RS2", {3, false}},      {"Paraboloid", {0, true}}};
}

using Classes = std::vector<std::vector<std::string>>;

inline Classes two_section_classes() {
  return {{"12", "13", "23", "45", "67"},
          {"14", "15", "16", "17", "24", "25", "26", "27", "46", "47", "56", "57"},
          {"18", "28", "38"},
          {"34", "35", "36", "37"},
          {"48", "58", "68", "78"}};
}

inline Classes three_section_classes() {
  return {{"123"},
          {"124", "125", "126", "127", "145", "167", "245", "267", "456", "457", "467", "567"},
          {"128", "138", "238", "348", "358", "368", "378"},
          {"134", "135", "136", "137", "234", "235", "236", "237"},
          {"146", "157", "247", "256", "346", "347", "356", "357"},
          {"147", "156", "246", "257"},
          {"148", "158", "168", "178", "248", "258", "268", "278"},
          {"345", "367"},
          {"458", "678"},
          {"468", "478", "568", "578"}};
}

}  // namespace expected
