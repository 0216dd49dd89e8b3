#include "qutrit/mesh.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qutrit/statespace.hpp"

namespace qutrit {

double section_radius(const SectionSpec& spec, const Eigen::VectorXd& direction) {
  const double norm = direction.norm();
  if (norm == 0.0) throw std::invalid_argument("section_radius: zero direction");
  return boundary_radius(spec.embed(direction / norm));
}

SectionMesh section_mesh(const SectionSpec& spec, int resolution) {
  if (spec.size() != 3) throw std::invalid_argument("section_mesh: need a three-section");
  if (resolution < 2) throw std::invalid_argument("section_mesh: resolution must be at least 2");

  SectionMesh mesh{spec, resolution, {}, {}};
  const int lat = resolution;
  const int lon = 2 * resolution;
  const auto push = [&](const Eigen::Vector3d& dir) {
    mesh.vertices.push_back(section_radius(spec, dir) * dir.normalized());
  };

  push(Eigen::Vector3d(0.0, 0.0, 1.0));
  for (int i = 1; i < lat; ++i) {
    const double theta = std::numbers::pi * i / lat;
    for (int j = 0; j < lon; ++j) {
      const double phi = 2.0 * std::numbers::pi * j / lon;
      push(Eigen::Vector3d(std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)));
    }
  }
  push(Eigen::Vector3d(0.0, 0.0, -1.0));

  const int south = static_cast<int>(mesh.vertices.size()) - 1;
  const auto ring = [lon](int i, int j) { return 1 + (i - 1) * lon + (j % lon); };
  for (int j = 0; j < lon; ++j) mesh.faces.push_back({0, ring(1, j), ring(1, j + 1)});
  for (int i = 1; i < lat - 1; ++i) {
    for (int j = 0; j < lon; ++j) {
      mesh.faces.push_back({ring(i, j), ring(i + 1, j), ring(i + 1, j + 1)});
      mesh.faces.push_back({ring(i, j), ring(i + 1, j + 1), ring(i, j + 1)});
    }
  }
  for (int j = 0; j < lon; ++j) mesh.faces.push_back({ring(lat - 1, j), south, ring(lat - 1, j + 1)});
  return mesh;
}

}  // namespace qutrit
