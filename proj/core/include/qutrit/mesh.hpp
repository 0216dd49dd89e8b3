#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "qutrit/section_spec.hpp"

namespace qutrit {

/// Triangulated boundary of a three-section, in span coordinates.
struct SectionMesh {
  SectionSpec spec;
  int resolution = 0;
  std::vector<Eigen::Vector3d> vertices;
  std::vector<std::array<int, 3>> faces;
};

/// Distance from the origin to the section boundary along a nonzero span
/// direction (normalized internally).
double section_radius(const SectionSpec& spec, const Eigen::VectorXd& direction);

/// Latitude-longitude grid: `resolution` latitude bands, 2 * resolution
/// longitudes, one vertex at each pole. The polar axis is the last span
/// coordinate. Each vertex is cast onto the boundary with boundary_radius.
/// Throws std::invalid_argument for resolution < 2 or a section that is not
/// three-dimensional.
SectionMesh section_mesh(const SectionSpec& spec, int resolution);

}  // namespace qutrit
