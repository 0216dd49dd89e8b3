#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "qutrit/section_spec.hpp"

namespace qutrit {

/// One-parameter family of pure states on a section, in span coordinates.
struct PureCircle {
  Eigen::Vector3d centre;
  Eigen::Vector3d normal;  // unit normal of the circle's plane
  double radius = 0.0;
  int support = 0;         // solver hits lying on the circle

  /// Point at the given angle; first `dim` coordinates are meaningful.
  Eigen::VectorXd point(double angle, int dim) const;
};

struct PureStateSet {
  SectionSpec spec;
  std::vector<Eigen::VectorXd> isolated;  // span coordinates, sorted
  std::optional<PureCircle> circle;

  int isolated_count() const { return static_cast<int>(isolated.size()); }
};

/// Solves n * n = n on the span by damped Newton from a 20^k seed grid,
/// keeps the |n| = 1 solutions (deduplicated at 1e-6) and separates a circle
/// of pure states when at least 50 distinct solutions share one.
/// k in {2, 3}.
PureStateSet pure_states_on_section(const SectionSpec& spec);

}  // namespace qutrit
