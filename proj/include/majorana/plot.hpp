#pragma once

// SVG rendering of Majorana points on two orthographic hemisphere views.
// Front view: viewer on the -y axis, north pole up, +x to the right.
// Back view: viewer on the +y axis, north pole up, -x to the right.

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "majorana/classify.hpp"

namespace majorana {

struct PlotMarker {
  SpherePointd point;
  int multiplicity = 1;
};

/// A circle on the sphere: the intersection with the plane normal . x = offset.
struct PlotCircle {
  Eigen::Vector3d normal;
  double offset = 0;
};

struct PlotSpec {
  std::vector<PlotMarker> markers;
  std::vector<PlotCircle> circles;
  double radius = 120;  ///< sphere radius in pixels
};

/// Screen position (x right, y up, unit sphere) of p in the front or back view,
/// and whether p lies on the visible hemisphere.
Eigen::Vector2d project(const Eigen::Vector3d& p, bool back, bool* visible = nullptr);

PlotSpec make_plot_spec(const ClusteredRoots& sites, const CircleSignature* circles = nullptr);

std::string render_svg(const PlotSpec& spec);

}  // namespace majorana
