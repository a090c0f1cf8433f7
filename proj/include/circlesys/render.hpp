#pragma once

#include <string>

#include "circlesys/packing.hpp"
#include "circlesys/realization.hpp"

namespace circlesys {

struct RenderOptions {
  int width = 800;
  int height = 800;
  double circle_stroke = 1.5;
  double arc_stroke = 3.0;
  double point_radius = 4.0;
  bool circles = true;
  bool points = true;
  bool arcs = true;
  bool labels = true;
  bool shading = false;  // fill circle interiors (the gray faces of a touching realization)
};

/// Deterministic SVG of a realization. The drawing is fitted to the canvas
/// with a 5% margin and the y axis points up. Throws EmptyInput if there are
/// no circles, InvalidConfig for bad options.
std::string render_svg(const Realization& r, const RenderOptions& opts = {});
/// Circles of a packing, labeled by vertex; packings have no arcs or points.
std::string render_svg(const Packing& p, const RenderOptions& opts = {});

}  // namespace circlesys
