#pragma once

#include <optional>
#include <string>
#include <vector>

#include "circlesys/circle.hpp"
#include "circlesys/graph.hpp"

namespace circlesys {

/// TOUCH and CROSS points lie on two circles. SUBDIVISION points are degree-2
/// vertices inside an arc; they lie on one circle and have `b == -1`.
enum class PointKind { Touch, Cross, Subdivision };

struct RealPoint {
  double x = 0.0;
  double y = 0.0;
  int a = -1;  // circle ids
  int b = -1;
  double angle_a = 0.0;
  double angle_b = 0.0;
  PointKind kind = PointKind::Touch;

  Point2 pos() const { return {x, y}; }
  bool on(int circle) const { return a == circle || b == circle; }
  double angle_on_circle(int circle) const { return circle == a ? angle_a : angle_b; }
  friend bool operator==(const RealPoint&, const RealPoint&) = default;
};

/// Counterclockwise arc of `circle` from `from_point` to `to_point`.
struct Arc {
  int circle = -1;
  double from_angle = 0.0;
  double to_angle = 0.0;
  int edge = -1;
  int from_point = -1;
  int to_point = -1;

  double extent() const { return ccw_extent(from_angle, to_angle); }
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// A system of circles. Point i is vertex i of the drawn graph.
struct Realization {
  std::vector<Circle> circles;
  std::vector<RealPoint> points;
  std::vector<Arc> arcs;
  friend bool operator==(const Realization&, const Realization&) = default;
};

/// Rebuilds the arc list from the points: consecutive points by angle on each
/// circle bound one arc. Arc `edge` fields are set to the arc index.
void rebuild_arcs(Realization& r);

/// All pairwise intersections of the given circles become points (TOUCH when
/// the tangency defect is within `tol`), then arcs are rebuilt.
Realization assemble_from_circles(const std::vector<Circle>& circles, double tol = 1e-9);

/// Touching-circle realization of a 3-connected 4-regular plane graph: one
/// circle per gray face, packed along IL(g). Point v is vertex v of g and arc
/// `edge` fields are edge ids of g.
Realization realize(const EmbeddedGraph& g, double tol = 1e-9);

struct Violation {
  std::string rule;
  std::string detail;
};

struct VerifyReport {
  bool ok = true;
  int circles = 0;
  int points = 0;
  std::vector<Violation> violations;
};

VerifyReport verify_realization(const Realization& r, const EmbeddedGraph* g = nullptr,
                                double tol = 1e-8);

/// Graph drawn by r: vertices are points, edges are arcs (dart 2i runs
/// counterclockwise along arc i, so its right-hand face is outside the circle).
EmbeddedGraph extract_abstract_graph(const Realization& r, double tol = 1e-8);

/// Face of `drawn` (the extracted graph of r) that is unbounded in the plane.
FaceId geometric_outer_face(const Realization& r, const EmbeddedGraph& drawn);

struct BoundsResult {
  int n = 0;
  double lower = 0.0;
  double upper = 0.0;
};

BoundsResult circle_count_bounds(int n);

/// lower <= c <= upper, decided in integer arithmetic: c(c-1) >= n and 3c <= 2n.
bool within_bounds(int n, int c);

/// For an octahedron realization: does the interior face sharing no vertex
/// with the outer face have a bounding arc of central angle below pi?
bool innermost_face_arc_check(const Realization& r);

/// Inserts k evenly spaced degree-2 points inside every arc.
Realization subdivide_realization(const Realization& r, int k);

}  // namespace circlesys
