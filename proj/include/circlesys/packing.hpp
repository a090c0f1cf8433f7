#pragma once

#include <array>
#include <vector>

#include "circlesys/circle.hpp"
#include "circlesys/graph.hpp"

namespace circlesys {

/// Base graph plus one apex vertex per face. Base vertices keep their ids;
/// apex of face f is `base_count + f`.
struct Triangulation {
  EmbeddedGraph graph;
  int base_count = 0;
  std::vector<FaceId> apex_face;        // apex index -> face of the base graph
  std::array<VertexId, 3> boundary{};   // outer apex followed by an outer edge
};

Triangulation triangulate(const EmbeddedGraph& g);

struct Packing {
  std::vector<Circle> circles;  // indexed by base vertex id
  double residual = 0.0;
  long iterations = 0;
  friend bool operator==(const Packing&, const Packing&) = default;
};

struct PackOptions {
  double tol = 1e-9;
  long max_sweeps = 1'000'000;
  bool enforce_tolerance = true;  // throw NoConvergence if the final residual exceeds tol
};

/// Circle packing whose tangency graph is g: apex-augment every face, relax
/// the radii of the triangulation until every interior angle sum is 2pi, lay
/// the circles out from the boundary triangle, then drop the apex circles.
///
/// The boundary triangle (outer apex plus the first edge of the outer face)
/// gets three unit circles centered on an equilateral triangle of side 2
/// around the origin. Radii start at 1 and are swept in ascending vertex id.
Packing pack(const EmbeddedGraph& g, const PackOptions& options);
inline Packing pack(const EmbeddedGraph& g, double tol = 1e-9) {
  return pack(g, PackOptions{tol, 1'000'000, true});
}

/// Max of the relative tangency defect over edges and the relative overlap
/// over non-adjacent pairs.
double packing_residual(const Packing& p, const EmbeddedGraph& g);

}  // namespace circlesys
