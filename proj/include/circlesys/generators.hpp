#pragma once

#include <array>
#include <string_view>
#include <utility>
#include <vector>

#include "circlesys/equivalence.hpp"
#include "circlesys/graph.hpp"
#include "circlesys/realization.hpp"

namespace circlesys {

/// Octahedron drawn as two nested triangles: outer 0, 1, 2 and inner 3, 4, 5.
EmbeddedGraph octahedron();

enum class Solid { Tetrahedron, Cube, Octahedron, Dodecahedron, Icosahedron };

std::string_view solid_name(Solid s);
EmbeddedGraph platonic(Solid s);

/// Analytic octahedron realizations: three crossing unit circles, or three
/// touching unit circles plus the inner or the enclosing Soddy circle.
Realization canonical_octahedron_realization(RealizationClass kind);

struct GraphWithRealization {
  EmbeddedGraph graph;
  Realization realization;
};

/// c equal circles centered on a regular c-gon, every pair crossing.
GraphWithRealization flower(int c);

/// Circle packing of a cubic graph (K4, or the (c/2)-prism): every circle has
/// exactly three tangency points.
GraphWithRealization upper_bound_family(int c, double tol = 1e-9);

/// Fragment with two degree-2 endpoints v1, v2; all other vertices degree 4.
/// `coords` is a planar straight-line drawing of `graph`.
struct GadgetFragment {
  EmbeddedGraph graph;
  std::vector<std::array<double, 2>> coords;
  VertexId v1 = -1;
  VertexId v2 = -1;
  VertexId w = -1;
  std::array<VertexId, 2> wi{-1, -1};
  std::array<VertexId, 2> wi_prime{-1, -1};  // bigadget only
  std::vector<std::pair<VertexId, VertexId>> skeleton_edges;
  std::array<std::vector<VertexId>, 2> loops;
};

GadgetFragment gadget();
GadgetFragment bigadget();

enum class GadgetKind { Gadget, Bigadget };

/// Octahedron with every edge subdivided by 4 * pairs_per_edge vertices and
/// gadgets attached in nested pairs on both sides of each edge.
EmbeddedGraph augment_octahedron(GadgetKind kind, int pairs_per_edge = 2);

}  // namespace circlesys
