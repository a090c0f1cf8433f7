#pragma once

#include <string_view>
#include <vector>

#include "circlesys/graph.hpp"
#include "circlesys/realization.hpp"

namespace circlesys {

/// Merges the two arcs at every degree-2 point and drops the point. Point ids
/// are renumbered in their original order.
Realization smooth_degree_two(const Realization& r);

/// Directed dual of a realization. Nodes are the bounded faces of the drawn
/// graph; every arc yields one edge from the face inside its circle to the face
/// outside. The outer face is not a node: edges touching it keep -1 as that
/// endpoint, so in-degree plus out-degree of a node equals its face length.
struct OrientedDual {
  struct Edge {
    int tail = -1;
    int head = -1;
    int arc = -1;
    friend bool operator==(const Edge&, const Edge&) = default;
  };
  std::vector<FaceId> nodes;  // face ids of the drawn graph, ascending
  std::vector<Edge> edges;    // tail/head are face ids or -1
  friend bool operator==(const OrientedDual&, const OrientedDual&) = default;

  int out_degree(FaceId f) const;
  int in_degree(FaceId f) const;
  /// Number of nodes with the given out-degree.
  int count_out_degree(int k) const;
};

OrientedDual oriented_dual(const Realization& r);

bool digraph_isomorphic(const OrientedDual& a, const OrientedDual& b);

/// Smooths both realizations, then compares their oriented duals.
bool equivalent(const Realization& a, const Realization& b);

enum class RealizationClass { ThreeCrossing, FourTouchingDisjoint, FourTouchingNested };

std::string_view class_name(RealizationClass k);
RealizationClass class_from_name(std::string_view name);

/// Matches the oriented dual of r against the three canonical octahedron
/// realizations. Throws NoClassMatch if none is isomorphic.
RealizationClass classify_octahedron(const Realization& r);

}  // namespace circlesys
