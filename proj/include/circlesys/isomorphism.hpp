#pragma once

#include <optional>
#include <vector>

#include "circlesys/graph.hpp"

namespace circlesys {

/// Directed multigraph with vertex colors, stored as an arc-count matrix.
/// Undirected graphs are represented by a symmetric matrix.
struct ColoredDigraph {
  int n = 0;
  std::vector<int> color;                 // size n; all zero if uncolored
  std::vector<std::vector<int>> arcs;     // arcs[i][j] = number of arcs i -> j

  explicit ColoredDigraph(int vertex_count = 0)
      : n(vertex_count), color(vertex_count, 0), arcs(vertex_count, std::vector<int>(vertex_count, 0)) {}
};

ColoredDigraph undirected_of(const EmbeddedGraph& g);

/// Backtracking search for a color- and arc-preserving bijection a -> b.
/// Candidates are pruned by color-refinement classes computed jointly on both
/// graphs and by arc consistency with every vertex mapped so far.
std::optional<std::vector<int>> find_isomorphism(const ColoredDigraph& a, const ColoredDigraph& b);

inline bool isomorphic(const ColoredDigraph& a, const ColoredDigraph& b) {
  return find_isomorphism(a, b).has_value();
}

/// Isomorphism of the underlying abstract (multi)graphs, ignoring embeddings.
bool isomorphic(const EmbeddedGraph& a, const EmbeddedGraph& b);

}  // namespace circlesys
