#pragma once

#include <array>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace circlesys {

using VertexId = int;
using DartId = int;
using EdgeId = int;
using FaceId = int;

struct Dart {
  VertexId tail = -1;
  VertexId head = -1;
};

/// A graph together with a rotation system (counterclockwise cyclic order of
/// outgoing darts at each vertex). Faces are traced by
/// `next(d) = rotation successor of twin(d)`, which keeps each face on the
/// right-hand side of its darts: bounded faces come out clockwise, the
/// unbounded one counterclockwise.
///
/// Immutable once constructed. Construction validates the involution, the
/// rotation partition and Euler's formula per connected component.
class EmbeddedGraph {
 public:
  EmbeddedGraph() = default;

  static EmbeddedGraph from_darts(int vertex_count, std::vector<Dart> darts,
                                  std::vector<DartId> twin,
                                  std::vector<std::vector<DartId>> rotation,
                                  std::optional<FaceId> outer_face = std::nullopt,
                                  bool require_simple = false);

  int vertex_count() const noexcept { return vertex_count_; }
  int dart_count() const noexcept { return static_cast<int>(darts_.size()); }
  int edge_count() const noexcept { return dart_count() / 2; }
  int face_count() const noexcept { return static_cast<int>(faces_.size()); }

  const Dart& dart(DartId d) const { return darts_[d]; }
  DartId twin(DartId d) const { return twin_[d]; }
  EdgeId edge_of(DartId d) const { return edge_of_[d]; }
  /// Lower-numbered dart of an edge; it runs from the edge's first endpoint.
  DartId edge_dart(EdgeId e) const { return edge_dart_[e]; }
  std::pair<VertexId, VertexId> edge_endpoints(EdgeId e) const {
    const Dart& d = darts_[edge_dart_[e]];
    return {d.tail, d.head};
  }

  std::span<const DartId> rotation(VertexId v) const { return rotation_[v]; }
  int degree(VertexId v) const { return static_cast<int>(rotation_[v].size()); }
  int rotation_index(DartId d) const { return rot_index_[d]; }
  DartId rotation_next(DartId d) const;
  DartId rotation_prev(DartId d) const;
  DartId face_next(DartId d) const { return rotation_next(twin_[d]); }

  FaceId face_of(DartId d) const { return face_of_[d]; }
  std::span<const DartId> face(FaceId f) const { return faces_[f]; }
  std::vector<VertexId> face_vertices(FaceId f) const;
  FaceId outer_face() const noexcept { return outer_face_; }

  std::vector<VertexId> neighbors(VertexId v) const;
  /// Neighbor lists in rotation order; the inverse of `build_embedding`.
  std::vector<std::vector<VertexId>> rotation_lists() const;

  bool is_simple() const;
  bool is_regular(int degree) const;
  int component_count() const;

  EmbeddedGraph with_outer_face(FaceId f) const;

 private:
  void trace_faces();
  void validate(bool require_simple) const;

  int vertex_count_ = 0;
  std::vector<Dart> darts_;
  std::vector<DartId> twin_;
  std::vector<EdgeId> edge_of_;
  std::vector<DartId> edge_dart_;
  std::vector<std::vector<DartId>> rotation_;
  std::vector<int> rot_index_;
  std::vector<std::vector<DartId>> faces_;
  std::vector<FaceId> face_of_;
  FaceId outer_face_ = -1;
};

/// Builds an embedding from per-vertex counterclockwise neighbor sequences.
/// Parallel edges between u and v are paired so that the k-th occurrence of v
/// around u matches the k-th occurrence of u around v counted backwards; the
/// two occurrences of a self-loop are paired consecutively.
EmbeddedGraph build_embedding(const std::vector<std::vector<VertexId>>& rotation,
                              bool require_simple = true,
                              std::optional<FaceId> outer_face = std::nullopt);

/// Rotation system read off a straight-line drawing (neighbors sorted by angle).
EmbeddedGraph embedding_from_drawing(const std::vector<std::array<double, 2>>& coords,
                                     const std::vector<std::pair<VertexId, VertexId>>& edges,
                                     bool require_simple = true);

/// Rotation system of a convex polyhedron centered at the origin: neighbors of
/// each vertex are sorted counterclockwise as seen from outside.
EmbeddedGraph embedding_from_polyhedron(const std::vector<std::array<double, 3>>& coords,
                                        const std::vector<std::pair<VertexId, VertexId>>& edges);

std::vector<std::vector<VertexId>> adjacency_lists(const EmbeddedGraph& g);

bool is_connected(const EmbeddedGraph& g);

/// Vertex connectivity capped at 3; 0 for disconnected graphs. Runs the
/// per-vertex articulation search in parallel.
int connectivity_level(const EmbeddedGraph& g);

/// Same result by exhaustive removal of every vertex subset of size <= 2.
/// Serial; kept as the reference for `connectivity_level`.
int connectivity_level_reference(const EmbeddedGraph& g);

/// Articulation points of the graph with `removed` (if >= 0) deleted.
std::vector<VertexId> articulation_points(const std::vector<std::vector<VertexId>>& adj,
                                          VertexId removed = -1);

EmbeddedGraph dual(const EmbeddedGraph& g);
EmbeddedGraph medial(const EmbeddedGraph& g);
EmbeddedGraph subdivide_edges(const EmbeddedGraph& g, int k);

/// 2-coloring of the vertices, or nullopt if the graph has an odd cycle.
std::optional<std::vector<int>> bipartition(const EmbeddedGraph& g);

}  // namespace circlesys
