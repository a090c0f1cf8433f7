#pragma once

#include <map>
#include <utility>
#include <vector>

#include "circlesys/graph.hpp"

namespace circlesys {

enum class FaceColor { Gray, White };

struct TwoColoring {
  std::vector<FaceColor> color;  // indexed by face id

  int count(FaceColor c) const;
};

/// Proper 2-coloring of the faces with the outer face white. Breadth-first
/// from the outer face, neighbors visited in dart order, so the result is
/// deterministic. Throws NotBipartiteDual for non-Eulerian inputs.
TwoColoring two_color_faces(const EmbeddedGraph& g);

struct IlEdge {
  FaceId a = -1;        // gray face of g
  FaceId b = -1;        // gray face of g (== a for a self-loop)
  VertexId shared = -1; // the vertex of g both faces pass through
};

/// Intersection graph of the gray faces. Vertex i of `graph` is gray face
/// `gray_faces[i]`; edge k of `graph` (darts 2k, 2k+1) is `edges[k]`, one per
/// vertex of g, so `graph.edge_of(d)` is the shared vertex. The rotation at a
/// gray face follows the order of its shared vertices along the face boundary.
struct ILGraph {
  std::vector<FaceId> gray_faces;
  std::vector<int> il_vertex_of_face;  // -1 for white faces
  std::vector<IlEdge> edges;           // indexed by vertex of g
  std::map<std::pair<FaceId, FaceId>, int> multiplicity;  // keyed (min, max)
  int selfloops = 0;
  EmbeddedGraph graph;
};

ILGraph build_il(const EmbeddedGraph& g, const TwoColoring& coloring);

struct SimplicityReport {
  bool simple = true;
  int selfloops = 0;
  std::vector<std::pair<FaceId, FaceId>> offending_pairs;
};

SimplicityReport il_simplicity(const ILGraph& il);

}  // namespace circlesys
