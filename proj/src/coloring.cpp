#include "circlesys/coloring.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <string>

#include "circlesys/error.hpp"

namespace circlesys {

int TwoColoring::count(FaceColor c) const {
  return static_cast<int>(std::count(color.begin(), color.end(), c));
}

TwoColoring two_color_faces(const EmbeddedGraph& g) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "face coloring requires a connected graph");
  const int faces = g.face_count();
  std::vector<int> side(faces, -1);
  const FaceId outer = g.outer_face();
  side[outer] = 1;  // white
  std::queue<FaceId> q;
  q.push(outer);
  while (!q.empty()) {
    const FaceId f = q.front();
    q.pop();
    for (DartId d : g.face(f)) {
      const FaceId h = g.face_of(g.twin(d));
      if (side[h] < 0) {
        side[h] = 1 - side[f];
        q.push(h);
      } else if (side[h] == side[f]) {
        throw Error(Errc::NotBipartiteDual,
                    "faces " + std::to_string(f) + " and " + std::to_string(h) +
                        " share an edge but cannot receive different colors");
      }
    }
  }
  TwoColoring out;
  out.color.resize(faces);
  for (FaceId f = 0; f < faces; ++f) out.color[f] = side[f] == 1 ? FaceColor::White : FaceColor::Gray;
  return out;
}

ILGraph build_il(const EmbeddedGraph& g, const TwoColoring& coloring) {
  const int n = g.vertex_count();
  ILGraph il;
  il.il_vertex_of_face.assign(g.face_count(), -1);
  for (FaceId f = 0; f < g.face_count(); ++f) {
    if (coloring.color[f] == FaceColor::Gray) {
      il.il_vertex_of_face[f] = static_cast<int>(il.gray_faces.size());
      il.gray_faces.push_back(f);
    }
  }

  // The corner of face_of(d) at head(d) sits between d and face_next(d).
  il.edges.resize(n);
  for (VertexId v = 0; v < n; ++v) {
    std::vector<FaceId> gray;
    for (DartId out : g.rotation(v)) {
      const FaceId f = g.face_of(g.twin(out));
      if (coloring.color[f] == FaceColor::Gray) gray.push_back(f);
    }
    if (gray.size() != 2)
      throw Error(Errc::VertexNotOnTwoGrayFaces,
                  "vertex " + std::to_string(v) + " has " + std::to_string(gray.size()) +
                      " gray corners");
    il.edges[v] = {gray[0], gray[1], v};
    if (gray[0] == gray[1]) {
      ++il.selfloops;
    } else {
      ++il.multiplicity[{std::min(gray[0], gray[1]), std::max(gray[0], gray[1])}];
    }
  }

  std::vector<Dart> darts(2 * n);
  std::vector<DartId> twin(2 * n);
  for (VertexId v = 0; v < n; ++v) {
    darts[2 * v] = {il.il_vertex_of_face[il.edges[v].a], il.il_vertex_of_face[il.edges[v].b]};
    darts[2 * v + 1] = {darts[2 * v].head, darts[2 * v].tail};
    twin[2 * v] = 2 * v + 1;
    twin[2 * v + 1] = 2 * v;
  }
  // Gray faces are traced clockwise; reverse to get counterclockwise rotations.
  std::vector<std::vector<DartId>> rotation(il.gray_faces.size());
  std::vector<char> first_side_used(n, 0);
  for (std::size_t i = 0; i < il.gray_faces.size(); ++i) {
    const FaceId f = il.gray_faces[i];
    auto cycle = g.face(f);
    for (auto it = cycle.rbegin(); it != cycle.rend(); ++it) {
      const VertexId v = g.dart(*it).head;
      const IlEdge& e = il.edges[v];
      DartId out;
      if (e.a == e.b) {
        out = first_side_used[v] ? 2 * v + 1 : 2 * v;
        first_side_used[v] = 1;
      } else {
        out = (e.a == f) ? 2 * v : 2 * v + 1;
      }
      rotation[i].push_back(out);
    }
  }
  EmbeddedGraph graph = EmbeddedGraph::from_darts(static_cast<int>(il.gray_faces.size()),
                                                  std::move(darts), std::move(twin),
                                                  std::move(rotation));

  // The faces of IL(G) correspond to the white faces of g; make the one that
  // matches g's outer face the outer face of IL(G).
  const auto outer_vertices = g.face_vertices(g.outer_face());
  const std::set<VertexId> target(outer_vertices.begin(), outer_vertices.end());
  for (FaceId h = 0; h < graph.face_count(); ++h) {
    std::set<VertexId> labels;
    for (DartId d : graph.face(h)) labels.insert(graph.edge_of(d));
    if (labels == target && graph.face(h).size() == outer_vertices.size()) {
      graph = graph.with_outer_face(h);
      break;
    }
  }
  il.graph = std::move(graph);
  return il;
}

SimplicityReport il_simplicity(const ILGraph& il) {
  SimplicityReport report;
  report.selfloops = il.selfloops;
  for (const auto& [pair, count] : il.multiplicity)
    if (count > 1) report.offending_pairs.push_back(pair);
  report.simple = report.selfloops == 0 && report.offending_pairs.empty();
  return report;
}

}  // namespace circlesys
