#include <algorithm>
#include <cmath>
#include <numbers>

#include "circlesys/error.hpp"
#include "circlesys/generators.hpp"

namespace circlesys {

namespace {

using Coord = std::array<double, 2>;
using EdgeList = std::vector<std::pair<VertexId, VertexId>>;

// Octahedron drawing used for the loop pieces (same layout as octahedron()).
const std::vector<Coord> kOctahedron = {
    {0.0, 10.0}, {-9.0, -5.0}, {9.0, -5.0}, {0.0, -2.0}, {1.7, 1.0}, {-1.7, 1.0}};
const EdgeList kOctahedronEdges = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
                                   {0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}};

// Octahedron with edge A1-A2 subdivided once; the subdivision vertex is
// `merge`, and the piece sits above it at a tenth of the drawing scale.
void add_loop(std::vector<Coord>& coords, EdgeList& edges, std::vector<VertexId>& loop,
              VertexId merge) {
  const VertexId base = static_cast<VertexId>(coords.size());
  const Coord at = coords[merge];
  for (const Coord& p : kOctahedron) coords.push_back({at[0] + 0.1 * p[0], at[1] + 0.1 * (p[1] + 5.0)});
  for (auto [a, b] : kOctahedronEdges) {
    if ((a == 1 && b == 2) || (a == 2 && b == 1)) continue;
    edges.emplace_back(base + a, base + b);
  }
  edges.emplace_back(base + 1, merge);
  edges.emplace_back(merge, base + 2);
  loop.push_back(merge);
  for (int i = 0; i < 6; ++i) loop.push_back(base + i);
}

// Octahedron turned half a turn with the two edges at its bottom vertex
// replaced by a path q - A0 - p, plus the edges q-A2, p-A1 and q-p. The
// piece sits above q with p one unit to the right of q.
void add_biloop(std::vector<Coord>& coords, EdgeList& edges, std::vector<VertexId>& loop,
                VertexId q, VertexId p) {
  const VertexId base = static_cast<VertexId>(coords.size());
  const Coord at = coords[q];
  for (const Coord& c : kOctahedron)
    coords.push_back({at[0] + (-c[0] + 6.0) / 12.0, at[1] + (-c[1] + 12.0) / 12.0});
  for (auto [a, b] : kOctahedronEdges) {
    if ((a == 0 && (b == 1 || b == 2)) || (b == 0 && (a == 1 || a == 2))) continue;
    edges.emplace_back(base + a, base + b);
  }
  edges.emplace_back(q, base + 0);
  edges.emplace_back(p, base + 0);
  edges.emplace_back(q, base + 2);
  edges.emplace_back(p, base + 1);
  loop.push_back(q);
  loop.push_back(p);
  for (int i = 0; i < 6; ++i) loop.push_back(base + i);
}

}  // namespace

GadgetFragment gadget() {
  GadgetFragment f;
  f.coords = {{0.0, 0.0}, {4.0, 0.0}, {2.0, 1.0}, {1.0, 2.0}, {3.0, 2.0}};
  f.v1 = 0;
  f.v2 = 1;
  f.w = 2;
  f.wi = {3, 4};
  f.skeleton_edges = {{0, 2}, {1, 2}, {3, 2}, {4, 2}, {0, 3}, {1, 4}};
  EdgeList edges = f.skeleton_edges;
  for (int i = 0; i < 2; ++i) add_loop(f.coords, edges, f.loops[i], f.wi[i]);
  f.graph = embedding_from_drawing(f.coords, edges);
  return f;
}

GadgetFragment bigadget() {
  GadgetFragment f;
  f.coords = {{0.0, 0.0}, {4.0, 0.0}, {2.0, 1.0}, {0.5, 2.0}, {1.5, 2.0}, {3.5, 2.0}, {2.5, 2.0}};
  f.v1 = 0;
  f.v2 = 1;
  f.w = 2;
  f.wi = {3, 5};
  f.wi_prime = {4, 6};
  f.skeleton_edges = {{0, 2}, {1, 2}, {0, 3}, {1, 5}, {4, 2}, {6, 2}, {3, 4}, {5, 6}};
  EdgeList edges = f.skeleton_edges;
  add_biloop(f.coords, edges, f.loops[0], f.wi[0], f.wi_prime[0]);
  add_biloop(f.coords, edges, f.loops[1], f.wi_prime[1], f.wi[1]);
  f.graph = embedding_from_drawing(f.coords, edges);
  return f;
}

EmbeddedGraph augment_octahedron(GadgetKind kind, int pairs_per_edge) {
  if (pairs_per_edge < 2) throw Error(Errc::UnsupportedInput, "need at least two gadget pairs per edge");
  const GadgetFragment frag = kind == GadgetKind::Gadget ? gadget() : bigadget();
  const EmbeddedGraph oct = octahedron();
  const int per_edge = 4 * pairs_per_edge;
  const int n0 = oct.vertex_count();
  auto z = [&](EdgeId e, int j) { return n0 + e * per_edge + (j - 1); };  // j in 1..per_edge

  // Endpoint pairs along one edge, by subdivision index, with the side they
  // hang on. Blocks of eight follow the nesting (1,6),(2,5) | (3,8),(4,7);
  // an odd leftover block of four uses (1,4),(2,3) on the first side.
  struct Attach {
    int a, b;
    bool north;
  };
  std::vector<Attach> pattern;
  int offset = 0;
  for (; offset + 8 <= per_edge; offset += 8) {
    pattern.push_back({offset + 1, offset + 6, true});
    pattern.push_back({offset + 2, offset + 5, true});
    pattern.push_back({offset + 3, offset + 8, false});
    pattern.push_back({offset + 4, offset + 7, false});
  }
  if (offset < per_edge) {
    pattern.push_back({offset + 1, offset + 4, true});
    pattern.push_back({offset + 2, offset + 3, true});
  }

  const int frag_n = frag.graph.vertex_count();
  const auto frag_rot = frag.graph.rotation_lists();
  int next_id = n0 + oct.edge_count() * per_edge;
  std::vector<std::vector<VertexId>> rotation(next_id);

  for (VertexId u = 0; u < n0; ++u) {
    for (DartId d : oct.rotation(u)) {
      const EdgeId e = oct.edge_of(d);
      const bool forward = oct.edge_dart(e) == d;
      rotation[u].push_back(forward ? z(e, 1) : z(e, per_edge));
    }
  }

  for (EdgeId e = 0; e < oct.edge_count(); ++e) {
    const auto [tail, head] = oct.edge_endpoints(e);
    // Gadget neighbors of each subdivision vertex, sorted by drawing angle.
    std::vector<std::vector<std::pair<double, VertexId>>> hang(per_edge + 1);
    std::vector<char> north_side(per_edge + 1, 0);
    for (const Attach& at : pattern) {
      std::vector<VertexId> id(frag_n, -1);
      id[frag.v1] = z(e, at.a);
      id[frag.v2] = z(e, at.b);
      for (VertexId x = 0; x < frag_n; ++x)
        if (id[x] < 0) id[x] = next_id++;
      rotation.resize(next_id);
      const double flip = at.north ? 1.0 : -1.0;
      for (VertexId x = 0; x < frag_n; ++x) {
        if (x == frag.v1 || x == frag.v2) continue;
        auto& rot = rotation[id[x]];
        for (VertexId y : frag_rot[x]) rot.push_back(id[y]);
        if (!at.north) std::reverse(rot.begin(), rot.end());  // mirror image
      }
      for (auto [end, j] : {std::pair{frag.v1, at.a}, std::pair{frag.v2, at.b}}) {
        north_side[j] = at.north;
        for (VertexId y : frag_rot[end]) {
          const double dx = frag.coords[y][0] - frag.coords[end][0];
          const double dy = flip * (frag.coords[y][1] - frag.coords[end][1]);
          double angle = std::atan2(dy, dx);
          if (angle < 0.0) angle += 2.0 * std::numbers::pi;
          hang[j].emplace_back(angle, id[y]);
        }
      }
    }
    for (int j = 1; j <= per_edge; ++j) {
      const VertexId prev = j == 1 ? tail : z(e, j - 1);
      const VertexId next = j == per_edge ? head : z(e, j + 1);
      std::sort(hang[j].begin(), hang[j].end());
      auto& rot = rotation[z(e, j)];
      rot.push_back(next);
      if (!north_side[j]) rot.push_back(prev);
      for (const auto& [angle, y] : hang[j]) rot.push_back(y);
      if (north_side[j]) rot.push_back(prev);
    }
  }
  return build_embedding(rotation);
}

}  // namespace circlesys
