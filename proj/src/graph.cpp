#include "circlesys/graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <string>

#include "circlesys/error.hpp"

namespace circlesys {

namespace {

// Union-find over vertices, used for per-component Euler checks.
class Components {
 public:
  explicit Components(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }

 private:
  std::vector<int> parent_;
};

}  // namespace

EmbeddedGraph EmbeddedGraph::from_darts(int vertex_count, std::vector<Dart> darts,
                                        std::vector<DartId> twin,
                                        std::vector<std::vector<DartId>> rotation,
                                        std::optional<FaceId> outer_face, bool require_simple) {
  EmbeddedGraph g;
  g.vertex_count_ = vertex_count;
  g.darts_ = std::move(darts);
  g.twin_ = std::move(twin);
  g.rotation_ = std::move(rotation);
  if (static_cast<int>(g.rotation_.size()) != vertex_count)
    throw Error(Errc::MalformedRotation, "rotation list count differs from vertex count");
  if (g.twin_.size() != g.darts_.size())
    throw Error(Errc::MalformedRotation, "twin table size differs from dart count");
  g.validate(require_simple);

  const int m = g.dart_count();
  g.rot_index_.assign(m, -1);
  for (VertexId v = 0; v < vertex_count; ++v)
    for (int i = 0; i < g.degree(v); ++i) g.rot_index_[g.rotation_[v][i]] = i;

  g.edge_of_.assign(m, -1);
  for (DartId d = 0; d < m; ++d) {
    if (g.edge_of_[d] >= 0) continue;
    const EdgeId e = static_cast<EdgeId>(g.edge_dart_.size());
    g.edge_dart_.push_back(d);
    g.edge_of_[d] = e;
    g.edge_of_[g.twin_[d]] = e;
  }

  g.trace_faces();

  // Euler's formula per connected component (isolated vertices count one face).
  Components comp(vertex_count);
  for (const Dart& d : g.darts_) comp.unite(d.tail, d.head);
  std::map<int, std::array<long, 3>> tally;  // root -> {V, E, F}
  for (VertexId v = 0; v < vertex_count; ++v) tally[comp.find(v)][0] += 1;
  for (DartId d = 0; d < m; ++d)
    if (d < g.twin_[d]) tally[comp.find(g.darts_[d].tail)][1] += 1;
  for (const auto& f : g.faces_) tally[comp.find(g.darts_[f.front()].tail)][2] += 1;
  for (auto& [root, c] : tally) {
    if (c[1] == 0) c[2] = 1;
    if (c[0] - c[1] + c[2] != 2)
      throw Error(Errc::NonPlanarEmbedding,
                  "Euler characteristic " + std::to_string(c[0] - c[1] + c[2]) +
                      " on a component with V=" + std::to_string(c[0]) +
                      " E=" + std::to_string(c[1]) + " F=" + std::to_string(c[2]));
  }

  if (outer_face) {
    if (*outer_face < 0 || *outer_face >= g.face_count())
      throw Error(Errc::MalformedRotation, "outer face id out of range");
    g.outer_face_ = *outer_face;
  } else if (!g.faces_.empty()) {
    // Largest face, smallest id on ties.
    FaceId best = 0;
    for (FaceId f = 1; f < g.face_count(); ++f)
      if (g.faces_[f].size() > g.faces_[best].size()) best = f;
    g.outer_face_ = best;
  }
  return g;
}

void EmbeddedGraph::validate(bool require_simple) const {
  const int m = dart_count();
  for (DartId d = 0; d < m; ++d) {
    const Dart& a = darts_[d];
    if (a.tail < 0 || a.tail >= vertex_count_ || a.head < 0 || a.head >= vertex_count_)
      throw Error(Errc::MalformedRotation, "dart endpoint out of range");
    const DartId t = twin_[d];
    if (t < 0 || t >= m || t == d || twin_[t] != d)
      throw Error(Errc::MalformedRotation, "dart reversal is not a fixed-point-free involution");
    if (darts_[t].tail != a.head || darts_[t].head != a.tail)
      throw Error(Errc::MalformedRotation, "twin dart does not reverse its partner");
  }
  std::vector<int> seen(m, 0);
  for (VertexId v = 0; v < vertex_count_; ++v) {
    for (DartId d : rotation_[v]) {
      if (d < 0 || d >= m || darts_[d].tail != v)
        throw Error(Errc::MalformedRotation, "rotation of a vertex lists a foreign dart");
      if (seen[d]++)
        throw Error(Errc::MalformedRotation, "dart listed twice in the rotation system");
    }
  }
  if (std::find(seen.begin(), seen.end(), 0) != seen.end())
    throw Error(Errc::MalformedRotation, "rotation system does not cover every dart");
  if (require_simple) {
    std::set<std::pair<VertexId, VertexId>> pairs;
    for (const Dart& d : darts_) {
      if (d.tail == d.head) throw Error(Errc::NotSimple, "self-loop present");
      if (!pairs.emplace(d.tail, d.head).second)
        throw Error(Errc::NotSimple, "parallel edges present");
    }
  }
}

void EmbeddedGraph::trace_faces() {
  const int m = dart_count();
  face_of_.assign(m, -1);
  faces_.clear();
  for (DartId start = 0; start < m; ++start) {
    if (face_of_[start] >= 0) continue;
    const FaceId f = static_cast<FaceId>(faces_.size());
    std::vector<DartId> cycle;
    DartId d = start;
    do {
      face_of_[d] = f;
      cycle.push_back(d);
      d = face_next(d);
    } while (d != start);
    faces_.push_back(std::move(cycle));
  }
}

DartId EmbeddedGraph::rotation_next(DartId d) const {
  const auto& rot = rotation_[darts_[d].tail];
  return rot[(rot_index_[d] + 1) % rot.size()];
}

DartId EmbeddedGraph::rotation_prev(DartId d) const {
  const auto& rot = rotation_[darts_[d].tail];
  return rot[(rot_index_[d] + rot.size() - 1) % rot.size()];
}

std::vector<VertexId> EmbeddedGraph::face_vertices(FaceId f) const {
  std::vector<VertexId> out;
  out.reserve(faces_[f].size());
  for (DartId d : faces_[f]) out.push_back(darts_[d].tail);
  return out;
}

std::vector<VertexId> EmbeddedGraph::neighbors(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(rotation_[v].size());
  for (DartId d : rotation_[v]) out.push_back(darts_[d].head);
  return out;
}

std::vector<std::vector<VertexId>> EmbeddedGraph::rotation_lists() const {
  std::vector<std::vector<VertexId>> out(vertex_count_);
  for (VertexId v = 0; v < vertex_count_; ++v) out[v] = neighbors(v);
  return out;
}

bool EmbeddedGraph::is_simple() const {
  std::set<std::pair<VertexId, VertexId>> pairs;
  for (const Dart& d : darts_) {
    if (d.tail == d.head) return false;
    if (!pairs.emplace(d.tail, d.head).second) return false;
  }
  return true;
}

bool EmbeddedGraph::is_regular(int k) const {
  for (VertexId v = 0; v < vertex_count_; ++v)
    if (degree(v) != k) return false;
  return true;
}

int EmbeddedGraph::component_count() const {
  Components comp(vertex_count_);
  for (const Dart& d : darts_) comp.unite(d.tail, d.head);
  std::set<int> roots;
  for (VertexId v = 0; v < vertex_count_; ++v) roots.insert(comp.find(v));
  return static_cast<int>(roots.size());
}

EmbeddedGraph EmbeddedGraph::with_outer_face(FaceId f) const {
  if (f < 0 || f >= face_count()) throw Error(Errc::MalformedRotation, "outer face id out of range");
  EmbeddedGraph copy = *this;
  copy.outer_face_ = f;
  return copy;
}

EmbeddedGraph build_embedding(const std::vector<std::vector<VertexId>>& rotation,
                              bool require_simple, std::optional<FaceId> outer_face) {
  const int n = static_cast<int>(rotation.size());
  std::vector<Dart> darts;
  std::vector<std::vector<DartId>> rot(n);
  // occurrences[(u, v)] = dart ids of u->v in rotation order at u
  std::map<std::pair<VertexId, VertexId>, std::vector<DartId>> occurrences;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v : rotation[u]) {
      if (v < 0 || v >= n)
        throw Error(Errc::MalformedRotation, "neighbor id " + std::to_string(v) + " out of range");
      const DartId d = static_cast<DartId>(darts.size());
      darts.push_back({u, v});
      rot[u].push_back(d);
      occurrences[{u, v}].push_back(d);
    }
  }
  std::vector<DartId> twin(darts.size(), -1);
  for (const auto& [key, ds] : occurrences) {
    const auto [u, v] = key;
    if (u == v) {
      if (ds.size() % 2 != 0)
        throw Error(Errc::MalformedRotation, "self-loop at vertex " + std::to_string(u) +
                                                 " listed an odd number of times");
      for (std::size_t i = 0; i < ds.size(); i += 2) {
        twin[ds[i]] = ds[i + 1];
        twin[ds[i + 1]] = ds[i];
      }
      continue;
    }
    if (u > v) continue;
    auto back = occurrences.find({v, u});
    if (back == occurrences.end() || back->second.size() != ds.size())
      throw Error(Errc::MalformedRotation, "vertex " + std::to_string(u) + " lists " +
                                               std::to_string(v) + " but not vice versa");
    const auto& rs = back->second;
    for (std::size_t i = 0; i < ds.size(); ++i) {
      twin[ds[i]] = rs[rs.size() - 1 - i];
      twin[rs[rs.size() - 1 - i]] = ds[i];
    }
  }
  for (DartId t : twin)
    if (t < 0) throw Error(Errc::MalformedRotation, "asymmetric adjacency");
  return EmbeddedGraph::from_darts(n, std::move(darts), std::move(twin), std::move(rot),
                                   outer_face, require_simple);
}

EmbeddedGraph embedding_from_drawing(const std::vector<std::array<double, 2>>& coords,
                                     const std::vector<std::pair<VertexId, VertexId>>& edges,
                                     bool require_simple) {
  const int n = static_cast<int>(coords.size());
  std::vector<std::vector<std::pair<double, VertexId>>> around(n);
  for (auto [u, v] : edges) {
    around[u].emplace_back(std::atan2(coords[v][1] - coords[u][1], coords[v][0] - coords[u][0]), v);
    around[v].emplace_back(std::atan2(coords[u][1] - coords[v][1], coords[u][0] - coords[v][0]), u);
  }
  std::vector<std::vector<VertexId>> rotation(n);
  for (VertexId v = 0; v < n; ++v) {
    std::sort(around[v].begin(), around[v].end());
    for (const auto& [angle, w] : around[v]) rotation[v].push_back(w);
  }
  return build_embedding(rotation, require_simple);
}

EmbeddedGraph embedding_from_polyhedron(const std::vector<std::array<double, 3>>& coords,
                                        const std::vector<std::pair<VertexId, VertexId>>& edges) {
  using Vec3 = std::array<double, 3>;
  auto sub = [](const Vec3& a, const Vec3& b) { return Vec3{a[0] - b[0], a[1] - b[1], a[2] - b[2]}; };
  auto dot = [](const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; };
  auto cross = [](const Vec3& a, const Vec3& b) {
    return Vec3{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
  };
  const int n = static_cast<int>(coords.size());
  std::vector<std::vector<VertexId>> adj(n);
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<std::vector<VertexId>> rotation(n);
  for (VertexId v = 0; v < n; ++v) {
    const Vec3& normal = coords[v];
    // Any tangent direction works as the zero angle; take the first neighbor.
    Vec3 e1 = sub(coords[adj[v][0]], coords[v]);
    const double proj = dot(e1, normal) / dot(normal, normal);
    e1 = Vec3{e1[0] - proj * normal[0], e1[1] - proj * normal[1], e1[2] - proj * normal[2]};
    const Vec3 e2 = cross(normal, e1);
    std::vector<std::pair<double, VertexId>> around;
    for (VertexId w : adj[v]) {
      const Vec3 q = sub(coords[w], coords[v]);
      around.emplace_back(std::atan2(dot(q, e2), dot(q, e1)), w);
    }
    std::sort(around.begin(), around.end());
    for (const auto& [angle, w] : around) rotation[v].push_back(w);
  }
  return build_embedding(rotation, true);
}

std::vector<std::vector<VertexId>> adjacency_lists(const EmbeddedGraph& g) {
  return g.rotation_lists();
}

bool is_connected(const EmbeddedGraph& g) { return g.vertex_count() > 0 && g.component_count() == 1; }

std::optional<std::vector<int>> bipartition(const EmbeddedGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> side(n, -1);
  for (VertexId s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::queue<VertexId> q;
    q.push(s);
    while (!q.empty()) {
      const VertexId v = q.front();
      q.pop();
      for (DartId d : g.rotation(v)) {
        const VertexId w = g.dart(d).head;
        if (side[w] < 0) {
          side[w] = 1 - side[v];
          q.push(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return side;
}

EmbeddedGraph dual(const EmbeddedGraph& g) {
  if (!is_connected(g)) throw Error(Errc::Disconnected, "dual requires a connected graph");
  const int m = g.dart_count();
  std::vector<Dart> darts(m);
  std::vector<DartId> twin(m);
  for (DartId d = 0; d < m; ++d) {
    darts[d] = {g.face_of(d), g.face_of(g.twin(d))};
    twin[d] = g.twin(d);
  }
  // The dual dart d* leaves face_of(d); faces are traced clockwise, so the
  // counterclockwise rotation at a dual vertex is the reversed face cycle.
  std::vector<std::vector<DartId>> rotation(g.face_count());
  for (FaceId f = 0; f < g.face_count(); ++f) {
    auto cycle = g.face(f);
    rotation[f].assign(cycle.rbegin(), cycle.rend());
  }
  return EmbeddedGraph::from_darts(g.face_count(), std::move(darts), std::move(twin),
                                   std::move(rotation));
}

EmbeddedGraph medial(const EmbeddedGraph& g) {
  // One medial edge per face corner (d, face_next(d)): darts 2d (from edge(d)
  // to edge(next d)) and 2d+1 (reverse).
  const int m = g.dart_count();
  std::vector<DartId> face_prev(m);
  for (DartId d = 0; d < m; ++d) face_prev[g.face_next(d)] = d;
  std::vector<Dart> darts(2 * m);
  std::vector<DartId> twin(2 * m);
  for (DartId d = 0; d < m; ++d) {
    const EdgeId a = g.edge_of(d);
    const EdgeId b = g.edge_of(g.face_next(d));
    darts[2 * d] = {a, b};
    darts[2 * d + 1] = {b, a};
    twin[2 * d] = 2 * d + 1;
    twin[2 * d + 1] = 2 * d;
  }
  // Around the midpoint of edge e with dart d = u->v and t = twin(d), the
  // counterclockwise order of the four neighbors is
  // prev(t) [at v], next(t) [at u], prev(d) [at u], next(d) [at v].
  std::vector<std::vector<DartId>> rotation(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const DartId d = g.edge_dart(e);
    const DartId t = g.twin(d);
    rotation[e] = {2 * face_prev[t] + 1, 2 * t, 2 * face_prev[d] + 1, 2 * d};
  }
  return EmbeddedGraph::from_darts(g.edge_count(), std::move(darts), std::move(twin),
                                   std::move(rotation));
}

EmbeddedGraph subdivide_edges(const EmbeddedGraph& g, int k) {
  if (k < 0) throw Error(Errc::DomainError, "subdivision count must be non-negative");
  if (k == 0) return g;
  // Edge e = (a -> b) on its first dart becomes a, s_0, ..., s_{k-1}, b with
  // s_i = V + e*k + i. New darts: segment j of edge e runs from node j to node
  // j+1 and gets darts 2*(e*(k+1)+j) (forward) and +1 (backward).
  const int n = g.vertex_count();
  const int segments = k + 1;
  const int new_n = n + g.edge_count() * k;
  std::vector<Dart> darts(2 * g.edge_count() * segments);
  std::vector<DartId> twin(darts.size());
  auto node = [&](EdgeId e, int j) {
    const auto [a, b] = g.edge_endpoints(e);
    if (j == 0) return a;
    if (j == segments) return b;
    return n + e * k + (j - 1);
  };
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (int j = 0; j < segments; ++j) {
      const DartId fwd = 2 * (e * segments + j);
      darts[fwd] = {node(e, j), node(e, j + 1)};
      darts[fwd + 1] = {node(e, j + 1), node(e, j)};
      twin[fwd] = fwd + 1;
      twin[fwd + 1] = fwd;
    }
  }
  std::vector<std::vector<DartId>> rotation(new_n);
  for (VertexId v = 0; v < n; ++v) {
    for (DartId d : g.rotation(v)) {
      const EdgeId e = g.edge_of(d);
      const bool forward = (d == g.edge_dart(e));
      rotation[v].push_back(forward ? 2 * (e * segments) : 2 * (e * segments + segments - 1) + 1);
    }
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    for (int j = 1; j < segments; ++j) {
      // Degree-2 vertex: forward continuation, then the way back.
      rotation[node(e, j)] = {2 * (e * segments + j), 2 * (e * segments + j - 1) + 1};
    }
  }
  return EmbeddedGraph::from_darts(new_n, std::move(darts), std::move(twin), std::move(rotation));
}

}  // namespace circlesys
