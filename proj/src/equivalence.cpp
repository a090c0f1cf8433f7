#include "circlesys/equivalence.hpp"

#include <algorithm>
#include <string>

#include "circlesys/error.hpp"
#include "circlesys/generators.hpp"
#include "circlesys/isomorphism.hpp"

namespace circlesys {

Realization smooth_degree_two(const Realization& r) {
  std::vector<int> degree(r.points.size(), 0);
  for (const Arc& a : r.arcs) {
    ++degree[a.from_point];
    ++degree[a.to_point];
  }
  Realization out;
  out.circles = r.circles;
  for (std::size_t i = 0; i < r.points.size(); ++i)
    if (degree[i] != 2) out.points.push_back(r.points[i]);
  if (out.points.size() == r.points.size()) return r;
  rebuild_arcs(out);
  return out;
}

int OrientedDual::out_degree(FaceId f) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.tail == f; }));
}

int OrientedDual::in_degree(FaceId f) const {
  return static_cast<int>(std::count_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.head == f; }));
}

int OrientedDual::count_out_degree(int k) const {
  return static_cast<int>(
      std::count_if(nodes.begin(), nodes.end(), [&](FaceId f) { return out_degree(f) == k; }));
}

OrientedDual oriented_dual(const Realization& r) {
  const EmbeddedGraph drawn = extract_abstract_graph(r);
  const FaceId outer = geometric_outer_face(r, drawn);
  OrientedDual d;
  for (FaceId f = 0; f < drawn.face_count(); ++f)
    if (f != outer) d.nodes.push_back(f);
  auto node = [&](FaceId f) { return f == outer ? -1 : f; };
  for (int i = 0; i < static_cast<int>(r.arcs.size()); ++i) {
    // Dart 2i runs counterclockwise, so the circle's interior is on the right
    // of its twin.
    d.edges.push_back({node(drawn.face_of(2 * i + 1)), node(drawn.face_of(2 * i)), i});
  }
  return d;
}

namespace {

// The omitted outer face becomes one extra node with its own color.
ColoredDigraph as_digraph(const OrientedDual& d) {
  const int n = static_cast<int>(d.nodes.size());
  ColoredDigraph g(n + 1);
  g.color[n] = 1;
  auto index = [&](int f) {
    if (f < 0) return n;
    return static_cast<int>(std::lower_bound(d.nodes.begin(), d.nodes.end(), f) - d.nodes.begin());
  };
  for (const auto& e : d.edges) ++g.arcs[index(e.tail)][index(e.head)];
  return g;
}

}  // namespace

bool digraph_isomorphic(const OrientedDual& a, const OrientedDual& b) {
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
  return isomorphic(as_digraph(a), as_digraph(b));
}

bool equivalent(const Realization& a, const Realization& b) {
  return digraph_isomorphic(oriented_dual(smooth_degree_two(a)), oriented_dual(smooth_degree_two(b)));
}

std::string_view class_name(RealizationClass k) {
  switch (k) {
    case RealizationClass::ThreeCrossing: return "THREE_CROSSING";
    case RealizationClass::FourTouchingDisjoint: return "FOUR_TOUCHING_DISJOINT";
    case RealizationClass::FourTouchingNested: return "FOUR_TOUCHING_NESTED";
  }
  return "?";
}

RealizationClass class_from_name(std::string_view name) {
  for (auto k : {RealizationClass::ThreeCrossing, RealizationClass::FourTouchingDisjoint,
                 RealizationClass::FourTouchingNested})
    if (class_name(k) == name) return k;
  throw Error(Errc::ParseError, "unknown realization class '" + std::string(name) + "'");
}

RealizationClass classify_octahedron(const Realization& r) {
  const OrientedDual d = oriented_dual(smooth_degree_two(r));
  for (auto k : {RealizationClass::ThreeCrossing, RealizationClass::FourTouchingDisjoint,
                 RealizationClass::FourTouchingNested})
    if (digraph_isomorphic(d, oriented_dual(canonical_octahedron_realization(k)))) return k;
  throw Error(Errc::NoClassMatch, "oriented dual matches none of the three octahedron classes");
}

}  // namespace circlesys
