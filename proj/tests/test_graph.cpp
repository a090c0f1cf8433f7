#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "circlesys/error.hpp"
#include "circlesys/generators.hpp"
#include "circlesys/graph.hpp"
#include "circlesys/isomorphism.hpp"

using namespace circlesys;

namespace {

// Two octahedra joined through an extra vertex placed in their outer faces.
EmbeddedGraph octahedra_path_join() {
  auto rot = octahedron().rotation_lists();
  const int n = static_cast<int>(rot.size());
  std::vector<std::vector<VertexId>> joined(2 * n + 1);
  for (int i = 0; i < n; ++i) {
    joined[i] = rot[i];
    for (VertexId w : rot[i]) joined[n + i].push_back(n + w);
  }
  joined[0].push_back(2 * n);
  joined[n].push_back(2 * n);
  joined[2 * n] = {0, n};
  return build_embedding(joined);
}

EmbeddedGraph cycle(int k) {
  std::vector<std::vector<VertexId>> rot(k);
  for (int i = 0; i < k; ++i) rot[i] = {(i + 1) % k, (i + k - 1) % k};
  return build_embedding(rot);
}

std::vector<EmbeddedGraph> small_corpus() {
  std::vector<EmbeddedGraph> out;
  for (Solid s : {Solid::Tetrahedron, Solid::Cube, Solid::Octahedron, Solid::Dodecahedron,
                  Solid::Icosahedron})
    out.push_back(platonic(s));
  out.push_back(medial(platonic(Solid::Tetrahedron)));
  out.push_back(medial(platonic(Solid::Cube)));
  out.push_back(octahedra_path_join());
  out.push_back(cycle(5));
  out.push_back(subdivide_edges(octahedron(), 1));
  return out;
}

}  // namespace

TEST_CASE("octahedron counts") {
  const EmbeddedGraph g = octahedron();
  CHECK(g.vertex_count() == 6);
  CHECK(g.edge_count() == 12);
  CHECK(g.face_count() == 8);
  for (FaceId f = 0; f < g.face_count(); ++f) CHECK(g.face(f).size() == 3);
  CHECK(g.is_regular(4));
  CHECK(g.is_simple());
}

TEST_CASE("doubled 4-cycle is planar but not simple") {
  std::vector<std::vector<VertexId>> rot(4);
  for (int i = 0; i < 4; ++i) rot[i] = {(i + 1) % 4, (i + 1) % 4, (i + 3) % 4, (i + 3) % 4};
  const EmbeddedGraph g = build_embedding(rot, false);
  CHECK(g.edge_count() == 8);
  CHECK_FALSE(g.is_simple());
  try {
    build_embedding(rot, true);
    FAIL("expected NotSimple");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotSimple);
  }
}

TEST_CASE("asymmetric rotation data is rejected") {
  std::vector<std::vector<VertexId>> rot = {{1, 2}, {0, 2}, {1}};
  try {
    build_embedding(rot);
    FAIL("expected MalformedRotation");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::MalformedRotation);
  }
}

TEST_CASE("non-planar rotation is rejected") {
  // K4 with the rotation at one vertex reversed has genus 1.
  auto rot = platonic(Solid::Tetrahedron).rotation_lists();
  std::swap(rot[0][0], rot[0][1]);
  try {
    build_embedding(rot);
    FAIL("expected NonPlanarEmbedding");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NonPlanarEmbedding);
  }
}

TEST_CASE("handshake and face cover on the corpus") {
  for (const EmbeddedGraph& g : small_corpus()) {
    int degree_sum = 0;
    for (VertexId v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.edge_count());
    std::vector<int> seen(g.dart_count(), 0);
    for (FaceId f = 0; f < g.face_count(); ++f)
      for (DartId d : g.face(f)) ++seen[d];
    for (int s : seen) CHECK(s == 1);
  }
}

TEST_CASE("default outer face is the largest, smallest id on ties") {
  const EmbeddedGraph g = subdivide_edges(platonic(Solid::Tetrahedron), 0);
  CHECK(g.outer_face() == 0);
  const EmbeddedGraph c = platonic(Solid::Cube);
  std::size_t longest = 0;
  for (FaceId f = 0; f < c.face_count(); ++f) longest = std::max(longest, c.face(f).size());
  CHECK(c.face(c.outer_face()).size() == longest);
  for (FaceId f = 0; f < c.outer_face(); ++f) CHECK(c.face(f).size() < longest);
}

TEST_CASE("connectivity levels") {
  CHECK(connectivity_level(octahedron()) == 3);
  CHECK(connectivity_level(platonic(Solid::Icosahedron)) == 3);
  CHECK(connectivity_level(octahedra_path_join()) == 1);
  CHECK(connectivity_level(cycle(5)) == 2);
  CHECK(connectivity_level(subdivide_edges(octahedron(), 1)) == 2);
  const EmbeddedGraph two = build_embedding({{}, {}}, false);
  CHECK(connectivity_level(two) == 0);
}

TEST_CASE("connectivity agrees with exhaustive cut search") {
  for (const EmbeddedGraph& g : small_corpus()) {
    REQUIRE(g.vertex_count() <= 30);
    CHECK(connectivity_level(g) == connectivity_level_reference(g));
  }
}

TEST_CASE("dual of the octahedron is the cube") {
  const EmbeddedGraph d = dual(octahedron());
  CHECK(d.vertex_count() == 8);
  CHECK(d.edge_count() == 12);
  CHECK(d.is_regular(3));
  CHECK(isomorphic(d, platonic(Solid::Cube)));
  CHECK(isomorphic(dual(d), octahedron()));
}

TEST_CASE("duals preserve edge count; duals of 4-regular graphs are bipartite") {
  for (const EmbeddedGraph& g : small_corpus()) {
    if (!is_connected(g)) continue;
    const EmbeddedGraph d = dual(g);
    CHECK(d.edge_count() == g.edge_count());
    CHECK(d.vertex_count() == g.face_count());
    if (g.is_regular(4)) CHECK(bipartition(d).has_value());
  }
  CHECK_FALSE(bipartition(dual(platonic(Solid::Cube))).has_value());
}

TEST_CASE("medial graphs") {
  CHECK(isomorphic(medial(platonic(Solid::Tetrahedron)), octahedron()));
  const EmbeddedGraph mc = medial(platonic(Solid::Cube));
  CHECK(mc.vertex_count() == 12);
  CHECK(mc.edge_count() == 24);
  const EmbeddedGraph md = medial(platonic(Solid::Dodecahedron));
  CHECK(md.vertex_count() == 30);
  CHECK(connectivity_level(md) == 3);
  for (Solid s : {Solid::Tetrahedron, Solid::Cube, Solid::Octahedron, Solid::Dodecahedron,
                  Solid::Icosahedron}) {
    const EmbeddedGraph m = medial(platonic(s));
    CHECK(m.is_regular(4));
    CHECK(m.is_simple());
    CHECK(connectivity_level(m) == 3);
  }
}

TEST_CASE("platonic solids") {
  struct Expect {
    Solid s;
    int v, e, f, deg;
  };
  for (auto [s, v, e, f, deg] : {Expect{Solid::Tetrahedron, 4, 6, 4, 3}, Expect{Solid::Cube, 8, 12, 6, 3},
                                 Expect{Solid::Octahedron, 6, 12, 8, 4},
                                 Expect{Solid::Dodecahedron, 20, 30, 12, 3},
                                 Expect{Solid::Icosahedron, 12, 30, 20, 5}}) {
    const EmbeddedGraph g = platonic(s);
    CHECK(g.vertex_count() == v);
    CHECK(g.edge_count() == e);
    CHECK(g.face_count() == f);
    CHECK(g.is_regular(deg));
  }
}

TEST_CASE("edge subdivision") {
  const EmbeddedGraph g = octahedron();
  CHECK(subdivide_edges(g, 8).vertex_count() == 102);
  CHECK(isomorphic(subdivide_edges(g, 0), g));
  const EmbeddedGraph s = subdivide_edges(g, 1);
  CHECK(s.vertex_count() == 18);
  for (VertexId v = 0; v < 6; ++v) CHECK(s.degree(v) == 4);
  for (VertexId v = 6; v < 18; ++v) CHECK(s.degree(v) == 2);
  CHECK(s.face_count() == g.face_count());
}

TEST_CASE("rotation lists round-trip through build_embedding") {
  for (const EmbeddedGraph& g : small_corpus()) {
    const EmbeddedGraph h = build_embedding(g.rotation_lists(), false);
    CHECK(h.rotation_lists() == g.rotation_lists());
    CHECK(h.face_count() == g.face_count());
  }
}
