#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "circlesys/coloring.hpp"
#include "circlesys/error.hpp"
#include "circlesys/generators.hpp"
#include "circlesys/packing.hpp"

using namespace circlesys;

namespace {

EmbeddedGraph cycle(int k) {
  std::vector<std::vector<VertexId>> rot(k);
  for (int i = 0; i < k; ++i) rot[i] = {(i + 1) % k, (i + k - 1) % k};
  return build_embedding(rot);
}

// Descartes relation for four mutually externally tangent circles.
double descartes_gap(const std::vector<Circle>& c) {
  double s = 0.0, q = 0.0;
  for (const Circle& k : c) {
    s += 1.0 / k.r;
    q += 1.0 / (k.r * k.r);
  }
  return std::abs(s * s - 2.0 * q) / std::max(s * s, 2.0 * q);
}

}  // namespace

TEST_CASE("triangulation by face apexes") {
  const EmbeddedGraph k4 = platonic(Solid::Tetrahedron);
  const Triangulation t = triangulate(k4);
  CHECK(t.graph.vertex_count() == 8);
  CHECK(t.apex_face.size() == 4);
  for (FaceId f = 0; f < t.graph.face_count(); ++f) CHECK(t.graph.face(f).size() == 3);

  const Triangulation c = triangulate(cycle(4));
  CHECK(c.apex_face.size() == 2);
  CHECK(c.graph.face_count() == 8);
  for (FaceId f = 0; f < c.graph.face_count(); ++f) CHECK(c.graph.face(f).size() == 3);

  const EmbeddedGraph cube = platonic(Solid::Cube);
  const Triangulation tc = triangulate(cube);
  for (std::size_t a = 0; a < tc.apex_face.size(); ++a)
    CHECK(tc.graph.degree(tc.base_count + static_cast<int>(a)) ==
          static_cast<int>(cube.face(tc.apex_face[a]).size()));
  CHECK(tc.boundary[0] == tc.base_count + cube.outer_face());
}

TEST_CASE("K4 packs into a Descartes quadruple") {
  const Packing p = pack(platonic(Solid::Tetrahedron), 1e-10);
  REQUIRE(p.circles.size() == 4);
  CHECK(p.residual <= 1e-10);
  CHECK(descartes_gap(p.circles) <= 1e-6);
}

TEST_CASE("too few vertices") {
  const EmbeddedGraph path = build_embedding({{1}, {0}});
  try {
    pack(path);
    FAIL("expected TooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TooSmall);
  }
}

TEST_CASE("IL of medial(cube) packs within tolerance") {
  const EmbeddedGraph g = medial(platonic(Solid::Cube));
  const ILGraph il = build_il(g, two_color_faces(g));
  const Packing p = pack(il.graph, 1e-9);
  CHECK(p.residual <= 1e-9);
  CHECK(packing_residual(p, il.graph) == p.residual);
}

TEST_CASE("tangency certificate on packed solids") {
  for (Solid s : {Solid::Tetrahedron, Solid::Cube, Solid::Octahedron, Solid::Dodecahedron,
                  Solid::Icosahedron}) {
    const EmbeddedGraph g = platonic(s);
    const Packing p = pack(g);
    const double tol = 1e-9;
    for (VertexId a = 0; a < g.vertex_count(); ++a) {
      const auto nb = g.neighbors(a);
      for (VertexId b = a + 1; b < g.vertex_count(); ++b) {
        const double d = center_distance(p.circles[a], p.circles[b]);
        const double sum = p.circles[a].r + p.circles[b].r;
        if (std::find(nb.begin(), nb.end(), b) != nb.end())
          CHECK(std::abs(d - sum) <= tol * sum);
        else
          CHECK(d >= sum * (1.0 - tol));
      }
    }
  }
}

TEST_CASE("boundary normalization") {
  const EmbeddedGraph g = platonic(Solid::Cube);
  const Triangulation t = triangulate(g);
  const Packing p = pack(g);
  for (int i = 1; i < 3; ++i) {
    const Circle& c = p.circles[t.boundary[i]];
    CHECK(c.r == doctest::Approx(1.0));
    CHECK(std::hypot(c.cx, c.cy) == doctest::Approx(2.0 / std::sqrt(3.0)));
  }
}

TEST_CASE("packing is bit-for-bit deterministic") {
  const EmbeddedGraph g = medial(platonic(Solid::Octahedron));
  const ILGraph il = build_il(g, two_color_faces(g));
  CHECK(pack(il.graph) == pack(il.graph));
}

TEST_CASE("residual of analytic and perturbed triangles") {
  const EmbeddedGraph tri = cycle(3);
  const double s = 2.0 / std::sqrt(3.0);
  Packing p;
  for (int i = 0; i < 3; ++i) {
    const double a = std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * i / 3.0;
    p.circles.push_back({s * std::cos(a), s * std::sin(a), 1.0});
  }
  CHECK(packing_residual(p, tri) <= 1e-15);
  p.circles[0].r *= 1.01;
  const double res = packing_residual(p, tri);
  CHECK(res == doctest::Approx(0.01 / 2.01).epsilon(1e-9));
  CHECK(res > 1e-9);
}

TEST_CASE("faces that revisit a vertex are unsupported") {
  // A triangle with a pendant vertex: the outer face passes vertex 0 twice.
  const EmbeddedGraph g = build_embedding({{1, 2, 3}, {2, 0}, {0, 1}, {0}});
  try {
    pack(g);
    FAIL("expected UnsupportedInput");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedInput);
  }
}
