#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "circlesys/coloring.hpp"
#include "circlesys/equivalence.hpp"
#include "circlesys/error.hpp"
#include "circlesys/generators.hpp"
#include "circlesys/isomorphism.hpp"
#include "circlesys/realization.hpp"

using namespace circlesys;

namespace {

std::vector<EmbeddedGraph> corpus() {
  std::vector<EmbeddedGraph> out{octahedron()};
  for (Solid s : {Solid::Tetrahedron, Solid::Cube, Solid::Octahedron, Solid::Dodecahedron,
                  Solid::Icosahedron})
    out.push_back(medial(platonic(s)));
  return out;
}

bool has_rule(const VerifyReport& rep, const std::string& rule) {
  return std::any_of(rep.violations.begin(), rep.violations.end(),
                     [&](const Violation& v) { return v.rule == rule; });
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ParseError;
}

// Cyclic sequences equal up to rotation, optionally reversed.
bool same_cycle(std::vector<int> a, const std::vector<int>& b) {
  if (a.size() != b.size()) return false;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t s = 0; s < a.size(); ++s) {
      std::rotate(a.begin(), a.begin() + 1, a.end());
      if (a == b) return true;
    }
    std::reverse(a.begin(), a.end());
  }
  return false;
}

}  // namespace

TEST_CASE("octahedron realization") {
  const EmbeddedGraph g = octahedron();
  const Realization r = realize(g);
  CHECK(r.circles.size() == 4);
  CHECK(r.points.size() == 6);
  CHECK(r.arcs.size() == 12);
  for (const RealPoint& p : r.points) CHECK(p.kind == PointKind::Touch);
  const VerifyReport rep = verify_realization(r, &g);
  CHECK(rep.ok);
  CHECK(within_bounds(6, rep.circles));
  CHECK(isomorphic(extract_abstract_graph(r), g));
}

TEST_CASE("medial(cube) gray-face count follows the outer face") {
  const EmbeddedGraph mc = medial(platonic(Solid::Cube));
  // Default outer face is a square, so the eight triangles are gray.
  const Realization by_default = realize(mc);
  CHECK(by_default.circles.size() == 8);
  CHECK(by_default.points.size() == 12);
  CHECK(by_default.arcs.size() == 24);
  CHECK(verify_realization(by_default, &mc).ok);

  FaceId triangle = -1;
  for (FaceId f = 0; f < mc.face_count() && triangle < 0; ++f)
    if (mc.face(f).size() == 3) triangle = f;
  const EmbeddedGraph shifted = mc.with_outer_face(triangle);
  const Realization r = realize(shifted);
  CHECK(r.circles.size() == 6);
  CHECK(r.points.size() == 12);
  CHECK(r.arcs.size() == 24);
  CHECK(verify_realization(r, &shifted).ok);
}

TEST_CASE("pipeline closure on the corpus") {
  for (const EmbeddedGraph& g : corpus()) {
    CAPTURE(g.vertex_count());
    const Realization r = realize(g);
    const TwoColoring coloring = two_color_faces(g);
    CHECK(static_cast<int>(r.circles.size()) == coloring.count(FaceColor::Gray));
    CHECK(within_bounds(g.vertex_count(), static_cast<int>(r.circles.size())));
    for (const RealPoint& p : r.points) CHECK(p.kind == PointKind::Touch);
    CHECK(verify_realization(r, &g).ok);
    CHECK(isomorphic(extract_abstract_graph(r), g));
  }
}

TEST_CASE("points follow the gray face boundary around each circle") {
  for (const EmbeddedGraph& g : corpus()) {
    const Realization r = realize(g);
    const TwoColoring coloring = two_color_faces(g);
    std::vector<std::vector<int>> gray_cycles;
    for (FaceId f = 0; f < g.face_count(); ++f)
      if (coloring.color[f] == FaceColor::Gray) gray_cycles.push_back(g.face_vertices(f));
    for (int c = 0; c < static_cast<int>(r.circles.size()); ++c) {
      std::vector<std::pair<double, int>> on;
      for (int i = 0; i < static_cast<int>(r.points.size()); ++i)
        if (r.points[i].on(c)) on.emplace_back(r.points[i].angle_on_circle(c), i);
      std::sort(on.begin(), on.end());
      std::vector<int> order;
      for (auto [angle, i] : on) order.push_back(i);
      CHECK(std::any_of(gray_cycles.begin(), gray_cycles.end(),
                        [&](const std::vector<int>& cyc) { return same_cycle(cyc, order); }));
    }
  }
}

TEST_CASE("arcs carry the edges of their circle's gray face") {
  const EmbeddedGraph g = medial(platonic(Solid::Cube));
  const Realization r = realize(g);
  std::vector<int> seen(g.edge_count(), 0);
  for (const Arc& a : r.arcs) {
    REQUIRE(a.edge >= 0);
    ++seen[a.edge];
    const auto [u, v] = g.edge_endpoints(a.edge);
    const std::pair<int, int> ends{std::min(a.from_point, a.to_point), std::max(a.from_point, a.to_point)};
    CHECK(ends == std::pair{std::min(u, v), std::max(u, v)});
  }
  for (int k : seen) CHECK(k == 1);
}

TEST_CASE("realize preconditions") {
  CHECK(code_of([] { realize(augment_octahedron(GadgetKind::Gadget)); }) == Errc::NotThreeConnected);
  CHECK(code_of([] { realize(augment_octahedron(GadgetKind::Bigadget)); }) == Errc::NotThreeConnected);
  CHECK(code_of([] { realize(platonic(Solid::Cube)); }) == Errc::UnsupportedInput);
}

TEST_CASE("verifier catches injected defects") {
  const EmbeddedGraph g = octahedron();
  const double tol = 1e-8;
  Realization r = realize(g);
  r.circles[0].r += 10 * tol * r.circles[0].r;
  const VerifyReport rep = verify_realization(r, &g, tol);
  CHECK_FALSE(rep.ok);
  CHECK(has_rule(rep, "point_on_circle"));

  Realization dropped = realize(g);
  dropped.arcs.pop_back();
  CHECK_FALSE(verify_realization(dropped, nullptr, tol).ok);

  // A fifth circle crossing two others without listed points.
  Realization extra = canonical_octahedron_realization(RealizationClass::ThreeCrossing);
  extra.circles.push_back({0.0, 0.0, 0.7});
  const VerifyReport rep2 = verify_realization(extra, nullptr, tol);
  CHECK_FALSE(rep2.ok);
  CHECK(has_rule(rep2, "unlisted_intersection"));
}

TEST_CASE("verifier checks the abstract graph when given") {
  const Realization r = realize(octahedron());
  const EmbeddedGraph other = medial(platonic(Solid::Cube));
  const VerifyReport rep = verify_realization(r, &other);
  CHECK_FALSE(rep.ok);
  CHECK(has_rule(rep, "abstract_graph"));
}

TEST_CASE("flower(3) verifies as three crossing circles") {
  const GraphWithRealization f = flower(3);
  const VerifyReport rep = verify_realization(f.realization, &f.graph);
  CHECK(rep.ok);
  CHECK(rep.circles == 3);
  for (const RealPoint& p : f.realization.points) CHECK(p.kind == PointKind::Cross);
}

TEST_CASE("abstract graphs of reference realizations") {
  const Realization three = canonical_octahedron_realization(RealizationClass::ThreeCrossing);
  CHECK(isomorphic(extract_abstract_graph(three), octahedron()));
  const EmbeddedGraph g4 = extract_abstract_graph(flower(4).realization);
  CHECK(g4.vertex_count() == 12);
  CHECK(g4.is_regular(4));
}

TEST_CASE("circle count bounds") {
  BoundsResult b = circle_count_bounds(6);
  CHECK(b.lower == 3.0);
  CHECK(b.upper == 4.0);
  b = circle_count_bounds(12);
  CHECK(b.lower == 4.0);
  CHECK(b.upper == 8.0);
  b = circle_count_bounds(9);
  CHECK(b.lower == doctest::Approx((1 + std::sqrt(37.0)) / 2));
  CHECK(b.upper == 6.0);
  CHECK(code_of([] { circle_count_bounds(5); }) == Errc::TooSmall);

  for (int n = 6; n <= 2000; ++n) {
    const BoundsResult r = circle_count_bounds(n);
    REQUIRE(r.lower <= r.upper);
    for (int c = 1; c <= n; ++c) {
      // Long double comparison, far from any boundary except exact hits.
      const long double lo = (1.0L + std::sqrt(1.0L + 4.0L * n)) / 2.0L, hi = 2.0L * n / 3.0L;
      const bool inside = c >= lo - 1e-12L && c <= hi + 1e-12L;
      REQUIRE(within_bounds(n, c) == inside);
    }
  }
}

TEST_CASE("innermost face of the canonical realizations") {
  for (RealizationClass k : {RealizationClass::ThreeCrossing, RealizationClass::FourTouchingDisjoint,
                             RealizationClass::FourTouchingNested})
    CHECK(innermost_face_arc_check(canonical_octahedron_realization(k)));
  CHECK(innermost_face_arc_check(realize(octahedron())));
}

TEST_CASE("subdivided realizations") {
  const Realization r = realize(octahedron());
  const Realization s = subdivide_realization(r, 2);
  CHECK(s.points.size() == 6 + 2 * 12);
  CHECK(s.arcs.size() == 3 * 12);
  const VerifyReport rep = verify_realization(s, nullptr);
  CHECK(rep.ok);
  CHECK(isomorphic(extract_abstract_graph(s), subdivide_edges(extract_abstract_graph(r), 2)));
}

TEST_CASE("arcs partition every circle") {
  for (const Realization& r : {realize(medial(platonic(Solid::Dodecahedron))), flower(6).realization,
                               upper_bound_family(8).realization}) {
    std::vector<double> total(r.circles.size(), 0.0);
    for (const Arc& a : r.arcs) total[a.circle] += a.extent();
    for (double t : total) CHECK(t == doctest::Approx(2 * std::numbers::pi).epsilon(1e-12));
  }
}
