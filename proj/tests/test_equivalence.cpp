#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <random>

#include "circlesys/equivalence.hpp"
#include "circlesys/error.hpp"
#include "circlesys/generators.hpp"

using namespace circlesys;

namespace {

constexpr RealizationClass kClasses[] = {RealizationClass::ThreeCrossing,
                                         RealizationClass::FourTouchingDisjoint,
                                         RealizationClass::FourTouchingNested};

// Applies x -> s * R(theta) x + t to every circle and rebuilds the points.
Realization moved(const Realization& r, double s, double theta, double tx, double ty) {
  std::vector<Circle> circles;
  for (const Circle& c : r.circles) {
    const double x = c.cx * std::cos(theta) - c.cy * std::sin(theta);
    const double y = c.cx * std::sin(theta) + c.cy * std::cos(theta);
    circles.push_back({s * x + tx, s * y + ty, s * c.r});
  }
  return assemble_from_circles(circles, 1e-8);
}

std::vector<std::pair<int, int>> degree_profile(const OrientedDual& d) {
  std::vector<std::pair<int, int>> out;
  for (FaceId f : d.nodes) out.emplace_back(d.in_degree(f), d.out_degree(f));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("canonical out-degree profiles") {
  const std::map<RealizationClass, int> expected = {{RealizationClass::ThreeCrossing, 1},
                                                    {RealizationClass::FourTouchingDisjoint, 4},
                                                    {RealizationClass::FourTouchingNested, 3}};
  for (RealizationClass k : kClasses) {
    const Realization r = canonical_octahedron_realization(k);
    const OrientedDual d = oriented_dual(r);
    CAPTURE(class_name(k));
    CHECK(d.count_out_degree(3) == expected.at(k));
    CHECK(d.edges.size() == r.arcs.size());
    // in + out equals the face length for every node.
    const EmbeddedGraph drawn = extract_abstract_graph(r);
    for (FaceId f : d.nodes) CHECK(d.in_degree(f) + d.out_degree(f) == static_cast<int>(drawn.face(f).size()));
  }
}

TEST_CASE("digraph isomorphism") {
  const OrientedDual a = oriented_dual(canonical_octahedron_realization(RealizationClass::ThreeCrossing));
  const OrientedDual b = oriented_dual(canonical_octahedron_realization(RealizationClass::FourTouchingDisjoint));
  CHECK(digraph_isomorphic(a, a));
  CHECK_FALSE(digraph_isomorphic(a, b));

  // Relabel nodes by a shuffled bijection (outer endpoint stays -1).
  std::vector<FaceId> fresh(a.nodes.size());
  for (std::size_t i = 0; i < fresh.size(); ++i) fresh[i] = 100 + static_cast<int>(i);
  std::shuffle(fresh.begin(), fresh.end(), std::mt19937(3));
  std::map<FaceId, FaceId> relabel{{-1, -1}};
  for (std::size_t i = 0; i < fresh.size(); ++i) relabel[a.nodes[i]] = fresh[i];
  OrientedDual c;
  for (FaceId f : a.nodes) c.nodes.push_back(relabel[f]);
  std::sort(c.nodes.begin(), c.nodes.end());
  for (const auto& e : a.edges) c.edges.push_back({relabel[e.tail], relabel[e.head], e.arc});
  std::reverse(c.edges.begin(), c.edges.end());
  CHECK(digraph_isomorphic(a, c));

  // Reversing one edge breaks it.
  OrientedDual flipped = a;
  for (auto& e : flipped.edges)
    if (e.tail >= 0 && e.head >= 0) {
      std::swap(e.tail, e.head);
      break;
    }
  CHECK_FALSE(digraph_isomorphic(a, flipped));
}

TEST_CASE("the three classes are pairwise inequivalent") {
  for (RealizationClass x : kClasses)
    for (RealizationClass y : kClasses)
      CHECK(equivalent(canonical_octahedron_realization(x), canonical_octahedron_realization(y)) == (x == y));
}

TEST_CASE("similarity transforms preserve equivalence and degree profiles") {
  for (RealizationClass k : kClasses) {
    const Realization r = canonical_octahedron_realization(k);
    const auto profile = degree_profile(oriented_dual(r));
    for (auto [s, theta, tx, ty] : {std::array{3.0, 0.0, 0.0, 0.0}, std::array{1.0, 0.0, -7.5, 2.25},
                                    std::array{0.01, 1.1, 4.0, -3.0}, std::array{250.0, 2.9, 0.0, 1.0}}) {
      const Realization m = moved(r, s, theta, tx, ty);
      CHECK(equivalent(r, m));
      CHECK(degree_profile(oriented_dual(m)) == profile);
      CHECK(classify_octahedron(m) == k);
    }
  }
}

TEST_CASE("equivalence is an equivalence relation on a sample") {
  std::vector<Realization> sample;
  for (RealizationClass k : kClasses) {
    sample.push_back(canonical_octahedron_realization(k));
    sample.push_back(moved(sample.back(), 2.0, 0.4, 1.0, 1.0));
  }
  sample.push_back(realize(octahedron()));
  sample.push_back(flower(3).realization);
  sample.push_back(upper_bound_family(4).realization);
  const int n = static_cast<int>(sample.size());
  std::vector<std::vector<char>> eq(n, std::vector<char>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) eq[i][j] = equivalent(sample[i], sample[j]);
  for (int i = 0; i < n; ++i) {
    CHECK(eq[i][i]);
    for (int j = 0; j < n; ++j) {
      CHECK(eq[i][j] == eq[j][i]);
      for (int k = 0; k < n; ++k)
        if (eq[i][j] && eq[j][k]) CHECK(eq[i][k]);
    }
  }
}

TEST_CASE("smoothing") {
  const Realization r = canonical_octahedron_realization(RealizationClass::FourTouchingNested);
  CHECK(smooth_degree_two(r) == r);

  const Realization s = subdivide_realization(r, 1);
  REQUIRE(s.points.size() == 6 + 12);
  const Realization back = smooth_degree_two(s);
  CHECK(back.points.size() == 6);
  CHECK(back.arcs.size() == r.arcs.size());
  CHECK(equivalent(r, s));

  // Each merged arc spans the two pieces it came from.
  for (const Arc& a : back.arcs) {
    double pieces = 0.0;
    for (const Arc& b : s.arcs) {
      if (b.circle != a.circle) continue;
      double start = ccw_extent(a.from_angle, b.from_angle);
      if (start > 2 * std::numbers::pi - 1e-9) start = 0.0;
      if (start < a.extent() - 1e-9) pieces += b.extent();
    }
    CHECK(pieces == doctest::Approx(a.extent()).epsilon(1e-9));
  }
}

TEST_CASE("classification") {
  for (RealizationClass k : kClasses) CHECK(classify_octahedron(canonical_octahedron_realization(k)) == k);
  const RealizationClass pipeline = classify_octahedron(realize(octahedron()));
  CHECK(pipeline != RealizationClass::ThreeCrossing);
  CHECK(classify_octahedron(flower(3).realization) == RealizationClass::ThreeCrossing);
  CHECK(classify_octahedron(upper_bound_family(4).realization) == RealizationClass::FourTouchingDisjoint);

  bool threw = false;
  try {
    classify_octahedron(flower(4).realization);
  } catch (const Error& e) {
    threw = e.code() == Errc::NoClassMatch;
  }
  CHECK(threw);
}

TEST_CASE("class names") {
  for (RealizationClass k : kClasses) CHECK(class_from_name(class_name(k)) == k);
  CHECK(class_name(RealizationClass::FourTouchingNested) == "FOUR_TOUCHING_NESTED");
  CHECK_THROWS_AS(class_from_name("FIVE_CIRCLES"), Error);
}
