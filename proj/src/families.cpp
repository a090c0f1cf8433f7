#include <cmath>
#include <numbers>
#include <string>

#include "circlesys/error.hpp"
#include "circlesys/generators.hpp"
#include "circlesys/packing.hpp"

namespace circlesys {

namespace {

constexpr double kPi = std::numbers::pi;

// Unit circles centered on an equilateral triangle around the origin.
std::vector<Circle> triangle_of_circles(double side) {
  const double rho = side / std::sqrt(3.0);
  std::vector<Circle> out;
  for (int i = 0; i < 3; ++i) {
    const double a = kPi / 2.0 + 2.0 * kPi * i / 3.0;
    out.push_back({rho * std::cos(a), rho * std::sin(a), 1.0});
  }
  return out;
}

// True if intersection points of two different circle pairs coincide.
bool has_concurrence(const Realization& r, double eps) {
  for (std::size_t i = 0; i < r.points.size(); ++i)
    for (std::size_t j = i + 1; j < r.points.size(); ++j)
      if (distance(r.points[i].pos(), r.points[j].pos()) <= eps) return true;
  return false;
}

}  // namespace

Realization canonical_octahedron_realization(RealizationClass kind) {
  switch (kind) {
    case RealizationClass::ThreeCrossing:
      return assemble_from_circles(triangle_of_circles(1.0));
    case RealizationClass::FourTouchingDisjoint: {
      auto circles = triangle_of_circles(2.0);
      circles.push_back({0.0, 0.0, 1.0 / (3.0 + 2.0 * std::sqrt(3.0))});
      return assemble_from_circles(circles);
    }
    case RealizationClass::FourTouchingNested: {
      auto circles = triangle_of_circles(2.0);
      circles.push_back({0.0, 0.0, 1.0 / (2.0 * std::sqrt(3.0) - 3.0)});
      return assemble_from_circles(circles);
    }
  }
  throw Error(Errc::UnsupportedInput, "unknown realization class");
}

GraphWithRealization flower(int c) {
  if (c < 3) throw Error(Errc::TooSmall, "flower needs at least 3 circles");
  const double ring = 1.0;
  double r = 1.3;
  for (int attempt = 0; attempt < 1000; ++attempt, r += 1e-3) {
    std::vector<Circle> circles;
    for (int i = 0; i < c; ++i) {
      const double a = kPi / 2.0 + 2.0 * kPi * i / c;
      circles.push_back({ring * std::cos(a), ring * std::sin(a), r});
    }
    Realization real = assemble_from_circles(circles);
    if (has_concurrence(real, 1e-9)) continue;
    EmbeddedGraph g = extract_abstract_graph(real);
    return {std::move(g), std::move(real)};
  }
  throw Error(Errc::DegenerateRadius, "every tried radius gives three concurrent circles");
}

GraphWithRealization upper_bound_family(int c, double tol) {
  if (c < 4) throw Error(Errc::TooSmall, "the family starts at 4 circles");
  if (c % 2 != 0) throw Error(Errc::UnsupportedInput, "the family needs an even circle count");
  EmbeddedGraph cubic;
  if (c == 4) {
    cubic = platonic(Solid::Tetrahedron);
  } else {
    // k-prism: outer ring 0..k-1, inner ring k..2k-1.
    const int k = c / 2;
    std::vector<std::array<double, 2>> coords(c);
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (int i = 0; i < k; ++i) {
      const double a = 2.0 * kPi * i / k;
      coords[i] = {2.0 * std::cos(a), 2.0 * std::sin(a)};
      coords[k + i] = {std::cos(a), std::sin(a)};
      edges.emplace_back(i, (i + 1) % k);
      edges.emplace_back(k + i, k + (i + 1) % k);
      edges.emplace_back(i, k + i);
    }
    cubic = embedding_from_drawing(coords, edges);
  }
  const Packing p = pack(cubic, tol);
  Realization real = assemble_from_circles(p.circles, std::max(10.0 * tol, 1e-8));
  EmbeddedGraph g = extract_abstract_graph(real);
  return {std::move(g), std::move(real)};
}

}  // namespace circlesys
