#include <cmath>

#include "circlesys/error.hpp"
#include "circlesys/generators.hpp"

namespace circlesys {

EmbeddedGraph octahedron() {
  // Outer triangle A0 A1 A2, inner triangle B0 B1 B2 turned half a turn.
  const std::vector<std::array<double, 2>> coords = {
      {0.0, 10.0}, {-9.0, -5.0}, {9.0, -5.0}, {0.0, -2.0}, {1.7, 1.0}, {-1.7, 1.0}};
  const std::vector<std::pair<VertexId, VertexId>> edges = {
      {0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3},
      {0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 3}, {2, 4}};
  return embedding_from_drawing(coords, edges);
}

std::string_view solid_name(Solid s) {
  switch (s) {
    case Solid::Tetrahedron: return "tetrahedron";
    case Solid::Cube: return "cube";
    case Solid::Octahedron: return "octahedron";
    case Solid::Dodecahedron: return "dodecahedron";
    case Solid::Icosahedron: return "icosahedron";
  }
  return "?";
}

namespace {

using Vec3 = std::array<double, 3>;

// Edges join the vertex pairs at the minimum distance.
std::vector<std::pair<VertexId, VertexId>> shortest_pairs(const std::vector<Vec3>& p) {
  double best = 1e300;
  const int n = static_cast<int>(p.size());
  auto dist = [&](int i, int j) {
    return std::hypot(p[i][0] - p[j][0], p[i][1] - p[j][1], p[i][2] - p[j][2]);
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) best = std::min(best, dist(i, j));
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (dist(i, j) < best * (1.0 + 1e-9)) edges.emplace_back(i, j);
  return edges;
}

EmbeddedGraph icosahedron() {
  const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
  std::vector<Vec3> p;
  for (double s : {-1.0, 1.0}) {
    for (double t : {-phi, phi}) {
      p.push_back({0.0, s, t});
      p.push_back({s, t, 0.0});
      p.push_back({t, 0.0, s});
    }
  }
  return embedding_from_polyhedron(p, shortest_pairs(p));
}

}  // namespace

EmbeddedGraph platonic(Solid s) {
  switch (s) {
    case Solid::Tetrahedron: {
      const std::vector<Vec3> p = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
      return embedding_from_polyhedron(p, shortest_pairs(p));
    }
    case Solid::Cube: {
      std::vector<Vec3> p;
      for (int i = 0; i < 8; ++i)
        p.push_back({i & 1 ? 1.0 : -1.0, i & 2 ? 1.0 : -1.0, i & 4 ? 1.0 : -1.0});
      return embedding_from_polyhedron(p, shortest_pairs(p));
    }
    case Solid::Octahedron:
      return octahedron();
    case Solid::Dodecahedron:
      return dual(icosahedron());
    case Solid::Icosahedron:
      return icosahedron();
  }
  throw Error(Errc::UnsupportedInput, "unknown solid");
}

}  // namespace circlesys
