#include "circlesys/packing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <queue>
#include <set>
#include <string>

#include "circlesys/error.hpp"

namespace circlesys {

namespace {

// Extended precision keeps layout drift small relative to the smallest circles.
using real = long double;
constexpr real kPi = std::numbers::pi_v<real>;

// Angle at the center of a circle of radius r in the triangle formed with two
// tangent neighbors of radii a and b.
real corner_angle(real r, real a, real b) {
  const real s = std::sqrt(a * b / ((r + a) * (r + b)));
  return 2 * std::asin(std::min<real>(1, s));
}

}  // namespace

Triangulation triangulate(const EmbeddedGraph& g) {
  const int n = g.vertex_count();
  const int base_darts = g.dart_count();
  const int faces = g.face_count();

  // Spoke for the corner that follows outgoing dart d at tail(d): darts
  // base_darts + 2d (vertex -> apex) and base_darts + 2d + 1 (apex -> vertex).
  std::vector<Dart> darts(base_darts + 2 * base_darts);
  std::vector<DartId> twin(darts.size());
  for (DartId d = 0; d < base_darts; ++d) {
    darts[d] = g.dart(d);
    twin[d] = g.twin(d);
    const VertexId v = g.dart(d).tail;
    const VertexId apex = n + g.face_of(g.twin(d));
    darts[base_darts + 2 * d] = {v, apex};
    darts[base_darts + 2 * d + 1] = {apex, v};
    twin[base_darts + 2 * d] = base_darts + 2 * d + 1;
    twin[base_darts + 2 * d + 1] = base_darts + 2 * d;
  }

  std::vector<std::vector<DartId>> rotation(n + faces);
  for (VertexId v = 0; v < n; ++v) {
    for (DartId d : g.rotation(v)) {
      rotation[v].push_back(d);
      rotation[v].push_back(base_darts + 2 * d);
    }
  }
  for (FaceId f = 0; f < faces; ++f) {
    auto cycle = g.face(f);
    for (auto it = cycle.rbegin(); it != cycle.rend(); ++it)
      rotation[n + f].push_back(base_darts + 2 * g.twin(*it) + 1);
  }

  Triangulation t;
  t.base_count = n;
  t.apex_face.resize(faces);
  for (FaceId f = 0; f < faces; ++f) t.apex_face[f] = f;
  const DartId first = g.face(g.outer_face())[0];
  t.boundary = {n + g.outer_face(), g.dart(first).tail, g.dart(first).head};
  t.graph = EmbeddedGraph::from_darts(n + faces, std::move(darts), std::move(twin),
                                      std::move(rotation));
  return t;
}

Packing pack(const EmbeddedGraph& g, const PackOptions& options) {
  if (g.vertex_count() < 3) throw Error(Errc::TooSmall, "packing needs at least 3 vertices");
  if (!is_connected(g)) throw Error(Errc::Disconnected, "packing needs a connected graph");
  if (!g.is_simple()) throw Error(Errc::NotSimple, "packing needs a simple graph");
  for (FaceId f = 0; f < g.face_count(); ++f) {
    const auto vs = g.face_vertices(f);
    if (std::set<VertexId>(vs.begin(), vs.end()).size() != vs.size())
      throw Error(Errc::UnsupportedInput,
                  "face " + std::to_string(f) + " visits a vertex twice; apex augmentation would not be simple");
  }

  const Triangulation tri = triangulate(g);
  const EmbeddedGraph& t = tri.graph;
  const int total = t.vertex_count();
  std::vector<std::vector<VertexId>> nbrs(total);
  for (VertexId v = 0; v < total; ++v)
    for (DartId d : t.rotation(v)) nbrs[v].push_back(t.dart(d).head);

  std::vector<char> fixed(total, 0);
  for (VertexId b : tri.boundary) fixed[b] = 1;
  std::vector<real> radius(total, 1);

  auto angle_sum = [&](VertexId v) {
    const auto& nb = nbrs[v];
    real sum = 0;
    for (std::size_t i = 0; i < nb.size(); ++i)
      sum += corner_angle(radius[v], radius[nb[i]], radius[nb[(i + 1) % nb.size()]]);
    return sum;
  };

  const real target = std::max<real>(options.tol * 1e-4, 1e-17L);
  long sweeps = 0;
  for (;;) {
    real worst = 0;
    for (VertexId v = 0; v < total; ++v)
      if (!fixed[v]) worst = std::max(worst, std::abs(angle_sum(v) - 2 * kPi));
    if (worst < target) break;
    if (sweeps >= options.max_sweeps)
      throw Error(Errc::NoConvergence,
                  "angle sums off by " + std::to_string(static_cast<double>(worst)) + " after " +
                      std::to_string(sweeps) + " sweeps");
    for (VertexId v = 0; v < total; ++v) {
      if (fixed[v]) continue;
      const real k = static_cast<real>(nbrs[v].size());
      const real beta = std::sin(angle_sum(v) / (2 * k));
      const real delta = std::sin(kPi / k);
      const real uniform = radius[v] * beta / (1 - beta);
      radius[v] = uniform * (1 - delta) / delta;
    }
    ++sweeps;
  }

  // Layout. The boundary corner at b0 is the pair (x, succ x) = {b1, b2}; the
  // rest of the flower of b0 lies counterclockwise from succ x to x.
  const auto [b0, b1, b2] = tri.boundary;
  VertexId x = -1, y = -1;
  for (std::size_t i = 0; i < nbrs[b0].size(); ++i) {
    const VertexId p = nbrs[b0][i], q = nbrs[b0][(i + 1) % nbrs[b0].size()];
    if ((p == b1 && q == b2) || (p == b2 && q == b1)) {
      x = p;
      y = q;
      break;
    }
  }
  if (x < 0) throw Error(Errc::UnsupportedInput, "boundary triangle not found in the triangulation");

  struct Center {
    real x = 0, y = 0;
  };
  std::vector<Center> center(total);
  std::vector<char> placed(total, 0);
  const real rho = 2 / std::sqrt(real{3});
  const VertexId order[3] = {b0, y, x};
  for (int i = 0; i < 3; ++i) {
    const real a = kPi / 2 + 2 * kPi * i / 3;
    center[order[i]] = {rho * std::cos(a), rho * std::sin(a)};
    placed[order[i]] = 1;
  }

  std::queue<VertexId> queue;
  for (VertexId v : order) queue.push(v);
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop();
    const auto& nb = nbrs[v];
    const std::size_t k = nb.size();
    std::size_t start = k;
    for (std::size_t i = 0; i < k; ++i) {
      if (placed[nb[i]] && !placed[nb[(i + 1) % k]]) {
        start = i;
        break;
      }
    }
    if (start == k) continue;
    for (std::size_t j = 1; j < k; ++j) {
      const VertexId prev = nb[(start + j - 1) % k];
      const VertexId w = nb[(start + j) % k];
      if (placed[w]) continue;
      const real base = std::atan2(center[prev].y - center[v].y, center[prev].x - center[v].x);
      const real a = base + corner_angle(radius[v], radius[prev], radius[w]);
      const real d = radius[v] + radius[w];
      center[w] = {center[v].x + d * std::cos(a), center[v].y + d * std::sin(a)};
      placed[w] = 1;
      queue.push(w);
    }
  }

  Packing p;
  p.circles.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v)
    p.circles[v] = {static_cast<double>(center[v].x), static_cast<double>(center[v].y),
                    static_cast<double>(radius[v])};
  p.iterations = sweeps;
  p.residual = packing_residual(p, g);
  if (options.enforce_tolerance && !(p.residual <= options.tol))
    throw Error(Errc::NoConvergence, "packing residual " + std::to_string(p.residual) +
                                         " exceeds tolerance after layout");
  return p;
}

double packing_residual(const Packing& p, const EmbeddedGraph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<char>> adjacent(n, std::vector<char>(n, 0));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto [a, b] = g.edge_endpoints(e);
    adjacent[a][b] = adjacent[b][a] = 1;
  }
  double worst = 0.0;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      const Circle& ca = p.circles[a];
      const Circle& cb = p.circles[b];
      const double sum = ca.r + cb.r;
      const double d = center_distance(ca, cb);
      if (adjacent[a][b])
        worst = std::max(worst, std::abs(d - sum) / sum);
      else
        worst = std::max(worst, (sum - d) / sum);
    }
  }
  return worst;
}

}  // namespace circlesys
