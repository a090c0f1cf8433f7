#include "circlesys/realization.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <set>
#include <string>

#include "circlesys/coloring.hpp"
#include "circlesys/error.hpp"
#include "circlesys/isomorphism.hpp"
#include "circlesys/packing.hpp"

namespace circlesys {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Smallest absolute difference between two angles.
double angle_gap(double a, double b) {
  const double d = std::fmod(std::abs(a - b), kTwoPi);
  return std::min(d, kTwoPi - d);
}

// Point ids on circle c, sorted by angle (ties by id).
std::vector<int> points_on(const Realization& r, int c) {
  std::vector<int> ids;
  for (int i = 0; i < static_cast<int>(r.points.size()); ++i)
    if (r.points[i].on(c)) ids.push_back(i);
  std::sort(ids.begin(), ids.end(), [&](int p, int q) {
    const double ap = r.points[p].angle_on_circle(c), aq = r.points[q].angle_on_circle(c);
    return ap != aq ? ap < aq : p < q;
  });
  return ids;
}

std::string pair_name(int a, int b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

}  // namespace

void rebuild_arcs(Realization& r) {
  r.arcs.clear();
  for (int c = 0; c < static_cast<int>(r.circles.size()); ++c) {
    const auto ids = points_on(r, c);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      const int p = ids[i], q = ids[(i + 1) % ids.size()];
      Arc arc;
      arc.circle = c;
      arc.from_point = p;
      arc.to_point = q;
      arc.from_angle = r.points[p].angle_on_circle(c);
      arc.to_angle = r.points[q].angle_on_circle(c);
      arc.edge = static_cast<int>(r.arcs.size());
      r.arcs.push_back(arc);
    }
  }
}

Realization assemble_from_circles(const std::vector<Circle>& circles, double tol) {
  Realization r;
  r.circles = circles;
  const int c = static_cast<int>(circles.size());
  for (int i = 0; i < c; ++i) {
    for (int j = i + 1; j < c; ++j) {
      const Intersection hit = intersect(circles[i], circles[j], tol);
      for (const Point2& p : hit.points) {
        RealPoint pt;
        pt.x = p.x;
        pt.y = p.y;
        pt.a = i;
        pt.b = j;
        pt.angle_a = angle_on(circles[i], p);
        pt.angle_b = angle_on(circles[j], p);
        pt.kind = hit.kind == Contact::Touch ? PointKind::Touch : PointKind::Cross;
        r.points.push_back(pt);
      }
    }
  }
  rebuild_arcs(r);
  return r;
}

Realization realize(const EmbeddedGraph& g, double tol) {
  if (!g.is_simple()) throw Error(Errc::NotSimple, "realize needs a simple graph");
  if (!g.is_regular(4)) throw Error(Errc::UnsupportedInput, "realize needs a 4-regular graph");
  const int level = connectivity_level(g);
  if (level < 3)
    throw Error(Errc::NotThreeConnected,
                "graph has connectivity level " + std::to_string(level));

  const TwoColoring coloring = two_color_faces(g);
  const ILGraph il = build_il(g, coloring);
  const SimplicityReport simple = il_simplicity(il);
  if (!simple.simple) throw Error(Errc::ILNotSimple, "IL graph of a 3-connected input is not simple");

  const Packing packing = pack(il.graph, tol);

  Realization r;
  r.circles = packing.circles;
  r.points.resize(g.vertex_count());
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const int a = il.il_vertex_of_face[il.edges[v].a];
    const int b = il.il_vertex_of_face[il.edges[v].b];
    const Circle& ca = r.circles[a];
    const Circle& cb = r.circles[b];
    const double t = ca.r / (ca.r + cb.r);
    RealPoint& p = r.points[v];
    p.x = ca.cx + t * (cb.cx - ca.cx);
    p.y = ca.cy + t * (cb.cy - ca.cy);
    p.a = a;
    p.b = b;
    p.angle_a = angle_on(ca, p.pos());
    p.angle_b = angle_on(cb, p.pos());
    p.kind = PointKind::Touch;
  }
  rebuild_arcs(r);

  // Each arc carries the edge of its gray face joining the two endpoints.
  for (Arc& arc : r.arcs) {
    const FaceId f = il.gray_faces[arc.circle];
    arc.edge = -1;
    for (DartId d : g.face(f)) {
      const auto [u, w] = std::pair{g.dart(d).tail, g.dart(d).head};
      if ((u == arc.from_point && w == arc.to_point) || (u == arc.to_point && w == arc.from_point)) {
        arc.edge = g.edge_of(d);
        break;
      }
    }
    if (arc.edge < 0)
      throw Error(Errc::UnsupportedInput, "points " + pair_name(arc.from_point, arc.to_point) +
                                              " are consecutive on circle " +
                                              std::to_string(arc.circle) +
                                              " but not along its gray face");
  }
  return r;
}

EmbeddedGraph extract_abstract_graph(const Realization& r, double tol) {
  const int n = static_cast<int>(r.points.size());
  const int m = static_cast<int>(r.arcs.size());
  double rmin = std::numeric_limits<double>::infinity();
  for (const Circle& c : r.circles) rmin = std::min(rmin, c.r);

  std::vector<Dart> darts(2 * m);
  std::vector<DartId> twin(2 * m);
  std::vector<std::vector<std::pair<double, DartId>>> around(n);
  for (int i = 0; i < m; ++i) {
    const Arc& arc = r.arcs[i];
    const Circle& c = r.circles[arc.circle];
    const double extent = arc.extent();
    if (extent * c.r < tol * c.r)
      throw Error(Errc::DegenerateArc, "arc " + std::to_string(i) + " on circle " +
                                           std::to_string(arc.circle) + " has near-zero length");
    darts[2 * i] = {arc.from_point, arc.to_point};
    darts[2 * i + 1] = {arc.to_point, arc.from_point};
    twin[2 * i] = 2 * i + 1;
    twin[2 * i + 1] = 2 * i;
    // Direction of a short chord leaving each endpoint. Circles tangent at a
    // point share the tangent line; the chord separates them by curvature.
    const double step = std::min(1e-6 * rmin / c.r, extent / 4.0);
    const double out_ccw = std::fmod(arc.from_angle + kPi / 2.0 + step / 2.0 + kTwoPi, kTwoPi);
    const double out_cw = std::fmod(arc.to_angle - kPi / 2.0 - step / 2.0 + 2.0 * kTwoPi, kTwoPi);
    around[arc.from_point].emplace_back(out_ccw, 2 * i);
    around[arc.to_point].emplace_back(out_cw, 2 * i + 1);
  }
  std::vector<std::vector<DartId>> rotation(n);
  for (int v = 0; v < n; ++v) {
    std::sort(around[v].begin(), around[v].end());
    for (const auto& [angle, d] : around[v]) rotation[v].push_back(d);
  }
  return EmbeddedGraph::from_darts(n, std::move(darts), std::move(twin), std::move(rotation));
}

FaceId geometric_outer_face(const Realization& r, const EmbeddedGraph& drawn) {
  std::vector<char> has_arc(r.circles.size(), 0);
  for (const Arc& a : r.arcs) has_arc[a.circle] = 1;
  int left = -1;
  for (int c = 0; c < static_cast<int>(r.circles.size()); ++c) {
    if (!has_arc[c]) continue;
    const Circle& k = r.circles[c];
    if (left < 0 || k.cx - k.r < r.circles[left].cx - r.circles[left].r) left = c;
  }
  if (left < 0) throw Error(Errc::EmptyInput, "realization has no arcs");
  // The leftmost point of the drawing sits at angle pi on that circle; the
  // counterclockwise dart of the arc through it has the outer face on its right.
  for (int i = 0; i < static_cast<int>(r.arcs.size()); ++i) {
    const Arc& a = r.arcs[i];
    if (a.circle != left) continue;
    if (ccw_extent(a.from_angle, kPi) <= a.extent() || a.extent() >= kTwoPi)
      return drawn.face_of(2 * i);
  }
  throw Error(Errc::UnsupportedInput, "arcs do not cover the leftmost circle");
}

VerifyReport verify_realization(const Realization& r, const EmbeddedGraph* g, double tol) {
  VerifyReport rep;
  const int nc = static_cast<int>(r.circles.size());
  const int np = static_cast<int>(r.points.size());
  rep.circles = nc;
  rep.points = np;
  auto fail = [&](std::string rule, std::string detail) {
    rep.ok = false;
    rep.violations.push_back({std::move(rule), std::move(detail)});
  };

  // Structural sanity first; the numeric rules index through these fields.
  bool malformed = false;
  for (int i = 0; i < np; ++i) {
    const RealPoint& p = r.points[i];
    const bool single = p.kind == PointKind::Subdivision;
    if (p.a < 0 || p.a >= nc || (!single && (p.b < 0 || p.b >= nc || p.b == p.a)) ||
        (single && p.b != -1)) {
      fail("malformed", "point " + std::to_string(i) + " references invalid circles");
      malformed = true;
    }
  }
  for (int i = 0; i < static_cast<int>(r.arcs.size()); ++i) {
    const Arc& a = r.arcs[i];
    if (a.circle < 0 || a.circle >= nc || a.from_point < 0 || a.from_point >= np ||
        a.to_point < 0 || a.to_point >= np) {
      fail("malformed", "arc " + std::to_string(i) + " references invalid ids");
      malformed = true;
    }
  }
  for (int c = 0; c < nc; ++c) {
    if (!(r.circles[c].r > 0.0) || !std::isfinite(r.circles[c].cx) || !std::isfinite(r.circles[c].cy)) {
      fail("malformed", "circle " + std::to_string(c) + " has a non-positive or non-finite value");
      malformed = true;
    }
  }
  if (malformed) return rep;

  // Every point on both of its circles and on no other.
  for (int i = 0; i < np; ++i) {
    const RealPoint& p = r.points[i];
    for (int c = 0; c < nc; ++c) {
      const Circle& k = r.circles[c];
      const double off = std::abs(distance(p.pos(), k.center()) - k.r);
      if (p.on(c)) {
        if (off > tol * k.r)
          fail("point_on_circle", "point " + std::to_string(i) + " is off circle " +
                                      std::to_string(c) + " by " + std::to_string(off / k.r) +
                                      " relative");
        else if (angle_gap(p.angle_on_circle(c), angle_on(k, p.pos())) > std::sqrt(tol))
          fail("point_on_circle", "point " + std::to_string(i) + " has a wrong angle on circle " +
                                      std::to_string(c));
      } else if (off <= tol * k.r) {
        fail("point_on_third_circle", "point " + std::to_string(i) + " also lies on circle " +
                                          std::to_string(c));
      }
    }
  }

  // At least three points per circle, at most two shared points per pair.
  std::map<std::pair<int, int>, std::vector<int>> shared;
  std::vector<int> per_circle(nc, 0);
  for (int i = 0; i < np; ++i) {
    const RealPoint& p = r.points[i];
    ++per_circle[p.a];
    if (p.b >= 0) {
      ++per_circle[p.b];
      shared[{std::min(p.a, p.b), std::max(p.a, p.b)}].push_back(i);
    }
  }
  for (int c = 0; c < nc; ++c)
    if (per_circle[c] < 3)
      fail("points_per_circle", "circle " + std::to_string(c) + " carries " +
                                    std::to_string(per_circle[c]) + " points");
  for (const auto& [pair, ids] : shared)
    if (ids.size() > 2)
      fail("shared_points", "circles " + pair_name(pair.first, pair.second) + " share " +
                                std::to_string(ids.size()) + " points");

  // Arcs partition every circle: one arc per point, ending at the next point.
  for (int c = 0; c < nc; ++c) {
    const auto ids = points_on(r, c);
    std::map<int, int> next;
    for (std::size_t i = 0; i < ids.size(); ++i) next[ids[i]] = ids[(i + 1) % ids.size()];
    std::map<int, int> starts;
    int count = 0;
    for (const Arc& a : r.arcs) {
      if (a.circle != c) continue;
      ++count;
      auto it = next.find(a.from_point);
      if (it == next.end() || it->second != a.to_point) {
        fail("arc_partition", "arc on circle " + std::to_string(c) + " from point " +
                                  std::to_string(a.from_point) + " does not end at the next point");
        continue;
      }
      ++starts[a.from_point];
      const double slack = std::sqrt(tol);
      if (angle_gap(a.from_angle, r.points[a.from_point].angle_on_circle(c)) > slack ||
          angle_gap(a.to_angle, r.points[a.to_point].angle_on_circle(c)) > slack)
        fail("arc_partition", "arc on circle " + std::to_string(c) + " from point " +
                                  std::to_string(a.from_point) + " has endpoint angles off its points");
    }
    if (count != static_cast<int>(ids.size()))
      fail("arc_partition", "circle " + std::to_string(c) + " has " + std::to_string(count) +
                                " arcs for " + std::to_string(ids.size()) + " points");
    for (const auto& [p, k] : starts)
      if (k > 1) fail("arc_partition", "point " + std::to_string(p) + " starts several arcs on circle " +
                                           std::to_string(c));
  }

  // Every geometric intersection is listed, with the right kind.
  for (int i = 0; i < nc; ++i) {
    for (int j = i + 1; j < nc; ++j) {
      const Intersection hit = intersect(r.circles[i], r.circles[j], tol);
      const auto it = shared.find({i, j});
      const std::vector<int> listed = it == shared.end() ? std::vector<int>{} : it->second;
      const double match = std::sqrt(tol) * (r.circles[i].r + r.circles[j].r);
      for (const Point2& q : hit.points) {
        bool found = false;
        for (int id : listed) found = found || distance(q, r.points[id].pos()) <= match;
        if (!found)
          fail("unlisted_intersection", "circles " + pair_name(i, j) + " meet at an unlisted point");
      }
      const PointKind expected = hit.kind == Contact::Touch ? PointKind::Touch : PointKind::Cross;
      for (int id : listed)
        if (hit.kind != Contact::None && r.points[id].kind != expected)
          fail("point_kind", "point " + std::to_string(id) + " is listed as " +
                                 (r.points[id].kind == PointKind::Touch ? "TOUCH" : "CROSS") +
                                 " but its circles " +
                                 (hit.kind == Contact::Touch ? "touch" : "cross"));
    }
  }

  // Circle count between the lower and upper bound (4-regular drawings only).
  const bool has_subdivision = std::any_of(r.points.begin(), r.points.end(), [](const RealPoint& p) {
    return p.kind == PointKind::Subdivision;
  });
  if (!has_subdivision) {
    if (np < 6)
      fail("circle_count_bounds", "only " + std::to_string(np) + " vertices; bounds need at least 6");
    else if (!within_bounds(np, nc))
      fail("circle_count_bounds", std::to_string(nc) + " circles outside the bounds for n = " +
                                      std::to_string(np));
  }

  if (g != nullptr) {
    try {
      const EmbeddedGraph drawn = extract_abstract_graph(r, tol);
      if (!isomorphic(drawn, *g))
        fail("abstract_graph", "drawn graph is not isomorphic to the expected graph");
    } catch (const Error& e) {
      fail("abstract_graph", e.what());
    }
  }
  return rep;
}

BoundsResult circle_count_bounds(int n) {
  if (n < 6) throw Error(Errc::TooSmall, "no simple 4-regular planar graph has " + std::to_string(n) + " vertices");
  return {n, (1.0 + std::sqrt(1.0 + 4.0 * n)) / 2.0, 2.0 * n / 3.0};
}

bool within_bounds(int n, int c) {
  const long long cc = c, nn = n;
  return cc * (cc - 1) >= nn && 3 * cc <= 2 * nn;
}

bool innermost_face_arc_check(const Realization& r) {
  const EmbeddedGraph drawn = extract_abstract_graph(r);
  const FaceId outer = geometric_outer_face(r, drawn);
  const auto outer_vs = drawn.face_vertices(outer);
  const std::set<VertexId> boundary(outer_vs.begin(), outer_vs.end());
  bool any = false;
  bool all_short = true;
  for (FaceId f = 0; f < drawn.face_count(); ++f) {
    if (f == outer) continue;
    const auto vs = drawn.face_vertices(f);
    if (std::any_of(vs.begin(), vs.end(), [&](VertexId v) { return boundary.count(v) > 0; })) continue;
    any = true;
    bool short_arc = false;
    for (DartId d : drawn.face(f)) short_arc = short_arc || r.arcs[d / 2].extent() < kPi;
    all_short = all_short && short_arc;
  }
  if (!any) throw Error(Errc::NoInnermostFace, "every interior face touches the outer face");
  return all_short;
}

Realization subdivide_realization(const Realization& r, int k) {
  Realization out;
  out.circles = r.circles;
  out.points = r.points;
  for (const Arc& a : r.arcs) {
    const Circle& c = r.circles[a.circle];
    for (int j = 1; j <= k; ++j) {
      const double t = std::fmod(a.from_angle + a.extent() * j / (k + 1), kTwoPi);
      RealPoint p;
      const Point2 q = c.at(t);
      p.x = q.x;
      p.y = q.y;
      p.a = a.circle;
      p.b = -1;
      p.angle_a = t;
      p.kind = PointKind::Subdivision;
      out.points.push_back(p);
    }
  }
  rebuild_arcs(out);
  return out;
}

}  // namespace circlesys
