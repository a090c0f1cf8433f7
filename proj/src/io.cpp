#include "circlesys/io.hpp"

#include <cmath>
#include <string>

#include "circlesys/error.hpp"

namespace circlesys {

namespace {

constexpr int kVersion = 1;

Json envelope(std::string_view type) { return Json{{"type", type}, {"version", kVersion}}; }

void expect(const Json& j, std::string_view type) {
  const std::string got = document_type(j);
  if (got != type) throw Error(Errc::ParseError, "expected a " + std::string(type) + " document, got " + got);
}

// Wraps nlohmann access errors so callers only see ParseError.
template <class F>
auto guarded(F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

std::string_view kind_name(PointKind k) {
  switch (k) {
    case PointKind::Touch: return "TOUCH";
    case PointKind::Cross: return "CROSS";
    case PointKind::Subdivision: return "SUBDIVISION";
  }
  return "TOUCH";
}

PointKind kind_from(const std::string& s) {
  if (s == "TOUCH") return PointKind::Touch;
  if (s == "CROSS") return PointKind::Cross;
  if (s == "SUBDIVISION") return PointKind::Subdivision;
  throw Error(Errc::ParseError, "unknown point kind " + s);
}

Json circle_json(const Circle& c, int id) { return Json{{"id", id}, {"x", c.cx}, {"y", c.cy}, {"r", c.r}}; }

std::vector<Circle> circles_from(const Json& arr) {
  std::vector<Circle> out;
  for (const Json& c : arr) out.push_back({c.at("x").get<double>(), c.at("y").get<double>(), c.at("r").get<double>()});
  return out;
}

}  // namespace

std::string document_type(const Json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw Error(Errc::ParseError, "document has no type field");
  if (!j.contains("version") || j["version"] != kVersion)
    throw Error(Errc::ParseError, "unsupported document version");
  return j["type"].get<std::string>();
}

Json parse_document(std::string_view text) {
  Json j = Json::parse(text.begin(), text.end(), nullptr, false);
  if (j.is_discarded()) throw Error(Errc::ParseError, "input is not valid JSON");
  document_type(j);
  return j;
}

Json to_json(const EmbeddedGraph& g) {
  Json j = envelope("graph");
  j["n"] = g.vertex_count();
  j["rotation"] = g.rotation_lists();
  j["outer_face"] = g.outer_face();
  return j;
}

Json to_json(const ILGraph& il) {
  Json j = envelope("il_graph");
  const EmbeddedGraph& g = il.graph;
  j["n"] = g.vertex_count();
  j["gray_faces"] = il.gray_faces;
  j["rotation"] = g.rotation_lists();
  // edge_labels[v][i] is the vertex of the original graph shared along the
  // i-th rotation entry of IL vertex v.
  Json labels = Json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    Json row = Json::array();
    for (DartId d : g.rotation(v)) row.push_back(g.edge_of(d));
    labels.push_back(std::move(row));
  }
  j["edge_labels"] = std::move(labels);
  j["selfloops"] = il.selfloops;
  return j;
}

Json to_json(const Packing& p) {
  Json j = envelope("packing");
  Json circles = Json::array();
  for (std::size_t i = 0; i < p.circles.size(); ++i) circles.push_back(circle_json(p.circles[i], static_cast<int>(i)));
  j["circles"] = std::move(circles);
  j["residual"] = p.residual;
  j["iterations"] = p.iterations;
  return j;
}

Json to_json(const Realization& r) {
  Json j = envelope("realization");
  Json circles = Json::array(), points = Json::array(), arcs = Json::array();
  for (std::size_t i = 0; i < r.circles.size(); ++i) circles.push_back(circle_json(r.circles[i], static_cast<int>(i)));
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    const RealPoint& p = r.points[i];
    Json on = p.b < 0 ? Json::array({p.a}) : Json::array({p.a, p.b});
    Json angles = p.b < 0 ? Json::array({p.angle_a}) : Json::array({p.angle_a, p.angle_b});
    points.push_back({{"id", i}, {"x", p.x}, {"y", p.y}, {"on", on}, {"angles", angles}, {"kind", kind_name(p.kind)}});
  }
  for (const Arc& a : r.arcs)
    arcs.push_back({{"circle", a.circle},
                    {"from_angle", a.from_angle},
                    {"to_angle", a.to_angle},
                    {"edge", a.edge},
                    {"from", a.from_point},
                    {"to", a.to_point}});
  j["circles"] = std::move(circles);
  j["points"] = std::move(points);
  j["arcs"] = std::move(arcs);
  return j;
}

Json to_json(const OrientedDual& d) {
  Json j = envelope("oriented_dual");
  j["nodes"] = d.nodes;
  Json edges = Json::array();
  for (const auto& e : d.edges) edges.push_back({e.tail, e.head});
  j["edges"] = std::move(edges);
  return j;
}

Json to_json(const VerifyReport& rep) {
  Json j = envelope("verify_report");
  j["ok"] = rep.ok;
  j["circles"] = rep.circles;
  j["points"] = rep.points;
  Json v = Json::array();
  for (const Violation& x : rep.violations) v.push_back({{"rule", x.rule}, {"detail", x.detail}});
  j["violations"] = std::move(v);
  return j;
}

Json bundle_json(const EmbeddedGraph& g, const Realization& r) {
  Json j = envelope("bundle");
  j["graph"] = to_json(g);
  j["realization"] = to_json(r);
  return j;
}

EmbeddedGraph graph_from_json(const Json& j) {
  if (document_type(j) == "bundle") return graph_from_json(j.at("graph"));
  expect(j, "graph");
  return guarded([&] {
    const auto rotation = j.at("rotation").get<std::vector<std::vector<VertexId>>>();
    if (j.contains("n") && j["n"].get<int>() != static_cast<int>(rotation.size()))
      throw Error(Errc::ParseError, "n does not match the rotation length");
    std::optional<FaceId> outer;
    if (j.contains("outer_face") && !j["outer_face"].is_null()) outer = j["outer_face"].get<FaceId>();
    return build_embedding(rotation, false, outer);
  });
}

Packing packing_from_json(const Json& j) {
  expect(j, "packing");
  return guarded([&] {
    Packing p;
    p.circles = circles_from(j.at("circles"));
    p.residual = j.value("residual", 0.0);
    p.iterations = j.value("iterations", 0);
    return p;
  });
}

Realization realization_from_json(const Json& j) {
  if (document_type(j) == "bundle") return realization_from_json(j.at("realization"));
  expect(j, "realization");
  return guarded([&] {
    Realization r;
    r.circles = circles_from(j.at("circles"));
    for (const Json& p : j.at("points")) {
      RealPoint q;
      q.x = p.at("x").get<double>();
      q.y = p.at("y").get<double>();
      const auto on = p.at("on").get<std::vector<int>>();
      if (on.empty() || on.size() > 2) throw Error(Errc::ParseError, "a point lies on one or two circles");
      q.a = on[0];
      q.b = on.size() == 2 ? on[1] : -1;
      q.kind = kind_from(p.value("kind", std::string(on.size() == 2 ? "TOUCH" : "SUBDIVISION")));
      for (int c : on)
        if (c < 0 || c >= static_cast<int>(r.circles.size())) throw Error(Errc::ParseError, "point on unknown circle");
      if (p.contains("angles")) {
        const auto angles = p["angles"].get<std::vector<double>>();
        if (angles.size() != on.size()) throw Error(Errc::ParseError, "one angle per circle");
        q.angle_a = angles[0];
        q.angle_b = angles.size() == 2 ? angles[1] : 0.0;
      } else {
        q.angle_a = angle_on(r.circles[q.a], q.pos());
        q.angle_b = q.b >= 0 ? angle_on(r.circles[q.b], q.pos()) : 0.0;
      }
      r.points.push_back(q);
    }
    const Json& arcs = j.at("arcs");
    if (!arcs.empty() && !arcs[0].contains("from")) {
      // Only angles given: derive endpoints from the points.
      rebuild_arcs(r);
      if (r.arcs.size() != arcs.size()) throw Error(Errc::ParseError, "arcs do not match the points");
      for (Arc& rebuilt : r.arcs) {
        double best = 1e300;
        for (const Json& a : arcs) {
          if (a.at("circle").get<int>() != rebuilt.circle) continue;
          const double gap = std::abs(a.at("from_angle").get<double>() - rebuilt.from_angle);
          if (gap < best) {
            best = gap;
            rebuilt.edge = a.value("edge", -1);
          }
        }
      }
      return r;
    }
    for (const Json& a : arcs)
      r.arcs.push_back({a.at("circle").get<int>(), a.at("from_angle").get<double>(), a.at("to_angle").get<double>(),
                        a.value("edge", -1), a.at("from").get<int>(), a.at("to").get<int>()});
    return r;
  });
}

OrientedDual oriented_dual_from_json(const Json& j) {
  expect(j, "oriented_dual");
  return guarded([&] {
    OrientedDual d;
    d.nodes = j.at("nodes").get<std::vector<FaceId>>();
    int arc = 0;
    for (const Json& e : j.at("edges")) d.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), arc++});
    return d;
  });
}

}  // namespace circlesys
