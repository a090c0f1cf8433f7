#include "circlesys/render.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <numbers>

#include <fmt/format.h>

#include "circlesys/error.hpp"

namespace circlesys {

namespace {

constexpr double kPi = std::numbers::pi;

// Maps drawing coordinates to canvas pixels.
struct Frame {
  double scale = 1.0, ox = 0.0, oy = 0.0;
  double x(double px) const { return ox + scale * px; }
  double y(double py) const { return oy - scale * py; }
};

Frame fit(const std::vector<Circle>& circles, const RenderOptions& o) {
  double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
  for (const Circle& c : circles) {
    x0 = std::min(x0, c.cx - c.r);
    x1 = std::max(x1, c.cx + c.r);
    y0 = std::min(y0, c.cy - c.r);
    y1 = std::max(y1, c.cy + c.r);
  }
  const double w = 0.9 * o.width, h = 0.9 * o.height;
  const double span_x = std::max(x1 - x0, 1e-300), span_y = std::max(y1 - y0, 1e-300);
  Frame f;
  f.scale = std::min(w / span_x, h / span_y);
  f.ox = 0.5 * o.width - f.scale * 0.5 * (x0 + x1);
  f.oy = 0.5 * o.height + f.scale * 0.5 * (y0 + y1);
  return f;
}

void check(const std::vector<Circle>& circles, const RenderOptions& o) {
  if (circles.empty()) throw Error(Errc::EmptyInput, "nothing to draw");
  if (o.width <= 0 || o.height <= 0) throw Error(Errc::InvalidConfig, "canvas size must be positive");
  if (!(o.circles || o.points || o.arcs || o.labels || o.shading))
    throw Error(Errc::InvalidConfig, "every layer is disabled");
}

// Fixed hue walk so neighboring edge ids get distinct colors.
std::string edge_color(int edge) {
  const double hue = std::fmod(std::max(edge, 0) * 137.508, 360.0);
  return fmt::format("hsl({:.1f},70%,40%)", hue);
}

void open(std::string& out, const RenderOptions& o) {
  fmt::format_to(std::back_inserter(out),
                 "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n",
                 o.width, o.height);
  out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
}

void draw_circles(std::string& out, const std::vector<Circle>& circles, const Frame& f, const RenderOptions& o) {
  if (o.shading) {
    out += "<g id=\"shading\" fill=\"#d0d0d0\" fill-opacity=\"0.5\" stroke=\"none\">\n";
    for (const Circle& c : circles)
      fmt::format_to(std::back_inserter(out), "<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{:.3f}\"/>\n", f.x(c.cx),
                     f.y(c.cy), f.scale * c.r);
    out += "</g>\n";
  }
  if (o.circles) {
    fmt::format_to(std::back_inserter(out), "<g id=\"circles\" fill=\"none\" stroke=\"black\" stroke-width=\"{}\">\n",
                   o.circle_stroke);
    for (const Circle& c : circles)
      fmt::format_to(std::back_inserter(out), "<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{:.3f}\"/>\n", f.x(c.cx),
                     f.y(c.cy), f.scale * c.r);
    out += "</g>\n";
  }
}

}  // namespace

std::string render_svg(const Realization& r, const RenderOptions& o) {
  check(r.circles, o);
  const Frame f = fit(r.circles, o);
  std::string out;
  open(out, o);
  draw_circles(out, r.circles, f, o);
  if (o.arcs && !r.arcs.empty()) {
    fmt::format_to(std::back_inserter(out), "<g id=\"arcs\" fill=\"none\" stroke-width=\"{}\">\n", o.arc_stroke);
    for (const Arc& a : r.arcs) {
      const Circle& c = r.circles[a.circle];
      const double rad = f.scale * c.r;
      // The y flip turns counterclockwise into sweep-flag 0. A full turn is
      // split at its midpoint because SVG cannot draw it in one command.
      const double extent = a.extent();
      std::vector<double> stops{a.from_angle};
      if (extent > kPi) stops.push_back(a.from_angle + 0.5 * extent);
      stops.push_back(a.from_angle + extent);
      std::string d = fmt::format("M {:.3f} {:.3f}", f.x(c.cx + c.r * std::cos(stops[0])),
                                  f.y(c.cy + c.r * std::sin(stops[0])));
      for (std::size_t i = 1; i < stops.size(); ++i)
        d += fmt::format(" A {0:.3f} {0:.3f} 0 0 0 {1:.3f} {2:.3f}", rad, f.x(c.cx + c.r * std::cos(stops[i])),
                         f.y(c.cy + c.r * std::sin(stops[i])));
      fmt::format_to(std::back_inserter(out), "<path d=\"{}\" stroke=\"{}\"/>\n", d, edge_color(a.edge));
    }
    out += "</g>\n";
  }
  if (o.points && !r.points.empty()) {
    out += "<g id=\"points\" stroke=\"black\">\n";
    for (const RealPoint& p : r.points) {
      const char* fill = p.kind == PointKind::Touch ? "white" : p.kind == PointKind::Cross ? "black" : "gray";
      fmt::format_to(std::back_inserter(out), "<circle cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{}\" fill=\"{}\"/>\n", f.x(p.x),
                     f.y(p.y), o.point_radius, fill);
    }
    out += "</g>\n";
  }
  if (o.labels && !r.points.empty()) {
    out += "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"12\">\n";
    for (std::size_t i = 0; i < r.points.size(); ++i)
      fmt::format_to(std::back_inserter(out), "<text x=\"{:.3f}\" y=\"{:.3f}\">{}</text>\n",
                     f.x(r.points[i].x) + o.point_radius + 2, f.y(r.points[i].y) - o.point_radius - 2, i);
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string render_svg(const Packing& p, const RenderOptions& o) {
  check(p.circles, o);
  const Frame f = fit(p.circles, o);
  std::string out;
  open(out, o);
  draw_circles(out, p.circles, f, o);
  if (o.labels) {
    out += "<g id=\"labels\" font-family=\"sans-serif\" font-size=\"12\" text-anchor=\"middle\">\n";
    for (std::size_t i = 0; i < p.circles.size(); ++i)
      fmt::format_to(std::back_inserter(out), "<text x=\"{:.3f}\" y=\"{:.3f}\">{}</text>\n", f.x(p.circles[i].cx),
                     f.y(p.circles[i].cy), i);
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace circlesys
