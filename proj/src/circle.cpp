#include "circlesys/circle.hpp"

#include <algorithm>

namespace circlesys {

double tangency_defect(const Circle& a, const Circle& b) {
  const double d = center_distance(a, b);
  const double scale = a.r + b.r;
  const double external = std::abs(d - scale) / scale;
  const double internal = std::abs(d - std::abs(a.r - b.r)) / scale;
  return std::min(external, internal);
}

Intersection intersect(const Circle& a, const Circle& b, double tol) {
  Intersection out;
  const double d = center_distance(a, b);
  const double scale = a.r + b.r;
  if (d == 0.0) return out;  // concentric: no isolated common points
  const double ux = (b.cx - a.cx) / d, uy = (b.cy - a.cy) / d;

  if (std::abs(d - scale) <= tol * scale) {
    const double t = a.r / scale * d;
    out.kind = Contact::Touch;
    out.points.push_back({a.cx + t * ux, a.cy + t * uy});
    return out;
  }
  if (std::abs(d - std::abs(a.r - b.r)) <= tol * scale) {
    // Internal tangency; midpoint of the two circles' own extreme points
    // along the center line (the larger circle's far side).
    const double sign = a.r >= b.r ? 1.0 : -1.0;
    const Point2 pa{a.cx + sign * a.r * ux, a.cy + sign * a.r * uy};
    const Point2 pb{b.cx + sign * b.r * ux, b.cy + sign * b.r * uy};
    out.kind = Contact::Touch;
    out.points.push_back({0.5 * (pa.x + pb.x), 0.5 * (pa.y + pb.y)});
    return out;
  }
  if (d > scale || d < std::abs(a.r - b.r)) return out;

  const double along = (d * d + a.r * a.r - b.r * b.r) / (2.0 * d);
  const double h = std::sqrt(std::max(0.0, a.r * a.r - along * along));
  const double mx = a.cx + along * ux, my = a.cy + along * uy;
  out.kind = Contact::Cross;
  out.points.push_back({mx - h * uy, my + h * ux});
  out.points.push_back({mx + h * uy, my - h * ux});
  return out;
}

}  // namespace circlesys
