#pragma once

#include <cmath>
#include <numbers>
#include <vector>

namespace circlesys {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
  friend bool operator==(const Point2&, const Point2&) = default;
};

/// C(O, r) with O = (cx, cy).
struct Circle {
  double cx = 0.0;
  double cy = 0.0;
  double r = 1.0;
  friend bool operator==(const Circle&, const Circle&) = default;

  Point2 center() const { return {cx, cy}; }
  Point2 at(double angle) const { return {cx + r * std::cos(angle), cy + r * std::sin(angle)}; }
};

inline double distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

inline double center_distance(const Circle& a, const Circle& b) {
  return std::hypot(a.cx - b.cx, a.cy - b.cy);
}

/// Polar angle of p around the circle's center, normalized to [0, 2pi).
inline double angle_on(const Circle& c, Point2 p) {
  double t = std::atan2(p.y - c.cy, p.x - c.cx);
  if (t < 0.0) t += 2.0 * std::numbers::pi;
  if (t >= 2.0 * std::numbers::pi) t = 0.0;
  return t;
}

/// Counterclockwise angular extent from `from` to `to`, in (0, 2pi].
inline double ccw_extent(double from, double to) {
  double e = std::fmod(to - from, 2.0 * std::numbers::pi);
  if (e <= 0.0) e += 2.0 * std::numbers::pi;
  return e;
}

enum class Contact { None, Touch, Cross };

/// Relative deviation from external or internal tangency, whichever is closer.
double tangency_defect(const Circle& a, const Circle& b);

struct Intersection {
  Contact kind = Contact::None;
  std::vector<Point2> points;  // one for Touch, two for Cross
};

/// Intersection points of two circles. Pairs whose tangency defect is within
/// `tol` are treated as touching and yield the single tangency point.
Intersection intersect(const Circle& a, const Circle& b, double tol);

}  // namespace circlesys
