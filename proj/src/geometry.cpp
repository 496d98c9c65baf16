#include "graspforge/geometry.hpp"

#include <algorithm>

namespace gf {

double normalize_angle(double a) {
  double r = std::remainder(a, 2.0 * M_PI);  // [-pi, pi]
  if (r <= -M_PI) r = M_PI;
  return r;
}

Vec2 closest_point_on_segment(const Vec2& a, const Vec2& b, const Vec2& p) {
  const Vec2 ab = b - a;
  const double len_sq = ab.norm_sq();
  if (len_sq <= 0.0) return a;
  double t = (p - a).dot(ab) / len_sq;
  t = std::clamp(t, 0.0, 1.0);
  return a + ab * t;
}

ClosestPair segment_segment_closest(const Segment& s1, const Segment& s2) {
  // Candidate pairs: each endpoint against the other segment, plus the
  // interior crossing when the segments intersect.
  const Vec2 d1 = s1.b - s1.a;
  const Vec2 d2 = s2.b - s2.a;
  const Vec2 r = s1.a - s2.a;
  const double denom = d1.cross(d2);

  if (std::abs(denom) > 1e-14) {
    const double t = d2.cross(r) / denom;  // param on s1
    const double u = d1.cross(r) / denom;  // param on s2
    if (t >= 0.0 && t <= 1.0 && u >= 0.0 && u <= 1.0) {
      const Vec2 p = s1.a + d1 * t;
      return {p, p, 0.0};
    }
  }

  ClosestPair best;
  best.distance = -1.0;
  auto consider = [&best](const Vec2& p1, const Vec2& p2) {
    const double d = (p1 - p2).norm();
    if (best.distance < 0.0 || d < best.distance) best = {p1, p2, d};
  };
  consider(s1.a, closest_point_on_segment(s2.a, s2.b, s1.a));
  consider(s1.b, closest_point_on_segment(s2.a, s2.b, s1.b));
  consider(closest_point_on_segment(s1.a, s1.b, s2.a), s2.a);
  consider(closest_point_on_segment(s1.a, s1.b, s2.b), s2.b);
  return best;
}

}  // namespace gf
