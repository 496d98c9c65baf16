#ifndef GRASPFORGE_GEOMETRY_HPP_
#define GRASPFORGE_GEOMETRY_HPP_

#include <cmath>

namespace gf {

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  Vec2() = default;
  Vec2(double x_, double y_) : x(x_), y(y_) {}

  Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
  Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
  Vec2 operator-() const { return {-x, -y}; }
  Vec2 operator*(double s) const { return {x * s, y * s}; }
  Vec2 operator/(double s) const { return {x / s, y / s}; }
  Vec2& operator+=(const Vec2& o) {
    x += o.x;
    y += o.y;
    return *this;
  }
  Vec2& operator-=(const Vec2& o) {
    x -= o.x;
    y -= o.y;
    return *this;
  }

  double dot(const Vec2& o) const { return x * o.x + y * o.y; }
  // 2D cross product (z component of the 3D cross).
  double cross(const Vec2& o) const { return x * o.y - y * o.x; }
  double norm() const { return std::hypot(x, y); }
  double norm_sq() const { return x * x + y * y; }
  Vec2 normalized() const {
    const double n = norm();
    return n > 0.0 ? Vec2{x / n, y / n} : Vec2{0.0, 0.0};
  }
  // Counter-clockwise perpendicular.
  Vec2 perp() const { return {-y, x}; }
  Vec2 rotated(double angle) const {
    const double c = std::cos(angle), s = std::sin(angle);
    return {c * x - s * y, s * x + c * y};
  }
};

inline Vec2 operator*(double s, const Vec2& v) { return v * s; }

// Normalize an angle to (-pi, pi].
double normalize_angle(double a);

// Rigid transform in the plane. Composition and inversion follow the SE(2)
// group laws; theta is kept normalized to (-pi, pi].
struct Pose2 {
  double x = 0.0;
  double y = 0.0;
  double theta = 0.0;

  Pose2() = default;
  Pose2(double x_, double y_, double theta_) : x(x_), y(y_), theta(normalize_angle(theta_)) {}

  static Pose2 identity() { return {}; }

  Vec2 translation() const { return {x, y}; }
  // R(theta) * v
  Vec2 rotate(const Vec2& v) const { return v.rotated(theta); }
  // R(theta) * p + t
  Vec2 apply(const Vec2& p) const { return rotate(p) + translation(); }
  // this ∘ other (apply other first, then this).
  Pose2 compose(const Pose2& other) const {
    const Vec2 t = apply({other.x, other.y});
    return {t.x, t.y, theta + other.theta};
  }
  Pose2 inverse() const {
    const Vec2 t = Vec2{x, y}.rotated(-theta);
    return {-t.x, -t.y, -theta};
  }
};

struct Segment {
  Vec2 a;
  Vec2 b;

  Vec2 midpoint() const { return (a + b) * 0.5; }
  double length() const { return (b - a).norm(); }
};

// Closest point on segment [a,b] to p.
Vec2 closest_point_on_segment(const Vec2& a, const Vec2& b, const Vec2& p);

struct ClosestPair {
  Vec2 on_first;
  Vec2 on_second;
  double distance = 0.0;
};

// Closest points between two segments. Handles degenerate (point) segments.
ClosestPair segment_segment_closest(const Segment& s1, const Segment& s2);

}  // namespace gf

#endif  // GRASPFORGE_GEOMETRY_HPP_
