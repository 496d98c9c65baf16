#include "graspforge/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <stdexcept>

#include "json.hpp"

namespace gf {

std::vector<Vec2> ObjectShape::scaled_vertices() const {
  std::vector<Vec2> out;
  out.reserve(vertices.size());
  for (const Vec2& v : vertices) out.push_back(v * scale);
  return out;
}

double polygon_area(std::span<const Vec2> v) {
  double a = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    const Vec2& p = v[i];
    const Vec2& q = v[(i + 1) % v.size()];
    a += p.cross(q);
  }
  return 0.5 * a;
}

Vec2 polygon_centroid(std::span<const Vec2> v) {
  double a = 0.0;
  Vec2 c{0.0, 0.0};
  for (size_t i = 0; i < v.size(); ++i) {
    const Vec2& p = v[i];
    const Vec2& q = v[(i + 1) % v.size()];
    const double w = p.cross(q);
    a += w;
    c += (p + q) * w;
  }
  return c / (3.0 * a);
}

double polygon_inertia_per_density(std::span<const Vec2> v) {
  // Polar moment about the origin, then shift to the centroid.
  double j = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    const Vec2& p = v[i];
    const Vec2& q = v[(i + 1) % v.size()];
    const double w = p.cross(q);
    j += w * (p.dot(p) + p.dot(q) + q.dot(q));
  }
  j /= 12.0;
  const double area = polygon_area(v);
  const Vec2 c = polygon_centroid(v);
  return j - area * c.norm_sq();
}

bool polygon_is_convex_ccw(std::span<const Vec2> v) {
  if (v.size() < 3) return false;
  for (size_t i = 0; i < v.size(); ++i) {
    const Vec2 e1 = v[(i + 1) % v.size()] - v[i];
    const Vec2 e2 = v[(i + 2) % v.size()] - v[(i + 1) % v.size()];
    if (e1.cross(e2) <= 0.0) return false;
  }
  return true;
}

bool point_in_convex(std::span<const Vec2> v, const Vec2& p) {
  for (size_t i = 0; i < v.size(); ++i) {
    const Vec2 e = v[(i + 1) % v.size()] - v[i];
    if (e.cross(p - v[i]) < 0.0) return false;
  }
  return true;
}

double convex_inside_depth(std::span<const Vec2> v, const Vec2& p, int* edge_out) {
  double depth = std::numeric_limits<double>::infinity();
  int best = -1;
  for (size_t i = 0; i < v.size(); ++i) {
    const Vec2 e = v[(i + 1) % v.size()] - v[i];
    const Vec2 inward = e.perp().normalized();  // interior is left of a CCW edge
    const double d = (p - v[i]).dot(inward);
    if (d < depth) {
      depth = d;
      best = static_cast<int>(i);
    }
  }
  if (edge_out) *edge_out = best;
  return depth;
}

double polygon_circumradius(std::span<const Vec2> v) {
  double r = 0.0;
  for (const Vec2& p : v) r = std::max(r, p.norm());
  return r;
}

Vec2 polygon_principal_axis(std::span<const Vec2> v) {
  // Area second moments about the centroid.
  const Vec2 c = polygon_centroid(v);
  double ixx = 0.0, iyy = 0.0, ixy = 0.0;
  for (size_t i = 0; i < v.size(); ++i) {
    const Vec2 p = v[i] - c;
    const Vec2 q = v[(i + 1) % v.size()] - c;
    const double w = p.cross(q);
    ixx += w * (p.x * p.x + p.x * q.x + q.x * q.x);
    iyy += w * (p.y * p.y + p.y * q.y + q.y * q.y);
    ixy += w * (2.0 * p.x * p.y + p.x * q.y + q.x * p.y + 2.0 * q.x * q.y);
  }
  ixx /= 12.0;
  iyy /= 12.0;
  ixy /= 24.0;
  // Largest-eigenvalue eigenvector of [[ixx, ixy], [ixy, iyy]].
  const double tr = ixx + iyy;
  const double det = ixx * iyy - ixy * ixy;
  const double lambda = 0.5 * tr + std::sqrt(std::max(0.0, 0.25 * tr * tr - det));
  Vec2 axis{ixy, lambda - ixx};
  if (axis.norm() < 1e-12) axis = (ixx >= iyy) ? Vec2{1.0, 0.0} : Vec2{0.0, 1.0};
  return axis.normalized();
}

std::pair<int, int> extremal_vertices_along(std::span<const Vec2> v, const Vec2& axis) {
  int lo = 0, hi = 0;
  for (size_t i = 1; i < v.size(); ++i) {
    if (v[i].dot(axis) < v[lo].dot(axis)) lo = static_cast<int>(i);
    if (v[i].dot(axis) > v[hi].dot(axis)) hi = static_cast<int>(i);
  }
  return {lo, hi};
}

std::vector<Vec2> world_vertices(const ObjectShape& shape, const Pose2& pose) {
  std::vector<Vec2> out;
  out.reserve(shape.vertices.size());
  for (const Vec2& v : shape.vertices) out.push_back(pose.apply(v * shape.scale));
  return out;
}

void validate_shape(const ObjectShape& shape) {
  if (shape.vertices.size() < 5)
    throw std::invalid_argument("shape '" + shape.id + "': needs at least 5 vertices");
  if (!(shape.scale > 0.0))
    throw std::invalid_argument("shape '" + shape.id + "': scale must be positive");
  if (!polygon_is_convex_ccw(shape.vertices))
    throw std::invalid_argument("shape '" + shape.id + "': polygon must be convex and CCW");
  const Vec2 c = polygon_centroid(shape.vertices);
  if (c.norm() > 1e-9)
    throw std::invalid_argument("shape '" + shape.id + "': centroid must be at the origin");
}

namespace {

std::vector<Vec2> recentered(std::vector<Vec2> v) {
  const Vec2 c = polygon_centroid(v);
  for (Vec2& p : v) p -= c;
  return v;
}

// Convex outline of a bent capsule: points along the outer arc plus the two
// end caps; the inner side closes with a straight chord.
ObjectShape make_banana() {
  const double arc_radius = 0.22;
  const double half_angle = 0.50;
  const double thickness = 0.028;
  const Vec2 arc_center{0.0, -arc_radius};

  std::vector<Vec2> pts;
  auto on_arc = [&](double a, double r) {
    return arc_center + Vec2{r * std::sin(a), r * std::cos(a)};
  };
  // Left cap: inner then tip (walking CCW along the hull).
  const Vec2 left_center = on_arc(-half_angle, arc_radius);
  const Vec2 left_tangent = Vec2{std::cos(-half_angle), -std::sin(-half_angle)} * -1.0;
  pts.push_back(left_center - (left_center - arc_center).normalized() * thickness);
  pts.push_back(left_center + left_tangent * thickness);
  // Outer arc, left to right, 6 samples.
  for (int i = 0; i < 6; ++i) {
    const double a = -half_angle + (2.0 * half_angle) * (i + 0.5) / 6.0;
    pts.push_back(on_arc(a, arc_radius + thickness));
  }
  // Right cap: tip then inner.
  const Vec2 right_center = on_arc(half_angle, arc_radius);
  const Vec2 right_tangent = Vec2{std::cos(half_angle), -std::sin(half_angle)};
  pts.push_back(right_center + right_tangent * thickness);
  pts.push_back(right_center - (right_center - arc_center).normalized() * thickness);
  // The walk above is clockwise in this frame; flip to CCW.
  std::reverse(pts.begin(), pts.end());

  ObjectShape s;
  s.id = "banana";
  s.vertices = recentered(std::move(pts));
  s.scale = 0.95;
  s.elongated = true;
  return s;
}

ObjectShape make_bottle() {
  // Symmetric flask profile: flat base, wide body, tapered neck.
  std::vector<Vec2> pts = {
      {0.034, -0.100}, {0.046, -0.030}, {0.040, 0.048}, {0.016, 0.100},
      {-0.016, 0.100}, {-0.040, 0.048}, {-0.046, -0.030}, {-0.034, -0.100},
  };
  ObjectShape s;
  s.id = "bottle";
  s.vertices = recentered(std::move(pts));
  s.scale = 1.05;
  s.elongated = false;
  return s;
}

ObjectShape make_camera() {
  // Irregular convex body, no dominant symmetry.
  std::vector<Vec2> pts = {
      {0.066, -0.028}, {0.058, 0.030}, {0.018, 0.047}, {-0.042, 0.040},
      {-0.066, 0.010}, {-0.058, -0.034}, {0.004, -0.047},
  };
  ObjectShape s;
  s.id = "camera";
  s.vertices = recentered(std::move(pts));
  s.scale = 1.0;
  s.elongated = false;
  return s;
}

}  // namespace

const std::vector<ObjectShape>& shape_library() {
  static const std::vector<ObjectShape> lib = [] {
    std::vector<ObjectShape> shapes{make_banana(), make_bottle(), make_camera()};
    for (const ObjectShape& s : shapes) validate_shape(s);
    return shapes;
  }();
  return lib;
}

const ObjectShape& shape_by_id(const std::string& id) {
  for (const ObjectShape& s : shape_library())
    if (s.id == id) return s;
  throw std::invalid_argument("unknown object id '" + id + "'");
}

bool shape_known(const std::string& id) {
  for (const ObjectShape& s : shape_library())
    if (s.id == id) return true;
  return false;
}

ObjectShape shape_from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open shape file: " + path);
  nlohmann::json j;
  in >> j;
  ObjectShape s;
  s.id = j.at("id").get<std::string>();
  for (const auto& v : j.at("vertices"))
    s.vertices.push_back({v.at(0).get<double>(), v.at(1).get<double>()});
  s.scale = j.value("scale", 1.0);
  s.elongated = j.value("elongated", false);
  validate_shape(s);
  return s;
}

}  // namespace gf
