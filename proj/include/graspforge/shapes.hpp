#ifndef GRASPFORGE_SHAPES_HPP_
#define GRASPFORGE_SHAPES_HPP_

#include <span>
#include <string>
#include <vector>

#include "graspforge/geometry.hpp"

namespace gf {

// Convex polygon object. Vertices are counter-clockwise in the object frame
// with the area centroid at the origin; `scale` is applied on top of the
// stored vertices when the object is placed in a world.
struct ObjectShape {
  std::string id;
  std::vector<Vec2> vertices;
  double scale = 1.0;
  bool elongated = false;

  std::vector<Vec2> scaled_vertices() const;
};

// ---- polygon measures (CCW convex polygons) ----

double polygon_area(std::span<const Vec2> v);
Vec2 polygon_centroid(std::span<const Vec2> v);
// Second polar moment of area about the centroid (multiply by density to get
// the moment of inertia of a laminar body).
double polygon_inertia_per_density(std::span<const Vec2> v);
bool polygon_is_convex_ccw(std::span<const Vec2> v);
bool point_in_convex(std::span<const Vec2> v, const Vec2& p);
// Depth of p inside the polygon (min distance to an edge line); negative or
// zero when p is outside. `edge_out` receives the index of the nearest edge.
double convex_inside_depth(std::span<const Vec2> v, const Vec2& p, int* edge_out = nullptr);
double polygon_circumradius(std::span<const Vec2> v);
// Unit direction of the largest-eigenvalue axis of the area covariance.
Vec2 polygon_principal_axis(std::span<const Vec2> v);
// Indices of the two vertices with extreme projections onto `axis`
// (min first, max second).
std::pair<int, int> extremal_vertices_along(std::span<const Vec2> v, const Vec2& axis);

// Object-frame polygon placed in the world.
std::vector<Vec2> world_vertices(const ObjectShape& shape, const Pose2& pose);

// Throws std::invalid_argument when the polygon violates the shape contract
// (convexity, winding, vertex count, centroid at origin).
void validate_shape(const ObjectShape& shape);

// ---- built-in shape library: banana, bottle, camera ----

const std::vector<ObjectShape>& shape_library();
const ObjectShape& shape_by_id(const std::string& id);
bool shape_known(const std::string& id);

// Optional override, JSON: {"id", "vertices": [[x,y],...], "scale", "elongated"}.
ObjectShape shape_from_json_file(const std::string& path);

}  // namespace gf

#endif  // GRASPFORGE_SHAPES_HPP_
