#ifndef GRASPFORGE_FORCE_CLOSURE_HPP_
#define GRASPFORGE_FORCE_CLOSURE_HPP_

#include <array>
#include <span>
#include <vector>

#include "graspforge/world.hpp"

namespace gf {

// Planar contact wrench (fx, fy, torque about the object centroid).
using Wrench = std::array<double, 3>;

// Two friction-cone edge wrenches per contact, unit force magnitude.
std::vector<Wrench> contact_wrenches(std::span<const Contact> contacts, const Vec2& centroid,
                                     double mu);

// True iff the origin lies strictly inside the convex hull of the primitive
// contact wrenches, taken within the subspace the wrenches span. A single
// contact can never close.
bool check_force_closure(std::span<const Contact> contacts, const Vec2& centroid, double mu);

}  // namespace gf

#endif  // GRASPFORGE_FORCE_CLOSURE_HPP_
