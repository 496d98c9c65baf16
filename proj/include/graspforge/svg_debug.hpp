#ifndef GRASPFORGE_SVG_DEBUG_HPP_
#define GRASPFORGE_SVG_DEBUG_HPP_

#include <string>

#include "graspforge/world.hpp"

namespace gf {

// Non-contractual debug rendering of a scene (hand capsules, object polygon,
// contact points) for eyeballing fixtures.
void dump_scene_svg(const std::string& path, const HandModel& hand, const WorldState& state,
                    const ObjectShape& shape);

}  // namespace gf

#endif  // GRASPFORGE_SVG_DEBUG_HPP_
