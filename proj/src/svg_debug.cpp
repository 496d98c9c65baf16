#include "graspforge/svg_debug.hpp"

#include <algorithm>
#include <fstream>

namespace gf {

void dump_scene_svg(const std::string& path, const HandModel& hand, const WorldState& state,
                    const ObjectShape& shape) {
  const FkResult fk = forward_kinematics(hand, state.joints);
  const auto poly = world_vertices(shape, state.object_pose);
  const auto contacts = collect_contacts(hand, fk, state.object_pose, shape);

  double min_x = 1e9, max_x = -1e9, min_y = 1e9, max_y = -1e9;
  auto grow = [&](const Vec2& p) {
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  };
  for (const Segment& s : hand_capsules(fk)) {
    grow(s.a);
    grow(s.b);
  }
  for (const Vec2& p : poly) grow(p);
  const double pad = 0.1;
  min_x -= pad;
  min_y -= pad;
  max_x += pad;
  max_y += pad;
  const double sc = 600.0 / std::max(max_x - min_x, max_y - min_y);
  auto X = [&](double x) { return (x - min_x) * sc; };
  auto Y = [&](double y) { return (max_y - y) * sc; };  // flip y for screen coords

  std::ofstream out(path);
  out << "<svg xmlns='http://www.w3.org/2000/svg' width='" << (max_x - min_x) * sc << "' height='"
      << (max_y - min_y) * sc << "'>\n";
  out << "<polygon points='";
  for (const Vec2& p : poly) out << X(p.x) << "," << Y(p.y) << " ";
  out << "' fill='#ffd27f' stroke='#b07000'/>\n";
  for (const Segment& s : hand_capsules(fk))
    out << "<line x1='" << X(s.a.x) << "' y1='" << Y(s.a.y) << "' x2='" << X(s.b.x) << "' y2='"
        << Y(s.b.y) << "' stroke='#3060c0' stroke-width='" << 2 * hand.phalanx_radius * sc
        << "' stroke-linecap='round' opacity='0.7'/>\n";
  for (const Contact& c : contacts) {
    out << "<circle cx='" << X(c.point.x) << "' cy='" << Y(c.point.y)
        << "' r='4' fill='#d02020'/>\n";
    out << "<line x1='" << X(c.point.x) << "' y1='" << Y(c.point.y) << "' x2='"
        << X(c.point.x + 0.05 * c.normal.x) << "' y2='" << Y(c.point.y + 0.05 * c.normal.y)
        << "' stroke='#d02020'/>\n";
  }
  out << "</svg>\n";
}

}  // namespace gf
