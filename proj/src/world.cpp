#include "graspforge/world.hpp"

#include <algorithm>
#include <cmath>

namespace gf {

namespace {

// Contacts between one capsule (segment + radius) and the polygon.
void capsule_polygon_contacts(const Segment& seg, double radius, std::span<const Vec2> poly,
                              int body_part, std::vector<Contact>* out) {
  // Deep case: a capsule sample point is inside the polygon.
  const Vec2 samples[3] = {seg.a, seg.b, seg.midpoint()};
  double deepest = 0.0;
  Vec2 deepest_point;
  int deepest_edge = -1;
  for (const Vec2& p : samples) {
    int edge = -1;
    const double d = convex_inside_depth(poly, p, &edge);
    if (d > deepest) {
      deepest = d;
      deepest_point = p;
      deepest_edge = edge;
    }
  }
  if (deepest_edge >= 0) {
    const Vec2 e = poly[(deepest_edge + 1) % poly.size()] - poly[deepest_edge];
    Contact c;
    c.point = deepest_point;
    c.normal = e.perp().normalized();  // inward: pushes the object off the hand
    c.depth = radius + deepest;
    c.body_part = body_part;
    out->push_back(c);
    return;
  }

  // Shallow case: closest approach between the segment and the boundary.
  ClosestPair best;
  best.distance = std::numeric_limits<double>::infinity();
  int best_edge = -1;
  for (size_t i = 0; i < poly.size(); ++i) {
    const Segment edge{poly[i], poly[(i + 1) % poly.size()]};
    const ClosestPair cp = segment_segment_closest(seg, edge);
    if (cp.distance < best.distance) {
      best = cp;
      best_edge = static_cast<int>(i);
    }
  }
  if (best_edge < 0 || best.distance >= radius) return;

  const Segment edge{poly[best_edge], poly[(best_edge + 1) % poly.size()]};
  const Vec2 edge_dir = (edge.b - edge.a).normalized();
  const Vec2 seg_dir = (seg.b - seg.a).normalized();
  const Vec2 outward = -edge_dir.perp();  // CCW polygon: outward is right of the edge

  // Face-face contact: clip to the overlap interval and emit both ends so a
  // resting object does not rock around a single point.
  if (std::abs(edge_dir.cross(seg_dir)) < 0.05 && best.distance > 1e-12) {
    const double s_lo = std::min(seg.a.dot(edge_dir), seg.b.dot(edge_dir));
    const double s_hi = std::max(seg.a.dot(edge_dir), seg.b.dot(edge_dir));
    const double e_lo = std::min(edge.a.dot(edge_dir), edge.b.dot(edge_dir));
    const double e_hi = std::max(edge.a.dot(edge_dir), edge.b.dot(edge_dir));
    const double lo = std::max(s_lo, e_lo);
    const double hi = std::min(s_hi, e_hi);
    if (hi - lo > 1e-9) {
      const Vec2 sa = seg.a, sab = seg.b - seg.a;
      const double sab_u = sab.dot(edge_dir);
      bool emitted = false;
      for (double u : {lo, hi}) {
        // Point on the capsule segment with coordinate u along the edge axis.
        const double t = std::abs(sab_u) > 1e-12 ? (u - sa.dot(edge_dir)) / sab_u : 0.0;
        const Vec2 ps = sa + sab * std::clamp(t, 0.0, 1.0);
        const double gap = (ps - edge.a).dot(outward);
        const double depth = radius - gap;
        if (depth <= 0.0) continue;
        Contact c;
        c.point = ps - outward * gap;
        c.normal = -outward;
        c.depth = depth;
        c.body_part = body_part;
        out->push_back(c);
        emitted = true;
      }
      if (emitted) return;
    }
  }

  Contact c;
  c.point = best.on_second;
  c.normal = best.distance > 1e-12 ? (best.on_second - best.on_first) / best.distance
                                   : Vec2(-outward.x, -outward.y);
  c.depth = radius - best.distance;
  c.body_part = body_part;
  out->push_back(c);
}

}  // namespace

std::vector<Contact> collect_contacts(const HandModel& hand, const FkResult& fk,
                                      const Pose2& object_pose, const ObjectShape& shape) {
  const std::vector<Vec2> poly = world_vertices(shape, object_pose);
  std::vector<Contact> contacts;
  const std::vector<Segment> capsules = hand_capsules(fk);
  for (size_t i = 0; i < capsules.size(); ++i)
    capsule_polygon_contacts(capsules[i], hand.phalanx_radius, poly, static_cast<int>(i),
                             &contacts);
  return contacts;
}

bool collide(const HandModel& hand, const JointVector& joints, const Pose2& object_pose,
             const ObjectShape& shape, double eps_c) {
  const FkResult fk = forward_kinematics(hand, joints);
  for (const Contact& c : collect_contacts(hand, fk, object_pose, shape))
    if (c.depth > eps_c) return true;
  return false;
}

double object_mass(const ObjectShape& shape, const SimParams& params) {
  const std::vector<Vec2> v = shape.scaled_vertices();
  return params.density * polygon_area(v);
}

double object_inertia(const ObjectShape& shape, const SimParams& params) {
  const std::vector<Vec2> v = shape.scaled_vertices();
  return params.density * polygon_inertia_per_density(v);
}

WorldState step_contacts(const WorldState& state, const HandModel& hand,
                         const ObjectShape& shape, const SimParams& params) {
  const double m = object_mass(shape, params);
  const double inertia = object_inertia(shape, params);
  const FkResult fk = forward_kinematics(hand, state.joints);

  Vec2 force = state.gravity * m;
  double torque = 0.0;
  const Vec2 center = state.object_pose.translation();

  for (const Contact& c : collect_contacts(hand, fk, state.object_pose, shape)) {
    const Vec2 r = c.point - center;
    const Vec2 v_point = state.object_velocity + r.perp() * state.object_omega;
    const double fn_spring = params.contact_stiffness * std::min(c.depth, params.max_force_depth);
    const double fn_damp = -params.contact_damping * v_point.dot(c.normal);
    const double fn = std::max(0.0, fn_spring + fn_damp);
    const Vec2 f_normal = c.normal * fn;

    const Vec2 v_tangent = v_point - c.normal * v_point.dot(c.normal);
    const double vt = v_tangent.norm();
    const Vec2 f_friction =
        vt > 0.0 ? v_tangent * (-params.friction_mu * fn / (vt + params.friction_regularization))
                 : Vec2{0.0, 0.0};

    force += f_normal + f_friction;
    torque += r.cross(f_normal + f_friction);
  }

  WorldState next = state;
  const double dt = params.dt;
  next.object_velocity = (state.object_velocity + force * (dt / m)) / (1.0 + params.linear_damping * dt);
  next.object_omega = (state.object_omega + torque * (dt / inertia)) / (1.0 + params.angular_damping * dt);
  next.object_pose = Pose2{state.object_pose.x + next.object_velocity.x * dt,
                           state.object_pose.y + next.object_velocity.y * dt,
                           state.object_pose.theta + next.object_omega * dt};
  next.time = state.time + dt;

  if (next.object_velocity.norm() > params.blowup_speed ||
      std::abs(next.object_omega) > params.blowup_omega)
    throw SimDivergenceError("object velocity exceeded the blow-up bound; check stiffness/dt");
  return next;
}

Vec2 gravity_from_tilt(double tilt, double magnitude) {
  return {magnitude * std::sin(tilt), -magnitude * std::cos(tilt)};
}

int reward_from_deviation(double deviation, double d) { return deviation > d ? -1 : 0; }

DropResult drop_test(const WorldState& state, const HandModel& hand, const ObjectShape& shape,
                     double tilt, const SimParams& params) {
  WorldState s = state;
  s.gravity = gravity_from_tilt(tilt, params.gravity_magnitude);
  const double y0 = s.object_pose.y;
  const int steps = static_cast<int>(std::lround(params.drop_duration / params.dt));
  for (int i = 0; i < steps; ++i) s = step_contacts(s, hand, shape, params);
  DropResult result;
  result.deviation = std::abs(s.object_pose.y - y0);
  result.reward = reward_from_deviation(result.deviation, params.drop_threshold);
  result.final_state = s;
  return result;
}

Pose2 place_object_relative(const Pose2& hand_base, const Pose2& rel_pose) {
  return hand_base.compose(rel_pose);
}

}  // namespace gf
