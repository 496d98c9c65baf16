#ifndef GRASPFORGE_WORLD_HPP_
#define GRASPFORGE_WORLD_HPP_

#include <span>
#include <stdexcept>
#include <vector>

#include "graspforge/geometry.hpp"
#include "graspforge/hand.hpp"
#include "graspforge/shapes.hpp"

namespace gf {

// Hand capsule pressing into the object polygon. `normal` points into the
// object (the direction the contact pushes the object); depth >= 0.
struct Contact {
  Vec2 point;
  Vec2 normal;
  double depth = 0.0;
  int body_part = 0;  // palm = 0, phalanx(f, p) = 1 + 2f + p
};

struct SimParams {
  double dt = 1.0 / 240.0;
  double contact_stiffness = 5000.0;  // k_n
  double contact_damping = 80.0;      // normal-rate damping per contact
  double friction_mu = 0.8;
  double linear_damping = 2.0;
  double angular_damping = 0.5;
  double contact_tolerance = 1e-4;  // eps_c for collide()
  double density = 30.0;            // kg per unit area (laminar object)
  double gravity_magnitude = 9.81;
  double drop_duration = 1.0;
  double drop_threshold = 0.025;  // d
  // Penetration depth beyond which the penalty force saturates; keeps the
  // integrator bounded when a driven finger is commanded deep into the object.
  double max_force_depth = 0.01;
  double friction_regularization = 1e-3;  // tangential speed scale
  double blowup_speed = 50.0;
  double blowup_omega = 500.0;
};

struct WorldState {
  JointVector joints;
  Pose2 object_pose;
  Vec2 object_velocity;
  double object_omega = 0.0;
  Vec2 gravity;  // acceleration, (0,0) during zero-gravity placement
  double time = 0.0;
};

struct SimDivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All contacts with positive penetration between the hand capsules and the
// object. Near-parallel face contacts are resolved as a two-point manifold.
std::vector<Contact> collect_contacts(const HandModel& hand, const FkResult& fk,
                                      const Pose2& object_pose, const ObjectShape& shape);

// True iff some hand capsule penetrates the polygon deeper than eps_c.
bool collide(const HandModel& hand, const JointVector& joints, const Pose2& object_pose,
             const ObjectShape& shape, double eps_c);

// One semi-implicit Euler step of the free object under gravity, penalty
// contact forces and regularized Coulomb friction; the hand is kinematic.
// Throws SimDivergenceError when the object speed exceeds the blow-up bound.
WorldState step_contacts(const WorldState& state, const HandModel& hand,
                         const ObjectShape& shape, const SimParams& params);

// Gravity direction for a tilt (radians) measured from the vertical.
Vec2 gravity_from_tilt(double tilt, double magnitude);

// Success iff the final vertical deviation does not exceed d.
int reward_from_deviation(double deviation, double d);

struct DropResult {
  int reward = -1;       // 0 on success, -1 otherwise
  double deviation = 0;  // |y_final - y_initial|
  WorldState final_state;
};

// Enables gravity at the given tilt and simulates for params.drop_duration.
DropResult drop_test(const WorldState& state, const HandModel& hand, const ObjectShape& shape,
                     double tilt, const SimParams& params);

Pose2 place_object_relative(const Pose2& hand_base, const Pose2& rel_pose);

double object_mass(const ObjectShape& shape, const SimParams& params);
double object_inertia(const ObjectShape& shape, const SimParams& params);

}  // namespace gf

#endif  // GRASPFORGE_WORLD_HPP_
