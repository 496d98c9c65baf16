#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "graspforge/force_closure.hpp"
#include "graspforge/hand.hpp"
#include "graspforge/rng.hpp"
#include "graspforge/shapes.hpp"
#include "graspforge/world.hpp"

using namespace gf;

namespace {

// Phase-1 simplex feasibility oracle for {A s = b, s >= 0}. Returns true iff
// the system is feasible. Small and dense; fine for a handful of columns.
bool lp_feasible(std::vector<std::vector<double>> a, std::vector<double> b) {
  const size_t rows = b.size();
  const size_t cols = a.empty() ? 0 : a[0].size();
  for (size_t i = 0; i < rows; ++i)
    if (b[i] < 0) {
      b[i] = -b[i];
      for (size_t j = 0; j < cols; ++j) a[i][j] = -a[i][j];
    }
  // Tableau with artificial variables; minimize their sum.
  const size_t total = cols + rows;
  std::vector<std::vector<double>> t(rows + 1, std::vector<double>(total + 1, 0.0));
  std::vector<size_t> basis(rows);
  for (size_t i = 0; i < rows; ++i) {
    for (size_t j = 0; j < cols; ++j) t[i][j] = a[i][j];
    t[i][cols + i] = 1.0;
    t[i][total] = b[i];
    basis[i] = cols + i;
  }
  for (size_t j = 0; j < total; ++j) {
    double c = j >= cols ? 1.0 : 0.0;
    for (size_t i = 0; i < rows; ++i) c -= (basis[i] >= cols ? 1.0 : 0.0) * t[i][j];
    t[rows][j] = c;
  }
  double obj = 0.0;
  for (size_t i = 0; i < rows; ++i) obj -= b[i];
  t[rows][total] = obj;

  for (int iter = 0; iter < 10000; ++iter) {
    size_t pivot_col = total;
    for (size_t j = 0; j < total; ++j)  // Bland's rule
      if (t[rows][j] < -1e-10) {
        pivot_col = j;
        break;
      }
    if (pivot_col == total) break;
    size_t pivot_row = rows;
    double best = 0.0;
    for (size_t i = 0; i < rows; ++i)
      if (t[i][pivot_col] > 1e-12) {
        const double ratio = t[i][total] / t[i][pivot_col];
        if (pivot_row == rows || ratio < best - 1e-15 ||
            (std::abs(ratio - best) <= 1e-15 && basis[i] < basis[pivot_row])) {
          pivot_row = i;
          best = ratio;
        }
      }
    if (pivot_row == rows) break;  // unbounded column; skip
    const double pv = t[pivot_row][pivot_col];
    for (size_t j = 0; j <= total; ++j) t[pivot_row][j] /= pv;
    for (size_t i = 0; i <= rows; ++i) {
      if (i == pivot_row) continue;
      const double f = t[i][pivot_col];
      if (f == 0.0) continue;
      for (size_t j = 0; j <= total; ++j) t[i][j] -= f * t[pivot_row][j];
    }
    basis[pivot_row] = pivot_col;
  }
  return std::abs(t[rows][total]) < 1e-8;
}

// Independent definition of force closure: exists lambda >= 1 with
// sum(lambda_j w_j) = 0, i.e. the origin is a strictly positive combination
// of all primitive wrenches.
bool closure_oracle(const std::vector<Wrench>& ws) {
  if (ws.size() < 3) {
    // One contact (two wrenches) can only close if they are exactly
    // antipodal; delegate to the LP anyway.
  }
  const size_t m = ws.size();
  std::vector<std::vector<double>> a(3, std::vector<double>(m));
  std::vector<double> b(3, 0.0);
  for (size_t j = 0; j < m; ++j)
    for (int k = 0; k < 3; ++k) {
      a[k][j] = ws[j][k];
      b[k] -= ws[j][k];  // lambda = 1 + s
    }
  return lp_feasible(a, b);
}

SimParams test_params() { return SimParams{}; }

// Closes the given fingers toward the object until contact, then squeezes.
JointVector close_fingers_on(const HandModel& hand, const ObjectShape& shape, const Pose2& obj,
                             JointVector q, const std::vector<int>& fingers, double squeeze) {
  for (int f : fingers) {
    const int jp = kArmJoints + 2 * f;
    const int jd = jp + 1;
    bool touched = false;
    for (int iter = 0; iter < 2000 && !touched; ++iter) {
      q[jp] = std::min(q[jp] + 0.005, hand.joint_limits[jp][1]);
      q[jd] = std::min(q[jd] + 0.0035, hand.joint_limits[jd][1]);
      const FkResult fk = forward_kinematics(hand, q);
      for (const Contact& c : collect_contacts(hand, fk, obj, shape))
        if (c.body_part == 1 + 2 * f || c.body_part == 2 + 2 * f) touched = true;
      if (q[jp] >= hand.joint_limits[jp][1] - 1e-9) break;
    }
    q[jp] = std::min(q[jp] + squeeze, hand.joint_limits[jp][1]);
    q[jd] = std::min(q[jd] + squeeze, hand.joint_limits[jd][1]);
  }
  return q;
}

JointVector open_hand_pose() {
  JointVector q{};
  for (int f = 0; f < kFingers; ++f) {
    q[kArmJoints + 2 * f] = -0.55;
    q[kArmJoints + 2 * f + 1] = -0.1;
  }
  return q;
}

WorldState grasp_fixture(const ObjectShape& shape, const Pose2& rel,
                         const std::vector<int>& fingers, double squeeze) {
  const HandModel& hand = HandModel::standard();
  WorldState w;
  w.joints = open_hand_pose();
  const Pose2 base = hand_base_pose(hand, w.joints);
  w.object_pose = place_object_relative(base, rel);
  w.joints = close_fingers_on(hand, shape, w.object_pose, w.joints, fingers, squeeze);
  return w;
}

}  // namespace

TEST_CASE("ballistic step without damping") {
  const HandModel& hand = HandModel::standard();
  const ObjectShape& shape = shape_by_id("bottle");
  SimParams p = test_params();
  p.linear_damping = 0.0;
  p.angular_damping = 0.0;

  WorldState w;
  w.joints = open_hand_pose();
  w.object_pose = {0.0, -5.0, 0.0};  // far from the hand
  w.gravity = {0.0, -9.81};
  const WorldState next = step_contacts(w, hand, shape, p);
  CHECK(next.object_velocity.y == doctest::Approx(-9.81 * p.dt).epsilon(1e-12));
  CHECK(next.object_velocity.x == doctest::Approx(0.0));
  CHECK(next.object_pose.y == doctest::Approx(-5.0 + next.object_velocity.y * p.dt));
}

TEST_CASE("unsupported object fails the drop test") {
  const HandModel& hand = HandModel::standard();
  const ObjectShape& shape = shape_by_id("camera");
  WorldState w;
  w.joints = open_hand_pose();
  w.object_pose = {0.0, -5.0, 0.0};
  const DropResult r = drop_test(w, hand, shape, 0.0, test_params());
  CHECK(r.reward == -1);
  CHECK(r.deviation > 1.0);
}

TEST_CASE("reward boundary: deviation == d is success") {
  CHECK(reward_from_deviation(0.025, 0.025) == 0);
  CHECK(reward_from_deviation(std::nextafter(0.025, 1.0), 0.025) == -1);
  CHECK(reward_from_deviation(0.0, 0.025) == 0);
}

TEST_CASE("object rests on an upturned palm") {
  const HandModel& hand = HandModel::standard();
  const ObjectShape& shape = shape_by_id("camera");
  JointVector q{};
  q[0] = M_PI;  // palm at (-3, 0), normal up
  for (int f = 0; f < kFingers; ++f) {
    q[kArmJoints + 2 * f] = -0.9;
    q[kArmJoints + 2 * f + 1] = -0.3;
  }
  double bottom = 1e9;
  for (const Vec2& v : shape.scaled_vertices()) bottom = std::min(bottom, v.y);
  WorldState w;
  w.joints = q;
  // Rest the flat-ish face just on the palm capsule surface.
  w.object_pose = {-3.0, hand.phalanx_radius - bottom - 1e-4, 0.0};
  w.gravity = {0.0, -9.81};

  const FkResult fk = forward_kinematics(hand, w.joints);
  for (const Contact& c : collect_contacts(hand, fk, w.object_pose, shape))
    CHECK(c.body_part == kPalmBodyPart);

  const double y0 = w.object_pose.y;
  SimParams p = test_params();
  WorldState s = w;
  for (int i = 0; i < 240; ++i) s = step_contacts(s, hand, shape, p);
  CHECK(std::abs(s.object_pose.y - y0) < 0.005);
  CHECK(std::abs(s.object_pose.x - w.object_pose.x) < 0.005);
}

TEST_CASE("zero gravity, zero velocity, no contact: state is stationary") {
  const HandModel& hand = HandModel::standard();
  const ObjectShape& shape = shape_by_id("bottle");
  WorldState w;
  w.joints = open_hand_pose();
  w.object_pose = {1.0, -2.0, 0.7};
  WorldState s = w;
  for (int i = 0; i < 100; ++i) s = step_contacts(s, hand, shape, test_params());
  CHECK(s.object_pose.x == w.object_pose.x);
  CHECK(s.object_pose.y == w.object_pose.y);
  CHECK(s.object_velocity.norm() == 0.0);
  CHECK(s.object_omega == 0.0);
}

TEST_CASE("kinetic energy decays in a zero-gravity contact scene") {
  const HandModel& hand = HandModel::standard();
  const ObjectShape& shape = shape_by_id("camera");
  const SimParams p = test_params();
  WorldState w = grasp_fixture(shape, {0.15, 0.0, 0.2}, {0, 1, 2}, 0.06);
  // No gravity: the squeeze transient must damp out, not grow.
  const double m = object_mass(shape, p);
  const double inertia = object_inertia(shape, p);
  double peak = 0.0;
  WorldState s = w;
  for (int i = 0; i < 480; ++i) {
    s = step_contacts(s, hand, shape, p);
    const double ke =
        0.5 * m * s.object_velocity.norm_sq() + 0.5 * inertia * s.object_omega * s.object_omega;
    peak = std::max(peak, ke);
  }
  const double ke_final =
      0.5 * m * s.object_velocity.norm_sq() + 0.5 * inertia * s.object_omega * s.object_omega;
  CHECK(ke_final <= peak);
  CHECK(ke_final < 1e-8);
}

TEST_CASE("mirrored scenes produce mirrored trajectories") {
  const HandModel& hand = HandModel::standard();
  const ObjectShape& shape = shape_by_id("bottle");  // x-symmetric vertex set
  const SimParams p = test_params();

  JointVector qa{};
  qa[0] = -M_PI / 4;
  qa[1] = 0.3;
  qa[2] = -0.2;
  qa[kArmJoints + 0] = 0.45;
  qa[kArmJoints + 1] = 0.25;
  // middle finger must stay at zero for an exactly mirrorable hand
  qa[kArmJoints + 4] = 0.5;
  qa[kArmJoints + 5] = 0.2;

  JointVector qb{};
  qb[0] = normalize_angle(M_PI - qa[0]);
  qb[1] = -qa[1];
  qb[2] = -qa[2];
  qb[kArmJoints + 0] = qa[kArmJoints + 4];
  qb[kArmJoints + 1] = qa[kArmJoints + 5];
  qb[kArmJoints + 4] = qa[kArmJoints + 0];
  qb[kArmJoints + 5] = qa[kArmJoints + 1];

  WorldState a;
  a.joints = qa;
  const Pose2 base_a = hand_base_pose(hand, qa);
  a.object_pose = place_object_relative(base_a, {0.16, 0.01, 0.15});
  a.gravity = gravity_from_tilt(0.3, 9.81);

  WorldState b;
  b.joints = qb;
  b.object_pose = {-a.object_pose.x, a.object_pose.y, normalize_angle(-a.object_pose.theta)};
  b.gravity = {-a.gravity.x, a.gravity.y};

  for (int i = 0; i < 240; ++i) {
    a = step_contacts(a, hand, shape, p);
    b = step_contacts(b, hand, shape, p);
  }
  // Trig of mirrored angles is not bitwise symmetric, so allow rounding
  // accumulation on the order of 1e-9 over a simulated second.
  CHECK(std::abs(a.object_pose.x + b.object_pose.x) < 1e-9);
  CHECK(std::abs(a.object_pose.y - b.object_pose.y) < 1e-9);
  CHECK(std::abs(normalize_angle(a.object_pose.theta + b.object_pose.theta)) < 1e-9);
  CHECK(std::abs(a.object_velocity.x + b.object_velocity.x) < 1e-9);
  CHECK(std::abs(a.object_omega + b.object_omega) < 1e-9);
}

TEST_CASE("drop test is deterministic") {
  const ObjectShape& shape = shape_by_id("bottle");
  const HandModel& hand = HandModel::standard();
  const WorldState w = grasp_fixture(shape, {0.16, 0.0, 0.0}, {0, 1, 2}, 0.06);
  const DropResult r1 = drop_test(w, hand, shape, 0.2, test_params());
  const DropResult r2 = drop_test(w, hand, shape, 0.2, test_params());
  CHECK(r1.reward == r2.reward);
  CHECK(r1.deviation == r2.deviation);
  CHECK(r1.final_state.object_pose.x == r2.final_state.object_pose.x);
  CHECK(r1.final_state.object_pose.y == r2.final_state.object_pose.y);
  CHECK(r1.final_state.object_pose.theta == r2.final_state.object_pose.theta);
}

TEST_CASE("collide: trivial separation and containment") {
  const HandModel& hand = HandModel::standard();
  const ObjectShape& shape = shape_by_id("banana");
  const JointVector q = open_hand_pose();
  const SimParams p = test_params();

  CHECK_FALSE(collide(hand, q, {10.0, 10.0, 0.0}, shape, p.contact_tolerance));

  const FkResult fk = forward_kinematics(hand, q);
  const Pose2 on_palm{fk.palm_center.x, fk.palm_center.y, 0.0};
  CHECK(collide(hand, q, on_palm, shape, p.contact_tolerance));
}

TEST_CASE("collide: tangency at radius + eps_c is not a collision") {
  const HandModel& hand = HandModel::standard();
  const ObjectShape& shape = shape_by_id("bottle");
  const SimParams p = test_params();
  JointVector q = open_hand_pose();

  double top = -1e9;
  for (const Vec2& v : shape.scaled_vertices()) top = std::max(top, v.y);
  // Palm segment lies on y = 0 through (3, 0) at the identity arm pose.
  const double gap = hand.phalanx_radius + p.contact_tolerance;
  CHECK_FALSE(collide(hand, q, {3.0, -top - gap, 0.0}, shape, p.contact_tolerance));
  CHECK(collide(hand, q, {3.0, -top - hand.phalanx_radius + 3 * p.contact_tolerance, 0.0}, shape,
                p.contact_tolerance));
}

TEST_CASE("force closure: single contact never closes") {
  std::vector<Contact> cs(1);
  cs[0] = {{1.0, 0.0}, {-1.0, 0.0}, 0.001, 1};
  CHECK_FALSE(check_force_closure(cs, {0, 0}, 0.8));
}

TEST_CASE("force closure: antipodal pinch on a disk with friction") {
  std::vector<Contact> cs(2);
  cs[0] = {{-1.0, 0.0}, {1.0, 0.0}, 0.001, 1};
  cs[1] = {{1.0, 0.0}, {-1.0, 0.0}, 0.001, 2};
  CHECK(check_force_closure(cs, {0, 0}, 0.3));
  CHECK(closure_oracle(contact_wrenches(cs, {0, 0}, 0.3)));
}

TEST_CASE("force closure: frictionless tripod at 120 degrees") {
  std::vector<Contact> cs(3);
  for (int k = 0; k < 3; ++k) {
    const double a = 2.0 * M_PI * k / 3.0;
    const Vec2 p{std::cos(a), std::sin(a)};
    cs[k] = {p, -p, 0.001, k};
  }
  CHECK(check_force_closure(cs, {0, 0}, 0.0));
  CHECK(closure_oracle(contact_wrenches(cs, {0, 0}, 0.0)));
}

TEST_CASE("force closure matches the LP-feasibility oracle on random scenes") {
  Rng rng(424242);
  int positives = 0, negatives = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + static_cast<int>(rng.uniform_index(4));
    std::vector<Contact> cs;
    const bool on_disk = rng.uniform() < 0.5;
    for (int i = 0; i < n; ++i) {
      Contact c;
      if (on_disk) {
        const double a = rng.uniform(0, 2 * M_PI);
        c.point = {std::cos(a), std::sin(a)};
        c.normal = -c.point;
      } else {
        c.point = {rng.uniform(-1, 1), rng.uniform(-1, 1)};
        const double a = rng.uniform(0, 2 * M_PI);
        c.normal = {std::cos(a), std::sin(a)};
      }
      c.depth = 0.001;
      c.body_part = i;
      cs.push_back(c);
    }
    const double mu = std::vector<double>{0.0, 0.3, 0.8}[rng.uniform_index(3)];
    const bool ours = check_force_closure(cs, {0, 0}, mu);
    const bool lp = n < 2 ? false : closure_oracle(contact_wrenches(cs, {0, 0}, mu));
    // A single contact is defined as non-closing regardless of the LP.
    if (n == 1) {
      CHECK_FALSE(ours);
      continue;
    }
    CHECK(ours == lp);
    (ours ? positives : negatives)++;
  }
  CHECK(positives > 20);  // the comparison exercised both outcomes
  CHECK(negatives > 20);
}

TEST_CASE("curated fixtures: closure implies drop-test success") {
  const HandModel& hand = HandModel::standard();
  const SimParams p = test_params();

  SUBCASE("antipodal pinch holds at every tilt") {
    const ObjectShape& shape = shape_by_id("bottle");
    const WorldState w = grasp_fixture(shape, {0.16, 0.0, 0.0}, {0, 2}, 0.08);
    const FkResult fk = forward_kinematics(hand, w.joints);
    const auto contacts = collect_contacts(hand, fk, w.object_pose, shape);
    REQUIRE(contacts.size() >= 2);
    CHECK(check_force_closure(contacts, w.object_pose.translation(), p.friction_mu));
    for (double tilt_deg : {-25.0, 0.0, 25.0}) {
      const DropResult r = drop_test(w, hand, shape, tilt_deg * M_PI / 180.0, p);
      CAPTURE(tilt_deg);
      CHECK(r.reward == 0);
    }
  }

  SUBCASE("frictional tripod holds at every tilt") {
    const ObjectShape& shape = shape_by_id("camera");
    const WorldState w = grasp_fixture(shape, {0.15, 0.0, 0.3}, {0, 1, 2}, 0.06);
    const FkResult fk = forward_kinematics(hand, w.joints);
    const auto contacts = collect_contacts(hand, fk, w.object_pose, shape);
    REQUIRE(contacts.size() >= 2);
    CHECK(check_force_closure(contacts, w.object_pose.translation(), p.friction_mu));
    for (double tilt_deg : {-25.0, 0.0, 25.0}) {
      const DropResult r = drop_test(w, hand, shape, tilt_deg * M_PI / 180.0, p);
      CAPTURE(tilt_deg);
      CHECK(r.reward == 0);
    }
  }

  SUBCASE("single touching contact cannot hold") {
    const ObjectShape& shape = shape_by_id("camera");
    WorldState w;
    w.joints = open_hand_pose();
    w.joints[kArmJoints + 2] = 0.0;  // middle finger straight down
    w.joints[kArmJoints + 3] = 0.0;
    const FkResult fk = forward_kinematics(hand, w.joints);
    double right = -1e9;
    for (const Vec2& v : shape.scaled_vertices()) right = std::max(right, v.x);
    const Vec2 tip = fk.fingertips[1];
    w.object_pose = {tip.x + right + hand.phalanx_radius - 0.002, tip.y + 0.01, 0.0};
    const auto contacts = collect_contacts(hand, fk, w.object_pose, shape);
    REQUIRE(contacts.size() == 1);
    CHECK_FALSE(check_force_closure(contacts, w.object_pose.translation(), p.friction_mu));
    const DropResult r = drop_test(w, hand, shape, 0.0, p);
    CHECK(r.reward == -1);
  }
}
