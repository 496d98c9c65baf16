#include "graspforge/hand.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace gf {

const HandModel& HandModel::standard() {
  static const HandModel hand = [] {
    HandModel h;
    for (int j = 0; j < kArmJoints; ++j) h.joint_limits[j] = {-M_PI, M_PI};
    for (int j = kArmJoints; j < kTotalJoints; ++j) h.joint_limits[j] = {-0.9, 1.85};
    h.validate();
    return h;
  }();
  return hand;
}

void HandModel::validate() const {
  for (double l : arm_link_lengths)
    if (!(l > 0.0)) throw std::invalid_argument("hand: arm link lengths must be positive");
  if (!(palm_half_width > 0.0))
    throw std::invalid_argument("hand: palm_half_width must be positive");
  for (const auto& f : phalanx_lengths)
    for (double l : f)
      if (!(l > 0.0)) throw std::invalid_argument("hand: phalanx lengths must be positive");
  if (!(phalanx_radius > 0.0))
    throw std::invalid_argument("hand: phalanx_radius must be positive");
  for (const auto& lim : joint_limits)
    if (!(lim[0] < lim[1])) throw std::invalid_argument("hand: joint limit lo must be < hi");
}

std::array<double, kHandJoints> JointVector::hand_part() const {
  std::array<double, kHandJoints> h{};
  for (int i = 0; i < kHandJoints; ++i) h[i] = angles[kArmJoints + i];
  return h;
}

void JointVector::set_hand_part(const std::array<double, kHandJoints>& h) {
  for (int i = 0; i < kHandJoints; ++i) angles[kArmJoints + i] = h[i];
}

bool JointVector::within_limits(const HandModel& hand, double tol) const {
  for (int i = 0; i < kTotalJoints; ++i)
    if (angles[i] < hand.joint_limits[i][0] - tol || angles[i] > hand.joint_limits[i][1] + tol)
      return false;
  return true;
}

JointVector JointVector::clamped(const HandModel& hand) const {
  JointVector out = *this;
  for (int i = 0; i < kTotalJoints; ++i)
    out.angles[i] = std::clamp(angles[i], hand.joint_limits[i][0], hand.joint_limits[i][1]);
  return out;
}

FkResult forward_kinematics(const HandModel& hand, const JointVector& joints) {
  FkResult fk;
  Vec2 origin{0.0, 0.0};
  double angle = 0.0;
  for (int i = 0; i < kArmJoints; ++i) {
    angle += joints[i];
    fk.arm_frames[i] = Pose2{origin.x, origin.y, angle};
    origin += Vec2{hand.arm_link_lengths[i], 0.0}.rotated(angle);
  }

  fk.palm_center = origin;
  fk.palm_tangent = Vec2{1.0, 0.0}.rotated(angle);
  fk.palm_normal = Vec2{0.0, -1.0}.rotated(angle);
  fk.hand_base = Pose2{origin.x, origin.y, angle - M_PI / 2.0};
  fk.palm_segment = {origin - fk.palm_tangent * hand.palm_half_width,
                     origin + fk.palm_tangent * hand.palm_half_width};

  for (int f = 0; f < kFingers; ++f) {
    const Vec2 attach = origin + fk.palm_tangent * hand.finger_attach_offsets[f];
    fk.finger_attach[f] = attach;
    const double s = HandModel::curl_sign(f);
    const double q1 = joints[kArmJoints + 2 * f];
    const double q2 = joints[kArmJoints + 2 * f + 1];
    // Phalanx directions measured from the palm normal; positive closure
    // angles swing the finger in the curl direction.
    const double a1 = (angle - M_PI / 2.0) + s * q1;
    const double a2 = a1 + s * q2;
    const Vec2 knuckle = attach + Vec2{std::cos(a1), std::sin(a1)} * hand.phalanx_lengths[f][0];
    const Vec2 tip = knuckle + Vec2{std::cos(a2), std::sin(a2)} * hand.phalanx_lengths[f][1];
    fk.phalanx_segments[f][0] = {attach, knuckle};
    fk.phalanx_segments[f][1] = {knuckle, tip};
    fk.fingertips[f] = tip;
  }
  return fk;
}

Pose2 hand_base_pose(const HandModel& hand, const JointVector& joints) {
  return forward_kinematics(hand, joints).hand_base;
}

std::vector<Segment> hand_capsules(const FkResult& fk) {
  std::vector<Segment> out;
  out.reserve(1 + kFingers * 2);
  out.push_back(fk.palm_segment);
  for (int f = 0; f < kFingers; ++f)
    for (int p = 0; p < 2; ++p) out.push_back(fk.phalanx_segments[f][p]);
  return out;
}

namespace {

void check_pose_spec(const HandModel& hand, const RobotPoseSpec& spec) {
  for (int i = 0; i < kArmJoints; ++i) {
    const double lo = spec.base[i] - spec.amplitude[i];
    const double hi = spec.base[i] + spec.amplitude[i];
    if (spec.amplitude[i] < 0.0)
      throw std::invalid_argument("robot pose spec: amplitude must be >= 0");
    if (lo < hand.joint_limits[i][0] || hi > hand.joint_limits[i][1])
      throw std::invalid_argument("robot pose spec: joint " + std::to_string(i) +
                                  " range exceeds joint limits");
  }
}

}  // namespace

JointVector sample_robot_pose(const HandModel& hand, const RobotPoseSpec& spec,
                              const JointVector& defaults, Rng& rng) {
  check_pose_spec(hand, spec);
  JointVector out = defaults;
  for (int i = 0; i < kArmJoints; ++i) {
    const double w = rng.uniform(-1.0, 1.0);
    out[i] = spec.base[i] + w * spec.amplitude[i];
  }
  return out;
}

JointVector static_robot_pose(const HandModel& hand, const RobotPoseSpec& spec,
                              const JointVector& defaults) {
  check_pose_spec(hand, spec);
  JointVector out = defaults;
  for (int i = 0; i < kArmJoints; ++i) out[i] = spec.base[i];
  return out;
}

}  // namespace gf
