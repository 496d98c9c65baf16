#ifndef GRASPFORGE_HAND_HPP_
#define GRASPFORGE_HAND_HPP_

#include <array>
#include <vector>

#include "graspforge/geometry.hpp"
#include "graspforge/rng.hpp"

namespace gf {

inline constexpr int kArmJoints = 3;
inline constexpr int kFingers = 3;
inline constexpr int kHandJoints = 6;  // 3 fingers x 2 phalanges
inline constexpr int kTotalJoints = kArmJoints + kHandJoints;

// Planar arm + three-finger hand. The arm is a chain of three links rooted
// at the world origin; the palm is a capsule segment at the arm tip, oriented
// along the last link, with the palm normal pointing to the link's right-hand
// side. Fingers hang off the palm and curl in the palm plane:
// finger 0 curls toward +tangent, fingers 1 and 2 toward -tangent, so the
// hand pinches objects between finger 0 and the other two.
struct HandModel {
  std::array<double, kArmJoints> arm_link_lengths{1.0, 1.0, 1.0};
  double palm_half_width = 0.12;
  std::array<double, kFingers> finger_attach_offsets{-0.12, 0.0, 0.12};
  std::array<std::array<double, 2>, kFingers> phalanx_lengths{
      {{0.16, 0.14}, {0.16, 0.14}, {0.16, 0.14}}};
  double phalanx_radius = 0.025;
  // [lo, hi] per joint, arm joints first.
  std::array<std::array<double, 2>, kTotalJoints> joint_limits{};

  static const HandModel& standard();

  // +1 when increasing angle swings the finger toward +tangent.
  static double curl_sign(int finger) { return finger == 0 ? 1.0 : -1.0; }

  void validate() const;  // throws std::invalid_argument on a bad model
};

// Joint angles, arm(3) then hand(6) as [f0 proximal, f0 distal, f1p, f1d, f2p, f2d].
struct JointVector {
  std::array<double, kTotalJoints> angles{};

  double& operator[](int i) { return angles[static_cast<size_t>(i)]; }
  double operator[](int i) const { return angles[static_cast<size_t>(i)]; }

  std::array<double, kHandJoints> hand_part() const;
  void set_hand_part(const std::array<double, kHandJoints>& h);
  bool within_limits(const HandModel& hand, double tol = 1e-9) const;
  JointVector clamped(const HandModel& hand) const;
};

struct FkResult {
  // Frame i sits at arm joint i with its x-axis along arm link i.
  std::array<Pose2, kArmJoints> arm_frames;
  Vec2 palm_center;
  Vec2 palm_tangent;  // unit, along the palm segment
  Vec2 palm_normal;   // unit, out of the palm toward the grasp region
  // Frame with origin at the palm center and +x along the palm normal; grasp
  // records store object poses relative to this frame.
  Pose2 hand_base;
  Segment palm_segment;
  std::array<Vec2, kFingers> finger_attach;
  std::array<std::array<Segment, 2>, kFingers> phalanx_segments;
  std::array<Vec2, kFingers> fingertips;
};

FkResult forward_kinematics(const HandModel& hand, const JointVector& joints);
Pose2 hand_base_pose(const HandModel& hand, const JointVector& joints);

// All capsule segments of the hand in a fixed order:
// palm, then phalanges (finger-major). body_part ids follow the same order,
// palm = 0, phalanx(f, p) = 1 + 2f + p.
std::vector<Segment> hand_capsules(const FkResult& fk);
inline constexpr int kPalmBodyPart = 0;

// Joint randomization R_i = S_i + w_i * A_i over the arm joints,
// w_i uniform in [-1, 1]; hand joints come from `defaults`.
struct RobotPoseSpec {
  std::array<double, kArmJoints> base;       // S
  std::array<double, kArmJoints> amplitude;  // A
};

// Throws std::invalid_argument when [S_i - A_i, S_i + A_i] leaves the joint
// limits (the spec must be constructed inside limits).
JointVector sample_robot_pose(const HandModel& hand, const RobotPoseSpec& spec,
                              const JointVector& defaults, Rng& rng);
JointVector static_robot_pose(const HandModel& hand, const RobotPoseSpec& spec,
                              const JointVector& defaults);

}  // namespace gf

#endif  // GRASPFORGE_HAND_HPP_
