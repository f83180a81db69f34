/*
 * icevol : sparse ICE volume geometry and evaluation toolkit
 *
 * Copyright 2026 the icevol authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef ICEVOL_POSE_HPP
#define ICEVOL_POSE_HPP

#include "icevol/types.hpp"

namespace icevol {

/// Rigid placement of a slice frame in world millimetres, stored as a 4x4
/// homogeneous matrix. Construction validates that the bottom row is exactly
/// (0,0,0,1) and that the linear part is a proper rotation within 1e-6, then
/// snaps the rotation to the nearest orthonormal matrix (polar decomposition)
/// so that file round-trips cannot accumulate drift.
class Pose {
 public:
  Pose();  // identity

  explicit Pose(const Mat4& matrix);

  static Pose from_rotation_translation(const Mat3& rotation, const Vec3& translation);

  const Mat4& matrix() const { return m_; }
  Mat3 rotation() const { return m_.topLeftCorner<3, 3>(); }
  Vec3 translation() const { return m_.topRightCorner<3, 1>(); }

  Vec3 apply(const Vec3& p) const { return rotation() * p + translation(); }

  Pose inverse() const;

 private:
  Mat4 m_;
};

// result.matrix == a.matrix * b.matrix
Pose compose(const Pose& a, const Pose& b);

// Elementary rotations (radians) and a pure translation, as Poses.
Mat3 rotation_x(double rad);
Mat3 rotation_y(double rad);
Mat3 rotation_z(double rad);
Pose make_translation(const Vec3& t);

// Nearest orthonormal matrix with det +1 (polar decomposition via SVD).
// Throws ValidationError if the input is a reflection.
Mat3 orthonormalize(const Mat3& m);

}  // namespace icevol

#endif  // ICEVOL_POSE_HPP
