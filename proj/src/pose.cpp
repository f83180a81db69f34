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

#include "icevol/pose.hpp"

#include <cmath>

#include <Eigen/SVD>

namespace icevol {

namespace {

constexpr double kOrthoTol = 1e-6;

void check_rigid(const Mat4& m) {
  if (m(3, 0) != 0.0 || m(3, 1) != 0.0 || m(3, 2) != 0.0 || m(3, 3) != 1.0) {
    throw ValidationError("Pose: bottom row must be exactly (0,0,0,1)");
  }
  const Mat3 r = m.topLeftCorner<3, 3>();
  const Mat3 gram = r.transpose() * r;
  if ((gram - Mat3::Identity()).cwiseAbs().maxCoeff() > kOrthoTol) {
    throw ValidationError("Pose: rotation block is not orthonormal within 1e-6");
  }
  if (r.determinant() < 0.0) {
    throw ValidationError("Pose: rotation block is a reflection (det < 0)");
  }
}

}  // namespace

Mat3 orthonormalize(const Mat3& m) {
  Eigen::JacobiSVD<Mat3> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Mat3 r = svd.matrixU() * svd.matrixV().transpose();
  if (r.determinant() < 0.0) {
    throw ValidationError("orthonormalize: input is closest to a reflection");
  }
  return r;
}

Pose::Pose() : m_(Mat4::Identity()) {}

Pose::Pose(const Mat4& matrix) : m_(matrix) {
  check_rigid(m_);
  m_.topLeftCorner<3, 3>() = orthonormalize(m_.topLeftCorner<3, 3>());
}

Pose Pose::from_rotation_translation(const Mat3& rotation, const Vec3& translation) {
  Mat4 m = Mat4::Identity();
  m.topLeftCorner<3, 3>() = rotation;
  m.topRightCorner<3, 1>() = translation;
  return Pose(m);
}

Pose Pose::inverse() const {
  const Mat3 rt = rotation().transpose();
  Mat4 m = Mat4::Identity();
  m.topLeftCorner<3, 3>() = rt;
  m.topRightCorner<3, 1>() = -(rt * translation());
  return Pose(m);
}

Pose compose(const Pose& a, const Pose& b) {
  return Pose(Mat4(a.matrix() * b.matrix()));
}

Mat3 rotation_x(double rad) {
  const double c = std::cos(rad), s = std::sin(rad);
  Mat3 r;
  r << 1, 0, 0, 0, c, -s, 0, s, c;
  return r;
}

Mat3 rotation_y(double rad) {
  const double c = std::cos(rad), s = std::sin(rad);
  Mat3 r;
  r << c, 0, s, 0, 1, 0, -s, 0, c;
  return r;
}

Mat3 rotation_z(double rad) {
  const double c = std::cos(rad), s = std::sin(rad);
  Mat3 r;
  r << c, -s, 0, s, c, 0, 0, 0, 1;
  return r;
}

Pose make_translation(const Vec3& t) {
  return Pose::from_rotation_translation(Mat3::Identity(), t);
}

}  // namespace icevol
