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

#include "icevol/slice.hpp"

namespace icevol {

Vec3 slice_to_world(const SliceGeometry& g, double u, double v) {
  return g.pose.apply(Vec3(u * g.spacing_u, v * g.spacing_v, 0.0));
}

SlicePoint world_to_slice(const SliceGeometry& g, const Vec3& p) {
  const Vec3 q = g.pose.rotation().transpose() * (p - g.pose.translation());
  return SlicePoint{q.x() / g.spacing_u, q.y() / g.spacing_v, q.z()};
}

std::array<Vec3, 4> slice_corners(const SliceGeometry& g) {
  const double umax = static_cast<double>(g.width - 1);
  const double vmax = static_cast<double>(g.height - 1);
  return {slice_to_world(g, 0.0, 0.0), slice_to_world(g, umax, 0.0),
          slice_to_world(g, 0.0, vmax), slice_to_world(g, umax, vmax)};
}

void PosedSlice::validate() const {
  geometry().validate();
  if (validity.rows() != pixels.rows() || validity.cols() != pixels.cols()) {
    throw ValidationError("PosedSlice: validity mask shape must match pixels");
  }
  if ((pixels.abs() > 1.0).any()) {
    throw ValidationError("PosedSlice: intensities must lie in [-1,1]");
  }
  if (labels) {
    if (labels->rows() != pixels.rows() || labels->cols() != pixels.cols()) {
      throw ValidationError("PosedSlice: labels shape must match pixels");
    }
    if ((*labels >= kNumClasses).any()) {
      throw ValidationError("PosedSlice: label ids must lie in 0..6");
    }
  }
}

PosedSlice make_slice(ImageD pixels, double spacing_u, double spacing_v, const Pose& pose) {
  PosedSlice s;
  s.validity = ImageB::Constant(pixels.rows(), pixels.cols(), true);
  s.pixels = std::move(pixels);
  s.spacing_u = spacing_u;
  s.spacing_v = spacing_v;
  s.pose = pose;
  s.validate();
  return s;
}

}  // namespace icevol
