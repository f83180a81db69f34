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

#ifndef ICEVOL_SLICE_HPP
#define ICEVOL_SLICE_HPP

#include <array>
#include <optional>

#include "icevol/pose.hpp"
#include "icevol/types.hpp"

namespace icevol {

/// Placement of an H x W pixel lattice in world mm. Pixel (u,v) refers to the
/// pixel CENTER; pixel (0,0) maps to the pose translation. The slice plane is
/// z=0 of the slice frame, so the world plane normal is rotation * (0,0,1).
struct SliceGeometry {
  int height = 0;
  int width = 0;
  double spacing_u = 1.0;  // mm per pixel along u (columns)
  double spacing_v = 1.0;  // mm per pixel along v (rows)
  Pose pose;

  void validate() const {
    if (height < 1 || width < 1) throw ValidationError("SliceGeometry: H and W must be >= 1");
    if (spacing_u <= 0.0 || spacing_v <= 0.0)
      throw ValidationError("SliceGeometry: spacing must be > 0");
  }
};

Vec3 slice_to_world(const SliceGeometry& g, double u, double v);

// (u, v, signed out-of-plane distance d); slice_to_world(u,v) + d * normal == p.
struct SlicePoint {
  double u;
  double v;
  double d;
};
SlicePoint world_to_slice(const SliceGeometry& g, const Vec3& p);

// World positions of the four corner pixel centers (0,0), (W-1,0), (0,H-1),
// (W-1,H-1).
std::array<Vec3, 4> slice_corners(const SliceGeometry& g);

/// 2D image posed in 3D: intensities in [-1,1], a validity (fan) mask, and
/// optional per-pixel class labels.
struct PosedSlice {
  ImageD pixels;    // H x W
  ImageB validity;  // H x W
  std::optional<ImageU8> labels;
  double spacing_u = 1.0;
  double spacing_v = 1.0;
  Pose pose;

  int height() const { return static_cast<int>(pixels.rows()); }
  int width() const { return static_cast<int>(pixels.cols()); }

  SliceGeometry geometry() const {
    return SliceGeometry{height(), width(), spacing_u, spacing_v, pose};
  }

  void validate() const;
};

PosedSlice make_slice(ImageD pixels, double spacing_u, double spacing_v, const Pose& pose);

}  // namespace icevol

#endif  // ICEVOL_SLICE_HPP
