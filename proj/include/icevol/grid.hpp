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

#ifndef ICEVOL_GRID_HPP
#define ICEVOL_GRID_HPP

#include <cstddef>
#include <vector>

#include "icevol/types.hpp"

namespace icevol {

/// Regular voxel lattice. `origin` is the world position of the CENTER of
/// voxel (0,0,0); voxel (i,j,k) is centered at origin + spacing .* (i,j,k).
struct GridSpec {
  Eigen::Vector3i dims{1, 1, 1};
  Vec3 spacing{1.0, 1.0, 1.0};
  Vec3 origin{0.0, 0.0, 0.0};

  GridSpec() = default;
  GridSpec(const Eigen::Vector3i& d, const Vec3& s, const Vec3& o)
      : dims(d), spacing(s), origin(o) {
    validate();
  }

  void validate() const {
    if (dims.minCoeff() < 1) throw ValidationError("GridSpec: dims must be >= 1 per axis");
    if (spacing.minCoeff() <= 0.0) throw ValidationError("GridSpec: spacing must be > 0");
  }

  std::size_t voxel_count() const {
    return static_cast<std::size_t>(dims.x()) * dims.y() * dims.z();
  }

  Vec3 voxel_center(int i, int j, int k) const {
    return origin + spacing.cwiseProduct(Vec3(i, j, k));
  }

  // Continuous grid coordinates: voxel centers sit at integers.
  Vec3 world_to_grid(const Vec3& p) const {
    return (p - origin).cwiseQuotient(spacing);
  }

  // Center of the voxel-center bounding box (the rotation pivot used by
  // augmentation).
  Vec3 center() const {
    return origin + spacing.cwiseProduct(0.5 * (dims.cast<double>() - Vec3::Ones()));
  }

  bool index_in_bounds(int i, int j, int k) const {
    return i >= 0 && j >= 0 && k >= 0 && i < dims.x() && j < dims.y() && k < dims.z();
  }

  bool operator==(const GridSpec& o) const {
    return dims == o.dims && spacing == o.spacing && origin == o.origin;
  }
};

/// Dense raster over a GridSpec, x-fastest: index = i + nx*(j + ny*k).
template <typename Scalar>
class VoxelGrid {
 public:
  VoxelGrid() = default;
  explicit VoxelGrid(const GridSpec& spec, Scalar fill = Scalar{})
      : spec_(spec), data_(spec.voxel_count(), fill) {}

  const GridSpec& spec() const { return spec_; }
  const Eigen::Vector3i& dims() const { return spec_.dims; }

  std::size_t size() const { return data_.size(); }
  std::size_t index(int i, int j, int k) const {
    return static_cast<std::size_t>(i) +
           static_cast<std::size_t>(spec_.dims.x()) *
               (static_cast<std::size_t>(j) + static_cast<std::size_t>(spec_.dims.y()) * k);
  }

  Scalar& operator()(int i, int j, int k) { return data_[index(i, j, k)]; }
  const Scalar& operator()(int i, int j, int k) const { return data_[index(i, j, k)]; }

  Scalar& operator[](std::size_t n) { return data_[n]; }
  const Scalar& operator[](std::size_t n) const { return data_[n]; }

  std::vector<Scalar>& data() { return data_; }
  const std::vector<Scalar>& data() const { return data_; }

  template <typename Other>
  VoxelGrid<Other> cast() const {
    VoxelGrid<Other> out(spec_);
    for (std::size_t n = 0; n < data_.size(); ++n) out[n] = static_cast<Other>(data_[n]);
    return out;
  }

 private:
  GridSpec spec_;
  std::vector<Scalar> data_;
};

using VolumeGrid = VoxelGrid<double>;

}  // namespace icevol

#endif  // ICEVOL_GRID_HPP
