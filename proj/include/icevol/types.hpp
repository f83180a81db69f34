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

#ifndef ICEVOL_TYPES_HPP
#define ICEVOL_TYPES_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace icevol {

using Vec3 = Eigen::Vector3d;
using Vec4 = Eigen::Vector4d;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;

// H x W rasters; (v, u) = (row, col) indexing.
using ImageD = Eigen::ArrayXXd;
using ImageU8 = Eigen::Array<std::uint8_t, Eigen::Dynamic, Eigen::Dynamic>;
using ImageB = Eigen::Array<bool, Eigen::Dynamic, Eigen::Dynamic>;

// Anatomy class roster. Ids are fixed; 0 is background.
enum : std::uint8_t {
  kBackground = 0,
  kLA = 1,
  kLAA = 2,
  kLIPV = 3,
  kLSPV = 4,
  kRIPV = 5,
  kRSPV = 6,
};
inline constexpr int kNumClasses = 7;

inline const std::array<std::string, kNumClasses>& class_names() {
  static const std::array<std::string, kNumClasses> names = {
      "background", "LA", "LAA", "LIPV", "LSPV", "RIPV", "RSPV"};
  return names;
}

// Bad inputs (shape mismatches, invariant violations, malformed files).
// The CLI maps these to exit code 2; everything else is an internal error.
struct ValidationError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class Interp { Nearest, Trilinear };

}  // namespace icevol

#endif  // ICEVOL_TYPES_HPP
