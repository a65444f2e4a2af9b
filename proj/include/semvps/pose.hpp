/*
 * Copyright 2026 The SemVPS Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SEMVPS_POSE_HPP_
#define SEMVPS_POSE_HPP_

#include <cmath>

#include "semvps/geodesy.hpp"

namespace semvps {

// Wraps an angle in degrees to [0, 360).
inline double wrap_deg_360(double deg) {
  double w = std::fmod(deg, 360.0);
  if (w < 0.0) w += 360.0;
  return w;
}

// Wraps an angle in degrees to (-180, 180].
inline double wrap_deg_180(double deg) {
  double w = std::fmod(deg, 360.0);
  if (w <= -180.0) w += 360.0;
  if (w > 180.0) w -= 360.0;
  return w;
}

// Camera rotation. Yaw is heading, clockwise from north; pitch is positive
// up; roll is about the view axis. Applied yaw, then pitch, then roll.
struct Rotation {
  double yaw = 0.0;    // degrees, [0, 360)
  double pitch = 0.0;  // degrees, [-90, 90]
  double roll = 0.0;   // degrees, (-180, 180]

  Rotation normalized() const {
    return Rotation{wrap_deg_360(yaw), pitch, wrap_deg_180(roll)};
  }

  bool valid() const {
    return yaw >= 0.0 && yaw < 360.0 && pitch >= -90.0 && pitch <= 90.0 &&
           roll > -180.0 && roll <= 180.0;
  }
};

// Six-DOF camera state: position and rotation.
struct Pose {
  GeoCoord position;
  Rotation rotation;
};

// Smallest absolute difference between two headings, degrees in [0, 180].
inline double yaw_difference_deg(double a, double b) {
  return std::abs(wrap_deg_180(a - b));
}

}  // namespace semvps

#endif  // SEMVPS_POSE_HPP_
