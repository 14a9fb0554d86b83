#pragma once

#include <Eigen/Dense>

namespace gisweep {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;
using Quat = Eigen::Quaterniond;

inline constexpr double kPi = 3.14159265358979323846;

inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }
inline double rad_to_deg(double rad) { return rad * 180.0 / kPi; }

// Continuous pixel coordinate; the center of integer pixel (row i, col j)
// is (u = j, v = i).
struct PixelCoord {
  double u = 0.0;
  double v = 0.0;
};

}  // namespace gisweep
