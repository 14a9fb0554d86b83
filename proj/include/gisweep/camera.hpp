#pragma once

#include <cmath>
#include <stdexcept>

#include "gisweep/geometry.hpp"
#include "gisweep/image.hpp"

namespace gisweep {

// Double Sphere fisheye model. A point is projected onto a unit sphere, then
// onto a second sphere shifted by xi along the optical axis, and finally
// through a pinhole blended by alpha. Handles fields of view past 180 degrees
// without iterative undistortion.
struct CameraIntrinsics {
  double fx = 0.0;  // focal lengths, pixels
  double fy = 0.0;
  double cx = 0.0;  // principal point, pixels
  double cy = 0.0;
  double xi = 0.0;     // first-sphere offset
  double alpha = 0.5;  // second-sphere blend, in [0, 1]
  int width = 0;       // image size, pixels
  int height = 0;
  double fov_limit = deg_to_rad(95.0);  // max angle from optical axis, radians

  void validate() const {
    if (!(fx > 0.0) || !(fy > 0.0))
      throw std::invalid_argument("CameraIntrinsics: focal lengths must be positive");
    if (!(alpha >= 0.0 && alpha <= 1.0))
      throw std::invalid_argument("CameraIntrinsics: alpha must lie in [0, 1]");
    if (!(fov_limit > 0.0 && fov_limit <= kPi))
      throw std::invalid_argument("CameraIntrinsics: fov_limit must lie in (0, pi]");
    if (width < 2 || height < 2)
      throw std::invalid_argument("CameraIntrinsics: image must be at least 2x2");
    if (!std::isfinite(cx) || !std::isfinite(cy) || !std::isfinite(xi))
      throw std::invalid_argument("CameraIntrinsics: parameters must be finite");
  }
};

struct Projection {
  PixelCoord pixel;
  bool valid = false;
};

struct Unprojection {
  Vec3 ray = Vec3::UnitZ();
  bool valid = false;
};

inline double angle_from_axis(const Vec3& v) {
  return std::atan2(std::hypot(v.x(), v.y()), v.z());
}

// Projects a camera-frame point (meters) to pixels. valid requires the
// model-domain condition, the angle from the optical axis to stay within
// fov_limit, and the pixel to land inside the image.
inline Projection project(const Vec3& point, const CameraIntrinsics& intr) {
  const double x = point.x(), y = point.y(), z = point.z();
  const double d1 = point.norm();
  if (d1 == 0.0) throw std::domain_error("project: zero-length point");

  Projection out;
  const double zeta = intr.xi * d1 + z;
  const double d2 = std::sqrt(x * x + y * y + zeta * zeta);
  const double denom = intr.alpha * d2 + (1.0 - intr.alpha) * zeta;
  if (!(denom > 0.0) || !std::isfinite(denom)) return out;

  out.pixel.u = intr.fx * x / denom + intr.cx;
  out.pixel.v = intr.fy * y / denom + intr.cy;

  const double w = intr.alpha <= 0.5 ? intr.alpha / (1.0 - intr.alpha)
                                     : (1.0 - intr.alpha) / intr.alpha;
  const bool domain_ok = z > -w * d1;
  const bool fov_ok = angle_from_axis(point) <= intr.fov_limit;
  const bool inside =
      out.pixel.u >= 0.0 && out.pixel.u <= intr.width - 1.0 &&
      out.pixel.v >= 0.0 && out.pixel.v <= intr.height - 1.0;
  out.valid = domain_ok && fov_ok && inside;
  return out;
}

// Back-projects a pixel to a unit ray in the camera frame.
inline Unprojection unproject(const PixelCoord& px, const CameraIntrinsics& intr) {
  Unprojection out;
  const double mx = (px.u - intr.cx) / intr.fx;
  const double my = (px.v - intr.cy) / intr.fy;
  const double r2 = mx * mx + my * my;

  if (intr.alpha > 0.5 && r2 > 1.0 / (2.0 * intr.alpha - 1.0)) return out;
  const double root = 1.0 - (2.0 * intr.alpha - 1.0) * r2;
  const double mz_den = intr.alpha * std::sqrt(std::max(root, 0.0)) + 1.0 - intr.alpha;
  if (!(mz_den > 0.0)) return out;
  const double mz = (1.0 - intr.alpha * intr.alpha * r2) / mz_den;

  const double disc = mz * mz + (1.0 - intr.xi * intr.xi) * r2;
  if (disc < 0.0) return out;
  const double s = (mz * intr.xi + std::sqrt(disc)) / (mz * mz + r2);

  Vec3 ray(s * mx, s * my, s * mz - intr.xi);
  const double norm = ray.norm();
  if (!(norm > 0.0)) return out;
  out.ray = ray / norm;
  out.valid = angle_from_axis(out.ray) <= intr.fov_limit;
  return out;
}

// 255 where the pixel center back-projects to a valid in-FoV ray, else 0.
inline ImageU8 fov_mask(const CameraIntrinsics& intr) {
  ImageU8 mask(intr.width, intr.height, 1, 0);
  for (int y = 0; y < intr.height; ++y)
    for (int x = 0; x < intr.width; ++x)
      mask.at(x, y) =
          unproject({static_cast<double>(x), static_cast<double>(y)}, intr).valid
              ? 255
              : 0;
  return mask;
}

}  // namespace gisweep
