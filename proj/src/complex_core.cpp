#include "harmlab/complex_core.hpp"

#include <cmath>
#include <string>

#include "harmlab/errors.hpp"

namespace harmlab {

HalfPlanePoint::HalfPlanePoint(double x, double y) : x_(x), y_(y) {
  if (!std::isfinite(x) || !std::isfinite(y) || !(y > 0.0)) {
    throw ValidationError(ValidationCode::InvalidPoint,
                          "half-plane point needs finite x and y > 0, got (" +
                              std::to_string(x) + ", " + std::to_string(y) + ")");
  }
}

PolarPoint to_polar(const HalfPlanePoint& p) {
  return {std::hypot(p.x(), p.y()), std::atan2(p.y(), p.x())};
}

HalfPlanePoint from_polar(const PolarPoint& q) {
  return {q.r * std::cos(q.phi), q.r * std::sin(q.phi)};
}

double upper_argument(double x, double y) {
  // atan2(+0, x) is 0 or pi; a signed zero ordinate must not flip to -pi.
  return std::atan2(std::fabs(y), x);
}

std::complex<double> complex_power(double x, double y, double alpha) {
  if (!(y >= 0.0)) {
    throw ValidationError(ValidationCode::InvalidPoint,
                          "complex_power is defined on y >= 0 only");
  }
  const double r = std::hypot(x, y);
  if (r == 0.0) return {0.0, 0.0};
  const double phi = upper_argument(x, y);
  const double mod = std::exp(alpha * std::log(r));
  return {mod * std::cos(alpha * phi), mod * std::sin(alpha * phi)};
}

std::complex<double> integer_power(double x, double y, int k) {
  std::complex<double> z{x, y};
  std::complex<double> acc{1.0, 0.0};
  for (int i = 0; i < k; ++i) acc *= z;
  return acc;
}

}  // namespace harmlab
