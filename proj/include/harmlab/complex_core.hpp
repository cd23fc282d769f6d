#pragma once

#include <complex>

namespace harmlab {

/// A point of the open upper half-plane, y > 0.
class HalfPlanePoint {
 public:
  /// Throws ValidationError(InvalidPoint) unless y > 0 and both coordinates are finite.
  HalfPlanePoint(double x, double y);

  double x() const noexcept { return x_; }
  double y() const noexcept { return y_; }

  HalfPlanePoint scaled(double lambda) const { return {lambda * x_, lambda * y_}; }

 private:
  double x_;
  double y_;
};

/// Polar form of a half-plane point; phi lies in (0, pi).
struct PolarPoint {
  double r;
  double phi;
};

PolarPoint to_polar(const HalfPlanePoint& p);
HalfPlanePoint from_polar(const PolarPoint& q);

/// Principal argument of (x, y) for y >= 0, in [0, pi]. The positive x-axis
/// maps to 0 and the negative x-axis to pi.
double upper_argument(double x, double y);

/// Principal-branch power (x + iy)^alpha on the closed upper half-plane,
/// evaluated as r^alpha (cos(alpha phi), sin(alpha phi)). Requires y >= 0.
std::complex<double> complex_power(double x, double y, double alpha);

inline std::complex<double> complex_power(const HalfPlanePoint& p, double alpha) {
  return complex_power(p.x(), p.y(), alpha);
}

/// (x + iy)^k by repeated multiplication. Used as an independent check of the
/// polar path for integer exponents.
std::complex<double> integer_power(double x, double y, int k);

}  // namespace harmlab
