#pragma once

#include <vector>

#include "harmlab/complex_core.hpp"

namespace harmlab {

/// f_k(x, y) = arctan(x/y) Re((x + iy)^k), the non-polynomial part of u^r_k.
double arctan_real_part(double x, double y, int k);

/// (k+1)-th x-derivative of f_k at p in closed form,
///   (k!/2r) Im(e^{i phi} (1 - e^{-2i phi})^{k+1}),
/// evaluated through 1 - e^{-2i phi} = 2i sin(phi) e^{-i phi} so that it keeps
/// full relative accuracy as phi -> 0 or pi.
double closed_form_dk1(const HalfPlanePoint& p, int k);

/// The same expression evaluated literally with complex arithmetic; accurate
/// only away from the boundary. Kept as an independent check.
double closed_form_dk1_literal(const HalfPlanePoint& p, int k);

struct SliceFit {
  double c_fit = 0.0;     ///< coefficient of x^k log x
  double d_fit = 0.0;     ///< coefficient of x^k
  double residual = 0.0;  ///< largest absolute residual over the samples
};

/// |sec theta|^k sin(k theta) / pi.
double slice_log_constant(int k, double theta);

/// Samples u^i_k along the ray at angle theta through x (cos theta, sin theta)/|cos theta|,
/// x log-spaced in [1e-3, 1], and least-squares fits c x^k log x + d x^k.
/// theta in (0, pi) with theta != pi/2. Throws DegenerateAngle when
/// |sin(k theta)| <= 1e-6 and InvalidArgument for n_points < 20.
SliceFit slice_log_fit(int k, double theta, int n_points = 100);

struct SliceBarronReport {
  int k = 0;
  /// integral over the whole line of |d^{k+1} u^r_k(xi, 1)| (1 + |xi|^k).
  double value = 0.0;
  std::vector<double> cutoffs;    ///< T values
  std::vector<double> truncated;  ///< the same integral over [-T, T]
  double tail_exponent = 0.0;     ///< fitted decay exponent of the integrand for xi >> 1
  double tail_r_squared = 0.0;
};

/// Criterion integral for the line y = 1 slice of u^r_k, k in {1, ..., 4};
/// n_points samples in [1e2, 1e4] feed the tail-exponent fit.
SliceBarronReport ur_slice_barron_check(int k, int n_points = 50);

}  // namespace harmlab
