#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "harmlab/complex_core.hpp"
#include "harmlab/quadrature.hpp"

namespace harmlab {

/// A real field on (a subset of) the plane, called as f(x, y).
using ScalarField = std::function<double(double, double)>;

/// Five-point Laplacian at p with spacing h. Throws
/// ValidationError(StencilLeavesDomain) unless p.y() > 2h.
double fd_laplacian(const ScalarField& f, const HalfPlanePoint& p, double h);

/// Central difference of the given order (1..5) with one Richardson step
/// (h and h/2), so the error is O(h^4) for smooth f.
double fd_derivative(const Function1D& f, double x, int order, double h);

/// Polar tensor grid on the half-disk B_R^+ with a radial mesh graded
/// towards the origin: r_j = R (j / nr)^grading, j = 0..nr.
class GridSpec {
 public:
  /// Throws ValidationError(InvalidGrid) for R <= 0, nr < 8, nphi < 8 or grading < 1.
  GridSpec(double R, int nr, int nphi, double grading = 2.0);

  double radius() const noexcept { return R_; }
  int nr() const noexcept { return nr_; }
  int nphi() const noexcept { return nphi_; }
  double grading() const noexcept { return grading_; }

  /// Cell boundary r_j, j = 0..nr.
  double radial_edge(int j) const;
  /// Sample node (r_j, phi_i): r_j for j = 1..nr, phi at cell midpoints.
  double node_radius(int j) const { return radial_edge(j); }
  double node_angle(int i) const;
  std::size_t node_count() const noexcept {
    return static_cast<std::size_t>(nr_) * static_cast<std::size_t>(nphi_);
  }
  /// Node of flat index (j - 1) * nphi + i, with j = 1..nr and i = 0..nphi-1.
  PolarPoint node(std::size_t index) const;

  /// Same grid with nr and nphi doubled.
  GridSpec refined() const { return {R_, 2 * nr_, 2 * nphi_, grading_}; }

 private:
  double R_;
  int nr_;
  int nphi_;
  double grading_;
};

/// Gauss points per radial and angular cell in the half-disk quadrature.
inline constexpr int kHalfDiskGaussPoints = 4;

/// L^p norm over the half-disk; p = kInf selects the sup norm.
/// Finite p: tensor Gauss quadrature of |f|^p r dr dphi, then the p-th root.
/// p = inf: max over grid nodes, then golden-section refinement along the
/// maximizing ray and angle. Throws NumericalError(NonFiniteSample).
double norm_lp_halfdisk(const ScalarField& f, const GridSpec& grid, double p);

struct SupLocation {
  double value = 0.0;
  double r = 0.0;
  double phi = 0.0;
};

SupLocation sup_halfdisk(const ScalarField& f, const GridSpec& grid);

/// The tensor Gauss rule itself: Cartesian nodes and weights (including the
/// polar Jacobian r).
struct PlanarRule {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> w;
};
PlanarRule halfdisk_rule(const GridSpec& grid);

/// Integral of f over the half-disk with the same tensor rule.
double integrate_halfdisk(const ScalarField& f, const GridSpec& grid);

struct RateFit {
  double slope = 0.0;
  double intercept = 0.0;
  double r_squared = 0.0;
  int n_points = 0;
  /// Sum of squared residuals of the fitted line.
  double residual = 0.0;
};

/// Least-squares line y = slope * x + intercept. Throws DegenerateDesign when all x agree.
RateFit fit_linear(std::span<const double> xs, std::span<const double> ys);

/// Least-squares line through (log x, log y); needs >= 3 positive pairs.
RateFit fit_loglog(std::span<const double> xs, std::span<const double> ys);

/// Largest |v_i| / |ref_i| mismatch, guarded by `floor` in the denominator.
double max_relative_error(std::span<const double> values, std::span<const double> reference,
                          double floor = 1e-300);

/// Golden-section search for a maximum of f on [a, b].
double golden_section_max(const Function1D& f, double a, double b, double& argmax,
                          int iterations = 80);

}  // namespace harmlab
