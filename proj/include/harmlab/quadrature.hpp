#pragma once

#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace harmlab {

using Function1D = std::function<double(double)>;

/// Nodes and positive weights on an interval. `measure` is what the weights
/// sum to: the interval length for plain rules, 1 for probability rules.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double lower = 0.0;
  double upper = 0.0;
  double measure = 0.0;

  std::size_t size() const noexcept { return nodes.size(); }
  double apply(const Function1D& f) const;
};

/// n-point Gauss-Legendre rule on [a, b].
QuadratureRule gauss_legendre(std::size_t n, double a, double b);

/// `cells` equal cells on [a, b], each carrying a `points_per_cell` Gauss rule.
QuadratureRule composite_gauss_legendre(std::size_t cells, std::size_t points_per_cell, double a,
                                        double b);

struct IntegrationResult {
  double value = 0.0;
  double error = 0.0;
  std::size_t subdivisions = 0;
};

struct AdaptiveOptions {
  double tol = 1e-9;
  std::size_t max_subdivisions = 20000;
};

/// Globally adaptive Gauss-Kronrod (7, 15) integration with bisection.
/// Stops when the summed error estimate is <= tol * (1 + |result|); throws
/// NumericalError(MaxSubdivisionsExceeded) if the budget is exhausted.
/// The rule never samples the endpoints, so integrable endpoint
/// singularities are fine.
IntegrationResult integrate_adaptive_detailed(const Function1D& f, std::span<const double> breaks,
                                              const AdaptiveOptions& options = {});

double integrate_adaptive(const Function1D& f, double a, double b, double tol = 1e-9);

/// Same, with the initial partition split at `breaks` (sorted, including both ends).
double integrate_adaptive(const Function1D& f, std::span<const double> breaks, double tol = 1e-9);

/// Integral over (a, b) where either end may be infinite, through t = tan(theta).
double integrate_tangent(const Function1D& f, double a, double b, double tol = 1e-9);

inline constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace harmlab
