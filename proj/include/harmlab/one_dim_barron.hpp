#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "harmlab/barron.hpp"
#include "harmlab/numerics.hpp"
#include "harmlab/quadrature.hpp"

namespace harmlab {

/// A function on [lo, hi] together with its analytic (k+1)-th derivative.
/// Either end of the support may be infinite.
struct DifferentiableFunction1D {
  Function1D f;
  Function1D derivative;  ///< f^(k+1)
  int k = 1;
  double lo = -1.0;
  double hi = 1.0;
  /// Points where the derivative may blow up; quadrature splits there.
  std::vector<double> singular_points;
};

/// integral of |f^(k+1)(x)| (1 + |x|^k) over the support.
/// Before integrating, the mass of dyadic shells around each singular point is
/// accumulated down to the resolution limit; if the accumulated mass grows by
/// more than kDivergenceGrowth over the mass of the first shells, the integral
/// is reported as divergent with NumericalError(DivergenceDetected).
double barron_norm_upper(const DifferentiableFunction1D& df, double tol = 1e-9);

inline constexpr double kDivergenceGrowth = 10.0;

/// Ensemble representing f through the repeated-integration identity
///   f(x) = sum_i c_i x^i + (1/k!) int_0^hi f^(k+1)(t) sigma_k(x - t) dt
///          + ((-1)^(k+1)/k!) int_lo^0 f^(k+1)(t) sigma_k(t - x) dt,
/// with c_i = f^(i)(0)/i! supplied in taylor_at_zero (size k + 1).
/// The integrals use quad_nodes cells of equal mass of |f^(k+1)| (1 + |t|^k)
/// (plus its mean, so no region is left empty), one neuron per cell at its
/// midpoint weighted by the exact cell integral. The polynomial part uses
/// k + 1 shifted pairs (x - h)^k = sigma_k(x - h) + (-1)^k sigma_k(h - x).
/// Needs a bounded support containing 0.
NeuronEnsemble ensemble_from_derivative(const DifferentiableFunction1D& df, std::size_t quad_nodes,
                                        std::span<const double> taylor_at_zero);

/// Cost of the polynomial part alone, as built by ensemble_from_derivative.
double polynomial_part_cost(int k, std::span<const double> taylor_at_zero);

/// d^(k+1)/dx^(k+1) of x^k log x at x > 0, expanded with the Leibniz rule.
double xklogx_derivative(int k, double x);

/// I(delta) = int_delta^1 |d^(k+1)(x^k log x)| (1 + x^k) dx.
double xklogx_criterion_integral(int k, double delta, double tol = 1e-11);

/// Fits I(delta) against |log delta|; the slope is the divergence constant.
/// Requires strictly decreasing deltas in [1e-8, 1), at least 3 of them.
RateFit log_divergence_diagnostic(int k, std::span<const double> deltas);

}  // namespace harmlab
