#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "harmlab/barron.hpp"
#include "harmlab/numerics.hpp"

namespace harmlab {

/// One measured norm at one knob setting (epsilon or n).
struct ErrorReport {
  std::string experiment;
  int k = 0;
  double R = 1.0;
  double p = 2.0;  ///< kInf for the sup norm
  int order = 0;   ///< derivative order
  double knob = 0.0;
  double value = 0.0;
  GridSpec grid{1.0, 8, 8, 1.0};
};

/// n log-spaced values from a to b inclusive (n >= 2), or {a} for n = 1.
std::vector<double> log_spaced(double a, double b, int n);

// Difference v = u_{eps,k} - u_k = -(1/2pi) log(1 + eps^2/r^2) r^k sin(k phi).

double reg_difference(double x, double y, double eps, int k);
/// Cartesian gradient (d_x v, d_y v) from the analytic polar expressions.
std::array<double, 2> reg_difference_gradient(double x, double y, double eps, int k);
/// Cartesian Hessian (v_xx, v_xy, v_yy) from the analytic polar expressions.
std::array<double, 3> reg_difference_hessian(double x, double y, double eps, int k);
/// |v|, |grad v| or the Frobenius norm of the Hessian, for order 0, 1, 2.
double reg_difference_magnitude(double x, double y, double eps, int k, int order);

/// Interior critical radius of r -> r^k log(1 + eps^2/r^2), i.e. the root of
/// k log(1 + eps^2/r^2) = 2 eps^2/(r^2 + eps^2), by bisection. Only k = 1 has
/// one; for k >= 2 the function is increasing and the result is empty.
std::optional<double> reg_critical_radius(int k, double eps);

/// Relative change allowed when the grid is doubled in both directions.
inline constexpr double kGateTolerance = 5e-3;

struct RegExperiment {
  std::vector<ErrorReport> reports;
  RateFit fit;                ///< log value against log eps
  std::vector<double> ratios; ///< value / (R^{k-2} eps^2)
  std::vector<double> refined_values;
  std::vector<double> argmax_r;  ///< sup-norm maximizer radius (p = inf only)
};

/// Norms of the order-th derivative of u_{eps,k} - u_k over B_R^+ for each eps.
/// Each value is compared with the value on grid.refined(); a relative change
/// above kGateTolerance throws NumericalError(GateFailed). Throws KTooSmall
/// for k < 2 and InvalidArgument for eps outside (0, R/10].
RegExperiment reg_error_experiment(int k, double R, double p, int order,
                                   std::span<const double> eps_list, const GridSpec& grid);

/// One-parameter model fit value ~ C * model(eps) in log space: returns the
/// sum of squared log deviations and the fitted C.
struct ModelFit {
  double constant = 0.0;
  double residual = 0.0;
};
ModelFit fit_scaling_model(std::span<const double> eps, std::span<const double> values,
                           double (*model)(double));
double model_eps_squared(double eps);
double model_eps_squared_log(double eps);

struct SobolevExperiment {
  std::vector<ErrorReport> reports;  ///< squared seminorms
  RateFit log_fit;                   ///< value against |log eps|
  RateFit power_fit;                 ///< log value against log eps
  int order = 0;
};

/// Squared H^order seminorm sum_{l+m=order} ||d_x^l d_y^m u^i_{eps,k}||^2 over B_R^+,
/// with derivatives from the q-polynomial recursion. order defaults to k + 2.
/// k in {2, 3}; the same refinement gate as reg_error_experiment.
SobolevExperiment sobolev_lognorm_experiment(int k, double R, std::span<const double> eps_list,
                                             const GridSpec& grid, int order = -1);

/// SplitMix64 step, used to derive independent seeds.
std::uint64_t splitmix64(std::uint64_t x);

/// Target for the Monte-Carlo experiment: `atoms` neurons with a ~ N(0, 1),
/// (w, b) uniform on the unit l1 sphere, equal probabilities.
NeuronEnsemble mc_target(double alpha, std::size_t atoms, std::uint64_t seed, int dim = 1);

/// alpha = k + gamma with gamma in (0, 1]: admissible iff q >= 2 and
/// (m <= k or (m = k + 1 and (1 - gamma) q < 1)).
bool mc_admissible(double alpha, int m, double q);

struct McExperiment {
  std::vector<ErrorReport> reports;  ///< mean W^{m,q} error over seeds, per n
  std::vector<double> standard_errors;
  RateFit fit;
  double satisfaction_rate = 0.0;  ///< draws with coefficient bound <= 1.05 * cost
  std::size_t draws = 0;
};

/// W^{m,q}(Omega) error of sample_subnetwork(target, n, seed) averaged over
/// seeds, Omega = [-1, 1] for dim 1 and the half-disk B_1^+ for dim 2.
/// Throws InadmissiblePair and InvalidArgument (target below 1000 atoms).
McExperiment mc_rate_experiment(const NeuronEnsemble& target, std::span<const std::size_t> n_list,
                                int m, double q, int seeds, std::uint64_t base_seed = 0);

/// W^{m,q} norm of f - g on the experiment domain, exposed for tests.
double mc_sobolev_error(const NeuronEnsemble& f, const NeuronEnsemble& g, int m, double q);

/// CSV header and rows shared by every experiment.
std::string csv_header();
std::string csv_row(const ErrorReport& r);
std::string format_p(double p);

}  // namespace harmlab
