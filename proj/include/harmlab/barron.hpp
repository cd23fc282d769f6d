#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace harmlab {

/// One parameter triple (a, w, b). For dim = 1 only w[0] is used and w[1] is 0.
struct Neuron {
  double a = 0.0;
  std::array<double, 2> w{0.0, 0.0};
  double b = 0.0;
};

/// A finitely supported probability measure over neurons together with the
/// activation power alpha: the function x -> sum_i p_i a_i sigma_alpha(w_i . x + b_i).
class NeuronEnsemble {
 public:
  /// Throws ValidationError(InvalidEnsemble) for negative or non-normalized
  /// probabilities (tolerance 1e-12), non-finite parameters, size mismatch or
  /// a nonzero w[1] when dim = 1; InvalidArgument for alpha < 0 or dim not in {1, 2}.
  NeuronEnsemble(std::vector<Neuron> neurons, std::vector<double> probs, double alpha, int dim);

  /// All neurons with probability 1/n.
  static NeuronEnsemble uniform(std::vector<Neuron> neurons, double alpha, int dim);

  const std::vector<Neuron>& neurons() const noexcept { return neurons_; }
  const std::vector<double>& probs() const noexcept { return probs_; }
  double alpha() const noexcept { return alpha_; }
  int dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return neurons_.size(); }

 private:
  std::vector<Neuron> neurons_;
  std::vector<double> probs_;
  double alpha_;
  int dim_;
};

/// sigma_alpha(z) = max(z, 0)^alpha, with sigma_0(z) = 1{z > 0}.
double activation(double z, double alpha);

/// d^m/dz^m sigma_alpha(z) = alpha (alpha - 1) ... (alpha - m + 1) sigma_{alpha - m}(z).
/// Requires m < alpha + 1. At m = alpha the result is a scaled indicator; for
/// alpha < m < alpha + 1 it is a locally integrable negative power of z > 0.
double activation_derivative(double z, double alpha, int m);

/// Throws ValidationError(DimensionMismatch) if x.size() != e.dim().
double ensemble_eval(const NeuronEnsemble& e, std::span<const double> x);
double ensemble_eval(const NeuronEnsemble& e, double x);
double ensemble_eval(const NeuronEnsemble& e, double x, double y);

/// m-th derivative of a one-dimensional ensemble, neuron by neuron.
double ensemble_derivative(const NeuronEnsemble& e, double x, int m);

/// sum_i p_i |a_i| (|w_i| + |b_i|)^alpha with the Euclidean |w|.
double barron_cost(const NeuronEnsemble& e);

/// Probability rule for the Cauchy distribution: nodes t_j, weights q_j summing to 1.
struct CauchyRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Deterministic rule: composite Gauss-Legendre in s in (-1, 1), mapped by
/// theta = (pi/2) sign(s) (1 - (1 - |s|)^m) and t = tan(theta). The grading
/// m = max(2, 2 / (1 - alpha)) for alpha > 0 (m = 1 for alpha = 0) keeps the
/// integrand of a ReLU^alpha neuron smooth near theta = +-pi/2.
CauchyRule cauchy_quadrature(std::size_t cells, double alpha, std::size_t points_per_cell = 1);

/// n iid draws t = tan(pi (U - 1/2)) with equal weights.
CauchyRule cauchy_samples(std::size_t n, std::uint64_t seed);

/// Default deterministic lift resolution.
inline constexpr std::size_t kDefaultCauchyNodes = 201;

/// integral of (1 + |t|)^alpha / (pi (1 + t^2)) over the real line, alpha < 1.
double cauchy_moment(double alpha);

/// Push-forward of e1 x Cauchy along (a, w, b; t) -> (a, (w, t w), b).
/// Throws DimensionMismatch unless e1 is one-dimensional and AlphaTooLarge
/// for alpha >= 1.
NeuronEnsemble lift_ensemble(const NeuronEnsemble& e1, const CauchyRule& rule);

/// Restriction t -> f(x0 + t v): (a, w, b) -> (a, w . v, w . x0 + b).
/// Throws ZeroDirection for v = 0 and DimensionMismatch unless dim = 2.
NeuronEnsemble slice_ensemble(const NeuronEnsemble& e, std::array<double, 2> x0,
                              std::array<double, 2> v);

/// alpha-homogeneous extension (x, y) -> y^alpha f(x / y): (a, w, b) -> (a, (w, b), 0).
NeuronEnsemble homogeneous_extend(const NeuronEnsemble& e1);

/// n iid draws from the categorical distribution of e, returned with the 1/n
/// convention (uniform probabilities, outer weights unchanged).
NeuronEnsemble sample_subnetwork(const NeuronEnsemble& e, std::size_t n, std::uint64_t seed);

/// (1/n) sum |a_i| (|w_i| + |b_i|)^alpha of a sampled network; equal to its barron_cost.
double coefficient_bound(const NeuronEnsemble& subnetwork);

/// Uniform double in [0, 1) from the top 53 bits of a 64-bit word.
inline double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Compensated (Neumaier) sum.
double stable_sum(std::span<const double> values);

}  // namespace harmlab
