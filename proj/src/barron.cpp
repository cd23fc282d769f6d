#include "harmlab/barron.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "harmlab/errors.hpp"
#include "harmlab/quadrature.hpp"

namespace harmlab {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kProbTolerance = 1e-12;

double norm_w(const Neuron& n) { return std::hypot(n.w[0], n.w[1]); }

void require_dim(const NeuronEnsemble& e, int dim, const char* what) {
  if (e.dim() != dim) {
    throw ValidationError(ValidationCode::DimensionMismatch,
                          std::string(what) + " needs a " + std::to_string(dim) +
                              "-dimensional ensemble, got dim=" + std::to_string(e.dim()));
  }
}

}  // namespace

double stable_sum(std::span<const double> values) {
  double sum = 0.0;
  double carry = 0.0;
  for (double v : values) {
    const double t = sum + v;
    if (std::fabs(sum) >= std::fabs(v)) {
      carry += (sum - t) + v;
    } else {
      carry += (v - t) + sum;
    }
    sum = t;
  }
  return sum + carry;
}

NeuronEnsemble::NeuronEnsemble(std::vector<Neuron> neurons, std::vector<double> probs, double alpha,
                               int dim)
    : neurons_(std::move(neurons)), probs_(std::move(probs)), alpha_(alpha), dim_(dim) {
  if (dim_ != 1 && dim_ != 2) {
    throw ValidationError(ValidationCode::InvalidArgument, "ensemble dimension must be 1 or 2");
  }
  if (!(alpha_ >= 0.0) || !std::isfinite(alpha_)) {
    throw ValidationError(ValidationCode::InvalidArgument, "activation power must be >= 0");
  }
  if (neurons_.empty() || neurons_.size() != probs_.size()) {
    throw ValidationError(ValidationCode::InvalidEnsemble,
                          "ensemble needs one probability per neuron and at least one neuron");
  }
  for (std::size_t i = 0; i < neurons_.size(); ++i) {
    const auto& n = neurons_[i];
    if (!std::isfinite(n.a) || !std::isfinite(n.w[0]) || !std::isfinite(n.w[1]) ||
        !std::isfinite(n.b)) {
      throw ValidationError(ValidationCode::InvalidEnsemble,
                            "neuron " + std::to_string(i) + " has non-finite parameters");
    }
    if (dim_ == 1 && n.w[1] != 0.0) {
      throw ValidationError(ValidationCode::InvalidEnsemble,
                            "neuron " + std::to_string(i) + " has a second weight in dim 1");
    }
    if (!(probs_[i] >= 0.0)) {
      throw ValidationError(ValidationCode::InvalidEnsemble,
                            "probability " + std::to_string(i) + " is negative");
    }
  }
  const double total = stable_sum(probs_);
  if (std::fabs(total - 1.0) > kProbTolerance) {
    throw ValidationError(ValidationCode::InvalidEnsemble,
                          "probabilities sum to " + std::to_string(total) + ", not 1");
  }
}

NeuronEnsemble NeuronEnsemble::uniform(std::vector<Neuron> neurons, double alpha, int dim) {
  const std::size_t n = neurons.size();
  std::vector<double> probs(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n));
  return {std::move(neurons), std::move(probs), alpha, dim};
}

double activation(double z, double alpha) {
  if (!(z > 0.0)) return 0.0;
  if (alpha == 0.0) return 1.0;
  if (alpha == 1.0) return z;
  if (alpha == 2.0) return z * z;
  return std::pow(z, alpha);
}

double activation_derivative(double z, double alpha, int m) {
  if (m < 0 || static_cast<double>(m) >= alpha + 1.0) {
    throw ValidationError(ValidationCode::InvalidArgument,
                          "derivative order " + std::to_string(m) + " exceeds activation power");
  }
  double factor = 1.0;
  for (int i = 0; i < m; ++i) factor *= alpha - i;
  return factor * activation(z, alpha - m);
}

double ensemble_eval(const NeuronEnsemble& e, std::span<const double> x) {
  if (x.size() != static_cast<std::size_t>(e.dim())) {
    throw ValidationError(ValidationCode::DimensionMismatch,
                          "point has " + std::to_string(x.size()) + " coordinates, ensemble dim=" +
                              std::to_string(e.dim()));
  }
  return e.dim() == 1 ? ensemble_eval(e, x[0]) : ensemble_eval(e, x[0], x[1]);
}

double ensemble_eval(const NeuronEnsemble& e, double x) {
  require_dim(e, 1, "scalar evaluation");
  const auto& ns = e.neurons();
  const auto& ps = e.probs();
  double sum = 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    sum += ps[i] * ns[i].a * activation(ns[i].w[0] * x + ns[i].b, e.alpha());
  }
  return sum;
}

double ensemble_eval(const NeuronEnsemble& e, double x, double y) {
  require_dim(e, 2, "planar evaluation");
  const auto& ns = e.neurons();
  const auto& ps = e.probs();
  double sum = 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    sum += ps[i] * ns[i].a * activation(ns[i].w[0] * x + ns[i].w[1] * y + ns[i].b, e.alpha());
  }
  return sum;
}

double ensemble_derivative(const NeuronEnsemble& e, double x, int m) {
  require_dim(e, 1, "derivative");
  const auto& ns = e.neurons();
  const auto& ps = e.probs();
  double sum = 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double w = ns[i].w[0];
    sum += ps[i] * ns[i].a * std::pow(w, m) * activation_derivative(w * x + ns[i].b, e.alpha(), m);
  }
  return sum;
}

double barron_cost(const NeuronEnsemble& e) {
  const auto& ns = e.neurons();
  const auto& ps = e.probs();
  double sum = 0.0;
  for (std::size_t i = 0; i < ns.size(); ++i) {
    if (ns[i].a == 0.0 || ps[i] == 0.0) continue;
    sum += ps[i] * std::fabs(ns[i].a) * std::pow(norm_w(ns[i]) + std::fabs(ns[i].b), e.alpha());
  }
  return sum;
}

CauchyRule cauchy_quadrature(std::size_t cells, double alpha, std::size_t points_per_cell) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw ValidationError(ValidationCode::AlphaTooLarge, "Cauchy lift needs 0 <= alpha < 1");
  }
  const double m = alpha > 0.0 ? std::max(2.0, 2.0 / (1.0 - alpha)) : 1.0;
  const auto base = composite_gauss_legendre(cells, points_per_cell, -1.0, 1.0);
  CauchyRule rule;
  rule.nodes.reserve(base.size());
  rule.weights.reserve(base.size());
  for (std::size_t j = 0; j < base.size(); ++j) {
    const double s = base.nodes[j];
    const double gap = 1.0 - std::fabs(s);
    const double theta = std::copysign(0.5 * kPi * (1.0 - std::pow(gap, m)), s);
    const double dtheta = 0.5 * kPi * m * std::pow(gap, m - 1.0);
    rule.nodes.push_back(std::tan(theta));
    rule.weights.push_back(base.weights[j] * dtheta / kPi);
  }
  const double total = stable_sum(rule.weights);
  for (double& w : rule.weights) w /= total;
  return rule;
}

CauchyRule cauchy_samples(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CauchyRule rule;
  rule.nodes.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = unit_interval(rng());
    rule.nodes.push_back(std::tan(kPi * (u - 0.5)));
  }
  rule.weights.assign(n, n == 0 ? 0.0 : 1.0 / static_cast<double>(n));
  return rule;
}

double cauchy_moment(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) {
    throw ValidationError(ValidationCode::AlphaTooLarge, "Cauchy moment diverges for alpha >= 1");
  }
  // Symmetric: 2/pi times the integral over (0, inf). On (1, inf) use t = 1/u
  // and then u = v^(1/(1-alpha)), which removes the u^-alpha endpoint factor.
  const double inner = integrate_adaptive(
      [alpha](double t) { return std::pow(1.0 + t, alpha) / (1.0 + t * t); }, 0.0, 1.0, 1e-13);
  const double beta = 1.0 / (1.0 - alpha);
  const double outer = integrate_adaptive(
      [alpha, beta](double v) {
        const double u = std::pow(v, beta);
        return beta * std::pow(1.0 + u, alpha) / (1.0 + u * u);
      },
      0.0, 1.0, 1e-13);
  return 2.0 / kPi * (inner + outer);
}

NeuronEnsemble lift_ensemble(const NeuronEnsemble& e1, const CauchyRule& rule) {
  require_dim(e1, 1, "lift");
  if (e1.alpha() >= 1.0) {
    throw ValidationError(ValidationCode::AlphaTooLarge,
                          "lift needs alpha < 1, got " + std::to_string(e1.alpha()));
  }
  if (rule.nodes.empty() || rule.nodes.size() != rule.weights.size()) {
    throw ValidationError(ValidationCode::InvalidArgument, "Cauchy rule is empty or malformed");
  }
  std::vector<Neuron> neurons;
  std::vector<double> probs;
  neurons.reserve(e1.size() * rule.nodes.size());
  probs.reserve(e1.size() * rule.nodes.size());
  for (std::size_t i = 0; i < e1.size(); ++i) {
    const auto& n = e1.neurons()[i];
    for (std::size_t j = 0; j < rule.nodes.size(); ++j) {
      neurons.push_back({n.a, {n.w[0], rule.nodes[j] * n.w[0]}, n.b});
      probs.push_back(e1.probs()[i] * rule.weights[j]);
    }
  }
  return {std::move(neurons), std::move(probs), e1.alpha(), 2};
}

NeuronEnsemble slice_ensemble(const NeuronEnsemble& e, std::array<double, 2> x0,
                              std::array<double, 2> v) {
  require_dim(e, 2, "slice");
  if (v[0] == 0.0 && v[1] == 0.0) {
    throw ValidationError(ValidationCode::ZeroDirection, "slice direction must be nonzero");
  }
  std::vector<Neuron> neurons;
  neurons.reserve(e.size());
  for (const auto& n : e.neurons()) {
    neurons.push_back({n.a,
                       {n.w[0] * v[0] + n.w[1] * v[1], 0.0},
                       n.w[0] * x0[0] + n.w[1] * x0[1] + n.b});
  }
  return {std::move(neurons), e.probs(), e.alpha(), 1};
}

NeuronEnsemble homogeneous_extend(const NeuronEnsemble& e1) {
  require_dim(e1, 1, "homogeneous extension");
  std::vector<Neuron> neurons;
  neurons.reserve(e1.size());
  for (const auto& n : e1.neurons()) neurons.push_back({n.a, {n.w[0], n.b}, 0.0});
  return {std::move(neurons), e1.probs(), e1.alpha(), 2};
}

NeuronEnsemble sample_subnetwork(const NeuronEnsemble& e, std::size_t n, std::uint64_t seed) {
  if (n == 0) throw ValidationError(ValidationCode::InvalidArgument, "subnetwork needs n >= 1");
  std::vector<double> cumulative(e.size());
  double running = 0.0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    running += e.probs()[i];
    cumulative[i] = running;
  }
  std::mt19937_64 rng(seed);
  std::vector<Neuron> picked;
  picked.reserve(n);
  for (std::size_t draw = 0; draw < n; ++draw) {
    const double u = unit_interval(rng()) * running;
    auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    if (it == cumulative.end()) --it;
    picked.push_back(e.neurons()[static_cast<std::size_t>(it - cumulative.begin())]);
  }
  return NeuronEnsemble::uniform(std::move(picked), e.alpha(), e.dim());
}

double coefficient_bound(const NeuronEnsemble& subnetwork) { return barron_cost(subnetwork); }

}  // namespace harmlab
