#include "harmlab/one_dim_barron.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <string>

#include "harmlab/errors.hpp"

namespace harmlab {

namespace {

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

double binomial(int n, int j) {
  double c = 1.0;
  for (int i = 1; i <= j; ++i) c = c * (n - j + i) / i;
  return c;
}

double weight(double t, int k) { return 1.0 + std::pow(std::fabs(t), k); }

double integrate_piece(const Function1D& f, double a, double b, double tol) {
  if (std::isfinite(a) && std::isfinite(b)) return integrate_adaptive(f, a, b, tol);
  return integrate_tangent(f, a, b, tol);
}

// Accumulated mass of dyadic shells [s + L 2^-(n+1), s + L 2^-n] on one side
// of a singular point, down to where the offset is no longer representable.
void check_divergence(const Function1D& integrand, double s, double L, double side) {
  constexpr int kMaxShells = 80;
  constexpr int kReferenceShell = 2;
  double accumulated = 0.0;
  double reference = 0.0;
  int shells = 0;
  for (int n = 0; n < kMaxShells; ++n) {
    const double outer = s + side * std::ldexp(L, -n);
    const double inner = s + side * std::ldexp(L, -n - 1);
    if (inner == s || inner == outer) break;
    accumulated += std::fabs(integrate_adaptive(integrand, std::min(inner, outer),
                                                std::max(inner, outer), 1e-8));
    if (n == kReferenceShell) reference = accumulated;
    shells = n + 1;
  }
  if (shells > kReferenceShell && reference > 0.0 && accumulated > kDivergenceGrowth * reference) {
    throw NumericalError(NumericalCode::DivergenceDetected,
                         "criterion integral keeps growing near x=" + std::to_string(s) +
                             " (shell mass " + std::to_string(accumulated) + " vs " +
                             std::to_string(reference) + ")");
  }
}

void validate(const DifferentiableFunction1D& df) {
  if (df.k < 1) throw ValidationError(ValidationCode::InvalidArgument, "k must be >= 1");
  if (!df.derivative) {
    throw ValidationError(ValidationCode::InvalidArgument, "derivative callable is missing");
  }
  if (!(df.lo < df.hi)) {
    throw ValidationError(ValidationCode::InvalidArgument, "support must satisfy lo < hi");
  }
}

struct PolynomialPart {
  std::vector<double> shifts;
  std::vector<double> betas;
};

// Solves sum_j beta_j (x - h_j)^k = sum_i c_i x^i for symmetric shifts h_j in [-1/2, 1/2].
PolynomialPart polynomial_part(int k, std::span<const double> taylor) {
  if (taylor.size() != static_cast<std::size_t>(k) + 1) {
    throw ValidationError(ValidationCode::InvalidArgument,
                          "need k + 1 = " + std::to_string(k + 1) + " Taylor coefficients");
  }
  PolynomialPart part;
  Eigen::MatrixXd A(k + 1, k + 1);
  Eigen::VectorXd c(k + 1);
  for (int j = 0; j <= k; ++j) part.shifts.push_back(0.5 * (2.0 * j / k - 1.0));
  for (int i = 0; i <= k; ++i) {
    c(i) = taylor[static_cast<std::size_t>(i)];
    for (int j = 0; j <= k; ++j) {
      A(i, j) = binomial(k, i) * std::pow(-part.shifts[static_cast<std::size_t>(j)], k - i);
    }
  }
  const Eigen::VectorXd beta = A.fullPivLu().solve(c);
  part.betas.assign(beta.data(), beta.data() + beta.size());
  return part;
}

struct Atom {
  double coef;
  double w;
  double b;
};

// Cell boundaries on [a, b] splitting the piecewise-constant density `mass`
// (sampled on equal fine cells) into n pieces of equal mass.
std::vector<double> equal_mass_edges(double a, double b, const std::vector<double>& mass,
                                     std::size_t n) {
  const std::size_t m = mass.size();
  const double h = (b - a) / static_cast<double>(m);
  std::vector<double> cumulative(m + 1, 0.0);
  for (std::size_t i = 0; i < m; ++i) cumulative[i + 1] = cumulative[i] + mass[i] * h;
  const double total = cumulative.back();
  std::vector<double> edges{a};
  std::size_t cell = 0;
  for (std::size_t j = 1; j < n; ++j) {
    const double target = total * static_cast<double>(j) / static_cast<double>(n);
    while (cell + 1 < m && cumulative[cell + 1] < target) ++cell;
    const double within = mass[cell] > 0.0 ? (target - cumulative[cell]) / (mass[cell] * h) : 0.0;
    edges.push_back(a + h * (static_cast<double>(cell) + std::clamp(within, 0.0, 1.0)));
  }
  edges.push_back(b);
  return edges;
}

}  // namespace

double barron_norm_upper(const DifferentiableFunction1D& df, double tol) {
  validate(df);
  const int k = df.k;
  auto integrand = [&df, k](double t) { return std::fabs(df.derivative(t)) * weight(t, k); };

  std::vector<double> breaks{df.lo, df.hi};
  for (double s : df.singular_points) {
    if (s >= df.lo && s <= df.hi) breaks.push_back(s);
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());

  for (double s : df.singular_points) {
    if (!(s >= df.lo && s <= df.hi)) continue;
    double gap = 1.0;
    for (double other : breaks) {
      if (other != s) gap = std::min(gap, std::fabs(other - s));
    }
    const double L = 0.5 * gap;
    if (s > df.lo) check_divergence(integrand, s, L, -1.0);
    if (s < df.hi) check_divergence(integrand, s, L, 1.0);
  }

  double total = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    total += integrate_piece(integrand, breaks[i], breaks[i + 1], tol);
  }
  return total;
}

double polynomial_part_cost(int k, std::span<const double> taylor_at_zero) {
  const auto part = polynomial_part(k, taylor_at_zero);
  double cost = 0.0;
  for (std::size_t j = 0; j < part.betas.size(); ++j) {
    cost += 2.0 * std::fabs(part.betas[j]) * std::pow(1.0 + std::fabs(part.shifts[j]), k);
  }
  return cost;
}

NeuronEnsemble ensemble_from_derivative(const DifferentiableFunction1D& df, std::size_t quad_nodes,
                                        std::span<const double> taylor_at_zero) {
  validate(df);
  if (!std::isfinite(df.lo) || !std::isfinite(df.hi) || df.lo > 0.0 || df.hi < 0.0) {
    throw ValidationError(ValidationCode::InvalidArgument,
                          "ensemble construction needs a bounded support containing 0");
  }
  if (quad_nodes == 0) throw ValidationError(ValidationCode::InvalidArgument, "quad_nodes must be >= 1");
  const int k = df.k;
  const double kfact = factorial(k);
  barron_norm_upper(df);  // surfaces DivergenceDetected before any discretization

  std::vector<Atom> atoms;
  const auto poly = polynomial_part(k, taylor_at_zero);
  const double reflect = (k % 2 == 0) ? 1.0 : -1.0;
  for (std::size_t j = 0; j < poly.betas.size(); ++j) {
    atoms.push_back({poly.betas[j], 1.0, -poly.shifts[j]});
    atoms.push_back({reflect * poly.betas[j], -1.0, poly.shifts[j]});
  }

  // Fine sampling of the mass density on each side of 0.
  const std::size_t fine = std::max<std::size_t>(4096, 64 * quad_nodes);
  const double length = df.hi - df.lo;
  struct Side {
    double a;
    double b;
    std::vector<double> mass;
    double total = 0.0;
  };
  std::vector<Side> sides;
  if (df.lo < 0.0) sides.push_back({df.lo, 0.0, {}});
  if (df.hi > 0.0) sides.push_back({0.0, df.hi, {}});
  double raw_total = 0.0;
  for (auto& side : sides) {
    const auto m = std::max<std::size_t>(
        16, static_cast<std::size_t>(std::ceil(fine * (side.b - side.a) / length)));
    const double h = (side.b - side.a) / static_cast<double>(m);
    side.mass.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
      const double t = side.a + h * (static_cast<double>(i) + 0.5);
      const double v = std::fabs(df.derivative(t)) * weight(t, k);
      side.mass[i] = std::isfinite(v) ? v : 0.0;
      raw_total += side.mass[i] * h;
    }
  }
  const double mean = raw_total / length;
  double padded_total = 0.0;
  for (auto& side : sides) {
    const double h = (side.b - side.a) / static_cast<double>(side.mass.size());
    for (double& v : side.mass) {
      v += mean;
      side.total += v * h;
    }
    padded_total += side.total;
  }
  if (raw_total > 0.0) {
    for (const auto& side : sides) {
      const auto n = std::max<std::size_t>(
          1, static_cast<std::size_t>(std::llround(quad_nodes * side.total / padded_total)));
      const auto edges = equal_mass_edges(side.a, side.b, side.mass, n);
      const bool positive = side.a >= 0.0;
      for (std::size_t c = 0; c + 1 < edges.size(); ++c) {
        if (!(edges[c] < edges[c + 1])) continue;
        const double cell = integrate_adaptive(df.derivative, edges[c], edges[c + 1], 1e-10);
        const double mid = 0.5 * (edges[c] + edges[c + 1]);
        if (positive) {
          atoms.push_back({cell / kfact, 1.0, -mid});
        } else {
          atoms.push_back({-reflect * cell / kfact, -1.0, mid});
        }
      }
    }
  }

  std::vector<double> magnitudes;
  for (const auto& atom : atoms) magnitudes.push_back(std::fabs(atom.coef));
  const double total = stable_sum(magnitudes);
  if (!(total > 0.0)) {
    return NeuronEnsemble({Neuron{0.0, {1.0, 0.0}, 0.0}}, {1.0}, static_cast<double>(k), 1);
  }
  std::vector<Neuron> neurons;
  std::vector<double> probs;
  for (const auto& atom : atoms) {
    if (atom.coef == 0.0) continue;
    neurons.push_back({std::copysign(total, atom.coef), {atom.w, 0.0}, atom.b});
    probs.push_back(std::fabs(atom.coef) / total);
  }
  return {std::move(neurons), std::move(probs), static_cast<double>(k), 1};
}

double xklogx_derivative(int k, double x) {
  if (k < 1) throw ValidationError(ValidationCode::InvalidArgument, "k must be >= 1");
  // Leibniz: sum over l of C(k+1, l) (x^k)^(l) (log x)^(k+1-l); the l = k+1 term vanishes.
  double sum = 0.0;
  for (int l = 0; l <= k; ++l) {
    const double power_part = factorial(k) / factorial(k - l) * std::pow(x, k - l);
    const int j = k + 1 - l;
    const double log_part = ((j % 2 == 1) ? 1.0 : -1.0) * factorial(j - 1) / std::pow(x, j);
    sum += binomial(k + 1, l) * power_part * log_part;
  }
  return sum;
}

double xklogx_criterion_integral(int k, double delta, double tol) {
  if (!(delta > 0.0 && delta < 1.0)) {
    throw ValidationError(ValidationCode::InvalidArgument, "delta must lie in (0, 1)");
  }
  std::vector<double> breaks{delta};
  for (double b = delta * 10.0; b < 1.0; b *= 10.0) breaks.push_back(b);
  breaks.push_back(1.0);
  return integrate_adaptive(
      [k](double x) { return std::fabs(xklogx_derivative(k, x)) * (1.0 + std::pow(x, k)); },
      breaks, tol);
}

RateFit log_divergence_diagnostic(int k, std::span<const double> deltas) {
  if (k < 1) throw ValidationError(ValidationCode::InvalidArgument, "k must be >= 1");
  if (deltas.size() < 3) {
    throw ValidationError(ValidationCode::InvalidArgument, "diagnostic needs >= 3 deltas");
  }
  std::vector<double> xs;
  std::vector<double> ys;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    const double d = deltas[i];
    if (!(d >= 1e-8 && d < 1.0) || (i > 0 && !(d < deltas[i - 1]))) {
      throw ValidationError(ValidationCode::InvalidArgument,
                            "deltas must be strictly decreasing in [1e-8, 1)");
    }
    xs.push_back(std::fabs(std::log(d)));
    ys.push_back(xklogx_criterion_integral(k, d));
  }
  return fit_linear(xs, ys);
}

}  // namespace harmlab
