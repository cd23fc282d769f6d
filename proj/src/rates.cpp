#include "harmlab/rates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "harmlab/ensemble_io.hpp"
#include "harmlab/errors.hpp"
#include "harmlab/log_derivatives.hpp"
#include "harmlab/parallel.hpp"
#include "harmlab/quadrature.hpp"

namespace harmlab {

namespace {

constexpr double kPi = std::numbers::pi;

// Radial profile g(r) = c r^k L(r) with L = log(1 + eps^2/r^2), c = -1/(2 pi),
// and its first two derivatives.
struct Profile {
  double g;
  double g1;
  double g2;
};

Profile radial_profile(double r, double eps, int k) {
  const double c = -1.0 / (2.0 * kPi);
  const double e2 = eps * eps;
  const double r2 = r * r;
  const double L = std::log1p(e2 / r2);
  const double L1 = -2.0 * e2 / (r * (r2 + e2));
  const double L2 = 2.0 * e2 * (3.0 * r2 + e2) / (r2 * (r2 + e2) * (r2 + e2));
  const double rk = std::pow(r, k);
  const double rk1 = std::pow(r, k - 1);
  const double rk2 = k >= 2 ? std::pow(r, k - 2) : 1.0 / r;
  Profile out;
  out.g = c * rk * L;
  out.g1 = c * (k * rk1 * L + rk * L1);
  out.g2 = c * (k * (k - 1) * rk2 * L + 2.0 * k * rk1 * L1 + rk * L2);
  return out;
}

void check_gate(double value, double refined, const std::string& what) {
  const double scale = std::max(std::fabs(refined), 1e-300);
  if (std::fabs(value - refined) > kGateTolerance * scale) {
    throw NumericalError(NumericalCode::GateFailed,
                         what + ": grid value " + format_double(value) + " vs refined " +
                             format_double(refined) + " differ by more than 0.5%");
  }
}

void check_eps(std::span<const double> eps_list, double R) {
  if (eps_list.size() < 3) {
    throw ValidationError(ValidationCode::InvalidArgument, "need at least 3 epsilon values");
  }
  for (double e : eps_list) {
    if (!(e > 0.0)) throw ValidationError(ValidationCode::NonpositiveEpsilon, "epsilon must be > 0");
    if (e > R / 10.0 * (1.0 + 1e-12)) {
      throw ValidationError(ValidationCode::InvalidArgument,
                            "epsilon " + format_double(e) + " exceeds R/10");
    }
  }
}

double normal_draw(std::mt19937_64& rng) {
  // Box-Muller with our own uniform mapping so results do not depend on the
  // standard library's distribution implementation.
  const double u1 = 1.0 - unit_interval(rng());
  const double u2 = unit_interval(rng());
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
}

struct Domain {
  std::vector<double> x;
  std::vector<double> y;
  std::vector<double> w;
};

Domain mc_domain(int dim) {
  Domain d;
  if (dim == 1) {
    const auto rule = composite_gauss_legendre(512, 4, -1.0, 1.0);
    d.x = rule.nodes;
    d.y.assign(rule.size(), 0.0);
    d.w = rule.weights;
  } else {
    const auto rule = halfdisk_rule(GridSpec(1.0, 12, 12, 1.0));
    d.x = rule.x;
    d.y = rule.y;
    d.w = rule.w;
  }
  return d;
}

// Multi-indices (l1, l2) with l1 + l2 = j in the given dimension.
std::vector<std::array<int, 2>> multi_indices(int dim, int j) {
  std::vector<std::array<int, 2>> out;
  if (dim == 1) {
    out.push_back({j, 0});
  } else {
    for (int l = j; l >= 0; --l) out.push_back({l, j - l});
  }
  return out;
}

double partial_value(const NeuronEnsemble& e, double x, double y, std::array<int, 2> idx) {
  const int order = idx[0] + idx[1];
  double sum = 0.0;
  const auto& ns = e.neurons();
  const auto& ps = e.probs();
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const auto& n = ns[i];
    const double z = n.w[0] * x + n.w[1] * y + n.b;
    if (!(z > 0.0)) continue;
    double coef = ps[i] * n.a;
    if (idx[0] > 0) coef *= std::pow(n.w[0], idx[0]);
    if (idx[1] > 0) coef *= std::pow(n.w[1], idx[1]);
    sum += coef * (order == 0 ? activation(z, e.alpha()) : activation_derivative(z, e.alpha(), order));
  }
  return sum;
}

// Values of every partial derivative of order <= m at every domain node.
std::vector<std::vector<double>> partial_table(const NeuronEnsemble& e, const Domain& d, int m) {
  std::vector<std::vector<double>> table;
  for (int j = 0; j <= m; ++j) {
    for (const auto& idx : multi_indices(e.dim(), j)) {
      table.push_back(parallel_map(d.x.size(), [&](std::size_t i) {
        return partial_value(e, d.x[i], d.y[i], idx);
      }));
    }
  }
  return table;
}

double sobolev_distance(const std::vector<std::vector<double>>& a,
                        const std::vector<std::vector<double>>& b, const Domain& d, double q) {
  double sum = 0.0;
  for (std::size_t t = 0; t < a.size(); ++t) {
    for (std::size_t i = 0; i < d.w.size(); ++i) {
      const double diff = std::fabs(a[t][i] - b[t][i]);
      sum += d.w[i] * (q == 2.0 ? diff * diff : std::pow(diff, q));
    }
  }
  return std::pow(sum, 1.0 / q);
}

}  // namespace

std::vector<double> log_spaced(double a, double b, int n) {
  if (n < 1 || !(a > 0.0) || !(b > 0.0)) {
    throw ValidationError(ValidationCode::InvalidArgument, "log_spaced needs n >= 1 and a, b > 0");
  }
  if (n == 1) return {a};
  std::vector<double> out;
  const double la = std::log(a);
  const double lb = std::log(b);
  for (int i = 0; i < n; ++i) out.push_back(std::exp(la + (lb - la) * i / (n - 1)));
  out.front() = a;
  out.back() = b;
  return out;
}

double reg_difference(double x, double y, double eps, int k) {
  const double r = std::hypot(x, y);
  if (r == 0.0) return 0.0;
  const double phi = upper_argument(x, y);
  return radial_profile(r, eps, k).g * std::sin(k * phi);
}

std::array<double, 2> reg_difference_gradient(double x, double y, double eps, int k) {
  const double r = std::hypot(x, y);
  if (r == 0.0) return {0.0, 0.0};
  const double phi = upper_argument(x, y);
  const auto g = radial_profile(r, eps, k);
  const double er = g.g1 * std::sin(k * phi);
  const double ephi = k * g.g / r * std::cos(k * phi);
  const double c = x / r;
  const double s = y / r;
  return {er * c - ephi * s, er * s + ephi * c};
}

std::array<double, 3> reg_difference_hessian(double x, double y, double eps, int k) {
  const double r = std::hypot(x, y);
  if (r == 0.0) return {0.0, 0.0, 0.0};
  const double phi = upper_argument(x, y);
  const auto g = radial_profile(r, eps, k);
  const double sk = std::sin(k * phi);
  const double ck = std::cos(k * phi);
  const double hrr = g.g2 * sk;
  const double hpp = (g.g1 / r - k * k * g.g / (r * r)) * sk;
  const double hrp = (k * g.g1 / r - k * g.g / (r * r)) * ck;
  const double c = x / r;
  const double s = y / r;
  // Rotate the polar-frame tensor back to Cartesian axes.
  const double hxx = c * c * hrr - 2.0 * c * s * hrp + s * s * hpp;
  const double hyy = s * s * hrr + 2.0 * c * s * hrp + c * c * hpp;
  const double hxy = c * s * (hrr - hpp) + (c * c - s * s) * hrp;
  return {hxx, hxy, hyy};
}

double reg_difference_magnitude(double x, double y, double eps, int k, int order) {
  switch (order) {
    case 0: return std::fabs(reg_difference(x, y, eps, k));
    case 1: {
      const auto g = reg_difference_gradient(x, y, eps, k);
      return std::hypot(g[0], g[1]);
    }
    case 2: {
      const auto h = reg_difference_hessian(x, y, eps, k);
      return std::sqrt(h[0] * h[0] + 2.0 * h[1] * h[1] + h[2] * h[2]);
    }
    default:
      throw ValidationError(ValidationCode::InvalidArgument, "derivative order must be 0, 1 or 2");
  }
}

std::optional<double> reg_critical_radius(int k, double eps) {
  // In a = eps^2/r^2 the condition reads h(a) = k log(1 + a) - 2a/(1 + a) = 0.
  auto h = [k](double a) { return k * std::log1p(a) - 2.0 * a / (1.0 + a); };
  double lo = 1e-12;
  double hi = 1e12;
  if (h(lo) * h(hi) > 0.0 || h(lo) >= 0.0) return std::nullopt;
  for (int it = 0; it < 200; ++it) {
    const double mid = std::sqrt(lo * hi);
    if (h(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return eps / std::sqrt(std::sqrt(lo * hi));
}

RegExperiment reg_error_experiment(int k, double R, double p, int order,
                                   std::span<const double> eps_list, const GridSpec& grid) {
  if (k < 2) {
    throw ValidationError(ValidationCode::KTooSmall, "k = 1 is excluded; the rate differs");
  }
  if (order < 0 || order > 2) {
    throw ValidationError(ValidationCode::InvalidArgument, "derivative order must be 0, 1 or 2");
  }
  if (!(p >= 1.0)) throw ValidationError(ValidationCode::InvalidArgument, "p must be >= 1");
  if (std::fabs(grid.radius() - R) > 1e-12 * R) {
    throw ValidationError(ValidationCode::InvalidGrid, "grid radius must equal R");
  }
  check_eps(eps_list, R);
  RegExperiment out;
  std::vector<double> values;
  for (double eps : eps_list) {
    const ScalarField f = [eps, k, order](double x, double y) {
      return reg_difference_magnitude(x, y, eps, k, order);
    };
    double value = 0.0;
    double refined = 0.0;
    if (std::isinf(p)) {
      const auto loc = sup_halfdisk(f, grid);
      value = loc.value;
      refined = sup_halfdisk(f, grid.refined()).value;
      out.argmax_r.push_back(loc.r);
    } else {
      value = norm_lp_halfdisk(f, grid, p);
      refined = norm_lp_halfdisk(f, grid.refined(), p);
    }
    check_gate(value, refined, "reg eps=" + format_double(eps));
    out.reports.push_back({"reg", k, R, p, order, eps, value, grid});
    out.refined_values.push_back(refined);
    out.ratios.push_back(value / (std::pow(R, k - 2) * eps * eps));
    values.push_back(value);
  }
  out.fit = fit_loglog(eps_list, values);
  return out;
}

double model_eps_squared(double eps) { return eps * eps; }
double model_eps_squared_log(double eps) { return eps * eps * std::fabs(std::log(eps)); }

ModelFit fit_scaling_model(std::span<const double> eps, std::span<const double> values,
                           double (*model)(double)) {
  if (eps.size() != values.size() || eps.empty()) {
    throw ValidationError(ValidationCode::InvalidArgument, "model fit needs matching data");
  }
  std::vector<double> logs;
  for (std::size_t i = 0; i < eps.size(); ++i) logs.push_back(std::log(values[i] / model(eps[i])));
  double mean = 0.0;
  for (double l : logs) mean += l;
  mean /= static_cast<double>(logs.size());
  ModelFit fit;
  fit.constant = std::exp(mean);
  for (double l : logs) fit.residual += (l - mean) * (l - mean);
  return fit;
}

SobolevExperiment sobolev_lognorm_experiment(int k, double R, std::span<const double> eps_list,
                                             const GridSpec& grid, int order) {
  if (k != 2 && k != 3) {
    throw ValidationError(ValidationCode::InvalidArgument, "Sobolev experiment supports k = 2, 3");
  }
  if (order < 0) order = k + 2;
  if (order < 1 || order > k + 3) {
    throw ValidationError(ValidationCode::InvalidArgument, "seminorm order must be in 1..k+3");
  }
  if (std::fabs(grid.radius() - R) > 1e-12 * R) {
    throw ValidationError(ValidationCode::InvalidGrid, "grid radius must equal R");
  }
  check_eps(eps_list, R);
  const RegularizedImagPart ui(k, order);
  SobolevExperiment out;
  out.order = order;
  std::vector<double> xs;
  std::vector<double> values;
  for (double eps : eps_list) {
    const ScalarField f = [&ui, eps, order](double x, double y) {
      double sum = 0.0;
      for (int l = 0; l <= order; ++l) {
        const double d = ui.derivative(l, order - l, x, y, eps);
        sum += d * d;
      }
      return sum;
    };
    const double value = integrate_halfdisk(f, grid);
    const double refined = integrate_halfdisk(f, grid.refined());
    check_gate(value, refined, "sobolev eps=" + format_double(eps));
    out.reports.push_back({"sobolev", k, R, 2.0, order, eps, value, grid});
    xs.push_back(std::fabs(std::log(eps)));
    values.push_back(value);
  }
  out.log_fit = fit_linear(xs, values);
  out.power_fit = fit_loglog(eps_list, values);
  return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

NeuronEnsemble mc_target(double alpha, std::size_t atoms, std::uint64_t seed, int dim) {
  if (atoms == 0) throw ValidationError(ValidationCode::InvalidArgument, "target needs atoms");
  std::mt19937_64 rng(splitmix64(seed));
  std::vector<Neuron> neurons;
  neurons.reserve(atoms);
  for (std::size_t i = 0; i < atoms; ++i) {
    Neuron n;
    n.a = normal_draw(rng);
    double l1 = 0.0;
    do {
      n.w[0] = 2.0 * unit_interval(rng()) - 1.0;
      n.w[1] = dim == 2 ? 2.0 * unit_interval(rng()) - 1.0 : 0.0;
      n.b = 2.0 * unit_interval(rng()) - 1.0;
      l1 = std::fabs(n.w[0]) + std::fabs(n.w[1]) + std::fabs(n.b);
    } while (!(l1 > 1e-12));
    n.w[0] /= l1;
    n.w[1] /= l1;
    n.b /= l1;
    neurons.push_back(n);
  }
  return NeuronEnsemble::uniform(std::move(neurons), alpha, dim);
}

bool mc_admissible(double alpha, int m, double q) {
  if (!(q >= 2.0) || m < 0 || !(alpha > 0.0)) return false;
  const int k = static_cast<int>(std::ceil(alpha)) - 1;
  const double gamma = alpha - k;
  return m <= k || (m == k + 1 && (1.0 - gamma) * q < 1.0);
}

double mc_sobolev_error(const NeuronEnsemble& f, const NeuronEnsemble& g, int m, double q) {
  if (f.dim() != g.dim()) throw ValidationError(ValidationCode::DimensionMismatch, "dims differ");
  const auto domain = mc_domain(f.dim());
  return sobolev_distance(partial_table(f, domain, m), partial_table(g, domain, m), domain, q);
}

McExperiment mc_rate_experiment(const NeuronEnsemble& target, std::span<const std::size_t> n_list,
                                int m, double q, int seeds, std::uint64_t base_seed) {
  if (!mc_admissible(target.alpha(), m, q)) {
    throw ValidationError(ValidationCode::InadmissiblePair,
                          "(m=" + std::to_string(m) + ", q=" + format_double(q) +
                              ") is not admissible for alpha=" + format_double(target.alpha()));
  }
  if (target.size() < 1000) {
    throw ValidationError(ValidationCode::InvalidArgument, "target needs at least 1000 atoms");
  }
  if (seeds < 1 || n_list.size() < 3) {
    throw ValidationError(ValidationCode::InvalidArgument, "need seeds >= 1 and >= 3 values of n");
  }
  const auto domain = mc_domain(target.dim());
  const auto reference = partial_table(target, domain, m);
  const double cost = barron_cost(target);
  const int k = static_cast<int>(std::ceil(target.alpha())) - 1;

  McExperiment out;
  std::size_t satisfied = 0;
  std::vector<double> ns;
  std::vector<double> means;
  for (std::size_t n : n_list) {
    std::vector<double> errors;
    for (int s = 0; s < seeds; ++s) {
      const std::uint64_t seed = splitmix64(base_seed ^ splitmix64(n * 1000003ULL + s));
      const auto sub = sample_subnetwork(target, n, seed);
      errors.push_back(sobolev_distance(reference, partial_table(sub, domain, m), domain, q));
      if (coefficient_bound(sub) <= cost * 1.05) ++satisfied;
      ++out.draws;
    }
    double mean = 0.0;
    for (double e : errors) mean += e;
    mean /= static_cast<double>(errors.size());
    double var = 0.0;
    for (double e : errors) var += (e - mean) * (e - mean);
    const double se = errors.size() > 1
                          ? std::sqrt(var / static_cast<double>(errors.size() - 1) /
                                      static_cast<double>(errors.size()))
                          : 0.0;
    out.reports.push_back({"mc", k, 1.0, q, m, static_cast<double>(n), mean, GridSpec(1.0, 8, 8, 1.0)});
    out.standard_errors.push_back(se);
    ns.push_back(static_cast<double>(n));
    means.push_back(mean);
  }
  out.fit = fit_loglog(ns, means);
  out.satisfaction_rate = static_cast<double>(satisfied) / static_cast<double>(out.draws);
  return out;
}

std::string format_p(double p) { return std::isinf(p) ? "inf" : format_double(p); }

std::string csv_header() { return "experiment,k,R,p,order,knob,value"; }

std::string csv_row(const ErrorReport& r) {
  return r.experiment + "," + std::to_string(r.k) + "," + format_double(r.R) + "," +
         format_p(r.p) + "," + std::to_string(r.order) + "," + format_double(r.knob) + "," +
         format_double(r.value);
}

}  // namespace harmlab
