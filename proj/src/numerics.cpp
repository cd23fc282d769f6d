#include "harmlab/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "harmlab/errors.hpp"
#include "harmlab/parallel.hpp"

namespace harmlab {

namespace {

constexpr double kPi = std::numbers::pi;

double binomial(int n, int j) {
  double c = 1.0;
  for (int i = 1; i <= j; ++i) c = c * (n - j + i) / i;
  return c;
}

double central_difference(const Function1D& f, double x, int order, double h) {
  double sum = 0.0;
  for (int j = 0; j <= order; ++j) {
    const double shift = (0.5 * order - j) * h;
    const double sign = (j % 2 == 0) ? 1.0 : -1.0;
    sum += sign * binomial(order, j) * f(x + shift);
  }
  return sum / std::pow(h, order);
}

void require_finite(double v, double r, double phi) {
  if (!std::isfinite(v)) {
    throw NumericalError(NumericalCode::NonFiniteSample,
                         "field is not finite at r=" + std::to_string(r) +
                             ", phi=" + std::to_string(phi));
  }
}

double eval_polar(const ScalarField& f, double r, double phi) {
  const double v = f(r * std::cos(phi), r * std::sin(phi));
  require_finite(v, r, phi);
  return v;
}

// Sum over angular cells of w_phi * g(phi) for one radius, with the tensor Gauss rule.
template <typename G>
double angular_sum(const GridSpec& grid, const QuadratureRule& unit, G&& g) {
  const double dphi = kPi / grid.nphi();
  double sum = 0.0;
  for (int i = 0; i < grid.nphi(); ++i) {
    const double left = dphi * i;
    for (std::size_t q = 0; q < unit.size(); ++q) {
      sum += dphi * unit.weights[q] * g(left + dphi * unit.nodes[q]);
    }
  }
  return sum;
}

template <typename G>
double halfdisk_sum(const GridSpec& grid, G&& g) {
  const auto unit = gauss_legendre(kHalfDiskGaussPoints, 0.0, 1.0);
  return ordered_sum(static_cast<std::size_t>(grid.nr()), [&](std::size_t cell) {
    const double r0 = grid.radial_edge(static_cast<int>(cell));
    const double r1 = grid.radial_edge(static_cast<int>(cell) + 1);
    const double dr = r1 - r0;
    double sum = 0.0;
    for (std::size_t q = 0; q < unit.size(); ++q) {
      const double r = r0 + dr * unit.nodes[q];
      sum += dr * unit.weights[q] * r * angular_sum(grid, unit, [&](double phi) { return g(r, phi); });
    }
    return sum;
  });
}

}  // namespace

double fd_laplacian(const ScalarField& f, const HalfPlanePoint& p, double h) {
  if (!(h > 0.0)) throw ValidationError(ValidationCode::InvalidArgument, "step must be positive");
  if (!(p.y() > 2.0 * h)) {
    throw ValidationError(ValidationCode::StencilLeavesDomain,
                          "stencil at y=" + std::to_string(p.y()) + " with h=" +
                              std::to_string(h) + " reaches the boundary");
  }
  const double x = p.x();
  const double y = p.y();
  return (f(x + h, y) + f(x - h, y) + f(x, y + h) + f(x, y - h) - 4.0 * f(x, y)) / (h * h);
}

double fd_derivative(const Function1D& f, double x, int order, double h) {
  if (order < 1 || order > 5) {
    throw ValidationError(ValidationCode::InvalidArgument, "derivative order must be in [1, 5]");
  }
  if (!(h > 0.0)) throw ValidationError(ValidationCode::InvalidArgument, "step must be positive");
  const double coarse = central_difference(f, x, order, h);
  const double fine = central_difference(f, x, order, 0.5 * h);
  return (4.0 * fine - coarse) / 3.0;
}

GridSpec::GridSpec(double R, int nr, int nphi, double grading)
    : R_(R), nr_(nr), nphi_(nphi), grading_(grading) {
  if (!(R > 0.0) || !std::isfinite(R)) {
    throw ValidationError(ValidationCode::InvalidGrid, "radius must be positive");
  }
  if (nr < 8 || nphi < 8) {
    throw ValidationError(ValidationCode::InvalidGrid, "grid needs nr >= 8 and nphi >= 8");
  }
  if (!(grading >= 1.0) || !std::isfinite(grading)) {
    throw ValidationError(ValidationCode::InvalidGrid, "grading must be >= 1");
  }
}

double GridSpec::radial_edge(int j) const {
  if (j <= 0) return 0.0;
  if (j >= nr_) return R_;
  return R_ * std::pow(static_cast<double>(j) / nr_, grading_);
}

double GridSpec::node_angle(int i) const { return kPi * (i + 0.5) / nphi_; }

PolarPoint GridSpec::node(std::size_t index) const {
  const auto n = static_cast<std::size_t>(nphi_);
  const int j = static_cast<int>(index / n) + 1;
  const int i = static_cast<int>(index % n);
  return {node_radius(j), node_angle(i)};
}

PlanarRule halfdisk_rule(const GridSpec& grid) {
  const auto unit = gauss_legendre(kHalfDiskGaussPoints, 0.0, 1.0);
  const double dphi = kPi / grid.nphi();
  PlanarRule rule;
  for (int j = 0; j < grid.nr(); ++j) {
    const double r0 = grid.radial_edge(j);
    const double dr = grid.radial_edge(j + 1) - r0;
    for (std::size_t a = 0; a < unit.size(); ++a) {
      const double r = r0 + dr * unit.nodes[a];
      for (int i = 0; i < grid.nphi(); ++i) {
        for (std::size_t b = 0; b < unit.size(); ++b) {
          const double phi = dphi * (i + unit.nodes[b]);
          rule.x.push_back(r * std::cos(phi));
          rule.y.push_back(r * std::sin(phi));
          rule.w.push_back(dr * unit.weights[a] * dphi * unit.weights[b] * r);
        }
      }
    }
  }
  return rule;
}

double integrate_halfdisk(const ScalarField& f, const GridSpec& grid) {
  return halfdisk_sum(grid, [&](double r, double phi) { return eval_polar(f, r, phi); });
}

double golden_section_max(const Function1D& f, double a, double b, double& argmax,
                          int iterations) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = f(c);
  double fd = f(d);
  for (int it = 0; it < iterations; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = f(d);
    }
  }
  if (fc > fd) {
    argmax = c;
    return fc;
  }
  argmax = d;
  return fd;
}

SupLocation sup_halfdisk(const ScalarField& f, const GridSpec& grid) {
  const auto values = parallel_map(grid.node_count(), [&](std::size_t idx) {
    const auto q = grid.node(idx);
    return std::fabs(eval_polar(f, q.r, q.phi));
  });
  const auto best = static_cast<std::size_t>(
      std::max_element(values.begin(), values.end()) - values.begin());
  const auto q = grid.node(best);
  SupLocation loc{values[best], q.r, q.phi};

  // Refine along the ray, then along the arc, inside the neighbouring cells.
  const int j = static_cast<int>(best / static_cast<std::size_t>(grid.nphi())) + 1;
  const double r_lo = grid.radial_edge(j - 1);
  const double r_hi = std::min(grid.radius(), grid.radial_edge(j + 1));
  double r_star = q.r;
  const double ray_value = golden_section_max(
      [&](double r) { return std::fabs(eval_polar(f, r, q.phi)); }, r_lo, r_hi, r_star);
  if (ray_value > loc.value) loc = {ray_value, r_star, q.phi};
  const double dphi = kPi / grid.nphi();
  double phi_star = loc.phi;
  const double arc_value = golden_section_max(
      [&](double phi) { return std::fabs(eval_polar(f, loc.r, phi)); },
      std::max(0.0, loc.phi - dphi), std::min(kPi, loc.phi + dphi), phi_star);
  if (arc_value > loc.value) loc = {arc_value, loc.r, phi_star};
  return loc;
}

double norm_lp_halfdisk(const ScalarField& f, const GridSpec& grid, double p) {
  if (std::isinf(p) && p > 0.0) return sup_halfdisk(f, grid).value;
  if (!(p >= 1.0)) throw ValidationError(ValidationCode::InvalidArgument, "p must be >= 1");
  const double integral = halfdisk_sum(grid, [&](double r, double phi) {
    const double v = std::fabs(eval_polar(f, r, phi));
    return p == 1.0 ? v : (p == 2.0 ? v * v : std::pow(v, p));
  });
  return p == 1.0 ? integral : std::pow(integral, 1.0 / p);
}

RateFit fit_linear(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) {
    throw ValidationError(ValidationCode::InvalidArgument, "fit needs equally many x and y values");
  }
  if (xs.size() < 2) throw ValidationError(ValidationCode::InvalidArgument, "fit needs >= 2 points");
  const double n = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0;
  double sxy = 0.0;
  double syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (!(sxx > 0.0)) {
    throw ValidationError(ValidationCode::DegenerateDesign, "all x values are equal");
  }
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.n_points = static_cast<int>(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double e = ys[i] - (fit.slope * xs[i] + fit.intercept);
    fit.residual += e * e;
  }
  fit.r_squared = syy > 0.0 ? std::clamp(1.0 - fit.residual / syy, 0.0, 1.0) : 1.0;
  return fit;
}

RateFit fit_loglog(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size() || xs.size() < 3) {
    throw ValidationError(ValidationCode::InvalidArgument, "log-log fit needs >= 3 (x, y) pairs");
  }
  std::vector<double> lx(xs.size());
  std::vector<double> ly(ys.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (!(xs[i] > 0.0) || !(ys[i] > 0.0)) {
      throw ValidationError(ValidationCode::InvalidArgument, "log-log fit needs positive data");
    }
    lx[i] = std::log(xs[i]);
    ly[i] = std::log(ys[i]);
  }
  return fit_linear(lx, ly);
}

double max_relative_error(std::span<const double> values, std::span<const double> reference,
                          double floor) {
  double worst = 0.0;
  for (std::size_t i = 0; i < values.size() && i < reference.size(); ++i) {
    const double denom = std::max(std::fabs(reference[i]), floor);
    worst = std::max(worst, std::fabs(values[i] - reference[i]) / denom);
  }
  return worst;
}

}  // namespace harmlab
