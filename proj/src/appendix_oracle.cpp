#include "harmlab/appendix_oracle.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "harmlab/errors.hpp"
#include "harmlab/exact_solutions.hpp"
#include "harmlab/numerics.hpp"
#include "harmlab/quadrature.hpp"

namespace harmlab {

namespace {

constexpr double kPi = std::numbers::pi;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

void require_k(int k) {
  if (k < 1) throw ValidationError(ValidationCode::InvalidArgument, "k must be >= 1");
}

// sin(m pi/2 - a) without rounding m pi/2.
double shifted_sine(int m, double a) {
  switch (((m % 4) + 4) % 4) {
    case 0: return -std::sin(a);
    case 1: return std::cos(a);
    case 2: return std::sin(a);
    default: return -std::cos(a);
  }
}

}  // namespace

double arctan_real_part(double x, double y, int k) {
  require_k(k);
  return std::atan2(x, y) * integer_power(x, y, k).real();
}

double closed_form_dk1(const HalfPlanePoint& p, int k) {
  require_k(k);
  const double r = std::hypot(p.x(), p.y());
  const double phi = std::atan2(p.y(), p.x());
  const double sin_phi = p.y() / r;
  // e^{i phi} (2i sin phi e^{-i phi})^{k+1} = (2 sin phi)^{k+1} i^{k+1} e^{-ik phi}.
  const double im = std::pow(2.0 * sin_phi, k + 1) * shifted_sine(k + 1, k * phi);
  return factorial(k) / (2.0 * r) * im;
}

double closed_form_dk1_literal(const HalfPlanePoint& p, int k) {
  require_k(k);
  const double r = std::hypot(p.x(), p.y());
  const double phi = std::atan2(p.y(), p.x());
  const std::complex<double> e1 = std::polar(1.0, phi);
  const std::complex<double> e2 = std::polar(1.0, -2.0 * phi);
  const auto value = e1 * std::pow(1.0 - e2, k + 1);
  return factorial(k) / (2.0 * r) * value.imag();
}

double slice_log_constant(int k, double theta) {
  return std::pow(1.0 / std::fabs(std::cos(theta)), k) * std::sin(k * theta) / kPi;
}

SliceFit slice_log_fit(int k, double theta, int n_points) {
  require_k(k);
  if (!(theta > 0.0 && theta < kPi) || std::fabs(std::cos(theta)) < 1e-12) {
    throw ValidationError(ValidationCode::InvalidArgument,
                          "theta must lie in (0, pi) and differ from pi/2");
  }
  if (std::fabs(std::sin(k * theta)) <= 1e-6) {
    throw ValidationError(ValidationCode::DegenerateAngle,
                          "k*theta is a multiple of pi; the log coefficient vanishes");
  }
  if (n_points < 20) throw ValidationError(ValidationCode::InvalidArgument, "need n_points >= 20");

  const double c = std::cos(theta);
  const double dir_x = c / std::fabs(c);
  const double dir_y = std::sin(theta) / std::fabs(c);
  std::vector<double> xs(static_cast<std::size_t>(n_points));
  std::vector<double> us(xs.size());
  const double log_lo = std::log(1e-3);
  for (int i = 0; i < n_points; ++i) {
    const double x = std::exp(log_lo * (1.0 - static_cast<double>(i) / (n_points - 1)));
    xs[static_cast<std::size_t>(i)] = x;
    us[static_cast<std::size_t>(i)] = eval_components(HalfPlanePoint(x * dir_x, x * dir_y), k).ui;
  }
  // Normal equations for the basis {x^k log x, x^k}.
  double s11 = 0.0;
  double s12 = 0.0;
  double s22 = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double b2 = std::pow(xs[i], k);
    const double b1 = b2 * std::log(xs[i]);
    s11 += b1 * b1;
    s12 += b1 * b2;
    s22 += b2 * b2;
    t1 += b1 * us[i];
    t2 += b2 * us[i];
  }
  const double det = s11 * s22 - s12 * s12;
  SliceFit fit;
  fit.c_fit = (t1 * s22 - t2 * s12) / det;
  fit.d_fit = (s11 * t2 - s12 * t1) / det;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double b2 = std::pow(xs[i], k);
    const double model = fit.c_fit * b2 * std::log(xs[i]) + fit.d_fit * b2;
    fit.residual = std::max(fit.residual, std::fabs(model - us[i]));
  }
  return fit;
}

SliceBarronReport ur_slice_barron_check(int k, int n_points) {
  if (k < 1 || k > 4) throw ValidationError(ValidationCode::InvalidArgument, "k must be in 1..4");
  if (n_points < 3) throw ValidationError(ValidationCode::InvalidArgument, "need n_points >= 3");
  // Only the arctan part contributes: the 1/2 Re((xi + i)^k) term is a degree-k polynomial.
  auto integrand = [k](double xi) {
    return std::fabs(closed_form_dk1(HalfPlanePoint(xi, 1.0), k)) / kPi *
           (1.0 + std::pow(std::fabs(xi), k));
  };
  SliceBarronReport report;
  report.k = k;
  report.value = integrate_tangent(integrand, -kInf, kInf, 1e-11);
  for (double T : {1e2, 1e3, 1e4}) {
    report.cutoffs.push_back(T);
    report.truncated.push_back(integrate_tangent(integrand, -T, T, 1e-11));
  }
  std::vector<double> xs;
  std::vector<double> ys;
  for (int i = 0; i < n_points; ++i) {
    const double xi = std::pow(10.0, 2.0 + 2.0 * i / (n_points - 1));
    xs.push_back(xi);
    ys.push_back(integrand(xi));
  }
  const auto fit = fit_loglog(xs, ys);
  report.tail_exponent = -fit.slope;
  report.tail_r_squared = fit.r_squared;
  return report;
}

}  // namespace harmlab
