#include "harmlab/exact_solutions.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "harmlab/errors.hpp"

namespace harmlab {

namespace {

constexpr double kPi = std::numbers::pi;

// sqrt of (r + x)/2 and (r - x)/2 without cancellation on either half-axis.
struct HalfSums {
  double plus;   // (r + x) / 2
  double minus;  // (r - x) / 2
};

HalfSums half_sums(double x, double y) {
  const double r = std::hypot(x, y);
  if (x >= 0.0) {
    const double plus = 0.5 * (r + x);
    return {plus, plus > 0.0 ? 0.25 * y * y / plus : 0.0};
  }
  const double minus = 0.5 * (r - x);
  return {0.25 * y * y / minus, minus};
}

}  // namespace

IntegerPower::IntegerPower(int k_) : k(k_) {
  if (k < 1) {
    throw ValidationError(ValidationCode::InvalidArgument, "integer power needs k >= 1");
  }
}

FractionalPower::FractionalPower(double alpha_) : alpha(alpha_) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw ValidationError(ValidationCode::InvalidArgument, "fractional power needs alpha > 0");
  }
  if (std::fabs(alpha - std::round(alpha)) <= kNearIntegerCutoff) {
    throw ValidationError(ValidationCode::NearIntegerAlpha,
                          "alpha = " + std::to_string(alpha) + " is too close to an integer");
  }
}

Regularized::Regularized(int k_, double epsilon_) : k(k_), epsilon(epsilon_) {
  if (k < 1) {
    throw ValidationError(ValidationCode::InvalidArgument, "regularized family needs k >= 1");
  }
  if (!(epsilon > 0.0)) {
    throw ValidationError(ValidationCode::NonpositiveEpsilon, "epsilon must be positive");
  }
}

double angular_prefactor(double x, double y) {
  if (y > 0.0) return 0.5 + std::atan2(x, y) / kPi;
  if (x > 0.0) return 1.0;
  if (x < 0.0) return 0.0;
  return 0.5;
}

double eval_u_integer(const HalfPlanePoint& p, int k) {
  const auto c = eval_components(p, k);
  return c.ur - c.ui;
}

Components eval_components(const HalfPlanePoint& p, int k) {
  if (k < 1) {
    throw ValidationError(ValidationCode::InvalidArgument, "integer power needs k >= 1");
  }
  const auto z = complex_power(p, static_cast<double>(k));
  const double log_r = std::log(std::hypot(p.x(), p.y()));
  return {angular_prefactor(p.x(), p.y()) * z.real(), log_r / kPi * z.imag()};
}

double eval_u_fractional(const HalfPlanePoint& p, double alpha) {
  const FractionalPower kind{alpha};
  const auto z = complex_power(p, kind.alpha);
  const double cot = std::cos(kPi * alpha) / std::sin(kPi * alpha);
  return z.real() - cot * z.imag();
}

double eval_u_half(const HalfPlanePoint& p) {
  return std::sqrt(half_sums(p.x(), p.y()).plus);
}

double eval_u_three_half(const HalfPlanePoint& p) {
  const auto s = half_sums(p.x(), p.y());
  const double root = std::sqrt(s.plus);
  return s.plus * root - 3.0 * root * s.minus;
}

double eval_heaviside(const HalfPlanePoint& p) { return angular_prefactor(p.x(), p.y()); }

double eval_u_reg(double x, double y, double epsilon, int k) {
  if (!(epsilon > 0.0)) {
    throw ValidationError(ValidationCode::NonpositiveEpsilon, "epsilon must be positive");
  }
  if (!(y >= 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw ValidationError(ValidationCode::InvalidPoint, "regularized solution needs y >= 0");
  }
  if (k < 1) {
    throw ValidationError(ValidationCode::InvalidArgument, "regularized family needs k >= 1");
  }
  const auto z = complex_power(x, y, static_cast<double>(k));
  const double log_term = std::log(x * x + y * y + epsilon * epsilon) / (2.0 * kPi);
  return angular_prefactor(x, y) * z.real() - log_term * z.imag();
}

double evaluate(const SolutionKind& kind, const HalfPlanePoint& p) {
  struct Visitor {
    const HalfPlanePoint& p;
    double operator()(const IntegerPower& s) const { return eval_u_integer(p, s.k); }
    double operator()(const FractionalPower& s) const { return eval_u_fractional(p, s.alpha); }
    double operator()(const Heaviside&) const { return eval_heaviside(p); }
    double operator()(const Regularized& s) const { return eval_u_reg(p, s.epsilon, s.k); }
  };
  return std::visit(Visitor{p}, kind);
}

double relu_power(double z, double alpha) {
  if (!(z > 0.0)) return 0.0;
  return alpha == 0.0 ? 1.0 : std::pow(z, alpha);
}

}  // namespace harmlab
