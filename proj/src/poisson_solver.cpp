#include "harmlab/poisson_solver.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "harmlab/errors.hpp"
#include "harmlab/exact_solutions.hpp"
#include "harmlab/parallel.hpp"

namespace harmlab {

namespace {

constexpr double kPi = std::numbers::pi;
// Largest log-cutoff for which cosh(s) stays representable.
constexpr double kMaxLogCutoff = 700.0;

double parse_double(const std::string& text, const std::string& spec) {
  double value = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty()) {
    throw ValidationError(ValidationCode::ParseError, "bad number '" + text + "' in '" + spec + "'");
  }
  return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

BoundaryFunction::BoundaryFunction(Data data) : data_(std::move(data)) {
  struct Certify {
    BoundaryFunction& self;
    void operator()(const ReluPowerData& d) const {
      if (!std::isfinite(d.alpha) || !std::isfinite(d.w) || !std::isfinite(d.b) || d.alpha < 0.0) {
        throw ValidationError(ValidationCode::InvalidArgument, "ReLU power data must be finite, alpha >= 0");
      }
      if (d.alpha >= 1.0) {
        throw ValidationError(ValidationCode::GrowthViolation,
                              "ReLU power " + std::to_string(d.alpha) + " grows at least linearly");
      }
      self.growth_alpha_ = d.alpha;
      self.growth_const_ = std::pow(std::max(std::fabs(d.w), std::fabs(d.b)), d.alpha);
      if (d.w != 0.0) self.kinks_ = {-d.b / d.w};
    }
    void operator()(const HeavisideData&) const {
      self.growth_alpha_ = 0.0;
      self.growth_const_ = 1.0;
      self.kinks_ = {0.0};
    }
    void operator()(const TanhData& d) const {
      if (!std::isfinite(d.w) || !std::isfinite(d.b)) {
        throw ValidationError(ValidationCode::InvalidArgument, "tanh data must be finite");
      }
      self.growth_alpha_ = 0.0;
      self.growth_const_ = 1.0;
    }
    void operator()(const PolynomialData& d) const {
      if (d.coeffs.empty()) {
        throw ValidationError(ValidationCode::InvalidArgument, "polynomial needs coefficients");
      }
      for (std::size_t i = 1; i < d.coeffs.size(); ++i) {
        if (d.coeffs[i] != 0.0) {
          throw ValidationError(ValidationCode::GrowthViolation,
                                "polynomial of degree >= 1 grows at least linearly");
        }
      }
      self.growth_alpha_ = 0.0;
      self.growth_const_ = std::fabs(d.coeffs[0]);
    }
    void operator()(const CustomData& d) const {
      if (!d.g) throw ValidationError(ValidationCode::InvalidArgument, "custom data needs a callable");
      if (!(d.growth_alpha >= 0.0) || !(d.growth_const >= 0.0)) {
        throw ValidationError(ValidationCode::InvalidArgument, "growth certificate must be >= 0");
      }
      if (d.growth_alpha >= 1.0) {
        throw ValidationError(ValidationCode::GrowthViolation, "declared growth alpha >= 1");
      }
      self.growth_alpha_ = d.growth_alpha;
      self.growth_const_ = d.growth_const;
      self.kinks_ = d.kinks;
    }
  };
  std::visit(Certify{*this}, data_);
}

double BoundaryFunction::operator()(double t) const {
  struct Eval {
    double t;
    double operator()(const ReluPowerData& d) const {
      return harmlab::relu_power(d.w * t + d.b, d.alpha);
    }
    double operator()(const HeavisideData&) const { return t > 0.0 ? 1.0 : 0.0; }
    double operator()(const TanhData& d) const { return std::tanh(d.w * t + d.b); }
    double operator()(const PolynomialData& d) const { return d.coeffs[0]; }
    double operator()(const CustomData& d) const { return d.g(t); }
  };
  return std::visit(Eval{t}, data_);
}

BoundaryFunction BoundaryFunction::parse(const std::string& spec) {
  const auto parts = split(spec, ':');
  const auto& head = parts[0];
  if (head == "heaviside" && parts.size() == 1) return heaviside();
  if (head == "relu" && (parts.size() == 2 || parts.size() == 4)) {
    const double alpha = parse_double(parts[1], spec);
    if (parts.size() == 2) return relu_power(alpha);
    return relu_power(alpha, parse_double(parts[2], spec), parse_double(parts[3], spec));
  }
  if (head == "tanh" && (parts.size() == 1 || parts.size() == 3)) {
    if (parts.size() == 1) return tanh();
    return tanh(parse_double(parts[1], spec), parse_double(parts[2], spec));
  }
  if (head == "const" && parts.size() == 2) return constant(parse_double(parts[1], spec));
  throw ValidationError(ValidationCode::ParseError, "unknown boundary spec '" + spec + "'");
}

double solve_at(const BoundaryFunction& g, const HalfPlanePoint& p, double tol) {
  if (!(tol > 0.0)) throw ValidationError(ValidationCode::InvalidArgument, "tol must be positive");
  const double x = p.x();
  const double y = p.y();
  const double alpha = g.growth_alpha();
  // |g(x + t y)| <= M (1 + |t|)^alpha, so each tail beyond T is at most
  // M 2^alpha T^(alpha - 1) / (pi (1 - alpha)).
  const double M = g.growth_const() * std::pow(1.0 + std::fabs(x) + y, alpha);
  double log_cutoff = 0.0;
  if (M > 0.0) {
    const double budget = 0.1 * tol * kPi * (1.0 - alpha) / (M * std::pow(2.0, alpha));
    log_cutoff = std::max(0.0, -std::log(budget) / (1.0 - alpha));
  }
  if (log_cutoff > kMaxLogCutoff) {
    throw NumericalError(NumericalCode::QuadratureFailure,
                         "tail cutoff e^" + std::to_string(log_cutoff) +
                             " is not representable; loosen tol or reduce alpha");
  }

  std::vector<double> body{-1.0, 1.0};
  std::vector<double> right{0.0, log_cutoff};
  std::vector<double> left{0.0, log_cutoff};
  for (double s : g.kinks()) {
    const double t = (s - x) / y;
    if (std::fabs(t) < 1.0) {
      body.push_back(t);
    } else if (std::log(std::fabs(t)) < log_cutoff) {
      (t > 0.0 ? right : left).push_back(std::log(std::fabs(t)));
    }
  }
  std::sort(body.begin(), body.end());
  std::sort(right.begin(), right.end());
  std::sort(left.begin(), left.end());

  const double piece_tol = tol / 3.0;
  const AdaptiveOptions options{piece_tol, 20000};
  auto body_f = [&](double t) { return g(x + t * y) / (1.0 + t * t); };
  auto right_f = [&](double s) { return g(x + std::exp(s) * y) / (2.0 * std::cosh(s)); };
  auto left_f = [&](double s) { return g(x - std::exp(s) * y) / (2.0 * std::cosh(s)); };
  double total = integrate_adaptive_detailed(body_f, body, options).value;
  if (log_cutoff > 0.0) {
    total += integrate_adaptive_detailed(right_f, right, options).value;
    total += integrate_adaptive_detailed(left_f, left, options).value;
  }
  return total / kPi;
}

std::vector<double> solve_grid(const BoundaryFunction& g, const GridSpec& grid, double tol) {
  return parallel_map(grid.node_count(), [&](std::size_t idx) {
    return solve_at(g, from_polar(grid.node(idx)), tol);
  });
}

}  // namespace harmlab
