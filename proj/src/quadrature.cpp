#include "harmlab/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>

#include "harmlab/errors.hpp"

namespace harmlab {

double QuadratureRule::apply(const Function1D& f) const {
  double sum = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) sum += weights[i] * f(nodes[i]);
  return sum;
}

QuadratureRule gauss_legendre(std::size_t n, double a, double b) {
  if (n == 0) throw ValidationError(ValidationCode::InvalidArgument, "Gauss rule needs n >= 1");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.lower = a;
  rule.upper = b;
  rule.measure = b - a;
  const double half = 0.5 * (b - a);
  const double mid = 0.5 * (a + b);
  if (n == 1) {
    rule.nodes[0] = mid;
    rule.weights[0] = b - a;
    return rule;
  }
  const std::size_t m = (n + 1) / 2;
  for (std::size_t i = 0; i < m; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                        (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t j = 2; j <= n; ++j) {
        const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / static_cast<double>(j);
        p0 = p1;
        p1 = p2;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = mid - half * x;
    rule.nodes[n - 1 - i] = mid + half * x;
    rule.weights[i] = half * w;
    rule.weights[n - 1 - i] = half * w;
  }
  return rule;
}

QuadratureRule composite_gauss_legendre(std::size_t cells, std::size_t points_per_cell, double a,
                                        double b) {
  if (cells == 0) throw ValidationError(ValidationCode::InvalidArgument, "need at least one cell");
  const auto unit = gauss_legendre(points_per_cell, 0.0, 1.0);
  QuadratureRule rule;
  rule.lower = a;
  rule.upper = b;
  rule.measure = b - a;
  rule.nodes.reserve(cells * points_per_cell);
  rule.weights.reserve(cells * points_per_cell);
  const double h = (b - a) / static_cast<double>(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    const double left = a + h * static_cast<double>(c);
    for (std::size_t j = 0; j < points_per_cell; ++j) {
      rule.nodes.push_back(left + h * unit.nodes[j]);
      rule.weights.push_back(h * unit.weights[j]);
    }
  }
  return rule;
}

namespace {

// Kronrod 15-point abscissae and weights, Gauss 7-point weights (QUADPACK).
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  double value;
  double error;
  bool splittable;
  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const Function1D& f, double a, double b) {
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double resg = fc * kWg[3];
  double resk = fc * kWgk[7];
  double resabs = std::fabs(resk);
  std::array<double, 7> f1{};
  std::array<double, 7> f2{};
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    f1[j] = f(center - dx);
    f2[j] = f(center + dx);
    const double sum = f1[j] + f2[j];
    resk += kWgk[j] * sum;
    resabs += kWgk[j] * (std::fabs(f1[j]) + std::fabs(f2[j]));
    if (j % 2 == 1) resg += kWg[j / 2] * sum;
  }
  const double reskh = 0.5 * resk;
  double resasc = kWgk[7] * std::fabs(fc - reskh);
  for (int j = 0; j < 7; ++j) {
    resasc += kWgk[j] * (std::fabs(f1[j] - reskh) + std::fabs(f2[j] - reskh));
  }
  const double value = resk * half;
  resabs *= std::fabs(half);
  resasc *= std::fabs(half);
  double err = std::fabs((resk - resg) * half);
  if (resasc != 0.0 && err != 0.0) {
    err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
  }
  if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) {
    err = std::max(50.0 * eps * resabs, err);
  }
  const double width_floor = 8.0 * eps * std::max({std::fabs(a), std::fabs(b), 1e-300});
  const bool splittable = std::fabs(b - a) > width_floor;
  if (!std::isfinite(value) || !std::isfinite(err)) {
    throw NumericalError(NumericalCode::NonFiniteSample,
                         "integrand is not finite on [" + std::to_string(a) + ", " +
                             std::to_string(b) + "]");
  }
  return {a, b, value, err, splittable};
}

}  // namespace

IntegrationResult integrate_adaptive_detailed(const Function1D& f, std::span<const double> breaks,
                                              const AdaptiveOptions& options) {
  if (breaks.size() < 2) {
    throw ValidationError(ValidationCode::InvalidArgument, "need at least two break points");
  }
  std::priority_queue<Segment> open;
  std::vector<Segment> closed;
  double total = 0.0;
  double total_err = 0.0;
  for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
    if (!(breaks[i] < breaks[i + 1])) {
      if (breaks[i] == breaks[i + 1]) continue;
      throw ValidationError(ValidationCode::InvalidArgument, "break points must be increasing");
    }
    auto seg = gauss_kronrod(f, breaks[i], breaks[i + 1]);
    total += seg.value;
    total_err += seg.error;
    if (seg.splittable) {
      open.push(seg);
    } else {
      closed.push_back(seg);
    }
  }
  std::size_t subdivisions = 0;
  while (total_err > options.tol * (1.0 + std::fabs(total))) {
    if (open.empty()) {
      throw NumericalError(NumericalCode::QuadratureFailure,
                           "roundoff floor reached before tolerance " +
                               std::to_string(options.tol));
    }
    if (subdivisions >= options.max_subdivisions) {
      throw NumericalError(NumericalCode::MaxSubdivisionsExceeded,
                           "adaptive quadrature used " + std::to_string(subdivisions) +
                               " subdivisions; error estimate " + std::to_string(total_err));
    }
    const Segment worst = open.top();
    open.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    const auto left = gauss_kronrod(f, worst.a, mid);
    const auto right = gauss_kronrod(f, mid, worst.b);
    total += left.value + right.value - worst.value;
    total_err += left.error + right.error - worst.error;
    for (const auto& seg : {left, right}) {
      if (seg.splittable) {
        open.push(seg);
      } else {
        closed.push_back(seg);
      }
    }
    ++subdivisions;
  }
  // Re-sum in interval order so the value does not depend on update history.
  while (!open.empty()) {
    closed.push_back(open.top());
    open.pop();
  }
  std::sort(closed.begin(), closed.end(),
            [](const Segment& l, const Segment& r) { return l.a < r.a; });
  IntegrationResult result;
  for (const auto& seg : closed) {
    result.value += seg.value;
    result.error += seg.error;
  }
  result.subdivisions = subdivisions;
  return result;
}

double integrate_adaptive(const Function1D& f, double a, double b, double tol) {
  if (a == b) return 0.0;
  if (a > b) return -integrate_adaptive(f, b, a, tol);
  const std::array<double, 2> breaks{a, b};
  return integrate_adaptive_detailed(f, breaks, {tol}).value;
}

double integrate_adaptive(const Function1D& f, std::span<const double> breaks, double tol) {
  return integrate_adaptive_detailed(f, breaks, {tol}).value;
}

double integrate_tangent(const Function1D& f, double a, double b, double tol) {
  const double lo = std::atan(a);
  const double hi = std::atan(b);
  auto g = [&f](double theta) {
    const double c = std::cos(theta);
    return f(std::tan(theta)) / (c * c);
  };
  return integrate_adaptive(g, lo, hi, tol);
}

}  // namespace harmlab
