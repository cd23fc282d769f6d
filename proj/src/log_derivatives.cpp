#include "harmlab/log_derivatives.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "harmlab/errors.hpp"

namespace harmlab {

namespace {

double binomial(int n, int j) {
  double c = 1.0;
  for (int i = 1; i <= j; ++i) c = c * (n - j + i) / i;
  return c;
}

}  // namespace

Poly2::Poly2(int max_degree)
    : max_degree_(max_degree),
      c_(static_cast<std::size_t>((max_degree + 1) * (max_degree + 1)), 0.0) {}

Poly2 Poly2::monomial(int a, int b, double c) {
  Poly2 p(a + b);
  p.add_term(a, b, c);
  return p;
}

double Poly2::coeff(int a, int b) const {
  if (a < 0 || b < 0 || a > max_degree_ || b > max_degree_) return 0.0;
  return c_[static_cast<std::size_t>(a * (max_degree_ + 1) + b)];
}

void Poly2::add_term(int a, int b, double c) {
  if (a < 0 || b < 0 || a + b > max_degree_) {
    throw ValidationError(ValidationCode::InvalidArgument,
                          "monomial degree " + std::to_string(a + b) + " exceeds capacity");
  }
  c_[static_cast<std::size_t>(a * (max_degree_ + 1) + b)] += c;
}

Poly2 Poly2::dx() const {
  Poly2 out(max_degree_);
  for (int a = 1; a <= max_degree_; ++a) {
    for (int b = 0; a + b <= max_degree_; ++b) {
      if (const double c = coeff(a, b); c != 0.0) out.add_term(a - 1, b, a * c);
    }
  }
  return out;
}

Poly2 Poly2::dy() const {
  Poly2 out(max_degree_);
  for (int a = 0; a <= max_degree_; ++a) {
    for (int b = 1; a + b <= max_degree_; ++b) {
      if (const double c = coeff(a, b); c != 0.0) out.add_term(a, b - 1, b * c);
    }
  }
  return out;
}

Poly2 Poly2::times_x() const {
  Poly2 out(max_degree_ + 1);
  for (int a = 0; a <= max_degree_; ++a) {
    for (int b = 0; a + b <= max_degree_; ++b) {
      if (const double c = coeff(a, b); c != 0.0) out.add_term(a + 1, b, c);
    }
  }
  return out;
}

Poly2 Poly2::times_y() const {
  Poly2 out(max_degree_ + 1);
  for (int a = 0; a <= max_degree_; ++a) {
    for (int b = 0; a + b <= max_degree_; ++b) {
      if (const double c = coeff(a, b); c != 0.0) out.add_term(a, b + 1, c);
    }
  }
  return out;
}

Poly2 Poly2::scaled(double s) const {
  Poly2 out = *this;
  for (double& c : out.c_) c *= s;
  return out;
}

Poly2 Poly2::operator+(const Poly2& other) const {
  Poly2 out(std::max(max_degree_, other.max_degree_));
  for (int a = 0; a <= out.max_degree_; ++a) {
    for (int b = 0; a + b <= out.max_degree_; ++b) {
      const double c = coeff(a, b) + other.coeff(a, b);
      if (c != 0.0) out.add_term(a, b, c);
    }
  }
  return out;
}

Poly2 Poly2::operator-(const Poly2& other) const { return *this + other.scaled(-1.0); }

double Poly2::eval(double x, double y) const {
  double sum = 0.0;
  double xa = 1.0;
  for (int a = 0; a <= max_degree_; ++a) {
    double term = 0.0;
    double yb = 1.0;
    for (int b = 0; a + b <= max_degree_; ++b) {
      term += coeff(a, b) * yb;
      yb *= y;
    }
    sum += term * xa;
    xa *= x;
  }
  return sum;
}

bool Poly2::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](double c) { return c == 0.0; });
}

bool Poly2::is_homogeneous(int d) const {
  for (int a = 0; a <= max_degree_; ++a) {
    for (int b = 0; b <= max_degree_; ++b) {
      if (coeff(a, b) != 0.0 && a + b != d) return false;
    }
  }
  return true;
}

Poly2 imag_power_poly(int k) {
  // Im((x + iy)^k) = sum over odd j of C(k, j) x^{k-j} y^j (-1)^{(j-1)/2}.
  Poly2 p(k);
  for (int j = 1; j <= k; j += 2) {
    p.add_term(k - j, j, binomial(k, j) * (((j - 1) / 2) % 2 == 0 ? 1.0 : -1.0));
  }
  return p;
}

Poly2 real_power_poly(int k) {
  Poly2 p(k);
  for (int j = 0; j <= k; j += 2) {
    p.add_term(k - j, j, binomial(k, j) * ((j / 2) % 2 == 0 ? 1.0 : -1.0));
  }
  return p;
}

LogDerivativeTable::LogDerivativeTable(int max_order) : LogDerivativeTable(max_order, true) {}

LogDerivativeTable LogDerivativeTable::y_first(int max_order) {
  return LogDerivativeTable(max_order, false);
}

std::size_t LogDerivativeTable::index(int i, int j) const {
  return static_cast<std::size_t>(i * (max_order_ + 1) + j);
}

LogDerivativeTable::LogDerivativeTable(int max_order, bool x_first) : max_order_(max_order) {
  if (max_order < 1) throw ValidationError(ValidationCode::InvalidArgument, "order must be >= 1");
  const int cap = 2 * max_order + 1;
  q_.assign(static_cast<std::size_t>((max_order + 1) * (max_order + 1)), {});
  auto zero_row = [cap](int n) { return std::vector<Poly2>(static_cast<std::size_t>(n + 1), Poly2(cap)); };
  {
    auto row = zero_row(1);
    row[1].add_term(1, 0, 2.0);
    q_[index(1, 0)] = row;
  }
  {
    auto row = zero_row(1);
    row[1].add_term(0, 1, 2.0);
    q_[index(0, 1)] = row;
  }
  // One derivative step: new_s = d q_s - 2 (s - 1) t q_{s-1}, with t = x or y.
  auto step = [&](const std::vector<Poly2>& prev, bool in_x) {
    const int n = static_cast<int>(prev.size());  // previous order + 1
    auto row = zero_row(n);
    for (int s = 1; s <= n; ++s) {
      Poly2 term(cap);
      if (s < n) term = in_x ? prev[static_cast<std::size_t>(s)].dx() : prev[static_cast<std::size_t>(s)].dy();
      if (s >= 2) {
        const auto& lower = prev[static_cast<std::size_t>(s - 1)];
        term = term - (in_x ? lower.times_x() : lower.times_y()).scaled(2.0 * (s - 1));
      }
      row[static_cast<std::size_t>(s)] = term;
    }
    return row;
  };
  for (int total = 2; total <= max_order; ++total) {
    for (int i = 0; i <= total; ++i) {
      const int j = total - i;
      const bool use_x = x_first ? i > 0 : j == 0;
      q_[index(i, j)] = use_x ? step(q_[index(i - 1, j)], true) : step(q_[index(i, j - 1)], false);
    }
  }
}

const Poly2& LogDerivativeTable::q(int i, int j, int s) const {
  if (i < 0 || j < 0 || i + j < 1 || i + j > max_order_ || s < 1 || s > i + j) {
    throw ValidationError(ValidationCode::InvalidArgument, "q index out of range");
  }
  return q_[index(i, j)][static_cast<std::size_t>(s)];
}

double LogDerivativeTable::eval(int i, int j, double x, double y, double eps) const {
  const double rho = x * x + y * y + eps * eps;
  if (i == 0 && j == 0) return std::log(rho);
  const auto& row = q_[index(i, j)];
  double sum = 0.0;
  double inv = 1.0;
  for (int s = 1; s <= i + j; ++s) {
    inv /= rho;
    sum += row[static_cast<std::size_t>(s)].eval(x, y) * inv;
  }
  return sum;
}

RegularizedImagPart::RegularizedImagPart(int k, int max_order)
    : k_(k), table_(std::max(1, max_order)) {
  if (k < 1) throw ValidationError(ValidationCode::InvalidArgument, "k must be >= 1");
  p_derivs_.assign(static_cast<std::size_t>(max_order + 1), {});
  Poly2 row_start = imag_power_poly(k);
  for (int a = 0; a <= max_order; ++a) {
    Poly2 current = row_start;
    for (int b = 0; a + b <= max_order; ++b) {
      p_derivs_[static_cast<std::size_t>(a)].push_back(current);
      current = current.dy();
    }
    row_start = row_start.dx();
  }
}

double RegularizedImagPart::derivative(int l, int m, double x, double y, double eps) const {
  if (l < 0 || m < 0 || l + m > table_.max_order()) {
    throw ValidationError(ValidationCode::InvalidArgument, "derivative order out of range");
  }
  double sum = 0.0;
  for (int a = 0; a <= l; ++a) {
    for (int b = 0; b <= m; ++b) {
      const auto& p = p_derivs_[static_cast<std::size_t>(l - a)][static_cast<std::size_t>(m - b)];
      if (p.is_zero()) continue;
      sum += binomial(l, a) * binomial(m, b) * table_.eval(a, b, x, y, eps) * p.eval(x, y);
    }
  }
  return sum / (2.0 * std::numbers::pi);
}

}  // namespace harmlab
