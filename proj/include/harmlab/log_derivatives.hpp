#pragma once

#include <vector>

namespace harmlab {

/// Dense bivariate polynomial sum c_{a,b} x^a y^b.
class Poly2 {
 public:
  Poly2() = default;
  /// Zero polynomial able to hold total degree <= max_degree.
  explicit Poly2(int max_degree);

  static Poly2 monomial(int a, int b, double c = 1.0);

  int capacity() const noexcept { return max_degree_; }
  double coeff(int a, int b) const;
  void add_term(int a, int b, double c);

  Poly2 dx() const;
  Poly2 dy() const;
  Poly2 times_x() const;
  Poly2 times_y() const;
  Poly2 scaled(double s) const;
  Poly2 operator+(const Poly2& other) const;
  Poly2 operator-(const Poly2& other) const;

  double eval(double x, double y) const;
  bool is_zero() const;
  /// True if every nonzero term has total degree d (the zero polynomial is
  /// homogeneous of every degree).
  bool is_homogeneous(int d) const;

 private:
  int max_degree_ = 0;
  std::vector<double> c_;  // (max_degree_ + 1)^2 entries, index a * (max_degree_ + 1) + b
};

/// Im((x + iy)^k) as a polynomial.
Poly2 imag_power_poly(int k);
/// Re((x + iy)^k) as a polynomial.
Poly2 real_power_poly(int k);

/// Derivatives of log(x^2 + y^2 + eps^2): for i + j >= 1,
///   d_x^i d_y^j log(rho) = sum_{s=1}^{i+j} q_{i,j,s}(x, y) / rho^s,
/// with q_{i+1,j,s} = d_x q_{i,j,s} - 2(s-1) x q_{i,j,s-1} (and the same in y),
/// starting from q_{1,0,1} = 2x and q_{0,1,1} = 2y.
class LogDerivativeTable {
 public:
  explicit LogDerivativeTable(int max_order);

  int max_order() const noexcept { return max_order_; }
  /// q_{i,j,s}; s ranges over 1..i+j.
  const Poly2& q(int i, int j, int s) const;
  /// Value of d_x^i d_y^j log(x^2 + y^2 + eps^2); (0, 0) gives the log itself.
  double eval(int i, int j, double x, double y, double eps) const;

  /// Same table built by differentiating in y first wherever possible; used
  /// to confirm that the mixed partials commute.
  static LogDerivativeTable y_first(int max_order);

 private:
  LogDerivativeTable(int max_order, bool x_first);
  std::size_t index(int i, int j) const;

  int max_order_;
  std::vector<std::vector<Poly2>> q_;  // per (i, j): entries s = 0..i+j (s = 0 unused)
};

/// d_x^l d_y^m of u^i_{eps,k} = log(x^2 + y^2 + eps^2)/(2 pi) Im((x + iy)^k), by Leibniz.
class RegularizedImagPart {
 public:
  RegularizedImagPart(int k, int max_order);

  double derivative(int l, int m, double x, double y, double eps) const;
  int k() const noexcept { return k_; }

 private:
  int k_;
  LogDerivativeTable table_;
  std::vector<std::vector<Poly2>> p_derivs_;  // p_derivs_[a][b] = d_x^a d_y^b Im z^k
};

}  // namespace harmlab
