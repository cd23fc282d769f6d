#pragma once

#include <string>
#include <variant>
#include <vector>

#include "harmlab/complex_core.hpp"
#include "harmlab/numerics.hpp"
#include "harmlab/quadrature.hpp"

namespace harmlab {

// Boundary data g on the real line, each with a growth certificate
// |g(t)| <= C (1 + |t|)^alpha.

struct ReluPowerData {
  double alpha;  ///< in [0, 1); 0 is the Heaviside indicator of w t + b > 0
  double w = 1.0;
  double b = 0.0;
};
struct HeavisideData {};
struct TanhData {
  double w = 1.0;
  double b = 0.0;
};
/// Coefficients c_0, c_1, ... of sum c_i t^i. Only constants are admissible.
struct PolynomialData {
  std::vector<double> coeffs;
};
struct CustomData {
  Function1D g;
  double growth_alpha;
  double growth_const;
  /// Points where g is not smooth; the quadrature splits there.
  std::vector<double> kinks;
};

class BoundaryFunction {
 public:
  using Data = std::variant<ReluPowerData, HeavisideData, TanhData, PolynomialData, CustomData>;

  /// Throws ValidationError(GrowthViolation) if the certificate has alpha >= 1
  /// (or a polynomial of degree >= 1), InvalidArgument for malformed data.
  explicit BoundaryFunction(Data data);

  static BoundaryFunction relu_power(double alpha, double w = 1.0, double b = 0.0) {
    return BoundaryFunction(ReluPowerData{alpha, w, b});
  }
  static BoundaryFunction heaviside() { return BoundaryFunction(HeavisideData{}); }
  static BoundaryFunction tanh(double w = 1.0, double b = 0.0) {
    return BoundaryFunction(TanhData{w, b});
  }
  static BoundaryFunction constant(double c) { return BoundaryFunction(PolynomialData{{c}}); }

  double operator()(double t) const;
  double growth_alpha() const noexcept { return growth_alpha_; }
  double growth_const() const noexcept { return growth_const_; }
  /// Boundary points where g has a kink or jump.
  const std::vector<double>& kinks() const noexcept { return kinks_; }
  const Data& data() const noexcept { return data_; }

  /// Parses relu:A[:w:b], heaviside, tanh[:w:b] or const:C.
  static BoundaryFunction parse(const std::string& spec);

 private:
  Data data_;
  double growth_alpha_ = 0.0;
  double growth_const_ = 0.0;
  std::vector<double> kinks_;
};

/// Harmonic extension u(x, y) = (1/pi) int g(x + t y) / (1 + t^2) dt.
/// The body |t| <= 1 is integrated directly; each tail through t = +-e^s up to
/// a cutoff where the growth certificate bounds the remainder by tol / 10.
/// Throws QuadratureFailure if no representable cutoff achieves that.
double solve_at(const BoundaryFunction& g, const HalfPlanePoint& p, double tol = 1e-9);

/// solve_at at every node of the grid, in GridSpec::node order.
std::vector<double> solve_grid(const BoundaryFunction& g, const GridSpec& grid, double tol = 1e-9);

}  // namespace harmlab
