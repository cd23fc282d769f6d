#pragma once

#include <variant>

#include "harmlab/complex_core.hpp"

namespace harmlab {

// Closed-form harmonic extensions of ReLU^alpha boundary data on the upper
// half-plane, plus the log-regularized family used for integer powers.

struct IntegerPower {
  int k;
  explicit IntegerPower(int k);
};

struct FractionalPower {
  double alpha;
  /// Rejects alpha <= 0 and alpha within kNearIntegerCutoff of an integer.
  explicit FractionalPower(double alpha);
};

struct Heaviside {};

struct Regularized {
  int k;
  double epsilon;
  Regularized(int k, double epsilon);
};

using SolutionKind = std::variant<IntegerPower, FractionalPower, Heaviside, Regularized>;

/// cot(pi alpha) amplifies rounding past ~1e7 inside this window.
inline constexpr double kNearIntegerCutoff = 1e-9;

/// 1/2 + arctan(x/y)/pi for y > 0; the boundary limit 1{x>0} + 1/2 1{x=0} at y = 0.
double angular_prefactor(double x, double y);

double eval_u_integer(const HalfPlanePoint& p, int k);
double eval_u_fractional(const HalfPlanePoint& p, double alpha);
double eval_u_half(const HalfPlanePoint& p);
double eval_u_three_half(const HalfPlanePoint& p);
double eval_heaviside(const HalfPlanePoint& p);

struct Components {
  double ur;  ///< angular_prefactor * Re(z^k)
  double ui;  ///< log|z| / pi * Im(z^k)
};

/// Splits u_k into ur - ui.
Components eval_components(const HalfPlanePoint& p, int k);

/// Log-regularized solution; finite on the closed half-plane y >= 0.
double eval_u_reg(double x, double y, double epsilon, int k);

inline double eval_u_reg(const HalfPlanePoint& p, double epsilon, int k) {
  return eval_u_reg(p.x(), p.y(), epsilon, k);
}

double evaluate(const SolutionKind& kind, const HalfPlanePoint& p);

/// Boundary trace ReLU^alpha(x) (alpha = 0 gives the Heaviside indicator).
double relu_power(double z, double alpha);

}  // namespace harmlab
