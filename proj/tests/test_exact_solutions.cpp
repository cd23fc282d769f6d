#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "harmlab/complex_core.hpp"
#include "harmlab/errors.hpp"
#include "harmlab/exact_solutions.hpp"
#include "harmlab/numerics.hpp"

using namespace harmlab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(ExactSolutions, IntegerPowerExamples) {
  EXPECT_NEAR(eval_u_integer(HalfPlanePoint(0.0, 1.0), 1), 0.0, 1e-15);
  EXPECT_NEAR(eval_u_integer(HalfPlanePoint(1.0, 1.0), 2), -std::log(2.0) / kPi, 1e-14);
  EXPECT_NEAR(eval_u_integer(HalfPlanePoint(2.0, 1e-8), 2), 4.0, 1e-5);
  EXPECT_THROW(eval_u_integer(HalfPlanePoint(1.0, 1.0), 0), ValidationError);
}

TEST(ExactSolutions, FractionalPowerExamples) {
  EXPECT_NEAR(eval_u_fractional(HalfPlanePoint(0.0, 1.0), 0.5), std::sqrt(2.0) / 2, 1e-14);
  EXPECT_NEAR(eval_u_fractional(HalfPlanePoint(1.0, 1e-10), 0.5), 1.0, 1e-5);

  const double a = (std::sqrt(2.0) + 1) / 2;
  const double b = (std::sqrt(2.0) - 1) / 2;
  const double expected = std::pow(a, 1.5) - 3 * std::sqrt(a) * b;
  EXPECT_NEAR(eval_u_fractional(HalfPlanePoint(1.0, 1.0), 1.5), expected, 1e-13);
  EXPECT_NEAR(expected, 0.64359425290558262, 1e-15);
}

TEST(ExactSolutions, FractionalRejectsNearIntegerAlpha) {
  try {
    eval_u_fractional(HalfPlanePoint(1.0, 1.0), 2.0 + 1e-12);
    FAIL() << "expected NearIntegerAlpha";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), ValidationCode::NearIntegerAlpha);
  }
  EXPECT_THROW(FractionalPower(1.0), ValidationError);
  EXPECT_THROW(FractionalPower(-0.5), ValidationError);
  EXPECT_NO_THROW(FractionalPower(1.0 + 1e-6));
}

TEST(ExactSolutions, HalfAndThreeHalfClosedForms) {
  EXPECT_NEAR(eval_u_half(HalfPlanePoint(-1.0, 1e-12)), 0.0, 1e-6);
  EXPECT_NEAR(eval_u_half(HalfPlanePoint(3.0, 4.0)), 2.0, 1e-15);
  EXPECT_NEAR(eval_u_three_half(HalfPlanePoint(0.0, 1.0)), -std::sqrt(2.0) / 2, 1e-15);
}

TEST(ExactSolutions, ClosedFormsMatchFractionalBranch) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> ux(-5.0, 5.0), uy(0.01, 5.0);
  for (int i = 0; i < 200; ++i) {
    const HalfPlanePoint p(ux(rng), uy(rng));
    const double h = eval_u_fractional(p, 0.5);
    const double t = eval_u_fractional(p, 1.5);
    EXPECT_NEAR(eval_u_half(p), h, 1e-12 * (1 + std::fabs(h)));
    EXPECT_NEAR(eval_u_three_half(p), t, 1e-12 * (1 + std::fabs(t)));
  }
}

TEST(ExactSolutions, ThreeHalfStableOnNegativeAxis) {
  // Near the negative axis u ~ y alpha |x|^{alpha-1} / sin(pi alpha) = -1.5 y sqrt|x|.
  const double v = eval_u_three_half(HalfPlanePoint(-1e6, 1e-6));
  EXPECT_NEAR(v, -1.5e-3, 1e-9);
}

TEST(ExactSolutions, HeavisideExamples) {
  EXPECT_DOUBLE_EQ(eval_heaviside(HalfPlanePoint(0.0, 1.0)), 0.5);
  EXPECT_NEAR(eval_heaviside(HalfPlanePoint(1.0, 1.0)), 0.75, 1e-15);
  EXPECT_NEAR(eval_heaviside(HalfPlanePoint(-1000.0, 1.0)), 0.0, 1e-3);
}

TEST(ExactSolutions, AngularPrefactorBoundaryLimit) {
  EXPECT_DOUBLE_EQ(angular_prefactor(2.0, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(angular_prefactor(0.0, 0.0), 0.5);
  EXPECT_DOUBLE_EQ(angular_prefactor(-2.0, 0.0), 0.0);
  EXPECT_NEAR(angular_prefactor(1.0, 1.0), 0.75, 1e-15);
}

TEST(ExactSolutions, ComponentsSplitIntegerSolution) {
  auto c = eval_components(HalfPlanePoint(1.0, 1.0), 2);
  EXPECT_NEAR(c.ur, 0.0, 1e-15);
  EXPECT_NEAR(c.ui, std::log(2.0) / kPi, 1e-15);

  c = eval_components(HalfPlanePoint(0.0, 1.0), 1);
  EXPECT_NEAR(c.ur, 0.0, 1e-15);
  EXPECT_NEAR(c.ui, 0.0, 1e-15);

  for (int k = 1; k <= 4; ++k) {
    for (double x : {-2.0, 0.3, 4.0}) {
      const HalfPlanePoint p(x, 0.8);
      const auto s = eval_components(p, k);
      EXPECT_NEAR(s.ur - s.ui, eval_u_integer(p, k), 1e-12);
    }
  }
}

TEST(ExactSolutions, RegularizedExamples) {
  EXPECT_NEAR(eval_u_reg(1.0, 1.0, 1e-12, 2), -std::log(2.0) / kPi, 1e-10);
  EXPECT_DOUBLE_EQ(eval_u_reg(0.0, 0.0, 0.1, 2), 0.0);
  EXPECT_DOUBLE_EQ(eval_u_reg(0.0, 0.0, 3.0, 2), 0.0);
  EXPECT_NEAR(eval_u_reg(1.0, 1.0, 1.0, 2), -std::log(3.0) / kPi, 1e-14);
  EXPECT_THROW(eval_u_reg(1.0, 1.0, 0.0, 2), ValidationError);
  EXPECT_THROW(eval_u_reg(1.0, -1.0, 0.1, 2), ValidationError);
}

TEST(ExactSolutions, RegularizedBoundaryTraceIsReluPower) {
  // On y = 0, Im(x^k) = 0, leaving 1{x > 0} x^k.
  for (int k = 1; k <= 3; ++k) {
    EXPECT_NEAR(eval_u_reg(1.7, 0.0, 0.01, k), std::pow(1.7, k), 1e-12);
    EXPECT_NEAR(eval_u_reg(-1.7, 0.0, 0.01, k), 0.0, 1e-12);
  }
}

TEST(ExactSolutions, FractionalHomogeneity) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> ux(-3.0, 3.0), uy(0.05, 3.0), ul(0.1, 10.0);
  for (double alpha : {0.3, 0.5, 1.5, 2.7}) {
    for (int i = 0; i < 20; ++i) {
      const HalfPlanePoint p(ux(rng), uy(rng));
      const double lambda = ul(rng);
      const double lhs = eval_u_fractional(p.scaled(lambda), alpha);
      const double rhs = std::pow(lambda, alpha) * eval_u_fractional(p, alpha);
      EXPECT_NEAR(lhs, rhs, 1e-12 * (1 + std::fabs(rhs)));
    }
  }
}

TEST(ExactSolutions, IntegerScalingAnomaly) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> ux(-3.0, 3.0), uy(0.05, 3.0), ul(0.1, 10.0);
  for (int k = 1; k <= 3; ++k) {
    for (int i = 0; i < 20; ++i) {
      const HalfPlanePoint p(ux(rng), uy(rng));
      const double lambda = ul(rng);
      const double lk = std::pow(lambda, k);
      const double lhs = eval_u_integer(p.scaled(lambda), k) - lk * eval_u_integer(p, k);
      const double rhs = -lk * std::log(lambda) / kPi * integer_power(p.x(), p.y(), k).imag();
      EXPECT_NEAR(lhs, rhs, 1e-12 * (1 + std::fabs(lk * eval_u_integer(p, k))));
    }
  }
}

TEST(ExactSolutions, EvaluateDispatch) {
  const HalfPlanePoint p(0.4, 1.3);
  EXPECT_DOUBLE_EQ(evaluate(IntegerPower(2), p), eval_u_integer(p, 2));
  EXPECT_DOUBLE_EQ(evaluate(FractionalPower(0.5), p), eval_u_fractional(p, 0.5));
  EXPECT_DOUBLE_EQ(evaluate(Heaviside{}, p), eval_heaviside(p));
  EXPECT_DOUBLE_EQ(evaluate(Regularized(3, 0.1), p), eval_u_reg(p, 0.1, 3));
  EXPECT_THROW(Regularized(2, -1.0), ValidationError);
}

TEST(ExactSolutions, SolutionsAreHarmonic) {
  const HalfPlanePoint p(0.7, 1.1);
  const double h = 1e-2;
  auto check = [&](const ScalarField& f) {
    const double a = std::fabs(fd_laplacian(f, p, h));
    const double b = std::fabs(fd_laplacian(f, p, h / 2));
    EXPECT_LT(b, 1e-5);
    if (a > 1e-10) {
      EXPECT_NEAR(std::log2(a / b), 2.0, 0.2);
    }
  };
  check([](double x, double y) { return eval_u_half(HalfPlanePoint(x, y)); });
  check([](double x, double y) { return eval_u_integer(HalfPlanePoint(x, y), 3); });
  check([](double x, double y) { return eval_u_fractional(HalfPlanePoint(x, y), 0.3); });
}

TEST(ExactSolutions, ReluPowerTrace) {
  EXPECT_DOUBLE_EQ(relu_power(2.0, 2.0), 4.0);
  EXPECT_DOUBLE_EQ(relu_power(-1.0, 2.0), 0.0);
  EXPECT_DOUBLE_EQ(relu_power(0.5, 0.0), 1.0);
  EXPECT_DOUBLE_EQ(relu_power(-0.5, 0.0), 0.0);
}
