#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "harmlab/barron.hpp"
#include "harmlab/errors.hpp"
#include "harmlab/numerics.hpp"
#include "harmlab/one_dim_barron.hpp"

using namespace harmlab;

namespace {

constexpr double kPi = std::numbers::pi;

double factorial(int n) {
  double f = 1.0;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

DifferentiableFunction1D cubic() {
  DifferentiableFunction1D df;
  df.f = [](double x) { return x * x * x; };
  df.derivative = [](double x) { return 6.0 * x; };
  df.k = 1;
  return df;
}

}  // namespace

TEST(OneDimBarron, NormOfCubic) {
  // int_{-1}^{1} 6|x| (1 + |x|) dx = 6 (1 + 2/3) = 10.
  EXPECT_NEAR(barron_norm_upper(cubic()), 10.0, 1e-8);
}

TEST(OneDimBarron, NormOfSine) {
  DifferentiableFunction1D df;
  df.f = [](double x) { return std::sin(x); };
  df.derivative = [](double x) { return -std::sin(x); };
  df.k = 1;
  df.lo = -kPi;
  df.hi = kPi;
  EXPECT_NEAR(barron_norm_upper(df), 4.0 + 2.0 * kPi, 1e-8);
}

TEST(OneDimBarron, NormOfLowDegreePolynomialIsZero) {
  DifferentiableFunction1D df;
  df.f = [](double x) { return 1 + x + x * x; };
  df.derivative = [](double) { return 0.0; };
  df.k = 2;
  EXPECT_EQ(barron_norm_upper(df), 0.0);
}

TEST(OneDimBarron, NormOnInfiniteSupport) {
  // f'' = e^{-x^2}: int e^{-x^2}(1 + |x|) = sqrt(pi) + 1.
  DifferentiableFunction1D df;
  df.f = [](double) { return 0.0; };
  df.derivative = [](double x) { return std::exp(-x * x); };
  df.k = 1;
  df.lo = -kInf;
  df.hi = kInf;
  EXPECT_NEAR(barron_norm_upper(df), std::sqrt(kPi) + 1.0, 1e-8);
}

TEST(OneDimBarron, IntegrableSingularityIsAccepted) {
  // f'' = |x|^{-1/2} on [-1, 1]: 2 int_0^1 x^{-1/2} + x^{1/2} dx = 2 (2 + 2/3).
  DifferentiableFunction1D df;
  df.f = [](double) { return 0.0; };
  df.derivative = [](double x) { return 1.0 / std::sqrt(std::fabs(x)); };
  df.k = 1;
  df.singular_points = {0.0};
  EXPECT_NEAR(barron_norm_upper(df), 16.0 / 3.0, 1e-7);
}

TEST(OneDimBarron, LogarithmicDivergenceIsDetected) {
  DifferentiableFunction1D df;
  df.f = [](double x) { return x > 0 ? x * std::log(x) : 0.0; };
  df.derivative = [](double x) { return 1.0 / x; };
  df.k = 1;
  df.lo = 0.0;
  df.hi = 1.0;
  df.singular_points = {0.0};
  try {
    barron_norm_upper(df);
    FAIL() << "expected DivergenceDetected";
  } catch (const NumericalError& e) {
    EXPECT_EQ(e.code(), NumericalCode::DivergenceDetected);
  }
}

TEST(OneDimBarron, EnsembleReproducesCubic) {
  const std::vector<double> taylor{0.0, 0.0};
  const auto e = ensemble_from_derivative(cubic(), 1000, taylor);
  double worst = 0.0;
  for (int i = 0; i <= 200; ++i) {
    const double x = -1.0 + 2.0 * i / 200.0;
    worst = std::max(worst, std::fabs(ensemble_eval(e, x) - x * x * x));
  }
  EXPECT_LE(worst, 1e-4);
  // Cost is a Riemann sum of the same integral as the norm.
  EXPECT_NEAR(barron_cost(e), 10.0, 0.1);
}

TEST(OneDimBarron, EnsembleReproducesSmoothFunctionWithPolynomialPart) {
  // f = e^x with k = 2; Taylor data (1, 1, 1/2).
  DifferentiableFunction1D df;
  df.f = [](double x) { return std::exp(x); };
  df.derivative = [](double x) { return std::exp(x); };
  df.k = 2;
  const std::vector<double> taylor{1.0, 1.0, 0.5};
  const auto e = ensemble_from_derivative(df, 2000, taylor);
  for (double x : {-0.9, -0.2, 0.0, 0.35, 1.0}) EXPECT_NEAR(ensemble_eval(e, x), std::exp(x), 1e-5);
  // Integral part costs (1/k!) int |f'''| (1 + |t|)^k.
  const double integral =
      (integrate_adaptive([](double t) { return std::exp(t) * std::pow(1 + std::fabs(t), 2); },
                          std::vector<double>{-1.0, 0.0, 1.0}, 1e-12)) /
      factorial(2);
  EXPECT_NEAR(barron_cost(e), integral + polynomial_part_cost(2, taylor), 1e-2 * barron_cost(e));
}

TEST(OneDimBarron, PolynomialHasNoIntegralPart) {
  DifferentiableFunction1D df;
  df.f = [](double x) { return 2 - x + 3 * x * x; };
  df.derivative = [](double) { return 0.0; };
  df.k = 2;
  const std::vector<double> taylor{2.0, -1.0, 3.0};
  const auto e = ensemble_from_derivative(df, 50, taylor);
  EXPECT_EQ(e.size(), 6u);
  EXPECT_NEAR(barron_cost(e), polynomial_part_cost(2, taylor), 1e-12);
  for (double x : {-1.0, -0.4, 0.1, 0.8}) EXPECT_NEAR(ensemble_eval(e, x), df.f(x), 1e-12);
}

TEST(OneDimBarron, SingleNeuronTargetIsExact) {
  const NeuronEnsemble e({Neuron{1.0, {1.0, 0.0}, -1.0 / 3.0}}, {1.0}, 2.0, 1);
  for (int i = 0; i < 20; ++i) {
    const double x = -1.0 + 0.1 * i;
    const double want = x > 1.0 / 3.0 ? (x - 1.0 / 3.0) * (x - 1.0 / 3.0) : 0.0;
    EXPECT_DOUBLE_EQ(ensemble_eval(e, x), want);
  }
}

TEST(OneDimBarron, EnsembleValidation) {
  auto df = cubic();
  const std::vector<double> short_taylor{0.0};
  EXPECT_THROW(ensemble_from_derivative(df, 10, short_taylor), ValidationError);
  df.lo = 0.5;
  const std::vector<double> taylor{0.0, 0.0};
  EXPECT_THROW(ensemble_from_derivative(df, 10, taylor), ValidationError);
}

TEST(OneDimBarron, LeibnizDerivativeOfXkLogX) {
  for (int k = 1; k <= 4; ++k) {
    for (double x : {0.1, 0.5, 2.0}) {
      EXPECT_NEAR(xklogx_derivative(k, x), factorial(k) / x, 1e-12 * factorial(k) / x);
    }
  }
  // Independent check of k = 2 against a finite difference.
  const double fd = fd_derivative([](double x) { return x * x * std::log(x); }, 0.7, 3, 1e-2);
  EXPECT_NEAR(xklogx_derivative(2, 0.7), fd, 1e-6);
}

TEST(OneDimBarron, CriterionIntegralClosedForm) {
  // int_delta^1 (k!/x)(1 + x^k) dx = k! (|log delta| + (1 - delta^k)/k).
  for (int k = 1; k <= 3; ++k) {
    const double delta = 1e-4;
    const double want = factorial(k) * (-std::log(delta) + (1 - std::pow(delta, k)) / k);
    EXPECT_NEAR(xklogx_criterion_integral(k, delta), want, 1e-9 * want);
  }
}

TEST(OneDimBarron, LogDivergenceSlopes) {
  const std::vector<double> deltas{1e-2, 1e-3, 1e-4, 1e-5, 1e-6};
  for (int k = 1; k <= 3; ++k) {
    const auto fit = log_divergence_diagnostic(k, deltas);
    EXPECT_NEAR(fit.slope / factorial(k), 1.0, 0.02);
    EXPECT_GE(fit.r_squared, 0.999);
  }
  const std::vector<double> bad{1e-3, 1e-2, 1e-4};
  EXPECT_THROW(log_divergence_diagnostic(1, bad), ValidationError);
  const std::vector<double> too_few{1e-2, 1e-3};
  EXPECT_THROW(log_divergence_diagnostic(1, too_few), ValidationError);
}
