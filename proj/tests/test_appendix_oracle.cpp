#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "harmlab/appendix_oracle.hpp"
#include "harmlab/errors.hpp"
#include "harmlab/numerics.hpp"

using namespace harmlab;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST(AppendixOracle, ValueAtUnitAxisPoint) {
  // f(x) = x arctan(x) has f''(0) = 2.
  EXPECT_NEAR(closed_form_dk1(HalfPlanePoint(0.0, 1.0), 1), 2.0, 1e-14);
  EXPECT_NEAR(closed_form_dk1_literal(HalfPlanePoint(0.0, 1.0), 1), 2.0, 1e-14);
}

TEST(AppendixOracle, MatchesFiniteDifferences) {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> ux(-2.0, 2.0), uy(0.3, 2.0);
  for (int k = 1; k <= 3; ++k) {
    for (int i = 0; i < 10; ++i) {
      const double x = ux(rng), y = uy(rng);
      const double fd = fd_derivative([y, k](double s) { return arctan_real_part(s, y, k); }, x, k + 1, 1e-2);
      const double cf = closed_form_dk1(HalfPlanePoint(x, y), k);
      EXPECT_NEAR(cf, fd, 1e-4 * std::max(1.0, std::fabs(fd))) << "k=" << k << " x=" << x << " y=" << y;
    }
  }
}

TEST(AppendixOracle, StableAndLiteralFormsAgree) {
  for (int k = 1; k <= 5; ++k) {
    for (double phi : {0.3, 1.0, 2.0, 2.9}) {
      const auto p = from_polar({1.7, phi});
      const double a = closed_form_dk1(p, k), b = closed_form_dk1_literal(p, k);
      EXPECT_NEAR(a, b, 1e-12 * std::max(1.0, std::fabs(b)));
    }
  }
}

TEST(AppendixOracle, SmallAngleDecay) {
  // The stable form is (k!/2r)(2 sin phi)^{k+1} sin((k+1) pi/2 - k phi): exponent k+1
  // for even k; for odd k the sine factor is itself O(phi), giving k+2.
  const std::vector<double> phis{1e-1, 3e-2, 1e-2, 3e-3, 1e-3};
  for (int k = 1; k <= 4; ++k) {
    std::vector<double> vals;
    for (double phi : phis) vals.push_back(std::fabs(closed_form_dk1(from_polar({1.0, phi}), k)));
    const auto fit = fit_loglog(phis, vals);
    const double expected = k % 2 == 0 ? k + 1 : k + 2;
    EXPECT_NEAR(fit.slope, expected, 0.1) << "k=" << k;
  }
}

TEST(AppendixOracle, SliceConstantExamples) {
  EXPECT_NEAR(slice_log_constant(2, kPi / 4), 2.0 / kPi, 1e-15);
  EXPECT_NEAR(slice_log_constant(1, kPi / 4), 1.0 / kPi, 1e-15);
}

TEST(AppendixOracle, SliceFitRecoversLogCoefficient) {
  const std::vector<std::pair<int, double>> cases{{1, kPi / 4}, {2, kPi / 4}, {2, 1.0}, {3, 0.5}, {2, 2.5}};
  for (const auto& [k, theta] : cases) {
    const auto fit = slice_log_fit(k, theta);
    const double want = slice_log_constant(k, theta);
    EXPECT_NEAR(fit.c_fit, want, 1e-6 * std::fabs(want)) << k << " " << theta;
    EXPECT_LT(fit.residual, 1e-10);
  }
}

TEST(AppendixOracle, SliceFitRejectsDegenerateAngles) {
  try {
    slice_log_fit(3, kPi / 3);
    FAIL() << "expected DegenerateAngle";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), ValidationCode::DegenerateAngle);
  }
  EXPECT_THROW(slice_log_fit(2, kPi / 2), ValidationError);
  EXPECT_THROW(slice_log_fit(2, 0.0), ValidationError);
  EXPECT_THROW(slice_log_fit(2, 0.7, 5), ValidationError);
}

TEST(AppendixOracle, SliceBarronIntegralIsFinite) {
  for (int k : {1, 2, 4}) {
    const auto rep = ur_slice_barron_check(k);
    EXPECT_TRUE(std::isfinite(rep.value));
    EXPECT_GT(rep.value, 0.0);
    ASSERT_EQ(rep.truncated.size(), rep.cutoffs.size());
    // Truncated integrals increase towards the full value.
    for (std::size_t i = 0; i + 1 < rep.truncated.size(); ++i) {
      EXPECT_LE(rep.truncated[i], rep.truncated[i + 1] * (1 + 1e-9));
    }
    EXPECT_LE(rep.truncated.back(), rep.value * (1 + 1e-9));
    // Integrand tail ~ xi^{-2} for even k and xi^{-3} for odd k.
    const double expected = k % 2 == 0 ? 2.0 : 3.0;
    EXPECT_NEAR(rep.tail_exponent, expected, 0.1) << "k=" << k;
    EXPECT_GE(rep.tail_r_squared, 0.99);
  }
  EXPECT_THROW(ur_slice_barron_check(0), ValidationError);
}
