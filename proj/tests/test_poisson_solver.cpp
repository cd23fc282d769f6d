#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "harmlab/errors.hpp"
#include "harmlab/exact_solutions.hpp"
#include "harmlab/numerics.hpp"
#include "harmlab/poisson_solver.hpp"

using namespace harmlab;

TEST(PoissonSolver, HeavisideMatchesClosedForm) {
  EXPECT_NEAR(solve_at(BoundaryFunction::heaviside(), HalfPlanePoint(1.0, 1.0)), 0.75, 1e-9);
  EXPECT_NEAR(solve_at(BoundaryFunction::heaviside(), HalfPlanePoint(-3.0, 0.01)),
              eval_heaviside(HalfPlanePoint(-3.0, 0.01)), 1e-9);
}

TEST(PoissonSolver, HalfPowerMatchesClosedForm) {
  EXPECT_NEAR(solve_at(BoundaryFunction::relu_power(0.5), HalfPlanePoint(3.0, 4.0)), 2.0, 1e-7);
}

TEST(PoissonSolver, ConstantDataIsReproduced) {
  for (double c : {-2.5, 0.0, 1.0, 7.0}) {
    EXPECT_NEAR(solve_at(BoundaryFunction::constant(c), HalfPlanePoint(0.3, 2.0)), c, 1e-9 * (1 + std::fabs(c)));
  }
  const BoundaryFunction custom(CustomData{[](double) { return 4.0; }, 0.0, 4.0, {}});
  EXPECT_NEAR(solve_at(custom, HalfPlanePoint(-1.0, 0.5)), 4.0, 1e-8);
}

TEST(PoissonSolver, FractionalPowersMatchClosedForm) {
  for (double alpha : {0.1, 0.3, 0.5, 0.9}) {
    for (double x : {-2.0, 0.0, 0.7, 3.0}) {
      for (double y : {0.05, 1.0, 5.0}) {
        const HalfPlanePoint p(x, y);
        const double want = eval_u_fractional(p, alpha);
        const double got = solve_at(BoundaryFunction::relu_power(alpha), p);
        EXPECT_NEAR(got, want, 1e-6 * std::fabs(want) + 1e-12) << alpha << " " << x << " " << y;
      }
    }
  }
}

TEST(PoissonSolver, ShiftedAndScaledNeuron) {
  // relu^a(w t + b) = |w|^a relu^a(t + b/w) for w > 0, so u(x, y) = w^a u_a(x + b/w, y).
  const double a = 0.5, w = 2.0, b = -1.0;
  const HalfPlanePoint p(0.4, 0.6);
  const double want = std::pow(w, a) * eval_u_half(HalfPlanePoint(p.x() + b / w, p.y()));
  EXPECT_NEAR(solve_at(BoundaryFunction::relu_power(a, w, b), p), want, 1e-8);
}

TEST(PoissonSolver, TanhIsOddAboutTheAxis) {
  const auto g = BoundaryFunction::tanh();
  EXPECT_NEAR(solve_at(g, HalfPlanePoint(0.0, 1.3)), 0.0, 1e-9);
  const double a = solve_at(g, HalfPlanePoint(0.8, 0.5));
  const double b = solve_at(g, HalfPlanePoint(-0.8, 0.5));
  EXPECT_NEAR(a, -b, 1e-9);
  EXPECT_GT(a, 0.0);
}

TEST(PoissonSolver, SolutionIsHarmonic) {
  const auto g = BoundaryFunction::tanh(1.0, 0.3);
  auto f = [&g](double x, double y) { return solve_at(g, HalfPlanePoint(x, y), 1e-13); };
  const HalfPlanePoint p(0.2, 0.9);
  EXPECT_LT(std::fabs(fd_laplacian(f, p, 1e-2)), 1e-4);
}

TEST(PoissonSolver, GrowthCertificate) {
  try {
    BoundaryFunction::relu_power(1.0);
    FAIL() << "expected GrowthViolation";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.code(), ValidationCode::GrowthViolation);
  }
  EXPECT_THROW(BoundaryFunction(PolynomialData{{0.0, 1.0}}), ValidationError);
  const auto r = BoundaryFunction::relu_power(0.5, -3.0, 2.0);
  EXPECT_DOUBLE_EQ(r.growth_alpha(), 0.5);
  EXPECT_NEAR(r.growth_const(), std::sqrt(3.0), 1e-15);
  ASSERT_EQ(r.kinks().size(), 1u);
  EXPECT_NEAR(r.kinks()[0], 2.0 / 3.0, 1e-15);
}

TEST(PoissonSolver, ParseBoundarySpecs) {
  EXPECT_DOUBLE_EQ(BoundaryFunction::parse("relu:0.5")(4.0), 2.0);
  EXPECT_DOUBLE_EQ(BoundaryFunction::parse("relu:0.5:2:1")(1.5), 2.0);
  EXPECT_DOUBLE_EQ(BoundaryFunction::parse("heaviside")(0.1), 1.0);
  EXPECT_DOUBLE_EQ(BoundaryFunction::parse("heaviside")(-0.1), 0.0);
  EXPECT_NEAR(BoundaryFunction::parse("tanh:2:0")(0.5), std::tanh(1.0), 1e-15);
  EXPECT_DOUBLE_EQ(BoundaryFunction::parse("const:3")(-9.0), 3.0);
  EXPECT_THROW(BoundaryFunction::parse("cubic"), ValidationError);
  EXPECT_THROW(BoundaryFunction::parse("relu:x"), ValidationError);
  EXPECT_THROW(BoundaryFunction::parse("relu:1.5"), ValidationError);
}

TEST(PoissonSolver, GridMatchesClosedForms) {
  const GridSpec grid(1.0, 8, 8, 1.0);
  const auto values = solve_grid(BoundaryFunction::heaviside(), grid);
  ASSERT_EQ(values.size(), grid.node_count());
  for (std::size_t i = 0; i < values.size(); ++i) {
    EXPECT_NEAR(values[i], eval_heaviside(from_polar(grid.node(i))), 1e-9);
  }

  const GridSpec g2(2.0, 8, 8, 1.0);
  const auto frac = solve_grid(BoundaryFunction::relu_power(0.3), g2);
  for (std::size_t i = 0; i < frac.size(); ++i) {
    const double want = eval_u_fractional(from_polar(g2.node(i)), 0.3);
    EXPECT_NEAR(frac[i], want, 1e-6 * std::fabs(want));
  }
}
