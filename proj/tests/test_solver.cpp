#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "arclen/errors.hpp"
#include "arclen/solver.hpp"
#include "arclen/trajectory.hpp"

using namespace arclen;

namespace {

// Frozen reference values, computed offline at 50-digit precision.
constexpr double kAlpha = 1.1996786402577338;
constexpr double kThetaStar = 0.98551473786231546;
constexpr double kThetaStarDeg = 56.465835127452348;
constexpr double kCoth1 = 1.3130352854993313;
constexpr double kCoth2 = 1.0373147207275481;

const ProjectileParams kNatural(1.0, 1.0);

}  // namespace

TEST_CASE("coth matches frozen references and its small-x expansion") {
  CHECK(std::fabs(coth(1.0) - kCoth1) < 5e-15);
  CHECK(std::fabs(coth(2.0) - kCoth2) < 5e-15);
  // coth x = 1/x + x/3 - x^3/45 + ...
  CHECK(std::fabs(coth(1e-4) - (1e4 + 1e-4 / 3.0)) < 1e-10);
  for (double x = 0.5; x < 6.0; x += 0.5) CHECK(coth(x) > 1.0);
}

TEST_CASE("the coth fixed point satisfies its own equation") {
  const RootResult fp = coth_fixed_point();
  CHECK(fp.converged);
  CHECK(fp.iterations >= 1);
  CHECK(std::fabs(coth(fp.root) - fp.root) <= 1e-12);
  CHECK(std::fabs(fp.root - kAlpha) < 1e-11);
  CHECK(std::fabs(fp.residual) <= 1e-12);
}

TEST_CASE("brackets without a sign change are rejected") {
  CHECK_THROWS_AS(coth_fixed_point({2.0, 3.0}), std::invalid_argument);
  CHECK_THROWS_AS(coth_fixed_point({0.5, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(solve_critical_equation({1.0, 1.3}), std::invalid_argument);
  CHECK_THROWS_AS(solve_critical_equation({0.3, 0.9}), std::invalid_argument);
}

TEST_CASE("solver configuration is validated") {
  CHECK_THROWS_AS(coth_fixed_point({2.0, 1.0}), std::invalid_argument);
  CHECK_THROWS_AS(coth_fixed_point({1.0, 2.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(coth_fixed_point({1.0, 2.0, -1e-12}), std::invalid_argument);
  CHECK_THROWS_AS(coth_fixed_point({1.0, 2.0, 1e-12, 0}), std::invalid_argument);
}

TEST_CASE("iteration budget exhaustion raises ConvergenceError") {
  CHECK_THROWS_AS(coth_fixed_point({1.0, 2.0, 1e-15, 2}), ConvergenceError);
  CHECK_THROWS_AS(maximize_arc_length_direct(kNatural, {0.1, 1.5, 1e-12, 5}),
                  ConvergenceError);
}

TEST_CASE("a narrowed bracket still finds the same fixed point") {
  const RootResult fp = coth_fixed_point({1.1, 1.3});
  CHECK(fp.converged);
  CHECK(std::fabs(fp.root - kAlpha) < 1e-11);
}

TEST_CASE("optimal angle is the arcsine of the reciprocal fixed point") {
  const RootResult angle = optimal_angle();
  CHECK(angle.converged);
  CHECK(std::fabs(angle.root - kThetaStar) < 1e-11);
  CHECK(std::fabs(radians_to_degrees(angle.root) - kThetaStarDeg) < 1e-9);
  // csc(theta*) = alpha ties the two routes together.
  CHECK(std::fabs(std::sin(angle.root) * kAlpha - 1.0) < 1e-12);
  // The reported residual is the critical residual at the root.
  CHECK(std::fabs(angle.residual) < 1e-11);
}

TEST_CASE("the critical equation root agrees with the fixed-point route") {
  const RootResult ce = solve_critical_equation();
  CHECK(ce.converged);
  CHECK(std::fabs(ce.residual) <= 1e-12);
  CHECK(std::fabs(ce.root - kThetaStar) < 1e-11);
  CHECK(std::fabs(ce.root - optimal_angle().root) < 1e-11);
  const RootResult narrow = solve_critical_equation({0.95, 1.05});
  CHECK(std::fabs(narrow.root - ce.root) < 1e-11);
}

TEST_CASE("coth x minus x is strictly decreasing where it brackets the root") {
  CHECK(coth(1.0) - 1.0 > 0.0);
  CHECK(coth(2.0) - 2.0 < 0.0);
  std::mt19937 rng(271828u);
  std::uniform_real_distribution<double> dist(0.1, 5.0);
  for (int i = 0; i < 200; ++i) {
    double x = dist(rng), y = dist(rng);
    if (x == y) continue;
    if (x > y) std::swap(x, y);
    CHECK(coth(x) - x > coth(y) - y);
  }
}

TEST_CASE("direct maximization lands on the optimum") {
  const RootResult m = maximize_arc_length_direct(kNatural);
  CHECK(m.converged);
  CHECK(std::fabs(m.root - kThetaStar) < 1e-5);
  // The residual reports the final bracket width.
  CHECK(m.residual >= 0.0);
  CHECK(m.residual < 1e-11);
}

TEST_CASE("the optimum location does not depend on v or g") {
  const RootResult m = maximize_arc_length_direct(ProjectileParams(2.5, 3.7));
  CHECK(std::fabs(m.root - kThetaStar) < 1e-5);
}

TEST_CASE("the maximum arc length equals the fixed point") {
  const double at_root = arc_length_closed_form(Angle(optimal_angle().root), kNatural);
  CHECK(std::fabs(at_root - kAlpha) < 1e-10);
  const double at_maximizer =
      arc_length_closed_form(Angle(maximize_arc_length_direct(kNatural).root), kNatural);
  CHECK(std::fabs(at_maximizer - kAlpha) < 1e-9);
}
