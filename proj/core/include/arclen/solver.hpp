#pragma once

#include "arclen/errors.hpp"
#include "arclen/trajectory.hpp"

// Three independent routes to the arc-length-maximizing launch angle:
//   1. the unique positive fixed point alpha of coth, with theta = asin(1/alpha);
//   2. a direct root of the critical residual sin(theta) atanh(sin(theta)) - 1;
//   3. derivative-free maximization of the quadrature arc length.
// None of them shares a formula with the others past the integrand itself.

namespace arclen {

struct RootConfig {
  double bracket_lo;
  double bracket_hi;
  double tol = 1e-12;
  int max_iter = 200;
};

struct RootResult {
  double root;
  double residual;
  int iterations;
  bool converged;
};

double coth(double x);

// Solves coth(x) = x on the bracket (default [1, 2]; coth > 1 on (0, inf)
// forces the fixed point above 1, and coth(2) < 2 certifies the other end).
// Newton steps safeguarded by bisection; converges on residual and step
// width together. Throws std::invalid_argument if the bracket has no sign
// change, ConvergenceError past max_iter.
RootResult coth_fixed_point(const RootConfig& config = {1.0, 2.0});

// asin(1/alpha) for the fixed point alpha: the launch angle maximizing arc
// length. Takes no physical parameters; the optimum depends on neither v
// nor g. The reported residual is the critical residual at the root.
RootResult optimal_angle(const RootConfig& config = {1.0, 2.0});

// Root of sin(theta) atanh(sin(theta)) = 1 on the default bracket
// [0.7, 1.3]; never evaluates coth.
RootResult solve_critical_equation(const RootConfig& config = {0.7, 1.3});

// Golden-section maximization of arc_length_quadrature over the bracket
// (default [0.1, pi/2 - 1e-6], where the arc length is unimodal by the sign
// structure of its derivative). root is the argmax; residual reports the
// final bracket width.
RootResult maximize_arc_length_direct(const ProjectileParams& params,
                                      const RootConfig& config = {0.1, half_pi - 1e-6});

}  // namespace arclen
