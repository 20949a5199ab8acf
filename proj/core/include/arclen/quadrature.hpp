#pragma once

#include <functional>
#include <vector>

#include "arclen/trajectory.hpp"

// Numerical oracles, independent of the closed forms in trajectory.hpp:
// adaptive Simpson integration, a Leibniz-rule differentiator for integrals
// with parameter-dependent limits, and a central finite difference.
//
// The routines are pure and reentrant; user-supplied callables must
// themselves be safe under concurrent calls if used from several threads.

namespace arclen {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-12;
  int max_depth = 50;
  // Interior abscissae where the integrand is continuous but not smooth.
  // Must be strictly increasing and strictly inside (a, b).
  std::vector<double> split_points;
};

// Adaptive Simpson estimate of the integral of f over [a, b], accurate to
// max(rel_tol * |integral|, abs_tol) for integrands smooth between split
// points. Throws std::domain_error if a > b, std::invalid_argument for bad
// config or split points, ConvergenceError if max_depth is exhausted.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& config = {});

// Arc length as the time integral of speed over [0, flight_time]. Accepts
// the vertical launch: its integrand |v - g t| has a kink at t = v/g, which
// is handled by splitting the interval there.
double arc_length_quadrature(Angle theta, const ProjectileParams& params,
                             const QuadratureConfig& config = {});

// Integral of f(x, alpha) from a(alpha) to b(alpha), to be differentiated
// in alpha. If integrand_partial is empty, d f / d alpha is taken by
// central difference in alpha.
struct ParametricIntegral {
  std::function<double(double, double)> integrand;          // f(x, alpha)
  std::function<double(double)> lower_limit;                // a(alpha)
  std::function<double(double)> upper_limit;                // b(alpha)
  std::function<double(double, double)> integrand_partial;  // df/dalpha, optional
};

// d/dalpha of the parametric integral via the Leibniz rule:
//   integral of df/dalpha over [a, b]
//   + f(b, alpha) b'(alpha) - f(a, alpha) a'(alpha),
// with the limit derivatives taken by central difference with step
// max(|alpha|, 1) * 1e-6. Hypothesis violations (a discontinuous partial
// inside the interval) are not detected; the caller is responsible for the
// smoothness requirements.
double leibniz_derivative(const ParametricIntegral& integral, double alpha,
                          const QuadratureConfig& config = {});

// (fn(x + h) - fn(x - h)) / (2 h). Requires h > 0.
double central_difference(const std::function<double(double)>& fn, double x, double h);

// Truncation/rounding balanced default step, max(|x|, 1) * eps^(1/3).
double default_fd_step(double x);

inline double central_difference(const std::function<double(double)>& fn, double x) {
  return central_difference(fn, x, default_fd_step(x));
}

// The projectile arc-length integrand over alpha = theta, with the analytic
// partial  d(speed)/d(theta) = -g t v cos(theta) / speed,  so that
// leibniz_derivative applied to it checks the closed-form derivative
// through a genuinely different route.
ParametricIntegral projectile_arc_length_integral(const ProjectileParams& params);

}  // namespace arclen
