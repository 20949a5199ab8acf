#include "arclen/solver.hpp"

#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "arclen/quadrature.hpp"

namespace arclen {

namespace {

void validate_config(const RootConfig& cfg, const char* who) {
  if (!(cfg.bracket_lo < cfg.bracket_hi))
    throw std::invalid_argument(std::string(who) + ": bracket_lo must be below bracket_hi");
  if (!(cfg.tol > 0.0)) throw std::invalid_argument(std::string(who) + ": tol must be > 0");
  if (cfg.max_iter < 1) throw std::invalid_argument(std::string(who) + ": max_iter must be >= 1");
}

// Newton iteration confined to a sign-changing bracket; any step that would
// leave the bracket, or a vanishing derivative, falls back to bisection.
// Convergence requires a small residual and a small step/bracket width at
// the same time.
RootResult newton_bisect(const std::function<double(double)>& f,
                         const std::function<double(double)>& df, const RootConfig& cfg,
                         const char* who) {
  validate_config(cfg, who);
  double lo = cfg.bracket_lo, hi = cfg.bracket_hi;
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return {lo, 0.0, 0, true};
  if (fhi == 0.0) return {hi, 0.0, 0, true};
  if ((flo > 0.0) == (fhi > 0.0))
    throw std::invalid_argument(std::string(who) + ": no sign change over [" +
                                std::to_string(lo) + ", " + std::to_string(hi) + "]");

  double x = 0.5 * (lo + hi);
  double last_step = hi - lo;
  for (int iter = 1; iter <= cfg.max_iter; ++iter) {
    const double fx = f(x);
    if ((fx > 0.0) == (flo > 0.0)) {
      lo = x;
      flo = fx;
    } else {
      hi = x;
      fhi = fx;
    }
    const double width = std::min(hi - lo, std::fabs(last_step));
    if (std::fabs(fx) <= cfg.tol && width <= cfg.tol * std::max(1.0, std::fabs(x)))
      return {x, fx, iter, true};

    const double dfx = df(x);
    double next = x - fx / dfx;
    if (!std::isfinite(next) || !(next > lo) || !(next < hi)) next = 0.5 * (lo + hi);
    last_step = next - x;
    x = next;
  }
  throw ConvergenceError(std::string(who) + ": no convergence within " +
                         std::to_string(cfg.max_iter) + " iterations");
}

}  // namespace

double coth(double x) { return 1.0 / std::tanh(x); }

RootResult coth_fixed_point(const RootConfig& config) {
  return newton_bisect([](double x) { return coth(x) - x; },
                       [](double x) {
                         const double c = coth(x);
                         return -c * c;  // d/dx (coth x - x) = -csch^2 x - 1
                       },
                       config, "coth_fixed_point");
}

RootResult optimal_angle(const RootConfig& config) {
  const RootResult fp = coth_fixed_point(config);
  RootResult out;
  out.root = std::asin(1.0 / fp.root);
  out.residual = critical_residual(Angle(out.root));
  out.iterations = fp.iterations;
  out.converged = fp.converged;
  return out;
}

RootResult solve_critical_equation(const RootConfig& config) {
  return newton_bisect(
      [](double th) { return critical_residual(Angle(th)); },
      [](double th) {
        const double s = std::sin(th), c = std::cos(th);
        return c * std::atanh(s) + s / c;
      },
      config, "solve_critical_equation");
}

RootResult maximize_arc_length_direct(const ProjectileParams& params, const RootConfig& config) {
  validate_config(config, "maximize_arc_length_direct");
  // Tighter-than-default quadrature: near the flat maximum the golden-section
  // comparisons must stay above the integration error.
  const QuadratureConfig quad{1e-12, 1e-14, 50, {}};
  const auto length = [&](double th) {
    return arc_length_quadrature(Angle(th), params, quad);
  };

  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = config.bracket_lo, b = config.bracket_hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = length(c);
  double fd = length(d);

  for (int iter = 1; iter <= config.max_iter; ++iter) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = length(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = length(d);
    }
    const double mid = 0.5 * (a + b);
    if (b - a <= config.tol * std::max(1.0, std::fabs(mid)))
      return {mid, b - a, iter, true};
  }
  throw ConvergenceError(
      "maximize_arc_length_direct: bracket did not shrink to tolerance within " +
      std::to_string(config.max_iter) + " iterations");
}

}  // namespace arclen
