#include "arclen/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "arclen/errors.hpp"

namespace arclen {

namespace {

void validate_config(const QuadratureConfig& cfg) {
  if (!(cfg.rel_tol > 0.0) || !(cfg.abs_tol > 0.0))
    throw std::invalid_argument("QuadratureConfig: tolerances must be > 0");
  if (cfg.max_depth < 1) throw std::invalid_argument("QuadratureConfig: max_depth must be >= 1");
}

double simpson(double fa, double fm, double fb, double width) {
  return width / 6.0 * (fa + 4.0 * fm + fb);
}

// Classic recursive adaptive Simpson with Richardson correction; the
// tolerance is halved per side so the per-piece budget bounds the sum.
double adapt(const std::function<double(double)>& f, double a, double b, double fa, double fm,
             double fb, double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  if (lm <= a || rm <= m || m >= b) return whole;  // interval at machine resolution
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(fa, flm, fm, m - a);
  const double right = simpson(fm, frm, fb, b - m);
  const double refined = left + right;
  const double err = refined - whole;
  if (std::fabs(err) <= 15.0 * tol) return refined + err / 15.0;
  if (depth <= 0)
    throw ConvergenceError("integrate: recursion depth exhausted on [" + std::to_string(a) +
                           ", " + std::to_string(b) + "] before meeting tolerance");
  const double half_tol = 0.5 * tol;
  return adapt(f, a, m, fa, flm, fm, left, half_tol, depth - 1) +
         adapt(f, m, b, fm, frm, fb, right, half_tol, depth - 1);
}

double integrate_smooth(const std::function<double(double)>& f, double a, double b, double tol,
                        int max_depth) {
  const double fa = f(a);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double fb = f(b);
  return adapt(f, a, b, fa, fm, fb, simpson(fa, fm, fb, b - a), tol, max_depth);
}

}  // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 const QuadratureConfig& config) {
  validate_config(config);
  if (a > b) throw std::domain_error("integrate: lower limit exceeds upper limit");
  if (a == b) return 0.0;

  std::vector<double> nodes;
  nodes.push_back(a);
  for (double p : config.split_points) {
    if (!(p > a) || !(p < b))
      throw std::invalid_argument("integrate: split point " + std::to_string(p) +
                                  " not strictly inside the interval");
    if (p <= nodes.back())
      throw std::invalid_argument("integrate: split points must be strictly increasing");
    nodes.push_back(p);
  }
  nodes.push_back(b);

  // Coarse scale estimate so rel_tol has something to be relative to.
  double scale = 0.0;
  for (size_t i = 0; i + 1 < nodes.size(); ++i) {
    const double lo = nodes[i], hi = nodes[i + 1];
    scale += std::fabs(simpson(f(lo), f(0.5 * (lo + hi)), f(hi), hi - lo));
  }
  const double pieces = static_cast<double>(nodes.size() - 1);
  const double tol = std::max(config.abs_tol, config.rel_tol * scale) / pieces;

  double total = 0.0;
  for (size_t i = 0; i + 1 < nodes.size(); ++i)
    total += integrate_smooth(f, nodes[i], nodes[i + 1], tol, config.max_depth);
  return total;
}

double arc_length_quadrature(Angle theta, const ProjectileParams& params,
                             const QuadratureConfig& config) {
  const double v = params.v();
  const double g = params.g();
  const double tau = flight_time(theta, params);
  const double vx = v * std::cos(theta.radians());
  const double vs = v * std::sin(theta.radians());

  QuadratureConfig cfg = config;
  cfg.split_points.clear();
  // Vertical launch: speed is |v - g t|, with a kink at the apex t = v/g.
  if (theta.is_vertical()) cfg.split_points.push_back(v / g);

  return integrate([vx, vs, g](double t) { return std::hypot(vx, vs - g * t); }, 0.0, tau, cfg);
}

double leibniz_derivative(const ParametricIntegral& integral, double alpha,
                          const QuadratureConfig& config) {
  if (!integral.integrand || !integral.lower_limit || !integral.upper_limit)
    throw std::invalid_argument("leibniz_derivative: integrand and both limits are required");

  const double h = std::max(std::fabs(alpha), 1.0) * 1e-6;
  const double a = integral.lower_limit(alpha);
  const double b = integral.upper_limit(alpha);
  const double a_lo = integral.lower_limit(alpha - h), a_hi = integral.lower_limit(alpha + h);
  const double b_lo = integral.upper_limit(alpha - h), b_hi = integral.upper_limit(alpha + h);
  if (a > b || a_lo > b_lo || a_hi > b_hi)
    throw std::domain_error("leibniz_derivative: integration limits cross near alpha");

  const double da = (a_hi - a_lo) / (2.0 * h);
  const double db = (b_hi - b_lo) / (2.0 * h);

  std::function<double(double)> partial;
  if (integral.integrand_partial) {
    partial = [&](double x) { return integral.integrand_partial(x, alpha); };
  } else {
    partial = [&](double x) {
      return (integral.integrand(x, alpha + h) - integral.integrand(x, alpha - h)) / (2.0 * h);
    };
  }

  const double bulk = integrate(partial, a, b, config);
  return bulk + integral.integrand(b, alpha) * db - integral.integrand(a, alpha) * da;
}

double central_difference(const std::function<double(double)>& fn, double x, double h) {
  if (!(h > 0.0)) throw std::invalid_argument("central_difference: step must be > 0");
  return (fn(x + h) - fn(x - h)) / (2.0 * h);
}

double default_fd_step(double x) {
  static const double cbrt_eps = std::cbrt(std::numeric_limits<double>::epsilon());
  return std::max(std::fabs(x), 1.0) * cbrt_eps;
}

ParametricIntegral projectile_arc_length_integral(const ProjectileParams& params) {
  const double v = params.v();
  const double g = params.g();
  ParametricIntegral integral;
  integral.integrand = [v, g](double t, double th) {
    return std::hypot(v * std::cos(th), v * std::sin(th) - g * t);
  };
  integral.lower_limit = [](double) { return 0.0; };
  integral.upper_limit = [v, g](double th) { return 2.0 * v * std::sin(th) / g; };
  integral.integrand_partial = [v, g](double t, double th) {
    return -g * t * v * std::cos(th) /
           std::hypot(v * std::cos(th), v * std::sin(th) - g * t);
  };
  return integral;
}

}  // namespace arclen
