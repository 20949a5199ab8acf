#include "arclen/verification.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <random>

#include "arclen/quadrature.hpp"
#include "arclen/solver.hpp"
#include "arclen/sweep.hpp"

namespace arclen {

namespace {

const ProjectileParams kNatural(1.0, 1.0);

std::string max_err(double value) { return "max error " + format_double(value); }

VerificationCheck closed_form_matches_quadrature() {
  double worst = 0.0;
  for (int i = 0; i <= 24; ++i) {
    const Angle theta(0.05 + i * (1.52 - 0.05) / 24.0);
    worst = std::max(worst, std::fabs(arc_length_closed_form(theta, kNatural) -
                                      arc_length_quadrature(theta, kNatural)));
  }
  return {"closed_form_matches_quadrature", worst <= 1e-9, max_err(worst)};
}

VerificationCheck vertical_launch_split_quadrature() {
  const double natural = std::fabs(arc_length_quadrature(Angle(half_pi), kNatural) - 1.0);
  const ProjectileParams p(3.0, 9.8);
  const double scaled =
      std::fabs(arc_length_quadrature(Angle(half_pi), p) - p.length_scale()) / p.length_scale();
  const double worst = std::max(natural, scaled);
  return {"vertical_launch_split_quadrature", worst <= 1e-10, max_err(worst)};
}

VerificationCheck landing_speed_equals_launch_speed() {
  std::mt19937 rng(20260822u);
  std::uniform_real_distribution<double> angle_dist(0.05, half_pi);
  std::uniform_real_distribution<double> scale_dist(0.1, 100.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const Angle theta(angle_dist(rng));
    const ProjectileParams p(scale_dist(rng), scale_dist(rng));
    const double tau = flight_time(theta, p);
    worst = std::max(worst, std::fabs(speed(tau, theta, p) - p.v()) / p.v());
  }
  return {"landing_speed_equals_launch_speed", worst <= 1e-12, "max relative " + format_double(worst)};
}

VerificationCheck derivative_three_routes_agree() {
  const QuadratureConfig tight{1e-12, 1e-14, 50, {}};
  const ParametricIntegral integral = projectile_arc_length_integral(kNatural);
  double worst = 0.0;
  for (int i = 0; i < 20; ++i) {
    const double th = 0.1 + i * (1.45 - 0.1) / 19.0;
    const double closed = arc_length_derivative_closed_form(Angle(th), kNatural);
    const double leibniz = leibniz_derivative(integral, th, tight);
    const double diff = central_difference(
        [&](double x) { return arc_length_quadrature(Angle(x), kNatural, tight); }, th, 1e-6);
    worst = std::max({worst, std::fabs(closed - leibniz), std::fabs(closed - diff),
                      std::fabs(leibniz - diff)});
  }
  return {"derivative_three_routes_agree", worst <= 1e-5, max_err(worst)};
}

VerificationCheck antiderivative_identity() {
  // integral of -g t / speed over a flight equals (v sin/g) ln((1-sin)/(1+sin))
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double th = 0.1 + i * (1.45 - 0.1) / 9.0;
    const double s = std::sin(th), c = std::cos(th);
    const double tau = 2.0 * s;
    const double numeric = integrate(
        [s, c](double t) { return -t / std::hypot(c, s - t); }, 0.0, tau, {});
    const double closed = s * std::log((1.0 - s) / (1.0 + s));
    worst = std::max(worst, std::fabs(numeric - closed));
  }
  return {"antiderivative_identity", worst <= 1e-9, max_err(worst)};
}

VerificationCheck coth_fixed_point_identity() {
  const RootResult fp = coth_fixed_point();
  const double drift = std::fabs(coth(fp.root) - fp.root);
  const double offset = std::fabs(fp.root - 1.1996786);
  const bool ok = drift <= 1e-12 && offset <= 1e-6;
  return {"coth_fixed_point_identity",
          ok, "|coth(a)-a| = " + format_double(drift) + ", a = " + format_double(fp.root)};
}

VerificationCheck optimal_angle_three_routes_agree() {
  const double via_fixed_point = optimal_angle().root;
  const double via_residual = solve_critical_equation().root;
  const double via_maximizer = maximize_arc_length_direct(kNatural).root;
  const double worst = std::max({std::fabs(via_fixed_point - via_residual),
                                 std::fabs(via_fixed_point - via_maximizer),
                                 std::fabs(via_residual - via_maximizer)});
  return {"optimal_angle_three_routes_agree", worst <= 1e-6, max_err(worst)};
}

VerificationCheck max_arc_length_equals_fixed_point() {
  const double alpha = coth_fixed_point().root;
  const double lmax = arc_length_closed_form(Angle(optimal_angle().root), kNatural);
  const double err = std::fabs(lmax - alpha);
  return {"max_arc_length_equals_fixed_point", err <= 1e-10, max_err(err)};
}

VerificationCheck scale_equivariance() {
  std::mt19937 rng(7u);
  std::uniform_real_distribution<double> scale_dist(0.1, 100.0);
  std::uniform_real_distribution<double> angle_dist(0.05, 1.5);
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Angle theta(angle_dist(rng));
    const ProjectileParams p(scale_dist(rng), scale_dist(rng));
    const double scaled = arc_length_closed_form(theta, p);
    const double natural = arc_length_closed_form(theta, kNatural);
    worst = std::max(worst, std::fabs(scaled - p.length_scale() * natural) / scaled);
  }
  return {"scale_equivariance", worst <= 1e-12, "max relative " + format_double(worst)};
}

VerificationCheck landmark_lengths() {
  const double l45 = arc_length_closed_form(Angle(std::numbers::pi / 4.0), kNatural);
  const double lmax = arc_length_closed_form(Angle(optimal_angle().root), kNatural);
  const double gap = 100.0 * (lmax - l45) / l45;
  const bool ok = std::fabs(l45 - 1.14779357) <= 1e-7 && std::fabs(lmax - 1.19967864) <= 1e-7 &&
                  gap > 4.5;
  return {"landmark_lengths", ok,
          "L(pi/4) = " + format_double(l45) + ", L(theta*) = " + format_double(lmax) +
              ", gap = " + format_double(gap) + "%"};
}

VerificationCheck sweep_unimodal_peak() {
  const auto rows = sweep({0.01, 1.56, 1000}, kNatural);
  size_t argmax = 0;
  for (size_t i = 1; i < rows.size(); ++i)
    if (rows[i].arc_length > rows[argmax].arc_length) argmax = i;
  bool unimodal = true;
  for (size_t i = 1; i < rows.size(); ++i) {
    const bool rising = rows[i].arc_length > rows[i - 1].arc_length;
    if ((i <= argmax) != rising) unimodal = false;
  }
  const double spacing = (1.56 - 0.01) / 999.0;
  const double offset = std::fabs(rows[argmax].theta - optimal_angle().root);
  const bool ok = unimodal && offset <= spacing;
  return {"sweep_unimodal_peak", ok,
          "peak at theta = " + format_double(rows[argmax].theta) + ", offset " +
              format_double(offset)};
}

VerificationCheck family_range_and_length_ranking() {
  const auto family = default_family_angles();
  size_t best_range = 0, best_length = 0;
  double ranges[5], lengths[5];
  for (size_t i = 0; i < family.size(); ++i) {
    const auto samples = trajectory_samples(family[i], kNatural, 10001);
    ranges[i] = samples.back().x;
    lengths[i] = polyline_length(samples);
    if (ranges[i] > ranges[best_range]) best_range = i;
    if (lengths[i] > lengths[best_length]) best_length = i;
  }
  const bool ok = best_range == 1 && best_length == 2;  // 45 degrees; the optimum
  return {"family_range_and_length_ranking", ok,
          "max range at " + format_double(family[best_range].degrees()) +
              " deg, max length at " + format_double(family[best_length].degrees()) + " deg"};
}

}  // namespace

std::vector<VerificationCheck> run_verification() {
  return {
      closed_form_matches_quadrature(),
      vertical_launch_split_quadrature(),
      landing_speed_equals_launch_speed(),
      derivative_three_routes_agree(),
      antiderivative_identity(),
      coth_fixed_point_identity(),
      optimal_angle_three_routes_agree(),
      max_arc_length_equals_fixed_point(),
      scale_equivariance(),
      landmark_lengths(),
      sweep_unimodal_peak(),
      family_range_and_length_ranking(),
  };
}

bool report_verification(std::ostream& os, const std::vector<VerificationCheck>& checks) {
  bool all_passed = true;
  for (const VerificationCheck& check : checks) {
    os << (check.passed ? "ok   " : "FAIL ") << check.name << " (" << check.detail << ")\n";
    if (!check.passed) all_passed = false;
  }
  os << (all_passed ? "verification passed" : "verification FAILED") << " (" << checks.size()
     << " checks)\n";
  return all_passed;
}

}  // namespace arclen
