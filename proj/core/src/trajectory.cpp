#include "arclen/trajectory.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace arclen {

double degrees_to_radians(double degrees) {
  // 90 must land on half_pi bit-exactly so the vertical-launch special
  // cases trigger from the degree entry point too.
  if (degrees == 90.0) return half_pi;
  return degrees * (std::numbers::pi / 180.0);
}

double radians_to_degrees(double radians) {
  if (radians == half_pi) return 90.0;
  return radians * (180.0 / std::numbers::pi);
}

ProjectileParams::ProjectileParams(double v, double g) : v_(v), g_(g) {
  if (!(v > 0.0)) throw std::invalid_argument("ProjectileParams: launch speed must be > 0");
  if (!(g > 0.0)) throw std::invalid_argument("ProjectileParams: gravity must be > 0");
}

Angle::Angle(double radians) : theta_(radians) {
  if (!(radians > 0.0) || radians > half_pi)
    throw std::invalid_argument("Angle: theta must lie in (0, pi/2], got " +
                                std::to_string(radians));
}

Angle Angle::from_degrees(double degrees) { return Angle(degrees_to_radians(degrees)); }

namespace {

double checked_flight_time(double t, Angle theta, const ProjectileParams& p, const char* who) {
  const double tau = flight_time(theta, p);
  if (t < 0.0 || t > tau)
    throw std::domain_error(std::string(who) + ": t = " + std::to_string(t) +
                            " outside flight interval [0, " + std::to_string(tau) + "]");
  return tau;
}

// atanh(sin theta) diverges as theta -> pi/2; in doubles the formula breaks
// down as soon as sin theta rounds to 1, which happens within ~1.5e-8 of
// pi/2. The closed forms refuse that whole band.
double sin_checked(Angle theta, const char* who) {
  const double s = std::sin(theta.radians());
  if (s >= 1.0)
    throw std::domain_error(std::string(who) +
                            ": singular at theta = pi/2 (atanh(sin theta) diverges); "
                            "the vertical arc length is exactly v^2/g");
  return s;
}

}  // namespace

double flight_time(Angle theta, const ProjectileParams& p) {
  return 2.0 * p.v() * std::sin(theta.radians()) / p.g();
}

VelocityVector velocity(double t, Angle theta, const ProjectileParams& p) {
  checked_flight_time(t, theta, p, "velocity");
  return {p.v() * std::cos(theta.radians()), p.v() * std::sin(theta.radians()) - p.g() * t};
}

double speed(double t, Angle theta, const ProjectileParams& p) {
  const VelocityVector vel = velocity(t, theta, p);
  return std::hypot(vel.vx, vel.vy);
}

Point position(double t, Angle theta, const ProjectileParams& p) {
  checked_flight_time(t, theta, p, "position");
  const double x = p.v() * t * std::cos(theta.radians());
  const double y = t * (p.v() * std::sin(theta.radians()) - 0.5 * p.g() * t);
  return {x, y};
}

double arc_length_closed_form(Angle theta, const ProjectileParams& p) {
  const double s = sin_checked(theta, "arc_length_closed_form");
  const double c = std::cos(theta.radians());
  return p.length_scale() * (s + c * c * std::atanh(s));
}

double arc_length_derivative_closed_form(Angle theta, const ProjectileParams& p) {
  const double s = sin_checked(theta, "arc_length_derivative_closed_form");
  const double c = std::cos(theta.radians());
  // 2 cos + sin cos ln((1-sin)/(1+sin)), with the log written through atanh
  // to stay accurate close to the endpoint.
  return p.length_scale() * (2.0 * c - 2.0 * s * c * std::atanh(s));
}

double critical_residual(Angle theta) {
  const double s = sin_checked(theta, "critical_residual");
  return s * std::atanh(s) - 1.0;
}

}  // namespace arclen
