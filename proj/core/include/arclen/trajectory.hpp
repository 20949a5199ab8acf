#pragma once

#include <numbers>

// Closed-form kinematics of an ideal projectile: a point mass launched over
// flat ground with speed v at angle theta, under constant downward
// acceleration g, with no drag or propulsion. All angles are radians; degree
// conversion belongs at the CLI boundary. Everything here is a pure function
// of its arguments and safe to call concurrently.

namespace arclen {

inline constexpr double half_pi = std::numbers::pi / 2.0;

double degrees_to_radians(double degrees);
double radians_to_degrees(double radians);

// Launch speed and gravitational acceleration, both strictly positive.
// v^2/g is the natural length scale: every arc length below is a multiple
// of it, and "natural units" just means v = g = 1.
class ProjectileParams {
public:
  ProjectileParams(double v, double g);
  double v() const { return v_; }
  double g() const { return g_; }
  double length_scale() const { return v_ * v_ / g_; }

private:
  double v_;
  double g_;
};

// Launch angle restricted to (0, pi/2]. Non-positive angles are caller
// errors, not degenerate trajectories, and are rejected at construction.
class Angle {
public:
  explicit Angle(double radians);
  static Angle from_degrees(double degrees);
  double radians() const { return theta_; }
  double degrees() const { return radians_to_degrees(theta_); }
  bool is_vertical() const { return theta_ == half_pi; }

private:
  double theta_;
};

struct VelocityVector {
  double vx;  // horizontal component, >= 0 on (0, pi/2]
  double vy;  // vertical component, signed; negative is downward
};

struct Point {
  double x;
  double y;
};

// Time of flight 2 v sin(theta) / g, the positive root of the vertical
// position equation v t sin(theta) - g t^2 / 2 = 0.
double flight_time(Angle theta, const ProjectileParams& params);

// Velocity components (v cos(theta), v sin(theta) - g t).
// Throws std::domain_error for t outside [0, flight_time].
VelocityVector velocity(double t, Angle theta, const ProjectileParams& params);

// |velocity|; never less than the horizontal component v cos(theta), and by
// symmetry equal to v again at landing.
double speed(double t, Angle theta, const ProjectileParams& params);

// Position (v t cos(theta), v t sin(theta) - g t^2 / 2).
Point position(double t, Angle theta, const ProjectileParams& params);

// Arc length of the full trajectory,
//   L(theta) = (v^2/g) [sin(theta) + cos^2(theta) atanh(sin(theta))],
// valid for theta < pi/2. Throws std::domain_error once sin(theta) rounds
// to 1 (theta = pi/2 and a ~1e-8 neighbourhood); the vertical case has the
// exact value v^2/g, available through arc_length() or quadrature.
double arc_length_closed_form(Angle theta, const ProjectileParams& params);

// dL/dtheta = (v^2/g) [2 cos(theta) - 2 sin(theta) cos(theta) atanh(sin(theta))].
// Positive below the optimal angle, negative above it; singular at pi/2.
double arc_length_derivative_closed_form(Angle theta, const ProjectileParams& params);

// sin(theta) atanh(sin(theta)) - 1: the dimensionless residual of the
// optimality condition. Strictly increasing on (0, pi/2), zero exactly at
// the arc-length-maximizing angle.
double critical_residual(Angle theta);

}  // namespace arclen
