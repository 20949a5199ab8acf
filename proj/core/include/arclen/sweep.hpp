#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "arclen/trajectory.hpp"

// Plot-data emission: angle sweeps of the arc length, sampled trajectory
// families, and the optimality report. CSV output uses a one-line header,
// '.' decimal separator, '\n' newlines, and 17 significant digits, so a
// re-parse reproduces every double bit-exactly and identical inputs give
// byte-identical files.

namespace arclen {

struct SweepSpec {
  double theta_min;
  double theta_max;
  int steps;
};

struct SweepRow {
  double theta;
  double arc_length;
  // Absent at theta = pi/2, where the derivative is undefined; emitted as
  // an empty CSV field rather than 0 or NaN.
  std::optional<double> arc_length_derivative;
};

struct TrajectorySample {
  double theta;
  double t;
  double x;
  double y;
};

struct OptimumReport {
  double alpha;             // fixed point of coth
  double theta_rad;         // asin(1/alpha)
  double theta_deg;
  double arc_length_max;    // L(theta*) in natural units
  double arc_length_45deg;  // L(pi/4) in natural units
  double gap_percent;       // 100 (L_max - L_45) / L_45
};

// Closed-form arc length, falling back to kink-split quadrature for the
// vertical launch (and the ~1e-8 band below pi/2 where the closed form's
// atanh argument rounds to 1).
double arc_length(Angle theta, const ProjectileParams& params);

// `steps` rows at uniform theta spacing across [theta_min, theta_max].
// Requires 0 < theta_min < theta_max <= pi/2 and steps >= 2. A failing row
// aborts the sweep with the offending theta in the message.
std::vector<SweepRow> sweep(const SweepSpec& spec, const ProjectileParams& params);

// n >= 2 samples at uniform times in [0, flight_time]; starts at the
// origin, ends on the ground (y clamped to 0 against roundoff).
std::vector<TrajectorySample> trajectory_samples(Angle theta, const ProjectileParams& params,
                                                 int n);

// Sum of segment lengths of consecutive samples sharing one trajectory: a
// geometric lower bound converging to the arc length from below.
double polyline_length(const std::vector<TrajectorySample>& samples);

// The standard five-trajectory family: 30 and 75 degrees for contrast, 45
// (longest range), the arc-length optimum, and the vertical launch.
std::vector<Angle> default_family_angles();

// One flattened sample list over the family; trajectories are
// distinguished by the theta column.
std::vector<TrajectorySample> trajectory_family(const ProjectileParams& params,
                                                int samples_per_trajectory);

OptimumReport report_optimum();

// 17-significant-digit, locale-independent formatting (round-trips exactly).
std::string format_double(double x);

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);
std::vector<SweepRow> read_sweep_csv(std::istream& is);
void write_trajectory_csv(std::ostream& os, const std::vector<TrajectorySample>& samples);
std::vector<TrajectorySample> read_trajectory_csv(std::istream& is);
void write_report(std::ostream& os, const OptimumReport& report);

}  // namespace arclen
