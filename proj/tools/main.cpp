// Command line front end: every angle crosses the degree/radian boundary
// here, and never inside the library.

#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "arclen/errors.hpp"
#include "arclen/quadrature.hpp"
#include "arclen/solver.hpp"
#include "arclen/sweep.hpp"
#include "arclen/trajectory.hpp"
#include "arclen/verification.hpp"

namespace {

struct GlobalOptions {
  double v = 1.0;
  double g = 1.0;
  bool degrees = false;
  std::string out_path;  // empty: stdout

  double angle_in(double value) const {
    return degrees ? arclen::degrees_to_radians(value) : value;
  }
  double angle_out(double radians) const {
    return degrees ? arclen::radians_to_degrees(radians) : radians;
  }
  arclen::ProjectileParams params() const { return {v, g}; }
};

int emit(const GlobalOptions& opts, const std::function<int(std::ostream&)>& writer) {
  if (opts.out_path.empty()) return writer(std::cout);
  std::ofstream file(opts.out_path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open output file: " + opts.out_path);
  const int rc = writer(file);
  if (!file.good()) throw std::runtime_error("write failed: " + opts.out_path);
  return rc;
}

int run_optimal(const GlobalOptions& opts) {
  const arclen::OptimumReport report = arclen::report_optimum();
  return emit(opts, [&](std::ostream& os) {
    arclen::write_report(os, report);
    return 0;
  });
}

int run_arclength(const GlobalOptions& opts, double theta) {
  const arclen::Angle angle(opts.angle_in(theta));
  const double length = arclen::arc_length(angle, opts.params());
  return emit(opts, [&](std::ostream& os) {
    os << arclen::format_double(length) << '\n';
    return 0;
  });
}

int run_sweep(const GlobalOptions& opts, double min, double max, int steps) {
  auto rows = arclen::sweep({opts.angle_in(min), opts.angle_in(max), steps}, opts.params());
  if (opts.degrees)
    for (auto& row : rows) row.theta = arclen::radians_to_degrees(row.theta);
  return emit(opts, [&](std::ostream& os) {
    arclen::write_sweep_csv(os, rows);
    return 0;
  });
}

int run_trajectory(const GlobalOptions& opts, bool have_theta, double theta, int samples) {
  std::vector<arclen::TrajectorySample> rows =
      have_theta
          ? arclen::trajectory_samples(arclen::Angle(opts.angle_in(theta)), opts.params(), samples)
          : arclen::trajectory_family(opts.params(), samples);
  if (opts.degrees)
    for (auto& row : rows) row.theta = arclen::radians_to_degrees(row.theta);
  return emit(opts, [&](std::ostream& os) {
    arclen::write_trajectory_csv(os, rows);
    return 0;
  });
}

int run_verify(const GlobalOptions& opts) {
  const auto checks = arclen::run_verification();
  return emit(opts, [&](std::ostream& os) {
    return arclen::report_verification(os, checks) ? 0 : 1;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "arclen: arc length of an ideal projectile's trajectory, its derivative, and the\n"
      "launch angle maximizing it (the root of csc(theta) = coth(csc(theta)))"};
  app.require_subcommand(1);

  GlobalOptions opts;
  app.add_option("--v", opts.v, "launch speed")->capture_default_str();
  app.add_option("--g", opts.g, "gravitational acceleration")->capture_default_str();
  app.add_flag("--degrees", opts.degrees,
               "read and report angles in degrees (derivatives stay per radian)");
  app.add_option("--out", opts.out_path, "write output to this file instead of stdout");

  auto* optimal = app.add_subcommand(
      "optimal", "report the optimal angle, the coth fixed point, and the length gap "
                 "over the 45-degree launch (natural units v = g = 1)");

  double theta = 0.0;
  auto* arclength = app.add_subcommand("arclength", "arc length for one launch angle");
  arclength->add_option("--theta", theta, "launch angle")->required();

  double sweep_min = 0.0, sweep_max = 0.0;
  int sweep_steps = 100;
  auto* sweep = app.add_subcommand("sweep", "CSV of theta, arc length, and derivative rows");
  sweep->add_option("--min", sweep_min, "smallest angle")->required();
  sweep->add_option("--max", sweep_max, "largest angle")->required();
  sweep->add_option("--steps", sweep_steps, "row count")->capture_default_str();

  double traj_theta = 0.0;
  int traj_samples = 101;
  auto* trajectory = app.add_subcommand(
      "trajectory", "CSV of sampled trajectory points; without --theta, emits the standard "
                    "five-angle family (30, 45, optimal, 75, 90 degrees)");
  auto* traj_theta_opt = trajectory->add_option("--theta", traj_theta, "launch angle");
  trajectory->add_option("--samples", traj_samples, "samples per trajectory")
      ->capture_default_str();

  auto* verify = app.add_subcommand(
      "verify", "run the numerical cross-check suite (natural units); nonzero exit on failure");

  for (auto* sub : {optimal, arclength, sweep, trajectory, verify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(optimal)) return run_optimal(opts);
    if (app.got_subcommand(arclength)) return run_arclength(opts, theta);
    if (app.got_subcommand(sweep)) return run_sweep(opts, sweep_min, sweep_max, sweep_steps);
    if (app.got_subcommand(trajectory))
      return run_trajectory(opts, traj_theta_opt->count() > 0, traj_theta, traj_samples);
    if (app.got_subcommand(verify)) return run_verify(opts);
  } catch (const arclen::ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
