#include "arclen/sweep.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include "arclen/errors.hpp"
#include "arclen/quadrature.hpp"
#include "arclen/solver.hpp"

namespace arclen {

namespace {

bool closed_form_singular(Angle theta) {
  return theta.is_vertical() || std::sin(theta.radians()) >= 1.0;
}

void validate_spec(const SweepSpec& spec) {
  if (!(spec.theta_min > 0.0) || !(spec.theta_min < spec.theta_max) ||
      !(spec.theta_max <= half_pi))
    throw std::invalid_argument("SweepSpec: need 0 < theta_min < theta_max <= pi/2");
  if (spec.steps < 2) throw std::invalid_argument("SweepSpec: need steps >= 2");
}

double parse_field(std::string_view field, const char* what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size())
    throw std::runtime_error(std::string("CSV parse: bad ") + what + " field '" +
                             std::string(field) + "'");
  return value;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  size_t start = 0;
  while (true) {
    const size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

void expect_header(std::istream& is, std::string_view expected, const char* what) {
  std::string header;
  if (!std::getline(is, header) || header != expected)
    throw std::runtime_error(std::string("CSV parse: missing ") + what + " header");
}

}  // namespace

double arc_length(Angle theta, const ProjectileParams& params) {
  if (closed_form_singular(theta)) return arc_length_quadrature(theta, params);
  return arc_length_closed_form(theta, params);
}

std::vector<SweepRow> sweep(const SweepSpec& spec, const ProjectileParams& params) {
  validate_spec(spec);
  std::vector<SweepRow> rows;
  rows.reserve(static_cast<size_t>(spec.steps));
  const double span = spec.theta_max - spec.theta_min;
  for (int i = 0; i < spec.steps; ++i) {
    const double frac = static_cast<double>(i) / static_cast<double>(spec.steps - 1);
    const double th = (i == spec.steps - 1) ? spec.theta_max : spec.theta_min + span * frac;
    try {
      const Angle angle(th);
      SweepRow row;
      row.theta = th;
      row.arc_length = arc_length(angle, params);
      if (!closed_form_singular(angle))
        row.arc_length_derivative = arc_length_derivative_closed_form(angle, params);
      rows.push_back(row);
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("sweep: row at theta = " + format_double(th) + " failed: " +
                             e.what());
    } catch (const std::exception& e) {
      throw std::domain_error("sweep: row at theta = " + format_double(th) + " failed: " +
                              e.what());
    }
  }
  return rows;
}

std::vector<TrajectorySample> trajectory_samples(Angle theta, const ProjectileParams& params,
                                                 int n) {
  if (n < 2) throw std::invalid_argument("trajectory_samples: need n >= 2");
  const double tau = flight_time(theta, params);
  std::vector<TrajectorySample> samples;
  samples.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) {
    // Fraction first: i/(n-1) is exactly 1 at the end, so the last sample
    // sits at t = tau bit-exactly and lands on the ground.
    const double t = tau * (static_cast<double>(i) / static_cast<double>(n - 1));
    const Point p = position(t, theta, params);
    samples.push_back({theta.radians(), t, p.x, std::max(p.y, 0.0)});
  }
  return samples;
}

double polyline_length(const std::vector<TrajectorySample>& samples) {
  double total = 0.0;
  for (size_t i = 1; i < samples.size(); ++i)
    total += std::hypot(samples[i].x - samples[i - 1].x, samples[i].y - samples[i - 1].y);
  return total;
}

std::vector<Angle> default_family_angles() {
  return {Angle::from_degrees(30.0), Angle::from_degrees(45.0), Angle(optimal_angle().root),
          Angle::from_degrees(75.0), Angle::from_degrees(90.0)};
}

std::vector<TrajectorySample> trajectory_family(const ProjectileParams& params,
                                                int samples_per_trajectory) {
  std::vector<TrajectorySample> all;
  for (const Angle& theta : default_family_angles()) {
    const auto samples = trajectory_samples(theta, params, samples_per_trajectory);
    all.insert(all.end(), samples.begin(), samples.end());
  }
  return all;
}

OptimumReport report_optimum() {
  const ProjectileParams natural(1.0, 1.0);
  const RootResult fp = coth_fixed_point();
  const RootResult angle = optimal_angle();
  OptimumReport report;
  report.alpha = fp.root;
  report.theta_rad = angle.root;
  report.theta_deg = radians_to_degrees(angle.root);
  report.arc_length_max = arc_length_closed_form(Angle(angle.root), natural);
  report.arc_length_45deg = arc_length_closed_form(Angle(std::numbers::pi / 4.0), natural);
  report.gap_percent =
      100.0 * (report.arc_length_max - report.arc_length_45deg) / report.arc_length_45deg;
  return report;
}

std::string format_double(double x) {
  char buf[40];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
  if (ec != std::errc{}) throw std::runtime_error("format_double: conversion failed");
  return std::string(buf, ptr);
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "theta,arc_length,arc_length_derivative\n";
  for (const SweepRow& row : rows) {
    os << format_double(row.theta) << ',' << format_double(row.arc_length) << ',';
    if (row.arc_length_derivative) os << format_double(*row.arc_length_derivative);
    os << '\n';
  }
}

std::vector<SweepRow> read_sweep_csv(std::istream& is) {
  expect_header(is, "theta,arc_length,arc_length_derivative", "sweep");
  std::vector<SweepRow> rows;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 3) throw std::runtime_error("CSV parse: sweep row needs 3 fields");
    SweepRow row;
    row.theta = parse_field(fields[0], "theta");
    row.arc_length = parse_field(fields[1], "arc_length");
    if (!fields[2].empty()) row.arc_length_derivative = parse_field(fields[2], "derivative");
    rows.push_back(row);
  }
  return rows;
}

void write_trajectory_csv(std::ostream& os, const std::vector<TrajectorySample>& samples) {
  os << "theta,t,x,y\n";
  for (const TrajectorySample& s : samples)
    os << format_double(s.theta) << ',' << format_double(s.t) << ',' << format_double(s.x) << ','
       << format_double(s.y) << '\n';
}

std::vector<TrajectorySample> read_trajectory_csv(std::istream& is) {
  expect_header(is, "theta,t,x,y", "trajectory");
  std::vector<TrajectorySample> samples;
  std::string line;
  while (std::getline(is, line)) {
    if (line.empty()) continue;
    const auto fields = split_fields(line);
    if (fields.size() != 4) throw std::runtime_error("CSV parse: trajectory row needs 4 fields");
    samples.push_back({parse_field(fields[0], "theta"), parse_field(fields[1], "t"),
                       parse_field(fields[2], "x"), parse_field(fields[3], "y")});
  }
  return samples;
}

void write_report(std::ostream& os, const OptimumReport& report) {
  os << "alpha: " << format_double(report.alpha) << '\n'
     << "theta_rad: " << format_double(report.theta_rad) << '\n'
     << "theta_deg: " << format_double(report.theta_deg) << '\n'
     << "arc_length_max: " << format_double(report.arc_length_max) << '\n'
     << "arc_length_45deg: " << format_double(report.arc_length_45deg) << '\n'
     << "gap_percent: " << format_double(report.gap_percent) << '\n';
}

}  // namespace arclen
