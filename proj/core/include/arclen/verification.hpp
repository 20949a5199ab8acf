#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Self-contained cross-check suite behind the `verify` CLI subcommand:
// every closed form is checked against an independent numerical route
// (quadrature, finite differences, polyline geometry, grid scans).

namespace arclen {

struct VerificationCheck {
  std::string name;
  bool passed;
  std::string detail;
};

std::vector<VerificationCheck> run_verification();

// One "ok"/"FAIL" line per check plus a summary; returns true if all passed.
bool report_verification(std::ostream& os, const std::vector<VerificationCheck>& checks);

}  // namespace arclen
