#pragma once

#include <stdexcept>
#include <string>

namespace arclen {

// Thrown when an iterative method (quadrature refinement, root polishing,
// golden-section search) exhausts its budget before meeting tolerance.
// Domain and argument violations use std::domain_error / std::invalid_argument.
class ConvergenceError : public std::runtime_error {
public:
  explicit ConvergenceError(const std::string& what_arg) : std::runtime_error(what_arg) {}
};

}  // namespace arclen
