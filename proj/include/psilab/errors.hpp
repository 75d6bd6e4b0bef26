#pragma once

#include <stdexcept>
#include <string>

namespace psi {

// Bad or inconsistent experiment configuration (CLI exit code 2).
class config_error : public std::runtime_error {
 public:
  explicit config_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Estimation cannot proceed or identify parameters (CLI exit code 3).
class estimation_error : public std::runtime_error {
 public:
  explicit estimation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Side peak indistinguishable from the noise floor.
class fringes_unresolved : public estimation_error {
 public:
  explicit fringes_unresolved(const std::string& msg) : estimation_error(msg) {}
};

// Degenerate normal matrix: (k_omega, phi_a) not identifiable from the data.
class unidentifiable : public estimation_error {
 public:
  explicit unidentifiable(const std::string& msg) : estimation_error(msg) {}
};

}  // namespace psi
