#pragma once

#include <stdexcept>
#include <string>

namespace qlbm {

/// Relaxation parameter below the BGK stability bound (tau < 0.5).
class StabilityError : public std::domain_error {
 public:
  explicit StabilityError(const std::string& what) : std::domain_error(what) {}
};

/// Operand sizes that do not fit together (operator vs. state, field vs. field).
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& what) : std::invalid_argument(what) {}
};

/// The decoded auxiliary slot is not 1: the block wiring of an operator plan is wrong.
class LayoutError : public std::runtime_error {
 public:
  explicit LayoutError(const std::string& what) : std::runtime_error(what) {}
};

/// Bad user input: config keys, CLI values, case/lattice mismatches.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace qlbm
