#pragma once

#include <stdexcept>
#include <string>

namespace fvb {

/// Bad user input: unknown symbol, malformed token, index out of range.
struct input_error : std::runtime_error {
  explicit input_error(const std::string& what) : std::runtime_error(what) {}
};

/// Violated operation precondition: alphabet mismatch, strand mismatch,
/// braid not in the required subgroup.
struct domain_error : std::runtime_error {
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace fvb
