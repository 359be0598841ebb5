#pragma once

#include <stdexcept>
#include <string>

namespace adq {

// Violated precondition or shape contract. Message names the operation
// and the offending shapes/values.
class contract_error : public std::runtime_error {
 public:
  explicit contract_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Numeric-domain violation (log of a non-positive value, exp overflow, ...).
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace adq
