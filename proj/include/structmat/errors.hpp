#pragma once

#include <stdexcept>
#include <string>

namespace structmat {

// Malformed or out-of-contract input. CLI maps this to exit code 1.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An enumeration would exceed its budget. CLI maps this to exit code 2
// ("undecided"), never to a silently truncated answer.
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace structmat
