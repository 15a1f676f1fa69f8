#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace wps {

/// Contract violation on user-supplied input (malformed weights, degrees,
/// polynomials, field specs).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An exhaustive computation would exceed its configured budget.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, long double estimate,
                 std::uint64_t cap)
      : std::runtime_error(what + ": estimated " + format(estimate) +
                           " exceeds the budget of " + std::to_string(cap) +
                           "; raise the budget or shrink the instance"),
        estimate_(estimate),
        cap_(cap) {}

  long double estimate() const { return estimate_; }
  std::uint64_t cap() const { return cap_; }

 private:
  static std::string format(long double x) {
    if (x < 1e18L) return std::to_string(static_cast<std::uint64_t>(x));
    return std::to_string(static_cast<double>(x));
  }

  long double estimate_;
  std::uint64_t cap_;
};

}  // namespace wps
