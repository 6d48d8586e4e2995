#pragma once

#include <stdexcept>
#include <string>

namespace profscope {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: bad sizes, non-group tables, non-prime moduli, etc.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// A computation would exceed a configured size bound.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(const std::string& what, std::size_t requested, std::size_t bound)
      : Error(what + ": requested " + std::to_string(requested) + " exceeds budget " +
              std::to_string(bound)),
        requested_(requested),
        bound_(bound) {}

  std::size_t requested() const noexcept { return requested_; }
  std::size_t bound() const noexcept { return bound_; }

 private:
  std::size_t requested_;
  std::size_t bound_;
};

/// Objects from different groups were combined.
class GroupMismatch : public Error {
 public:
  using Error::Error;
};

}  // namespace profscope
