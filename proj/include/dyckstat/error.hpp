#pragma once

#include <stdexcept>
#include <string>

namespace dyckstat {

enum class ErrorKind {
  BadChar,
  NonBalanced,
  BelowAxis,
  EmptyResidueSet,
  InvalidArgument,
  IndexOutOfRange,
  CapExceeded,
  Overflow,
  NonUnitDivisor,
  NonConvergence,
  NotPlanted,
  NonPositiveSize,
  HeightTooLow,
  NotReflectable,
  InvalidM,
  Internal,
};

const char* to_string(ErrorKind kind);

/// Every failure raised by the library carries a machine-readable kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dyckstat
