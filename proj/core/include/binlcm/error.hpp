#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace binlcm {

enum class ErrorKind {
  ZeroOperand,        // lcm with a zero argument
  OutOfRange,         // k > n for binomial-style inputs
  NotPrime,           // a prime-only parameter failed the primality check
  ZeroValue,          // valuation or range function called on 0
  InexactDivision,    // divide_exact with a non-divisor
  InternalInvariant,  // an identity that must hold did not; indicates a bug
  UnknownCheck,       // verify harness asked for an unknown check name
  InvalidArgument,    // malformed input such as a non-decimal string
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace binlcm
