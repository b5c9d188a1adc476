#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace binlcm {

/// Arbitrary-precision non-negative integer.
///
/// Values are canonical: two Naturals compare equal exactly when they hold the
/// same number. Every operation that could leave the non-negative range
/// (subtraction below zero, inexact division) throws instead of wrapping.
class Natural {
 public:
  Natural() = default;
  Natural(std::uint64_t value);  // NOLINT(google-explicit-constructor)

  /// Parses a decimal string of digits only (no sign, no whitespace).
  static Natural from_decimal(std::string_view digits);
  static Natural pow(std::uint64_t base, std::uint64_t exponent);

  bool is_zero() const noexcept;
  bool fits_u64() const noexcept;
  /// Throws OutOfRange when the value exceeds 64 bits.
  std::uint64_t to_u64() const;
  std::size_t bit_length() const noexcept;
  std::size_t decimal_digits() const;
  std::string to_decimal() const;
  /// Natural logarithm; accurate to double precision for any size.
  double log() const;

  bool divisible_by(std::uint64_t divisor) const;
  bool divisible_by(const Natural& divisor) const;

  Natural& operator+=(const Natural& rhs);
  Natural& operator*=(const Natural& rhs);
  Natural& operator*=(std::uint64_t rhs);

  /// Throws OutOfRange when rhs > *this.
  Natural& operator-=(const Natural& rhs);

  /// Throws InexactDivision unless divisor divides *this.
  Natural& divide_exact(const Natural& divisor);
  Natural& divide_exact(std::uint64_t divisor);

  friend Natural operator+(Natural lhs, const Natural& rhs) { return lhs += rhs; }
  friend Natural operator-(Natural lhs, const Natural& rhs) { return lhs -= rhs; }
  friend Natural operator*(Natural lhs, const Natural& rhs) { return lhs *= rhs; }
  friend Natural operator*(Natural lhs, std::uint64_t rhs) { return lhs *= rhs; }
  friend Natural divide_exact(Natural lhs, const Natural& rhs) { return lhs.divide_exact(rhs); }

  friend bool operator==(const Natural& lhs, const Natural& rhs) noexcept;
  friend std::strong_ordering operator<=>(const Natural& lhs, const Natural& rhs) noexcept;

  friend Natural gcd(const Natural& a, const Natural& b);

  friend std::ostream& operator<<(std::ostream& os, const Natural& n);

 private:
  explicit Natural(mpz_class value) : value_(std::move(value)) {}

  mpz_class value_;
};

/// gcd(0, 0) = 0.
Natural gcd(const Natural& a, const Natural& b);

/// a·b / gcd(a, b). Throws ZeroOperand when either argument is zero.
Natural lcm_pair(const Natural& a, const Natural& b);

/// Left fold of lcm_pair; the empty list yields 1.
Natural lcm_list(std::span<const Natural> values);

/// Exact C(n, k) by the multiplicative scheme; throws OutOfRange when k > n.
Natural binomial(std::uint64_t n, std::uint64_t k);

/// Product of a span of values via a balanced product tree; empty span is 1.
Natural product(std::span<const Natural> values);

}  // namespace binlcm
