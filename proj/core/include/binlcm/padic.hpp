#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "binlcm/natural.hpp"

namespace binlcm {

/// Exponent of a prime in an integer.
struct Valuation {
  std::uint64_t exponent = 0;

  friend auto operator<=>(const Valuation&, const Valuation&) = default;
};

/// Digits of `value` in base `base`, least-significant first.
///
/// digits is empty exactly when value == 0; otherwise the last digit is
/// non-zero and top_index() is the N in value = Σ_{i=0}^{N} c_i base^i.
struct BaseExpansion {
  std::uint64_t value = 0;
  std::uint64_t base = 2;
  std::vector<std::uint64_t> digits;

  /// N; only meaningful when value >= 1.
  std::size_t top_index() const noexcept { return digits.empty() ? 0 : digits.size() - 1; }

  friend bool operator==(const BaseExpansion&, const BaseExpansion&) = default;
};

/// Throws NotPrime when p is composite.
BaseExpansion expand(std::uint64_t k, std::uint64_t p);

/// min{i | c_i != p - 1}, or nullopt when every digit is p - 1 (k = p^(N+1) - 1).
/// Throws ZeroValue for the expansion of 0.
std::optional<std::size_t> first_non_max_digit(const BaseExpansion& e);

/// Largest e with p^e | n. Throws ZeroValue for n = 0, NotPrime for composite p.
Valuation vp(std::uint64_t n, std::uint64_t p);
Valuation vp(const Natural& n, std::uint64_t p);

/// Number of borrows in the schoolbook base-p subtraction n - k.
Valuation vp_binomial_kummer(std::uint64_t n, std::uint64_t k, std::uint64_t p);

/// Number of carries in the schoolbook base-p addition a + b.
std::uint64_t carries_when_adding(std::uint64_t a, std::uint64_t b, std::uint64_t p);

/// Legendre: Σ_{i>=1} floor(n / p^i).
Valuation vp_factorial(std::uint64_t n, std::uint64_t p);

/// v_p(n!) - v_p(k!) - v_p((n-k)!).
Valuation vp_binomial_legendre(std::uint64_t n, std::uint64_t k, std::uint64_t p);

}  // namespace binlcm
