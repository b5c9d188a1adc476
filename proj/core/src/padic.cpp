#include "binlcm/padic.hpp"

#include <string>

#include "binlcm/error.hpp"
#include "binlcm/primes.hpp"

namespace binlcm {

namespace {

void require_not_above(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    throw Error(ErrorKind::OutOfRange,
                "k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));
  }
}

}  // namespace

BaseExpansion expand(std::uint64_t k, std::uint64_t p) {
  require_prime(p);
  BaseExpansion e{k, p, {}};
  for (std::uint64_t rest = k; rest > 0; rest /= p) {
    e.digits.push_back(rest % p);
  }
  return e;
}

std::optional<std::size_t> first_non_max_digit(const BaseExpansion& e) {
  if (e.value == 0) {
    throw Error(ErrorKind::ZeroValue, "the expansion of 0 has no digits");
  }
  for (std::size_t i = 0; i < e.digits.size(); ++i) {
    if (e.digits[i] != e.base - 1) return i;
  }
  return std::nullopt;
}

Valuation vp(std::uint64_t n, std::uint64_t p) {
  if (n == 0) {
    throw Error(ErrorKind::ZeroValue, "v_p(0) is undefined");
  }
  require_prime(p);
  Valuation v;
  while (n % p == 0) {
    n /= p;
    ++v.exponent;
  }
  return v;
}

Valuation vp(const Natural& n, std::uint64_t p) {
  if (n.is_zero()) {
    throw Error(ErrorKind::ZeroValue, "v_p(0) is undefined");
  }
  require_prime(p);
  Valuation v;
  Natural rest = n;
  while (rest.divisible_by(p)) {
    rest.divide_exact(p);
    ++v.exponent;
  }
  return v;
}

Valuation vp_binomial_kummer(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  require_not_above(n, k);
  require_prime(p);
  Valuation borrows;
  std::uint64_t borrow = 0;
  for (; n > 0; n /= p, k /= p) {
    const std::uint64_t top = n % p;
    const std::uint64_t bottom = k % p + borrow;
    borrow = bottom > top ? 1 : 0;
    borrows.exponent += borrow;
  }
  return borrows;
}

std::uint64_t carries_when_adding(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  require_prime(p);
  std::uint64_t carries = 0;
  std::uint64_t carry = 0;
  for (; a > 0 || b > 0; a /= p, b /= p) {
    // Each term is at most p - 1, so the sum cannot overflow for p < 2^63.
    const std::uint64_t column = a % p + b % p + carry;
    carry = column >= p ? 1 : 0;
    carries += carry;
  }
  return carries;
}

Valuation vp_factorial(std::uint64_t n, std::uint64_t p) {
  require_prime(p);
  Valuation v;
  for (n /= p; n > 0; n /= p) {
    v.exponent += n;
  }
  return v;
}

Valuation vp_binomial_legendre(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  require_not_above(n, k);
  return {vp_factorial(n, p).exponent - vp_factorial(k, p).exponent -
          vp_factorial(n - k, p).exponent};
}

}  // namespace binlcm
