#include "binlcm/natural.hpp"

#include <cmath>
#include <ostream>
#include <vector>

#include "binlcm/error.hpp"

namespace binlcm {

namespace {

// mpz_*_ui take unsigned long, which is 64 bits on every platform we build on.
static_assert(sizeof(unsigned long) == sizeof(std::uint64_t));

}  // namespace

Natural::Natural(std::uint64_t value) : value_(static_cast<unsigned long>(value)) {}

Natural Natural::from_decimal(std::string_view digits) {
  if (digits.empty()) {
    throw Error(ErrorKind::InvalidArgument, "empty decimal string");
  }
  for (char c : digits) {
    if (c < '0' || c > '9') {
      throw Error(ErrorKind::InvalidArgument,
                  "not a non-negative decimal integer: '" + std::string(digits) + "'");
    }
  }
  return Natural(mpz_class(std::string(digits), 10));
}

Natural Natural::pow(std::uint64_t base, std::uint64_t exponent) {
  mpz_class result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
  return Natural(std::move(result));
}

bool Natural::is_zero() const noexcept { return sgn(value_) == 0; }

bool Natural::fits_u64() const noexcept { return mpz_fits_ulong_p(value_.get_mpz_t()) != 0; }

std::uint64_t Natural::to_u64() const {
  if (!fits_u64()) {
    throw Error(ErrorKind::OutOfRange, "value does not fit in 64 bits");
  }
  return mpz_get_ui(value_.get_mpz_t());
}

std::size_t Natural::bit_length() const noexcept {
  return is_zero() ? 0 : mpz_sizeinbase(value_.get_mpz_t(), 2);
}

std::size_t Natural::decimal_digits() const { return to_decimal().size(); }

std::string Natural::to_decimal() const { return value_.get_str(10); }

double Natural::log() const {
  if (is_zero()) {
    return -HUGE_VAL;
  }
  long exp2 = 0;
  const double mantissa = mpz_get_d_2exp(&exp2, value_.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exp2) * std::log(2.0);
}

bool Natural::divisible_by(std::uint64_t divisor) const {
  if (divisor == 0) {
    return is_zero();
  }
  return mpz_divisible_ui_p(value_.get_mpz_t(), divisor) != 0;
}

bool Natural::divisible_by(const Natural& divisor) const {
  return mpz_divisible_p(value_.get_mpz_t(), divisor.value_.get_mpz_t()) != 0;
}

Natural& Natural::operator+=(const Natural& rhs) {
  value_ += rhs.value_;
  return *this;
}

Natural& Natural::operator*=(const Natural& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Natural& Natural::operator*=(std::uint64_t rhs) {
  mpz_mul_ui(value_.get_mpz_t(), value_.get_mpz_t(), rhs);
  return *this;
}

Natural& Natural::operator-=(const Natural& rhs) {
  if (rhs.value_ > value_) {
    throw Error(ErrorKind::OutOfRange, "subtraction would go below zero");
  }
  value_ -= rhs.value_;
  return *this;
}

Natural& Natural::divide_exact(const Natural& divisor) {
  if (divisor.is_zero() || !divisible_by(divisor)) {
    throw Error(ErrorKind::InexactDivision, "divisor does not divide the dividend");
  }
  mpz_divexact(value_.get_mpz_t(), value_.get_mpz_t(), divisor.value_.get_mpz_t());
  return *this;
}

Natural& Natural::divide_exact(std::uint64_t divisor) {
  if (divisor == 0 || !divisible_by(divisor)) {
    throw Error(ErrorKind::InexactDivision, "divisor does not divide the dividend");
  }
  mpz_divexact_ui(value_.get_mpz_t(), value_.get_mpz_t(), divisor);
  return *this;
}

bool operator==(const Natural& lhs, const Natural& rhs) noexcept {
  return cmp(lhs.value_, rhs.value_) == 0;
}

std::strong_ordering operator<=>(const Natural& lhs, const Natural& rhs) noexcept {
  const int c = cmp(lhs.value_, rhs.value_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Natural& n) { return os << n.to_decimal(); }

Natural gcd(const Natural& a, const Natural& b) {
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
  return Natural(std::move(g));
}

Natural lcm_pair(const Natural& a, const Natural& b) {
  if (a.is_zero() || b.is_zero()) {
    throw Error(ErrorKind::ZeroOperand, "lcm is only defined for positive operands");
  }
  Natural result = a;
  result.divide_exact(gcd(a, b));
  return result *= b;
}

Natural lcm_list(std::span<const Natural> values) {
  Natural acc{1};
  for (const Natural& v : values) {
    acc = lcm_pair(acc, v);
  }
  return acc;
}

Natural binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) {
    throw Error(ErrorKind::OutOfRange,
                "binomial(" + std::to_string(n) + ", " + std::to_string(k) + ") needs k <= n");
  }
  k = std::min(k, n - k);
  // After step i the accumulator holds C(n - k + i, i), so each division is exact.
  Natural acc{1};
  for (std::uint64_t i = 1; i <= k; ++i) {
    acc *= (n - k + i);
    acc.divide_exact(i);
  }
  return acc;
}

Natural product(std::span<const Natural> values) {
  if (values.empty()) {
    return Natural{1};
  }
  std::vector<Natural> level(values.begin(), values.end());
  while (level.size() > 1) {
    std::vector<Natural> next;
    next.reserve((level.size() + 1) / 2);
    for (std::size_t i = 0; i + 1 < level.size(); i += 2) {
      next.push_back(level[i] * level[i + 1]);
    }
    if (level.size() % 2 == 1) {
      next.push_back(std::move(level.back()));
    }
    level = std::move(next);
  }
  return std::move(level.front());
}

}  // namespace binlcm
