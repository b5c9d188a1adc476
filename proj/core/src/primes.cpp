#include "binlcm/primes.hpp"

#include <array>
#include <string>

#include "binlcm/error.hpp"

namespace binlcm {

namespace {

__extension__ typedef unsigned __int128 u128;

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

// n odd, n > base.
bool strong_probable_prime(std::uint64_t n, std::uint64_t base) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  std::uint64_t x = pow_mod(base, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int r = 1; r < s; ++r) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

constexpr std::array<std::uint64_t, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

// Inputs below this bound are answered from a sieve built on first use.
constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

const std::vector<bool>& small_prime_table() {
  static const std::vector<bool> table = [] {
    std::vector<bool> t(kTableLimit, false);
    for (std::uint64_t p : primes_upto(kTableLimit - 1)) t[p] = true;
    return t;
  }();
  return table;
}

}  // namespace

std::vector<std::uint64_t> primes_upto(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  // composite[i] marks the odd number 2i + 1.
  const std::uint64_t half = (limit - 1) / 2 + 1;
  std::vector<bool> composite(half, false);
  primes.push_back(2);
  for (std::uint64_t i = 1; i < half; ++i) {
    if (composite[i]) continue;
    const std::uint64_t p = 2 * i + 1;
    primes.push_back(p);
    for (std::uint64_t j = p * p / 2; j < half; j += p) {
      composite[j] = true;
    }
  }
  return primes;
}

bool is_prime(std::uint64_t n) noexcept {
  if (n < kTableLimit) return small_prime_table()[n];
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  for (std::uint64_t base : kWitnesses) {
    if (!strong_probable_prime(n, base)) return false;
  }
  return true;
}

void require_prime(std::uint64_t p, const char* what) {
  if (!is_prime(p)) {
    throw Error(ErrorKind::NotPrime, std::string(what) + " = " + std::to_string(p) + " is not prime");
  }
}

}  // namespace binlcm
