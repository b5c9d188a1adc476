#pragma once

// Brute-force reference implementations used only by the tests. None of these
// call into the library paths they are compared against.

#include <cstdint>
#include <random>
#include <vector>

namespace oracle {

inline bool is_prime_trial(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

inline std::vector<std::uint64_t> primes_trial(std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= limit; ++n) {
    if (is_prime_trial(n)) out.push_back(n);
  }
  return out;
}

inline std::uint64_t vp_trial(std::uint64_t n, std::uint64_t p) {
  std::uint64_t e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  return e;
}

// Largest e with p^e <= n, scanning n downward by division.
inline std::uint64_t floor_log(std::uint64_t n, std::uint64_t p) {
  std::uint64_t e = 0;
  while (n >= p) {
    n /= p;
    ++e;
  }
  return e;
}

inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(0x5eedULL);
  return engine;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

}  // namespace oracle
