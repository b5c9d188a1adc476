#pragma once

#include <cstdint>
#include <optional>

#include "binlcm/factored.hpp"
#include "binlcm/natural.hpp"
#include "binlcm/padic.hpp"

namespace binlcm {

/// Maximum p-adic valuation across the binomial row C(k, 0..k).
struct RowMaxResult {
  std::uint64_t k = 0;
  std::uint64_t p = 2;
  Valuation max_valuation;
  /// ℓ = p^N - 1, a row index where the maximum is reached; absent for k = 0.
  std::optional<std::uint64_t> attained_at;

  friend bool operator==(const RowMaxResult&, const RowMaxResult&) = default;
};

/// Closed form: 0 when k + 1 is a power of p, else N - i0.
RowMaxResult row_max_vp(std::uint64_t k, std::uint64_t p);

/// Scans the whole row with the borrow-counting valuation.
Valuation row_max_vp_bruteforce(std::uint64_t k, std::uint64_t p);

/// floor(log_p n), found by exact repeated multiplication. Equals v_p(lcm(1..n)).
Valuation vp_lcm_range(std::uint64_t n, std::uint64_t p);

/// Digit formula for v_p(k + 1): N + 1 when k = p^(N+1) - 1, else i0.
Valuation vp_successor_formula(std::uint64_t k, std::uint64_t p);

/// Digit formula for v_p(lcm(1..k+1) / (k+1)): 0 when k = p^(N+1) - 1, else N - i0.
Valuation vp_row_lcm_formula(std::uint64_t k, std::uint64_t p);

/// lcm(1..n) as { p : floor(log_p n) } over primes p <= n. Throws ZeroValue for n = 0.
FactoredNatural lcm_range_factored(std::uint64_t n);

/// lcm(C(k,0), ..., C(k,k)) computed as lcm(1..k+1) / (k+1) in exponent space.
FactoredNatural lcm_binom_row_identity(std::uint64_t k);

/// lcm(C(k,0), ..., C(k,k)) by folding lcm over the literal row.
Natural lcm_binom_row_direct(std::uint64_t k);

/// lcm(1, 2, ..., n) by folding lcm over the integers; 1 for n = 0.
Natural lcm_range_direct(std::uint64_t n);

}  // namespace binlcm
