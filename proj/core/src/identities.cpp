#include "binlcm/identities.hpp"

#include <string>
#include <vector>

#include "binlcm/error.hpp"
#include "binlcm/primes.hpp"

namespace binlcm {

namespace {

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) {
    throw Error(ErrorKind::ZeroValue, std::string(what) + " must be at least 1");
  }
}

// p^e; callers guarantee p^e <= some 64-bit value.
std::uint64_t power(std::uint64_t p, std::uint64_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= p;
  return r;
}

}  // namespace

RowMaxResult row_max_vp(std::uint64_t k, std::uint64_t p) {
  require_prime(p);
  RowMaxResult result{k, p, {}, std::nullopt};
  if (k == 0) return result;
  const BaseExpansion e = expand(k, p);
  const std::size_t top = e.top_index();
  result.attained_at = power(p, top) - 1;
  if (const auto i0 = first_non_max_digit(e)) {
    result.max_valuation = {top - *i0};
  }
  return result;
}

Valuation row_max_vp_bruteforce(std::uint64_t k, std::uint64_t p) {
  require_prime(p);
  Valuation best;
  for (std::uint64_t l = 0; l <= k; ++l) {
    best = std::max(best, vp_binomial_kummer(k, l, p));
  }
  return best;
}

Valuation vp_lcm_range(std::uint64_t n, std::uint64_t p) {
  require_positive(n, "n");
  require_prime(p);
  Valuation v;
  for (std::uint64_t pw = p; pw <= n; pw *= p) {
    ++v.exponent;
    if (pw > n / p) break;
  }
  return v;
}

Valuation vp_successor_formula(std::uint64_t k, std::uint64_t p) {
  require_positive(k, "k");
  require_prime(p);
  const BaseExpansion e = expand(k, p);
  if (const auto i0 = first_non_max_digit(e)) {
    return {*i0};
  }
  return {e.top_index() + 1};
}

Valuation vp_row_lcm_formula(std::uint64_t k, std::uint64_t p) {
  require_positive(k, "k");
  require_prime(p);
  const BaseExpansion e = expand(k, p);
  if (const auto i0 = first_non_max_digit(e)) {
    return {e.top_index() - *i0};
  }
  return {0};
}

FactoredNatural lcm_range_factored(std::uint64_t n) {
  require_positive(n, "n");
  std::vector<PrimePower> factors;
  for (std::uint64_t p : primes_upto(n)) {
    factors.push_back({p, vp_lcm_range(n, p).exponent});
  }
  return FactoredNatural(std::move(factors));
}

FactoredNatural lcm_binom_row_identity(std::uint64_t k) {
  if (k == 0) return {};
  const std::uint64_t n = k + 1;
  std::vector<PrimePower> factors;
  for (std::uint64_t p : primes_upto(n)) {
    const std::uint64_t range_exp = vp_lcm_range(n, p).exponent;
    const std::uint64_t successor_exp = vp(n, p).exponent;
    if (successor_exp > range_exp) {
      throw Error(ErrorKind::InternalInvariant,
                  "negative exponent for p = " + std::to_string(p) + " at k = " + std::to_string(k));
    }
    factors.push_back({p, range_exp - successor_exp});
  }
  return FactoredNatural(std::move(factors));
}

Natural lcm_binom_row_direct(std::uint64_t k) {
  // The row is symmetric, so the first half already contains every distinct entry.
  Natural entry{1};
  Natural acc{1};
  for (std::uint64_t i = 0; i < k / 2 + 1; ++i) {
    acc = lcm_pair(acc, entry);
    entry *= (k - i);
    entry.divide_exact(i + 1);
  }
  return acc;
}

Natural lcm_range_direct(std::uint64_t n) {
  Natural acc{1};
  for (std::uint64_t i = 2; i <= n; ++i) {
    acc = lcm_pair(acc, Natural{i});
  }
  return acc;
}

}  // namespace binlcm
