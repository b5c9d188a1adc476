#pragma once

#include <cstdint>
#include <vector>

namespace binlcm {

/// All primes p with 2 <= p <= limit, ascending. Sieve of Eratosthenes.
std::vector<std::uint64_t> primes_upto(std::uint64_t limit);

/// Exact primality for every 64-bit input.
///
/// Small inputs use trial division; larger ones run the strong-pseudoprime
/// test against the first twelve prime bases, which has no 64-bit liars.
bool is_prime(std::uint64_t n) noexcept;

/// Throws NotPrime naming `what` when p is not prime.
void require_prime(std::uint64_t p, const char* what = "p");

}  // namespace binlcm
