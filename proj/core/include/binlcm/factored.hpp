#pragma once

#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "binlcm/natural.hpp"

namespace binlcm {

struct PrimePower {
  std::uint64_t prime = 0;
  std::uint64_t exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer held as its prime factorization.
///
/// Primes are strictly ascending and every stored exponent is at least one,
/// so two FactoredNaturals are equal exactly when their values are equal.
/// The empty factorization is 1.
class FactoredNatural {
 public:
  FactoredNatural() = default;

  /// Validates primality of every key and strict ascent; zero exponents are
  /// dropped. Throws NotPrime or InvalidArgument.
  explicit FactoredNatural(std::vector<PrimePower> factors);
  FactoredNatural(std::initializer_list<PrimePower> factors);

  /// Trial-division factorization of a machine word; throws ZeroValue for 0.
  static FactoredNatural factor(std::uint64_t n);

  std::span<const PrimePower> factors() const noexcept { return factors_; }
  bool empty() const noexcept { return factors_.empty(); }
  std::size_t size() const noexcept { return factors_.size(); }

  /// Exponent of p, 0 when p is absent.
  std::uint64_t exponent_of(std::uint64_t p) const noexcept;

  /// Pointwise exponent comparison: true iff *this divides other.
  bool divides(const FactoredNatural& other) const noexcept;

  /// ln of the value, summed from the factors without expanding it.
  double log() const;

  /// "2^3 * 3^2 * 5"; "1" when empty.
  std::string to_string() const;

  friend bool operator==(const FactoredNatural&, const FactoredNatural&) = default;

 private:
  std::vector<PrimePower> factors_;
};

/// Π p^e as an exact Natural.
Natural factored_value(const FactoredNatural& f);

/// Pointwise maximum of exponents over the union of primes.
FactoredNatural factored_lcm(const FactoredNatural& a, const FactoredNatural& b);

/// Pointwise sum of exponents.
FactoredNatural factored_mul(const FactoredNatural& a, const FactoredNatural& b);

std::ostream& operator<<(std::ostream& os, const FactoredNatural& f);

}  // namespace binlcm
