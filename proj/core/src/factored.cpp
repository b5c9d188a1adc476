#include "binlcm/factored.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "binlcm/error.hpp"
#include "binlcm/primes.hpp"

namespace binlcm {

namespace {

template <class Combine>
std::vector<PrimePower> merge(std::span<const PrimePower> a, std::span<const PrimePower> b,
                              Combine combine) {
  std::vector<PrimePower> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].prime < b[j].prime)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].prime < a[i].prime) {
      out.push_back(b[j++]);
    } else {
      out.push_back({a[i].prime, combine(a[i].exponent, b[j].exponent)});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

FactoredNatural::FactoredNatural(std::vector<PrimePower> factors) {
  std::erase_if(factors, [](const PrimePower& pp) { return pp.exponent == 0; });
  for (std::size_t i = 0; i < factors.size(); ++i) {
    require_prime(factors[i].prime, "factor");
    if (i > 0 && factors[i - 1].prime >= factors[i].prime) {
      throw Error(ErrorKind::InvalidArgument, "factor primes must be strictly ascending");
    }
  }
  factors_ = std::move(factors);
}

FactoredNatural::FactoredNatural(std::initializer_list<PrimePower> factors)
    : FactoredNatural(std::vector<PrimePower>(factors)) {}

FactoredNatural FactoredNatural::factor(std::uint64_t n) {
  if (n == 0) {
    throw Error(ErrorKind::ZeroValue, "0 has no factorization");
  }
  FactoredNatural result;
  auto take = [&](std::uint64_t p) {
    std::uint64_t e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e > 0) result.factors_.push_back({p, e});
  };
  take(2);
  for (std::uint64_t d = 3; d <= n / d; d += 2) {
    take(d);
  }
  if (n > 1) result.factors_.push_back({n, 1});
  return result;
}

std::uint64_t FactoredNatural::exponent_of(std::uint64_t p) const noexcept {
  auto it = std::lower_bound(factors_.begin(), factors_.end(), p,
                             [](const PrimePower& pp, std::uint64_t q) { return pp.prime < q; });
  return (it != factors_.end() && it->prime == p) ? it->exponent : 0;
}

bool FactoredNatural::divides(const FactoredNatural& other) const noexcept {
  return std::ranges::all_of(factors_, [&](const PrimePower& pp) {
    return pp.exponent <= other.exponent_of(pp.prime);
  });
}

double FactoredNatural::log() const {
  double sum = 0.0;
  for (const PrimePower& pp : factors_) {
    sum += static_cast<double>(pp.exponent) * std::log(static_cast<double>(pp.prime));
  }
  return sum;
}

std::string FactoredNatural::to_string() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const PrimePower& pp : factors_) {
    if (!out.empty()) out += " * ";
    out += std::to_string(pp.prime);
    if (pp.exponent != 1) {
      out += '^';
      out += std::to_string(pp.exponent);
    }
  }
  return out;
}

Natural factored_value(const FactoredNatural& f) {
  std::vector<Natural> powers;
  powers.reserve(f.size());
  for (const PrimePower& pp : f.factors()) {
    powers.push_back(Natural::pow(pp.prime, pp.exponent));
  }
  return product(powers);
}

FactoredNatural factored_lcm(const FactoredNatural& a, const FactoredNatural& b) {
  return FactoredNatural(merge(a.factors(), b.factors(),
                               [](std::uint64_t x, std::uint64_t y) { return std::max(x, y); }));
}

FactoredNatural factored_mul(const FactoredNatural& a, const FactoredNatural& b) {
  return FactoredNatural(
      merge(a.factors(), b.factors(), [](std::uint64_t x, std::uint64_t y) { return x + y; }));
}

std::ostream& operator<<(std::ostream& os, const FactoredNatural& f) { return os << f.to_string(); }

}  // namespace binlcm
