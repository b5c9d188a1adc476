// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "binlcm/binlcm.hpp"

using namespace binlcm;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

unsigned workers() { return std::max(1U, std::thread::hardware_concurrency()); }

std::string describe(const RangeSummary& s) {
  std::string out = s.check_name + "[" + std::to_string(s.from) + ".." + std::to_string(s.to) +
                    "] total=" + std::to_string(s.total) +
                    " failures=" + std::to_string(s.failures);
  if (s.first_failure) out += " first_failure=" + std::to_string(*s.first_failure);
  char buf[32];
  std::snprintf(buf, sizeof buf, " (%.2fs)", s.elapsed_seconds);
  return out + buf;
}

bool clean(const RangeSummary& s) {
  return s.failures == 0 && s.total == s.to - s.from + 1;
}

template <class F>
double best_seconds(F&& fn, int runs) {
  double best = 1e300;
  for (int i = 0; i < runs; ++i) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    best = std::min(
        best, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count());
  }
  return best;
}

Outcome theorem1_sweep() {
  const RangeSummary s = verify_range(CheckId::Theorem1, 0, 2000, workers());
  return {clean(s), describe(s)};
}

Outcome prop1_sweep() {
  const RangeSummary s = verify_range(CheckId::Prop1, 1, 1500, workers(), {.max_prime = 50});
  return {clean(s), describe(s) + " primes<=50"};
}

Outcome valuation_agreement() {
  const std::vector<std::uint64_t> primes = primes_upto(50);
  std::uint64_t mismatches = 0;
  std::uint64_t grid = 0;
  for (std::uint64_t n = 0; n <= 120; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      const Natural c = binomial(n, k);
      for (std::uint64_t p : primes) {
        const Valuation kummer = vp_binomial_kummer(n, k, p);
        if (kummer != vp_binomial_legendre(n, k, p) || kummer != vp(c, p)) ++mismatches;
        ++grid;
      }
    }
  }
  std::mt19937_64 rng(20240601);
  const std::vector<std::uint64_t> random_primes = primes_upto(10'000);
  constexpr int kRandomTriples = 20'000;
  for (int i = 0; i < kRandomTriples; ++i) {
    const std::uint64_t n = std::uniform_int_distribution<std::uint64_t>(0, 1'000'000'000)(rng);
    const std::uint64_t k = std::uniform_int_distribution<std::uint64_t>(0, n)(rng);
    const std::uint64_t p = random_primes[std::uniform_int_distribution<std::size_t>(
        0, random_primes.size() - 1)(rng)];
    if (vp_binomial_kummer(n, k, p) != vp_binomial_legendre(n, k, p)) ++mismatches;
  }
  return {mismatches == 0, "grid=" + std::to_string(grid) + " random=" +
                               std::to_string(kRandomTriples) +
                               " mismatches=" + std::to_string(mismatches)};
}

Outcome formula_checks() {
  const RangeSummary eq3 = verify_range(CheckId::Eq3, 1, 1000, workers());
  const RangeSummary eq4 = verify_range(CheckId::Eq4, 1, 100'000, workers(), {.max_prime = 50});
  const RangeSummary eq5 = verify_range(CheckId::Eq5, 1, 1500, workers(), {.max_prime = 50});
  return {clean(eq3) && clean(eq4) && clean(eq5),
          describe(eq3) + "; " + describe(eq4) + "; " + describe(eq5)};
}

Outcome lower_bound() {
  const RangeSummary bound = verify_range(CheckId::LowerBound, 1, 5000, workers());
  const RangeSummary chain = verify_range(CheckId::ProofChain, 1, 1000, workers());
  return {clean(bound) && clean(chain), describe(bound) + "; " + describe(chain)};
}

Outcome hanson_and_psi() {
  const RangeSummary hanson = verify_range(CheckId::Hanson, 1, 5000, workers());
  const double ratio = psi_ratio(100'000);
  char buf[64];
  std::snprintf(buf, sizeof buf, "; psi_ratio(1e5)=%.6f", ratio);
  return {clean(hanson) && std::abs(ratio - 1.0) < 0.05, describe(hanson) + buf};
}

Outcome performance() {
  FactoredNatural fast;
  Natural slow;
  const double identity_5000 = best_seconds([&] { fast = lcm_binom_row_identity(5000); }, 5);
  const double direct_5000 = best_seconds([&] { slow = lcm_binom_row_direct(5000); }, 3);
  const bool same = factored_value(fast) == slow;
  const double identity_1e5 = best_seconds([&] { fast = lcm_binom_row_identity(100'000); }, 3);
  const double speedup = direct_5000 / identity_5000;
  char buf[200];
  std::snprintf(buf, sizeof buf,
                "k=5000 identity=%.6fs direct=%.6fs speedup=%.1fx values_equal=%s; "
                "k=1e5 identity=%.6fs",
                identity_5000, direct_5000, speedup, same ? "yes" : "no", identity_1e5);
  return {same && speedup >= 10.0 && identity_1e5 < 1.0, buf};
}

Outcome determinism() {
  const RangeSummary one = verify_range(CheckId::Theorem1, 0, 2000, 1);
  const RangeSummary four = verify_range(CheckId::Theorem1, 0, 2000, 4);
  const RangeSummary eight = verify_range(CheckId::Theorem1, 0, 2000, 8);
  return {same_outcome(one, four) && same_outcome(one, eight),
          "workers 1/4/8: " + describe(one) + " | " + describe(four) + " | " + describe(eight)};
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria = {
      {"1 row lcm identity == direct fold, 0<=k<=2000", theorem1_sweep},
      {"2 row-max closed form == scan, attained at p^N-1, k<=1500, p<=50", prop1_sweep},
      {"3 Kummer == Legendre == direct valuation", valuation_agreement},
      {"4 lcm-range / successor / row-lcm valuation formulas", formula_checks},
      {"5 lcm(1..n) >= 2^(n-1) and proof chain", lower_bound},
      {"6 lcm(1..n) <= 3^n and |psi_ratio(1e5)-1| < 0.05", hanson_and_psi},
      {"7 identity path speed", performance},
      {"8 verify_range deterministic across workers", determinism},
  };

  int failed = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("[%s] %s -- %s\n", o.passed ? "PASS" : "FAIL", c.name, o.detail.c_str());
    std::fflush(stdout);
    if (!o.passed) ++failed;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
