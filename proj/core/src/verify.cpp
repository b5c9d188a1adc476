#include "binlcm/verify.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "binlcm/error.hpp"
#include "binlcm/identities.hpp"
#include "binlcm/padic.hpp"
#include "binlcm/primes.hpp"

namespace binlcm {

namespace {

struct CheckName {
  CheckId id;
  std::string_view name;
};

constexpr std::array<CheckName, 8> kCheckNames = {{
    {CheckId::Theorem1, "theorem1"},
    {CheckId::Prop1, "prop1"},
    {CheckId::Eq3, "eq3"},
    {CheckId::Eq4, "eq4"},
    {CheckId::Eq5, "eq5"},
    {CheckId::LowerBound, "lower-bound"},
    {CheckId::ProofChain, "proof-chain"},
    {CheckId::Hanson, "hanson"},
}};

void require_positive(std::uint64_t n, CheckId id) {
  if (n == 0) {
    throw Error(ErrorKind::ZeroValue, std::string(to_string(id)) + " needs an input of at least 1");
  }
}

CheckReport make_report(CheckId id, std::uint64_t input, Operand lhs, Operand rhs,
                        std::optional<std::string> witness) {
  CheckReport r;
  r.check_name = std::string(to_string(id));
  r.input = input;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.passed = !witness.has_value();
  r.witness = std::move(witness);
  return r;
}

std::string exponent_witness(std::uint64_t p, std::uint64_t lhs, std::uint64_t rhs) {
  return "p=" + std::to_string(p) + ": lhs exponent " + std::to_string(lhs) +
         ", rhs exponent " + std::to_string(rhs);
}

std::string value_witness(const Natural& lhs, const Natural& rhs) {
  return "lhs=" + lhs.to_decimal() + " rhs=" + rhs.to_decimal();
}

// Entries C(n,0..n) built by the exact recurrence C(n,i+1) = C(n,i)·(n-i)/(i+1).
std::vector<Natural> binomial_row(std::uint64_t n) {
  std::vector<Natural> row;
  row.reserve(n + 1);
  Natural entry{1};
  for (std::uint64_t i = 0; i <= n; ++i) {
    row.push_back(entry);
    entry *= (n - i);
    entry.divide_exact(i + 1);
  }
  return row;
}

// Builds Π p^e over the listed primes from per-prime exponents.
FactoredNatural from_exponents(const std::vector<std::uint64_t>& primes,
                               const std::vector<std::uint64_t>& exponents) {
  std::vector<PrimePower> factors;
  factors.reserve(primes.size());
  for (std::size_t i = 0; i < primes.size(); ++i) {
    factors.push_back({primes[i], exponents[i]});
  }
  return FactoredNatural(std::move(factors));
}

}  // namespace

std::string_view to_string(CheckId id) noexcept {
  for (const auto& [cid, name] : kCheckNames) {
    if (cid == id) return name;
  }
  return "unknown";
}

CheckId parse_check(std::string_view name) {
  for (const auto& [cid, cname] : kCheckNames) {
    if (cname == name) return cid;
  }
  throw Error(ErrorKind::UnknownCheck, "unknown check '" + std::string(name) + "'");
}

std::uint64_t min_input(CheckId id) noexcept {
  switch (id) {
    case CheckId::Theorem1:
    case CheckId::Prop1:
      return 0;
    default:
      return 1;
  }
}

std::string to_string(const Operand& operand) {
  return std::visit(
      [](const auto& v) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(v)>, Natural>) {
          return v.to_decimal();
        } else {
          return v.to_string();
        }
      },
      operand);
}

CheckReport check_theorem1(std::uint64_t k) {
  const FactoredNatural identity = lcm_binom_row_identity(k);
  Natural lhs = factored_value(identity);
  Natural rhs = lcm_binom_row_direct(k);
  std::optional<std::string> witness;
  if (lhs != rhs) {
    for (std::uint64_t p : primes_upto(k + 1)) {
      const std::uint64_t direct = vp(rhs, p).exponent;
      if (identity.exponent_of(p) != direct) {
        witness = exponent_witness(p, identity.exponent_of(p), direct);
        break;
      }
    }
    if (!witness) witness = value_witness(lhs, rhs);
  }
  return make_report(CheckId::Theorem1, k, std::move(lhs), std::move(rhs), std::move(witness));
}

CheckReport check_prop1(std::uint64_t k, const CheckOptions& options) {
  const std::vector<std::uint64_t> primes = primes_upto(options.max_prime);
  std::vector<std::uint64_t> closed;
  std::vector<std::uint64_t> brute;
  std::optional<std::string> witness;
  for (std::uint64_t p : primes) {
    const RowMaxResult r = row_max_vp(k, p);
    const Valuation scanned = row_max_vp_bruteforce(k, p);
    closed.push_back(r.max_valuation.exponent);
    brute.push_back(scanned.exponent);
    if (witness) continue;
    if (r.max_valuation != scanned) {
      witness = exponent_witness(p, r.max_valuation.exponent, scanned.exponent);
    } else if (r.attained_at) {
      const Valuation at = vp_binomial_kummer(k, *r.attained_at, p);
      if (at != r.max_valuation) {
        witness = "p=" + std::to_string(p) + ": v_p(C(k," + std::to_string(*r.attained_at) +
                  ")) = " + std::to_string(at.exponent) + " but closed form gives " +
                  std::to_string(r.max_valuation.exponent);
      }
    }
  }
  return make_report(CheckId::Prop1, k, from_exponents(primes, closed),
                     from_exponents(primes, brute), std::move(witness));
}

CheckReport check_eq3(std::uint64_t n) {
  require_positive(n, CheckId::Eq3);
  FactoredNatural lhs = lcm_range_factored(n);
  Natural rhs = lcm_range_direct(n);
  std::optional<std::string> witness;
  for (const PrimePower& pp : lhs.factors()) {
    const std::uint64_t direct = vp(rhs, pp.prime).exponent;
    if (pp.exponent != direct) {
      witness = exponent_witness(pp.prime, pp.exponent, direct);
      break;
    }
  }
  // Equal values also pin every prime above n to exponent 0.
  if (!witness && factored_value(lhs) != rhs) {
    witness = value_witness(factored_value(lhs), rhs);
  }
  return make_report(CheckId::Eq3, n, std::move(lhs), std::move(rhs), std::move(witness));
}

CheckReport check_eq4(std::uint64_t k, const CheckOptions& options) {
  require_positive(k, CheckId::Eq4);
  const std::vector<std::uint64_t> primes = primes_upto(options.max_prime);
  std::vector<std::uint64_t> formula;
  std::vector<std::uint64_t> direct;
  std::optional<std::string> witness;
  for (std::uint64_t p : primes) {
    formula.push_back(vp_successor_formula(k, p).exponent);
    direct.push_back(vp(k + 1, p).exponent);
    if (!witness && formula.back() != direct.back()) {
      witness = exponent_witness(p, formula.back(), direct.back());
    }
  }
  return make_report(CheckId::Eq4, k, from_exponents(primes, formula),
                     from_exponents(primes, direct), std::move(witness));
}

CheckReport check_eq5(std::uint64_t k, const CheckOptions& options) {
  require_positive(k, CheckId::Eq5);
  const std::vector<std::uint64_t> primes = primes_upto(options.max_prime);
  std::vector<std::uint64_t> formula;
  std::vector<std::uint64_t> difference;
  std::optional<std::string> witness;
  for (std::uint64_t p : primes) {
    const std::uint64_t f = vp_row_lcm_formula(k, p).exponent;
    const std::uint64_t range_exp = vp_lcm_range(k + 1, p).exponent;
    const std::uint64_t succ_exp = vp_successor_formula(k, p).exponent;
    const std::uint64_t row_max = row_max_vp(k, p).max_valuation.exponent;
    formula.push_back(f);
    difference.push_back(range_exp >= succ_exp ? range_exp - succ_exp : 0);
    if (witness) continue;
    if (succ_exp > range_exp) {
      witness = "p=" + std::to_string(p) + ": successor exponent " + std::to_string(succ_exp) +
                " exceeds range exponent " + std::to_string(range_exp);
    } else if (f != range_exp - succ_exp) {
      witness = exponent_witness(p, f, range_exp - succ_exp);
    } else if (f != row_max) {
      witness = "p=" + std::to_string(p) + ": formula " + std::to_string(f) +
                ", closed-form row max " + std::to_string(row_max);
    }
  }
  return make_report(CheckId::Eq5, k, from_exponents(primes, formula),
                     from_exponents(primes, difference), std::move(witness));
}

CheckReport check_lower_bound(std::uint64_t n) {
  require_positive(n, CheckId::LowerBound);
  Natural lhs = factored_value(lcm_range_factored(n));
  Natural rhs = Natural::pow(2, n - 1);
  std::optional<std::string> witness;
  if (lhs < rhs) witness = value_witness(lhs, rhs);
  return make_report(CheckId::LowerBound, n, std::move(lhs), std::move(rhs), std::move(witness));
}

CheckReport check_proof_chain(std::uint64_t n) {
  require_positive(n, CheckId::ProofChain);
  Natural range_lcm = lcm_range_direct(n);
  const Natural row_lcm = lcm_binom_row_direct(n - 1);
  const std::vector<Natural> row = binomial_row(n - 1);
  const Natural n_times_max = *std::ranges::max_element(row) * n;
  Natural power = Natural::pow(2, n - 1);

  std::optional<std::string> witness;
  if (range_lcm != row_lcm * n) {
    witness = "link a: lcm(1..n)=" + range_lcm.to_decimal() +
              " n*rowlcm=" + (row_lcm * n).to_decimal();
  } else if (n_times_max < power) {
    witness = "link b: n*max=" + n_times_max.to_decimal() + " 2^(n-1)=" + power.to_decimal();
  } else if (range_lcm < n_times_max) {
    witness = "link c: lcm(1..n)=" + range_lcm.to_decimal() +
              " n*max=" + n_times_max.to_decimal();
  }
  return make_report(CheckId::ProofChain, n, std::move(range_lcm), std::move(power),
                     std::move(witness));
}

CheckReport check_hanson(std::uint64_t n) {
  require_positive(n, CheckId::Hanson);
  Natural lhs = factored_value(lcm_range_factored(n));
  Natural rhs = Natural::pow(3, n);
  std::optional<std::string> witness;
  if (lhs > rhs) witness = value_witness(lhs, rhs);
  return make_report(CheckId::Hanson, n, std::move(lhs), std::move(rhs), std::move(witness));
}

CheckReport run_check(CheckId id, std::uint64_t input, const CheckOptions& options) {
  switch (id) {
    case CheckId::Theorem1: return check_theorem1(input);
    case CheckId::Prop1: return check_prop1(input, options);
    case CheckId::Eq3: return check_eq3(input);
    case CheckId::Eq4: return check_eq4(input, options);
    case CheckId::Eq5: return check_eq5(input, options);
    case CheckId::LowerBound: return check_lower_bound(input);
    case CheckId::ProofChain: return check_proof_chain(input);
    case CheckId::Hanson: return check_hanson(input);
  }
  throw Error(ErrorKind::UnknownCheck, "unhandled check id");
}

double psi_ratio(std::uint64_t n) {
  if (n == 0) {
    throw Error(ErrorKind::ZeroValue, "psi_ratio needs n >= 1");
  }
  return lcm_range_factored(n).log() / static_cast<double>(n);
}

bool same_outcome(const RangeSummary& a, const RangeSummary& b) {
  if (a.check_name != b.check_name || a.from != b.from || a.to != b.to || a.total != b.total ||
      a.failures != b.failures || a.first_failure != b.first_failure ||
      a.failed.size() != b.failed.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.failed.size(); ++i) {
    if (a.failed[i].input != b.failed[i].input || a.failed[i].witness != b.failed[i].witness) {
      return false;
    }
  }
  return true;
}

RangeSummary verify_range(CheckId check, std::uint64_t from, std::uint64_t to, unsigned workers,
                          const CheckOptions& options) {
  if (from > to) {
    throw Error(ErrorKind::InvalidArgument, "empty range: from > to");
  }
  if (workers == 0) {
    throw Error(ErrorKind::InvalidArgument, "workers must be at least 1");
  }
  if (from < min_input(check)) {
    throw Error(ErrorKind::ZeroValue, std::string(to_string(check)) + " needs inputs >= " +
                                          std::to_string(min_input(check)));
  }

  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t total = to - from + 1;
  const unsigned threads = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

  // Inputs are handed out one at a time; costs grow with the input, so static
  // blocks would leave the last worker with most of the work.
  std::atomic<std::uint64_t> next{0};
  std::mutex merge_mutex;
  std::vector<CheckReport> failed;
  std::exception_ptr error;

  auto work = [&] {
    std::vector<CheckReport> local;
    try {
      for (std::uint64_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
        CheckReport r = run_check(check, from + i, options);
        if (!r.passed) local.push_back(std::move(r));
      }
    } catch (...) {
      next.store(total);
      std::lock_guard lock(merge_mutex);
      if (!error) error = std::current_exception();
    }
    std::lock_guard lock(merge_mutex);
    std::ranges::move(local, std::back_inserter(failed));
  };

  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);

  std::ranges::sort(failed, {}, &CheckReport::input);

  RangeSummary summary;
  summary.check_name = std::string(to_string(check));
  summary.from = from;
  summary.to = to;
  summary.total = total;
  summary.failures = failed.size();
  if (!failed.empty()) summary.first_failure = failed.front().input;
  summary.failed = std::move(failed);
  summary.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return summary;
}

}  // namespace binlcm
