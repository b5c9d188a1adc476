#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "binlcm/factored.hpp"
#include "binlcm/natural.hpp"

namespace binlcm {

enum class CheckId {
  Theorem1,    // identity row lcm == direct row lcm
  Prop1,       // closed-form row max == brute force, attained at p^N - 1
  Eq3,         // floor(log_p n) == v_p(fold lcm(1..n))
  Eq4,         // digit formula == v_p(k + 1)
  Eq5,         // digit formula == Eq3 - Eq4 == closed-form row max
  LowerBound,  // lcm(1..n) >= 2^(n-1)
  ProofChain,  // lcm(1..n) = n·rowlcm(n-1) >= n·max C(n-1,i) >= 2^(n-1)
  Hanson,      // lcm(1..n) <= 3^n
};

std::string_view to_string(CheckId id) noexcept;
/// Accepts the names printed by to_string; throws UnknownCheck otherwise.
CheckId parse_check(std::string_view name);
/// Smallest input the check accepts (0 or 1).
std::uint64_t min_input(CheckId id) noexcept;

using Operand = std::variant<Natural, FactoredNatural>;

std::string to_string(const Operand& operand);

struct CheckReport {
  std::string check_name;
  std::uint64_t input = 0;
  Operand lhs;
  Operand rhs;
  bool passed = false;
  /// First mismatch; present iff !passed.
  std::optional<std::string> witness;
};

/// Prime-indexed checks (prop1, eq4, eq5) range over primes <= max_prime.
struct CheckOptions {
  std::uint64_t max_prime = 50;
};

CheckReport check_theorem1(std::uint64_t k);
CheckReport check_prop1(std::uint64_t k, const CheckOptions& options = {});
CheckReport check_eq3(std::uint64_t n);
CheckReport check_eq4(std::uint64_t k, const CheckOptions& options = {});
CheckReport check_eq5(std::uint64_t k, const CheckOptions& options = {});
CheckReport check_lower_bound(std::uint64_t n);
CheckReport check_proof_chain(std::uint64_t n);
CheckReport check_hanson(std::uint64_t n);

CheckReport run_check(CheckId id, std::uint64_t input, const CheckOptions& options = {});

/// ψ(n) / n = ln lcm(1..n) / n, summed from the factored form.
double psi_ratio(std::uint64_t n);

struct RangeSummary {
  std::string check_name;
  std::uint64_t from = 0;
  std::uint64_t to = 0;
  std::uint64_t total = 0;
  std::uint64_t failures = 0;
  std::optional<std::uint64_t> first_failure;
  /// Failing reports ordered by input.
  std::vector<CheckReport> failed;
  double elapsed_seconds = 0.0;
};

/// True when every field except elapsed_seconds matches.
bool same_outcome(const RangeSummary& a, const RangeSummary& b);

/// Runs `check` on every input in [from, to] across `workers` threads.
/// The result does not depend on the worker count or on scheduling.
/// Throws InvalidArgument when from > to or workers == 0, and ZeroValue when
/// the range starts below min_input(check).
RangeSummary verify_range(CheckId check, std::uint64_t from, std::uint64_t to, unsigned workers,
                          const CheckOptions& options = {});

}  // namespace binlcm
