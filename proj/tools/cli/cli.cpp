#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <functional>
#include <optional>
#include <ostream>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "binlcm/binlcm.hpp"

namespace binlcm::cli {

namespace {

using nlohmann::ordered_json;

constexpr std::uint64_t kDefaultCutoff = 5000;

// Usage problems detected after CLI11 has accepted the command line.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(const std::string& text, const char* name) {
  std::uint64_t value = 0;
  const char* first = text.data();
  const char* last = first + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw UsageError(std::string("parameter ") + name + ": '" + text +
                     "' is not a non-negative decimal integer");
  }
  return value;
}

std::uint64_t parse_prime(const std::string& text, const char* name) {
  const std::uint64_t p = parse_u64(text, name);
  if (!is_prime(p)) {
    throw UsageError(std::string("parameter ") + name + ": " + text + " is not prime");
  }
  return p;
}

std::uint64_t parse_positive(const std::string& text, const char* name) {
  const std::uint64_t n = parse_u64(text, name);
  if (n == 0) {
    throw UsageError(std::string("parameter ") + name + ": must be at least 1");
  }
  return n;
}

ordered_json factors_json(const FactoredNatural& f) {
  ordered_json pairs = ordered_json::array();
  for (const PrimePower& pp : f.factors()) {
    pairs.push_back({pp.prime, pp.exponent});
  }
  return pairs;
}

ordered_json operand_json(const Operand& operand) {
  if (const auto* n = std::get_if<Natural>(&operand)) return n->to_decimal();
  return factors_json(std::get<FactoredNatural>(operand));
}

bool is_factor_list(const ordered_json& j) {
  return j.is_array() && std::ranges::all_of(j, [](const ordered_json& e) {
           return e.is_array() && e.size() == 2;
         });
}

std::string render_factors(const ordered_json& j);

std::string render_value(const ordered_json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "none";
  if (is_factor_list(j) && !j.empty()) {
    return render_factors(j);
  }
  return j.dump();
}

std::string render_factors(const ordered_json& j) {
  if (j.empty()) return "1";
  std::string out;
  for (const auto& pair : j) {
    if (!out.empty()) out += " * ";
    out += pair[0].dump();
    if (pair[1].get<std::uint64_t>() != 1) out += "^" + pair[1].dump();
  }
  return out;
}

std::string render_fields(const ordered_json& object) {
  std::string out;
  for (const auto& [key, value] : object.items()) {
    if (!out.empty()) out += ' ';
    out += key + "=" + render_value(value);
  }
  return out;
}

class Emitter {
 public:
  Emitter(std::ostream& out, bool json) : out_(out), json_(json) {}

  void emit(std::string_view op, const ordered_json& input, const ordered_json& output, bool ok) {
    all_ok_ = all_ok_ && ok;
    if (json_) {
      ordered_json record;
      record["op"] = op;
      record["input"] = input;
      record["output"] = output;
      record["ok"] = ok;
      out_ << record.dump() << '\n';
      return;
    }
    std::string line = ok ? "" : "FAIL ";
    if (output.is_object()) {
      line += render_fields(input) + " " + render_fields(output);
    } else if (output.is_array()) {
      line += render_factors(output);
    } else {
      line += render_value(output);
    }
    out_ << line << '\n';
  }

  bool all_ok() const { return all_ok_; }

 private:
  std::ostream& out_;
  bool json_;
  bool all_ok_ = true;
};

template <class F>
double time_best(F&& fn) {
  using clock = std::chrono::steady_clock;
  double best = 0.0;
  double spent = 0.0;
  for (int run = 0; run < 5 && (run == 0 || spent < 0.25); ++run) {
    const auto start = clock::now();
    fn();
    const double s = std::chrono::duration<double>(clock::now() - start).count();
    best = run == 0 ? s : std::min(best, s);
    spent += s;
  }
  return best;
}

std::vector<std::uint64_t> parse_sizes(const std::string& text) {
  std::vector<std::uint64_t> sizes;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    sizes.push_back(parse_positive(text.substr(pos, comma - pos), "sizes"));
    pos = comma + 1;
  }
  return sizes;
}

struct Args {
  bool json = false;
  bool quiet = false;

  std::string n, k, p;
  std::string method = "kummer";
  std::string row_method = "identity";
  bool oracle = false;
  bool value = false;
  bool factored = false;

  std::string check;
  std::string from, to;
  unsigned jobs = 0;
  std::string max_prime = "50";

  std::string subject;
  std::string sizes;
  std::string cutoff = std::to_string(kDefaultCutoff);
};

void emit_big(Emitter& emitter, std::string_view op, const ordered_json& input,
              const FactoredNatural& f, bool as_value) {
  if (as_value) {
    emitter.emit(op, input, factored_value(f).to_decimal(), true);
  } else {
    emitter.emit(op, input, factors_json(f), true);
  }
}

void run_verify(const Args& a, Emitter& emitter) {
  const CheckId check = parse_check(a.check);
  const std::uint64_t from = parse_u64(a.from, "from");
  const std::uint64_t to = parse_u64(a.to, "to");
  if (from > to) throw UsageError("parameter from: must not exceed to");
  if (from < min_input(check)) {
    throw UsageError("parameter from: " + a.check + " needs inputs >= " +
                     std::to_string(min_input(check)));
  }
  CheckOptions options;
  options.max_prime = parse_u64(a.max_prime, "max-prime");
  const unsigned jobs = a.jobs > 0 ? a.jobs : std::max(1U, std::thread::hardware_concurrency());

  const RangeSummary summary = verify_range(check, from, to, jobs, options);
  if (!a.quiet) {
    for (const CheckReport& r : summary.failed) {
      emitter.emit("verify-failure",
                   {{"check", r.check_name}, {"input", std::to_string(r.input)}},
                   {{"lhs", operand_json(r.lhs)},
                    {"rhs", operand_json(r.rhs)},
                    {"witness", r.witness.value_or("")}},
                   false);
    }
  }
  ordered_json input = {{"check", summary.check_name},
                        {"from", std::to_string(from)},
                        {"to", std::to_string(to)},
                        {"jobs", std::to_string(jobs)}};
  if (check == CheckId::Prop1 || check == CheckId::Eq4 || check == CheckId::Eq5) {
    input["max_prime"] = std::to_string(options.max_prime);
  }
  ordered_json output = {{"total", std::to_string(summary.total)},
                         {"failures", std::to_string(summary.failures)},
                         {"first_failure", summary.first_failure
                                               ? ordered_json(std::to_string(*summary.first_failure))
                                               : ordered_json(nullptr)},
                         {"elapsed_seconds", summary.elapsed_seconds}};
  emitter.emit("verify", input, output, summary.failures == 0);
}

void run_bench(const Args& a, Emitter& emitter) {
  if (a.subject != "row-lcm" && a.subject != "range-lcm") {
    throw UsageError("parameter subject: expected row-lcm or range-lcm");
  }
  const std::vector<std::uint64_t> sizes = parse_sizes(a.sizes);
  const std::uint64_t cutoff = parse_u64(a.cutoff, "cutoff");
  const bool row = a.subject == "row-lcm";

  for (std::uint64_t size : sizes) {
    FactoredNatural fast;
    const double fast_s = time_best([&] {
      fast = row ? lcm_binom_row_identity(size) : lcm_range_factored(size);
    });
    ordered_json output = {{"identity_seconds", fast_s}};
    bool ok = true;
    if (size <= cutoff) {
      Natural slow;
      const double slow_s = time_best([&] {
        slow = row ? lcm_binom_row_direct(size) : lcm_range_direct(size);
      });
      ok = factored_value(fast) == slow;
      output["direct_seconds"] = slow_s;
      output["speedup"] = fast_s > 0.0 ? slow_s / fast_s : 0.0;
      output["match"] = ok;
    } else {
      output["direct_seconds"] = nullptr;
      output["speedup"] = nullptr;
      output["match"] = nullptr;
    }
    emitter.emit("bench", {{"subject", a.subject}, {"size", std::to_string(size)}}, output, ok);
  }
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact lcm identities for binomial rows, p-adic valuations and bound checks",
               "binlcm"};
  app.require_subcommand(1);
  app.fallthrough();
  Args a;
  app.add_flag("--json", a.json, "Emit one JSON record per result line");
  app.add_flag("--quiet", a.quiet, "Print the summary only");

  auto* vp_cmd = app.add_subcommand("vp", "p-adic valuation of n");
  vp_cmd->add_option("n", a.n)->required();
  vp_cmd->add_option("p", a.p)->required();

  auto* vpb = app.add_subcommand("vp-binom", "p-adic valuation of C(n, k)");
  vpb->add_option("n", a.n)->required();
  vpb->add_option("k", a.k)->required();
  vpb->add_option("p", a.p)->required();
  vpb->add_option("--method", a.method)
      ->check(CLI::IsMember({"kummer", "legendre", "direct"}));

  auto* digits = app.add_subcommand("digits", "base-p digits of k, least significant first");
  digits->add_option("k", a.k)->required();
  digits->add_option("p", a.p)->required();

  auto* rowmax = app.add_subcommand("row-max", "maximum v_p over the binomial row of k");
  rowmax->add_option("k", a.k)->required();
  rowmax->add_option("p", a.p)->required();
  rowmax->add_flag("--oracle", a.oracle, "Also scan the row and compare");

  auto* range = app.add_subcommand("lcm-range", "lcm(1..n)");
  range->add_option("n", a.n)->required();
  range->add_flag("--value", a.value, "Print the exact decimal value");
  range->add_flag("--factored", a.factored, "Print prime-exponent pairs");

  auto* rowlcm = app.add_subcommand("lcm-binom-row", "lcm of C(k,0), ..., C(k,k)");
  rowlcm->add_option("k", a.k)->required();
  rowlcm->add_option("--method", a.row_method)->check(CLI::IsMember({"identity", "direct"}));
  rowlcm->add_flag("--value", a.value, "Print the exact decimal value");
  rowlcm->add_flag("--factored", a.factored, "Print prime-exponent pairs");

  auto* verify = app.add_subcommand("verify", "Sweep a check over a range of inputs");
  verify->add_option("check", a.check)
      ->required()
      ->check(CLI::IsMember(
          {"theorem1", "prop1", "eq3", "eq4", "eq5", "lower-bound", "proof-chain", "hanson"}));
  verify->add_option("--from", a.from)->required();
  verify->add_option("--to", a.to)->required();
  verify->add_option("--jobs", a.jobs, "Worker threads (default: all cores)");
  verify->add_option("--max-prime", a.max_prime, "Prime bound for prop1, eq4, eq5");

  auto* psi = app.add_subcommand("psi-ratio", "ln lcm(1..n) / n");
  psi->add_option("n", a.n)->required();

  auto* bench = app.add_subcommand("bench", "Time the identity path against the direct fold");
  bench->add_option("subject", a.subject)->required();
  bench->add_option("--sizes", a.sizes)->required();
  bench->add_option("--cutoff", a.cutoff, "Largest size also run through the direct path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  Emitter emitter(out, a.json);
  try {
    if (vp_cmd->parsed()) {
      const std::uint64_t n = parse_positive(a.n, "n");
      const std::uint64_t p = parse_prime(a.p, "p");
      emitter.emit("vp", {{"n", a.n}, {"p", a.p}}, std::to_string(vp(n, p).exponent), true);
    } else if (vpb->parsed()) {
      const std::uint64_t n = parse_u64(a.n, "n");
      const std::uint64_t k = parse_u64(a.k, "k");
      const std::uint64_t p = parse_prime(a.p, "p");
      if (k > n) throw UsageError("parameter k: must not exceed n");
      Valuation v;
      if (a.method == "kummer") {
        v = vp_binomial_kummer(n, k, p);
      } else if (a.method == "legendre") {
        v = vp_binomial_legendre(n, k, p);
      } else {
        v = vp(binomial(n, k), p);
      }
      emitter.emit("vp-binom", {{"n", a.n}, {"k", a.k}, {"p", a.p}, {"method", a.method}},
                   std::to_string(v.exponent), true);
    } else if (digits->parsed()) {
      const std::uint64_t k = parse_u64(a.k, "k");
      const std::uint64_t p = parse_prime(a.p, "p");
      const BaseExpansion e = expand(k, p);
      ordered_json output = {{"digits", e.digits}};
      output["N"] = k == 0 ? ordered_json(nullptr) : ordered_json(e.top_index());
      emitter.emit("digits", {{"k", a.k}, {"p", a.p}}, output, true);
    } else if (rowmax->parsed()) {
      const std::uint64_t k = parse_u64(a.k, "k");
      const std::uint64_t p = parse_prime(a.p, "p");
      const RowMaxResult r = row_max_vp(k, p);
      ordered_json output = {
          {"max_valuation", std::to_string(r.max_valuation.exponent)},
          {"attained_at", r.attained_at ? ordered_json(std::to_string(*r.attained_at))
                                        : ordered_json(nullptr)}};
      bool ok = true;
      if (a.oracle) {
        const Valuation scanned = row_max_vp_bruteforce(k, p);
        output["oracle"] = std::to_string(scanned.exponent);
        ok = scanned == r.max_valuation;
      }
      emitter.emit("row-max", {{"k", a.k}, {"p", a.p}}, output, ok);
    } else if (range->parsed()) {
      const std::uint64_t n = parse_positive(a.n, "n");
      const bool as_value = a.value || (!a.factored && n <= kDefaultCutoff);
      emit_big(emitter, "lcm-range", {{"n", a.n}}, lcm_range_factored(n), as_value);
    } else if (rowlcm->parsed()) {
      const std::uint64_t k = parse_u64(a.k, "k");
      const std::string& method = a.row_method;
      const ordered_json input = {{"k", a.k}, {"method", method}};
      if (method == "direct") {
        emitter.emit("lcm-binom-row", input, lcm_binom_row_direct(k).to_decimal(), true);
      } else {
        const bool as_value = a.value || (!a.factored && k <= kDefaultCutoff);
        emit_big(emitter, "lcm-binom-row", input, lcm_binom_row_identity(k), as_value);
      }
    } else if (verify->parsed()) {
      run_verify(a, emitter);
    } else if (psi->parsed()) {
      const std::uint64_t n = parse_positive(a.n, "n");
      emitter.emit("psi-ratio", {{"n", a.n}}, psi_ratio(n), true);
    } else if (bench->parsed()) {
      run_bench(a, emitter);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return emitter.all_ok() ? kSuccess : kCheckFailed;
}

}  // namespace binlcm::cli
