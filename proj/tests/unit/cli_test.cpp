#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli/cli.hpp"

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;

  std::vector<nlohmann::json> records() const {
    std::vector<nlohmann::json> rs;
    std::istringstream lines(out);
    for (std::string line; std::getline(lines, line);) {
      rs.push_back(nlohmann::json::parse(line));
    }
    return rs;
  }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int status = binlcm::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("vp-binom methods agree") {
  for (const char* method : {"kummer", "legendre", "direct"}) {
    const Result r = run({"vp-binom", "5", "2", "2", "--method", method});
    CHECK(r.status == 0);
    CHECK(r.out == "1\n");
  }
  CHECK(run({"vp-binom", "10", "4", "3"}).out == "1\n");
}

TEST_CASE("lcm-binom-row") {
  Result r = run({"lcm-binom-row", "5", "--method", "identity", "--value"});
  CHECK(r.status == 0);
  CHECK(r.out == "10\n");
  CHECK(run({"lcm-binom-row", "6", "--method", "direct"}).out == "60\n");
  CHECK(run({"lcm-binom-row", "7", "--factored"}).out == "3 * 5 * 7\n");
  CHECK(run({"lcm-binom-row", "0", "--factored"}).out == "1\n");
  r = run({"lcm-binom-row", "7", "--factored", "--json"});
  const auto records = r.records();
  REQUIRE(records.size() == 1);
  CHECK(records[0]["output"] == nlohmann::json::parse("[[3,1],[5,1],[7,1]]"));
  CHECK(records[0]["input"]["k"] == "7");
}

TEST_CASE("lcm-range chooses factored output above the cutoff") {
  CHECK(run({"lcm-range", "10"}).out == "2520\n");
  CHECK(run({"lcm-range", "10", "--factored"}).out == "2^3 * 3^2 * 5 * 7\n");
  const Result big = run({"lcm-range", "6000", "--json"});
  CHECK(big.records().at(0)["output"].is_array());
  const Result forced = run({"lcm-range", "6000", "--value", "--json"});
  CHECK(forced.records().at(0)["output"].is_string());
}

TEST_CASE("digits, vp, row-max, psi-ratio") {
  CHECK(run({"digits", "5", "2"}).out == "k=5 p=2 digits=[1,0,1] N=2\n");
  CHECK(run({"digits", "0", "2"}).out == "k=0 p=2 digits=[] N=none\n");
  CHECK(run({"vp", "12", "2"}).out == "2\n");
  const Result rm = run({"row-max", "5", "2", "--oracle"});
  CHECK(rm.status == 0);
  CHECK(rm.out == "k=5 p=2 max_valuation=1 attained_at=3 oracle=1\n");
  const Result psi = run({"psi-ratio", "10", "--json"});
  CHECK(psi.records().at(0)["output"].get<double>() == doctest::Approx(0.7832).epsilon(1e-4));
}

TEST_CASE("verify") {
  Result r = run({"verify", "theorem1", "--from", "0", "--to", "200"});
  CHECK(r.status == 0);
  CHECK(r.out.find("total=201 failures=0 first_failure=none") != std::string::npos);
  r = run({"verify", "proof-chain", "--from", "1", "--to", "50", "--jobs", "3", "--json"});
  CHECK(r.status == 0);
  const auto records = r.records();
  REQUIRE(records.size() == 1);
  CHECK(records[0]["op"] == "verify");
  CHECK(records[0]["output"]["failures"] == "0");
  CHECK(records[0]["ok"] == true);
  CHECK(run({"verify", "prop1", "--from", "0", "--to", "20", "--max-prime", "13"}).status == 0);
}

TEST_CASE("bench") {
  Result r = run({"bench", "row-lcm", "--sizes", "100", "--json"});
  CHECK(r.status == 0);
  auto records = r.records();
  REQUIRE(records.size() == 1);
  CHECK(records[0]["output"]["match"] == true);
  CHECK(records[0]["output"]["direct_seconds"].is_number());

  r = run({"bench", "row-lcm", "--sizes", "100,200", "--cutoff", "150", "--json"});
  records = r.records();
  REQUIRE(records.size() == 2);
  CHECK(records[0]["output"]["match"] == true);
  CHECK(records[1]["output"]["direct_seconds"].is_null());

  r = run({"bench", "range-lcm", "--sizes", "1000"});
  CHECK(r.status == 0);
  CHECK(r.out.find("match=true") != std::string::npos);
}

TEST_CASE("every JSON line round-trips and matches human output") {
  const std::vector<std::vector<std::string>> invocations = {
      {"vp", "12", "2"},
      {"vp-binom", "10", "4", "3", "--method", "legendre"},
      {"digits", "100", "3"},
      {"row-max", "4", "2"},
      {"lcm-range", "30"},
      {"lcm-range", "30", "--factored"},
      {"lcm-binom-row", "20"},
      {"psi-ratio", "1000"},
  };
  for (auto args : invocations) {
    const Result human = run(args);
    args.push_back("--json");
    const Result machine = run(args);
    REQUIRE(human.status == 0);
    REQUIRE(machine.status == 0);
    const auto records = machine.records();
    REQUIRE(records.size() == 1);
    for (const char* key : {"op", "input", "output", "ok"}) {
      CHECK(records[0].contains(key));
    }
    // Every number in the record must appear verbatim in the human line.
    const auto& output = records[0]["output"];
    if (output.is_string()) {
      CHECK(human.out == output.get<std::string>() + "\n");
    } else if (output.is_number()) {
      CHECK(human.out == output.dump() + "\n");
    } else if (output.is_object()) {
      for (const auto& [key, value] : output.items()) {
        const std::string text = value.is_string() ? value.get<std::string>() : value.dump();
        CHECK(human.out.find(key + "=" + text) != std::string::npos);
      }
    } else {
      for (const auto& pair : output) {
        CHECK(human.out.find(pair[0].dump()) != std::string::npos);
      }
    }
  }
}

TEST_CASE("exit status 2 on usage and domain errors") {
  Result r = run({"vp", "12", "4"});
  CHECK(r.status == 2);
  CHECK(r.err.find("parameter p") != std::string::npos);
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"vp", "0", "2"}).status == 2);
  CHECK(run({"vp", "-3", "2"}).status == 2);
  CHECK(run({"vp", "12x", "2"}).status == 2);
  CHECK(run({"vp-binom", "3", "4", "2"}).status == 2);
  CHECK(run({"verify", "theorem2", "--from", "0", "--to", "1"}).status == 2);
  CHECK(run({"verify", "hanson", "--from", "0", "--to", "1"}).status == 2);
  CHECK(run({"verify", "theorem1", "--from", "5", "--to", "1"}).status == 2);
  CHECK(run({"bench", "row-lcm", "--sizes", ""}).status == 2);
  CHECK(run({"bench", "row-lcm", "--sizes", "10,,20"}).status == 2);
  CHECK(run({"bench", "heap", "--sizes", "10"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}
