#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "pvanish/cli.hpp"

using namespace pvanish;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("argument helpers") {
  CHECK(cli::parse_range("3..9") == std::pair<Part, Part>{3, 9});
  CHECK(cli::parse_range("7") == std::pair<Part, Part>{7, 7});
  CHECK_THROWS_AS(cli::parse_range("9..3"), std::invalid_argument);
  CHECK_THROWS_AS(cli::parse_range("x"), std::invalid_argument);
  CHECK(cli::parse_prime_list("2,3,5") == std::vector<Part>{2, 3, 5});
  CHECK_THROWS_AS(cli::parse_prime_list("2,4"), std::invalid_argument);
  const auto q = cli::parse_partition_list("(1);(0)");
  REQUIRE(q.size() == 2);
  CHECK(q[0] == Partition(std::vector<Part>{1}));
  CHECK(q[1].empty());
  CHECK(cli::parse_partition_list("[[1],[]]") == q);
}

TEST_CASE("character and degree") {
  auto r = run({"char", "--alpha", "3,3,2", "--beta", "4,2,1,1"});
  CHECK(r.code == 0);
  CHECK(r.out == "-2\n");
  r = run({"degree", "--alpha", "(3,3,2)", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["degree"] == 42);
  r = run({"degree", "--alpha", "(9,8,7,6,5,4,3,2,1)", "--format", "json"});
  CHECK(json::parse(r.out)["degree"].is_string());
}

TEST_CASE("decompose, compose, core, quotient") {
  auto r = run({"decompose", "--alpha", "4,2,1,1", "--r", "2", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto d = json::parse(r.out);
  CHECK(d["weight"] == 4);
  CHECK(d["core"] == json::array());
  const auto back = run({"compose", "--core", "(0)", "--quotient", d["quotient"].dump(), "--r", "2"});
  CHECK(back.code == 0);
  CHECK(back.out == "(4,2,1,1)\n");
  CHECK(run({"core", "--alpha", "4,2,1", "--r", "3"}).out == "(1)\n");
  CHECK(run({"quotient", "--alpha", "(2,1)", "--r", "2"}).out == "((0),(0))\n");
  CHECK(run({"compose", "--core", "(1)", "--quotient", "(1);(0)", "--r", "2"}).code == 0);
  CHECK(run({"compose", "--core", "(2)", "--quotient", "(0);(0)", "--r", "2"}).code == 2);
}

TEST_CASE("padic") {
  const auto r = run({"padic", "--n", "12", "--p", "2", "--alpha", "8,4", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["digits"] == std::vector<int>{0, 0, 1, 1});
  CHECK(j["lambda"] == std::vector<int>{8, 4});
  CHECK(j["alpha"]["p_adic_type"] == true);
  CHECK(j["alpha"]["p_singular"]["hooks"] == false);
  CHECK(run({"padic", "--n", "12", "--p", "4"}).code == 2);
}

TEST_CASE("vanishing") {
  auto r = run({"vanishing", "--p", "2", "--n", "12", "--format", "json"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["vanishing"].size() == 2);

  r = run({"vanishing", "--p", "3", "--n", "0..8", "--format", "json"});
  REQUIRE(r.code == 0);
  j = json::parse(r.out);
  std::size_t total = 0;
  for (const auto& rep : j["reports"]) total += rep["vanishing"].size();
  CHECK(total == 24);

  r = run({"vanishing", "--p", "2", "--n", "0..14", "--audit", "--workers", "2", "--cache", "per-worker"});
  CHECK(r.code == 0);
  CHECK(r.out.find("audit multiples_above_pt") != std::string::npos);

  r = run({"vanishing", "--p", "5", "--n", "10..12", "--check-conjecture"});
  CHECK(r.code == 0);
  CHECK(r.out.find("no counterexample found") != std::string::npos);

  // text and JSON carry the same classes
  const auto text = run({"vanishing", "--p", "3", "--n", "8"}).out;
  j = json::parse(run({"vanishing", "--p", "3", "--n", "8", "--format", "json"}).out);
  for (const auto& e : j["vanishing"]) {
    std::string s = "(";
    for (std::size_t i = 0; i < e["parts"].size(); ++i) s += (i ? "," : "") + e["parts"][i].dump();
    CHECK(text.find(s + ")") != std::string::npos);
  }
}

TEST_CASE("verify") {
  auto r = run({"verify", "--suite", "table"});
  CHECK(r.code == 0);
  CHECK(r.out.find("PASS table") != std::string::npos);
  r = run({"verify", "--suite", "theorem-1-6", "--p", "2", "--max-n", "10", "--format", "json"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out)["passed"] == true);
  CHECK(run({"verify", "--suite", "structural", "--p", "3", "--max-n", "9"}).code == 0);
  CHECK(run({"verify", "--suite", "adic-type", "--p", "7", "--max-n", "9"}).code == 0);
  r = run({"verify", "--suite", "conjectures", "--p", "5", "--max-n", "12"});
  CHECK(r.code == 0);
  CHECK(r.out.find("no counterexample found") != std::string::npos);
  CHECK(run({"verify", "--suite", "factorization", "--max-n", "6"}).code == 0);
  CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"char", "--alpha", "3"}).code == 2);
  CHECK(run({"char", "--alpha", "3", "--beta", "2"}).code == 2);
  CHECK(run({"char", "--alpha", "3", "--beta", "3", "--format", "xml"}).code == 2);
  CHECK(run({"vanishing", "--p", "2", "--n", "30"}).code == 2);
  CHECK(run({"vanishing", "--p", "2", "--n", "3", "--check-conjecture"}).code == 2);
  const auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("vanishing") != std::string::npos);
}

}
