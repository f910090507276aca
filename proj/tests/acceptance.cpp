// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"
#include "pvanish/characters.hpp"
#include "pvanish/cli.hpp"
#include "pvanish/verify.hpp"

using namespace pvanish;

namespace {

Partition P(std::initializer_list<Part> parts) { return Partition(std::vector<Part>(parts)); }

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) detail = what;
    ok = ok && cond;
  }
  void absorb(const SuiteResult& r) {
    require(r.passed(), r.name + " [" + r.scope + "]: " + (r.witnesses.empty() ? "" : r.witnesses.front()));
    if (!ok) return;
    if (!detail.empty()) detail += "; ";
    detail += r.name + " [" + r.scope + "] checked=" + std::to_string(r.checked);
  }
};

// Runs the command line and returns the vanishing entries of every report as
// (partition, p-adic flag).
std::set<std::pair<Partition, bool>> cli_table(Part p, const std::string& range) {
  std::ostringstream out, err;
  const int code = cli::run({"vanishing", "--p", std::to_string(p), "--n", range, "--format", "json"}, out, err);
  if (code != 0) throw std::runtime_error("vanishing command exited with " + std::to_string(code));
  std::set<std::pair<Partition, bool>> entries;
  const auto doc = nlohmann::json::parse(out.str());
  for (const auto& rep : doc["reports"])
    for (const auto& e : rep["vanishing"])
      entries.insert({Partition(e["parts"].get<std::vector<Part>>()), e["p_adic_type"].get<bool>()});
  return entries;
}

Outcome table_reproduction() {
  Outcome o;
  // printed tables; the bool is false for the bold (not p-adic type) entries
  const std::set<std::pair<Partition, bool>> two{
      {P({}), true},      {P({1}), true},       {P({2}), true},    {P({1, 1}), false},
      {P({2, 1}), true},  {P({4}), true},       {P({2, 1, 1}), false}, {P({4, 1}), true},
      {P({4, 2}), true},  {P({4, 1, 1}), false}, {P({4, 2, 1}), true}};
  const std::set<std::pair<Partition, bool>> three{
      {P({}), true},           {P({1}), true},          {P({2}), true},          {P({1, 1}), true},
      {P({3}), true},          {P({2, 1}), false},      {P({1, 1, 1}), false},   {P({3, 1}), true},
      {P({3, 2}), true},       {P({3, 1, 1}), true},    {P({4, 1}), false},      {P({2, 1, 1, 1}), false},
      {P({6}), true},          {P({3, 3}), true},       {P({3, 2, 1}), false},   {P({3, 1, 1, 1}), false},
      {P({6, 1}), true},       {P({3, 3, 1}), true},    {P({6, 2}), true},       {P({6, 1, 1}), true},
      {P({3, 3, 2}), true},    {P({3, 3, 1, 1}), true}, {P({4, 3, 1}), false},   {P({3, 2, 1, 1, 1}), false}};
  const auto got2 = cli_table(2, "0..7");
  const auto got3 = cli_table(3, "0..8");
  const auto differences = [](const auto& got, const auto& want) {
    std::string out;
    for (const auto& e : got)
      if (!want.count(e)) out += " extra " + e.first.to_string() + (e.second ? "" : "*");
    for (const auto& e : want)
      if (!got.count(e)) out += " missing " + e.first.to_string() + (e.second ? "" : "*");
    return out;
  };
  o.require(got2 == two, "p=2 table differs:" + differences(got2, two));
  o.require(got3 == three, "p=3 table differs:" + differences(got3, three));
  o.detail = o.ok ? "p=2: " + std::to_string(got2.size()) + " entries, p=3: " + std::to_string(got3.size()) + " entries"
                  : o.detail;
  return o;
}

Outcome singular_equivalence() {
  Outcome o;
  o.absorb(verify_singularity_equivalence({2, 3, 5}, 20));
  return o;
}

Outcome adic_type_vanishes() {
  Outcome o;
  for (Part p : {2, 3, 5, 7}) o.absorb(verify_adic_type_vanishes(p, 18, SweepConfig{18, 1, CacheMode::shared}));
  return o;
}

Outcome structural_agreement() {
  Outcome o;
  o.absorb(verify_structural_classifier(2, 16, SweepConfig{16, 1, CacheMode::shared}));
  o.absorb(verify_structural_classifier(3, 15, SweepConfig{15, 1, CacheMode::shared}));
  return o;
}

Outcome factorization() {
  Outcome o;
  o.absorb(verify_factorization(12, {2, 3, 4, 5}));
  return o;
}

Outcome table_oracles() {
  Outcome o;
  o.absorb(verify_orthogonality(10));
  std::size_t checked = 0;
  for (Part n = 0; n <= 14; ++n)
    for_each_partition(n, [&](const Partition& a) {
      ++checked;
      o.require(degree(a) == mn_value(a, Partition::rectangle(1, n)), "degree mismatch at " + a.to_string());
    });
  for (Part n = 0; n <= 12; ++n) {
    const auto all = enumerate_partitions(n);
    for (const auto& a : all) {
      const Partition ac = conjugate(a);
      for (const auto& b : all) {
        ++checked;
        const int sign = (n - Part(b.length())) % 2 ? -1 : 1;
        o.require(mn_value(ac, b) == sign * mn_value(a, b),
                  "conjugation twist fails at " + a.to_string() + ", " + b.to_string());
      }
    }
  }
  if (o.ok) o.detail += "; degree and twist checks=" + std::to_string(checked);
  return o;
}

Outcome multi_partition() {
  Outcome o;
  std::size_t checked = 0;
  std::function<void(Part, std::vector<Partition>&, std::size_t)> rec = [&](Part left, std::vector<Partition>& cur,
                                                                              std::size_t count) {
    if (cur.size() == count) {
      if (left != 0) return;
      Part total = 0;
      std::vector<oracle::Shape> shapes;
      for (const auto& b : cur) {
        total += b.size();
        shapes.push_back(oracle::shape(b));
      }
      std::vector<Partition> reversed(cur.rbegin(), cur.rend());
      for (const auto& lam : enumerate_partitions(total)) {
        ++checked;
        const Integer v = multi_char_value(cur, lam);
        o.require(v == multi_char_value(cur, lam, PartOrder::smallest_first), "order dependence");
        o.require(v == multi_char_value(reversed, lam), "component order dependence");
        o.require(v == oracle::induced(shapes, oracle::shape(lam)), "induced character differs");
      }
      return;
    }
    for (Part m = 0; m <= left; ++m)
      for (const auto& b : enumerate_partitions(m)) {
        cur.push_back(b);
        rec(left - m, cur, count);
        cur.pop_back();
      }
  };
  for (std::size_t count = 1; count <= 3; ++count)
    for (Part total = 0; total <= 8; ++total) {
      std::vector<Partition> cur;
      rec(total, cur, count);
    }
  if (o.ok) o.detail = "instances=" + std::to_string(checked);
  return o;
}

Outcome structure_audits() {
  Outcome o;
  for (Part p : {2, 3}) o.absorb(verify_structure_audits(p, 14, SweepConfig{14, 1, CacheMode::shared}));
  return o;
}

Outcome conjecture_sweeps() {
  Outcome o;
  o.absorb(verify_conjectures(5, 18, SweepConfig{18, 1, CacheMode::shared}));
  o.absorb(verify_conjectures(7, 16, SweepConfig{16, 1, CacheMode::shared}));
  // vanishing set equals the p-adic-type set, stated directly
  for (auto [p, max_n] : {std::pair<Part, Part>{5, 18}, {7, 16}}) {
    VanishingOracle v(p, SweepConfig{max_n, 1, CacheMode::shared});
    for (Part n = 0; n <= max_n; ++n) {
      std::set<Partition> adic;
      for_each_partition(n, [&](const Partition& b) {
        if (is_p_adic_type(b, PAdicContext(n, p))) adic.insert(b);
      });
      const auto& van = v.vanishing_set(n);
      o.require(std::set<Partition>(van.begin(), van.end()) == adic,
                "p=" + std::to_string(p) + " n=" + std::to_string(n) + " vanishing set differs from p-adic type");
    }
  }
  if (o.ok) o.detail += "; no counterexample found";
  return o;
}

Outcome regression_vectors() {
  Outcome o;
  o.require(mn_value(P({3, 3, 2}), P({4, 2, 1, 1})) == -2, "chi^(3,3,2) at (4,2,1,1)");
  o.require(degree(P({3, 3, 2})) == 42, "deg (3,3,2)");
  for (Part x = 2; x <= 8; ++x)
    for (const auto& b : enumerate_partitions(x))
      o.require(mn_value(P({x - 1, 1}), b) == Integer(Part(b.multiplicity(1)) - 1),
                "chi^(x-1,1) at " + b.to_string());
  std::size_t grid = 0;
  for (Part p : {2, 3, 5})
    for (Part n = 2; n <= 24; ++n) {
      const PAdicContext ctx(n, p);
      for (std::size_t t = 1; t <= ctx.k(); ++t) {
        if (ctx.d(t) == 0 || ctx.e(t) == 0) continue;
        for (Part c = 1; c <= n; ++c) {
          if (ctx.e(t) > n - c || n - c >= ctx.power(t)) continue;
          std::vector<Part> parts{c};
          parts.insert(parts.end(), std::size_t(n - c), 1);
          const Partition a(parts);
          ++grid;
          o.require(is_p_singular(a, ctx, SingularityMethod::hooks) && is_p_singular(a, ctx, SingularityMethod::degree),
                    "hook-plus-column family not singular at " + a.to_string());
        }
      }
    }
  if (o.ok) o.detail = "hook-plus-column grid=" + std::to_string(grid);
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;
    Outcome (*run)();
  };
  const Criterion criteria[] = {
      {1, "base-case table reproduction", 5, table_reproduction},
      {2, "four singularity tests agree (p=2,3,5; n<=20)", 120, singular_equivalence},
      {3, "p-adic-type classes vanish (p=2,3,5,7; n<=18)", 300, adic_type_vanishes},
      {4, "structural classifier = brute force (p=2 n<=16; p=3 n<=15)", 600, structural_agreement},
      {5, "core/quotient factorization (n<=12; r=2..5)", 300, factorization},
      {6, "character-table oracles", 300, table_oracles},
      {7, "multi-partition characters (total size <= 8)", 300, multi_partition},
      {8, "structure audits (p=2,3; n<=14)", 300, structure_audits},
      {9, "conjecture sweeps (p=5 n<=18; p=7 n<=16)", 900, conjecture_sweeps},
      {10, "regression vectors", 60, regression_vectors},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      o.ok = false;
      o.detail += "; over time budget";
    }
    all = all && o.ok;
    std::printf("%s criterion %d: %s (%.2fs) %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
