#include "pvanish/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "pvanish/characters.hpp"
#include "pvanish/padic.hpp"
#include "pvanish/verify.hpp"

namespace pvanish::cli {

std::pair<Part, Part> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const Part v = std::stoll(text);
      if (v < 0) throw std::invalid_argument("negative");
      return {v, v};
    }
    const Part lo = std::stoll(text.substr(0, dots));
    const Part hi = std::stoll(text.substr(dots + 2));
    if (lo < 0 || hi < lo) throw std::invalid_argument("bad bounds");
    return {lo, hi};
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid range '" + text + "' (expected N or A..B)");
  }
}

std::vector<Part> parse_prime_list(const std::string& text) {
  std::vector<Part> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    Part p = 0;
    try {
      p = std::stoll(token);
    } catch (const std::exception&) {
      throw std::invalid_argument("invalid prime '" + token + "'");
    }
    if (!is_prime(p)) throw std::invalid_argument(token + " is not prime");
    out.push_back(p);
  }
  if (out.empty()) throw std::invalid_argument("empty prime list");
  return out;
}

std::vector<Partition> parse_partition_list(const std::string& text) {
  std::vector<Partition> out;
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '[') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(std::string("invalid JSON partition list: ") + e.what());
    }
    if (!j.is_array()) throw std::invalid_argument("expected a JSON array of partitions");
    for (const auto& item : j) {
      if (!item.is_array()) throw std::invalid_argument("expected a JSON array of partitions");
      std::vector<Part> parts;
      for (const auto& x : item) {
        if (!x.is_number_integer()) throw std::invalid_argument("partition parts must be integers");
        parts.push_back(x.get<Part>());
      }
      out.push_back(Partition::from_unsorted(std::move(parts)));
    }
    return out;
  }
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ';')) out.push_back(parse_partition(token));
  return out;
}

namespace {

using nlohmann::json;

json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

json partitions_json(const std::vector<Partition>& ps) {
  json out = json::array();
  for (const auto& p : ps) out.push_back(p.parts());
  return out;
}

std::string partitions_text(const std::vector<Partition>& ps) {
  std::string out = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ',';
    out += ps[i].to_string();
  }
  return out + ")";
}

std::size_t default_workers() {
  if (const char* env = std::getenv(kWorkersEnv)) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

struct Options {
  std::string format = "text";
  std::string alpha;
  std::string beta;
  std::string core;
  std::string quotient;
  Part r = 1;
  Part n = 0;
  Part p = 2;
  std::string n_range;
  std::string primes = "2,3,5";
  std::string suite = "all";
  Part max_n = -1;
  std::size_t workers = 1;
  std::string cache = "shared";
  bool check_conjecture = false;
  bool audit = false;
};

class Runner {
 public:
  explicit Runner(std::ostream& out) : out_(out) {}

  bool as_json() const { return opt.format == "json"; }

  SweepConfig sweep(Part bound) const {
    return SweepConfig{bound, opt.workers, opt.cache == "per-worker" ? CacheMode::per_worker : CacheMode::shared};
  }

  int cmd_char() {
    const Partition alpha = parse_partition(opt.alpha);
    const Partition beta = parse_partition(opt.beta);
    const Integer v = mn_value(alpha, beta);
    if (as_json())
      out_ << json::object({{"schema_version", 1}, {"alpha", alpha.parts()}, {"beta", beta.parts()},
                            {"value", integer_json(v)}})
           << '\n';
    else
      out_ << v.str() << '\n';
    return kExitOk;
  }

  int cmd_degree() {
    const Partition alpha = parse_partition(opt.alpha);
    const Integer d = degree(alpha);
    if (as_json())
      out_ << json::object({{"schema_version", 1}, {"alpha", alpha.parts()}, {"degree", integer_json(d)}}) << '\n';
    else
      out_ << d.str() << '\n';
    return kExitOk;
  }

  int cmd_decompose() {
    const Partition alpha = parse_partition(opt.alpha);
    const RDecomposition dec = r_decompose(alpha, opt.r);
    if (as_json()) {
      out_ << json::object({{"schema_version", 1},
                            {"alpha", alpha.parts()},
                            {"r", dec.r},
                            {"core", dec.core.parts()},
                            {"quotient", partitions_json(dec.quotient)},
                            {"weight", dec.weight},
                            {"sign", dec.sign}})
           << '\n';
    } else {
      out_ << "core: " << dec.core << '\n'
           << "quotient: " << partitions_text(dec.quotient) << '\n'
           << "weight: " << dec.weight << '\n'
           << "sign: " << dec.sign << '\n';
    }
    return kExitOk;
  }

  int cmd_compose() {
    const Partition core = parse_partition(opt.core);
    const auto quotient = parse_partition_list(opt.quotient);
    const Partition alpha = from_core_and_quotient(core, quotient, opt.r);
    if (as_json())
      out_ << json::object({{"schema_version", 1}, {"partition", alpha.parts()}}) << '\n';
    else
      out_ << alpha << '\n';
    return kExitOk;
  }

  int cmd_core() {
    const Partition alpha = parse_partition(opt.alpha);
    const Partition core = r_core(alpha, opt.r);
    if (as_json())
      out_ << json::object({{"schema_version", 1}, {"core", core.parts()}}) << '\n';
    else
      out_ << core << '\n';
    return kExitOk;
  }

  int cmd_quotient() {
    const Partition alpha = parse_partition(opt.alpha);
    const RDecomposition dec = r_decompose(alpha, opt.r);
    if (as_json())
      out_ << json::object({{"schema_version", 1}, {"quotient", partitions_json(dec.quotient)}}) << '\n';
    else
      out_ << partitions_text(dec.quotient) << '\n';
    return kExitOk;
  }

  int cmd_padic() {
    const PAdicContext ctx(opt.n, opt.p);
    json j{{"schema_version", 1}, {"n", ctx.n()}, {"p", ctx.p()}, {"digits", ctx.digits()},
           {"lambda", lambda_np(ctx).parts()}};
    json splits = json::array();
    for (std::size_t t = 0; t <= ctx.k() + 1; ++t) splits.push_back({{"t", t}, {"d", ctx.d(t)}, {"e", ctx.e(t)}});
    j["splits"] = splits;
    if (!opt.alpha.empty()) {
      const Partition alpha = parse_partition(opt.alpha);
      const auto adic = p_adic_type(alpha, ctx);
      json b = json::array();
      for (std::size_t i = 0; i <= ctx.k() + 1; ++i) b.push_back(b_invariant(alpha, ctx.p(), i));
      j["alpha"] = {{"parts", alpha.parts()},
                    {"p_adic_type", adic.is_p_adic_type},
                    {"groups", adic.witness.groups},
                    {"b_invariants", b},
                    {"p_singular",
                     {{"hooks", is_p_singular(alpha, ctx, SingularityMethod::hooks)},
                      {"character", is_p_singular(alpha, ctx, SingularityMethod::character)},
                      {"b_invariants", is_p_singular(alpha, ctx, SingularityMethod::b_invariants)},
                      {"degree", is_p_singular(alpha, ctx, SingularityMethod::degree)}}}};
    }
    if (as_json()) {
      out_ << j << '\n';
      return kExitOk;
    }
    out_ << "n=" << ctx.n() << " p=" << ctx.p() << '\n' << "digits a_0..a_k:";
    for (Part a : ctx.digits()) out_ << ' ' << a;
    out_ << '\n' << "lambda: " << lambda_np(ctx) << '\n';
    for (const auto& s : j["splits"]) out_ << "t=" << s["t"] << " d=" << s["d"] << " e=" << s["e"] << '\n';
    if (j.contains("alpha")) {
      const auto& a = j["alpha"];
      out_ << "alpha: " << parse_partition(opt.alpha) << '\n'
           << "p-adic type: " << (a["p_adic_type"].get<bool>() ? "yes" : "no") << '\n'
           << "b-invariants:";
      for (const auto& b : a["b_invariants"]) out_ << ' ' << b;
      out_ << '\n' << "p-singular (hooks/character/b/degree):";
      for (const char* m : {"hooks", "character", "b_invariants", "degree"})
        out_ << ' ' << (a["p_singular"][m].get<bool>() ? "yes" : "no");
      out_ << '\n';
    }
    return kExitOk;
  }

  int cmd_vanishing() {
    const auto [lo, hi] = parse_range(opt.n_range);
    const Part bound = opt.max_n >= 0 ? opt.max_n : 16;
    if (hi > bound)
      throw BoundExceeded("n = " + std::to_string(hi) + " exceeds the sweep bound " + std::to_string(bound) +
                          " (raise it with --max-n)");
    if (opt.check_conjecture && opt.p < 5) throw std::invalid_argument("--check-conjecture requires p >= 5");
    VanishingOracle oracle(opt.p, sweep(bound));
    std::vector<VanishReport> reports;
    bool clean = true;
    for (Part n = lo; n <= hi; ++n) {
      reports.push_back(
          list_p_vanishing(PAdicContext(n, opt.p), oracle, ReportOptions{opt.audit, opt.check_conjecture}));
      clean = clean && reports.back().audit.clean();
    }
    if (as_json()) {
      if (reports.size() == 1) {
        out_ << reports.front().to_json() << '\n';
      } else {
        json all = json::array();
        for (const auto& r : reports) all.push_back(json::parse(r.to_json()));
        out_ << json::object({{"schema_version", 1}, {"reports", all}}) << '\n';
      }
    } else {
      for (const auto& r : reports) out_ << r.to_text();
      if (opt.check_conjecture) out_ << (clean ? "no counterexample found\n" : "counterexample found\n");
    }
    return clean ? kExitOk : kExitViolation;
  }

  int cmd_verify() {
    const auto primes = parse_prime_list(opt.primes);
    std::vector<SuiteResult> results;
    const auto wants = [&](std::initializer_list<const char*> names) {
      if (opt.suite == "all") return true;
      return std::any_of(names.begin(), names.end(), [&](const char* s) { return opt.suite == s; });
    };
    const auto max_n_or = [&](Part fallback) { return opt.max_n >= 0 ? opt.max_n : fallback; };
    bool known = false;
    if (wants({"table"})) {
      known = true;
      results.push_back(verify_base_tables());
    }
    if (wants({"equivalence"})) {
      known = true;
      results.push_back(verify_singularity_equivalence(primes, max_n_or(20)));
    }
    if (wants({"orthogonality"})) {
      known = true;
      results.push_back(verify_orthogonality(max_n_or(10)));
    }
    if (wants({"structural", "theorem-1-6"})) {
      known = true;
      for (Part p : primes)
        if (p == 2 || p == 3) {
          const Part m = max_n_or(p == 2 ? 16 : 15);
          results.push_back(verify_structural_classifier(p, m, sweep(m)));
        }
    }
    if (wants({"adic-type"})) {
      known = true;
      for (Part p : primes) {
        const Part m = max_n_or(16);
        results.push_back(verify_adic_type_vanishes(p, m, sweep(m)));
      }
    }
    if (wants({"factorization"})) {
      known = true;
      results.push_back(verify_factorization(max_n_or(12), {2, 3, 4, 5}));
    }
    if (wants({"audits"})) {
      known = true;
      for (Part p : primes)
        if (p == 2 || p == 3) {
          const Part m = max_n_or(14);
          results.push_back(verify_structure_audits(p, m, sweep(m)));
        }
    }
    if (wants({"conjectures"})) {
      known = true;
      for (Part p : primes)
        if (p >= 5) {
          const Part m = max_n_or(16);
          results.push_back(verify_conjectures(p, m, sweep(m)));
        }
    }
    if (!known) throw std::invalid_argument("unknown suite '" + opt.suite + "'");

    bool passed = true;
    for (const auto& r : results) passed = passed && r.passed();
    if (as_json()) {
      json arr = json::array();
      for (const auto& r : results)
        arr.push_back({{"suite", r.name},
                       {"scope", r.scope},
                       {"checked", r.checked},
                       {"violations", r.violations},
                       {"passed", r.passed()},
                       {"witnesses", r.witnesses}});
      out_ << json::object({{"schema_version", 1}, {"passed", passed}, {"suites", arr}}) << '\n';
    } else {
      for (const auto& r : results) {
        out_ << (r.passed() ? "PASS " : "FAIL ") << r.name << " [" << r.scope << "] checked=" << r.checked
             << " violations=" << r.violations << '\n';
        for (const auto& w : r.witnesses) out_ << "  witness: " << w << '\n';
        if (r.name == "conjectures" && r.passed()) out_ << "  no counterexample found\n";
      }
    }
    return passed ? kExitOk : kExitViolation;
  }

  int cmd_table() {
    const CharacterTable table = character_table(opt.n);
    out_ << (as_json() ? table.to_json() + "\n" : table.to_text());
    return kExitOk;
  }

  Options opt;

 private:
  std::ostream& out_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Runner runner(out);
  Options& o = runner.opt;
  o.workers = default_workers();

  CLI::App app{"Symmetric-group characters and p-vanishing classes", "pvanish"};
  app.require_subcommand(1);
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  };
  const auto add_sweep = [&](CLI::App* sub) {
    sub->add_option("--workers", o.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--cache", o.cache, "Character cache mode")->check(CLI::IsMember({"shared", "per-worker"}));
    sub->add_option("--max-n", o.max_n, "Sweep bound")->check(CLI::NonNegativeNumber);
  };

  auto* c_char = app.add_subcommand("char", "Character value chi^alpha_beta");
  c_char->add_option("--alpha", o.alpha, "Character label")->required();
  c_char->add_option("--beta", o.beta, "Cycle type")->required();
  add_common(c_char);

  auto* c_degree = app.add_subcommand("degree", "Degree of chi^alpha");
  c_degree->add_option("--alpha", o.alpha, "Character label")->required();
  add_common(c_degree);

  auto* c_decompose = app.add_subcommand("decompose", "r-core, r-quotient, r-weight and r-sign");
  c_decompose->add_option("--alpha", o.alpha)->required();
  c_decompose->add_option("--r", o.r)->required()->check(CLI::PositiveNumber);
  add_common(c_decompose);

  auto* c_compose = app.add_subcommand("compose", "Partition from r-core and r-quotient");
  c_compose->add_option("--core", o.core)->required();
  c_compose->add_option("--quotient", o.quotient, "e.g. \"(1);(0)\" or [[1],[]]")->required();
  c_compose->add_option("--r", o.r)->required()->check(CLI::PositiveNumber);
  add_common(c_compose);

  auto* c_core = app.add_subcommand("core", "r-core");
  c_core->add_option("--alpha", o.alpha)->required();
  c_core->add_option("--r", o.r)->required()->check(CLI::PositiveNumber);
  add_common(c_core);

  auto* c_quotient = app.add_subcommand("quotient", "r-quotient");
  c_quotient->add_option("--alpha", o.alpha)->required();
  c_quotient->add_option("--r", o.r)->required()->check(CLI::PositiveNumber);
  add_common(c_quotient);

  auto* c_padic = app.add_subcommand("padic", "p-adic expansion, lambda_{n,p} and singularity of alpha");
  c_padic->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  c_padic->add_option("--p", o.p)->required();
  c_padic->add_option("--alpha", o.alpha, "Optional partition of n to classify");
  add_common(c_padic);

  auto* c_vanishing = app.add_subcommand("vanishing", "p-vanishing classes by brute force");
  c_vanishing->add_option("--p", o.p)->required();
  c_vanishing->add_option("--n", o.n_range, "N or A..B")->required();
  c_vanishing->add_flag("--check-conjecture", o.check_conjecture, "Conjecture sweep (p >= 5)");
  c_vanishing->add_flag("--audit", o.audit, "Run the structure-predicate audits");
  add_common(c_vanishing);
  add_sweep(c_vanishing);

  auto* c_verify = app.add_subcommand("verify", "Run verification suites");
  c_verify->add_option("--suite", o.suite,
                       "all, table, equivalence, orthogonality, structural, adic-type, factorization, audits, "
                       "conjectures");
  c_verify->add_option("--p", o.primes, "Comma-separated primes");
  add_common(c_verify);
  add_sweep(c_verify);

  auto* c_table = app.add_subcommand("table", "Character table of S_n");
  c_table->add_option("--n", o.n)->required()->check(CLI::NonNegativeNumber);
  add_common(c_table);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (!is_prime(o.p)) throw std::invalid_argument(std::to_string(o.p) + " is not prime");
    if (*c_char) return runner.cmd_char();
    if (*c_degree) return runner.cmd_degree();
    if (*c_decompose) return runner.cmd_decompose();
    if (*c_compose) return runner.cmd_compose();
    if (*c_core) return runner.cmd_core();
    if (*c_quotient) return runner.cmd_quotient();
    if (*c_padic) return runner.cmd_padic();
    if (*c_vanishing) return runner.cmd_vanishing();
    if (*c_verify) return runner.cmd_verify();
    if (*c_table) return runner.cmd_table();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pvanish::cli
