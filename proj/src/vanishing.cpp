#include "pvanish/vanishing.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "pvanish/parallel.hpp"

namespace pvanish {

VanishingOracle::VanishingOracle(Part p, SweepConfig config)
    : p_(p), config_(config), shared_cache_(std::make_shared<SharedValueCache>()) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (config_.workers < 1) throw std::invalid_argument("worker count must be at least 1");
  if (config_.max_n < 0) throw std::invalid_argument("sweep bound must be non-negative");
  evaluators_.resize(config_.workers);
  for (auto& e : evaluators_) {
    if (config_.cache_mode == CacheMode::shared)
      e = std::make_unique<MnEvaluator>(PartOrder::largest_first, shared_cache_);
    else
      e = std::make_unique<MnEvaluator>(PartOrder::largest_first);
  }
}

MnEvaluator& VanishingOracle::evaluator(std::size_t worker) { return *evaluators_.at(worker); }

void VanishingOracle::check_bound(Part n) const {
  if (n > config_.max_n)
    throw BoundExceeded("n = " + std::to_string(n) + " exceeds the sweep bound " + std::to_string(config_.max_n));
}

const std::vector<Partition>& VanishingOracle::singular(Part n) {
  check_bound(n);
  if (const auto it = singular_.find(n); it != singular_.end()) return it->second;
  const PAdicContext ctx(n, p_);
  const auto all = enumerate_partitions(n);
  std::vector<char> flags(all.size(), 0);
  parallel_for(all.size(), config_.workers,
               [&](std::size_t i, std::size_t) { flags[i] = is_p_singular(all[i], ctx) ? 1 : 0; });
  std::vector<Partition> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (flags[i]) out.push_back(all[i]);
  return singular_.emplace(n, std::move(out)).first->second;
}

std::optional<NonVanishingWitness> VanishingOracle::witness(const Partition& beta) {
  for (const auto& alpha : singular(beta.size())) {
    Integer v = evaluator(0).value(alpha, beta);
    if (v != 0) return NonVanishingWitness{alpha, std::move(v)};
  }
  return std::nullopt;
}

bool VanishingOracle::is_vanishing(const Partition& beta) {
  const auto& set = vanishing_set(beta.size());
  return std::binary_search(set.begin(), set.end(), beta, std::greater<>());
}

const std::vector<Partition>& VanishingOracle::vanishing_set(Part n) {
  check_bound(n);
  if (const auto it = vanishing_.find(n); it != vanishing_.end()) return it->second;
  const auto& sing = singular(n);
  const auto all = enumerate_partitions(n);
  std::vector<char> flags(all.size(), 0);
  parallel_for(all.size(), config_.workers, [&](std::size_t i, std::size_t w) {
    MnEvaluator& ev = evaluator(w);
    for (const auto& alpha : sing)
      if (ev.value64(alpha, all[i]) != 0) return;
    flags[i] = 1;
  });
  std::vector<Partition> out;
  for (std::size_t i = 0; i < all.size(); ++i)
    if (flags[i]) out.push_back(all[i]);
  return vanishing_.emplace(n, std::move(out)).first->second;
}

bool is_p_vanishing_bruteforce(const Partition& beta, const PAdicContext& ctx) {
  if (beta.size() != ctx.n())
    throw std::invalid_argument(beta.to_string() + " is not a partition of " + std::to_string(ctx.n()));
  MnEvaluator evaluator;
  for (const auto& alpha : p_singular_partitions(ctx))
    if (evaluator.value(alpha, beta) != 0) return false;
  return true;
}

PredicateTally& PredicateTally::operator+=(const PredicateTally& o) {
  holds += o.holds;
  violated += o.violated;
  inapplicable += o.inapplicable;
  informational_holds += o.informational_holds;
  informational_fails += o.informational_fails;
  return *this;
}

void AuditRecord::merge(const AuditRecord& other) {
  for (const auto& [name, tally] : other.tallies) tallies[name] += tally;
  counterexamples.insert(counterexamples.end(), other.counterexamples.begin(), other.counterexamples.end());
}

// Base-case tables as published: p-vanishing classes of S_n for n < 8
// (p = 2) and n < 9 (p = 3).
const std::vector<Partition>& published_base_table(Part p) {
  static const std::vector<Partition> two = {
      {}, {1}, {2}, {1, 1}, {2, 1}, {4}, {2, 1, 1}, {4, 1}, {4, 2}, {4, 1, 1}, {4, 2, 1}};
  static const std::vector<Partition> three = {
      {},        {1},          {2},          {1, 1},    {3},          {2, 1},       {1, 1, 1},
      {3, 1},    {3, 2},       {3, 1, 1},    {4, 1},    {2, 1, 1, 1}, {6},          {3, 3},
      {3, 2, 1}, {3, 1, 1, 1}, {6, 1},       {3, 3, 1}, {6, 2},       {6, 1, 1},    {3, 3, 2},
      {3, 3, 1, 1}, {4, 3, 1}, {3, 2, 1, 1, 1}};
  if (p == 2) return two;
  if (p == 3) return three;
  throw std::invalid_argument("base-case tables exist only for p = 2 and p = 3");
}

const std::vector<Partition>& published_non_adic_entries(Part p) {
  static const std::vector<Partition> two = {{1, 1}, {2, 1, 1}, {4, 1, 1}};
  static const std::vector<Partition> three = {{2, 1}, {1, 1, 1}, {4, 1}, {2, 1, 1, 1},
                                               {3, 2, 1}, {3, 1, 1, 1}, {4, 3, 1}, {3, 2, 1, 1, 1}};
  if (p == 2) return two;
  if (p == 3) return three;
  throw std::invalid_argument("base-case tables exist only for p = 2 and p = 3");
}

std::size_t structural_exponent(Part p) {
  if (p == 2) return 3;
  if (p == 3) return 2;
  throw std::invalid_argument("the structural classifier covers only p = 2 and p = 3");
}

namespace {

std::vector<Partition> compute_base_table(Part p) {
  const Part bound = checked_pow(p, static_cast<Part>(structural_exponent(p)));
  VanishingOracle oracle(p, SweepConfig{bound, 1, CacheMode::per_worker});
  std::vector<Partition> out;
  for (Part n = 0; n < bound; ++n) {
    const auto& set = oracle.vanishing_set(n);
    out.insert(out.end(), set.begin(), set.end());
  }
  const auto& published = published_base_table(p);
  const std::set<Partition> a(out.begin(), out.end());
  const std::set<Partition> b(published.begin(), published.end());
  if (a != b || out.size() != published.size())
    throw std::logic_error("computed base-case table for p = " + std::to_string(p) +
                           " differs from the published table");
  return out;
}

}  // namespace

const std::vector<Partition>& base_case_table(Part p) {
  static const std::vector<Partition> two = compute_base_table(2);
  static const std::vector<Partition> three = compute_base_table(3);
  if (p == 2) return two;
  if (p == 3) return three;
  throw std::invalid_argument("base-case tables exist only for p = 2 and p = 3");
}

std::optional<std::size_t> structural_split(const Partition& beta, const PAdicContext& ctx) {
  const std::size_t r = structural_exponent(ctx.p());
  if (beta.size() != ctx.n())
    throw std::invalid_argument(beta.to_string() + " is not a partition of " + std::to_string(ctx.n()));
  const Part head = ctx.d(r) * ctx.power(r);
  const auto& table = base_case_table(ctx.p());
  const auto& parts = beta.parts();
  Part prefix_sum = 0;
  for (std::size_t i = 0; i <= parts.size(); ++i) {
    if (prefix_sum == head) {
      const Partition prefix(std::vector<Part>(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(i)));
      const Partition suffix(std::vector<Part>(parts.begin() + static_cast<std::ptrdiff_t>(i), parts.end()));
      if (is_p_adic_type(prefix, PAdicContext(head, ctx.p())) &&
          std::find(table.begin(), table.end(), suffix) != table.end())
        return i;
    }
    if (i == parts.size() || prefix_sum > head) break;
    prefix_sum += parts[i];
  }
  return std::nullopt;
}

bool classify_structural(const Partition& beta, const PAdicContext& ctx) {
  return structural_split(beta, ctx).has_value();
}

VanishReport list_p_vanishing(const PAdicContext& ctx, VanishingOracle& oracle, ReportOptions options) {
  if (oracle.p() != ctx.p()) throw std::invalid_argument("oracle prime does not match the context");
  VanishReport report;
  report.n = ctx.n();
  report.p = ctx.p();
  const bool structural = ctx.p() == 2 || ctx.p() == 3;
  const auto& set = oracle.vanishing_set(ctx.n());
  for (const auto& beta : set) {
    VanishEntry entry{beta, is_p_adic_type(beta, ctx), std::nullopt};
    if (structural) entry.split = structural_split(beta, ctx);
    report.vanishing.push_back(std::move(entry));
  }

  auto& adic = report.audit.tallies["adic_type_vanishes"];
  for_each_partition(ctx.n(), [&](const Partition& beta) {
    if (!is_p_adic_type(beta, ctx)) {
      ++adic.inapplicable;
      return;
    }
    if (oracle.is_vanishing(beta)) {
      ++adic.holds;
      return;
    }
    ++adic.violated;
    Counterexample ce{"adic_type_vanishes", ctx.n(), ctx.p(), beta, std::nullopt, std::nullopt, std::nullopt,
                      "p-adic-type class is not p-vanishing"};
    if (auto w = oracle.witness(beta)) {
      ce.alpha = w->alpha;
      ce.value = w->value;
    }
    report.audit.counterexamples.push_back(std::move(ce));
  });

  if (structural) {
    auto& agree = report.audit.tallies["structural_classifier"];
    for_each_partition(ctx.n(), [&](const Partition& beta) {
      const bool brute = oracle.is_vanishing(beta);
      const bool classified = classify_structural(beta, ctx);
      if (brute == classified) {
        ++agree.holds;
        return;
      }
      ++agree.violated;
      Counterexample ce{"structural_classifier", ctx.n(), ctx.p(), beta, std::nullopt, std::nullopt, std::nullopt,
                        brute ? "brute force vanishing, classifier rejects" : "classifier accepts, brute force not vanishing"};
      if (!brute) {
        if (auto w = oracle.witness(beta)) {
          ce.alpha = w->alpha;
          ce.value = w->value;
        }
      }
      report.audit.counterexamples.push_back(std::move(ce));
    });
  }

  if (options.audit_structure) report.audit.merge(audit_structure_predicates(ctx, oracle));
  if (options.check_conjectures && ctx.p() >= 5) {
    const ConjectureReport conj = check_conjectures(ctx, oracle);
    auto& adic_tally = report.audit.tallies["vanishing_iff_adic_type"];
    auto& bound_tally = report.audit.tallies["small_parts_sum_bound"];
    const std::size_t total = report.vanishing.size();
    adic_tally.violated += conj.non_adic_vanishing.size();
    adic_tally.holds += total - conj.non_adic_vanishing.size();
    bound_tally.violated += conj.small_part_excess.size();
    bound_tally.holds += total - conj.small_part_excess.size();
    auto& consistent = report.audit.tallies["conjecture_consistency"];
    if (conj.consistent)
      ++consistent.holds;
    else
      ++consistent.violated;
    report.audit.counterexamples.insert(report.audit.counterexamples.end(), conj.non_adic_vanishing.begin(),
                                        conj.non_adic_vanishing.end());
    report.audit.counterexamples.insert(report.audit.counterexamples.end(), conj.small_part_excess.begin(),
                                        conj.small_part_excess.end());
  }
  return report;
}

VanishReport list_p_vanishing(const PAdicContext& ctx, const SweepConfig& config) {
  VanishingOracle oracle(ctx.p(), config);
  return list_p_vanishing(ctx, oracle);
}

namespace {

nlohmann::json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

}  // namespace

std::string VanishReport::to_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["n"] = n;
  j["p"] = p;
  auto entries = nlohmann::json::array();
  for (const auto& e : vanishing) {
    nlohmann::json item;
    item["parts"] = e.parts.parts();
    item["p_adic_type"] = e.p_adic_type;
    item["split_i"] = e.split ? nlohmann::json(*e.split) : nlohmann::json(nullptr);
    entries.push_back(std::move(item));
  }
  j["vanishing"] = std::move(entries);
  auto audits = nlohmann::json::object();
  for (const auto& [name, t] : audit.tallies) {
    audits[name] = {{"holds", t.holds},
                    {"violated", t.violated},
                    {"inapplicable", t.inapplicable},
                    {"informational_holds", t.informational_holds},
                    {"informational_fails", t.informational_fails}};
  }
  j["audits"] = std::move(audits);
  auto ces = nlohmann::json::array();
  for (const auto& c : audit.counterexamples) {
    nlohmann::json item;
    item["predicate"] = c.predicate;
    item["n"] = c.n;
    item["p"] = c.p;
    item["beta"] = c.beta.parts();
    item["t"] = c.t ? nlohmann::json(*c.t) : nlohmann::json(nullptr);
    item["alpha"] = c.alpha ? nlohmann::json(c.alpha->parts()) : nlohmann::json(nullptr);
    item["value"] = c.value ? integer_json(*c.value) : nlohmann::json(nullptr);
    item["detail"] = c.detail;
    ces.push_back(std::move(item));
  }
  j["counterexamples"] = std::move(ces);
  return j.dump();
}

std::string VanishReport::to_text() const {
  std::ostringstream os;
  os << "n=" << n << " p=" << p << ": " << vanishing.size() << " vanishing class"
     << (vanishing.size() == 1 ? "" : "es") << '\n';
  for (const auto& e : vanishing) {
    os << "  " << e.parts.to_string();
    if (!e.p_adic_type) os << "  [not p-adic type]";
    if (e.split) os << "  split=" << *e.split;
    os << '\n';
  }
  for (const auto& [name, t] : audit.tallies) {
    os << "  audit " << name << ": holds=" << t.holds << " violated=" << t.violated
       << " inapplicable=" << t.inapplicable;
    if (t.informational_holds || t.informational_fails)
      os << " informational_holds=" << t.informational_holds << " informational_fails=" << t.informational_fails;
    os << '\n';
  }
  for (const auto& c : audit.counterexamples) {
    os << "  COUNTEREXAMPLE " << c.predicate << ": beta=" << c.beta.to_string();
    if (c.t) os << " t=" << *c.t;
    if (c.alpha) os << " alpha=" << c.alpha->to_string();
    if (c.value) os << " value=" << c.value->str();
    if (!c.detail.empty()) os << " (" << c.detail << ")";
    os << '\n';
  }
  return os.str();
}

}  // namespace pvanish
