#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pvanish/characters.hpp"
#include "pvanish/padic.hpp"
#include "pvanish/partition.hpp"

namespace pvanish {

enum class CacheMode { shared, per_worker };

struct SweepConfig {
  /// Largest n any sweep will accept.
  Part max_n = 16;
  std::size_t workers = 1;
  CacheMode cache_mode = CacheMode::shared;
};

class BoundExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A p-singular character that does not vanish on a class.
struct NonVanishingWitness {
  Partition alpha;
  Integer value;
};

/// Brute-force p-vanishing oracle for a fixed prime. Caches the p-singular
/// characters and the vanishing classes for every n it has seen, so the
/// audits can ask about classes of smaller size cheaply.
class VanishingOracle {
 public:
  explicit VanishingOracle(Part p, SweepConfig config = {});

  Part p() const noexcept { return p_; }
  const SweepConfig& config() const noexcept { return config_; }

  /// p-singular partitions of n in enumeration order.
  const std::vector<Partition>& singular(Part n);

  /// First p-singular alpha (enumeration order) with chi^alpha_beta != 0.
  std::optional<NonVanishingWitness> witness(const Partition& beta);

  bool is_vanishing(const Partition& beta);

  /// All p-vanishing classes of n, lexicographically decreasing.
  const std::vector<Partition>& vanishing_set(Part n);

 private:
  MnEvaluator& evaluator(std::size_t worker);
  void check_bound(Part n) const;

  Part p_;
  SweepConfig config_;
  std::shared_ptr<SharedValueCache> shared_cache_;
  std::vector<std::unique_ptr<MnEvaluator>> evaluators_;
  std::map<Part, std::vector<Partition>> singular_;
  std::map<Part, std::vector<Partition>> vanishing_;
};

/// Stand-alone brute-force check: every p-singular chi^alpha vanishes on beta.
bool is_p_vanishing_bruteforce(const Partition& beta, const PAdicContext& ctx);

/// Pass/fail counts for one audited predicate. `inapplicable` counts
/// instances whose hypotheses do not hold; `informational_*` counts outcomes
/// recorded outside the range where the statement is claimed.
struct PredicateTally {
  std::size_t holds = 0;
  std::size_t violated = 0;
  std::size_t inapplicable = 0;
  std::size_t informational_holds = 0;
  std::size_t informational_fails = 0;

  PredicateTally& operator+=(const PredicateTally& o);
};

struct Counterexample {
  std::string predicate;
  Part n = 0;
  Part p = 0;
  Partition beta;
  std::optional<std::size_t> t;
  std::optional<Partition> alpha;
  std::optional<Integer> value;
  std::string detail;
};

struct VanishEntry {
  Partition parts;
  bool p_adic_type = false;
  /// Split point of the structural classifier for p in {2, 3}.
  std::optional<std::size_t> split;
};

struct AuditRecord {
  std::map<std::string, PredicateTally> tallies;
  std::vector<Counterexample> counterexamples;

  void merge(const AuditRecord& other);
  bool clean() const { return counterexamples.empty(); }
};

struct VanishReport {
  Part n = 0;
  Part p = 0;
  std::vector<VanishEntry> vanishing;
  AuditRecord audit;

  std::string to_json() const;
  std::string to_text() const;
};

struct ReportOptions {
  bool audit_structure = false;
  bool check_conjectures = false;
};

/// Vanishing classes of ctx.n with p-adic-type flags, the check that every
/// p-adic-type class is among them, and for p in {2, 3} the comparison with
/// the structural classifier.
VanishReport list_p_vanishing(const PAdicContext& ctx, VanishingOracle& oracle, ReportOptions options = {});
VanishReport list_p_vanishing(const PAdicContext& ctx, const SweepConfig& config = {});

/// Vanishing classes for n < 8 (p = 2) or n < 9 (p = 3) exactly as
/// published, in publication order. Throws for other p.
const std::vector<Partition>& published_base_table(Part p);
/// Which entries of published_base_table are not of p-adic type.
const std::vector<Partition>& published_non_adic_entries(Part p);

/// The same table computed by brute force; throws std::logic_error if it
/// differs (as a set) from the published one.
const std::vector<Partition>& base_case_table(Part p);

/// Exponent r used by the structural classifier: 3 for p = 2, 2 for p = 3.
std::size_t structural_exponent(Part p);

/// The split point i at which (c_1..c_i) |- d_r p^r is of p-adic type and
/// (c_{i+1}..c_h) |- e_r is in the base table, or nullopt. Throws
/// std::invalid_argument for p outside {2, 3}.
std::optional<std::size_t> structural_split(const Partition& beta, const PAdicContext& ctx);
bool classify_structural(const Partition& beta, const PAdicContext& ctx);

enum class AuditOutcome { holds, violated, inapplicable };

/// For m with d_t p^t = sum of parts divisible by p^t for every m <= t <= k:
/// compares brute-force vanishing of beta with that of its parts below p^m.
AuditOutcome suffix_reduction_check(const Partition& beta, const PAdicContext& ctx, std::size_t m,
                                    VanishingOracle& oracle);

/// Evaluates the structure predicates on every vanishing class of ctx.n and
/// the suffix reduction on every class of ctx.n.
AuditRecord audit_structure_predicates(const PAdicContext& ctx, VanishingOracle& oracle);

struct ConjectureReport {
  /// Vanishing classes not of p-adic type.
  std::vector<Counterexample> non_adic_vanishing;
  /// Vanishing classes whose parts below a_0 sum to more than a_0.
  std::vector<Counterexample> small_part_excess;
  /// If the second list is empty the first must be too.
  bool consistent = true;

  bool no_counterexample() const { return non_adic_vanishing.empty() && small_part_excess.empty(); }
};

/// Sweep for p >= 5; throws std::invalid_argument otherwise.
ConjectureReport check_conjectures(const PAdicContext& ctx, VanishingOracle& oracle);

}  // namespace pvanish
