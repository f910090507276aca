#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "pvanish/integer.hpp"
#include "pvanish/partition.hpp"

namespace pvanish {

/// Which class part the Murnaghan-Nakayama recursion strips next. The value
/// does not depend on it; the option exists so that can be checked.
enum class PartOrder { largest_first, smallest_first };

/// Memo table for character values, keyed by (character label, remaining
/// class parts).
class ValueCache {
 public:
  virtual ~ValueCache() = default;
  virtual std::optional<std::int64_t> find(const std::string& key) const = 0;
  virtual void insert(const std::string& key, std::int64_t value) = 0;
  virtual std::size_t size() const = 0;
};

/// Single-owner cache.
class LocalValueCache final : public ValueCache {
 public:
  std::optional<std::int64_t> find(const std::string& key) const override;
  void insert(const std::string& key, std::int64_t value) override;
  std::size_t size() const override { return map_.size(); }

 private:
  std::unordered_map<std::string, std::int64_t> map_;
};

/// Mutex-sharded cache that any number of evaluators may share.
class SharedValueCache final : public ValueCache {
 public:
  std::optional<std::int64_t> find(const std::string& key) const override;
  void insert(const std::string& key, std::int64_t value) override;
  std::size_t size() const override;

 private:
  static constexpr std::size_t kShards = 64;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<std::string, std::int64_t> map;
  };
  Shard& shard_for(const std::string& key) const;
  mutable std::array<Shard, kShards> shards_;
};

/// Murnaghan-Nakayama evaluator with memoisation. Values are computed in
/// checked 64-bit arithmetic and recomputed with unbounded integers if that
/// overflows. Not thread-safe itself; give each thread its own evaluator
/// and, if desired, a common SharedValueCache.
class MnEvaluator {
 public:
  explicit MnEvaluator(PartOrder order = PartOrder::largest_first,
                       std::shared_ptr<ValueCache> cache = nullptr);

  /// chi^alpha at the class of cycle type beta. Throws std::invalid_argument
  /// if |alpha| != |beta|.
  Integer value(const Partition& alpha, const Partition& beta);

  /// Same as value() but without promotion; throws OverflowError.
  std::int64_t value64(const Partition& alpha, const Partition& beta);

  bool is_zero(const Partition& alpha, const Partition& beta);

  std::size_t cache_size() const { return cache_->size(); }
  PartOrder order() const noexcept { return order_; }

 private:
  PartOrder order_;
  std::shared_ptr<ValueCache> cache_;
  std::unordered_map<std::string, Integer> big_cache_;
};

/// chi^alpha_beta using a process-wide shared cache.
Integer mn_value(const Partition& alpha, const Partition& beta);

/// |alpha|! / product of hook lengths.
Integer degree(const Partition& alpha);

/// prod_k k^{m_k} m_k! for the cycle type beta.
Integer centralizer_order(const Partition& beta);

Integer factorial(Part n);

/// The character chi^{(beta_1,...,beta_s)}_lambda defined by stripping the
/// parts of lambda one at a time from any of the components. Throws
/// std::invalid_argument if |lambda| != sum |beta_i|.
Integer multi_char_value(std::span<const Partition> betas, const Partition& lambda,
                         PartOrder order = PartOrder::largest_first);

/// delta_r(alpha) * chi^{core}_lambda * chi^{quotient}_gamma using the
/// r-decomposition of alpha. Requires gamma |- w_r(alpha) and
/// lambda |- |alpha| - r w_r(alpha); throws std::invalid_argument otherwise.
Integer factored_value(const Partition& alpha, Part r, const Partition& gamma, const Partition& lambda);

/// The cycle type (r gamma_1, ..., r gamma_s, lambda_1, ...) on which
/// factored_value is evaluated.
Partition factored_class(Part r, const Partition& gamma, const Partition& lambda);

/// Full character table of S_n: rows are characters, columns classes, both
/// in enumerate_partitions order.
struct CharacterTable {
  Part n = 0;
  std::vector<Partition> labels;
  std::vector<std::vector<std::int64_t>> values;

  std::string to_json() const;
  std::string to_text() const;
};

inline constexpr Part kDefaultTableLimit = 14;

/// Throws std::invalid_argument if n > limit.
CharacterTable character_table(Part n, Part limit = kDefaultTableLimit);

}  // namespace pvanish
