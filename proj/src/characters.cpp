#include "pvanish/characters.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "key_encoding.hpp"

namespace pvanish {

std::optional<std::int64_t> LocalValueCache::find(const std::string& key) const {
  const auto it = map_.find(key);
  if (it == map_.end()) return std::nullopt;
  return it->second;
}

void LocalValueCache::insert(const std::string& key, std::int64_t value) { map_.emplace(key, value); }

SharedValueCache::Shard& SharedValueCache::shard_for(const std::string& key) const {
  return shards_[std::hash<std::string>{}(key) % kShards];
}

std::optional<std::int64_t> SharedValueCache::find(const std::string& key) const {
  Shard& s = shard_for(key);
  std::lock_guard lock(s.mutex);
  const auto it = s.map.find(key);
  if (it == s.map.end()) return std::nullopt;
  return it->second;
}

void SharedValueCache::insert(const std::string& key, std::int64_t value) {
  Shard& s = shard_for(key);
  std::lock_guard lock(s.mutex);
  s.map.emplace(key, value);
}

std::size_t SharedValueCache::size() const {
  std::size_t total = 0;
  for (auto& s : shards_) {
    std::lock_guard lock(s.mutex);
    total += s.map.size();
  }
  return total;
}

namespace {

void check_same_size(const Partition& alpha, const Partition& beta) {
  if (alpha.size() != beta.size())
    throw std::invalid_argument("character " + alpha.to_string() + " and class " + beta.to_string() +
                                " have different sizes");
}

std::string mn_key(const Partition& alpha, std::span<const Part> cls) {
  std::string key;
  key.reserve(alpha.length() + cls.size() + 2);
  detail::append_parts(key, alpha.parts());
  detail::append_parts(key, cls);
  return key;
}

// Sum over rim hooks of length `part` of (-1)^leg * chi^{rest}. `cls` is
// the remaining class, sorted descending.
template <class Value, class Lookup, class Store>
Value mn_recurse(const Partition& alpha, std::span<const Part> cls, PartOrder order, Lookup& lookup,
                 Store& store) {
  if (cls.empty()) return Value(1);
  if (alpha.length() == 1) return Value(1);
  const std::string key = mn_key(alpha, cls);
  if (auto hit = lookup(key)) return *hit;
  const bool largest = order == PartOrder::largest_first;
  const Part part = largest ? cls.front() : cls.back();
  const auto rest = largest ? cls.subspan(1) : cls.first(cls.size() - 1);
  Value total(0);
  for (const auto& hook : removable_hooks(alpha, part)) {
    Value v = mn_recurse<Value>(hook.result, rest, order, lookup, store);
    if constexpr (std::is_same_v<Value, std::int64_t>) {
      total = hook.leg % 2 == 0 ? checked_add(total, v) : checked_sub(total, v);
    } else {
      if (hook.leg % 2 == 0)
        total += v;
      else
        total -= v;
    }
  }
  store(key, total);
  return total;
}

}  // namespace

MnEvaluator::MnEvaluator(PartOrder order, std::shared_ptr<ValueCache> cache)
    : order_(order), cache_(cache ? std::move(cache) : std::make_shared<LocalValueCache>()) {}

std::int64_t MnEvaluator::value64(const Partition& alpha, const Partition& beta) {
  check_same_size(alpha, beta);
  auto lookup = [this](const std::string& key) { return cache_->find(key); };
  auto store = [this](const std::string& key, std::int64_t v) { cache_->insert(key, v); };
  return mn_recurse<std::int64_t>(alpha, beta.parts(), order_, lookup, store);
}

Integer MnEvaluator::value(const Partition& alpha, const Partition& beta) {
  try {
    return Integer(value64(alpha, beta));
  } catch (const OverflowError&) {
    auto lookup = [this](const std::string& key) -> std::optional<Integer> {
      const auto it = big_cache_.find(key);
      if (it == big_cache_.end()) return std::nullopt;
      return it->second;
    };
    auto store = [this](const std::string& key, const Integer& v) { big_cache_.emplace(key, v); };
    return mn_recurse<Integer>(alpha, beta.parts(), order_, lookup, store);
  }
}

bool MnEvaluator::is_zero(const Partition& alpha, const Partition& beta) { return value(alpha, beta) == 0; }

Integer mn_value(const Partition& alpha, const Partition& beta) {
  static const auto shared = std::make_shared<SharedValueCache>();
  MnEvaluator evaluator(PartOrder::largest_first, shared);
  return evaluator.value(alpha, beta);
}

Integer factorial(Part n) {
  Integer out = 1;
  for (Part k = 2; k <= n; ++k) out *= k;
  return out;
}

Integer degree(const Partition& alpha) {
  Integer hooks = 1;
  for (Part h : hook_lengths(alpha)) hooks *= h;
  return factorial(alpha.size()) / hooks;
}

Integer centralizer_order(const Partition& beta) {
  Integer out = 1;
  std::size_t i = 0;
  const auto& parts = beta.parts();
  while (i < parts.size()) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    for (std::size_t c = 0; c < j - i; ++c) out *= parts[i];
    out *= factorial(static_cast<Part>(j - i));
    i = j;
  }
  return out;
}

Partition factored_class(Part r, const Partition& gamma, const Partition& lambda) {
  return merge_parts(scale_parts(gamma, r), lambda);
}

Integer factored_value(const Partition& alpha, Part r, const Partition& gamma, const Partition& lambda) {
  const RDecomposition dec = r_decompose(alpha, r);
  if (gamma.size() != dec.weight)
    throw std::invalid_argument(gamma.to_string() + " is not a partition of the r-weight " +
                                std::to_string(dec.weight));
  if (lambda.size() != dec.core.size())
    throw std::invalid_argument(lambda.to_string() + " is not a partition of the r-core size " +
                                std::to_string(dec.core.size()));
  return dec.sign * mn_value(dec.core, lambda) * multi_char_value(dec.quotient, gamma);
}

CharacterTable character_table(Part n, Part limit) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n > limit)
    throw std::invalid_argument("character table of S_" + std::to_string(n) + " exceeds the limit " +
                                std::to_string(limit));
  CharacterTable table;
  table.n = n;
  table.labels = enumerate_partitions(n);
  MnEvaluator evaluator;
  table.values.reserve(table.labels.size());
  for (const auto& alpha : table.labels) {
    std::vector<std::int64_t> row;
    row.reserve(table.labels.size());
    for (const auto& beta : table.labels) row.push_back(evaluator.value64(alpha, beta));
    table.values.push_back(std::move(row));
  }
  return table;
}

std::string CharacterTable::to_json() const {
  nlohmann::json j;
  j["schema_version"] = 1;
  j["n"] = n;
  auto labels_json = nlohmann::json::array();
  for (const auto& l : labels) labels_json.push_back(l.parts());
  j["rows"] = labels_json;
  j["columns"] = labels_json;
  j["values"] = values;
  return j.dump();
}

std::string CharacterTable::to_text() const {
  std::size_t label_width = 0;
  std::vector<std::size_t> widths(labels.size(), 0);
  for (std::size_t c = 0; c < labels.size(); ++c) {
    label_width = std::max(label_width, labels[c].to_compact_string().size());
    widths[c] = labels[c].to_compact_string().size();
    for (const auto& row : values) widths[c] = std::max(widths[c], std::to_string(row[c]).size());
  }
  std::ostringstream os;
  os << std::setw(static_cast<int>(label_width)) << "";
  for (std::size_t c = 0; c < labels.size(); ++c)
    os << ' ' << std::setw(static_cast<int>(widths[c])) << labels[c].to_compact_string();
  os << '\n';
  for (std::size_t r = 0; r < labels.size(); ++r) {
    os << std::setw(static_cast<int>(label_width)) << labels[r].to_compact_string();
    for (std::size_t c = 0; c < labels.size(); ++c)
      os << ' ' << std::setw(static_cast<int>(widths[c])) << values[r][c];
    os << '\n';
  }
  return os.str();
}

}  // namespace pvanish
