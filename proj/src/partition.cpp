#include "pvanish/partition.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <unordered_set>
#include <utility>

#include "pvanish/integer.hpp"

namespace pvanish {

Partition::Partition(std::vector<Part> parts) : parts_(std::move(parts)) {
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition parts must be weakly decreasing");
    size_ = checked_add(size_, parts_[i]);
  }
}

Partition Partition::from_unsorted(std::vector<Part> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition Partition::rectangle(Part value, std::size_t count) {
  if (value == 0) return Partition();
  return Partition(std::vector<Part>(count, value));
}

std::size_t Partition::multiplicity(Part k) const {
  return static_cast<std::size_t>(std::count(parts_.begin(), parts_.end(), k));
}

std::string Partition::to_string() const {
  if (parts_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

std::string Partition::to_compact_string() const {
  if (parts_.empty()) return "(0)";
  std::string out = "(";
  std::size_t i = 0;
  bool first = true;
  while (i < parts_.size()) {
    std::size_t j = i;
    while (j < parts_.size() && parts_[j] == parts_[i]) ++j;
    if (!first) out += ',';
    first = false;
    out += std::to_string(parts_[i]);
    if (j - i > 1) out += '^' + std::to_string(j - i);
    i = j;
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (Part x : p) {
    h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

Part parse_integer(std::string_view s) {
  s = trim(s);
  Part v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

}  // namespace

Partition parse_partition(std::string_view text) {
  text = trim(text);
  if (!text.empty() && ((text.front() == '(' && text.back() == ')') ||
                        (text.front() == '[' && text.back() == ']'))) {
    text = trim(text.substr(1, text.size() - 2));
  }
  std::vector<Part> parts;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view token = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
    if (token.empty()) throw std::invalid_argument("empty part in partition");
    Part value = 0;
    Part count = 1;
    if (const auto caret = token.find('^'); caret != std::string_view::npos) {
      value = parse_integer(token.substr(0, caret));
      count = parse_integer(token.substr(caret + 1));
      if (count < 0) throw std::invalid_argument("negative exponent in partition");
    } else {
      value = parse_integer(token);
    }
    if (value < 0) throw std::invalid_argument("negative part in partition");
    if (value == 0) continue;
    for (Part c = 0; c < count; ++c) parts.push_back(value);
  }
  return Partition::from_unsorted(std::move(parts));
}

BetaSet::BetaSet(std::vector<Part> elements) : elements_(std::move(elements)) {
  std::sort(elements_.begin(), elements_.end(), std::greater<>());
  if (std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    throw std::invalid_argument("beta-set elements must be distinct");
  if (!elements_.empty() && elements_.back() < 0)
    throw std::invalid_argument("beta-set elements must be non-negative");
}

bool BetaSet::contains(Part x) const {
  return std::binary_search(elements_.begin(), elements_.end(), x, std::greater<>());
}

Partition conjugate(const Partition& alpha) {
  if (alpha.empty()) return alpha;
  std::vector<Part> out(static_cast<std::size_t>(alpha[0]), 0);
  for (Part row : alpha)
    for (Part j = 0; j < row; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

namespace {

Part column_height(const Partition& alpha, Part j) {
  Part h = 0;
  for (Part row : alpha) {
    if (row < j) break;
    ++h;
  }
  return h;
}

void check_node(const Partition& alpha, std::size_t i, Part j) {
  if (i < 1 || i > alpha.length() || j < 1 || j > alpha[i - 1])
    throw std::out_of_range("node (" + std::to_string(i) + "," + std::to_string(j) +
                            ") is not in " + alpha.to_string());
}

}  // namespace

Part hook_length(const Partition& alpha, std::size_t i, Part j) {
  check_node(alpha, i, j);
  return alpha[i - 1] - j + column_height(alpha, j) - static_cast<Part>(i) + 1;
}

Part leg_length(const Partition& alpha, std::size_t i, Part j) {
  check_node(alpha, i, j);
  return column_height(alpha, j) - static_cast<Part>(i);
}

std::vector<Part> hook_lengths(const Partition& alpha) {
  const Partition conj = conjugate(alpha);
  std::vector<Part> out;
  out.reserve(static_cast<std::size_t>(alpha.size()));
  for (std::size_t i = 0; i < alpha.length(); ++i)
    for (Part j = 0; j < alpha[i]; ++j)
      out.push_back(alpha[i] - j + conj[static_cast<std::size_t>(j)] - static_cast<Part>(i) - 1);
  return out;
}

BetaSet beta_set(const Partition& alpha, std::size_t size) {
  if (size < alpha.length())
    throw std::invalid_argument("beta-set size smaller than the number of parts");
  std::vector<Part> out(size);
  for (std::size_t i = 0; i < size; ++i) out[i] = alpha[i] + static_cast<Part>(size - 1 - i);
  return BetaSet(std::move(out));
}

Partition from_beta_set(const BetaSet& beta) {
  const auto& e = beta.elements();
  const std::size_t m = e.size();
  std::vector<Part> parts(m);
  for (std::size_t i = 0; i < m; ++i) parts[i] = e[i] - static_cast<Part>(m - 1 - i);
  return Partition(std::move(parts));
}

std::vector<HookRemoval> removable_hooks(const Partition& alpha, Part length) {
  std::vector<HookRemoval> out;
  if (length < 1 || length > alpha.size()) return out;
  const std::size_t m = alpha.length();
  std::vector<Part> e(m);
  for (std::size_t i = 0; i < m; ++i) e[i] = alpha[i] + static_cast<Part>(m - 1 - i);
  for (std::size_t i = 0; i < m; ++i) {
    const Part y = e[i] - length;
    if (y < 0) continue;
    // e is strictly decreasing, so elements above y after index i form a prefix.
    std::size_t k = i + 1;
    while (k < m && e[k] > y) ++k;
    if (k < m && e[k] == y) continue;
    const Part leg = static_cast<Part>(k - i - 1);
    std::vector<Part> moved;
    moved.reserve(m);
    for (std::size_t q = 0; q < m; ++q) {
      if (q == i) continue;
      if (q == k) moved.push_back(y);
      moved.push_back(e[q]);
    }
    if (k == m) moved.push_back(y);
    std::vector<Part> parts(m);
    for (std::size_t q = 0; q < m; ++q) parts[q] = moved[q] - static_cast<Part>(m - 1 - q);
    out.push_back(HookRemoval{i + 1, alpha[i] - length + 1 + leg, length, leg, Partition(std::move(parts))});
  }
  return out;
}

namespace {

struct SequenceKey {
  Partition partition;
  std::size_t index;
  bool operator==(const SequenceKey&) const = default;
};

struct SequenceKeyHash {
  std::size_t operator()(const SequenceKey& k) const noexcept {
    return PartitionHash{}(k.partition) * 31 + k.index;
  }
};

bool can_remove_from(const Partition& alpha, std::span<const Part> lengths, std::size_t index,
                     std::unordered_set<SequenceKey, SequenceKeyHash>& failed) {
  if (index == lengths.size()) return true;
  SequenceKey key{alpha, index};
  if (failed.contains(key)) return false;
  for (const auto& hook : removable_hooks(alpha, lengths[index])) {
    if (can_remove_from(hook.result, lengths, index + 1, failed)) return true;
  }
  failed.insert(std::move(key));
  return false;
}

}  // namespace

bool can_remove_sequence(const Partition& alpha, std::span<const Part> lengths) {
  Part total = 0;
  for (Part l : lengths) {
    if (l < 1) throw std::invalid_argument("hook lengths must be positive");
    total = checked_add(total, l);
  }
  if (total > alpha.size()) return false;
  std::unordered_set<SequenceKey, SequenceKeyHash> failed;
  return can_remove_from(alpha, lengths, 0, failed);
}

namespace {

std::size_t abacus_size(std::size_t min_size, Part r) {
  const auto ur = static_cast<std::size_t>(r);
  return (min_size + ur - 1) / ur * ur;
}

// Bead levels per runner, each list strictly decreasing.
std::vector<std::vector<Part>> runners(const BetaSet& beta, Part r) {
  std::vector<std::vector<Part>> out(static_cast<std::size_t>(r));
  for (Part x : beta.elements()) out[static_cast<std::size_t>(x % r)].push_back(x / r);
  return out;
}

Partition partition_from_levels(const std::vector<Part>& levels) {
  return from_beta_set(BetaSet(levels));
}

}  // namespace

RDecomposition r_decompose(const Partition& alpha, Part r) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  RDecomposition out;
  out.r = r;
  const std::size_t m = abacus_size(alpha.length(), r);
  const auto beads = runners(beta_set(alpha, m), r);
  std::vector<Part> core_positions;
  core_positions.reserve(m);
  for (Part j = 0; j < r; ++j) {
    const auto& runner = beads[static_cast<std::size_t>(j)];
    Partition q = partition_from_levels(runner);
    out.weight += q.size();
    out.quotient.push_back(std::move(q));
    for (std::size_t level = 0; level < runner.size(); ++level)
      core_positions.push_back(static_cast<Part>(level) * r + j);
  }
  out.core = from_beta_set(BetaSet(std::move(core_positions)));
  out.sign = r_sign_by_stripping(alpha, r);
  return out;
}

Partition r_core(const Partition& alpha, Part r) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  const std::size_t m = abacus_size(alpha.length(), r);
  const auto beads = runners(beta_set(alpha, m), r);
  std::vector<Part> positions;
  positions.reserve(m);
  for (Part j = 0; j < r; ++j)
    for (std::size_t level = 0; level < beads[static_cast<std::size_t>(j)].size(); ++level)
      positions.push_back(static_cast<Part>(level) * r + j);
  return from_beta_set(BetaSet(std::move(positions)));
}

Part r_weight(const Partition& alpha, Part r) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  if (r > alpha.size()) return 0;
  const std::size_t m = abacus_size(alpha.length(), r);
  Part weight = 0;
  for (const auto& runner : runners(beta_set(alpha, m), r)) {
    for (std::size_t i = 0; i < runner.size(); ++i)
      weight += runner[i] - static_cast<Part>(runner.size() - 1 - i);
  }
  return weight;
}

int r_sign_by_stripping(const Partition& alpha, Part r, bool largest_first) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  const BetaSet start = beta_set(alpha, alpha.length());
  std::set<Part> beads(start.elements().begin(), start.elements().end());
  Part legs = 0;
  while (true) {
    std::optional<Part> pick;
    for (Part x : beads) {
      if (x - r >= 0 && !beads.contains(x - r)) {
        pick = x;
        if (!largest_first) break;
      }
    }
    if (!pick) break;
    const Part x = *pick;
    legs += static_cast<Part>(std::distance(beads.upper_bound(x - r), beads.find(x)));
    beads.erase(x);
    beads.insert(x - r);
  }
  return legs % 2 == 0 ? 1 : -1;
}

bool is_r_core(const Partition& alpha, Part r) { return removable_hooks(alpha, r).empty(); }

Partition from_core_and_quotient(const Partition& core, std::span<const Partition> quotient, Part r) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  if (quotient.size() != static_cast<std::size_t>(r))
    throw std::invalid_argument("quotient must have exactly r components");
  if (!is_r_core(core, r)) throw std::invalid_argument(core.to_string() + " is not an r-core");
  std::size_t m = abacus_size(core.length(), r);
  std::vector<std::vector<Part>> beads;
  while (true) {
    beads = runners(beta_set(core, m), r);
    bool fits = true;
    for (Part j = 0; j < r; ++j)
      fits = fits && beads[static_cast<std::size_t>(j)].size() >= quotient[static_cast<std::size_t>(j)].length();
    if (fits) break;
    m += static_cast<std::size_t>(r);
  }
  std::vector<Part> positions;
  positions.reserve(m);
  for (Part j = 0; j < r; ++j) {
    const std::size_t count = beads[static_cast<std::size_t>(j)].size();
    const BetaSet levels = beta_set(quotient[static_cast<std::size_t>(j)], count);
    for (Part level : levels.elements()) positions.push_back(level * r + j);
  }
  return from_beta_set(BetaSet(std::move(positions)));
}

void for_each_partition(Part n, const std::function<void(const Partition&)>& visit) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n == 0) {
    visit(Partition());
    return;
  }
  std::vector<Part> a{n};
  while (true) {
    visit(Partition(a));
    Part ones = 0;
    while (!a.empty() && a.back() == 1) {
      a.pop_back();
      ++ones;
    }
    if (a.empty()) return;
    const Part k = --a.back();
    Part rem = ones + 1;
    while (rem > k) {
      a.push_back(k);
      rem -= k;
    }
    if (rem > 0) a.push_back(rem);
  }
}

std::vector<Partition> enumerate_partitions(Part n) {
  std::vector<Partition> out;
  for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
  return out;
}

Partition merge_parts(const Partition& a, const Partition& b) {
  std::vector<Part> parts(a.begin(), a.end());
  parts.insert(parts.end(), b.begin(), b.end());
  return Partition::from_unsorted(std::move(parts));
}

Partition scale_parts(const Partition& alpha, Part factor) {
  std::vector<Part> parts;
  parts.reserve(alpha.length());
  for (Part x : alpha) parts.push_back(checked_mul(x, factor));
  return Partition(std::move(parts));
}

}  // namespace pvanish
