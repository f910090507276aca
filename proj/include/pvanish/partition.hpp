#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pvanish {

using Part = std::int64_t;

/// A partition in canonical form: strictly positive, weakly decreasing parts.
/// The empty partition is the unique partition of 0 and prints as "(0)".
///
/// The same type labels irreducible characters and cycle types of S_n.
class Partition {
 public:
  Partition() = default;

  /// Validates the parts; trailing zeros are dropped, anything else that is
  /// not weakly decreasing and non-negative throws std::invalid_argument.
  explicit Partition(std::vector<Part> parts);
  Partition(std::initializer_list<Part> parts) : Partition(std::vector<Part>(parts)) {}

  /// Sorts arbitrary positive parts into canonical order (used for cycle types).
  static Partition from_unsorted(std::vector<Part> parts);

  /// (value^count), e.g. rectangle(3, 2) == (3,3).
  static Partition rectangle(Part value, std::size_t count);

  const std::vector<Part>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  Part size() const noexcept { return size_; }

  /// 0-indexed row length, 0 past the last part.
  Part operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  /// Number of parts equal to k.
  std::size_t multiplicity(Part k) const;

  auto begin() const noexcept { return parts_.begin(); }
  auto end() const noexcept { return parts_.end(); }

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts; larger partitions in dominance-like order compare greater.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

  /// "(4,2,1)" or "(0)".
  std::string to_string() const;
  /// Same as to_string but with exponent compression: "(4,2,1^3)".
  std::string to_compact_string() const;

 private:
  std::vector<Part> parts_;
  Part size_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

/// Parses "4,2,1", "(4,2,1)", "(4,2,1^3)", "(0)", "" or a JSON array "[4,2,1]".
/// Parts may come in any order; they are sorted. Throws std::invalid_argument.
Partition parse_partition(std::string_view text);

/// A β-set: distinct non-negative integers stored strictly decreasing.
class BetaSet {
 public:
  BetaSet() = default;
  /// Sorts; throws std::invalid_argument on duplicates or negative entries.
  explicit BetaSet(std::vector<Part> elements);

  const std::vector<Part>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool contains(Part x) const;

  friend bool operator==(const BetaSet&, const BetaSet&) = default;

 private:
  std::vector<Part> elements_;
};

/// Removal of the rim hook attached to node (row, col), both 1-indexed.
struct HookRemoval {
  std::size_t row = 0;
  Part col = 0;
  Part length = 0;
  Part leg = 0;
  Partition result;
};

/// Core, quotient, weight and sign of a partition with respect to r.
struct RDecomposition {
  Part r = 1;
  Partition core;
  std::vector<Partition> quotient;
  Part weight = 0;
  int sign = 1;
};

Partition conjugate(const Partition& alpha);

/// Hook length at the 1-indexed node (i, j). Throws std::out_of_range
/// when the node is not in the diagram.
Part hook_length(const Partition& alpha, std::size_t i, Part j);

/// Leg length at the 1-indexed node (i, j).
Part leg_length(const Partition& alpha, std::size_t i, Part j);

/// All hook lengths, row by row.
std::vector<Part> hook_lengths(const Partition& alpha);

/// {alpha_i + size - i}. Throws std::invalid_argument if size < length(alpha).
BetaSet beta_set(const Partition& alpha, std::size_t size);

Partition from_beta_set(const BetaSet& beta);

/// Every rim hook of the given length, sorted by origin row ascending.
std::vector<HookRemoval> removable_hooks(const Partition& alpha, Part length);

/// True iff hooks of the given lengths can be removed from alpha one after
/// another in the given order.
bool can_remove_sequence(const Partition& alpha, std::span<const Part> lengths);

/// Core, quotient, weight and sign via the abacus on a β-set whose size is
/// the least multiple of r not smaller than length(alpha).
RDecomposition r_decompose(const Partition& alpha, Part r);

Partition r_core(const Partition& alpha, Part r);
Part r_weight(const Partition& alpha, Part r);

/// (-1)^(total leg length) over a maximal sequence of r-hook removals,
/// computed by actually stripping hooks. `largest_first` selects which
/// removable hook is taken at each step.
int r_sign_by_stripping(const Partition& alpha, Part r, bool largest_first = true);

/// True iff alpha has no hook of length r.
bool is_r_core(const Partition& alpha, Part r);

/// Inverse of r_decompose. Throws std::invalid_argument if `core` is not an
/// r-core or the quotient does not have exactly r components.
Partition from_core_and_quotient(const Partition& core, std::span<const Partition> quotient, Part r);

/// Every partition of n, lexicographically decreasing: (n), (n-1,1), ...
std::vector<Partition> enumerate_partitions(Part n);

/// Calls `visit` on every partition of n in the same order as
/// enumerate_partitions without materialising the list.
void for_each_partition(Part n, const std::function<void(const Partition&)>& visit);

/// Merges two cycle types into one (multiset union of parts).
Partition merge_parts(const Partition& a, const Partition& b);

/// (factor * part for each part)
Partition scale_parts(const Partition& alpha, Part factor);

}  // namespace pvanish
