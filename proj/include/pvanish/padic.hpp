#pragma once

#include <cstdint>
#include <vector>

#include "pvanish/partition.hpp"

namespace pvanish {

bool is_prime(std::int64_t p);

/// Base-p expansion n = a_k p^k + ... + a_0 together with the splits
/// n = d_t p^t + e_t, 0 <= e_t < p^t.
class PAdicContext {
 public:
  /// Throws std::invalid_argument if p is not prime or n < 0.
  PAdicContext(Part n, Part p);

  Part n() const noexcept { return n_; }
  Part p() const noexcept { return p_; }
  /// a_0..a_k; a single 0 digit when n == 0.
  const std::vector<Part>& digits() const noexcept { return digits_; }
  /// Index of the leading digit.
  std::size_t k() const noexcept { return digits_.size() - 1; }
  /// a_i, 0 beyond the leading digit.
  Part digit(std::size_t i) const noexcept { return i < digits_.size() ? digits_[i] : 0; }

  /// p^t; throws OverflowError past 64 bits.
  Part power(std::size_t t) const;
  Part d(std::size_t t) const;
  Part e(std::size_t t) const;

 private:
  Part n_;
  Part p_;
  std::vector<Part> digits_;
};

/// ((p^k)^{a_k}, ..., 1^{a_0})
Partition lambda_np(const PAdicContext& ctx);

/// Parts of a candidate partition grouped by exact p-valuation; group i holds
/// part / p^i for every part of valuation i.
struct PAdicTypeWitness {
  std::vector<std::vector<Part>> groups;
};

struct PAdicTypeResult {
  bool is_p_adic_type = false;
  PAdicTypeWitness witness;
};

/// Throws std::invalid_argument if |alpha| != n.
PAdicTypeResult p_adic_type(const Partition& alpha, const PAdicContext& ctx);
bool is_p_adic_type(const Partition& alpha, const PAdicContext& ctx);

/// w_{p^i}(alpha) - p * w_{p^{i+1}}(alpha).
Part b_invariant(const Partition& alpha, Part p, std::size_t i);

/// Hook lengths ((p^k)^{a_k}, ..., (p^m)^{a_m}) in removal order.
std::vector<Part> class_m_sequence(const PAdicContext& ctx, std::size_t m);

/// True iff the sequence class_m_sequence(ctx, m) cannot be removed from alpha.
bool is_class_m(const Partition& alpha, const PAdicContext& ctx, std::size_t m);

enum class SingularityMethod { hooks, character, b_invariants, degree };

/// Whether p divides the degree of chi^alpha. All four methods must agree;
/// b_invariants is the cheapest.
bool is_p_singular(const Partition& alpha, const PAdicContext& ctx,
                   SingularityMethod method = SingularityMethod::b_invariants);

/// p-adic valuation of the degree of chi^alpha from hook lengths.
Part degree_valuation(const Partition& alpha, Part p);

/// Every p-singular alpha of n, in enumeration order.
std::vector<Partition> p_singular_partitions(const PAdicContext& ctx);

}  // namespace pvanish
