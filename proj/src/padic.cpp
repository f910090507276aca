#include "pvanish/padic.hpp"

#include <stdexcept>
#include <string>

#include "pvanish/characters.hpp"
#include "pvanish/integer.hpp"

namespace pvanish {

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

PAdicContext::PAdicContext(Part n, Part p) : n_(n), p_(p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  for (Part rest = n; rest > 0; rest /= p) digits_.push_back(rest % p);
  if (digits_.empty()) digits_.push_back(0);
}

Part PAdicContext::power(std::size_t t) const { return checked_pow(p_, static_cast<Part>(t)); }

Part PAdicContext::d(std::size_t t) const { return t > k() ? 0 : n_ / power(t); }

Part PAdicContext::e(std::size_t t) const { return t > k() ? n_ : n_ % power(t); }

Partition lambda_np(const PAdicContext& ctx) {
  std::vector<Part> parts;
  for (std::size_t i = ctx.digits().size(); i-- > 0;)
    for (Part c = 0; c < ctx.digit(i); ++c) parts.push_back(ctx.power(i));
  return Partition(std::move(parts));
}

namespace {

void check_size(const Partition& alpha, const PAdicContext& ctx) {
  if (alpha.size() != ctx.n())
    throw std::invalid_argument(alpha.to_string() + " is not a partition of " + std::to_string(ctx.n()));
}

}  // namespace

PAdicTypeResult p_adic_type(const Partition& alpha, const PAdicContext& ctx) {
  check_size(alpha, ctx);
  PAdicTypeResult out;
  auto& groups = out.witness.groups;
  groups.resize(ctx.digits().size());
  for (Part part : alpha) {
    std::size_t v = 0;
    Part f = part;
    while (f % ctx.p() == 0) {
      f /= ctx.p();
      ++v;
    }
    if (v >= groups.size()) groups.resize(v + 1);
    groups[v].push_back(f);
  }
  out.is_p_adic_type = true;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    Part sum = 0;
    for (Part f : groups[i]) sum += f;
    if (sum != ctx.digit(i)) out.is_p_adic_type = false;
  }
  return out;
}

bool is_p_adic_type(const Partition& alpha, const PAdicContext& ctx) {
  return p_adic_type(alpha, ctx).is_p_adic_type;
}

Part b_invariant(const Partition& alpha, Part p, std::size_t i) {
  const Part r = checked_pow(p, static_cast<Part>(i));
  return r_weight(alpha, r) - p * r_weight(alpha, checked_mul(r, p));
}

std::vector<Part> class_m_sequence(const PAdicContext& ctx, std::size_t m) {
  std::vector<Part> out;
  for (std::size_t i = ctx.digits().size(); i-- > m;)
    for (Part c = 0; c < ctx.digit(i); ++c) out.push_back(ctx.power(i));
  return out;
}

bool is_class_m(const Partition& alpha, const PAdicContext& ctx, std::size_t m) {
  check_size(alpha, ctx);
  return !can_remove_sequence(alpha, class_m_sequence(ctx, m));
}

Part degree_valuation(const Partition& alpha, Part p) {
  const auto valuation = [p](Part x) {
    Part v = 0;
    while (x % p == 0) {
      x /= p;
      ++v;
    }
    return v;
  };
  Part v = 0;
  for (Part x = 2; x <= alpha.size(); ++x) v += valuation(x);
  for (Part h : hook_lengths(alpha)) v -= valuation(h);
  return v;
}

bool is_p_singular(const Partition& alpha, const PAdicContext& ctx, SingularityMethod method) {
  check_size(alpha, ctx);
  switch (method) {
    case SingularityMethod::hooks:
      return !can_remove_sequence(alpha, lambda_np(ctx).parts());
    case SingularityMethod::character:
      return mn_value(alpha, lambda_np(ctx)) == 0;
    case SingularityMethod::b_invariants:
      for (std::size_t i = 0; i <= ctx.digits().size(); ++i)
        if (b_invariant(alpha, ctx.p(), i) != ctx.digit(i)) return true;
      return false;
    case SingularityMethod::degree:
      return degree_valuation(alpha, ctx.p()) > 0;
  }
  throw std::logic_error("unknown singularity method");
}

std::vector<Partition> p_singular_partitions(const PAdicContext& ctx) {
  std::vector<Partition> out;
  for_each_partition(ctx.n(), [&](const Partition& alpha) {
    if (is_p_singular(alpha, ctx)) out.push_back(alpha);
  });
  return out;
}

}  // namespace pvanish
