#include <stdexcept>
#include <string>

#include "pvanish/vanishing.hpp"

namespace pvanish {

namespace {

Part sum_parts_at_least(const Partition& beta, Part bound) {
  Part s = 0;
  for (Part c : beta)
    if (c >= bound) s += c;
  return s;
}

Part sum_parts_below(const Partition& beta, Part bound) {
  Part s = 0;
  for (Part c : beta)
    if (c < bound) s += c;
  return s;
}

Part sum_parts_divisible(const Partition& beta, Part q) {
  Part s = 0;
  for (Part c : beta)
    if (c % q == 0) s += c;
  return s;
}

// p^t, or n + 1 when p^t exceeds n; every comparison made against parts of
// a partition of n gives the same answer either way.
Part capped_power(const PAdicContext& ctx, std::size_t t) {
  return t > ctx.k() ? ctx.n() + 1 : ctx.power(t);
}

// Lower bound on parts at least p^t is claimed when:
//   p = 2: n odd or 8 | n; n = 2 mod 4 and t != 1; n = 4 mod 8 and t not in {1, 2}
//   p = 3: n mod 9 in {0,1,2,4,7}; n mod 9 in {3,5,6,8} and t != 1
bool lower_bound_claimed(Part p, Part n, std::size_t t) {
  if (p == 2) {
    if (n % 2 == 1 || n % 8 == 0) return true;
    if (n % 4 == 2) return t != 1;
    return t != 1 && t != 2;  // n = 4 mod 8
  }
  if (p == 3) {
    switch (n % 9) {
      case 0: case 1: case 2: case 4: case 7:
        return true;
      default:
        return t != 1;
    }
  }
  return false;
}

bool ends_with_small_tail(const Partition& beta) {
  // (2,1,1) itself, or (..., f, 2, 1, 1) with f >= 4.
  const auto& c = beta.parts();
  const std::size_t h = c.size();
  if (h < 3 || c[h - 1] != 1 || c[h - 2] != 1 || c[h - 3] != 2) return false;
  return h == 3 || c[h - 4] >= 4;
}

class Auditor {
 public:
  Auditor(const PAdicContext& ctx, AuditRecord& record) : ctx_(ctx), record_(record) {}

  void record(const std::string& name, AuditOutcome outcome, const Partition& beta, std::optional<std::size_t> t,
              const std::string& detail) {
    auto& tally = record_.tallies[name];
    switch (outcome) {
      case AuditOutcome::holds: ++tally.holds; break;
      case AuditOutcome::inapplicable: ++tally.inapplicable; break;
      case AuditOutcome::violated:
        ++tally.violated;
        record_.counterexamples.push_back(
            Counterexample{name, ctx_.n(), ctx_.p(), beta, t, std::nullopt, std::nullopt, detail});
        break;
    }
  }

  void informational(const std::string& name, bool holds) {
    auto& tally = record_.tallies[name];
    if (holds)
      ++tally.informational_holds;
    else
      ++tally.informational_fails;
  }

 private:
  const PAdicContext& ctx_;
  AuditRecord& record_;
};

AuditOutcome gate(bool applicable, bool holds) {
  if (!applicable) return AuditOutcome::inapplicable;
  return holds ? AuditOutcome::holds : AuditOutcome::violated;
}

}  // namespace

AuditOutcome suffix_reduction_check(const Partition& beta, const PAdicContext& ctx, std::size_t m,
                                    VanishingOracle& oracle) {
  if (beta.size() != ctx.n())
    throw std::invalid_argument(beta.to_string() + " is not a partition of " + std::to_string(ctx.n()));
  for (std::size_t t = m; t <= ctx.k(); ++t) {
    if (ctx.d(t) * ctx.power(t) != sum_parts_divisible(beta, ctx.power(t))) return AuditOutcome::inapplicable;
  }
  const Part threshold = capped_power(ctx, m);
  std::vector<Part> rest;
  for (Part c : beta)
    if (c < threshold) rest.push_back(c);
  const Partition suffix(std::move(rest));
  return oracle.is_vanishing(beta) == oracle.is_vanishing(suffix) ? AuditOutcome::holds : AuditOutcome::violated;
}

AuditRecord audit_structure_predicates(const PAdicContext& ctx, VanishingOracle& oracle) {
  if (oracle.p() != ctx.p()) throw std::invalid_argument("oracle prime does not match the context");
  AuditRecord out;
  Auditor audit(ctx, out);
  const Part n = ctx.n();
  const Part p = ctx.p();
  const std::size_t t_max = ctx.k() + 1;

  for (const auto& beta : oracle.vanishing_set(n)) {
    for (std::size_t t = 0; t <= t_max; ++t) {
      const Part q = capped_power(ctx, t);
      const Part top = ctx.d(t) * (t > ctx.k() ? 0 : ctx.power(t));
      const Part above = sum_parts_at_least(beta, q);

      // Parts >= p^t are multiples of p^t once they sum to d_t p^t.
      bool multiples = true;
      for (Part c : beta)
        if (c >= q && c % q != 0) multiples = false;
      audit.record("multiples_above_pt", gate(above == top, multiples), beta, t,
                   "parts >= p^t sum to d_t p^t but one is not a multiple of p^t");

      // Parts >= p^t sum to at most d_t p^t, except p = 3, t = 1, n = 2 mod 3.
      const bool upper_claimed = !(p == 3 && t == 1 && n % 3 == 2);
      audit.record("upper_sum_bound", gate(upper_claimed, above <= top), beta, t,
                   "parts >= p^t sum to more than d_t p^t");
      if (!upper_claimed) audit.informational("upper_sum_bound", above <= top);

      // Parts >= p^t sum to at least d_t p^t on the claimed congruence classes.
      const bool lower_claimed = lower_bound_claimed(p, n, t);
      audit.record("lower_sum_bound", gate(lower_claimed, above >= top), beta, t,
                   "parts >= p^t sum to less than d_t p^t");
      if (!lower_claimed) audit.informational("lower_sum_bound", above >= top);

      // Below the top: parts smaller than e_t must exceed e_t in total. The
      // argument needs p | deg chi^(c,1^(n-c)) for e_t <= n-c < p^t, which
      // holds only for e_t != 0; (8,2,1,1) at p=2, n=12, t=1 fails otherwise.
      const bool excess = sum_parts_below(beta, ctx.e(t)) > ctx.e(t);
      audit.record("small_part_excess", gate(above < top && ctx.e(t) != 0, excess), beta, t,
                   "parts >= p^t fall short of d_t p^t but parts < e_t sum to at most e_t");
      if (above < top && ctx.e(t) == 0) audit.informational("small_part_excess", excess);

      // Smallest part versus the p-power dividing n.
      if (n >= 1 && t <= ctx.k() && n % q == 0) {
        const Part smallest = beta.parts().back();
        bool ok;
        if (q == 2 || q == 3)
          ok = smallest >= q || smallest == 1;
        else if (q == 4)
          ok = smallest >= q || ends_with_small_tail(beta);
        else
          ok = smallest >= q;
        audit.record("smallest_part_bound", ok ? AuditOutcome::holds : AuditOutcome::violated, beta, t,
                     "smallest part below the p-power dividing n outside the allowed shapes");
      } else {
        audit.record("smallest_part_bound", AuditOutcome::inapplicable, beta, t, "");
      }
    }
  }

  for_each_partition(n, [&](const Partition& beta) {
    for (std::size_t m = 0; m <= t_max; ++m) {
      audit.record("suffix_reduction", suffix_reduction_check(beta, ctx, m, oracle), beta, m,
                   "vanishing differs between the class and its parts below p^m");
    }
  });
  return out;
}

ConjectureReport check_conjectures(const PAdicContext& ctx, VanishingOracle& oracle) {
  if (ctx.p() < 5) throw std::invalid_argument("conjecture sweeps require p >= 5");
  if (oracle.p() != ctx.p()) throw std::invalid_argument("oracle prime does not match the context");
  ConjectureReport out;
  const Part a0 = ctx.digit(0);
  for (const auto& beta : oracle.vanishing_set(ctx.n())) {
    if (!is_p_adic_type(beta, ctx)) {
      out.non_adic_vanishing.push_back(Counterexample{"vanishing_iff_adic_type", ctx.n(), ctx.p(), beta,
                                                      std::nullopt, std::nullopt, std::nullopt,
                                                      "p-vanishing class not of p-adic type"});
    }
    if (sum_parts_below(beta, a0) > a0) {
      out.small_part_excess.push_back(Counterexample{"small_parts_sum_bound", ctx.n(), ctx.p(), beta, std::nullopt,
                                                     std::nullopt, std::nullopt,
                                                     "parts below a_0 sum to more than a_0"});
    }
  }
  out.consistent = !out.small_part_excess.empty() || out.non_adic_vanishing.empty();
  return out;
}

}  // namespace pvanish
