#include "pvanish/verify.hpp"

#include <set>
#include <sstream>

namespace pvanish {

void SuiteResult::fail(std::string witness) {
  ++violations;
  // Keep output bounded; the count is what matters for the exit code.
  if (witnesses.size() < 20) witnesses.push_back(std::move(witness));
}

namespace {

std::string describe(const Counterexample& c) {
  std::ostringstream os;
  os << c.predicate << " n=" << c.n << " p=" << c.p << " beta=" << c.beta.to_string();
  if (c.t) os << " t=" << *c.t;
  if (c.alpha) os << " alpha=" << c.alpha->to_string();
  if (c.value) os << " value=" << c.value->str();
  return os.str();
}

}  // namespace

SuiteResult verify_singularity_equivalence(const std::vector<Part>& primes, Part max_n) {
  SuiteResult r{"equivalence", "n <= " + std::to_string(max_n), 0, 0, {}};
  for (Part p : primes) {
    for (Part n = 0; n <= max_n; ++n) {
      const PAdicContext ctx(n, p);
      for_each_partition(n, [&](const Partition& alpha) {
        ++r.checked;
        const bool hooks = is_p_singular(alpha, ctx, SingularityMethod::hooks);
        const bool character = is_p_singular(alpha, ctx, SingularityMethod::character);
        const bool b = is_p_singular(alpha, ctx, SingularityMethod::b_invariants);
        const bool deg = is_p_singular(alpha, ctx, SingularityMethod::degree);
        if (!(hooks == character && character == b && b == deg)) {
          std::ostringstream os;
          os << "p=" << p << " alpha=" << alpha << " hooks=" << hooks << " character=" << character
             << " b_invariants=" << b << " degree=" << deg;
          r.fail(os.str());
        }
      });
    }
  }
  return r;
}

SuiteResult verify_orthogonality(Part max_n) {
  SuiteResult r{"orthogonality", "n <= " + std::to_string(max_n), 0, 0, {}};
  for (Part n = 0; n <= max_n; ++n) {
    const CharacterTable table = character_table(n, std::max(max_n, kDefaultTableLimit));
    const std::size_t size = table.labels.size();
    const Integer n_fact = factorial(n);
    std::vector<Integer> z(size);
    for (std::size_t c = 0; c < size; ++c) z[c] = centralizer_order(table.labels[c]);
    for (std::size_t a = 0; a < size; ++a) {
      for (std::size_t b = a; b < size; ++b) {
        ++r.checked;
        Integer column = 0;
        Integer row = 0;
        for (std::size_t k = 0; k < size; ++k) {
          column += Integer(table.values[k][a]) * table.values[k][b];
          row += n_fact / z[k] * table.values[a][k] * table.values[b][k];
        }
        if (column != (a == b ? z[a] : Integer(0)))
          r.fail("column orthogonality n=" + std::to_string(n) + " " + table.labels[a].to_string() + " " +
                 table.labels[b].to_string());
        if (row != (a == b ? n_fact : Integer(0)))
          r.fail("row orthogonality n=" + std::to_string(n) + " " + table.labels[a].to_string() + " " +
                 table.labels[b].to_string());
      }
      // Identity class is the last label in enumeration order.
      ++r.checked;
      if (Integer(table.values[a][size - 1]) != degree(table.labels[a]))
        r.fail("degree mismatch " + table.labels[a].to_string());
    }
  }
  return r;
}

SuiteResult verify_structural_classifier(Part p, Part max_n, const SweepConfig& config) {
  SuiteResult r{"structural", "p=" + std::to_string(p) + " n <= " + std::to_string(max_n), 0, 0, {}};
  VanishingOracle oracle(p, config);
  for (Part n = 0; n <= max_n; ++n) {
    const PAdicContext ctx(n, p);
    for_each_partition(n, [&](const Partition& beta) {
      ++r.checked;
      if (oracle.is_vanishing(beta) != classify_structural(beta, ctx))
        r.fail("p=" + std::to_string(p) + " beta=" + beta.to_string() +
               (oracle.is_vanishing(beta) ? " vanishing but rejected" : " accepted but not vanishing"));
    });
  }
  return r;
}

SuiteResult verify_adic_type_vanishes(Part p, Part max_n, const SweepConfig& config) {
  SuiteResult r{"adic-type", "p=" + std::to_string(p) + " n <= " + std::to_string(max_n), 0, 0, {}};
  VanishingOracle oracle(p, config);
  for (Part n = 0; n <= max_n; ++n) {
    const PAdicContext ctx(n, p);
    for_each_partition(n, [&](const Partition& beta) {
      if (!is_p_adic_type(beta, ctx)) return;
      ++r.checked;
      if (!oracle.is_vanishing(beta)) {
        const auto w = oracle.witness(beta);
        r.fail("p=" + std::to_string(p) + " beta=" + beta.to_string() +
               (w ? " alpha=" + w->alpha.to_string() + " value=" + w->value.str() : std::string()));
      }
    });
  }
  return r;
}

SuiteResult verify_factorization(Part max_n, const std::vector<Part>& rs) {
  SuiteResult r{"factorization", "n <= " + std::to_string(max_n), 0, 0, {}};
  for (Part n = 0; n <= max_n; ++n) {
    for_each_partition(n, [&](const Partition& alpha) {
      for (Part rr : rs) {
        const Part w = r_weight(alpha, rr);
        const auto gammas = enumerate_partitions(w);
        const auto lambdas = enumerate_partitions(n - rr * w);
        for (const auto& gamma : gammas) {
          for (const auto& lambda : lambdas) {
            ++r.checked;
            const Integer lhs = mn_value(alpha, factored_class(rr, gamma, lambda));
            const Integer rhs = factored_value(alpha, rr, gamma, lambda);
            if (lhs != rhs)
              r.fail("alpha=" + alpha.to_string() + " r=" + std::to_string(rr) + " gamma=" + gamma.to_string() +
                     " lambda=" + lambda.to_string() + " direct=" + lhs.str() + " factored=" + rhs.str());
          }
        }
      }
    });
  }
  return r;
}

SuiteResult verify_structure_audits(Part p, Part max_n, const SweepConfig& config) {
  SuiteResult r{"audits", "p=" + std::to_string(p) + " n <= " + std::to_string(max_n), 0, 0, {}};
  VanishingOracle oracle(p, config);
  for (Part n = 0; n <= max_n; ++n) {
    const AuditRecord record = audit_structure_predicates(PAdicContext(n, p), oracle);
    for (const auto& [name, t] : record.tallies) r.checked += t.holds + t.violated;
    for (const auto& c : record.counterexamples) r.fail(describe(c));
  }
  return r;
}

SuiteResult verify_conjectures(Part p, Part max_n, const SweepConfig& config) {
  SuiteResult r{"conjectures", "p=" + std::to_string(p) + " n <= " + std::to_string(max_n), 0, 0, {}};
  VanishingOracle oracle(p, config);
  bool any_excess = false;
  bool any_non_adic = false;
  for (Part n = 0; n <= max_n; ++n) {
    const ConjectureReport report = check_conjectures(PAdicContext(n, p), oracle);
    r.checked += oracle.vanishing_set(n).size();
    any_excess = any_excess || !report.small_part_excess.empty();
    any_non_adic = any_non_adic || !report.non_adic_vanishing.empty();
    for (const auto& c : report.non_adic_vanishing) r.fail(describe(c));
    for (const auto& c : report.small_part_excess) r.fail(describe(c));
  }
  if (!any_excess && any_non_adic) r.fail("sweep inconsistent: sum bound holds but a non-adic class vanishes");
  return r;
}

SuiteResult verify_base_tables() {
  SuiteResult r{"table", "p in {2,3}", 0, 0, {}};
  for (Part p : {Part{2}, Part{3}}) {
    try {
      const auto& table = base_case_table(p);
      const auto& published_bold = published_non_adic_entries(p);
      const std::set<Partition> bold(published_bold.begin(), published_bold.end());
      for (const auto& beta : table) {
        ++r.checked;
        const bool adic = is_p_adic_type(beta, PAdicContext(beta.size(), p));
        if (adic == bold.contains(beta))
          r.fail("p=" + std::to_string(p) + " p-adic flag differs for " + beta.to_string());
      }
    } catch (const std::logic_error& e) {
      r.fail(e.what());
    }
  }
  return r;
}

}  // namespace pvanish
