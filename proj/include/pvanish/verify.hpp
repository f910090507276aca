#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "pvanish/vanishing.hpp"

namespace pvanish {

struct SuiteResult {
  std::string name;
  std::string scope;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::vector<std::string> witnesses;

  bool passed() const { return violations == 0; }
  void fail(std::string witness);
};

/// All four singularity methods agree for every alpha |- n <= max_n.
SuiteResult verify_singularity_equivalence(const std::vector<Part>& primes, Part max_n);

/// Row and column orthogonality of the character table and agreement of
/// the first column with hook-formula degrees, n <= max_n.
SuiteResult verify_orthogonality(Part max_n);

/// Brute-force vanishing equals the structural classifier, n <= max_n.
SuiteResult verify_structural_classifier(Part p, Part max_n, const SweepConfig& config);

/// Every p-adic-type class is p-vanishing, n <= max_n.
SuiteResult verify_adic_type_vanishes(Part p, Part max_n, const SweepConfig& config);

/// factored_value agrees with mn_value on the merged class for every alpha
/// |- n <= max_n, r in rs, gamma |- w_r(alpha), lambda |- n - r w_r(alpha).
SuiteResult verify_factorization(Part max_n, const std::vector<Part>& rs);

/// Structure predicates and suffix reduction, n <= max_n.
SuiteResult verify_structure_audits(Part p, Part max_n, const SweepConfig& config);

/// Conjecture sweep for p >= 5: reports "no counterexample found" when both
/// lists stay empty up to max_n.
SuiteResult verify_conjectures(Part p, Part max_n, const SweepConfig& config);

/// Brute-force base-case tables equal the published ones, including which
/// entries are not of p-adic type.
SuiteResult verify_base_tables();

}  // namespace pvanish
