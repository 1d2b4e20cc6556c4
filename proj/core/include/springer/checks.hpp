#pragma once

#include <functional>
#include <string>
#include <vector>

#include "springer/char2.hpp"
#include "springer/symbols.hpp"

namespace springer::checks {

/// Normal forms of rank n and defect d found by a bounded search over raw
/// entry sequences, without going through bipartitions. Serves as the
/// oracle for enumerate().
std::vector<Symbol> direct_enumerate(const SymbolParams& params, int n, int d);

/// The Weyl rank of block d in the target decomposition of each group case,
/// written out per case: n-(d^2-d), n-d^2, n-(d^2-1-(d-1)/2), n-(d^2-d/2).
int target_weyl_rank(GroupCase group, int n, int d);

struct CheckResult {
  std::string name;
  bool passed;
  std::string detail;
};

CheckResult check_gf2();
CheckResult check_partition_counts(int max_n);
CheckResult check_enumeration_oracle(int max_n, int max_abs_d);
CheckResult check_symbol_cardinalities(int max_n, int max_abs_d);
CheckResult check_shift_and_similarity(int max_n);
CheckResult check_class_structure(int max_n);
CheckResult check_c_sequences(int max_n);
CheckResult check_bijectivity(GroupCase group, int max_n);
CheckResult check_basis_coherence(GroupCase group, int max_n);
CheckResult check_cardinality_identity(GroupCase group, int max_n);
CheckResult check_cuspidal(int max_size);
CheckResult check_spin(int max_n);
CheckResult check_census(int max_formula_m, int max_enumeration_m);
CheckResult check_sporadic();

/// Every suite, scaled by max_n.
std::vector<CheckResult> run_all(int max_n);

}  // namespace springer::checks
