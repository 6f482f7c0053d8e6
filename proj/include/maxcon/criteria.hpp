// criteria.hpp
// Cross-term (Gram off-diagonal) machinery behind the maximum-concurrence
// conditions, k-uniformity, and the ME/AME/EME/EE classification.

#pragma once

#include <vector>

#include "maxcon/constructors.hpp"
#include "maxcon/state.hpp"

namespace maxcon {

// Decomposition tr(rho_S^2) = diag_sum + 2 * cross_sum for the cut's Gram
// matrix rho_S = M M^dagger:
//   diag_sum  = sum_i (rho_ii)^2
//   cross_sum = sum_{i<j} |rho_ij|^2
// A cut of size k with all diagonal entries equal to 2^-k ("balanced") has
// concurrence > 1 exactly when cross_sum < 1/4 - 2^-(k+1); that threshold is
// 0 for single cuts and 1/8 for double cuts.
struct CrossTermReport {
  Bipartition cut;
  double diag_sum = 0.0;
  double cross_sum = 0.0;
  double threshold = 0.0;
  bool balanced = false;
  bool satisfied = false;  // balanced && cross_sum < threshold + exact_eps
};

CrossTermReport cross_term_sum(const PureState& state, const Bipartition& cut);

double balanced_threshold(int k);

// One printed coefficient inequality, evaluated symbol-by-symbol from the
// published expansions (independent of the reshaped-Gram path above).
struct InequalityRow {
  Bipartition cut;
  double lhs = 0.0;
  double threshold = 0.0;
  bool balanced = false;
  bool satisfied = false;
};

// The published explicit conditions: three single-cut vanishing-cross-term
// forms for n=3, the three double-cut conditions for n=4, and the ten
// double-cut conditions for n=5. Throws for other n.
std::vector<InequalityRow> explicit_inequalities(const PureState& state);

// Largest k <= floor(n/2) such that every k-qubit reduction has purity
// 2^-k within exact_eps * 2^k (0 if none); smaller k follow automatically.
int k_uniformity(const PureState& state);

struct Classification {
  bool is_product = false;  // every single-qubit reduction pure
  bool is_me = false;       // every single cut at concurrence 1
  int max_uniformity = 0;
  bool is_ame = false;      // max_uniformity == floor(n/2) >= 1
  bool is_ee = false;       // all canonical cuts share one concurrence
  bool is_eme = false;      // shared value is 1
  std::vector<CutReport> evidence;
};

Classification classify(const PureState& state);

// Exhaustive-scan verdict for equal-magnitude real states of a given
// support size: does any reach concurrence 1 on every single cut, and how
// close does the best one get. Odd support sizes never can; see
// odd_support_obstruction.
struct ObstructionVerdict {
  int n = 0;
  int support_size = 0;
  bool me_found = false;
  double best_min_single_cut = 0.0;
  SignPattern witness;  // a pattern attaining best_min_single_cut
};

// Requires odd support_size (even sizes -> "use enumerate") and n in {3,4}.
// Delegates the scan to the search module.
ObstructionVerdict odd_support_obstruction(int n, int support_size);

}  // namespace maxcon
