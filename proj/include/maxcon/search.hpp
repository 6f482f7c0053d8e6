// search.hpp
// Exhaustive enumeration of equal-magnitude sign-pattern states against
// entanglement predicates, and derivative-free maximization of the minimum
// canonical-cut concurrence on the unit sphere.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "maxcon/criteria.hpp"

namespace maxcon {

enum class Predicate { ME, AME, EME, EE, KUniform };

struct EnumerationQuery {
  int n = 0;
  std::vector<int> support_sizes;  // empty = every size 1..2^n
  Predicate predicate = Predicate::ME;
  int uniformity = 0;              // k for Predicate::KUniform
  // Quotient results by qubit permutation, per-qubit bit flip and global
  // sign; one lexicographically minimal representative per orbit.
  bool dedupe = false;
};

struct EnumerationHit {
  SignPattern pattern;
  Classification classification;
};

struct EnumerationResult {
  std::vector<EnumerationHit> hits;  // lexicographic (support, signs) order
  std::uint64_t patterns_examined = 0;
};

// sum over sizes of C(2^n, s) * 2^s.
std::uint64_t enumeration_cost(int n, const std::vector<int>& support_sizes);

// Exact (integer-arithmetic) scan of every candidate. Queries costing more
// than 2^30 candidates are refused with the estimated count in the message.
EnumerationResult enumerate_patterns(const EnumerationQuery& query);

// Over all supports of the given size and all sign choices, the best
// achievable minimum single-cut concurrence (criteria::odd_support_obstruction
// wraps this for the odd sizes, which provably cannot reach 1).
ObstructionVerdict max_min_single_cut_scan(int n, int support_size);

struct OptimizeConfig {
  int n = 0;
  std::vector<int> cut_sizes;  // restrict the objective; empty = all sizes
  int restarts = 1;
  int max_sweeps = 400;
  double step0 = 0.4;
  double shrink = 0.5;
  double step_tol = 1e-6;
  std::uint64_t seed = 0;
};

struct OptimizeResult {
  PureState state;
  std::vector<CutReport> cuts;      // every canonical cut of the best state
  std::vector<double> trace;        // objective after each accepted step (best restart)
  double objective = 0.0;           // min concurrence over the selected cuts
  bool converged = false;           // the best restart ran its step size down
  int best_restart = 0;
};

// Random unit-vector starts; coordinate perturbation with shrinking step,
// renormalized onto the sphere, accepted on improvement. Deterministic for a
// fixed (seed, config).
OptimizeResult optimize(const OptimizeConfig& cfg);

// Joint evaluation of the three four-qubit double-cut coefficient conditions
// (the "= 0" forms) on the published sixteen-coefficient family, with GHZ4
// and the two-mixed-double-cuts state as references. residual is the largest
// of the three left sides; it stays bounded away from zero on the family.
struct Ame4qProbeRow {
  std::string name;
  double lhs_ab = 0.0, lhs_ac = 0.0, lhs_ad = 0.0;
  double residual = 0.0;
  double min_double_cut = 0.0;
};

struct Ame4qProbe {
  std::vector<Ame4qProbeRow> family;
  std::vector<Ame4qProbeRow> references;
  double min_family_residual = 0.0;
};

Ame4qProbe ame_probe_4q();

}  // namespace maxcon
