// state.hpp
// Dense n-qubit pure states, bipartitions, partial trace and the
// bipartite entanglement measures built on tr(rho^2).

#pragma once

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace maxcon {

using cplx = std::complex<double>;

// Tolerances used throughout the toolkit.
inline constexpr double norm_eps = 1e-9;   // unit-norm requirement on states
inline constexpr double exact_eps = 1e-9;  // comparisons of exactly-representable values
inline constexpr double ref_eps = 1e-3;    // published reference values (3-4 digits)

// Violation of a computed-quantity invariant (as opposed to bad caller
// input). The CLI maps this to exit code 3.
class internal_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Pure state of n qubits as a dense amplitude vector over the computational
// basis. Basis index i encodes qubit q in bit (n-1-q), so qubit 0 (label A)
// is the most significant bit and the amplitude list reads in ket order
// |00..0>, |00..1>, ..., |11..1>.
class PureState {
 public:
  // Requires amplitudes.size() == 2^n and unit norm within norm_eps.
  PureState(int n, std::vector<cplx> amplitudes);

  // Rescales to unit norm (no-op when already within norm_eps, so
  // normalization is idempotent bit-for-bit). Throws on a zero vector.
  static PureState normalized(int n, std::vector<cplx> amplitudes);

  int n() const { return n_; }
  std::size_t dim() const { return amp_.size(); }
  const std::vector<cplx>& amplitudes() const { return amp_; }
  const cplx& amp(std::size_t basis_index) const { return amp_.at(basis_index); }

  bool operator==(const PureState&) const = default;

 private:
  struct unchecked_tag {};
  PureState(int n, std::vector<cplx> amplitudes, unchecked_tag);

  int n_;
  std::vector<cplx> amp_;
};

// A cut S|S' of the n qubits, held in canonical form: |S| <= floor(n/2),
// and when |S| == n/2 the side containing qubit 0 is S. Each bipartition
// therefore appears exactly once in canonical_cuts().
class Bipartition {
 public:
  // Accepts any proper nonempty subset (indices in [0,n), no duplicates)
  // and canonicalizes. Throws std::invalid_argument("invalid cut") otherwise.
  Bipartition(int n, std::vector<int> subset);

  // All canonical cuts ordered by size then lexicographic subset:
  // A, B, ..., AB, AC, ... (the conventional listing order).
  static std::vector<Bipartition> canonical_cuts(int n);

  int n() const { return n_; }
  int k() const { return k_; }
  // Bit q set <=> qubit q in S.
  std::uint32_t qubit_mask() const { return qmask_; }
  // Mask over basis-index bits (bit n-1-q for each qubit q in S).
  std::uint32_t index_mask() const;
  std::vector<int> subset() const;
  // "A", "BD", ... (qubit q -> letter 'A'+q).
  std::string label() const;

  bool operator==(const Bipartition&) const = default;

 private:
  int n_;
  int k_;
  std::uint32_t qmask_;
};

// Reduced density matrix of a cut, with spectrum and purity.
// matrix is row-major dim x dim, rows/columns indexed by the kept qubits in
// ascending label order (first kept qubit = most significant row bit).
struct ReducedState {
  int dim = 0;
  std::vector<cplx> matrix;
  std::vector<double> spectrum;  // real, descending
  double purity = 0.0;           // tr(rho^2) = sum |rho_ij|^2
};

// Reduction onto an arbitrary set of kept qubits (no canonicalization;
// 1 <= |kept| <= n-1). Used directly by the complementary-cut symmetry
// checks; partial_trace() below is the canonical-cut entry point.
ReducedState reduce(const PureState& state, std::uint32_t keep_qubit_mask);

// rho_S = Tr_{S'} |psi><psi|. Validates the ReducedState invariants
// (unit trace, eigenvalue range, purity range, eigenvalue-vs-Gram purity
// agreement) and throws internal_error on violation.
ReducedState partial_trace(const PureState& state, const Bipartition& cut);

// tr(rho^2) of the reduction, without building spectra (Gram matrix only).
double cut_purity(const PureState& state, const Bipartition& cut);

inline double purity(const ReducedState& rho) { return rho.purity; }

// Sum of squared eigenvalues; agrees with purity() within 1e-10.
double spectrum_purity(const ReducedState& rho);

// E = sqrt(2(1 - tr rho_S^2)). A radicand in [-1e-9, 0) is rounding and
// clamps to zero; anything more negative is an internal error.
double concurrence_from_purity(double purity_value);
double concurrence(const PureState& state, const Bipartition& cut);

// S = -sum_i lambda_i log2(lambda_i), with 0*log(0) = 0.
double von_neumann_entropy(const ReducedState& rho);

// S_L = 1 - tr(rho^2) = E^2 / 2.
double linear_entropy(const ReducedState& rho);

// sqrt((2^k - 1) / 2^(k-1)): the ceiling on concurrence across a cut of
// size k. Strictly increasing, approaches 2 from below. Throws for k < 1.
double max_concurrence_bound(int k);

// Sum of concurrence over all canonical cuts.
double total_concurrence(const PureState& state);

// Per-cut record assembled from one purity source, so e2 == 2 * linear_entropy
// holds exactly by construction.
struct CutReport {
  Bipartition cut;
  double concurrence = 0.0;         // E
  double e2 = 0.0;                  // E^2
  double purity = 0.0;              // tr(rho_S^2)
  double entropy = 0.0;             // von Neumann, base 2
  double linear_entropy = 0.0;      // 1 - purity
  double bound = 0.0;               // max_concurrence_bound(k)
  bool maximally_mixed = false;     // |purity - 1/dim| <= exact_eps * dim
};

CutReport cut_report(const PureState& state, const Bipartition& cut);

// Reports for every canonical cut, in canonical order.
std::vector<CutReport> analyze(const PureState& state);

}  // namespace maxcon
