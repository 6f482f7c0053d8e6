#include "maxcon/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "maxcon/hermitian.hpp"

namespace maxcon {

namespace {

std::size_t checked_dim(int n) {
  if (n < 1 || n > 16) throw std::invalid_argument("qubit count must be in [1, 16]");
  return std::size_t{1} << n;
}

double norm_squared(const std::vector<cplx>& amps) {
  double s = 0.0;
  for (const cplx& a : amps) s += std::norm(a);
  return s;
}

}  // namespace

PureState::PureState(int n, std::vector<cplx> amplitudes, unchecked_tag)
    : n_(n), amp_(std::move(amplitudes)) {}

PureState::PureState(int n, std::vector<cplx> amplitudes) : n_(n), amp_(std::move(amplitudes)) {
  if (amp_.size() != checked_dim(n)) throw std::invalid_argument("amplitude count must be 2^n");
  if (std::abs(std::sqrt(norm_squared(amp_)) - 1.0) > norm_eps)
    throw std::invalid_argument("state not normalized");
}

PureState PureState::normalized(int n, std::vector<cplx> amplitudes) {
  if (amplitudes.size() != checked_dim(n))
    throw std::invalid_argument("amplitude count must be 2^n");
  const double nrm = std::sqrt(norm_squared(amplitudes));
  if (!(nrm > 1e-150)) throw std::invalid_argument("null state");
  if (std::abs(nrm - 1.0) > norm_eps) {
    for (cplx& a : amplitudes) a /= nrm;
  }
  return PureState(n, std::move(amplitudes), unchecked_tag{});
}

Bipartition::Bipartition(int n, std::vector<int> subset) : n_(n), k_(0), qmask_(0) {
  checked_dim(n);
  std::sort(subset.begin(), subset.end());
  if (subset.empty() || static_cast<int>(subset.size()) >= n)
    throw std::invalid_argument("invalid cut");
  std::uint32_t mask = 0;
  for (int q : subset) {
    if (q < 0 || q >= n || (mask & (1u << q))) throw std::invalid_argument("invalid cut");
    mask |= 1u << q;
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  const int size = static_cast<int>(subset.size());
  // Canonical side: the smaller one; on a tie, the one holding qubit 0.
  if (2 * size > n || (2 * size == n && !(mask & 1u))) mask = full & ~mask;
  qmask_ = mask;
  k_ = std::popcount(qmask_);
}

std::vector<Bipartition> Bipartition::canonical_cuts(int n) {
  checked_dim(n);
  std::vector<Bipartition> cuts;
  for (int k = 1; 2 * k <= n; ++k) {
    // Subsets of size k in lexicographic order.
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      if (2 * k < n || idx[0] == 0) cuts.emplace_back(n, idx);
      int i = k - 1;
      while (i >= 0 && idx[i] == n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return cuts;
}

std::uint32_t Bipartition::index_mask() const {
  std::uint32_t m = 0;
  for (int q = 0; q < n_; ++q)
    if (qmask_ & (1u << q)) m |= 1u << (n_ - 1 - q);
  return m;
}

std::vector<int> Bipartition::subset() const {
  std::vector<int> s;
  for (int q = 0; q < n_; ++q)
    if (qmask_ & (1u << q)) s.push_back(q);
  return s;
}

std::string Bipartition::label() const {
  std::string s;
  for (int q : subset()) s += static_cast<char>('A' + q);
  return s;
}

namespace {

// Amplitude matrix of the cut: rows indexed by the kept qubits (first kept
// qubit = most significant row bit), columns by the traced-out qubits.
struct CutMatrix {
  int rows = 0, cols = 0;
  std::vector<cplx> m;
};

CutMatrix cut_matrix(const PureState& state, std::uint32_t keep_qubit_mask) {
  const int n = state.n();
  std::vector<int> kept, traced;
  for (int q = 0; q < n; ++q) {
    if (keep_qubit_mask & (1u << q))
      kept.push_back(q);
    else
      traced.push_back(q);
  }
  if (kept.empty() || traced.empty()) throw std::invalid_argument("invalid cut");

  CutMatrix cm;
  cm.rows = 1 << kept.size();
  cm.cols = 1 << traced.size();
  cm.m.assign(static_cast<std::size_t>(cm.rows) * cm.cols, cplx{});
  const int k = static_cast<int>(kept.size());
  const int t = static_cast<int>(traced.size());
  for (std::size_t x = 0; x < state.dim(); ++x) {
    int row = 0, col = 0;
    for (int j = 0; j < k; ++j) row |= static_cast<int>((x >> (n - 1 - kept[j])) & 1u) << (k - 1 - j);
    for (int j = 0; j < t; ++j) col |= static_cast<int>((x >> (n - 1 - traced[j])) & 1u) << (t - 1 - j);
    cm.m[static_cast<std::size_t>(row) * cm.cols + col] = state.amp(x);
  }
  return cm;
}

void validate_reduction(const ReducedState& r) {
  double tr = 0.0, lam_sum = 0.0;
  for (int i = 0; i < r.dim; ++i) tr += r.matrix[static_cast<std::size_t>(i) * r.dim + i].real();
  for (double lam : r.spectrum) {
    if (lam < -norm_eps || lam > 1.0 + norm_eps)
      throw internal_error("reduced state: eigenvalue out of range");
    lam_sum += lam;
  }
  if (std::abs(tr - 1.0) > norm_eps) throw internal_error("reduced state: trace != 1");
  if (std::abs(lam_sum - 1.0) > norm_eps) throw internal_error("reduced state: eigenvalue sum != 1");
  if (r.purity < 1.0 / r.dim - norm_eps || r.purity > 1.0 + norm_eps)
    throw internal_error("reduced state: purity out of range");
  double lam2 = 0.0;
  for (double lam : r.spectrum) lam2 += lam * lam;
  if (std::abs(lam2 - r.purity) > 1e-10)
    throw internal_error("reduced state: eigenvalue purity disagrees with Gram purity");
}

}  // namespace

ReducedState reduce(const PureState& state, std::uint32_t keep_qubit_mask) {
  const CutMatrix cm = cut_matrix(state, keep_qubit_mask);
  ReducedState r;
  r.dim = cm.rows;
  r.matrix.assign(static_cast<std::size_t>(r.dim) * r.dim, cplx{});
  for (int i = 0; i < r.dim; ++i) {
    for (int j = i; j < r.dim; ++j) {
      cplx dot{};
      for (int c = 0; c < cm.cols; ++c)
        dot += cm.m[static_cast<std::size_t>(i) * cm.cols + c] *
               std::conj(cm.m[static_cast<std::size_t>(j) * cm.cols + c]);
      r.matrix[static_cast<std::size_t>(i) * r.dim + j] = dot;
      if (j != i) r.matrix[static_cast<std::size_t>(j) * r.dim + i] = std::conj(dot);
    }
  }
  double pur = 0.0;
  for (const cplx& e : r.matrix) pur += std::norm(e);
  r.purity = pur;
  r.spectrum = hermitian_eigenvalues(r.matrix, r.dim);
  validate_reduction(r);
  return r;
}

ReducedState partial_trace(const PureState& state, const Bipartition& cut) {
  if (cut.n() != state.n()) throw std::invalid_argument("invalid cut");
  return reduce(state, cut.qubit_mask());
}

double cut_purity(const PureState& state, const Bipartition& cut) {
  if (cut.n() != state.n()) throw std::invalid_argument("invalid cut");
  const CutMatrix cm = cut_matrix(state, cut.qubit_mask());
  double pur = 0.0;
  for (int i = 0; i < cm.rows; ++i) {
    for (int j = i; j < cm.rows; ++j) {
      cplx dot{};
      for (int c = 0; c < cm.cols; ++c)
        dot += cm.m[static_cast<std::size_t>(i) * cm.cols + c] *
               std::conj(cm.m[static_cast<std::size_t>(j) * cm.cols + c]);
      pur += (i == j) ? std::norm(dot) : 2.0 * std::norm(dot);
    }
  }
  return pur;
}

double spectrum_purity(const ReducedState& rho) {
  double s = 0.0;
  for (double lam : rho.spectrum) s += lam * lam;
  return s;
}

double concurrence_from_purity(double purity_value) {
  const double rad = 2.0 * (1.0 - purity_value);
  if (rad < 0.0) {
    if (rad < -norm_eps) throw internal_error("concurrence: negative radicand beyond tolerance");
    return 0.0;
  }
  return std::sqrt(rad);
}

double concurrence(const PureState& state, const Bipartition& cut) {
  return concurrence_from_purity(cut_purity(state, cut));
}

double von_neumann_entropy(const ReducedState& rho) {
  double s = 0.0;
  for (double lam : rho.spectrum) {
    if (lam > 1e-300) s -= lam * std::log2(lam);
  }
  return s;
}

double linear_entropy(const ReducedState& rho) { return 1.0 - rho.purity; }

double max_concurrence_bound(int k) {
  if (k < 1) throw std::invalid_argument("cut size must be >= 1");
  return std::sqrt(2.0 - std::pow(2.0, 1.0 - k));
}

double total_concurrence(const PureState& state) {
  double total = 0.0;
  for (const Bipartition& cut : Bipartition::canonical_cuts(state.n()))
    total += concurrence(state, cut);
  return total;
}

CutReport cut_report(const PureState& state, const Bipartition& cut) {
  const ReducedState rho = partial_trace(state, cut);
  CutReport rep{.cut = cut};
  rep.purity = rho.purity;
  rep.linear_entropy = 1.0 - rho.purity;
  rep.e2 = 2.0 * rep.linear_entropy;
  rep.concurrence = concurrence_from_purity(rho.purity);
  rep.entropy = von_neumann_entropy(rho);
  rep.bound = max_concurrence_bound(cut.k());
  rep.maximally_mixed = std::abs(rho.purity - 1.0 / rho.dim) <= exact_eps * rho.dim;
  return rep;
}

std::vector<CutReport> analyze(const PureState& state) {
  std::vector<CutReport> reports;
  for (const Bipartition& cut : Bipartition::canonical_cuts(state.n()))
    reports.push_back(cut_report(state, cut));
  return reports;
}

}  // namespace maxcon
