#include "maxcon/criteria.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <string_view>

#include "maxcon/search.hpp"

namespace maxcon {

namespace {

// Gram data of a cut: diagonal entries of rho_S plus the off-diagonal mass.
struct GramSummary {
  std::vector<double> diag;
  double diag_sum = 0.0;
  double cross_sum = 0.0;
};

GramSummary cut_gram(const PureState& state, const Bipartition& cut) {
  const int n = state.n();
  std::vector<int> kept = cut.subset(), traced;
  for (int q = 0; q < n; ++q)
    if (!(cut.qubit_mask() & (1u << q))) traced.push_back(q);
  const int k = static_cast<int>(kept.size());
  const int t = static_cast<int>(traced.size());
  const int rows = 1 << k, cols = 1 << t;
  std::vector<cplx> m(static_cast<std::size_t>(rows) * cols);
  for (std::size_t x = 0; x < state.dim(); ++x) {
    int row = 0, col = 0;
    for (int j = 0; j < k; ++j) row |= static_cast<int>((x >> (n - 1 - kept[j])) & 1u) << (k - 1 - j);
    for (int j = 0; j < t; ++j) col |= static_cast<int>((x >> (n - 1 - traced[j])) & 1u) << (t - 1 - j);
    m[static_cast<std::size_t>(row) * cols + col] = state.amp(x);
  }
  GramSummary g;
  g.diag.resize(rows);
  for (int i = 0; i < rows; ++i) {
    for (int j = i; j < rows; ++j) {
      cplx dot{};
      for (int c = 0; c < cols; ++c)
        dot += m[static_cast<std::size_t>(i) * cols + c] *
               std::conj(m[static_cast<std::size_t>(j) * cols + c]);
      if (i == j) {
        g.diag[i] = dot.real();
        g.diag_sum += dot.real() * dot.real();
      } else {
        g.cross_sum += std::norm(dot);
      }
    }
  }
  return g;
}

bool diag_balanced(const std::vector<double>& diag) {
  const double target = 1.0 / static_cast<double>(diag.size());
  for (double d : diag)
    if (std::abs(d - target) > exact_eps) return false;
  return true;
}

}  // namespace

double balanced_threshold(int k) {
  if (k < 1) throw std::invalid_argument("cut size must be >= 1");
  return 0.25 - std::pow(2.0, -(k + 1));
}

CrossTermReport cross_term_sum(const PureState& state, const Bipartition& cut) {
  if (cut.n() != state.n()) throw std::invalid_argument("invalid cut");
  const GramSummary g = cut_gram(state, cut);
  CrossTermReport rep{.cut = cut};
  rep.diag_sum = g.diag_sum;
  rep.cross_sum = g.cross_sum;
  rep.threshold = balanced_threshold(cut.k());
  rep.balanced = diag_balanced(g.diag);
  rep.satisfied = rep.balanced && rep.cross_sum < rep.threshold + exact_eps;
  return rep;
}

namespace {

// The published coefficient conditions, written exactly as printed with one
// letter per amplitude in index order. For five qubits the tail of the
// alphabet runs out and the Greek letters are encoded A(alpha) B(beta)
// G(gamma) D(delta) T(theta) F(phi), i.e. indices 26..31.
struct LiteralCondition {
  const char* cut;
  const char* terms[6];  // n=3 uses only the first slot
};

constexpr LiteralCondition k_three_qubit[] = {
    {"A", {"ae bf cg dh"}},
    {"B", {"ac bd eg fh"}},
    {"C", {"ab cd ef gh"}},
};

constexpr LiteralCondition k_four_qubit[] = {
    {"AB",
     {"ae bf cg dh", "ai bj ck dl", "am bn co dp", "em fn go hp", "im jn ko lp", "ei fj gk hl"}},
    {"AC",
     {"ac bd eg fh", "ai bj em fn", "ak bl eo fp", "ck dl go hp", "ik jl mo np", "ic jd mg nh"}},
    {"AD",
     {"ab cd ef gh", "ai ck em go", "aj cl en gp", "bj dl fn hp", "ij kl mn op", "bi dk fm ho"}},
};

constexpr LiteralCondition k_five_qubit[] = {
    {"AB",
     {"ai bj ck dl em fn go hp", "aq br cs dt eu fv gw hx", "ay bz cA dB eG fD gT hF",
      "iy jz kA lB mG nD oT pF", "qy rz sA tB uG vD wT xF", "iq jr ks lt mu nv ow px"}},
    {"AC",
     {"ae bf cg dh im jn ko lp", "aq br cs dt iy jz kA lB", "au bv cw dx iG jD kT lF",
      "eu fv gw hx mG nD oT pF", "qu rv sw tx yG zD AT BF", "eq fr gs ht my nz oA pB"}},
    {"AD",
     {"ac bd eg fh ik jl mo np", "aq br eu fv iy jz mG nD", "as bt ew fx iA jB mT nF",
      "cs dt gw hx kA lB oT pF", "qs rt uw vx yA zB GT DF", "cq dr gu hv ky lz oG pD"}},
    {"AE",
     {"ab cd ef gh ij kl mn op", "aq cs eu gw iy kA mG oT", "ar ct ev gx iz kB mD oF",
      "br dt fv hx jz lB nD pF", "qr st uv wx yz AB GD TF", "bq ds fu hw jy lA nG pT"}},
    {"BC",
     {"ae bf cg dh qu rv sw tx", "ai bj ck dl qy rz sA tB", "am bn co dp qG rD sT tF",
      "em fn go hp uG vD wT xF", "im jn ko lp yG zD AT BF", "ei fj gk hl uy vz wA xB"}},
    {"BD",
     {"ac bd eg fh qs rt uw vx", "ai bj em fn qy rz uG vD", "ak bl eo fp qA rB uT vF",
      "ck dl go hp sA tB wT xF", "ik jl mo np yA zB GT DF", "ci dj gm hn sy tz wG xD"}},
    {"BE",
     {"ab cd ef gh qr st uv wx", "ai ck em go qy sA uG wT", "aj cl en gp qz sB uD wF",
      "bj dl fn hp rz tB vD xF", "ij kl mn op yz AB GD TF", "bi dk fm ho ry tA vG xT"}},
    {"CD",
     {"ac bd ik jl qs rt yA zB", "ae bf im jn qu rv yG zD", "ag bh io jp qw rx yT zF",
      "cg dh ko lp sw tx AT BF", "eg fh mo np uw vx GT DF", "ce df km ln su tv AG BD"}},
    {"CE",
     {"ab cd ij kl qr st yz AB", "ae cg im ko qu sw yG AT", "af ch in kp qv sx yD AF",
      "bf dh jn lp rv tx zD BF", "ef gh mn op uv wx GD TF", "be dg jm lo ru tw zG BT"}},
    {"DE",
     {"ab ef ij mn qr uv yz GD", "ac eg ik mo qs uw yA GT", "ad eh il mp qt ux yB GF",
      "bd fh jl np rt vx zB DF", "cd gh kl op st wx AB TF", "bc fg jk no rs vw zA DT"}},
};

int letter_index(char c) {
  if (c >= 'a' && c <= 'z') return c - 'a';
  switch (c) {
    case 'A': return 26;  // alpha
    case 'B': return 27;  // beta
    case 'G': return 28;  // gamma
    case 'D': return 29;  // delta
    case 'T': return 30;  // theta
    case 'F': return 31;  // phi
  }
  throw internal_error("literal condition: unknown amplitude letter");
}

double literal_lhs(const std::vector<cplx>& amp, const LiteralCondition& cond, int nterms) {
  double lhs = 0.0;
  for (int t = 0; t < nterms; ++t) {
    cplx sum{};
    const std::string_view term(cond.terms[t]);
    for (std::size_t i = 0; i + 1 < term.size(); i += 3)
      sum += amp[letter_index(term[i])] * std::conj(amp[letter_index(term[i + 1])]);
    lhs += std::norm(sum);
  }
  return lhs;
}

}  // namespace

std::vector<InequalityRow> explicit_inequalities(const PureState& state) {
  const int n = state.n();
  const LiteralCondition* conds = nullptr;
  int count = 0, nterms = 0;
  switch (n) {
    case 3: conds = k_three_qubit; count = 3; nterms = 1; break;
    case 4: conds = k_four_qubit; count = 3; nterms = 6; break;
    case 5: conds = k_five_qubit; count = 10; nterms = 6; break;
    default:
      throw std::invalid_argument("explicit forms cover n <= 5; use cross_term_sum");
  }
  const auto& amp = state.amplitudes();
  std::vector<InequalityRow> rows;
  rows.reserve(count);
  for (int i = 0; i < count; ++i) {
    std::vector<int> subset;
    for (const char* c = conds[i].cut; *c; ++c) subset.push_back(*c - 'A');
    Bipartition cut(n, subset);
    InequalityRow row{.cut = cut};
    row.lhs = literal_lhs(amp, conds[i], nterms);
    row.threshold = balanced_threshold(cut.k());
    row.balanced = diag_balanced(cut_gram(state, cut).diag);
    row.satisfied = row.balanced && row.lhs < row.threshold + exact_eps;
    rows.push_back(row);
  }
  return rows;
}

namespace {

bool all_k_subsets_maximally_mixed(const PureState& state, int k) {
  const int n = state.n();
  const double target = std::pow(2.0, -k);
  const double tol = exact_eps * std::pow(2.0, k);
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    if (std::abs(cut_purity(state, Bipartition(n, idx)) - target) > tol) return false;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return true;
}

}  // namespace

int k_uniformity(const PureState& state) {
  int best = 0;
  for (int k = 1; 2 * k <= state.n(); ++k) {
    if (!all_k_subsets_maximally_mixed(state, k)) break;
    best = k;
  }
  return best;
}

Classification classify(const PureState& state) {
  Classification c;
  c.evidence = analyze(state);
  const int n = state.n();

  bool product = true, me = true;
  for (const CutReport& rep : c.evidence) {
    if (rep.cut.k() != 1) continue;
    // Product test on purity: near-separable states put E at sqrt-of-ulp
    // scale, so concurrence is the wrong variable to threshold here.
    if (rep.purity < 1.0 - exact_eps) product = false;
    if (std::abs(rep.concurrence - 1.0) > exact_eps) me = false;
  }
  c.is_product = product;
  c.is_me = !c.evidence.empty() && me;
  c.max_uniformity = k_uniformity(state);
  c.is_ame = n >= 2 && c.max_uniformity == n / 2;

  if (!c.evidence.empty()) {
    double lo = c.evidence.front().concurrence, hi = lo;
    bool all_one = true;
    for (const CutReport& rep : c.evidence) {
      lo = std::min(lo, rep.concurrence);
      hi = std::max(hi, rep.concurrence);
      if (std::abs(rep.concurrence - 1.0) > exact_eps) all_one = false;
    }
    c.is_ee = hi - lo <= exact_eps;
    c.is_eme = all_one;
  }
  return c;
}

ObstructionVerdict odd_support_obstruction(int n, int support_size) {
  if (n != 3 && n != 4)
    throw std::invalid_argument("odd_support_obstruction: supported for n in {3, 4}");
  if (support_size < 1 || support_size > (1 << n))
    throw std::invalid_argument("odd_support_obstruction: support size out of range");
  if (support_size % 2 == 0) throw std::invalid_argument("use enumerate");
  return max_min_single_cut_scan(n, support_size);
}

}  // namespace maxcon
