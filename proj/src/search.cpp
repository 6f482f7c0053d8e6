#include "maxcon/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>

#include "maxcon/catalog.hpp"

namespace maxcon {

namespace {

// Indices whose bit b is zero, tabulated over 32-bit index space.
constexpr std::uint32_t k_zero_side[5] = {0x55555555u, 0x33333333u, 0x0F0F0F0Fu, 0x00FF00FFu,
                                          0x0000FFFFu};

// Gosper: next mask with the same popcount.
std::uint64_t next_same_popcount(std::uint64_t x) {
  const std::uint64_t u = x & (~x + 1);
  const std::uint64_t v = x + u;
  if (v == 0) return 0;
  return v + (((v ^ x) / u) >> 2);
}

std::uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t num = 1, den = 1;
  for (int i = 1; i <= k; ++i) {
    num *= static_cast<std::uint64_t>(n - k + i);
    den *= static_cast<std::uint64_t>(i);
    const std::uint64_t g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  return num / den;
}

// Scatter the low s bits of g onto the set bits of support (ascending).
std::uint32_t deposit_signs(std::uint32_t g, std::uint32_t support) {
  std::uint32_t out = 0;
  while (support) {
    const std::uint32_t lsb = support & (~support + 1);
    if (g & 1u) out |= lsb;
    g >>= 1;
    support ^= lsb;
  }
  return out;
}

// s^2 * tr(rho^2) of the cut given by an index-bit mask, as an exact integer.
// rho is the Gram matrix of the equal-magnitude state with support S and
// negative signs G (subset of S).
std::int64_t purity_numerator(int n, std::uint32_t S, std::uint32_t G, std::uint32_t cut_bits) {
  const int dim = 1 << n;
  const int k = std::popcount(cut_bits);
  const int rows = 1 << k;
  // Row assignment -> its placement on the cut bits.
  std::array<std::int32_t, 32> placed{};
  {
    std::array<int, 5> bits{};
    int t = 0;
    for (int b = n - 1; b >= 0; --b)
      if (cut_bits & (1u << b)) bits[t++] = b;
    for (int r = 0; r < rows; ++r) {
      std::uint32_t p = 0;
      for (int j = 0; j < k; ++j)
        if (r & (1 << (k - 1 - j))) p |= 1u << bits[j];
      placed[r] = static_cast<std::int32_t>(p);
    }
  }
  std::int64_t acc = 0;
  for (int r = 0; r < rows; ++r) {
    int cnt = 0;
    for (int x = 0; x < dim; ++x)
      if ((x & static_cast<int>(cut_bits)) == placed[r] && (S >> x & 1u)) ++cnt;
    acc += static_cast<std::int64_t>(cnt) * cnt;
  }
  for (int r1 = 0; r1 < rows; ++r1) {
    for (int r2 = r1 + 1; r2 < rows; ++r2) {
      const std::uint32_t diff = static_cast<std::uint32_t>(placed[r1] ^ placed[r2]);
      std::int64_t dot = 0;
      for (int x = 0; x < dim; ++x) {
        if ((x & static_cast<int>(cut_bits)) != placed[r1] || !(S >> x & 1u)) continue;
        const int y = x ^ static_cast<int>(diff);
        if (!(S >> y & 1u)) continue;
        dot += ((G >> x ^ G >> y) & 1u) ? -1 : 1;
      }
      acc += 2 * dot * dot;
    }
  }
  return acc;
}

// Fast single-cut path: 2 * N == s^2 for every single cut <=> ME.
bool me_pattern(int n, std::uint32_t S, std::uint32_t G, int s) {
  const std::int64_t s2 = static_cast<std::int64_t>(s) * s;
  for (int b = 0; b < n; ++b) {
    const std::uint32_t zero = k_zero_side[b];
    const int c0 = std::popcount(S & zero);
    const int c1 = s - c0;
    const std::uint32_t pairs = S & (S >> (1 << b)) & zero;
    const int neg = std::popcount((G ^ (G >> (1 << b))) & pairs);
    const std::int64_t dot = std::popcount(pairs) - 2 * neg;
    const std::int64_t num =
        static_cast<std::int64_t>(c0) * c0 + static_cast<std::int64_t>(c1) * c1 + 2 * dot * dot;
    if (2 * num != s2) return false;
  }
  return true;
}

struct PredicateContext {
  int n = 0;
  Predicate predicate = Predicate::ME;
  std::vector<std::uint32_t> canonical_bits;  // canonical cuts as index masks
  std::vector<std::uint32_t> uniform_bits;    // all k-subsets for (A)ME uniformity
};

PredicateContext make_context(const EnumerationQuery& q) {
  PredicateContext ctx;
  ctx.n = q.n;
  ctx.predicate = q.predicate;
  for (const Bipartition& cut : Bipartition::canonical_cuts(q.n))
    ctx.canonical_bits.push_back(cut.index_mask());
  int k = 0;
  if (q.predicate == Predicate::AME) k = q.n / 2;
  if (q.predicate == Predicate::KUniform) {
    k = q.uniformity;
    if (k < 1 || 2 * k > q.n)
      throw std::invalid_argument("uniformity must be in [1, floor(n/2)]");
  }
  if (k > 0) {
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      std::uint32_t bits = 0;
      for (int qb : idx) bits |= 1u << (q.n - 1 - qb);
      ctx.uniform_bits.push_back(bits);
      int i = k - 1;
      while (i >= 0 && idx[i] == q.n - k + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
  return ctx;
}

bool pattern_satisfies(const PredicateContext& ctx, std::uint32_t S, std::uint32_t G, int s) {
  const std::int64_t s2 = static_cast<std::int64_t>(s) * s;
  switch (ctx.predicate) {
    case Predicate::ME:
      return me_pattern(ctx.n, S, G, s);
    case Predicate::EME:
      for (std::uint32_t bits : ctx.canonical_bits)
        if (2 * purity_numerator(ctx.n, S, G, bits) != s2) return false;
      return true;
    case Predicate::EE: {
      std::int64_t first = -1;
      for (std::uint32_t bits : ctx.canonical_bits) {
        const std::int64_t num = purity_numerator(ctx.n, S, G, bits);
        if (first < 0)
          first = num;
        else if (num != first)
          return false;
      }
      return true;
    }
    case Predicate::AME:
    case Predicate::KUniform: {
      const int k = std::popcount(ctx.uniform_bits.front());
      for (std::uint32_t bits : ctx.uniform_bits)
        if ((std::int64_t{1} << k) * purity_numerator(ctx.n, S, G, bits) != s2) return false;
      return true;
    }
  }
  return false;
}

SignPattern make_pattern(int n, std::uint32_t S, std::uint32_t G) {
  SignPattern p;
  p.n = n;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    if (!(S >> x & 1u)) continue;
    p.support.push_back(x);
    p.signs.push_back((G >> x & 1u) ? -1 : 1);
  }
  return p;
}

// --- orbit canonicalization (dedupe) ------------------------------------

std::uint32_t permute_index(std::uint32_t x, int n, const std::vector<int>& perm) {
  // Qubit q of x becomes qubit perm[q]; qubit q sits in index bit n-1-q.
  std::uint32_t y = 0;
  for (int q = 0; q < n; ++q)
    if (x >> (n - 1 - q) & 1u) y |= 1u << (n - 1 - perm[q]);
  return y;
}

std::uint64_t pattern_key(std::uint32_t S, std::uint32_t G) {
  return (static_cast<std::uint64_t>(S) << 32) | G;
}

std::uint64_t orbit_canonical_key(int n, std::uint32_t S, std::uint32_t G) {
  const std::uint32_t dim = 1u << n;
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    // Table for this permutation, then every flip mask over index bits.
    std::array<std::uint32_t, 32> table{};
    for (std::uint32_t x = 0; x < dim; ++x) table[x] = permute_index(x, n, perm);
    for (std::uint32_t flip = 0; flip < dim; ++flip) {
      std::uint32_t S2 = 0, G2 = 0;
      for (std::uint32_t x = 0; x < dim; ++x) {
        if (!(S >> x & 1u)) continue;
        const std::uint32_t y = table[x] ^ flip;
        S2 |= 1u << y;
        if (G >> x & 1u) G2 |= 1u << y;
      }
      best = std::min(best, pattern_key(S2, G2));
      best = std::min(best, pattern_key(S2, S2 ^ G2));  // global sign
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace

std::uint64_t enumeration_cost(int n, const std::vector<int>& support_sizes) {
  const int dim = 1 << n;
  std::vector<int> sizes = support_sizes;
  if (sizes.empty())
    for (int s = 1; s <= dim; ++s) sizes.push_back(s);
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());
  std::uint64_t total = 0;
  for (int s : sizes) {
    if (s < 1 || s > dim) throw std::invalid_argument("support size out of range");
    total += binom(dim, s) << s;
  }
  return total;
}

EnumerationResult enumerate_patterns(const EnumerationQuery& query) {
  if (query.n < 2 || query.n > 5)
    throw std::invalid_argument("enumeration supports n in [2, 5]");
  const std::uint64_t cost = enumeration_cost(query.n, query.support_sizes);
  if (cost > (std::uint64_t{1} << 30))
    throw std::invalid_argument("enumeration too large: " + std::to_string(cost) +
                                " candidate patterns (limit 2^30)");

  const int dim = 1 << query.n;
  std::vector<int> sizes = query.support_sizes;
  if (sizes.empty())
    for (int s = 1; s <= dim; ++s) sizes.push_back(s);
  std::sort(sizes.begin(), sizes.end());
  sizes.erase(std::unique(sizes.begin(), sizes.end()), sizes.end());

  const PredicateContext ctx = make_context(query);
  EnumerationResult result;
  for (int s : sizes) {
    const std::uint64_t last = (std::uint64_t{1} << dim) - (std::uint64_t{1} << (dim - s));
    std::uint64_t S = (std::uint64_t{1} << s) - 1;
    while (true) {
      const auto S32 = static_cast<std::uint32_t>(S);
      for (std::uint32_t g = 0; g < (1u << s); ++g) {
        ++result.patterns_examined;
        const std::uint32_t G = deposit_signs(g, S32);
        if (!pattern_satisfies(ctx, S32, G, s)) continue;
        if (query.dedupe &&
            orbit_canonical_key(query.n, S32, G) != pattern_key(S32, G))
          continue;
        SignPattern p = make_pattern(query.n, S32, G);
        Classification c = classify(from_sign_pattern(p));
        result.hits.push_back({std::move(p), std::move(c)});
      }
      if (S == last) break;
      S = next_same_popcount(S);
    }
  }
  std::sort(result.hits.begin(), result.hits.end(),
            [](const EnumerationHit& a, const EnumerationHit& b) {
              if (a.pattern.support != b.pattern.support)
                return a.pattern.support < b.pattern.support;
              return a.pattern.signs < b.pattern.signs;
            });
  return result;
}

ObstructionVerdict max_min_single_cut_scan(int n, int support_size) {
  if (n < 2 || n > 5) throw std::invalid_argument("scan supports n in [2, 5]");
  const int dim = 1 << n;
  if (support_size < 1 || support_size > dim)
    throw std::invalid_argument("support size out of range");

  const int s = support_size;
  const std::int64_t s2 = static_cast<std::int64_t>(s) * s;
  std::int64_t best_worst = std::numeric_limits<std::int64_t>::max();
  std::uint32_t best_S = 0, best_G = 0;

  const std::uint64_t last = (std::uint64_t{1} << dim) - (std::uint64_t{1} << (dim - s));
  std::uint64_t S = (std::uint64_t{1} << s) - 1;
  while (true) {
    const auto S32 = static_cast<std::uint32_t>(S);
    // Per-cut data that depends only on the support.
    std::array<int, 5> c0{};
    std::array<std::uint32_t, 5> pairs{};
    for (int b = 0; b < n; ++b) {
      c0[b] = std::popcount(S32 & k_zero_side[b]);
      pairs[b] = S32 & (S32 >> (1 << b)) & k_zero_side[b];
    }
    for (std::uint32_t g = 0; g < (1u << s); ++g) {
      const std::uint32_t G = deposit_signs(g, S32);
      std::int64_t worst = 0;
      for (int b = 0; b < n; ++b) {
        const int neg = std::popcount((G ^ (G >> (1 << b))) & pairs[b]);
        const std::int64_t dot = std::popcount(pairs[b]) - 2 * neg;
        const std::int64_t num = static_cast<std::int64_t>(c0[b]) * c0[b] +
                                 static_cast<std::int64_t>(s - c0[b]) * (s - c0[b]) +
                                 2 * dot * dot;
        worst = std::max(worst, num);
      }
      if (worst < best_worst) {
        best_worst = worst;
        best_S = S32;
        best_G = G;
      }
    }
    if (S == last) break;
    S = next_same_popcount(S);
  }

  ObstructionVerdict verdict;
  verdict.n = n;
  verdict.support_size = s;
  verdict.me_found = (2 * best_worst == s2);
  verdict.best_min_single_cut =
      std::sqrt(std::max(0.0, 2.0 * (1.0 - static_cast<double>(best_worst) / s2)));
  verdict.witness = make_pattern(n, best_S, best_G);
  return verdict;
}

// --- optimizer ------------------------------------------------------------

namespace {

double unit_double(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

// Box-Muller on raw engine words keeps the stream identical across
// standard libraries.
class Gaussian {
 public:
  explicit Gaussian(std::uint64_t seed) : rng_(seed) {}
  double operator()() {
    const double u = std::max(unit_double(rng_()), 0x1.0p-60);
    const double v = unit_double(rng_());
    return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586 * v);
  }

 private:
  std::mt19937_64 rng_;
};

struct CutPlan {
  int rows = 0, cols = 0;
  std::array<std::uint8_t, 32> row{}, col{};
};

std::vector<CutPlan> make_plans(int n, const std::vector<int>& cut_sizes) {
  std::vector<CutPlan> plans;
  for (const Bipartition& cut : Bipartition::canonical_cuts(n)) {
    if (!cut_sizes.empty() &&
        std::find(cut_sizes.begin(), cut_sizes.end(), cut.k()) == cut_sizes.end())
      continue;
    CutPlan plan;
    const auto kept = cut.subset();
    std::vector<int> traced;
    for (int q = 0; q < n; ++q)
      if (!(cut.qubit_mask() & (1u << q))) traced.push_back(q);
    plan.rows = 1 << kept.size();
    plan.cols = 1 << traced.size();
    for (std::uint32_t x = 0; x < (1u << n); ++x) {
      int r = 0, c = 0;
      for (std::size_t j = 0; j < kept.size(); ++j)
        r |= static_cast<int>(x >> (n - 1 - kept[j]) & 1u) << (kept.size() - 1 - j);
      for (std::size_t j = 0; j < traced.size(); ++j)
        c |= static_cast<int>(x >> (n - 1 - traced[j]) & 1u) << (traced.size() - 1 - j);
      plan.row[x] = static_cast<std::uint8_t>(r);
      plan.col[x] = static_cast<std::uint8_t>(c);
    }
    plans.push_back(plan);
  }
  if (plans.empty()) throw std::invalid_argument("objective selects no cuts");
  return plans;
}

double min_cut_concurrence(const std::vector<cplx>& amp, const std::vector<CutPlan>& plans) {
  double worst = std::numeric_limits<double>::max();
  for (const CutPlan& plan : plans) {
    cplx m[4][16] = {};
    for (std::size_t x = 0; x < amp.size(); ++x) m[plan.row[x]][plan.col[x]] = amp[x];
    double purity = 0.0;
    for (int i = 0; i < plan.rows; ++i) {
      for (int j = i; j < plan.rows; ++j) {
        cplx dot{};
        for (int c = 0; c < plan.cols; ++c) dot += m[i][c] * std::conj(m[j][c]);
        purity += (i == j) ? std::norm(dot) : 2.0 * std::norm(dot);
      }
    }
    worst = std::min(worst, std::sqrt(std::max(0.0, 2.0 * (1.0 - purity))));
  }
  return worst;
}

void renormalize(std::vector<cplx>& amp) {
  double nrm = 0.0;
  for (const cplx& a : amp) nrm += std::norm(a);
  nrm = std::sqrt(nrm);
  for (cplx& a : amp) a /= nrm;
}

}  // namespace

OptimizeResult optimize(const OptimizeConfig& cfg) {
  if (cfg.n < 2 || cfg.n > 5) throw std::invalid_argument("optimize supports n in [2, 5]");
  if (cfg.restarts < 1) throw std::invalid_argument("restarts must be >= 1");
  if (cfg.step0 <= 0 || cfg.shrink <= 0 || cfg.shrink >= 1 || cfg.step_tol <= 0)
    throw std::invalid_argument("step parameters must be positive (shrink in (0,1))");
  for (int k : cfg.cut_sizes)
    if (k < 1 || 2 * k > cfg.n) throw std::invalid_argument("objective cut size out of range");

  const std::vector<CutPlan> plans = make_plans(cfg.n, cfg.cut_sizes);
  const std::size_t dim = std::size_t{1} << cfg.n;
  Gaussian gauss(cfg.seed);

  std::vector<cplx> best;
  std::vector<double> best_trace;
  double best_obj = -1.0;
  bool best_converged = false;
  int best_restart = 0;

  for (int restart = 0; restart < cfg.restarts; ++restart) {
    std::vector<cplx> x(dim);
    for (cplx& a : x) a = cplx(gauss(), gauss());
    renormalize(x);
    double obj = min_cut_concurrence(x, plans);
    std::vector<double> trace{obj};

    double step = cfg.step0;
    bool converged = false;
    std::vector<cplx> y(dim);
    for (int sweep = 0; sweep < cfg.max_sweeps; ++sweep) {
      bool improved = false;
      for (std::size_t i = 0; i < dim; ++i) {
        for (int part = 0; part < 2; ++part) {
          for (double dir : {+1.0, -1.0}) {
            y = x;
            y[i] += part == 0 ? cplx(dir * step, 0.0) : cplx(0.0, dir * step);
            renormalize(y);
            const double cand = min_cut_concurrence(y, plans);
            if (cand > obj + 1e-13) {
              x = y;
              obj = cand;
              trace.push_back(obj);
              improved = true;
            }
          }
        }
      }
      if (!improved) {
        step *= cfg.shrink;
        if (step < cfg.step_tol) {
          converged = true;
          break;
        }
      }
    }

    if (obj > best_obj) {
      best_obj = obj;
      best = x;
      best_trace = std::move(trace);
      best_converged = converged;
      best_restart = restart;
    }
  }

  PureState state = PureState::normalized(cfg.n, std::move(best));
  OptimizeResult result{.state = state,
                        .cuts = analyze(state),
                        .trace = std::move(best_trace),
                        .objective = best_obj,
                        .converged = best_converged,
                        .best_restart = best_restart};
  return result;
}

Ame4qProbe ame_probe_4q() {
  Ame4qProbe probe;
  auto eval = [](const std::string& name, const PureState& s) {
    Ame4qProbeRow row;
    row.name = name;
    for (const InequalityRow& ineq : explicit_inequalities(s)) {
      if (ineq.cut.label() == "AB") row.lhs_ab = ineq.lhs;
      if (ineq.cut.label() == "AC") row.lhs_ac = ineq.lhs;
      if (ineq.cut.label() == "AD") row.lhs_ad = ineq.lhs;
    }
    row.residual = std::max({row.lhs_ab, row.lhs_ac, row.lhs_ad});
    double min_double = std::numeric_limits<double>::max();
    for (const Bipartition& cut : Bipartition::canonical_cuts(4))
      if (cut.k() == 2) min_double = std::min(min_double, concurrence(s, cut));
    row.min_double_cut = min_double;
    return row;
  };
  for (const char* name : {"me4-sixteen-coeff-a", "me4-sixteen-coeff-b"})
    probe.family.push_back(eval(name, find_catalog_entry(name)->state));
  for (const char* name : {"ghz4", "psi4-sudbery-higuchi"})
    probe.references.push_back(eval(name, find_catalog_entry(name)->state));
  probe.min_family_residual = std::numeric_limits<double>::max();
  for (const Ame4qProbeRow& row : probe.family)
    probe.min_family_residual = std::min(probe.min_family_residual, row.residual);
  return probe;
}

}  // namespace maxcon
