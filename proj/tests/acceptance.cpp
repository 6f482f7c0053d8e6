// Acceptance suite: ten numbered end-to-end checks, one pass/fail line each.
// Run all checks (default) or a single one with --only N. Exit 0 iff every
// executed check passed.
//
// Checks 6 and 7 encode published claims that the toolkit's own exhaustive
// verification shows to be wrong (garbled sign listings, an incomplete
// support-4 characterization). They are implemented as stated and expected
// to fail; the output spells out the counterexamples.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstring>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <vector>

#include "maxcon/catalog.hpp"
#include "maxcon/io.hpp"
#include "maxcon/search.hpp"

using namespace maxcon;

namespace {

struct Checker {
  bool ok = true;
  std::ostringstream detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail << "    FAILED: " << what << "\n";
    }
  }
  void note(const std::string& what) { detail << "    " << what << "\n"; }
};

double unit_double(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", v);
  return buf;
}

double gaussian(std::mt19937_64& rng) {
  const double u = std::max(unit_double(rng), 0x1.0p-60);
  const double v = unit_double(rng);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(6.283185307179586 * v);
}

PureState random_state(int n, std::mt19937_64& rng) {
  std::vector<cplx> amps(std::size_t{1} << n);
  for (auto& a : amps) a = cplx(gaussian(rng), gaussian(rng));
  return PureState::normalized(n, std::move(amps));
}

std::map<std::string, double> cut_concurrences(const PureState& s) {
  std::map<std::string, double> out;
  for (const Bipartition& cut : Bipartition::canonical_cuts(s.n()))
    out[cut.label()] = concurrence(s, cut);
  return out;
}

// 01: three-qubit GHZ reaches the single-cut ceiling everywhere.
void check_01(Checker& c) {
  const PureState g = ghz(3);
  for (int q = 0; q < 3; ++q) {
    const Bipartition cut(3, {q});
    c.require(std::abs(concurrence(g, cut) - 1.0) <= 1e-9,
              "E_" + cut.label() + " != 1 within 1e-9");
    c.require(std::abs(cut_purity(g, cut) - 0.5) <= 1e-9,
              "tr rho^2 != 0.5 within 1e-9 on cut " + cut.label());
  }
  c.require(std::abs(total_concurrence(g) - 3.0) <= 1e-8, "total concurrence != 3 within 1e-8");
}

// 02: the three-qubit hypergraph state sits at 0.866 on every cut: equal
// entanglement, below the maximum.
void check_02(Checker& c) {
  const PureState& h = find_catalog_entry("hyper3")->state;
  for (int q = 0; q < 3; ++q)
    c.require(std::abs(concurrence(h, Bipartition(3, {q})) - 0.8660) <= 1e-3,
              "single-cut concurrence != 0.8660 within 1e-3");
  const Classification cls = classify(h);
  c.require(cls.is_ee, "not classified EE");
  c.require(!cls.is_eme, "wrongly classified EME");
}

// 03: the five-qubit 2-uniform state: published listing and cycle-graph
// construction both at the k-dependent maxima, AME verdict, all ten
// double-cut conditions satisfied.
void check_03(Checker& c) {
  const CatalogEntry* entry = find_catalog_entry("ame52-cycle");
  const PureState cycle = graph_state(GraphSpec(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}));

  auto check_state = [&](const PureState& s, const std::string& which) {
    for (const auto& [label, e] : cut_concurrences(s)) {
      const double expected = label.size() == 1 ? 1.0 : 1.2247;
      if (std::abs(e - expected) > 1e-3) {
        c.require(false, which + ": cut " + label + " off the 2-uniform profile");
        return false;
      }
    }
    return true;
  };

  const bool published_ok = check_state(entry->state, "published listing");
  if (!published_ok)
    c.require(entry->sign_listing_suspect,
              "published listing fails but is not flagged suspect in the catalog");
  else
    c.require(!entry->sign_listing_suspect, "clean listing wrongly flagged suspect");
  check_state(cycle, "cycle construction");

  c.require(k_uniformity(entry->state) == 2, "k_uniformity != 2");
  c.require(classify(entry->state).is_ame, "not classified AME");
  for (const InequalityRow& row : explicit_inequalities(entry->state))
    c.require(row.satisfied, "double-cut condition not satisfied at cut " + row.cut.label());
}

// 04: the cut-size concurrence ceiling, exact at k = 1,2,3 and never
// exceeded by 1e5 random states.
void check_04(Checker& c) {
  c.require(std::abs(max_concurrence_bound(1) - 1.0) <= 1e-9, "bound(1) != 1.0");
  c.require(std::abs(max_concurrence_bound(2) - 1.224744871) <= 1e-9, "bound(2) != 1.224744871");
  c.require(std::abs(max_concurrence_bound(3) - 1.322875656) <= 1e-9, "bound(3) != 1.322875656");

  std::mt19937_64 rng(0xACCE5504);
  int violations = 0;
  for (int trial = 0; trial < 100000; ++trial) {
    const int n = 2 + trial % 4;
    const PureState s = random_state(n, rng);
    for (const Bipartition& cut : Bipartition::canonical_cuts(n))
      if (concurrence(s, cut) > max_concurrence_bound(cut.k()) + 1e-9) ++violations;
  }
  c.require(violations == 0, std::to_string(violations) + " bound violations in 1e5 states");
  c.note("1e5 random states, no cut above its ceiling");
}

// 05: the two-mixed-double-cuts four-qubit state: exactly two double cuts
// at sqrt(3/2), the third at 1 (frozen from the reference reduction).
void check_05(Checker& c) {
  const PureState& psi = find_catalog_entry("psi4-sudbery-higuchi")->state;
  const double r15 = std::sqrt(1.5);
  int at_max = 0;
  double third = -1.0;
  for (const Bipartition& cut : Bipartition::canonical_cuts(4)) {
    if (cut.k() != 2) continue;
    const double e = concurrence(psi, cut);
    if (std::abs(e - r15) <= 1e-9)
      ++at_max;
    else
      third = e;
  }
  c.require(at_max == 2, "expected exactly two double cuts at sqrt(3/2), got " +
                             std::to_string(at_max));
  c.require(std::abs(third - 1.0) <= 1e-9, "third double cut != 1.0 (frozen oracle value)");
  c.require(third < r15 - 1e-3, "third double cut not strictly below sqrt(3/2)");
}

// 06: every published sign-family example state at unit single-cut
// concurrence. The four-qubit eight- and sixteen-coefficient listings
// provably fail this (their own text contradicts them); they are asserted
// as published and reported, with the reconstructed companions shown.
void check_06(Checker& c) {
  const char* names[] = {
      "ghz3",           "me3-four-coeff",      "me3-eight-coeff-a",  "me3-eight-coeff-b",
      "ghz4",           "me4-four-coeff",      "me4-eight-coeff-a",  "me4-eight-coeff-b",
      "me4-sixteen-coeff-a", "me4-sixteen-coeff-b",
  };
  for (const char* name : names) {
    const CatalogEntry* entry = find_catalog_entry(name);
    double worst = 2.0;
    std::string worst_cut;
    for (const auto& [label, e] : cut_concurrences(entry->state))
      if (label.size() == 1 && e < worst) {
        worst = e;
        worst_cut = label;
      }
    const bool ok = std::abs(worst - 1.0) <= 1e-9;
    if (!ok) {
      std::ostringstream msg;
      msg << name << ": min single-cut E = " << worst << " at cut " << worst_cut;
      if (entry->sign_listing_suspect) msg << " (catalog flags the listing as garbled)";
      c.require(false, msg.str());
    }
  }
  for (const char* name : {"me4-eight-coeff-a-corrected", "me4-eight-coeff-b-corrected"}) {
    double worst = 2.0;
    for (const auto& [label, e] : cut_concurrences(find_catalog_entry(name)->state))
      if (label.size() == 1) worst = std::min(worst, e);
    if (std::abs(worst - 1.0) <= 1e-9)
      c.note(std::string(name) + " (complement-closed support) does reach unit single cuts");
    else
      c.require(false, std::string(name) + " reconstruction failed to reach unit single cuts");
  }
  c.note("no complement-closed repair exists for the sixteen-coefficient listings: their");
  c.note("signs are constant on (even,odd) index pairs, so one qubit factors out (E = 0)");
}

// 07: exhaustive n=3 enumeration. Odd supports admit no ME state. At
// support 4 the published rule (two complementary pairs, negative product)
// is asserted for every hit; the enumeration additionally finds the two
// constant-parity supports ME for all sign choices, so the rule is
// incomplete and this check reports those hits as counterexamples.
void check_07(Checker& c) {
  EnumerationQuery odd{.n = 3, .support_sizes = {1, 3, 5, 7}, .predicate = Predicate::ME};
  const auto odd_result = enumerate_patterns(odd);
  c.require(odd_result.hits.empty(),
            std::to_string(odd_result.hits.size()) + " ME hits at odd support sizes");

  EnumerationQuery four{.n = 3, .support_sizes = {4}, .predicate = Predicate::ME};
  const auto result = enumerate_patterns(four);
  int pair_union = 0, other = 0;
  for (const EnumerationHit& hit : result.hits) {
    const auto& sup = hit.pattern.support;
    bool closed = true;
    std::set<std::uint32_t> s(sup.begin(), sup.end());
    for (std::uint32_t x : sup)
      if (!s.count(7u ^ x)) closed = false;
    int prod = 1;
    for (int sg : hit.pattern.signs) prod *= sg;
    if (closed && prod < 0)
      ++pair_union;
    else
      ++other;
  }
  c.note("support-4 ME hits: " + std::to_string(result.hits.size()) + " total, " +
         std::to_string(pair_union) + " = two complementary pairs with negative product, " +
         std::to_string(other) + " outside that rule");
  if (other != 0) {
    c.note("the extra hits are the constant-parity supports {000,011,101,110} and");
    c.note("{001,010,100,111}: any two elements differ in >= 2 bits, so every cross");
    c.note("term vanishes for every sign choice (Hadamard-rotated GHZ states)");
  }
  c.require(other == 0,
            "every support-4 ME hit decomposes into two complementary pairs with negative "
            "product");
}

// 08: the GHZ-class graph forms: all fifteen five-qubit cuts at 1 (EME, not
// AME); the four-qubit GHZ, its graph form, and the 3-uniform hypergraph
// state at 1 on all seven cuts.
void check_08(Checker& c) {
  const PureState& eme5 = find_catalog_entry("eme5-ghz-graph")->state;
  for (const auto& [label, e] : cut_concurrences(eme5))
    c.require(std::abs(e - 1.0) <= 1e-9, "five-qubit graph form: cut " + label + " != 1");
  const Classification cls = classify(eme5);
  c.require(cls.is_eme, "five-qubit graph form not classified EME");
  c.require(!cls.is_ame, "five-qubit graph form wrongly classified AME");

  for (const char* name : {"ghz4", "ghz4-graph-form", "eme4-hypergraph"}) {
    const PureState& s = find_catalog_entry(name)->state;
    for (const auto& [label, e] : cut_concurrences(s))
      c.require(std::abs(e - 1.0) <= 1e-9, std::string(name) + ": cut " + label + " != 1");
  }
}

// 09: the numeric property battery at full advertised volume.
void check_09(Checker& c) {
  std::mt19937_64 rng(0x909090);

  // (a) eigenvalue purity vs Gram purity and vs the diag + 2*cross
  // decomposition, 1e4 states.
  double worst_gap = 0.0, worst_dec = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int n = 3 + trial % 3;
    const PureState s = random_state(n, rng);
    for (const Bipartition& cut : Bipartition::canonical_cuts(n)) {
      const ReducedState rho = partial_trace(s, cut);
      worst_gap = std::max(worst_gap, std::abs(spectrum_purity(rho) - rho.purity));
      const CrossTermReport ct = cross_term_sum(s, cut);
      worst_dec = std::max(worst_dec,
                           std::abs(spectrum_purity(rho) - (ct.diag_sum + 2.0 * ct.cross_sum)));
    }
  }
  c.require(worst_gap < 1e-10, "purity two-path gap " + sci(worst_gap));
  c.require(worst_dec < 1e-9, "eigenvalue purity vs diag+2*cross gap " + sci(worst_dec));
  c.note("purity two-path worst gap: " + sci(worst_gap));

  // (b) printed expansions vs generalized cross sums, 1e-12.
  double worst_lit = 0.0;
  for (int trial = 0; trial < 2000; ++trial) {
    for (int n : {4, 5}) {
      const PureState s = random_state(n, rng);
      for (const InequalityRow& row : explicit_inequalities(s))
        worst_lit = std::max(worst_lit,
                             std::abs(row.lhs - cross_term_sum(s, row.cut).cross_sum));
    }
  }
  c.require(worst_lit < 1e-12, "literal-vs-generalized gap " + sci(worst_lit));
  c.note("literal-vs-generalized worst gap: " + sci(worst_lit));

  // (c) complementary-cut concurrence symmetry.
  double worst_sym = 0.0;
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 3 + trial % 3;
    const PureState s = random_state(n, rng);
    const std::uint32_t full = (1u << n) - 1;
    for (const Bipartition& cut : Bipartition::canonical_cuts(n)) {
      const double ea = concurrence_from_purity(reduce(s, cut.qubit_mask()).purity);
      const double eb = concurrence_from_purity(reduce(s, full & ~cut.qubit_mask()).purity);
      worst_sym = std::max(worst_sym, std::abs(ea - eb));
    }
  }
  c.require(worst_sym < 1e-10, "complementary-cut asymmetry " + sci(worst_sym));
  c.note("complementary-cut worst asymmetry: " + sci(worst_sym));

  // (d) E^2 = 2 * S_L is an identity of the report, not an approximation.
  for (int trial = 0; trial < 500; ++trial) {
    const PureState s = random_state(3 + trial % 3, rng);
    for (const CutReport& rep : analyze(s))
      c.require(rep.e2 == 2.0 * rep.linear_entropy, "E^2 != 2 S_L bit-for-bit");
  }
}

// 10: optimizer probes. Three qubits: the single-cut objective reaches the
// known optimum. Four qubits: the double-cut objective stays clear of the
// sqrt(3/2) profile that a 2-uniform state would need.
void check_10(Checker& c) {
  OptimizeConfig three;
  three.n = 3;
  three.cut_sizes = {1};
  three.restarts = 50;
  three.max_sweeps = 300;
  three.seed = 1905;
  const OptimizeResult r3 = optimize(three);
  c.note("n=3 best min single-cut objective: " + std::to_string(r3.objective));
  c.require(r3.objective >= 0.999, "n=3 objective below 0.999 after 50 restarts");

  OptimizeConfig four;
  four.n = 4;
  four.cut_sizes = {2};
  four.restarts = 200;
  four.max_sweeps = 120;
  four.seed = 1905;
  const OptimizeResult r4 = optimize(four);
  c.note("n=4 best min double-cut objective: " + std::to_string(r4.objective));
  c.require(r4.objective < std::sqrt(1.5) - 0.01,
            "n=4 double-cut objective reached the 2-uniform profile");
}

struct Criterion {
  int id;
  const char* name;
  void (*fn)(Checker&);
};

const Criterion k_criteria[] = {
    {1, "three-qubit GHZ reaches the single-cut ceiling", check_01},
    {2, "three-qubit hypergraph state is EE at 0.866, not EME", check_02},
    {3, "five-qubit 2-uniform state: profile, AME verdict, double-cut conditions", check_03},
    {4, "concurrence ceiling values and 1e5-state sweep", check_04},
    {5, "two of three double cuts maximally mixed on the reference four-qubit state", check_05},
    {6, "published sign-family examples reach unit single-cut concurrence", check_06},
    {7, "exhaustive n=3 enumeration reproduces the support-size rules", check_07},
    {8, "GHZ-class graph forms: every cut at concurrence 1", check_08},
    {9, "property battery: two-path purity, literal expansions, cut symmetry", check_09},
    {10, "optimizer reaches the 3-qubit optimum and respects 4-qubit infeasibility", check_10},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = std::atoi(argv[++i]);
  }

  int failures = 0;
  for (const Criterion& crit : k_criteria) {
    if (only != 0 && crit.id != only) continue;
    Checker checker;
    crit.fn(checker);
    std::printf("[%s] check %02d: %s\n", checker.ok ? "PASS" : "FAIL", crit.id, crit.name);
    const std::string detail = checker.detail.str();
    if (!detail.empty()) std::fputs(detail.c_str(), stdout);
    if (!checker.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
