#include <doctest.h>

#include <cmath>
#include <map>

#include "maxcon/catalog.hpp"
#include "maxcon/criteria.hpp"
#include "test_util.hpp"

using namespace maxcon;
using doctest::Approx;

namespace {

// Uniform-magnitude random-phase states have every reduction diagonal flat,
// which is exactly the balance precondition of the printed thresholds.
PureState random_phase_state(int n, std::mt19937_64& rng) {
  const std::size_t dim = std::size_t{1} << n;
  std::vector<cplx> amps(dim);
  const double mag = 1.0 / std::sqrt(static_cast<double>(dim));
  for (auto& a : amps) {
    const double phase = 6.283185307179586 * testutil::unit_double(rng);
    a = cplx(mag * std::cos(phase), mag * std::sin(phase));
  }
  return PureState::normalized(n, std::move(amps));
}

}  // namespace

TEST_SUITE_BEGIN("criteria");

TEST_CASE("cross term decomposition on known states") {
  auto rep = cross_term_sum(ghz(3), Bipartition(3, {0}));
  CHECK(rep.cross_sum == Approx(0.0).epsilon(1e-15));
  CHECK(rep.diag_sum == Approx(0.5).epsilon(1e-12));
  CHECK(rep.balanced);
  CHECK(rep.satisfied);
  CHECK(rep.threshold == Approx(0.0).epsilon(1e-15));

  PureState zero(3, [] {
    std::vector<cplx> v(8);
    v[0] = 1.0;
    return v;
  }());
  auto rep0 = cross_term_sum(zero, Bipartition(3, {0}));
  CHECK(rep0.cross_sum == Approx(0.0).epsilon(1e-15));
  CHECK(rep0.diag_sum == Approx(1.0).epsilon(1e-15));
  CHECK_FALSE(rep0.balanced);
  CHECK_FALSE(rep0.satisfied);

  CHECK(balanced_threshold(1) == Approx(0.0).epsilon(1e-15));
  CHECK(balanced_threshold(2) == Approx(0.125).epsilon(1e-15));
}

TEST_CASE("decomposition identity: diag + 2*cross == purity") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    auto s = testutil::random_state(n, rng);
    for (const auto& cut : Bipartition::canonical_cuts(n)) {
      auto rep = cross_term_sum(s, cut);
      CHECK(rep.cross_sum >= 0.0);
      CHECK(std::abs(rep.diag_sum + 2.0 * rep.cross_sum - cut_purity(s, cut)) < 1e-10);
    }
  }
}

TEST_CASE("literal conditions equal the generalized cross sums") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 3);
    auto s = testutil::random_state(n, rng);
    for (const auto& row : explicit_inequalities(s)) {
      const auto rep = cross_term_sum(s, row.cut);
      CHECK(std::abs(row.lhs - rep.cross_sum) < 1e-12);
      CHECK(row.threshold == rep.threshold);
    }
  }
}

TEST_CASE("explicit inequalities on the published five-qubit state") {
  const auto& ame = find_catalog_entry("ame52-cycle")->state;
  const auto rows = explicit_inequalities(ame);
  REQUIRE(rows.size() == 10);
  for (const auto& row : rows) {
    CHECK(row.balanced);
    CHECK(row.lhs < 0.125);
    CHECK(row.lhs == Approx(0.0).epsilon(1e-12));
    CHECK(row.satisfied);
  }

  PureState zero5(5, [] {
    std::vector<cplx> v(32);
    v[0] = 1.0;
    return v;
  }());
  for (const auto& row : explicit_inequalities(zero5)) {
    CHECK_FALSE(row.balanced);
    CHECK_FALSE(row.satisfied);
  }

  // The published sixteen-coefficient placements cannot satisfy the three
  // vanishing conditions jointly.
  const auto& sixteen = find_catalog_entry("me4-sixteen-coeff-a")->state;
  double max_lhs = 0.0;
  for (const auto& row : explicit_inequalities(sixteen)) max_lhs = std::max(max_lhs, row.lhs);
  CHECK(max_lhs > 1e-3);

  CHECK_THROWS_AS(explicit_inequalities(ghz(2)), std::invalid_argument);
}

TEST_CASE("balanced threshold is exact: E > 1 iff lhs < 1/8") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 2);
    auto s = random_phase_state(n, rng);
    for (const auto& row : explicit_inequalities(s)) {
      if (row.cut.k() != 2) continue;
      CHECK(row.balanced);
      if (std::abs(row.lhs - 0.125) < 1e-12) continue;  // boundary tie
      const double e = concurrence(s, row.cut);
      CHECK((e > 1.0) == (row.lhs < 0.125));
    }
  }
}

TEST_CASE("k-uniformity") {
  CHECK(k_uniformity(ghz(3)) == 1);
  CHECK(k_uniformity(find_catalog_entry("ame52-cycle")->state) == 2);
  CHECK(k_uniformity(find_catalog_entry("psi4-sudbery-higuchi")->state) == 1);
  CHECK(k_uniformity(w_state(3)) == 0);
  PureState zero(3, [] {
    std::vector<cplx> v(8);
    v[0] = 1.0;
    return v;
  }());
  CHECK(k_uniformity(zero) == 0);
}

TEST_CASE("classification of the worked states") {
  auto hyper = classify(find_catalog_entry("hyper3")->state);
  CHECK(hyper.is_ee);
  CHECK_FALSE(hyper.is_eme);
  CHECK_FALSE(hyper.is_me);
  CHECK(hyper.evidence[0].concurrence == Approx(std::sqrt(3.0) / 2.0).epsilon(1e-12));

  auto eme5 = classify(find_catalog_entry("eme5-ghz-graph")->state);
  CHECK(eme5.is_eme);
  CHECK(eme5.is_ee);
  CHECK(eme5.is_me);
  CHECK_FALSE(eme5.is_ame);
  CHECK(eme5.max_uniformity == 1);

  auto ame = classify(find_catalog_entry("ame52-cycle")->state);
  CHECK(ame.is_ame);
  CHECK(ame.max_uniformity == 2);
  CHECK_FALSE(ame.is_eme);
  CHECK_FALSE(ame.is_ee);

  auto g3 = classify(ghz(3));
  CHECK(g3.is_me);
  CHECK(g3.is_ame);
  CHECK(g3.is_eme);
  CHECK_FALSE(g3.is_product);

  PureState zero4(4, [] {
    std::vector<cplx> v(16);
    v[0] = 1.0;
    return v;
  }());
  auto z = classify(zero4);
  CHECK(z.is_product);
  CHECK_FALSE(z.is_me);
  CHECK(z.max_uniformity == 0);

  // |+>^n is a product state even though its purities carry rounding noise.
  auto plus = classify(graph_state(GraphSpec(4, {})));
  CHECK(plus.is_product);
}

TEST_CASE("classification invariants hold across catalog and random states") {
  auto check_invariants = [](const Classification& c) {
    if (c.is_ame) CHECK(c.is_me);
    if (c.is_eme) {
      CHECK(c.is_ee);
      CHECK(c.is_me);
    }
    CHECK(c.max_uniformity >= 0);
  };
  for (const CatalogEntry& entry : catalog()) check_invariants(classify(entry.state));
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 40; ++trial)
    check_invariants(classify(testutil::random_state(3 + static_cast<int>(rng() % 3), rng)));
}

TEST_CASE("odd support obstruction") {
  auto v3 = odd_support_obstruction(3, 3);
  CHECK_FALSE(v3.me_found);
  CHECK(v3.best_min_single_cut < 1.0 - 1e-6);

  auto v7 = odd_support_obstruction(3, 7);
  CHECK_FALSE(v7.me_found);
  CHECK(v7.best_min_single_cut < 1.0 - 1e-6);

  auto v1 = odd_support_obstruction(3, 1);
  CHECK_FALSE(v1.me_found);
  CHECK(v1.best_min_single_cut == Approx(0.0));

  CHECK_THROWS_WITH_AS(odd_support_obstruction(3, 2), "use enumerate", std::invalid_argument);
  CHECK_THROWS_AS(odd_support_obstruction(5, 3), std::invalid_argument);
  CHECK_THROWS_AS(odd_support_obstruction(3, 9), std::invalid_argument);
}

TEST_CASE("odd support obstruction at four qubits") {
  // Exhaustive-scan optima; the integer purity numerators behind them are
  // 115/225 (support 15) and the W-state value 5/9 (support 3).
  auto v15 = odd_support_obstruction(4, 15);
  CHECK_FALSE(v15.me_found);
  CHECK(v15.best_min_single_cut == Approx(std::sqrt(220.0) / 15.0).epsilon(1e-12));

  auto v3 = odd_support_obstruction(4, 3);
  CHECK_FALSE(v3.me_found);
  CHECK(v3.best_min_single_cut == Approx(std::sqrt(8.0) / 3.0).epsilon(1e-12));
}

TEST_SUITE_END();
