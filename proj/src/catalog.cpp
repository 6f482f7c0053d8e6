#include "maxcon/catalog.hpp"

#include <cmath>

#include "maxcon/constructors.hpp"

namespace maxcon {

namespace {

std::vector<CutClaim> cuts_of_size(int n, int k, double value) {
  std::vector<CutClaim> claims;
  for (const Bipartition& cut : Bipartition::canonical_cuts(n))
    if (cut.k() == k) claims.push_back({cut.label(), value});
  return claims;
}

std::vector<CutClaim> all_cuts(int n, double value) {
  std::vector<CutClaim> claims;
  for (const Bipartition& cut : Bipartition::canonical_cuts(n))
    claims.push_back({cut.label(), value});
  return claims;
}

std::vector<CutClaim> join(std::vector<CutClaim> a, const std::vector<CutClaim>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

PureState sparse(int n, std::vector<std::uint32_t> support, std::vector<int> signs) {
  return from_sign_pattern(SignPattern{n, std::move(support), std::move(signs)});
}

std::vector<CatalogEntry> build() {
  const double r32 = std::sqrt(3.0) / 2.0;       // 0.8660...
  const double r15 = std::sqrt(1.5);             // 1.2247...
  std::vector<CatalogEntry> v;

  v.push_back({"ghz3", "three-qubit GHZ state", ghz(3), cuts_of_size(3, 1, 1.0),
               all_cuts(3, 1.0), false, ""});

  v.push_back({"me3-four-coeff",
               "three qubits, four equal coefficients on two complementary pairs",
               sparse(3, {0, 1, 6, 7}, {1, 1, -1, 1}), cuts_of_size(3, 1, 1.0),
               all_cuts(3, 1.0), false, ""});

  v.push_back({"me3-eight-coeff-a", "three qubits, eight equal coefficients (variant a)",
               equal_magnitude_state(3, "---+-+++"), cuts_of_size(3, 1, 1.0), all_cuts(3, 1.0),
               false, ""});

  v.push_back({"me3-eight-coeff-b", "three qubits, eight equal coefficients (variant b)",
               equal_magnitude_state(3, "-+++---+"), cuts_of_size(3, 1, 1.0), all_cuts(3, 1.0),
               false, ""});

  v.push_back({"ghz4", "four-qubit GHZ state", ghz(4), cuts_of_size(4, 1, 1.0), all_cuts(4, 1.0),
               false, ""});

  v.push_back({"me4-four-coeff",
               "four qubits, four equal coefficients on two complementary pairs",
               sparse(4, {0, 5, 10, 15}, {1, 1, -1, 1}), cuts_of_size(4, 1, 1.0),
               join(cuts_of_size(4, 1, 1.0), {{"AB", r15}, {"AC", 1.0}, {"AD", r15}}), false,
               ""});

  v.push_back({"me4-eight-coeff-a",
               "four qubits, eight equal coefficients (variant a), as published",
               sparse(4, {0, 1, 2, 3, 4, 5, 6, 12}, {-1, -1, -1, 1, 1, 1, 1, -1}),
               cuts_of_size(4, 1, 1.0),
               {{"A", std::sqrt(3.0 / 8.0)},
                {"B", std::sqrt(7.0 / 16.0)},
                {"C", std::sqrt(7.0 / 8.0)},
                {"D", std::sqrt(7.0 / 8.0)}},
               true,
               "published support is not closed under index complementation, so no sign choice "
               "on it reaches concurrence 1 on every single cut; see me4-eight-coeff-a-corrected"});

  v.push_back({"me4-eight-coeff-b",
               "four qubits, eight equal coefficients (variant b), as published",
               sparse(4, {0, 1, 2, 3, 4, 8, 9, 10}, {-1, 1, 1, 1, 1, -1, -1, -1}),
               cuts_of_size(4, 1, 1.0),
               {{"A", std::sqrt(7.0 / 8.0)},
                {"B", std::sqrt(3.0 / 8.0)},
                {"C", std::sqrt(7.0 / 8.0)},
                {"D", std::sqrt(7.0 / 8.0)}},
               true,
               "published support is not closed under index complementation, so no sign choice "
               "on it reaches concurrence 1 on every single cut; see me4-eight-coeff-b-corrected"});

  v.push_back({"me4-eight-coeff-a-corrected",
               "four qubits, eight equal coefficients on four complementary pairs, negatives at "
               "the first three low-half entries and the low conjugate (reconstruction)",
               sparse(4, {0, 1, 2, 3, 12, 13, 14, 15}, {-1, -1, -1, 1, -1, 1, 1, 1}),
               cuts_of_size(4, 1, 1.0), cuts_of_size(4, 1, 1.0), false,
               "reconstruction of me4-eight-coeff-a on the complement-closed support"});

  v.push_back({"me4-eight-coeff-b-corrected",
               "four qubits, eight equal coefficients on four complementary pairs, negatives at "
               "the first low-half entry and three high-half conjugates (reconstruction)",
               sparse(4, {0, 1, 2, 3, 12, 13, 14, 15}, {-1, 1, 1, 1, -1, -1, -1, 1}),
               cuts_of_size(4, 1, 1.0), cuts_of_size(4, 1, 1.0), false,
               "reconstruction of me4-eight-coeff-b on the complement-closed support"});

  v.push_back({"me4-sixteen-coeff-a",
               "four qubits, sixteen equal coefficients (variant a), as published",
               equal_magnitude_state(4, "------++--++++++"), cuts_of_size(4, 1, 1.0),
               {{"A", 1.0}, {"B", 1.0}, {"C", 1.0}, {"D", 0.0}},
               true,
               "the published signs are constant on every (even, odd) index pair, so the last "
               "qubit factors out and its cut concurrence is 0, not 1"});

  v.push_back({"me4-sixteen-coeff-b",
               "four qubits, sixteen equal coefficients (variant b), as published",
               equal_magnitude_state(4, "++--++++----++--"), cuts_of_size(4, 1, 1.0),
               {{"A", 1.0}, {"B", 1.0}, {"C", 1.0}, {"D", 0.0}},
               true,
               "the published signs are constant on every (even, odd) index pair, so the last "
               "qubit factors out and its cut concurrence is 0, not 1"});

  v.push_back({"ghz3-graph-form", "three-qubit GHZ state, published graph-form sign listing",
               equal_magnitude_state(3, "+++++---"), cuts_of_size(3, 1, 1.0), all_cuts(3, r32),
               true,
               "the listed signs give 0.866 on every single cut, one sign short of the star-graph "
               "construction; see ghz3-graph-corrected"});

  v.push_back({"ghz3-graph-corrected",
               "three-qubit star graph state (controlled-Z construction on edges 1-2, 1-3)",
               graph_state(GraphSpec(3, {{0, 1}, {0, 2}})), cuts_of_size(3, 1, 1.0),
               all_cuts(3, 1.0), false, "construction-backed form of ghz3-graph-form"});

  v.push_back({"sym3-triangle-graph", "three-qubit symmetric (triangle) graph state",
               equal_magnitude_state(3, "+++-+---"), cuts_of_size(3, 1, 1.0), all_cuts(3, 1.0),
               false, "matches the controlled-Z triangle construction sign-for-sign"});

  v.push_back({"hyper3", "three-qubit hypergraph state with one 3-edge",
               equal_magnitude_state(3, "+++++++-"), cuts_of_size(3, 1, 0.866),
               all_cuts(3, r32), false, ""});

  v.push_back({"psi4-sudbery-higuchi", "four-qubit state with two maximally mixed double cuts",
               sparse(4, {0, 7, 9, 14}, {1, 1, 1, 1}),
               {},
               join(cuts_of_size(4, 1, 1.0), {{"AB", r15}, {"AC", r15}, {"AD", 1.0}}), false,
               "two of the three double cuts reach sqrt(3/2); the third stays at 1"});

  v.push_back({"eme4-hypergraph", "four-qubit 3-uniform hypergraph state (all four 3-edges)",
               equal_magnitude_state(4, "+++++++-+++-+--+"), all_cuts(4, 1.0), all_cuts(4, 1.0),
               false, "matches the four-3-edge hypergraph construction sign-for-sign"});

  v.push_back({"ghz4-graph-form", "four-qubit GHZ state in star-graph form",
               equal_magnitude_state(4, "+++++++++--+-++-"), all_cuts(4, 1.0), all_cuts(4, 1.0),
               false, "matches the controlled-Z star construction sign-for-sign"});

  v.push_back({"ame52-cycle", "five-qubit 2-uniform (cycle graph) state",
               equal_magnitude_state(5, "+++-++-+"
                                        "+++---+-"
                                        "+-+++---"
                                        "-+--+---"),
               join(cuts_of_size(5, 1, 1.0), cuts_of_size(5, 2, 1.224)),
               join(cuts_of_size(5, 1, 1.0), cuts_of_size(5, 2, r15)), false,
               "matches the controlled-Z 5-cycle construction sign-for-sign"});

  v.push_back({"eme5-ghz-graph", "five-qubit GHZ-class complete-graph state",
               equal_magnitude_state(5, "+++-+---"
                                        "+------+"
                                        "+------+"
                                        "---+-+++"),
               all_cuts(5, 1.0), all_cuts(5, 1.0), false,
               "matches the controlled-Z complete-graph construction sign-for-sign"});

  return v;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build();
  return entries;
}

const CatalogEntry* find_catalog_entry(std::string_view name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const CatalogEntry& e : catalog()) names.push_back(e.name);
  return names;
}

}  // namespace maxcon
