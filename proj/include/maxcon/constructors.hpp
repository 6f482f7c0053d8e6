// constructors.hpp
// Named states and parameterized families: GHZ, W, graph and hypergraph
// states (CZ phase-flip convention), and equal-magnitude sign patterns.

#pragma once

#include <string>
#include <vector>

#include "maxcon/state.hpp"

namespace maxcon {

// Vertices are qubit indices; edges are unordered pairs, hyperedges are
// index sets of size >= 3. Duplicate (hyper)edges are rejected.
class GraphSpec {
 public:
  GraphSpec(int n, std::vector<std::pair<int, int>> edges,
            std::vector<std::vector<int>> hyperedges = {});

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& hyperedges() const { return hyperedges_; }

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;       // each stored (lo, hi)
  std::vector<std::vector<int>> hyperedges_;     // each stored sorted
};

// Equal-magnitude real state: +-1/sqrt(|support|) on the support, 0 elsewhere.
struct SignPattern {
  int n = 0;
  std::vector<std::uint32_t> support;  // strictly ascending basis indices
  std::vector<int> signs;              // +1 / -1, aligned with support

  void validate() const;  // throws std::invalid_argument
};

// (|0..0> + |1..1>) / sqrt(2). Requires n >= 2.
PureState ghz(int n);

// Uniform superposition of the Hamming-weight-1 basis states. Requires n >= 2.
PureState w_state(int n);

// Start from |+>^n (all amplitudes 2^(-n/2)) and flip the sign of every
// basis state whose bits are all 1 on an edge (CZ) or hyperedge
// (multi-controlled Z). graph_state() rejects specs carrying hyperedges.
PureState graph_state(const GraphSpec& spec);
PureState hypergraph_state(const GraphSpec& spec);

PureState from_sign_pattern(const SignPattern& pattern);

// Dense variant used by the catalog: one sign character per basis index,
// '+' or '-', length exactly 2^n.
PureState equal_magnitude_state(int n, std::string_view signs);

}  // namespace maxcon
