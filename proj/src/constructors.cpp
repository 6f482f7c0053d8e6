#include "maxcon/constructors.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace maxcon {

GraphSpec::GraphSpec(int n, std::vector<std::pair<int, int>> edges,
                     std::vector<std::vector<int>> hyperedges)
    : n_(n), edges_(std::move(edges)), hyperedges_(std::move(hyperedges)) {
  if (n < 1 || n > 16) throw std::invalid_argument("graph: vertex count must be in [1, 16]");
  std::set<std::pair<int, int>> seen_edges;
  for (auto& [a, b] : edges_) {
    if (a < 0 || a >= n || b < 0 || b >= n || a == b)
      throw std::invalid_argument("graph: edge endpoints must be distinct vertices in [0, n)");
    if (a > b) std::swap(a, b);
    if (!seen_edges.insert({a, b}).second) throw std::invalid_argument("graph: duplicate edge");
  }
  std::sort(edges_.begin(), edges_.end());
  std::set<std::vector<int>> seen_hyper;
  for (auto& h : hyperedges_) {
    std::sort(h.begin(), h.end());
    if (h.size() < 3) throw std::invalid_argument("graph: hyperedge must have size >= 3");
    if (std::adjacent_find(h.begin(), h.end()) != h.end())
      throw std::invalid_argument("graph: hyperedge with repeated vertex");
    for (int v : h)
      if (v < 0 || v >= n) throw std::invalid_argument("graph: hyperedge vertex out of range");
    if (!seen_hyper.insert(h).second) throw std::invalid_argument("graph: duplicate hyperedge");
  }
  std::sort(hyperedges_.begin(), hyperedges_.end());
}

void SignPattern::validate() const {
  if (n < 1 || n > 16) throw std::invalid_argument("sign pattern: qubit count must be in [1, 16]");
  if (support.empty()) throw std::invalid_argument("sign pattern: empty support");
  if (signs.size() != support.size())
    throw std::invalid_argument("sign pattern: signs must align with support");
  const std::uint32_t dim = 1u << n;
  for (std::size_t i = 0; i < support.size(); ++i) {
    if (support[i] >= dim) throw std::invalid_argument("sign pattern: support index out of range");
    if (i > 0 && support[i] <= support[i - 1])
      throw std::invalid_argument("sign pattern: support must be strictly ascending");
    if (signs[i] != 1 && signs[i] != -1)
      throw std::invalid_argument("sign pattern: signs must be +1 or -1");
  }
}

PureState ghz(int n) {
  if (n < 2) throw std::invalid_argument("ghz: need n >= 2");
  std::vector<cplx> amps(std::size_t{1} << n, cplx{});
  const double a = 1.0 / std::sqrt(2.0);
  amps.front() = a;
  amps.back() = a;
  return PureState(n, std::move(amps));
}

PureState w_state(int n) {
  if (n < 2) throw std::invalid_argument("w_state: need n >= 2");
  std::vector<cplx> amps(std::size_t{1} << n, cplx{});
  const double a = 1.0 / std::sqrt(static_cast<double>(n));
  for (int q = 0; q < n; ++q) amps[std::size_t{1} << q] = a;
  return PureState::normalized(n, std::move(amps));
}

PureState hypergraph_state(const GraphSpec& spec) {
  const int n = spec.n();
  const std::size_t dim = std::size_t{1} << n;
  // Index-bit masks for each (hyper)edge; qubit q lives in bit n-1-q.
  std::vector<std::uint32_t> masks;
  for (const auto& [a, b] : spec.edges())
    masks.push_back((1u << (n - 1 - a)) | (1u << (n - 1 - b)));
  for (const auto& h : spec.hyperedges()) {
    std::uint32_t m = 0;
    for (int v : h) m |= 1u << (n - 1 - v);
    masks.push_back(m);
  }
  const double a = std::pow(2.0, -0.5 * n);
  std::vector<cplx> amps(dim);
  for (std::uint32_t x = 0; x < dim; ++x) {
    int flips = 0;
    for (std::uint32_t m : masks)
      if ((x & m) == m) ++flips;
    amps[x] = (flips & 1) ? -a : a;
  }
  return PureState::normalized(n, std::move(amps));
}

PureState graph_state(const GraphSpec& spec) {
  if (!spec.hyperedges().empty())
    throw std::invalid_argument("graph_state: spec has hyperedges, use hypergraph_state");
  return hypergraph_state(spec);
}

PureState from_sign_pattern(const SignPattern& pattern) {
  pattern.validate();
  std::vector<cplx> amps(std::size_t{1} << pattern.n, cplx{});
  const double a = 1.0 / std::sqrt(static_cast<double>(pattern.support.size()));
  for (std::size_t i = 0; i < pattern.support.size(); ++i)
    amps[pattern.support[i]] = pattern.signs[i] > 0 ? a : -a;
  return PureState::normalized(pattern.n, std::move(amps));
}

PureState equal_magnitude_state(int n, std::string_view signs) {
  const std::size_t dim = std::size_t{1} << n;
  if (signs.size() != dim)
    throw std::invalid_argument("equal_magnitude_state: need one sign per basis index");
  const double a = std::pow(2.0, -0.5 * n);
  std::vector<cplx> amps(dim);
  for (std::size_t x = 0; x < dim; ++x) {
    if (signs[x] == '+')
      amps[x] = a;
    else if (signs[x] == '-')
      amps[x] = -a;
    else
      throw std::invalid_argument("equal_magnitude_state: signs must be '+' or '-'");
  }
  return PureState::normalized(n, std::move(amps));
}

}  // namespace maxcon
