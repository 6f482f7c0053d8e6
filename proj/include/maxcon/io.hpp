// io.hpp
// State document format (one JSON object with exactly one of the four state
// variants), report assembly, and table / machine rendering.

#pragma once

#include <optional>
#include <string>

#include "maxcon/catalog.hpp"
#include "maxcon/constructors.hpp"
#include "maxcon/criteria.hpp"

namespace maxcon {

inline constexpr const char* tool_version = "0.1.0";

// Input-document diagnostics carry the offending field or byte position.
class parse_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Exactly one variant is populated, selected by kind:
//   {"amplitudes":   {"n": 3, "values": [[re, im], ...]}}   2^n pairs
//   {"graph":        {"n": 5, "edges": [[0,1], ...], "hyperedges": [[0,1,2], ...]}}
//   {"sign_pattern": {"n": 3, "support": [0,1,6,7], "signs": [1,1,-1,1]}}
//   {"catalog":      "ghz3"}
struct StateDocument {
  enum class Kind { Amplitudes, Graph, SignPattern, Catalog };
  Kind kind = Kind::Amplitudes;
  int n = 0;
  std::vector<cplx> amplitudes;
  std::optional<GraphSpec> graph;
  std::optional<SignPattern> sign_pattern;
  std::string catalog_name;
};

StateDocument parse_state_document(const std::string& text);

// Canonical JSON; parse(render(doc)) reproduces doc exactly.
std::string render_state_document(const StateDocument& doc);

struct LoadedState {
  PureState state;
  std::string source;  // human description of the document variant
  std::vector<std::string> warnings;
};

// Builds the state. Amplitude documents are normalized on load; a norm
// deviating by more than 1e-6 adds a warning.
LoadedState load_state(const StateDocument& doc);

struct AnalysisReport {
  std::string state_id;  // 64-bit FNV-1a over the amplitude bytes, hex
  std::string source;
  std::string version;
  double tol_exact = exact_eps;
  double tol_ref = ref_eps;
  std::vector<CutReport> cuts;  // canonical order
  Classification classification;
};

AnalysisReport make_report(const PureState& state, std::string source);

std::string render_table(const AnalysisReport& report);
// Full-precision JSON (shortest-round-trip doubles, >= 12 significant digits).
std::string render_machine(const AnalysisReport& report);

std::string state_hash(const PureState& state);

}  // namespace maxcon
