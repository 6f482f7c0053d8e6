#include "maxcon/io.hpp"

#include <cmath>
#include <cstdint>
#include <cstring>
#include <sstream>

#include <json.hpp>

namespace maxcon {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
  throw parse_error(where + ": " + what);
}

int read_qubit_count(const json& obj, const std::string& where) {
  if (!obj.contains("n") || !obj["n"].is_number_integer()) fail(where + "/n", "expected an integer qubit count");
  const int n = obj["n"].get<int>();
  if (n < 1 || n > 16) fail(where + "/n", "qubit count must be in [1, 16]");
  return n;
}

StateDocument parse_amplitudes(const json& obj) {
  StateDocument doc;
  doc.kind = StateDocument::Kind::Amplitudes;
  doc.n = read_qubit_count(obj, "/amplitudes");
  if (!obj.contains("values") || !obj["values"].is_array())
    fail("/amplitudes/values", "expected an array of [re, im] pairs");
  const auto& values = obj["values"];
  const std::size_t want = std::size_t{1} << doc.n;
  if (values.size() != want)
    fail("/amplitudes/values", "expected " + std::to_string(want) + " amplitudes, got " +
                                   std::to_string(values.size()));
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto& pair = values[i];
    const std::string where = "/amplitudes/values[" + std::to_string(i) + "]";
    if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number())
      fail(where, "expected a [re, im] number pair");
    doc.amplitudes.emplace_back(pair[0].get<double>(), pair[1].get<double>());
  }
  return doc;
}

StateDocument parse_graph(const json& obj) {
  StateDocument doc;
  doc.kind = StateDocument::Kind::Graph;
  doc.n = read_qubit_count(obj, "/graph");
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> hyperedges;
  if (obj.contains("edges")) {
    if (!obj["edges"].is_array()) fail("/graph/edges", "expected an array of [a, b] pairs");
    for (std::size_t i = 0; i < obj["edges"].size(); ++i) {
      const auto& e = obj["edges"][i];
      const std::string where = "/graph/edges[" + std::to_string(i) + "]";
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer())
        fail(where, "expected an [a, b] integer pair");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  }
  if (obj.contains("hyperedges")) {
    if (!obj["hyperedges"].is_array())
      fail("/graph/hyperedges", "expected an array of vertex lists");
    for (std::size_t i = 0; i < obj["hyperedges"].size(); ++i) {
      const auto& h = obj["hyperedges"][i];
      const std::string where = "/graph/hyperedges[" + std::to_string(i) + "]";
      if (!h.is_array()) fail(where, "expected a vertex list");
      if (h.size() < 3) fail(where, "hyperedge must have size >= 3");
      std::vector<int> verts;
      for (const auto& v : h) {
        if (!v.is_number_integer()) fail(where, "expected integer vertex indices");
        verts.push_back(v.get<int>());
      }
      hyperedges.push_back(std::move(verts));
    }
  }
  try {
    doc.graph.emplace(doc.n, std::move(edges), std::move(hyperedges));
  } catch (const std::invalid_argument& e) {
    fail("/graph", e.what());
  }
  return doc;
}

StateDocument parse_sign_pattern(const json& obj) {
  StateDocument doc;
  doc.kind = StateDocument::Kind::SignPattern;
  doc.n = read_qubit_count(obj, "/sign_pattern");
  SignPattern pattern;
  pattern.n = doc.n;
  if (!obj.contains("support") || !obj["support"].is_array())
    fail("/sign_pattern/support", "expected an array of basis indices");
  for (const auto& v : obj["support"]) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
      fail("/sign_pattern/support", "expected nonnegative integer basis indices");
    pattern.support.push_back(v.get<std::uint32_t>());
  }
  if (!obj.contains("signs") || !obj["signs"].is_array())
    fail("/sign_pattern/signs", "expected an array of +1/-1 entries");
  for (const auto& v : obj["signs"]) {
    if (!v.is_number_integer()) fail("/sign_pattern/signs", "expected +1/-1 entries");
    pattern.signs.push_back(v.get<int>());
  }
  try {
    pattern.validate();
  } catch (const std::invalid_argument& e) {
    fail("/sign_pattern", e.what());
  }
  doc.sign_pattern = std::move(pattern);
  return doc;
}

StateDocument parse_catalog(const json& value) {
  StateDocument doc;
  doc.kind = StateDocument::Kind::Catalog;
  if (!value.is_string()) fail("/catalog", "expected a catalog entry name");
  doc.catalog_name = value.get<std::string>();
  const CatalogEntry* entry = find_catalog_entry(doc.catalog_name);
  if (entry == nullptr) {
    std::string names;
    for (const std::string& name : catalog_names()) names += "\n  " + name;
    fail("/catalog", "unknown catalog name '" + doc.catalog_name + "'; known entries:" + names);
  }
  doc.n = entry->state.n();
  return doc;
}

}  // namespace

StateDocument parse_state_document(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw parse_error(std::string("document is not valid JSON: ") + e.what());
  }
  if (!root.is_object() || root.size() != 1)
    fail("/", "expected exactly one of: amplitudes, graph, sign_pattern, catalog");
  if (root.contains("amplitudes")) return parse_amplitudes(root["amplitudes"]);
  if (root.contains("graph")) return parse_graph(root["graph"]);
  if (root.contains("sign_pattern")) return parse_sign_pattern(root["sign_pattern"]);
  if (root.contains("catalog")) return parse_catalog(root["catalog"]);
  fail("/", "unknown document tag '" + root.begin().key() + "'");
}

std::string render_state_document(const StateDocument& doc) {
  json root;
  switch (doc.kind) {
    case StateDocument::Kind::Amplitudes: {
      json values = json::array();
      for (const cplx& a : doc.amplitudes) values.push_back({a.real(), a.imag()});
      root["amplitudes"] = {{"n", doc.n}, {"values", std::move(values)}};
      break;
    }
    case StateDocument::Kind::Graph: {
      json edges = json::array(), hyper = json::array();
      for (const auto& [a, b] : doc.graph->edges()) edges.push_back({a, b});
      for (const auto& h : doc.graph->hyperedges()) hyper.push_back(h);
      root["graph"] = {{"n", doc.n}, {"edges", std::move(edges)}, {"hyperedges", std::move(hyper)}};
      break;
    }
    case StateDocument::Kind::SignPattern:
      root["sign_pattern"] = {{"n", doc.n},
                              {"support", doc.sign_pattern->support},
                              {"signs", doc.sign_pattern->signs}};
      break;
    case StateDocument::Kind::Catalog:
      root["catalog"] = doc.catalog_name;
      break;
  }
  return root.dump(2) + "\n";
}

LoadedState load_state(const StateDocument& doc) {
  switch (doc.kind) {
    case StateDocument::Kind::Amplitudes: {
      double nrm = 0.0;
      for (const cplx& a : doc.amplitudes) nrm += std::norm(a);
      nrm = std::sqrt(nrm);
      std::vector<std::string> warnings;
      if (!(nrm > 1e-150)) throw parse_error("/amplitudes/values: null state");
      if (std::abs(nrm - 1.0) > 1e-6) {
        std::ostringstream msg;
        msg << "amplitudes normalized on load (input norm " << nrm << ")";
        warnings.push_back(msg.str());
      }
      return {PureState::normalized(doc.n, doc.amplitudes), "amplitudes", std::move(warnings)};
    }
    case StateDocument::Kind::Graph:
      return {hypergraph_state(*doc.graph),
              doc.graph->hyperedges().empty() ? "graph" : "hypergraph",
              {}};
    case StateDocument::Kind::SignPattern:
      return {from_sign_pattern(*doc.sign_pattern), "sign_pattern", {}};
    case StateDocument::Kind::Catalog:
      return {find_catalog_entry(doc.catalog_name)->state, "catalog " + doc.catalog_name, {}};
  }
  throw parse_error("corrupt state document");
}

std::string state_hash(const PureState& state) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&](double v) {
    std::uint64_t bits;
    std::memcpy(&bits, &v, sizeof bits);
    for (int i = 0; i < 8; ++i) {
      h ^= (bits >> (8 * i)) & 0xff;
      h *= 0x100000001b3ull;
    }
  };
  for (const cplx& a : state.amplitudes()) {
    mix(a.real());
    mix(a.imag());
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

AnalysisReport make_report(const PureState& state, std::string source) {
  AnalysisReport report;
  report.state_id = state_hash(state);
  report.source = std::move(source);
  report.version = tool_version;
  report.classification = classify(state);
  report.cuts = report.classification.evidence;
  return report;
}

namespace {

std::string yesno(bool b) { return b ? "yes" : "no"; }

std::string classification_line(const Classification& c) {
  std::ostringstream out;
  out << "product=" << yesno(c.is_product) << " ME=" << yesno(c.is_me)
      << " k-uniformity=" << c.max_uniformity << " AME=" << yesno(c.is_ame)
      << " EE=" << yesno(c.is_ee) << " EME=" << yesno(c.is_eme);
  return out.str();
}

}  // namespace

std::string render_table(const AnalysisReport& report) {
  std::ostringstream out;
  out << "state id " << report.state_id << "  source: " << report.source << "\n";
  out << "maxcon " << report.version << "  tolerances: exact=" << report.tol_exact
      << " reference=" << report.tol_ref << "\n\n";
  out << "cut    E             E^2           purity        S             S_L           "
         "E_max      max-mixed\n";
  char line[160];
  for (const CutReport& cut : report.cuts) {
    std::snprintf(line, sizeof line,
                  "%-6s %-13.10f %-13.10f %-13.10f %-13.10f %-13.10f %-10.7f %s\n",
                  cut.cut.label().c_str(), cut.concurrence, cut.e2, cut.purity, cut.entropy,
                  cut.linear_entropy, cut.bound, yesno(cut.maximally_mixed).c_str());
    out << line;
  }
  out << "\ntotal concurrence: ";
  double total = 0.0;
  for (const CutReport& cut : report.cuts) total += cut.concurrence;
  std::snprintf(line, sizeof line, "%.10f\n", total);
  out << line;
  out << "classification: " << classification_line(report.classification) << "\n";
  return out.str();
}

std::string render_machine(const AnalysisReport& report) {
  json cuts = json::array();
  for (const CutReport& cut : report.cuts) {
    cuts.push_back({{"cut", cut.cut.label()},
                    {"concurrence", cut.concurrence},
                    {"e2", cut.e2},
                    {"purity", cut.purity},
                    {"entropy", cut.entropy},
                    {"linear_entropy", cut.linear_entropy},
                    {"bound", cut.bound},
                    {"maximally_mixed", cut.maximally_mixed}});
  }
  const Classification& c = report.classification;
  json root = {{"tool", "maxcon"},
               {"version", report.version},
               {"state_id", report.state_id},
               {"source", report.source},
               {"tolerances", {{"exact", report.tol_exact}, {"reference", report.tol_ref}}},
               {"cuts", std::move(cuts)},
               {"classification",
                {{"product", c.is_product},
                 {"me", c.is_me},
                 {"k_uniformity", c.max_uniformity},
                 {"ame", c.is_ame},
                 {"ee", c.is_ee},
                 {"eme", c.is_eme}}}};
  return root.dump(2) + "\n";
}

}  // namespace maxcon
