// maxcon: bipartite concurrence analysis for small qubit states.
//
// Subcommands: analyze, classify, enumerate, optimize, verify-paper.
// Exit codes: 0 ok, 1 expectation failure, 2 usage or input error,
// 3 internal invariant breach.

#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "maxcon/catalog.hpp"
#include "maxcon/io.hpp"
#include "maxcon/search.hpp"

using namespace maxcon;
using nlohmann::json;

namespace {

struct StateArgs {
  std::string state_file;
  std::string catalog_name;
};

void add_state_options(CLI::App* cmd, StateArgs& args) {
  auto* file = cmd->add_option("--state", args.state_file, "state document file (JSON)");
  auto* name = cmd->add_option("--catalog", args.catalog_name, "built-in catalog entry name");
  file->excludes(name);
}

LoadedState resolve_state(const StateArgs& args) {
  if (!args.state_file.empty()) {
    std::ifstream in(args.state_file);
    if (!in) throw parse_error("cannot open state file: " + args.state_file);
    std::stringstream buf;
    buf << in.rdbuf();
    return load_state(parse_state_document(buf.str()));
  }
  if (!args.catalog_name.empty()) {
    const CatalogEntry* entry = find_catalog_entry(args.catalog_name);
    if (entry == nullptr) {
      std::string names;
      for (const std::string& n : catalog_names()) names += "\n  " + n;
      throw parse_error("unknown catalog name '" + args.catalog_name + "'; known entries:" + names);
    }
    return {entry->state, "catalog " + args.catalog_name, {}};
  }
  throw parse_error("one of --state or --catalog is required");
}

int run_analyze(const StateArgs& args, const std::string& format) {
  const LoadedState loaded = resolve_state(args);
  for (const std::string& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
  const AnalysisReport report = make_report(loaded.state, loaded.source);
  std::cout << (format == "machine" ? render_machine(report) : render_table(report));
  return 0;
}

int run_classify(const StateArgs& args, const std::string& format) {
  const LoadedState loaded = resolve_state(args);
  for (const std::string& w : loaded.warnings) std::cerr << "warning: " << w << "\n";
  const Classification c = classify(loaded.state);
  if (format == "machine") {
    json out = {{"product", c.is_product}, {"me", c.is_me},
                {"k_uniformity", c.max_uniformity}, {"ame", c.is_ame},
                {"ee", c.is_ee},             {"eme", c.is_eme}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "product=" << (c.is_product ? "yes" : "no") << " ME=" << (c.is_me ? "yes" : "no")
              << " k-uniformity=" << c.max_uniformity << " AME=" << (c.is_ame ? "yes" : "no")
              << " EE=" << (c.is_ee ? "yes" : "no") << " EME=" << (c.is_eme ? "yes" : "no")
              << "\n";
  }
  return 0;
}

Predicate parse_predicate(const std::string& name, int& uniformity) {
  if (name == "me") return Predicate::ME;
  if (name == "ame") return Predicate::AME;
  if (name == "eme") return Predicate::EME;
  if (name == "ee") return Predicate::EE;
  if (name.size() == 9 && name.substr(1) == "-uniform" && name[0] >= '1' && name[0] <= '2') {
    uniformity = name[0] - '0';
    return Predicate::KUniform;
  }
  throw CLI::ValidationError("--predicate",
                             "expected one of: me, ame, eme, ee, 1-uniform, 2-uniform");
}

std::string pattern_text(const SignPattern& p) {
  std::ostringstream out;
  out << "support {";
  for (std::size_t i = 0; i < p.support.size(); ++i) {
    if (i) out << ",";
    out << p.support[i];
  }
  out << "} signs ";
  for (int s : p.signs) out << (s > 0 ? '+' : '-');
  return out.str();
}

int run_enumerate(int n, const std::vector<int>& supports, const std::string& predicate,
                  bool dedupe, const std::string& format) {
  EnumerationQuery query;
  query.n = n;
  query.support_sizes = supports;
  query.predicate = parse_predicate(predicate, query.uniformity);
  query.dedupe = dedupe;
  const EnumerationResult result = enumerate_patterns(query);

  if (format == "machine") {
    json hits = json::array();
    for (const EnumerationHit& hit : result.hits) {
      hits.push_back({{"support", hit.pattern.support},
                      {"signs", hit.pattern.signs},
                      {"me", hit.classification.is_me},
                      {"k_uniformity", hit.classification.max_uniformity},
                      {"ame", hit.classification.is_ame},
                      {"ee", hit.classification.is_ee},
                      {"eme", hit.classification.is_eme}});
    }
    json out = {{"n", n},
                {"predicate", predicate},
                {"dedupe", dedupe},
                {"patterns_examined", result.patterns_examined},
                {"hits", std::move(hits)}};
    std::cout << out.dump(2) << "\n";
  } else {
    for (const EnumerationHit& hit : result.hits) std::cout << pattern_text(hit.pattern) << "\n";
    std::cout << "hits: " << result.hits.size() << "  patterns examined: "
              << result.patterns_examined << "\n";
  }
  return 0;
}

int run_optimize(const OptimizeConfig& cfg, const std::string& format) {
  const OptimizeResult result = optimize(cfg);
  const AnalysisReport report = make_report(result.state, "optimize");
  if (format == "machine") {
    json out = json::parse(render_machine(report));
    out["objective"] = result.objective;
    out["converged"] = result.converged;
    out["best_restart"] = result.best_restart;
    out["trace"] = result.trace;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "objective (min cut concurrence): " << result.objective
              << (result.converged ? "" : "  [not converged]") << "\n"
              << "best restart: " << result.best_restart
              << "  improvements: " << result.trace.size() - 1 << "\n\n"
              << render_table(report);
  }
  return 0;
}

int run_verify(double tolerance, const std::string& format) {
  int checked = 0, failures = 0, flagged = 0;
  json machine = json::array();
  for (const CatalogEntry& entry : catalog()) {
    ++checked;
    std::vector<std::string> lines;
    json claims = json::array();
    bool entry_failed = false;

    std::map<std::string, double> computed;
    for (const CutReport& rep : analyze(entry.state)) computed[rep.cut.label()] = rep.concurrence;

    for (const CutClaim& claim : entry.published) {
      const double got = computed.at(claim.cut);
      const bool ok = std::abs(got - claim.value) <= tolerance;
      char line[160];
      if (ok) {
        std::snprintf(line, sizeof line, "  cut %-3s published %-10.6f computed %-14.12g ok",
                      claim.cut.c_str(), claim.value, got);
      } else if (entry.sign_listing_suspect) {
        std::snprintf(line, sizeof line,
                      "  cut %-3s published %-10.6f computed %-14.12g MISMATCH "
                      "(suspect sign listing)",
                      claim.cut.c_str(), claim.value, got);
      } else {
        std::snprintf(line, sizeof line, "  cut %-3s published %-10.6f computed %-14.12g FAIL",
                      claim.cut.c_str(), claim.value, got);
        entry_failed = true;
      }
      claims.push_back(
          {{"cut", claim.cut}, {"published", claim.value}, {"computed", got}, {"ok", ok}});
      lines.emplace_back(line);
    }
    for (const CutClaim& claim : entry.expected) {
      const double got = computed.at(claim.cut);
      if (std::abs(got - claim.value) > exact_eps) {
        char line[160];
        std::snprintf(line, sizeof line,
                      "  cut %-3s expected  %-10.6f computed %-14.12g FAIL (regression)",
                      claim.cut.c_str(), claim.value, got);
        lines.emplace_back(line);
        entry_failed = true;
      }
    }

    if (entry.sign_listing_suspect) ++flagged;
    if (entry_failed) ++failures;
    if (format == "machine") {
      machine.push_back({{"name", entry.name},
                         {"suspect", entry.sign_listing_suspect},
                         {"failed", entry_failed},
                         {"claims", std::move(claims)},
                         {"note", entry.note}});
    } else {
      std::cout << entry.name << (entry.sign_listing_suspect ? "  [suspect sign listing]" : "")
                << (entry_failed ? "  [FAIL]" : "") << "\n";
      for (const std::string& line : lines) std::cout << line << "\n";
      if (!entry.note.empty()) std::cout << "  note: " << entry.note << "\n";
    }
  }
  if (format == "machine") {
    json out = {{"entries_checked", checked},
                {"failures", failures},
                {"suspect_listings", flagged},
                {"tolerance", tolerance},
                {"entries", std::move(machine)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "\nentries checked: " << checked << "  failures: " << failures
              << "  suspect listings: " << flagged << "\n";
  }
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"maxcon: bipartite concurrence analysis for small qubit states"};
  app.require_subcommand(1);
  app.fallthrough();  // allow --format after the subcommand name

  std::string format = "table";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "machine"}))
      ->capture_default_str();

  StateArgs analyze_args, classify_args;
  auto* analyze_cmd = app.add_subcommand("analyze", "per-cut concurrence/entropy report");
  add_state_options(analyze_cmd, analyze_args);

  auto* classify_cmd = app.add_subcommand("classify", "ME/k-uniform/AME/EE/EME verdicts");
  add_state_options(classify_cmd, classify_args);

  int enum_n = 3;
  std::vector<int> enum_supports;
  std::string enum_predicate = "me";
  bool enum_dedupe = false;
  auto* enum_cmd = app.add_subcommand("enumerate", "exhaustive sign-pattern search");
  enum_cmd->add_option("--n", enum_n, "qubit count")->required()->check(CLI::Range(2, 5));
  enum_cmd->add_option("--support", enum_supports, "support sizes (default: all)");
  enum_cmd->add_option("--predicate", enum_predicate,
                       "me | ame | eme | ee | 1-uniform | 2-uniform");
  enum_cmd->add_flag("--dedupe", enum_dedupe, "quotient by permutation/flip/global-sign symmetry");

  OptimizeConfig opt_cfg;
  std::string opt_cuts = "all";
  auto* opt_cmd = app.add_subcommand("optimize", "maximize the minimum cut concurrence");
  opt_cmd->add_option("--n", opt_cfg.n, "qubit count")->required()->check(CLI::Range(2, 5));
  opt_cmd->add_option("--cuts", opt_cuts, "objective cuts")
      ->check(CLI::IsMember({"single", "double", "all"}));
  opt_cmd->add_option("--restarts", opt_cfg.restarts, "random restarts")->check(CLI::Range(1, 100000));
  opt_cmd->add_option("--seed", opt_cfg.seed, "random seed");
  opt_cmd->add_option("--sweeps", opt_cfg.max_sweeps, "max coordinate sweeps per restart");
  opt_cmd->add_option("--tolerance", opt_cfg.step_tol, "step convergence tolerance");

  double verify_tolerance = ref_eps;
  auto* verify_cmd = app.add_subcommand("verify-paper",
                                        "check the catalog against its published values");
  verify_cmd->add_option("--tolerance", verify_tolerance, "published-value tolerance")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze_args, format);
    if (*classify_cmd) return run_classify(classify_args, format);
    if (*enum_cmd) return run_enumerate(enum_n, enum_supports, enum_predicate, enum_dedupe, format);
    if (*opt_cmd) {
      if (opt_cuts == "single") opt_cfg.cut_sizes = {1};
      if (opt_cuts == "double") {
        if (opt_cfg.n < 4) throw parse_error("--cuts double requires n >= 4");
        opt_cfg.cut_sizes = {2};
      }
      return run_optimize(opt_cfg, format);
    }
    if (*verify_cmd) return run_verify(verify_tolerance, format);
  } catch (const internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
