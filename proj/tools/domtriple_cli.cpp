// Command-line front end. Talks to the library only through domtriple.h.

#include <cstdio>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "domtriple/domtriple.h"

namespace {

constexpr int kExitUsageOrInput = 3;

struct CString {
  char* p = nullptr;
  ~CString() { dt_string_free(p); }
  std::string str() const { return p ? p : ""; }
};

struct GraphHandle {
  dt_graph* p = nullptr;
  ~GraphHandle() { dt_graph_free(p); }
};

int report_error(dt_status status) {
  std::cerr << "error (" << status << "): " << dt_last_error() << '\n';
  return kExitUsageOrInput;
}

bool looks_like_family(const std::string& text) {
  for (const char* name : {"cycle", "path", "complete", "star", "grid_p3", "grid_p4", "figure_H", "figure_Gprime"}) {
    const std::string prefix(name);
    if (text == prefix || text.rfind(prefix + ":", 0) == 0 || text.rfind(prefix + "*", 0) == 0) return true;
  }
  return false;
}

struct SourceArgs {
  std::string geng_file;
  int enumerate_n = 0;
  bool dedupe = false;
  std::vector<std::string> extras;
  int workers = 0;
  double time_budget = 10.0;
  int tight_cap = 5;

  void attach(CLI::App* cmd) {
    auto* file = cmd->add_option("--geng-file", geng_file, "graph6 corpus, one graph per line ('-' for stdin)");
    auto* enumerate = cmd->add_option("--enumerate", enumerate_n, "enumerate connected graphs on N vertices (1..8)")
                          ->check(CLI::Range(1, 8));
    file->excludes(enumerate);
    cmd->add_flag("--dedupe", dedupe, "enumerate one graph per isomorphism class");
    cmd->add_option("--extra", extras, "family spec or graph6 code appended to the corpus (repeatable)");
    cmd->add_option("--workers,-j", workers, "worker threads (default: all cores)");
    cmd->add_option("--time-budget", time_budget, "seconds per graph before it is marked unsolved (0 disables)");
    cmd->add_option("--tight-cap", tight_cap, "tight witnesses kept per bound")->check(CLI::NonNegativeNumber);
  }

  // `storage` keeps the extra-string pointers alive.
  dt_verify_options options(std::vector<const char*>& storage) const {
    dt_verify_options o;
    dt_verify_options_init(&o);
    if (!geng_file.empty()) o.geng_file = geng_file.c_str();
    o.enumerate_n = enumerate_n;
    o.dedupe = dedupe ? 1 : 0;
    storage.clear();
    for (const auto& e : extras) storage.push_back(e.c_str());
    o.extras = storage.data();
    o.extra_count = storage.size();
    o.workers = workers;
    o.time_budget_seconds = time_budget;
    o.tight_cap = tight_cap;
    return o;
  }
};

int run_params(const std::string& graph, double budget) {
  GraphHandle g;
  const dt_status status = looks_like_family(graph) ? dt_graph_from_family(graph.c_str(), &g.p)
                                                    : dt_graph_from_graph6(graph.c_str(), &g.p);
  if (status != DT_OK) return report_error(status);
  CString json;
  if (auto s = dt_params_json(g.p, budget, &json.p); s != DT_OK) return report_error(s);
  CString g6;
  auto parsed = nlohmann::json::parse(json.str());
  if (dt_graph_to_graph6(g.p, &g6.p) == DT_OK) parsed["graph6"] = g6.str();
  std::cout << parsed.dump(2) << '\n';
  return 0;
}

int run_verify(const SourceArgs& args, const std::string& format, const std::string& output, bool quiet) {
  std::vector<const char*> storage;
  auto o = args.options(storage);
  o.format = format == "json" ? DT_FORMAT_JSON : format == "none" ? DT_FORMAT_NONE : DT_FORMAT_CSV;
  if (!output.empty()) o.output_path = output.c_str();

  dt_report* raw = nullptr;
  if (auto s = dt_verify(&o, &raw); s != DT_OK) return report_error(s);
  std::unique_ptr<dt_report, decltype(&dt_report_free)> report(raw, dt_report_free);
  if (!quiet) {
    CString text;
    if (dt_report_summary_text(report.get(), &text.p) == DT_OK) std::cerr << text.str();
  }
  return dt_report_exit_code(report.get());
}

int run_tight(const SourceArgs& args, const std::string& bound, std::size_t limit) {
  if (bound.size() != 2 || (bound[0] != 'B' && bound[0] != 'b') || bound[1] < '1' || bound[1] > '9') {
    std::cerr << "error: --bound must be one of B1..B9\n";
    return kExitUsageOrInput;
  }
  std::vector<const char*> storage;
  const auto o = args.options(storage);
  CString json;
  if (auto s = dt_find_tight(&o, bound[1] - '0', limit, &json.p); s != DT_OK) return report_error(s);
  std::cout << json.str() << '\n';
  return 0;
}

int run_families(double budget, bool as_json) {
  CString json;
  int all_match = 0;
  if (auto s = dt_families_check(budget, &json.p, &all_match); s != DT_OK) return report_error(s);
  if (as_json) {
    std::cout << json.str() << '\n';
  } else {
    std::cout << std::left << std::setw(16) << "graph" << std::setw(10) << "param" << std::setw(10) << "formula"
              << std::setw(10) << "solver" << std::setw(10) << "seconds" << "match\n";
    for (const auto& c : nlohmann::json::parse(json.str())) {
      std::ostringstream secs;
      secs << std::fixed << std::setprecision(3) << c["seconds"].get<double>();
      std::cout << std::setw(16) << c["graph"].get<std::string>() << std::setw(10)
                << c["parameter"].get<std::string>() << std::setw(10) << c["expected"].get<int>() << std::setw(10)
                << (c["solved"].is_null() ? std::string("timeout") : std::to_string(c["solved"].get<int>()))
                << std::setw(10) << secs.str() << (c["matches"].get<bool>() ? "yes" : "NO") << '\n';
    }
  }
  return all_match ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact domination, total domination and connected domination numbers, with bound verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dt_version()));

  std::string graph;
  double params_budget = 0;
  auto* params = app.add_subcommand("params", "compute (gamma, gamma_t, gamma_c) and all bound verdicts for one graph");
  params->add_option("graph", graph, "graph6 code or family spec (cycle:9, grid_p4:5, figure_H, path:3*cycle:4)")
      ->required();
  params->add_option("--time-budget", params_budget, "seconds before giving up (0 disables)");

  SourceArgs verify_args;
  std::string format = "csv";
  std::string output;
  bool quiet = false;
  auto* verify = app.add_subcommand("verify", "check every bound over a graph corpus");
  verify_args.attach(verify);
  verify->add_option("--format", format, "row output format")->check(CLI::IsMember({"csv", "json", "none"}));
  verify->add_option("--output,-o", output, "row output file (default stdout)");
  verify->add_flag("--quiet,-q", quiet, "suppress the summary on stderr");

  SourceArgs tight_args;
  std::string bound;
  std::size_t limit = 10;
  auto* tight = app.add_subcommand("tight", "list graphs on which a bound holds with equality");
  tight_args.attach(tight);
  tight->add_option("--bound", bound, "B1..B9")->required();
  tight->add_option("--limit", limit, "maximum number of witnesses");

  bool check = false;
  bool families_json = false;
  double families_budget = 10.0;
  auto* families = app.add_subcommand("families", "compare closed-form family values with the exact solver");
  families->add_flag("--check", check, "run all formula-versus-solver cross-checks")->required();
  families->add_flag("--json", families_json, "print JSON instead of a table");
  families->add_option("--time-budget", families_budget, "seconds per solve");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (*params) return run_params(graph, params_budget);
  if (*verify) return run_verify(verify_args, format, output, quiet);
  if (*tight) return run_tight(tight_args, bound, limit);
  if (*families) return run_families(families_budget, families_json);
  return kExitUsageOrInput;
}
