#include "domtriple/domtriple.h"

#include <cstring>
#include <fstream>
#include <iostream>
#include <memory>
#include <thread>

#include "domtriple/bounds.hpp"
#include "domtriple/domination.hpp"
#include "domtriple/error.hpp"
#include "domtriple/families.hpp"
#include "domtriple/graph6.hpp"
#include "domtriple/harness.hpp"
#include "domtriple/oracle.hpp"
#include "domtriple/report.hpp"

struct dt_graph {
  domtriple::Graph graph;
};

struct dt_report {
  domtriple::VerificationSummary summary;
};

namespace {

using namespace domtriple;

thread_local std::string last_error;
thread_local std::size_t last_offset = 0;

dt_status fail(dt_status status, const std::string& message) {
  last_error = message;
  return status;
}

// Maps the C++ exception currently in flight onto a status code.
dt_status translate() {
  try {
    throw;
  } catch (const ParseError& e) {
    last_offset = e.offset();
    return fail(DT_ERR_PARSE, e.what());
  } catch (const RangeError& e) {
    return fail(DT_ERR_RANGE, e.what());
  } catch (const UndefinedParameter& e) {
    return fail(DT_ERR_UNDEFINED, e.what());
  } catch (const SearchTimeout& e) {
    return fail(DT_ERR_TIMEOUT, e.what());
  } catch (const InconsistencyError& e) {
    return fail(DT_ERR_INCONSISTENT, e.what());
  } catch (const std::ios_base::failure& e) {
    return fail(DT_ERR_IO, e.what());
  } catch (const std::exception& e) {
    return fail(DT_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(DT_ERR_INTERNAL, "unknown exception");
  }
}

template <class F>
dt_status guarded(F&& body) {
  try {
    body();
    return DT_OK;
  } catch (...) {
    return translate();
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Deadline deadline_for(double seconds) {
  return seconds > 0 ? Deadline::after(std::chrono::duration<double>(seconds)) : Deadline{};
}

Variant variant_of(dt_variant v) {
  switch (v) {
    case DT_VARIANT_PLAIN: return Variant::plain;
    case DT_VARIANT_TOTAL: return Variant::total;
    case DT_VARIANT_CONNECTED: return Variant::connected;
  }
  throw std::invalid_argument("unknown variant");
}

Graph graph_from_text(std::string_view text) {
  return looks_like_family_spec(text) ? FamilySpec::parse(text).build() : parse_graph6(text);
}

ParameterTriple triple_from(const dt_triple& t) {
  return ParameterTriple::of(t.gamma, t.gamma_t > 0 ? std::optional<int>(t.gamma_t) : std::nullopt,
                             t.gamma_c > 0 ? std::optional<int>(t.gamma_c) : std::nullopt);
}

class FileGraph6Source : public GraphSource {
 public:
  explicit FileGraph6Source(const std::string& path) : file_(path), inner_(file_) {
    if (!file_) throw std::ios_base::failure("cannot open " + path);
  }
  std::optional<CorpusItem> next() override { return inner_.next(); }

 private:
  std::ifstream file_;
  Graph6Source inner_;
};

std::unique_ptr<GraphSource> build_source(const dt_verify_options& o) {
  std::vector<std::unique_ptr<GraphSource>> parts;
  if (o.geng_file) {
    if (std::strcmp(o.geng_file, "-") == 0) {
      parts.push_back(std::make_unique<Graph6Source>(std::cin));
    } else {
      parts.push_back(std::make_unique<FileGraph6Source>(o.geng_file));
    }
  } else if (o.enumerate_n > 0) {
    parts.push_back(std::make_unique<EnumerationSource>(o.enumerate_n, o.dedupe != 0));
  }
  std::vector<Graph> extras;
  for (std::size_t i = 0; i < o.extra_count; ++i) {
    if (!o.extras || !o.extras[i]) throw std::invalid_argument("null extra graph");
    extras.push_back(graph_from_text(o.extras[i]));
  }
  if (!extras.empty()) parts.push_back(std::make_unique<ListSource>(std::move(extras)));
  if (parts.empty()) throw std::invalid_argument("no corpus: set geng_file, enumerate_n or extras");
  return std::make_unique<ChainSource>(std::move(parts));
}

VerifyOptions verify_options(const dt_verify_options& o) {
  VerifyOptions v;
  v.workers = o.workers > 0 ? o.workers : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  v.time_budget_seconds = o.time_budget_seconds;
  v.tight_cap = std::max(0, o.tight_cap);
  return v;
}

}  // namespace

extern "C" {

const char* dt_version(void) { return "0.1.0"; }
const char* dt_last_error(void) { return last_error.c_str(); }
size_t dt_last_error_offset(void) { return last_offset; }
void dt_string_free(char* s) { std::free(s); }

dt_status dt_graph_from_graph6(const char* text, dt_graph** out) {
  if (!text || !out) return fail(DT_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = new dt_graph{parse_graph6(text)}; });
}

dt_status dt_graph_from_family(const char* spec, dt_graph** out) {
  if (!spec || !out) return fail(DT_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = new dt_graph{FamilySpec::parse(spec).build()}; });
}

dt_status dt_graph_from_edges(int n, const int* edges, size_t edge_count, dt_graph** out) {
  if (!out || (!edges && edge_count > 0)) return fail(DT_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    std::vector<Edge> list;
    for (size_t i = 0; i < edge_count; ++i) list.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = new dt_graph{Graph(n, list)};
  });
}

void dt_graph_free(dt_graph* g) { delete g; }
int dt_graph_order(const dt_graph* g) { return g ? g->graph.order() : 0; }
int dt_graph_size(const dt_graph* g) { return g ? g->graph.size() : 0; }

uint64_t dt_graph_neighbors(const dt_graph* g, int v) {
  if (!g || v < 0 || v >= g->graph.order()) return 0;
  return g->graph.neighbors(v).bits();
}

dt_status dt_graph_to_graph6(const dt_graph* g, char** out) {
  if (!g || !out) return fail(DT_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(encode_graph6(g->graph)); });
}

dt_status dt_minimum_set(const dt_graph* g, dt_variant variant, double budget_seconds, int* value,
                         uint64_t* certificate) {
  if (!g || !value) return fail(DT_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto result = minimum_set(variant_of(variant), g->graph, deadline_for(budget_seconds));
    *value = result.value;
    if (certificate) *certificate = result.certificate.bits();
  });
}

dt_status dt_oracle_min_set(const dt_graph* g, dt_variant variant, int* value, uint64_t* certificate) {
  if (!g || !value) return fail(DT_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto result = oracle_min_set(g->graph, variant_of(variant));
    *value = result.value;
    if (certificate) *certificate = result.certificate.bits();
  });
}

int dt_is_valid_set(const dt_graph* g, dt_variant variant, uint64_t set) {
  if (!g) return 0;
  const VertexSet s(set);
  if (!s.subset_of(g->graph.vertices())) return 0;
  try {
    return satisfies(variant_of(variant), g->graph, s) ? 1 : 0;
  } catch (...) {
    return 0;
  }
}

dt_status dt_parameter_triple(const dt_graph* g, double budget_seconds, dt_triple* out) {
  if (!g || !out) return fail(DT_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto t = parameter_triple(g->graph, deadline_for(budget_seconds));
    *out = dt_triple{t.gamma, t.gamma_t.value_or(0), t.gamma_c.value_or(0), t.gamma_cert.bits(),
                     t.gamma_t_cert ? t.gamma_t_cert->bits() : 0, t.gamma_c_cert ? t.gamma_c_cert->bits() : 0};
  });
}

dt_status dt_evaluate_bound(int bound, const dt_triple* t, dt_verdict* out) {
  if (!t || !out) return fail(DT_ERR_ARGUMENT, "null argument");
  if (bound < 1 || bound > 9) return fail(DT_ERR_ARGUMENT, "bound must be 1..9");
  return guarded([&] {
    const auto v = evaluate_bound(static_cast<BoundId>(bound), triple_from(*t));
    dt_verdict r{};
    r.bound = bound;
    r.status = static_cast<dt_bound_status>(v.status);
    if (v.main) {
      r.lhs = v.main->lhs;
      r.rhs = v.main->rhs;
      r.slack = v.main->slack;
    }
    r.doubled = v.doubled ? 1 : 0;
    if (v.chain) {
      r.has_chain = 1;
      r.chain_lhs = v.chain->lhs;
      r.chain_rhs = v.chain->rhs;
      r.chain_slack = v.chain->slack;
    }
    *out = r;
  });
}

dt_status dt_params_json(const dt_graph* g, double budget_seconds, char** out) {
  if (!g || !out) return fail(DT_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    const auto t = parameter_triple(g->graph, deadline_for(budget_seconds));
    *out = copy_string(params_json(g->graph, t).dump(2));
  });
}

void dt_verify_options_init(dt_verify_options* opts) {
  if (!opts) return;
  *opts = dt_verify_options{};
  opts->workers = 0;
  opts->time_budget_seconds = 10.0;
  opts->tight_cap = 5;
  opts->format = DT_FORMAT_CSV;
}

dt_status dt_verify(const dt_verify_options* opts, dt_report** out) {
  if (!opts || !out) return fail(DT_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    auto source = build_source(*opts);
    const auto options = verify_options(*opts);

    std::ofstream file;
    std::ostream* stream = &std::cout;
    if (opts->format != DT_FORMAT_NONE && opts->output_path && std::strcmp(opts->output_path, "-") != 0) {
      file.open(opts->output_path);
      if (!file) throw std::ios_base::failure(std::string("cannot write ") + opts->output_path);
      stream = &file;
    }

    auto report = std::make_unique<dt_report>();
    if (opts->format == DT_FORMAT_CSV) {
      CsvWriter csv(*stream);
      report->summary = verify_corpus(*source, options, [&](const ReportRow& row) { csv.write(row); });
    } else if (opts->format == DT_FORMAT_JSON) {
      std::vector<ReportRow> rows;
      report->summary = verify_corpus(*source, options, [&](const ReportRow& row) { rows.push_back(row); });
      *stream << report_json(report->summary, rows).dump(2) << '\n';
    } else {
      report->summary = verify_corpus(*source, options);
    }
    stream->flush();
    if (!*stream) throw std::ios_base::failure("write failed");
    *out = report.release();
  });
}

void dt_report_free(dt_report* r) { delete r; }

int dt_report_exit_code(const dt_report* r) { return r ? r->summary.exit_code() : 1; }

dt_status dt_report_stats_get(const dt_report* r, dt_report_stats* out) {
  if (!r || !out) return fail(DT_ERR_ARGUMENT, "null argument");
  const auto& s = r->summary;
  dt_report_stats st{};
  st.parsed = s.parsed;
  st.verified = s.verified;
  st.skipped = s.skipped();
  st.unsolved = s.unsolved;
  st.counterexamples = static_cast<long>(s.counterexamples.size());
  st.inconsistencies = static_cast<long>(s.inconsistencies.size());
  for (int b = 0; b < 9; ++b) {
    for (int k = 0; k < 4; ++k) st.tallies[b][k] = s.tallies[b].by_status[k];
    st.tight_witnesses[b] = static_cast<long>(s.tight[b].size());
  }
  st.lemma_refuted = s.lemma[static_cast<int>(LemmaStatus::refuted)];
  st.theorem9_cases = s.theorem9[0] + s.theorem9[1];
  st.theorem9_b8_consistent = s.theorem9_b8_consistent;
  *out = st;
  return DT_OK;
}

dt_status dt_report_summary_text(const dt_report* r, char** out) {
  if (!r || !out) return fail(DT_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(summary_text(r->summary)); });
}

dt_status dt_report_summary_json(const dt_report* r, char** out) {
  if (!r || !out) return fail(DT_ERR_ARGUMENT, "null argument");
  return guarded([&] { *out = copy_string(to_json(r->summary).dump(2)); });
}

dt_status dt_find_tight(const dt_verify_options* opts, int bound, size_t limit, char** out) {
  if (!opts || !out) return fail(DT_ERR_ARGUMENT, "null argument");
  if (bound < 1 || bound > 9) return fail(DT_ERR_ARGUMENT, "bound must be 1..9");
  return guarded([&] {
    auto source = build_source(*opts);
    const auto witnesses = find_tight(*source, static_cast<BoundId>(bound), limit, verify_options(*opts));
    auto list = nlohmann::json::array();
    for (const auto& w : witnesses) list.push_back(to_json(w));
    *out = copy_string(list.dump(2));
  });
}

dt_status dt_families_check(double budget_seconds, char** out, int* all_match) {
  if (!out) return fail(DT_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    bool ok = true;
    auto list = nlohmann::json::array();
    for (const auto& c : cross_check_families(budget_seconds)) {
      ok = ok && c.matches();
      list.push_back({{"graph", c.graph},
                      {"parameter", c.parameter},
                      {"expected", c.expected},
                      {"solved", c.solved ? nlohmann::json(*c.solved) : nlohmann::json(nullptr)},
                      {"seconds", c.seconds},
                      {"matches", c.matches()}});
    }
    if (all_match) *all_match = ok ? 1 : 0;
    *out = copy_string(list.dump(2));
  });
}

}  // extern "C"
