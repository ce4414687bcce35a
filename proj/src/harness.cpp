#include "domtriple/harness.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "domtriple/enumerate.hpp"
#include "domtriple/error.hpp"
#include "domtriple/oracle.hpp"

namespace domtriple {

std::optional<CorpusItem> Graph6Source::next() {
  auto entry = reader_.next();
  if (!entry) return std::nullopt;
  try {
    return CorpusItem{parse_graph6(entry->text), entry->text};
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(entry->line) + ": invalid graph6 '" + entry->text +
                         "'",
                     e.offset());
  }
}

EnumerationSource::EnumerationSource(int n, bool dedupe) : n_(n), dedupe_(dedupe) {
  if (n < 1 || n > kMaxEnumerationOrder) {
    throw RangeError("enumeration supports 1.." + std::to_string(kMaxEnumerationOrder) +
                     " vertices, got " + std::to_string(n));
  }
  if (dedupe_) {
    for (auto& g : graph_classes(n)) {
      if (is_connected(g)) classes_.push_back(std::move(g));
    }
  } else {
    end_ = std::uint64_t{1} << (n * (n - 1) / 2);
  }
}

std::optional<CorpusItem> EnumerationSource::next() {
  if (dedupe_) {
    if (index_ >= classes_.size()) return std::nullopt;
    const Graph& g = classes_[index_++];
    return CorpusItem{g, encode_graph6(g)};
  }
  while (code_ < end_) {
    Graph g = graph_from_code(n_, code_++);
    if (is_connected(g)) {
      auto text = encode_graph6(g);
      return CorpusItem{std::move(g), std::move(text)};
    }
  }
  return std::nullopt;
}

std::optional<CorpusItem> ListSource::next() {
  if (index_ >= graphs_.size()) return std::nullopt;
  const Graph& g = graphs_[index_++];
  return CorpusItem{g, encode_graph6(g)};
}

std::optional<CorpusItem> ChainSource::next() {
  while (index_ < parts_.size()) {
    if (auto item = parts_[index_]->next()) return item;
    ++index_;
  }
  return std::nullopt;
}

std::string_view to_string(RowStatus s) {
  switch (s) {
    case RowStatus::verified: return "verified";
    case RowStatus::skipped_disconnected: return "skipped_disconnected";
    case RowStatus::skipped_isolated: return "skipped_isolated";
    case RowStatus::unsolved: return "unsolved";
    case RowStatus::inconsistent: return "inconsistent";
  }
  return "?";
}

int VerificationSummary::exit_code() const {
  if (!inconsistencies.empty()) return 1;
  if (!counterexamples.empty()) return 2;
  return 0;
}

namespace {

std::string triple_text(const ParameterTriple& t) {
  auto opt = [](const std::optional<int>& v) { return v ? std::to_string(*v) : std::string("-"); };
  return "(" + std::to_string(t.gamma) + ", " + opt(t.gamma_t) + ", " + opt(t.gamma_c) + ")";
}

// Certificates must be valid sets of the reported size.
std::optional<std::string> certificate_problem(const Graph& g, const ParameterTriple& t) {
  if (t.gamma_cert.size() != t.gamma || !is_dominating(g, t.gamma_cert)) {
    return "gamma certificate " + t.gamma_cert.to_string() + " is invalid";
  }
  if (t.gamma_t && (t.gamma_t_cert->size() != *t.gamma_t || !is_total_dominating(g, *t.gamma_t_cert))) {
    return "gamma_t certificate " + t.gamma_t_cert->to_string() + " is invalid";
  }
  if (t.gamma_c && (t.gamma_c_cert->size() != *t.gamma_c || !is_connected_dominating(g, *t.gamma_c_cert))) {
    return "gamma_c certificate " + t.gamma_c_cert->to_string() + " is invalid";
  }
  return std::nullopt;
}

std::vector<ReportRow> analyze_batch(const std::vector<CorpusItem>& items, std::uint64_t first_seq,
                                     const VerifyOptions& options) {
  std::vector<ReportRow> rows(items.size());
  const int workers = std::clamp<int>(options.workers, 1, static_cast<int>(std::max<std::size_t>(items.size(), 1)));
  if (workers == 1) {
    for (std::size_t i = 0; i < items.size(); ++i) rows[i] = analyze_graph(items[i], first_seq + i, options);
    return rows;
  }
  std::atomic<std::size_t> cursor{0};
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = cursor++; i < items.size(); i = cursor++) {
          rows[i] = analyze_graph(items[i], first_seq + i, options);
        }
      });
    }
  }
  return rows;
}

Witness make_witness(const ReportRow& row, BoundId bound, const VerifyOptions& options) {
  Witness w;
  w.seq = row.seq;
  w.graph6 = row.graph6;
  w.triple = row.triple;
  if (row.n <= options.oracle_max_vertices) {
    const Graph g = parse_graph6(row.graph6);
    w.oracle = oracle_triple(g);
    w.confirmed = w.oracle->same_values(row.triple) &&
                  evaluate_bound(bound, *w.oracle).status == BoundStatus::tight;
  }
  return w;
}

// Pulls up to `batch_size` items; returns false at end of input.
bool fill_batch(GraphSource& source, std::size_t batch_size, std::vector<CorpusItem>& batch) {
  batch.clear();
  while (batch.size() < batch_size) {
    auto item = source.next();
    if (!item) break;
    batch.push_back(std::move(*item));
  }
  return !batch.empty();
}

class Aggregator {
 public:
  Aggregator(VerificationSummary& s, const VerifyOptions& o) : s_(s), o_(o) {}

  void add(const ReportRow& row) {
    ++s_.parsed;
    switch (row.status) {
      case RowStatus::skipped_disconnected: ++s_.skipped_disconnected; return;
      case RowStatus::skipped_isolated: ++s_.skipped_isolated; return;
      case RowStatus::unsolved:
        ++s_.unsolved;
        s_.warnings.push_back("unsolved within time budget, excluded from aggregates: " + row.graph6);
        return;
      case RowStatus::inconsistent: fail(row, row.note); return;
      case RowStatus::verified: break;
    }

    ++s_.verified;
    for (const auto& v : row.verdicts) {
      const int b = index_of(v.bound);
      ++s_.tallies[b].by_status[static_cast<int>(v.status)];
      if (v.status == BoundStatus::violated && is_theorem(v.bound)) {
        fail(row, std::string(to_string(v.bound)) + " violated by triple " + triple_text(row.triple));
      }
      if (v.status == BoundStatus::tight && s_.tight[b].size() < static_cast<std::size_t>(o_.tight_cap)) {
        auto w = make_witness(row, v.bound, o_);
        if (w.oracle && !w.confirmed) {
          fail(row, std::string(to_string(v.bound)) + " tight witness not reproduced by oracle: " +
                        triple_text(*w.oracle));
        }
        s_.tight[b].push_back(std::move(w));
      }
    }

    ++s_.lemma[static_cast<int>(row.lemma)];
    if (row.lemma == LemmaStatus::refuted) {
      fail(row, "gamma = 2 but gamma_t != gamma_c: " + triple_text(row.triple));
    }

    ++s_.theorem9[static_cast<int>(row.theorem9)];
    const auto& b8 = row.verdict(BoundId::B8);
    if (row.theorem9 != Theorem9Case::neither) {
      if (b8.status == BoundStatus::violated) {
        fail(row, "B8 violated although gamma_t - gamma_c in {0, -1}: " + triple_text(row.triple));
      } else {
        ++s_.theorem9_b8_consistent;
      }
    }

    if (b8.status == BoundStatus::violated) confirm_counterexample(row, b8);
  }

 private:
  void confirm_counterexample(const ReportRow& row, const BoundVerdict& b8) {
    if (!row.oracle) {
      fail(row, "B8 counterexample candidate too large for oracle recomputation: " + triple_text(row.triple));
      return;
    }
    if (!row.oracle->same_values(row.triple)) {
      fail(row, "solver triple " + triple_text(row.triple) + " disagrees with oracle " +
                    triple_text(*row.oracle));
      return;
    }
    s_.counterexamples.push_back({row.seq, row.graph6, row.triple, *row.oracle, b8});
  }

  void fail(const ReportRow& row, std::string message) {
    s_.inconsistencies.push_back({row.seq, row.graph6, std::move(message)});
  }

  VerificationSummary& s_;
  const VerifyOptions& o_;
};

}  // namespace

ReportRow analyze_graph(const CorpusItem& item, std::uint64_t seq, const VerifyOptions& options) {
  const Graph& g = item.graph;
  ReportRow row;
  row.seq = seq;
  row.graph6 = item.graph6;
  row.n = g.order();
  row.m = g.size();
  if (!is_connected(g)) {
    row.status = RowStatus::skipped_disconnected;
    row.note = "disconnected: gamma_c undefined";
    return row;
  }
  if (int v = first_isolated_vertex(g); v >= 0) {
    row.status = RowStatus::skipped_isolated;
    row.note = "vertex " + std::to_string(v) + " is isolated: gamma_t undefined";
    return row;
  }

  const Deadline deadline = options.time_budget_seconds > 0
                                ? Deadline::after(std::chrono::duration<double>(options.time_budget_seconds))
                                : Deadline{};
  try {
    row.triple = parameter_triple(g, deadline);
  } catch (const SearchTimeout&) {
    row.status = RowStatus::unsolved;
    std::ostringstream note;
    note << "exceeded time budget of " << options.time_budget_seconds << " s";
    row.note = note.str();
    return row;
  } catch (const InconsistencyError& e) {
    row.status = RowStatus::inconsistent;
    row.note = e.what();
    return row;
  }
  if (auto problem = certificate_problem(g, row.triple)) {
    row.status = RowStatus::inconsistent;
    row.note = *problem;
    return row;
  }

  row.verdicts = evaluate_all(row.triple);
  row.lemma = check_lemma_gamma2(row.triple);
  row.theorem9 = check_theorem9_cases(row.triple);
  if (row.verdict(BoundId::B8).status == BoundStatus::violated && row.n <= options.oracle_max_vertices) {
    row.oracle = oracle_triple(g);
  }
  return row;
}

VerificationSummary verify_corpus(GraphSource& source, const VerifyOptions& options, const RowSink& sink) {
  VerificationSummary summary;
  Aggregator aggregate(summary, options);
  std::vector<CorpusItem> batch;
  std::uint64_t seq = 0;
  while (fill_batch(source, std::max<std::size_t>(options.batch_size, 1), batch)) {
    const auto rows = analyze_batch(batch, seq, options);
    seq += rows.size();
    for (const auto& row : rows) {
      aggregate.add(row);
      if (sink) sink(row);
    }
    if (!summary.inconsistencies.empty()) {
      summary.aborted = true;
      break;
    }
  }
  return summary;
}

std::vector<Witness> find_tight(GraphSource& source, BoundId bound, std::size_t limit,
                                const VerifyOptions& options) {
  std::vector<Witness> out;
  if (limit == 0) return out;
  std::vector<CorpusItem> batch;
  std::uint64_t seq = 0;
  while (fill_batch(source, std::max<std::size_t>(options.batch_size, 1), batch)) {
    const auto rows = analyze_batch(batch, seq, options);
    seq += rows.size();
    for (const auto& row : rows) {
      if (row.status != RowStatus::verified || row.verdict(bound).status != BoundStatus::tight) continue;
      out.push_back(make_witness(row, bound, options));
      if (out.size() == limit) return out;
    }
  }
  return out;
}

}  // namespace domtriple
