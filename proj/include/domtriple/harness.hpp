#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "domtriple/bounds.hpp"
#include "domtriple/domination.hpp"
#include "domtriple/graph.hpp"
#include "domtriple/graph6.hpp"

namespace domtriple {

struct CorpusItem {
  Graph graph;
  std::string graph6;
};

/// A pull-based stream of graphs. Implementations are single-consumer.
class GraphSource {
 public:
  virtual ~GraphSource() = default;
  /// Throws ParseError with the line number in the message for bad input.
  virtual std::optional<CorpusItem> next() = 0;
};

/// Newline-delimited graph6 text (geng output, files, stdin).
class Graph6Source : public GraphSource {
 public:
  explicit Graph6Source(std::istream& in) : reader_(in) {}
  std::optional<CorpusItem> next() override;

 private:
  Graph6Reader reader_;
};

/// Internal enumeration of connected graphs on n vertices.
class EnumerationSource : public GraphSource {
 public:
  EnumerationSource(int n, bool dedupe);
  std::optional<CorpusItem> next() override;

 private:
  int n_;
  bool dedupe_;
  std::uint64_t code_ = 0;
  std::uint64_t end_ = 0;
  std::vector<Graph> classes_;
  std::size_t index_ = 0;
};

class ListSource : public GraphSource {
 public:
  explicit ListSource(std::vector<Graph> graphs) : graphs_(std::move(graphs)) {}
  std::optional<CorpusItem> next() override;

 private:
  std::vector<Graph> graphs_;
  std::size_t index_ = 0;
};

/// Drains each source in turn.
class ChainSource : public GraphSource {
 public:
  explicit ChainSource(std::vector<std::unique_ptr<GraphSource>> parts) : parts_(std::move(parts)) {}
  std::optional<CorpusItem> next() override;

 private:
  std::vector<std::unique_ptr<GraphSource>> parts_;
  std::size_t index_ = 0;
};

enum class RowStatus { verified, skipped_disconnected, skipped_isolated, unsolved, inconsistent };
std::string_view to_string(RowStatus s);

struct ReportRow {
  std::uint64_t seq = 0;  ///< 0-based position in the input stream
  std::string graph6;
  int n = 0;
  int m = 0;
  RowStatus status = RowStatus::verified;
  ParameterTriple triple;              ///< meaningful when verified
  std::vector<BoundVerdict> verdicts;  ///< B1..B9 when verified
  LemmaStatus lemma = LemmaStatus::not_applicable;
  Theorem9Case theorem9 = Theorem9Case::neither;
  /// Triple recomputed by the exhaustive oracle; set only when B8 was violated.
  std::optional<ParameterTriple> oracle;
  std::string note;

  const BoundVerdict& verdict(BoundId b) const { return verdicts.at(index_of(b)); }
};

struct Witness {
  std::uint64_t seq = 0;
  std::string graph6;
  ParameterTriple triple;
  std::optional<ParameterTriple> oracle;  ///< unset above the oracle size limit
  bool confirmed = false;  ///< oracle triple matches and is tight for the bound
};

struct Counterexample {
  std::uint64_t seq = 0;
  std::string graph6;
  ParameterTriple solver;
  ParameterTriple oracle;
  BoundVerdict verdict;
};

struct Inconsistency {
  std::uint64_t seq = 0;
  std::string graph6;
  std::string message;
};

struct BoundTally {
  std::array<long, 4> by_status{};  ///< indexed by BoundStatus
  long count(BoundStatus s) const { return by_status[static_cast<int>(s)]; }
};

struct VerificationSummary {
  long parsed = 0;
  long verified = 0;
  long skipped_disconnected = 0;
  long skipped_isolated = 0;
  long unsolved = 0;
  std::array<BoundTally, 9> tallies{};
  std::array<long, 3> lemma{};     ///< indexed by LemmaStatus
  std::array<long, 3> theorem9{};  ///< indexed by Theorem9Case
  /// Rows in case_a/case_b whose B8 verdict is holds or tight.
  long theorem9_b8_consistent = 0;
  std::array<std::vector<Witness>, 9> tight;  ///< first `tight_cap` per bound
  std::vector<Counterexample> counterexamples;
  std::vector<Inconsistency> inconsistencies;
  std::vector<std::string> warnings;
  bool aborted = false;

  long skipped() const { return skipped_disconnected + skipped_isolated; }
  /// 1 on any inconsistency, else 2 on a confirmed B8 counterexample, else 0.
  int exit_code() const;
};

struct VerifyOptions {
  int workers = 1;
  double time_budget_seconds = 10.0;  ///< per graph; <= 0 disables
  int tight_cap = 5;
  std::size_t batch_size = 2048;
  /// Largest graph the exhaustive oracle is asked to recompute.
  int oracle_max_vertices = 24;
};

/// Solves and evaluates one graph; pure apart from the clock.
ReportRow analyze_graph(const CorpusItem& item, std::uint64_t seq, const VerifyOptions& options);

using RowSink = std::function<void(const ReportRow&)>;

/// Streams the corpus through `workers` threads. Rows reach `sink` in input
/// order regardless of worker count. Stops early after the batch in which a
/// proved relation fails.
VerificationSummary verify_corpus(GraphSource& source, const VerifyOptions& options,
                                  const RowSink& sink = {});

/// First `limit` graphs in stream order whose verdict for `bound` is tight,
/// each re-checked with the oracle.
std::vector<Witness> find_tight(GraphSource& source, BoundId bound, std::size_t limit,
                                const VerifyOptions& options);

}  // namespace domtriple
