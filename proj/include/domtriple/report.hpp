#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "domtriple/harness.hpp"

namespace domtriple {

/// One line per graph:
///   graph6,n,m,gamma,gamma_t,gamma_c,B1,...,B9,slack_B8
/// Rows that were not verified leave the parameter and slack columns empty
/// and put the row status ("skipped", "unsolved", "inconsistent") in every
/// bound column.
class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out);
  void write(const ReportRow& row);

  static std::string header();
  static std::string format(const ReportRow& row);

 private:
  std::ostream& out_;
};

nlohmann::json to_json(const ParameterTriple& t);
nlohmann::json to_json(const BoundVerdict& v);
nlohmann::json to_json(const ReportRow& row);
nlohmann::json to_json(const Witness& w);
nlohmann::json to_json(const VerificationSummary& s);

/// {"summary": ..., "rows": [...]}
nlohmann::json report_json(const VerificationSummary& s, const std::vector<ReportRow>& rows);

/// Everything `params` prints for one graph.
nlohmann::json params_json(const Graph& g, const ParameterTriple& t);

/// Multi-line human-readable digest of a run.
std::string summary_text(const VerificationSummary& s);

}  // namespace domtriple
