#include "domtriple/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace domtriple {

using nlohmann::json;

CsvWriter::CsvWriter(std::ostream& out) : out_(out) { out_ << header() << '\n'; }

void CsvWriter::write(const ReportRow& row) { out_ << format(row) << '\n'; }

std::string CsvWriter::header() {
  std::string h = "graph6,n,m,gamma,gamma_t,gamma_c";
  for (auto b : kAllBounds) {
    h += ',';
    h += to_string(b);
  }
  h += ",slack_B8";
  return h;
}

std::string CsvWriter::format(const ReportRow& row) {
  std::ostringstream line;
  line << row.graph6 << ',' << row.n << ',' << row.m;
  if (row.status != RowStatus::verified) {
    const std::string_view marker = row.status == RowStatus::unsolved       ? "unsolved"
                                    : row.status == RowStatus::inconsistent ? "inconsistent"
                                                                            : "skipped";
    line << ",,,";
    for (std::size_t i = 0; i < kAllBounds.size(); ++i) line << ',' << marker;
    line << ',';
    return line.str();
  }
  const auto& t = row.triple;
  line << ',' << t.gamma << ',';
  if (t.gamma_t) line << *t.gamma_t;
  line << ',';
  if (t.gamma_c) line << *t.gamma_c;
  for (const auto& v : row.verdicts) line << ',' << to_string(v.status);
  line << ',';
  if (const auto& b8 = row.verdict(BoundId::B8); b8.main) line << b8.main->slack;
  return line.str();
}

namespace {

json optional_int(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }
json set_json(const std::optional<VertexSet>& s) { return s ? json(s->to_vector()) : json(nullptr); }
json comparison_json(const Comparison& c) { return {{"lhs", c.lhs}, {"rhs", c.rhs}, {"slack", c.slack}}; }

}  // namespace

json to_json(const ParameterTriple& t) {
  return {
      {"gamma", t.gamma},
      {"gamma_t", optional_int(t.gamma_t)},
      {"gamma_c", optional_int(t.gamma_c)},
      {"certificates",
       {{"gamma", t.gamma_cert.to_vector()}, {"gamma_t", set_json(t.gamma_t_cert)}, {"gamma_c", set_json(t.gamma_c_cert)}}},
  };
}

json to_json(const BoundVerdict& v) {
  json j = {{"bound", to_string(v.bound)}, {"status", to_string(v.status)}};
  if (v.main) {
    j.update(comparison_json(*v.main));
    if (v.doubled) j["doubled"] = true;
  }
  if (v.chain) j["chain"] = comparison_json(*v.chain);
  return j;
}

json to_json(const ReportRow& row) {
  json j = {{"seq", row.seq}, {"graph6", row.graph6}, {"n", row.n}, {"m", row.m}, {"status", to_string(row.status)}};
  if (!row.note.empty()) j["note"] = row.note;
  if (row.status != RowStatus::verified) return j;
  j["triple"] = to_json(row.triple);
  json verdicts = json::array();
  for (const auto& v : row.verdicts) verdicts.push_back(to_json(v));
  j["verdicts"] = std::move(verdicts);
  j["lemma_gamma2"] = to_string(row.lemma);
  j["theorem9"] = to_string(row.theorem9);
  if (row.oracle) j["oracle"] = to_json(*row.oracle);
  return j;
}

json to_json(const Witness& w) {
  json j = {{"seq", w.seq}, {"graph6", w.graph6}, {"triple", to_json(w.triple)}, {"oracle_confirmed", w.confirmed}};
  j["oracle"] = w.oracle ? to_json(*w.oracle) : json(nullptr);
  return j;
}

json to_json(const VerificationSummary& s) {
  json tallies = json::object();
  json tight = json::object();
  for (auto b : kAllBounds) {
    const auto& t = s.tallies[index_of(b)];
    json counts = json::object();
    for (auto st : {BoundStatus::holds, BoundStatus::tight, BoundStatus::violated, BoundStatus::not_applicable}) {
      counts[std::string(to_string(st))] = t.count(st);
    }
    tallies[std::string(to_string(b))] = std::move(counts);
    json list = json::array();
    for (const auto& w : s.tight[index_of(b)]) list.push_back(to_json(w));
    tight[std::string(to_string(b))] = std::move(list);
  }
  json counterexamples = json::array();
  for (const auto& c : s.counterexamples) {
    counterexamples.push_back({{"seq", c.seq},
                               {"graph6", c.graph6},
                               {"solver", to_json(c.solver)},
                               {"oracle", to_json(c.oracle)},
                               {"verdict", to_json(c.verdict)}});
  }
  json inconsistencies = json::array();
  for (const auto& i : s.inconsistencies) {
    inconsistencies.push_back({{"seq", i.seq}, {"graph6", i.graph6}, {"message", i.message}});
  }
  return {
      {"parsed", s.parsed},
      {"verified", s.verified},
      {"skipped_disconnected", s.skipped_disconnected},
      {"skipped_isolated", s.skipped_isolated},
      {"unsolved", s.unsolved},
      {"bounds", std::move(tallies)},
      {"lemma_gamma2",
       {{"confirmed", s.lemma[0]}, {"refuted", s.lemma[1]}, {"not_applicable", s.lemma[2]}}},
      {"theorem9",
       {{"case_a", s.theorem9[0]}, {"case_b", s.theorem9[1]}, {"neither", s.theorem9[2]},
        {"b8_consistent", s.theorem9_b8_consistent}}},
      {"tight_witnesses", std::move(tight)},
      {"counterexamples", std::move(counterexamples)},
      {"inconsistencies", std::move(inconsistencies)},
      {"warnings", s.warnings},
      {"aborted", s.aborted},
      {"exit_code", s.exit_code()},
  };
}

json report_json(const VerificationSummary& s, const std::vector<ReportRow>& rows) {
  json list = json::array();
  for (const auto& r : rows) list.push_back(to_json(r));
  return {{"summary", to_json(s)}, {"rows", std::move(list)}};
}

json params_json(const Graph& g, const ParameterTriple& t) {
  json verdicts = json::array();
  for (const auto& v : evaluate_all(t)) verdicts.push_back(to_json(v));
  return {
      {"n", g.order()},
      {"m", g.size()},
      {"triple", to_json(t)},
      {"verdicts", std::move(verdicts)},
      {"lemma_gamma2", to_string(check_lemma_gamma2(t))},
      {"theorem9", to_string(check_theorem9_cases(t))},
  };
}

std::string summary_text(const VerificationSummary& s) {
  std::ostringstream out;
  out << "graphs: " << s.parsed << " parsed, " << s.verified << " verified, " << s.skipped()
      << " skipped (" << s.skipped_disconnected << " disconnected, " << s.skipped_isolated
      << " with isolated vertex), " << s.unsolved << " unsolved\n";
  out << "bound  holds     tight     violated  n/a\n";
  for (auto b : kAllBounds) {
    const auto& t = s.tallies[index_of(b)];
    out << to_string(b) << "     ";
    for (auto st : {BoundStatus::holds, BoundStatus::tight, BoundStatus::violated, BoundStatus::not_applicable}) {
      std::string cell = std::to_string(t.count(st));
      cell.resize(std::max<std::size_t>(cell.size() + 1, 10), ' ');
      out << cell;
    }
    out << '\n';
  }
  out << "gamma=2 lemma: " << s.lemma[0] << " confirmed, " << s.lemma[1] << " refuted\n";
  out << "gamma_t - gamma_c in {0,-1}: " << s.theorem9[0] + s.theorem9[1] << " graphs, "
      << s.theorem9_b8_consistent << " satisfy B8\n";
  out << "B8 counterexamples: " << s.counterexamples.size() << '\n';
  for (const auto& c : s.counterexamples) out << "  " << c.graph6 << '\n';
  for (const auto& i : s.inconsistencies) out << "INCONSISTENT " << i.graph6 << ": " << i.message << '\n';
  for (const auto& w : s.warnings) out << "warning: " << w << '\n';
  if (s.aborted) out << "run aborted after a failed proved relation\n";
  return out.str();
}

}  // namespace domtriple
