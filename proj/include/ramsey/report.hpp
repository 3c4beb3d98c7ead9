#ifndef RAMSEY_REPORT_HPP
#define RAMSEY_REPORT_HPP

// Flat run reports written by the command-line tool: JSON (round-trips) or
// CSV (results table only).

#include <cstdint>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramsey/solver.hpp"

namespace ramsey {

inline constexpr const char* kArtifactVersion = "1.0.0";
inline constexpr int kReportFormat = 1;

struct RunReport {
  std::string command;                        // the command line as typed
  nlohmann::json inputs = nlohmann::json::object();
  std::vector<nlohmann::json> results;        // one object per row
  double wall_seconds = 0;                    // excluded from the results table
  std::uint64_t nodes = 0;
  std::map<std::string, std::string> versions{{"ramsey", kArtifactVersion}, {"report_format", std::to_string(kReportFormat)}};

  friend bool operator==(const RunReport&, const RunReport&) = default;
};

inline void to_json(nlohmann::json& j, const RunReport& r) {
  j = nlohmann::json{{"command", r.command},         {"inputs", r.inputs}, {"results", r.results},
                     {"wall_seconds", r.wall_seconds}, {"nodes", r.nodes},   {"versions", r.versions}};
}

inline void from_json(const nlohmann::json& j, RunReport& r) {
  j.at("command").get_to(r.command);
  r.inputs = j.at("inputs");
  r.results = j.at("results").get<std::vector<nlohmann::json>>();
  j.at("wall_seconds").get_to(r.wall_seconds);
  j.at("nodes").get_to(r.nodes);
  r.versions = j.at("versions").get<std::map<std::string, std::string>>();
}

inline std::string serialize_report(const RunReport& r) { return nlohmann::json(r).dump(2) + "\n"; }

inline RunReport parse_report(const std::string& text) { return nlohmann::json::parse(text).get<RunReport>(); }

/// Results table as CSV: one column per key seen in any row, in sorted order.
inline std::string report_csv(const RunReport& r) {
  std::set<std::string> keys;
  for (const auto& row : r.results)
    for (auto it = row.begin(); it != row.end(); ++it) keys.insert(it.key());
  auto cell = [](const nlohmann::json& v) {
    std::string s = v.is_string() ? v.get<std::string>() : v.dump();
    if (s.find_first_of(",\"\n") != std::string::npos) {
      std::string q = "\"";
      for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
      return q + "\"";
    }
    return s;
  };
  std::ostringstream out;
  bool first = true;
  for (const auto& k : keys) {
    out << (first ? "" : ",") << k;
    first = false;
  }
  out << "\n";
  for (const auto& row : r.results) {
    first = true;
    for (const auto& k : keys) {
      out << (first ? "" : ",");
      if (row.contains(k)) out << cell(row.at(k));
      first = false;
    }
    out << "\n";
  }
  return out.str();
}

/// "u-v B" strings, 1-based.
inline std::vector<std::string> format_moves(const std::vector<Move>& moves) {
  std::vector<std::string> out;
  for (const Move& m : moves) out.push_back(to_string(m.edge) + (m.color == Color::Blue ? " B" : " R"));
  return out;
}

/// {outcome, nodes, table_hits, pv}; an unsolved search reports "unsolved".
inline nlohmann::json solve_record(const SolveResult& r) {
  nlohmann::json j{{"outcome", r.solved() ? std::string(to_string(r.outcome)) : std::string("unsolved")},
                   {"nodes", r.nodes_expanded},
                   {"table_hits", r.table_hits},
                   {"pv", format_moves(r.pv)}};
  if (!r.diagnostic.empty()) j["diagnostic"] = r.diagnostic;
  return j;
}

}  // namespace ramsey

#endif  // RAMSEY_REPORT_HPP
