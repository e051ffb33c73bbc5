#pragma once

#include <nlohmann/json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "hopfkit/io/presentation.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit::io {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;
inline constexpr const char* kToolVersion = "0.1.0";

// One invocation: echo, per-theorem reports, extra results and replayable witnesses.
// There is no timestamp, so equal command and seed give byte-identical json.
struct ReportDoc {
  std::vector<std::string> command;
  uint64_t seed = 0;
  std::string field;
  std::vector<TheoremReport> reports;
  json results = json::object();
  json witnesses = json::array();

  Status status() const {
    TheoremReport all;
    for (auto& r : reports)
      for (auto& c : r.checks) all.checks.push_back(c);
    return all.status();
  }
};

// 0 pass, 3 hypothesis failure, 4 conclusion failure, 5 inconclusive (parse = 1 and validation = 2
// are decided before any report exists).
inline int exit_code(Status s) {
  switch (s) {
    case Status::Pass: return 0;
    case Status::HypothesisFailure: return 3;
    case Status::Fail: return 4;
    default: return 5;
  }
}

inline json check_json(const Check& c) {
  json o = {{"name", c.name}, {"status", status_name(c.status)}, {"detail", c.detail}, {"witnesses", c.witnesses}};
  if (c.status == Status::UnknownProbabilistic) o["bound"] = c.bound;
  return o;
}

inline json theorem_json(const TheoremReport& r) {
  json checks = json::array();
  for (auto& c : r.checks) checks.push_back(check_json(c));
  json o = {{"id", r.id},
            {"statement", r.statement},
            {"hypotheses", r.hypotheses},
            {"status", status_name(r.status())},
            {"seed", r.seed},
            {"checks", checks}};
  if (!r.failed_stage.empty()) o["failed_stage"] = r.failed_stage;
  return o;
}

inline json report_json(const ReportDoc& d) {
  json reps = json::array();
  for (auto& r : d.reports) reps.push_back(theorem_json(r));
  return {{"schema_version", kSchemaVersion},
          {"tool", {{"name", "hopfkit"}, {"version", kToolVersion}}},
          {"command", d.command},
          {"seed", d.seed},
          {"field", d.field},
          {"status", status_name(d.status())},
          {"reports", reps},
          {"results", d.results},
          {"witnesses", d.witnesses}};
}

inline std::string render_json(const ReportDoc& d) { return pretty(report_json(d)); }

inline std::string render_markdown(const ReportDoc& d) {
  std::ostringstream os;
  os << "# hopfkit report\n\n";
  os << "- command: `";
  for (size_t i = 0; i < d.command.size(); ++i) os << (i ? " " : "") << d.command[i];
  os << "`\n- seed: " << d.seed << "\n- field: " << d.field << "\n- status: **" << status_name(d.status())
     << "**\n- schema_version: " << kSchemaVersion << "\n";
  for (auto& r : d.reports) {
    os << "\n## " << r.id << (r.statement.empty() ? "" : ": " + r.statement) << "\n\n";
    os << "status: **" << status_name(r.status()) << "**";
    if (!r.failed_stage.empty()) os << " (stage: " << r.failed_stage << ")";
    os << "\n";
    if (!r.hypotheses.empty()) {
      os << "\nHypotheses:\n";
      for (auto& h : r.hypotheses) os << "- " << h << "\n";
    }
    if (!r.checks.empty()) {
      os << "\n| check | status | detail |\n|---|---|---|\n";
      for (auto& c : r.checks) {
        std::string detail = c.detail;
        for (auto& w : c.witnesses) detail += (detail.empty() ? "" : "; ") + w;
        std::string cell;
        for (char ch : detail) cell += ch == '|' ? std::string("\\|") : ch == '\n' ? std::string(" ") : std::string(1, ch);
        detail = cell;
        os << "| " << c.name << " | " << status_name(c.status) << " | " << detail << " |\n";
      }
    }
  }
  if (!d.results.empty()) os << "\n## results\n\n```json\n" << d.results.dump(2) << "\n```\n";
  if (!d.witnesses.empty()) os << "\n" << d.witnesses.size() << " replayable witness(es) in the json rendering.\n";
  return os.str();
}

}  // namespace hopfkit::io
