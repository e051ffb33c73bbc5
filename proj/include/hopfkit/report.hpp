#pragma once

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace hopfkit {

enum class Status { Pass, Fail, HypothesisFailure, Inconclusive, UnknownProbabilistic };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::HypothesisFailure: return "hypothesis-failure";
    case Status::Inconclusive: return "inconclusive";
    default: return "unknown-probabilistic";
  }
}

struct Check {
  std::string name;
  Status status = Status::Pass;
  std::string detail;
  std::vector<std::string> witnesses;
  double bound = 0;  // failure probability bound for UnknownProbabilistic
};

// Outcome of one theorem driver: hypotheses first, then conclusion checks.
struct TheoremReport {
  std::string id;
  std::string statement;             // neutral one-line description of what is checked
  std::vector<std::string> hypotheses;  // justification lines for hypotheses that hold
  std::vector<Check> checks;
  std::string failed_stage;          // set on hypothesis failure
  uint64_t seed = 0;

  Check& add(std::string name, Status st, std::string detail = {}, std::vector<std::string> witnesses = {}) {
    checks.push_back({std::move(name), st, std::move(detail), std::move(witnesses), 0});
    return checks.back();
  }
  Check& expect(std::string name, bool ok, std::string detail = {}) {
    return add(std::move(name), ok ? Status::Pass : Status::Fail, std::move(detail));
  }
  void hypothesis(std::string line) { hypotheses.push_back(std::move(line)); }
  void refuse(std::string stage, std::string detail) {
    failed_stage = stage;
    add("hypothesis: " + stage, Status::HypothesisFailure, std::move(detail));
  }

  // Worst status wins: hypothesis failure > fail > inconclusive > probabilistic > pass.
  Status status() const {
    auto rankof = [](Status s) {
      switch (s) {
        case Status::HypothesisFailure: return 4;
        case Status::Fail: return 3;
        case Status::Inconclusive: return 2;
        case Status::UnknownProbabilistic: return 1;
        default: return 0;
      }
    };
    Status worst = Status::Pass;
    for (auto& c : checks)
      if (rankof(c.status) > rankof(worst)) worst = c.status;
    return worst;
  }
  bool passed() const { return status() == Status::Pass; }

  std::string summary() const {
    std::ostringstream os;
    os << id << ": " << status_name(status());
    for (auto& c : checks)
      if (c.status != Status::Pass) os << "\n  " << status_name(c.status) << " " << c.name << (c.detail.empty() ? "" : ": " + c.detail);
    return os.str();
  }
};

}  // namespace hopfkit
