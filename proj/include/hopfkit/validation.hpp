#pragma once

#include <sstream>
#include <string>
#include <vector>

namespace hopfkit {

struct Violation {
  std::string axiom;
  std::vector<size_t> indices;  // basis indices the failing instance is about
  std::string detail;

  std::string to_string() const {
    std::ostringstream os;
    os << axiom << " (";
    for (size_t i = 0; i < indices.size(); ++i) os << (i ? "," : "") << indices[i];
    os << ")";
    if (!detail.empty()) os << ": " << detail;
    return os.str();
  }
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
  void add(std::string axiom, std::vector<size_t> idx, std::string detail = {}) {
    violations.push_back({std::move(axiom), std::move(idx), std::move(detail)});
  }
  void merge(const ValidationReport& o, const std::string& prefix = {}) {
    for (auto v : o.violations) {
      if (!prefix.empty()) v.axiom = prefix + ": " + v.axiom;
      violations.push_back(std::move(v));
    }
  }
};

// Thrown for malformed inputs (dimension mismatches, non-ideals passed as ideals, ...).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace hopfkit
