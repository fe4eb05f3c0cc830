#pragma once

#include <optional>
#include <string>
#include <vector>

namespace omega {

struct Violation {
  std::string rule;
  int dim = -1;
  std::vector<std::string> cells;
  std::string detail;
};

// Collected result of an exhaustive validator. Empty means valid.
struct ValidationReport {
  std::vector<Violation> violations;

  bool ok() const { return violations.empty(); }
  void add(std::string rule, int dim, std::vector<std::string> cells,
           std::string detail = {}) {
    violations.push_back(
        {std::move(rule), dim, std::move(cells), std::move(detail)});
  }
  void merge(const ValidationReport& other, const std::string& prefix = {}) {
    for (auto v : other.violations) {
      if (!prefix.empty()) v.rule = prefix + v.rule;
      violations.push_back(std::move(v));
    }
  }
  bool has_rule(const std::string& rule) const {
    for (auto const& v : violations)
      if (v.rule == rule) return true;
    return false;
  }
};

struct Counterexample {
  int dim = -1;
  std::vector<std::string> cells;
  std::string note;
};

// Outcome of a property check on a functor or category.
struct Verdict {
  bool holds = true;
  std::optional<Counterexample> counterexample;

  static Verdict pass() { return {}; }
  static Verdict fail(int dim, std::vector<std::string> cells,
                      std::string note = {}) {
    return {false, Counterexample{dim, std::move(cells), std::move(note)}};
  }
  explicit operator bool() const { return holds; }
};

}  // namespace omega
