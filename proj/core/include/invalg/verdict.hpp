#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace invalg {

/// One named condition of a check, with a witness when it fails.
struct Clause {
  std::string name;
  bool passed = true;
  std::string witness;
};

/// Result of a multi-clause check. Every clause is recorded, failed or not.
struct Verdict {
  std::vector<Clause> clauses;

  void add(std::string name, bool passed, std::string witness = {}) {
    clauses.push_back({std::move(name), passed, std::move(witness)});
  }
  void append(const Verdict& other) {
    clauses.insert(clauses.end(), other.clauses.begin(), other.clauses.end());
  }
  bool passed() const {
    return std::all_of(clauses.begin(), clauses.end(), [](const Clause& c) { return c.passed; });
  }
  const Clause* first_failure() const {
    for (const auto& c : clauses) {
      if (!c.passed) return &c;
    }
    return nullptr;
  }
  const Clause* find(const std::string& name) const {
    for (const auto& c : clauses) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

}  // namespace invalg
