#pragma once

#include <string>
#include <utility>
#include <vector>

namespace ordual {

/// Outcome of one verified claim; `witness` describes the counterexample.
struct Check {
  std::string name;
  bool passed = true;
  std::string witness;
};

/// Ordered list of checks making up a verification.
class CheckList {
 public:
  void add(std::string name, bool passed, std::string witness = {}) {
    checks_.push_back({std::move(name), passed, passed ? std::string{} : std::move(witness)});
  }

  bool passed() const noexcept {
    for (const auto& c : checks_)
      if (!c.passed) return false;
    return true;
  }

  const Check* first_failure() const noexcept {
    for (const auto& c : checks_)
      if (!c.passed) return &c;
    return nullptr;
  }

  const std::vector<Check>& checks() const noexcept { return checks_; }

 private:
  std::vector<Check> checks_;
};

}  // namespace ordual
