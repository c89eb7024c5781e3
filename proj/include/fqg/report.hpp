#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace fqg {

/// One named check. A failed relation check carries the index tuple that
/// witnesses the failure and a count of all failing tuples.
struct Check {
  std::string name;
  bool pass = true;
  std::vector<long> witness;
  std::string detail;
  std::size_t failures = 0;
};

/// Ordered list of checks on one subject. Check order is the order of
/// evaluation, which keeps serialized reports deterministic.
class Report {
 public:
  Report() = default;
  explicit Report(std::string subject) : subject_(std::move(subject)) {}

  const std::string& subject() const { return subject_; }
  const std::vector<Check>& checks() const { return checks_; }

  bool ok() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
  }

  std::vector<Check> violations() const {
    std::vector<Check> out;
    std::copy_if(checks_.begin(), checks_.end(), std::back_inserter(out), [](const Check& c) { return !c.pass; });
    return out;
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks_)
      if (c.name == name) return &c;
    return nullptr;
  }

  bool passed(const std::string& name) const {
    const Check* c = find(name);
    return c != nullptr && c->pass;
  }

  Check& add(Check c) {
    checks_.push_back(std::move(c));
    return checks_.back();
  }

  Check& add(std::string name, bool pass, std::string detail = {}) {
    return add(Check{std::move(name), pass, {}, std::move(detail), pass ? 0u : 1u});
  }

  /// Appends the checks of another report, prefixing their names.
  void merge(const Report& other, const std::string& prefix = {}) {
    for (auto c : other.checks_) {
      c.name = prefix + c.name;
      checks_.push_back(std::move(c));
    }
  }

 private:
  std::string subject_;
  std::vector<Check> checks_;
};

}  // namespace fqg
