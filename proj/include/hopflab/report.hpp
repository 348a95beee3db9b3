#pragma once

#include <algorithm>
#include <string>
#include <vector>

namespace hopflab {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Ordered list of named exact checks.
struct Report {
  std::vector<Check> checks;

  void add(std::string name, bool ok, std::string detail = {}) {
    checks.push_back({std::move(name), ok, std::move(detail)});
  }
  void append(const Report& other, const std::string& prefix = {}) {
    for (const auto& c : other.checks) checks.push_back({prefix + c.name, c.passed, c.detail});
  }
  bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
  }
  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }
  std::string to_string() const {
    std::string out;
    for (const auto& c : checks) {
      out += (c.passed ? "PASS " : "FAIL ") + c.name;
      if (!c.detail.empty()) out += ": " + c.detail;
      out += "\n";
    }
    return out;
  }
};

/// Keeps failure details readable when the offending tensor is large.
inline std::string clip(const std::string& s, std::size_t limit = 400) {
  if (s.size() <= limit) return s;
  return s.substr(0, limit) + " ...";
}

}  // namespace hopflab
