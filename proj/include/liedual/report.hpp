#pragma once

#include <string>
#include <vector>

namespace liedual {

struct Check {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

/// Ordered list of checks; a report passes when every check does.
struct Report {
  std::vector<Check> checks;
  /// Conventions or caveats that apply to the whole report.
  std::vector<std::string> notes;

  void add(std::string name, bool pass, std::string expected, std::string actual);
  void append(const Report& other);
  std::size_t passed() const;
  bool ok() const { return passed() == checks.size(); }
  /// "PASS k/k" or "FAIL k/n".
  std::string summary() const;
};

}  // namespace liedual
