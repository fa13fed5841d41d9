#include "liedual/report.hpp"

#include <algorithm>

namespace liedual {

void Report::add(std::string name, bool pass, std::string expected, std::string actual) {
  checks.push_back({std::move(name), pass, std::move(expected), std::move(actual)});
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  for (const auto& n : other.notes)
    if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(n);
}

std::size_t Report::passed() const {
  return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [](const Check& c) { return c.pass; }));
}

std::string Report::summary() const {
  return std::string(ok() ? "PASS " : "FAIL ") + std::to_string(passed()) + "/" + std::to_string(checks.size());
}

}  // namespace liedual
