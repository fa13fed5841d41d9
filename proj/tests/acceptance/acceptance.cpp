// Acceptance run: prints one PASS/FAIL line per criterion and exits non-zero
// when any criterion fails. All comparisons are exact; the only tolerances are
// the wall-clock limits of criteria 1 and 2.

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

#include "liedual/branching.hpp"
#include "liedual/minrep.hpp"
#include "liedual/theta.hpp"

using namespace liedual;

namespace {

constexpr double kTablesSeconds = 1.0;
constexpr double kRulesSeconds = 300.0;

struct Outcome {
  bool pass;
  std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string first_failure(const Report& r) {
  for (const auto& c : r.checks)
    if (!c.pass) return "; first failure " + c.name + ": expected " + c.expected + ", got " + c.actual;
  return "";
}

Outcome tables() {
  const auto t0 = std::chrono::steady_clock::now();
  const std::filesystem::path dir = LIEDUAL_FIXTURES_DIR;
  Report r;
  for (auto k : {TableKind::Split, TableKind::Quasisplit}) r.append(verify_table(load_table(fixture_path(dir, k), k)));
  const double s = seconds_since(t0);
  std::ostringstream d;
  d << r.summary() << " in " << s << "s (limit " << kTablesSeconds << "s)" << first_failure(r);
  return {r.ok() && r.checks.size() == 36 && s < kTablesSeconds, d.str()};
}

Outcome rules() {
  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  for (const auto& id : rule_ids()) r.append(verify_rule(id, 4));
  const double s = seconds_since(t0);
  std::ostringstream d;
  d << r.summary() << " in " << s << "s (limit " << kRulesSeconds << "s)" << first_failure(r);
  return {r.ok() && s < kRulesSeconds, d.str()};
}

Outcome split_formula() {
  const auto r = verify_split_multiplicity(12, 8);
  return {r.ok(), r.summary() + " types with a+b+c <= 12, n <= 8" + first_failure(r)};
}

Outcome infchar() {
  const auto r = verify_infchar(10, 1000);
  return {r.ok(), r.summary() + " (Spin(8) x U(1) pairs n <= 10, 1000 random triples, lift(0,0,0))" + first_failure(r)};
}

Outcome quasisplit() {
  const auto r = compare_ps_vs_stabilized(12, 4, 12);
  return {r.ok(), r.summary() + " cases x+y+z <= 12, 0 <= m <= 4, N = 12" + first_failure(r)};
}

Outcome signs() {
  const auto r = verify_sign_rules(6);
  return {r.ok(), r.summary() + " witnesses with first level <= 6" + first_failure(r)};
}

Outcome growth() {
  std::size_t accepted = 0, total = 0;
  std::string bad;
  auto check = [&](const MultiplicitySeries& s) {
    ++total;
    const auto v = verify_growth(s);
    if (v.accepted && v.bound == s.stabilized) ++accepted;
    else if (bad.empty()) bad = s.target + ": " + v.reason;
  };
  const auto split_levels = dualpair_levels(DualPairCase::SplitJSplitE, 8);
  for (int a = 0; a <= 12; ++a)
    for (int b = 0; a + b <= 12; ++b)
      for (int c = 0; a + b + c <= 12; c += 1) {
        if ((a + b + c) % 2 != 0) continue;
        const Weight t{{int_coord({a}), int_coord({b}), int_coord({c}), int_coord({0})}, {}};
        check(multiplicity_series(DualPairCase::SplitJSplitE, split_levels, t, std::nullopt));
      }
  const auto herm_levels = dualpair_levels(DualPairCase::HermJMixedE, 12);
  for (int x = 0; x <= 12; ++x)
    for (int y = 0; y <= x; ++y)
      for (int z = 0; x + y + z <= 12; ++z) {
        if ((x + y + z) % 2 != 0) continue;
        for (int m = 0; m <= 4; ++m) {
          const Weight t{{int_coord({x, y}), int_coord({z})}, {}};
          check(multiplicity_series(DualPairCase::HermJMixedE, herm_levels, t, Rational(m)));
        }
      }
  // negative test: a decreasing step must be rejected
  auto corrupted = multiplicity_series(DualPairCase::SplitJSplitE, split_levels,
                                       Weight{{int_coord({2}), int_coord({2}), int_coord({0}), int_coord({0})}, {}},
                                       std::nullopt);
  corrupted.values[6] = corrupted.values[5] - 1;
  const bool rejected = !verify_growth(corrupted).accepted;
  std::ostringstream d;
  d << accepted << "/" << total << " series accepted with bound = stabilized value; corrupted series "
    << (rejected ? "rejected" : "ACCEPTED") << (bad.empty() ? "" : "; first failure " + bad);
  return {accepted == total && rejected, d.str()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 tables", tables},        {"2 closed forms vs oracle", rules}, {"3 split multiplicity formula", split_formula},
      {"4 infinitesimal character", infchar}, {"5 quasi-split multiplicity", quasisplit}, {"6 sign rules", signs},
      {"7 growth verifier", growth},
  };
  bool all = true;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << std::endl;
  }
  return all ? 0 : 1;
}
