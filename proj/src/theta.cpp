#include "liedual/theta.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <random>
#include <sstream>

#include "liedual/errors.hpp"
#include "liedual/minrep.hpp"
#include "liedual/parallel.hpp"

namespace liedual {

namespace {

const RootSystem& d4() { return root_system(CartanType::parse("D4")); }

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace

TorusCharacterData make_torus_data(Rational a, Rational b, Rational c, std::string case_label) {
  if (a + b + c != Rational(0)) throw InputError("torus character must sum to zero");
  return {{a, b, c}, std::move(case_label)};
}

InfChar infchar_lift(const TorusCharacterData& t) {
  const auto& [a, b, c] = t.nu;
  const Rational h(1, 2);
  const Coord raw{h * (a + 2), h * (2 - a), h * (b + c), h * (c - b)};
  return {dominant_conjugate(d4(), raw).dominant};
}

InfChar infchar_symmetric_form(const TorusCharacterData& t) {
  const auto& [a, b, c] = t.nu;
  const Coord beta = int_coord({1, 1, 0, 0});
  const Coord alpha1 = int_coord({1, -1, 0, 0});
  const Coord alpha2 = int_coord({0, 0, 1, -1});
  const Coord alpha3 = int_coord({0, 0, 1, 1});
  const Rational h(1, 2);
  Coord v = add(beta, scale(alpha1, h * a));
  v = add(v, scale(alpha2, h * b));
  v = add(v, scale(alpha3, h * c));
  return {dominant_conjugate(d4(), v).dominant};
}

std::array<Rational, 3> tprime_triple(int n, int b) {
  return {Rational(n + 4), Rational(-(b + n), 2) - 2, Rational(b - n, 2) - 2};
}

Report lemma_infchar_consistency(int N) {
  if (N < 0) throw InputError("N must be non-negative");
  Report r;
  for (int n = 0; n <= N; ++n) {
    for (int b = -n; b <= n; b += 2) {
      const auto t = tprime_triple(n, b);
      const auto lifted = infchar_lift(make_torus_data(t[0], t[1], t[2], "e62-spin8"));
      const Rational h(n, 2);
      const auto direct = infinitesimal_character(d4(), Coord{h, h, h, Rational(b, 2)});
      r.add("infchar(n=" + std::to_string(n) + ",b=" + std::to_string(b) + ")", lifted == direct, to_string(direct.rep),
            to_string(lifted.rep));
    }
  }
  return r;
}

Report verify_infchar(int max_n, int random_triples, std::uint32_t seed) {
  Report r = lemma_infchar_consistency(max_n);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 12);
  std::size_t agree = 0;
  std::string first_bad;
  for (int i = 0; i < random_triples; ++i) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    const auto t = make_torus_data(a, b, -a - b);
    const auto lift = infchar_lift(t), sym = infchar_symmetric_form(t);
    if (lift == sym) {
      ++agree;
    } else if (first_bad.empty()) {
      first_bad = to_string(Coord{a, b, -a - b}) + ": " + to_string(lift.rep) + " vs " + to_string(sym.rep);
    }
  }
  r.add("lift = symmetric form on " + std::to_string(random_triples) + " random triples", agree == std::size_t(random_triples),
        std::to_string(random_triples), std::to_string(agree) + (first_bad.empty() ? "" : " (" + first_bad + ")"));
  const auto gamma = infchar_lift(make_torus_data(Rational(0), Rational(0), Rational(0)));
  r.add("lift(0,0,0)", gamma.rep == int_coord({1, 1, 0, 0}), "(1,1,0,0)", to_string(gamma.rep));
  return r;
}

std::int64_t ps_multiplicity_split(int a, int b, int c, int d) { return so3_invariants(a, b, c, d).value; }

std::int64_t ps_multiplicity_quasisplit(int x, int y, int z, int m) {
  m = std::abs(m);
  const int d = x - y;
  if ((z - d) % 2 != 0 || (d - m) % 2 != 0) return 0;
  if (!(z > d && d >= m)) return 0;
  std::int64_t count = 0;
  for (int t = 0; 2 * t <= x + y - m; ++t)
    if (2 * t >= d - m && z >= 2 * t + 2 + m) ++count;
  return count;
}

std::int64_t quasisplit_level_count(int x, int y, int z, int m, int n) {
  m = std::abs(m);
  if ((x + y - m) % 2 != 0 || (z - m) % 2 != 0) return 0;
  std::int64_t count = 0;
  for (int t = 0; n - m - 2 * t >= 0; ++t) {
    const int s = x + y - m, d = x - y - m;
    if (!(2 * n - 2 * t - 2 * m >= s && s >= 2 * t && 2 * t >= d && d >= 0)) continue;
    if (m + 2 * t + 2 <= z && z <= 2 * n - m - 2 * t + 2) ++count;
  }
  return count;
}

std::int64_t quasisplit_stabilized_count(int x, int y, int z, int m) {
  m = std::abs(m);
  if ((x + y - m) % 2 != 0 || (z - m) % 2 != 0) return 0;
  std::int64_t count = 0;
  for (int t = 0; 2 * t <= x + y - m; ++t)
    if (2 * t >= x - y - m && x - y - m >= 0 && z >= m + 2 * t + 2) ++count;
  return count;
}

namespace {

int predicted_onset(int x, int y, int z, int m, std::int64_t limit) {
  for (int n = 0;; ++n)
    if (quasisplit_level_count(x, y, z, m, n) == limit) return n;
}

Weight quasisplit_type(int x, int y, int z) {
  return Weight{{int_coord({x, y}), int_coord({z})}, {}};
}

}  // namespace

QuasisplitMultiplicity minrep_multiplicity_quasisplit(int x, int y, int z, int m, int n) {
  QuasisplitMultiplicity out;
  out.value = ktype_multiplicity(DualPairCase::HermJMixedE, quasisplit_type(x, y, z), Rational(m), n);
  out.stabilized = quasisplit_stabilized_count(x, y, z, m);
  out.predicted_onset = predicted_onset(x, y, z, m, out.stabilized);
  return out;
}

Report compare_ps_vs_stabilized(int max_sum, int max_m, int N) {
  const auto levels = dualpair_levels(DualPairCase::HermJMixedE, N);
  struct Case {
    int x, y, z, m;
  };
  std::vector<Case> cases;
  for (int x = 0; x <= max_sum; ++x)
    for (int y = 0; y <= x; ++y)
      for (int z = 0; x + y + z <= max_sum; ++z) {
        if ((x + y + z) % 2 != 0) continue;  // not a K-type of the model
        for (int m = 0; m <= max_m; ++m) cases.push_back({x, y, z, m});
      }
  const auto checks = parallel_map(cases.size(), [&](std::size_t i) {
    const auto [x, y, z, m] = cases[i];
    const auto s = multiplicity_series(DualPairCase::HermJMixedE, levels, quasisplit_type(x, y, z), Rational(m));
    const auto ps = ps_multiplicity_quasisplit(x, y, z, m);
    const auto limit = quasisplit_stabilized_count(x, y, z, m);
    const int onset = predicted_onset(x, y, z, m, limit);
    const bool monotone = std::is_sorted(s.values.begin(), s.values.end());
    const bool ok = ps == limit && s.values.back() == limit && s.onset == onset && monotone;
    std::ostringstream expected, actual;
    expected << "ps=" << ps << " limit=" << limit << " onset=" << onset << " monotone";
    actual << "ps=" << ps << " limit=" << s.values.back() << " onset=" << s.onset
           << (monotone ? " monotone" : " not-monotone");
    return Check{"quasisplit(" + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z) + ";m=" +
                     std::to_string(m) + ")",
                 ok, expected.str(), actual.str()};
  });
  Report r;
  r.checks = checks;
  return r;
}

TableKind parse_table_kind(std::string_view name) {
  if (name == "split") return TableKind::Split;
  if (name == "quasisplit" || name == "quasi-split") return TableKind::Quasisplit;
  throw InputError("unknown table '" + std::string(name) + "'");
}

std::string table_name(TableKind k) { return k == TableKind::Split ? "split" : "quasisplit"; }

std::filesystem::path fixture_path(const std::filesystem::path& dir, TableKind k) {
  return dir / (table_name(k) + "_table.tsv");
}

TableFixture load_table(const std::filesystem::path& file, TableKind k) {
  std::ifstream in(file);
  if (!in) throw FixtureError("cannot open fixture " + file.string());
  TableFixture t;
  t.kind = k;
  t.group = GroupSpec::parse(k == TableKind::Split ? "A1^4" : "C2xA1");
  std::string line;
  int lineno = 0;
  auto fail = [&](const std::string& why) {
    return FixtureError(file.string() + ":" + std::to_string(lineno) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++lineno;
    const auto text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    const auto cols = split(text, '\t');
    if (cols.size() < 3 || cols.size() > 4) throw fail("expected 3 or 4 tab-separated columns");
    const auto id_text = trim(cols[0]);
    int row = 0;
    auto [ptr, ec] = std::from_chars(id_text.data(), id_text.data() + id_text.size(), row);
    if (ec != std::errc{} || ptr != id_text.data() + id_text.size()) {
      if (t.rows.empty()) continue;  // header
      throw fail("bad row id '" + std::string(id_text) + "'");
    }
    std::vector<std::int64_t> coords;
    try {
      for (auto c : split(trim(cols[1]), ',')) coords.push_back(to_int(parse_rational(c)));
    } catch (const InputError& e) {
      throw fail(e.what());
    }
    TableRow r;
    r.row = row;
    if (k == TableKind::Split) {
      if (coords.size() != 4) throw fail("split rows need four labels");
      for (auto c : coords) r.weight.parts.push_back(int_coord({c}));
    } else {
      if (coords.size() != 3) throw fail("quasisplit rows need (x,y,z)");
      r.weight.parts = {int_coord({coords[0], coords[1]}), int_coord({coords[2]})};
    }
    try {
      r.dimension = to_int(parse_rational(cols[2]));
    } catch (const InputError& e) {
      throw fail(e.what());
    }
    if (cols.size() == 4) r.annotation = std::string(trim(cols[3]));
    t.rows.push_back(std::move(r));
  }
  if (t.rows.empty()) throw FixtureError("fixture " + file.string() + " has no rows");
  return t;
}

Report verify_table(const TableFixture& t) {
  Report r;
  std::vector<int> ids;
  for (const auto& row : t.rows)
    if (std::find(ids.begin(), ids.end(), row.row) == ids.end()) ids.push_back(row.row);
  for (int id : ids) {
    std::string expected, actual;
    bool ok = true;
    for (const auto& row : t.rows) {
      if (row.row != id) continue;
      const std::string w = format_weight_plain(t.group, row.weight);
      std::string got;
      try {
        const auto d = dimension(t.group, make_weight(t.group, row.weight, true));
        got = d.str();
        ok = ok && d == row.dimension;
      } catch (const InputError& e) {
        got = e.what();
        ok = false;
      }
      expected += (expected.empty() ? "" : " ") + w + ":" + std::to_string(row.dimension);
      actual += (actual.empty() ? "" : " ") + w + ":" + got;
    }
    r.add(table_name(t.kind) + " row " + std::to_string(id), ok, expected, actual);
  }
  return r;
}

}  // namespace liedual
