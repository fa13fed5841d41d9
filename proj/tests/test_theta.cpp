#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <set>

#include "liedual/errors.hpp"
#include "liedual/minrep.hpp"
#include "liedual/theta.hpp"

using namespace liedual;

namespace {

const RootSystem& d4() { return root_system(CartanType::parse("D4")); }

// W(D4) acts by permutations and an even number of sign changes.
bool same_d4_orbit(Coord x, Coord y) {
  auto normal = [](Coord v) {
    int negatives = 0;
    bool zero = false;
    for (auto& c : v) {
      if (c < Rational(0)) {
        c = -c;
        ++negatives;
      }
      zero = zero || c == Rational(0);
    }
    std::sort(v.begin(), v.end());
    return std::make_pair(v, zero ? 0 : negatives % 2);
  };
  return normal(std::move(x)) == normal(std::move(y));
}

Coord literal_lift(const Rational& a, const Rational& b, const Rational& c) {
  const Rational h(1, 2);
  return {h * (a + 2), h * (2 - a), h * (b + c), h * (b - c)};
}

struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& text) {
    static int counter = 0;
    path = std::filesystem::temp_directory_path() / ("liedual_fixture_" + std::to_string(++counter) + ".tsv");
    std::ofstream(path) << text;
  }
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("lift examples") {
  const Rational z(0);
  CHECK(infchar_lift(make_torus_data(z, z, z)).rep == int_coord({1, 1, 0, 0}));
  CHECK(infchar_lift(make_torus_data(Rational(2), Rational(-1), Rational(-1))).rep == int_coord({2, 1, 0, 0}));
  // the n = 0, b = 0 term of the decomposition
  CHECK(infchar_lift(make_torus_data(Rational(4), Rational(-2), Rational(-2))).rep ==
        infinitesimal_character(d4(), int_coord({0, 0, 0, 0})).rep);
  CHECK_THROWS_AS(make_torus_data(Rational(1), z, z), InputError);
}

TEST_CASE("lift is a W(D4) representative of the formula up to e4 -> -e4") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 9);
  for (int i = 0; i < 200; ++i) {
    const Rational a(num(rng), den(rng)), b(num(rng), den(rng)), c = -a - b;
    const Coord lift = infchar_lift(make_torus_data(a, b, c)).rep;
    CHECK(d4().is_dominant(lift));
    Coord flipped = literal_lift(a, b, c);
    flipped[3] = -flipped[3];
    CHECK(same_d4_orbit(lift, flipped));
    // the symmetric form
    CHECK(infchar_symmetric_form(make_torus_data(a, b, c)) == infchar_lift(make_torus_data(a, b, c)));
  }
}

TEST_CASE("lift agrees with the Spin(8) x U(1) decomposition") {
  CHECK(lemma_infchar_consistency(10).ok());
  CHECK(lemma_infchar_consistency(10).checks.size() == 66);
  // read the pairs straight off the e62-spin8 levels
  const auto levels = dualpair_levels(DualPairCase::E62Spin8, 6);
  for (const auto& level : levels)
    for (const auto& [w, m] : level.terms) {
      const auto lift = infchar_lift(make_torus_data(w.charges[0], w.charges[1], w.charges[2]));
      CHECK(lift == infinitesimal_character(d4(), w.parts[0]));
    }
  CHECK(verify_infchar(6, 100).ok());
}

TEST_CASE("split principal series count") {
  CHECK(ps_multiplicity_split(0, 0, 0, 0) == 1);
  CHECK(ps_multiplicity_split(2, 2, 2, 2) == 3);
  CHECK(ps_multiplicity_split(1, 1, 3, 1) == 1);
  CHECK(ps_multiplicity_split(1, 1, 1, 0) == 0);
}

TEST_CASE("quasi-split counts") {
  // brute force over t of the displayed inequalities
  for (int x = 0; x <= 6; ++x)
    for (int y = 0; y <= x; ++y)
      for (int z = 0; z <= 8; ++z)
        for (int m = 0; m <= 3; ++m) {
          std::int64_t count = 0;
          const bool gate = (z - (x - y)) % 2 == 0 && (x - y - m) % 2 == 0 && z > x - y && x - y >= m;
          for (int t = 0; t <= 20; ++t)
            if (gate && x + y - m >= 2 * t && 2 * t >= x - y - m && z >= 2 * t + 2 + m) ++count;
          CHECK(ps_multiplicity_quasisplit(x, y, z, m) == count);
          CHECK(ps_multiplicity_quasisplit(x, y, z, -m) == count);
          CHECK(quasisplit_stabilized_count(x, y, z, m) == count);
          CHECK(quasisplit_level_count(x, y, z, m, 40) == count);
        }
}

TEST_CASE("quasi-split observed multiplicities") {
  const auto q = minrep_multiplicity_quasisplit(0, 0, 4, 0, 1);
  CHECK(q.value == 1);
  CHECK(q.stabilized == 1);
  CHECK(q.predicted_onset == 1);
  CHECK(minrep_multiplicity_quasisplit(0, 0, 4, 0, 0).value == 0);
  const auto r = compare_ps_vs_stabilized(6, 2, 8);
  CHECK(r.ok());
}

TEST_CASE("table fixtures") {
  const std::filesystem::path dir = LIEDUAL_FIXTURES_DIR;
  const auto split = load_table(fixture_path(dir, TableKind::Split), TableKind::Split);
  const auto quasi = load_table(fixture_path(dir, TableKind::Quasisplit), TableKind::Quasisplit);
  std::set<int> split_rows, quasi_rows;
  for (const auto& r : split.rows) split_rows.insert(r.row);
  for (const auto& r : quasi.rows) quasi_rows.insert(r.row);
  CHECK(split_rows.size() == 25);
  CHECK(quasi_rows.size() == 11);
  const auto rs = verify_table(split), rq = verify_table(quasi);
  CHECK(rs.summary() == "PASS 25/25");
  CHECK(rq.summary() == "PASS 11/11");
  CHECK(split.rows.front().annotation == "split");
}

TEST_CASE("malformed fixtures") {
  CHECK_THROWS_AS(load_table("/nonexistent/table.tsv", TableKind::Split), FixtureError);
  {
    TempFile f("row\tweight\tdim\n");
    CHECK_THROWS_AS(load_table(f.path, TableKind::Split), FixtureError);
  }
  {
    TempFile f("0\t0,0,0\t1\n");
    CHECK_THROWS_AS(load_table(f.path, TableKind::Split), FixtureError);
  }
  {
    TempFile f("0\t0,0,0,0\n");
    CHECK_THROWS_AS(load_table(f.path, TableKind::Split), FixtureError);
  }
  {
    TempFile f("0\t0,0,0,0\t1\nx\t0,0,0,0\t1\n");
    CHECK_THROWS_AS(load_table(f.path, TableKind::Split), FixtureError);
  }
  {
    // a wrong dimension is reported, not thrown
    TempFile f("# comment\n\n0\t1,1,0\t6\n");
    const auto t = load_table(f.path, TableKind::Quasisplit);
    const auto r = verify_table(t);
    CHECK_FALSE(r.ok());
    CHECK(r.checks[0].actual == "(1,1)x0:5");
  }
}
