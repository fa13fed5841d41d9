#include <doctest.h>

#include <random>

#include "liedual/charalg.hpp"
#include "liedual/errors.hpp"

using namespace liedual;

namespace {

const RootSystem& rs(const char* label) { return root_system(CartanType::parse(label)); }

// Weyl dimension of Sp(2n) V(l) from the classical product over i<j and i,
// written with the shifted entries l_i + n - i + 1.
BigInt sp_dimension(const std::vector<int>& l) {
  const int n = static_cast<int>(l.size());
  std::vector<BigInt> m(n);
  for (int i = 0; i < n; ++i) m[i] = l[i] + n - i;
  BigInt num = 1, den = 1;
  for (int i = 0; i < n; ++i) {
    num *= m[i];
    den *= n - i;
    for (int j = i + 1; j < n; ++j) {
      num *= (m[i] - m[j]) * (m[i] + m[j]);
      den *= BigInt(j - i) * (2 * n + 2 - i - j - 2);
    }
  }
  return num / den;
}

// Weights of the exterior power of the standard representation of Sp(2n),
// with multiplicity, as sums of k distinct vectors among +-e_i.
WeightMap exterior_power_weights(int n, int k) {
  WeightMap out;
  const int total = 2 * n;
  for (int mask = 0; mask < (1 << total); ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Coord w(n, Rational(0));
    for (int b = 0; b < total; ++b)
      if (mask >> b & 1) w[b % n] += b < n ? 1 : -1;
    ++out[w];
  }
  return out;
}

}  // namespace

TEST_CASE("Weyl dimension against independent formulas") {
  CHECK(dimension(rs("A1"), int_coord({5})) == 6);
  CHECK(dimension(rs("C2"), int_coord({0, 0})) == 1);
  CHECK(dimension(rs("C4"), int_coord({1, 1, 1, 1})) == 42);
  for (const auto& l : std::vector<std::vector<int>>{{1, 0, 0, 0}, {2, 2, 2, 2}, {3, 1, 1, 0}, {4, 4, 4, 4}, {5, 3, 2, 1}}) {
    CAPTURE(l[0]);
    Coord w;
    for (int x : l) w.emplace_back(x);
    CHECK(dimension(rs("C4"), w) == sp_dimension(l));
  }
  CHECK(sp_dimension({2, 2, 2, 2}) == 594);
  CHECK(dimension(rs("C2"), int_coord({1, 1})) == 5);
  CHECK(dimension(rs("C3"), int_coord({1, 1, 1})) == 14);
  CHECK(dimension(rs("A5"), int_coord({1, 1, 1, 0, 0, 0})) == 20);
  CHECK(dimension(rs("D5"), Coord(5, Rational(1, 2))) == 16);
  CHECK(dimension(rs("D4"), int_coord({1, 1, 0, 0})) == 28);
  CHECK(dimension(rs("B2"), Coord{Rational(1, 2), Rational(1, 2)}) == 4);
  CHECK_THROWS_AS(dimension(rs("C2"), int_coord({0, 1})), NotDominant);
}

TEST_CASE("Freudenthal: C4 omega_4 is the exterior fourth power minus the second") {
  WeightMap expected = exterior_power_weights(4, 4);
  for (const auto& [w, m] : exterior_power_weights(4, 2)) {
    expected[w] -= m;
    if (expected[w] == 0) expected.erase(w);
  }
  CHECK(*weight_multiplicities(rs("C4"), int_coord({1, 1, 1, 1})) == expected);
}

TEST_CASE("Freudenthal: minuscule and small cases") {
  // A5 omega_3: the twenty 3-subsets, each once
  const auto a5 = weight_multiplicities(rs("A5"), int_coord({1, 1, 1, 0, 0, 0}));
  CHECK(a5->size() == 20);
  for (const auto& [w, m] : *a5) CHECK(m == 1);
  // D5 half-spin: sign vectors with an even number of minus signs
  const auto d5 = weight_multiplicities(rs("D5"), Coord(5, Rational(1, 2)));
  CHECK(d5->size() == 16);
  for (const auto& [w, m] : *d5) {
    int minus = 0;
    for (const auto& x : w) minus += x < Rational(0);
    CHECK(minus % 2 == 0);
    CHECK(m == 1);
  }
  // adjoint of C2: zero weight has multiplicity rank
  const auto adj = weight_multiplicities(rs("C2"), int_coord({2, 0}));
  CHECK(adj->at(int_coord({0, 0})) == 2);
  // A1: every weight once
  for (const auto& [w, m] : *weight_multiplicities(rs("A1"), int_coord({6}))) CHECK(m == 1);
}

TEST_CASE("weight multiplicities sum to the dimension") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(0, 3);
  for (const char* label : {"A2", "B2", "C2", "C3", "D4"}) {
    const auto& r = rs(label);
    for (int trial = 0; trial < 6; ++trial) {
      Coord hw(r.ambient_dim(), Rational(0));
      for (std::size_t i = 0; i < r.rank(); ++i) {
        // build from fundamental-like increments that stay dominant
        const int k = d(rng);
        for (std::size_t j = 0; j <= i && j < hw.size(); ++j) hw[j] += k;
      }
      hw = r.canonical(hw);
      if (!r.is_dominant(hw)) continue;
      BigInt total = 0;
      for (const auto& [w, m] : *weight_multiplicities(r, hw)) total += m;
      CHECK(total == dimension(r, hw));
    }
  }
}

TEST_CASE("tensor products") {
  // Clebsch-Gordan for A1
  for (int a = 0; a <= 5; ++a)
    for (int b = 0; b <= 5; ++b) {
      WeightMap expected;
      for (int c = std::abs(a - b); c <= a + b; c += 2) expected[int_coord({c})] = 1;
      CHECK(tensor_decompose(rs("A1"), int_coord({a}), int_coord({b})) == expected);
    }
  // dimensions multiply
  const auto& c3 = rs("C3");
  const Coord x = int_coord({2, 1, 0}), y = int_coord({1, 1, 1});
  BigInt total = 0;
  for (const auto& [w, m] : tensor_decompose(c3, x, y)) total += dimension(c3, w) * m;
  CHECK(total == dimension(c3, x) * dimension(c3, y));
  // C2: V(1,0) x V(1,0) = V(2,0) + V(1,1) + V(0,0)
  const WeightMap sq = tensor_decompose(rs("C2"), int_coord({1, 0}), int_coord({1, 0}));
  CHECK(sq == WeightMap{{int_coord({0, 0}), 1}, {int_coord({1, 1}), 1}, {int_coord({2, 0}), 1}});
}

TEST_CASE("formal characters of product groups") {
  const auto g = GroupSpec::parse("A1xA1xU1");
  FormalCharacter a(g), b(g);
  a.add(Weight{{int_coord({1}), int_coord({0})}, {Rational(1)}}, 1);
  b.add(Weight{{int_coord({1}), int_coord({2})}, {Rational(-1)}}, 1);
  const auto t = tensor(a, b);
  CHECK(t.dimension() == 2 * 6);
  CHECK(t.multiplicity(Weight{{int_coord({2}), int_coord({2})}, {Rational(0)}}) == 1);
  CHECK(t.multiplicity(Weight{{int_coord({0}), int_coord({2})}, {Rational(0)}}) == 1);
  a.add(Weight{{int_coord({1}), int_coord({0})}, {Rational(1)}}, -1);
  CHECK(a.empty());
}

TEST_CASE("infinitesimal character is the dominant form of hw + rho") {
  const auto& d4 = rs("D4");
  CHECK(infinitesimal_character(d4, int_coord({0, 0, 0, 0})).rep == int_coord({3, 2, 1, 0}));
  const Rational h(1, 2);
  CHECK(infinitesimal_character(d4, Coord{h, h, h, -h}).rep == Coord{Rational(7, 2), Rational(5, 2), Rational(3, 2), -h});
}
