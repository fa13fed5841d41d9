#include <doctest.h>

#include <random>
#include <set>

#include "liedual/errors.hpp"
#include "liedual/lattice.hpp"

using namespace liedual;

namespace {

// Reflection computed from the simple roots alone, independent of RootSystem::reflect.
Coord reflect_by_root(const Coord& v, const Coord& alpha) {
  const Rational k = 2 * dot(v, alpha) / dot(alpha, alpha);
  return sub(v, scale(alpha, k));
}

std::set<Coord> brute_orbit(const RootSystem& rs, const Coord& v) {
  std::set<Coord> seen{v};
  std::vector<Coord> todo{v};
  while (!todo.empty()) {
    const Coord x = todo.back();
    todo.pop_back();
    for (const auto& a : rs.simple_roots()) {
      Coord y = reflect_by_root(x, a);
      if (seen.insert(y).second) todo.push_back(std::move(y));
    }
  }
  return seen;
}

Coord random_coord(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-6, 6);
  Coord v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(d(rng), 2);
  return v;
}

}  // namespace

TEST_CASE("Cartan matrices in Bourbaki order") {
  using M = std::vector<std::vector<std::int64_t>>;
  CHECK(root_system(CartanType::parse("A1")).cartan_matrix() == M{{2}});
  CHECK(root_system(CartanType::parse("A2")).cartan_matrix() == M{{2, -1}, {-1, 2}});
  CHECK(root_system(CartanType::parse("B2")).cartan_matrix() == M{{2, -1}, {-2, 2}});
  CHECK(root_system(CartanType::parse("C2")).cartan_matrix() == M{{2, -2}, {-1, 2}});
  CHECK(root_system(CartanType::parse("D4")).cartan_matrix() ==
        M{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}});
  CHECK(root_system(CartanType::parse("C4")).cartan_matrix() ==
        M{{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -2}, {0, 0, -1, 2}});
}

TEST_CASE("positive root counts and Weyl group orders match brute force") {
  struct Case {
    const char* label;
    std::size_t positive;
    std::uint64_t order;
  };
  for (const auto& c : {Case{"A1", 1, 2}, Case{"A2", 3, 6}, Case{"B2", 4, 8}, Case{"C2", 4, 8}, Case{"C3", 9, 48},
                        Case{"D4", 12, 192}, Case{"A5", 15, 720}, Case{"C4", 16, 384}, Case{"D5", 20, 1920}}) {
    CAPTURE(c.label);
    const auto& rs = root_system(CartanType::parse(c.label));
    CHECK(rs.positive_roots().size() == c.positive);
    CHECK(rs.weyl_group_order() == c.order);
    // The Weyl vector is regular, so its orbit is a torsor for W.
    CHECK(brute_orbit(rs, rs.weyl_vector()).size() == c.order);
    for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(rs.pairing(rs.weyl_vector(), i) == Rational(1));
  }
}

TEST_CASE("dominant_conjugate lands on the unique dominant point of the brute-force orbit") {
  std::mt19937 rng(7);
  for (const char* label : {"A2", "B2", "C2", "C3", "D4"}) {
    const auto& rs = root_system(CartanType::parse(label));
    for (int trial = 0; trial < 40; ++trial) {
      const Coord v = rs.canonical(random_coord(rng, rs.ambient_dim()));
      const auto orbit = brute_orbit(rs, v);
      std::vector<Coord> dominant;
      for (const auto& x : orbit)
        if (rs.is_dominant(rs.canonical(x))) dominant.push_back(rs.canonical(x));
      REQUIRE(dominant.size() == 1);
      const auto dc = dominant_conjugate(rs, v);
      CHECK(dc.dominant == dominant[0]);
      if (rs.is_dominant(v)) CHECK(weyl_orbit_size(rs, v) == orbit.size());
    }
  }
}

TEST_CASE("dominant_conjugate sign") {
  const auto& rs = root_system(CartanType::parse("D4"));
  const Coord rho = rs.weyl_vector();
  CHECK(dominant_conjugate(rs, rho).sign == 1);
  for (std::size_t i = 0; i < 4; ++i) CHECK(dominant_conjugate(rs, rs.reflect(rho, i)).sign == -1);
  CHECK(dominant_conjugate(rs, rs.reflect(rs.reflect(rho, 0), 2)).sign == 1);
  // on a wall the alternating sum vanishes
  CHECK(dominant_conjugate(rs, int_coord({1, 1, 0, 0})).sign == 0);
}

TEST_CASE("weight lattice membership") {
  const auto& c2 = root_system(CartanType::parse("C2"));
  CHECK(c2.in_weight_lattice(int_coord({1, 0})));
  CHECK_FALSE(c2.in_weight_lattice(Coord{Rational(1, 2), Rational(1, 2)}));
  const auto& b2 = root_system(CartanType::parse("B2"));
  CHECK(b2.in_weight_lattice(Coord{Rational(1, 2), Rational(1, 2)}));
  CHECK_FALSE(b2.in_weight_lattice(Coord{Rational(1, 2), Rational(0)}));
  const auto& d5 = root_system(CartanType::parse("D5"));
  CHECK(d5.in_weight_lattice(Coord(5, Rational(1, 2))));
}

TEST_CASE("group labels and weight parsing") {
  const auto g = GroupSpec::parse("C2xA1xU1");
  CHECK(g.factors.size() == 2);
  CHECK(g.circles == 1);
  CHECK(g.label() == "C2xA1xU1");
  CHECK(GroupSpec::parse("A1^4").factors.size() == 4);
  CHECK(GroupSpec::parse("D4xU1^3").circles == 3);

  const auto w = parse_weight(g, "(2,0)x4x1/2");
  CHECK(w.parts[0] == int_coord({2, 0}));
  CHECK(w.parts[1] == int_coord({4}));
  CHECK(w.charges == std::vector<Rational>{Rational(1, 2)});
  CHECK(format_weight(g, w) == "V(2,0)xV4[1/2]");

  const auto a14 = GroupSpec::parse("A1^4");
  CHECK(parse_weight(a14, "2,2,0,0") == parse_weight(a14, "2x2x0x0"));

  // A5 accepts five entries with an implicit trailing zero
  const auto a5 = GroupSpec::parse("A5");
  CHECK(parse_weight(a5, "1,1,1,0,0") == parse_weight(a5, "1,1,1,0,0,0"));

  CHECK_THROWS_AS(parse_weight(g, "1,0"), InputError);
  CHECK_THROWS_AS(parse_weight(g, "(1,0)x1x2x3"), InputError);
  CHECK_THROWS_AS(GroupSpec::parse("E6"), UnsupportedType);
  CHECK_THROWS_AS(CartanType::parse("D3"), UnsupportedType);
  CHECK_THROWS_AS(make_weight(GroupSpec::parse("C2"), parse_weight(GroupSpec::parse("C2"), "0,1"), true), NotDominant);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -2 ") == Rational(-2));
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  CHECK(to_string(Rational(-3, 6)) == "-1/2");
}
