#include "liedual/branching.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>

#include "liedual/errors.hpp"
#include "liedual/parallel.hpp"

namespace liedual {

namespace {

Coord row(std::size_t dim, std::initializer_list<std::pair<std::size_t, Rational>> entries) {
  Coord r(dim, Rational(0));
  for (const auto& [i, c] : entries) r[i] = c;
  return r;
}

Coord axis(std::size_t dim, std::size_t i, std::int64_t c = 1) { return row(dim, {{i, Rational(c)}}); }

std::vector<EmbeddingMap> build_catalog() {
  std::vector<EmbeddingMap> cat;
  const Rational one(1);

  {
    EmbeddingMap e{"sp2xsp2_in_sp4", "Sp(2) x Sp(2) in Sp(4), coordinates (e1,e2 | e3,e4)",
                   GroupSpec::parse("C4"), GroupSpec::parse("C2xC2"), {}, {}};
    e.factor_rows = {{axis(4, 0), axis(4, 1)}, {axis(4, 2), axis(4, 3)}};
    cat.push_back(e);
  }
  {
    EmbeddingMap e{"su2x4_in_sp4", "SU2^4 in Sp(4), one SU2 on each e_i axis", GroupSpec::parse("C4"),
                   GroupSpec::parse("A1^4"), {}, {}};
    for (std::size_t i = 0; i < 4; ++i) e.factor_rows.push_back({axis(4, i)});
    cat.push_back(e);
  }
  {
    EmbeddingMap e{"su2su2_in_sp2", "SU2 x SU2 in Sp(2), coordinates (e1 | e2)", GroupSpec::parse("C2"),
                   GroupSpec::parse("A1xA1"), {}, {}};
    e.factor_rows = {{axis(2, 0)}, {axis(2, 1)}};
    cat.push_back(e);
  }
  {
    // SO(3) weight a1 is the A1 label 2*a1; the SO(2) weight is a2.
    EmbeddingMap e{"sp1so2_in_sp2", "SO(3) x SO(2) in SO(5) = Sp(1) x O(2) in Sp(2), B2 coordinates",
                   GroupSpec::parse("B2"), GroupSpec::parse("A1xU1"), {}, {}};
    e.factor_rows = {{axis(2, 0, 2)}};
    e.charge_rows = {axis(2, 1)};
    cat.push_back(e);
  }
  {
    EmbeddingMap e{"spin8u1_in_spin10", "Spin(8) x U(1) in Spin(10), charge = pairing with 2e5",
                   GroupSpec::parse("D5"), GroupSpec::parse("D4xU1"), {}, {}};
    e.factor_rows = {{axis(5, 0), axis(5, 1), axis(5, 2), axis(5, 3)}};
    e.charge_rows = {axis(5, 4, 2)};
    cat.push_back(e);
  }
  {
    EmbeddingMap e{"sp2su2u1_in_su6", "Sp(2) x SU2 x U(1) in SU(6), charge = pairing with (1,1,1,1,-2,-2)/3",
                   GroupSpec::parse("A5"), GroupSpec::parse("C2xA1xU1"), {}, {}};
    e.factor_rows = {{row(6, {{0, one}, {3, -one}}), row(6, {{1, one}, {2, -one}})},
                     {row(6, {{4, one}, {5, -one}})}};
    const Rational third(1, 3);
    e.charge_rows = {row(6, {{0, third}, {1, third}, {2, third}, {3, third}, {4, -2 * third}, {5, -2 * third}})};
    cat.push_back(e);
  }
  {
    EmbeddingMap e{"sp3_in_su6", "Sp(3) in SU(6), standard representation restricts to the symplectic one",
                   GroupSpec::parse("A5"), GroupSpec::parse("C3"), {}, {}};
    e.factor_rows = {{row(6, {{0, one}, {5, -one}}), row(6, {{1, one}, {4, -one}}), row(6, {{2, one}, {3, -one}})}};
    cat.push_back(e);
  }
  for (std::size_t k = 2; k <= 4; ++k) {
    EmbeddingMap e{"diag_su2_in_su2x" + std::to_string(k), "diagonal SU2 in SU2^" + std::to_string(k),
                   GroupSpec::parse("A1^" + std::to_string(k)), GroupSpec::parse("A1"), {}, {}};
    e.factor_rows = {{Coord(k, one)}};
    cat.push_back(e);
  }
  {
    EmbeddingMap e{"sp2sp1_in_sp3", "Sp(2) x Sp(1) in Sp(3), coordinates (e1,e2 | e3)", GroupSpec::parse("C3"),
                   GroupSpec::parse("C2xA1"), {}, {}};
    e.factor_rows = {{axis(3, 0), axis(3, 1)}, {axis(3, 2)}};
    cat.push_back(e);
  }
  return cat;
}

Weight W(std::vector<Coord> parts, std::vector<Rational> charges = {}) { return {std::move(parts), std::move(charges)}; }

// Peeling order: larger height first, then lexicographically larger.
bool peels_before(const GroupSpec& g, const Weight& a, const Weight& b) {
  const Rational ha = height(g, a), hb = height(g, b);
  if (ha != hb) return ha > hb;
  return b < a;
}

}  // namespace

Weight EmbeddingMap::restrict_weight(const Weight& w) const {
  Coord flat;
  for (const auto& p : w.parts) flat.insert(flat.end(), p.begin(), p.end());
  Weight out;
  for (std::size_t f = 0; f < factor_rows.size(); ++f) {
    Coord c;
    for (const auto& r : factor_rows[f]) c.push_back(dot(r, flat));
    out.parts.push_back(root_system(small.factors[f]).canonical(std::move(c)));
  }
  for (const auto& r : charge_rows) out.charges.push_back(dot(r, flat));
  return out;
}

const std::vector<EmbeddingMap>& embedding_catalog() {
  static const std::vector<EmbeddingMap> cat = build_catalog();
  return cat;
}

const EmbeddingMap& embedding(std::string_view name) {
  if (name == "so3so2_in_so5") name = "sp1so2_in_sp2";
  for (const auto& e : embedding_catalog())
    if (e.name == name) return e;
  throw InputError("unknown embedding '" + std::string(name) + "'");
}

namespace {
std::atomic<std::uint64_t> budget_override{0};
}

void set_default_budget(std::uint64_t budget) { budget_override = budget; }

std::uint64_t default_budget() {
  if (const auto b = budget_override.load()) return b;
  const char* env = std::getenv("LIEDUAL_BUDGET");
  if (!env || !*env) return 200000;
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(env, env + std::strlen(env), v);
  if (ec != std::errc{} || *ptr != '\0' || v == 0) throw InputError(std::string("invalid LIEDUAL_BUDGET '") + env + "'");
  return v;
}

BranchResult restrict_generic(const EmbeddingMap& e, const Weight& hw_in, std::uint64_t budget) {
  const Weight hw = make_weight(e.big, hw_in, true);
  BranchResult res{e.big, hw, dimension(e.big, hw), FormalCharacter(e.small)};
  if (res.source_dimension > budget) {
    throw BudgetExceeded("dim " + res.source_dimension.str() + " of " + format_weight(e.big, hw) +
                         " exceeds budget " + std::to_string(budget));
  }
  std::map<Weight, std::int64_t> rest;
  for (const auto& [w, m] : weight_diagram(e.big, hw)) rest[e.restrict_weight(w)] += m;

  while (!rest.empty()) {
    auto top = rest.begin();
    for (auto it = std::next(rest.begin()); it != rest.end(); ++it)
      if (peels_before(e.small, it->first, top->first)) top = it;
    const Weight lead = top->first;
    const std::int64_t mult = top->second;
    if (mult < 0 || !is_dominant(e.small, lead)) {
      throw NegativeMultiplicity(e.name + ": remainder has multiplicity " + std::to_string(mult) + " at top weight " +
                                 format_weight(e.small, lead));
    }
    res.decomposition.add(lead, mult);
    for (const auto& [w, m] : weight_diagram(e.small, lead)) {
      auto it = rest.find(w);
      const std::int64_t have = it == rest.end() ? 0 : it->second;
      const std::int64_t left = have - mult * m;
      if (left < 0) {
        throw NegativeMultiplicity(e.name + ": peeling " + format_weight(e.small, lead) + " leaves " +
                                   std::to_string(left) + " at " + format_weight(e.small, w));
      }
      if (left == 0) {
        rest.erase(it);
      } else {
        it->second = left;
      }
    }
  }
  return res;
}

FormalCharacter branch_sp4_to_sp2sp2(int n) {
  FormalCharacter out(GroupSpec::parse("C2xC2"));
  for (int x = 0; x <= n; ++x)
    for (int y = 0; y <= x; ++y) out.add(W({int_coord({x, y}), int_coord({x, y})}));
  return out;
}

FormalCharacter branch_sp2_to_su2su2(int x, int y) {
  if (y < 0 || x < y) throw NotDominant("Sp(2) weight needs x >= y >= 0");
  FormalCharacter out(GroupSpec::parse("A1xA1"));
  for (int a = 0; a <= x + y; ++a) {
    for (int b = 0; a + b <= x + y; ++b) {
      if ((a + b - x - y) % 2 != 0) continue;
      if (std::abs(a - b) <= x - y && x - y <= a + b) out.add(W({int_coord({a}), int_coord({b})}));
    }
  }
  return out;
}

FormalCharacter branch_so5_to_so3so2(const Rational& a, const Rational& b) {
  if (b < Rational(0) || a < b || !is_integer(a - b) || !is_half_integer(a))
    throw NotDominant("SO(5) weight needs a >= b >= 0 with a - b integral");
  FormalCharacter out(GroupSpec::parse("A1xU1"));
  // A(p): charges -p..p in steps of 1; B(q): charges -q..q in steps of 2.
  auto add_product = [&](const Rational& c, const Rational& p, const Rational& q) {
    for (Rational i = -p; i <= p; i += 1)
      for (Rational j = -q; j <= q; j += 2) out.add(W({Coord{2 * c}}, {i + j}));
  };
  for (Rational c = a; c >= Rational(0); c -= 1) {
    if (c >= b) {
      add_product(c, b, a - c);
    } else {
      add_product(c, c, a - b);
    }
  }
  return out;
}

FormalCharacter branch_spin10_halfspin_to_spin8u1(int n) {
  FormalCharacter out(GroupSpec::parse("D4xU1"));
  const Rational h(n, 2);
  for (int b = -n; b <= n; b += 2) out.add(W({Coord{h, h, h, Rational(b, 2)}}, {Rational(b)}));
  return out;
}

FormalCharacter branch_su6_omega3_to_sp2su2u1(int n, int m) {
  const GroupSpec g = GroupSpec::parse("C2xA1xU1");
  FormalCharacter out(g);
  const int mm = std::abs(m);
  if (mm > n) return out;
  for (int t = 0; n - mm - 2 * t >= 0; ++t) {
    const int ell = n - mm - 2 * t;
    for (int x = 0; x <= 2 * n; ++x) {
      for (int y = 0; y <= x; ++y) {
        if ((x + y - mm) % 2 != 0) continue;
        const int s = x + y - mm, d = x - y - mm;
        if (2 * n - 2 * t - 2 * mm >= s && s >= 2 * t && 2 * t >= d && d >= 0)
          out.add(W({int_coord({x, y}), int_coord({ell})}, {Rational(m)}));
      }
    }
  }
  return out;
}

SignedCharacter branch_su6_omega3_to_sp3(int n) {
  SignedCharacter out{FormalCharacter(GroupSpec::parse("C3")), {}};
  for (int m = 0; m <= n; ++m) {
    const Weight w = W({int_coord({n, m, m})});
    out.character.add(w);
    out.signs[w] = (n - m) % 2 == 0 ? 1 : -1;
  }
  return out;
}

std::string format_character(const FormalCharacter& c) {
  if (c.terms.empty()) return "0";
  std::string out;
  for (const auto& [w, m] : c.terms) {
    if (!out.empty()) out += " + ";
    if (m != 1) out += std::to_string(m) + " ";
    out += format_weight(c.group, w);
  }
  return out;
}

const std::vector<std::string>& rule_ids() {
  static const std::vector<std::string> ids = {"sp4_to_sp2sp2",   "sp2_to_su2su2", "so5_to_so3so2",
                                               "spin10_halfspin", "su6_omega3",    "su6_omega3_to_sp3"};
  return ids;
}

namespace {

void compare(Report& r, const std::string& name, const FormalCharacter& closed, const FormalCharacter& generic) {
  r.add(name, closed == generic, format_character(closed), format_character(generic));
}

void conservation(Report& r, const std::string& name, const BranchResult& res) {
  const BigInt total = res.decomposition.dimension();
  r.add(name + ":dim", total == res.source_dimension, res.source_dimension.str(), total.str());
}

Report verify_one(std::string_view rule, const std::vector<std::int64_t>& p, std::uint64_t budget) {
  Report r;
  auto tag = [&](const std::string& args) { return std::string(rule) + "(" + args + ")"; };
  if (rule == "sp4_to_sp2sp2") {
    const auto n = p[0];
    const auto res = restrict_generic(embedding("sp2xsp2_in_sp4"), W({int_coord({n, n, n, n})}), budget);
    compare(r, tag(std::to_string(n)), branch_sp4_to_sp2sp2(static_cast<int>(n)), res.decomposition);
    conservation(r, tag(std::to_string(n)), res);
  } else if (rule == "sp2_to_su2su2") {
    const auto x = p[0], y = p[1];
    const auto res = restrict_generic(embedding("su2su2_in_sp2"), W({int_coord({x, y})}), budget);
    const auto name = tag(std::to_string(x) + "," + std::to_string(y));
    compare(r, name, branch_sp2_to_su2su2(static_cast<int>(x), static_cast<int>(y)), res.decomposition);
    conservation(r, name, res);
  } else if (rule == "so5_to_so3so2") {
    // parameters are doubled so half-integers stay integral here
    const Rational a(p[0], 2), b(p[1], 2);
    const auto res = restrict_generic(embedding("sp1so2_in_sp2"), W({Coord{a, b}}), budget);
    const auto name = tag(to_string(a) + "," + to_string(b));
    compare(r, name, branch_so5_to_so3so2(a, b), res.decomposition);
    conservation(r, name, res);
  } else if (rule == "spin10_halfspin") {
    const auto n = p[0];
    const Rational h(n, 2);
    const auto res = restrict_generic(embedding("spin8u1_in_spin10"), W({Coord(5, h)}), budget);
    compare(r, tag(std::to_string(n)), branch_spin10_halfspin_to_spin8u1(static_cast<int>(n)), res.decomposition);
    conservation(r, tag(std::to_string(n)), res);
  } else if (rule == "su6_omega3") {
    const auto n = p[0];
    const auto& e = embedding("sp2su2u1_in_su6");
    const auto res = restrict_generic(e, W({int_coord({n, n, n, 0, 0, 0})}), budget);
    std::map<std::int64_t, FormalCharacter> blocks;
    std::string stray;
    for (const auto& [w, m] : res.decomposition.terms) {
      const auto& q = w.charges[0];
      if (!is_integer(q) || std::abs(q.numerator()) > n) {
        stray += (stray.empty() ? "" : " ") + to_string(q);
        continue;
      }
      blocks.try_emplace(q.numerator(), e.small).first->second.add(w, m);
    }
    r.add(tag(std::to_string(n)) + ":charges", stray.empty(), "|m| <= " + std::to_string(n),
          stray.empty() ? "|m| <= " + std::to_string(n) : stray);
    for (std::int64_t m = -n; m <= n; ++m) {
      auto it = blocks.find(m);
      const FormalCharacter generic = it == blocks.end() ? FormalCharacter(e.small) : it->second;
      compare(r, tag(std::to_string(n) + "," + std::to_string(m)),
              branch_su6_omega3_to_sp2su2u1(static_cast<int>(n), static_cast<int>(m)), generic);
    }
    conservation(r, tag(std::to_string(n)), res);
  } else if (rule == "su6_omega3_to_sp3") {
    const auto n = p[0];
    const auto res = restrict_generic(embedding("sp3_in_su6"), W({int_coord({n, n, n, 0, 0, 0})}), budget);
    const auto closed = branch_su6_omega3_to_sp3(static_cast<int>(n));
    compare(r, tag(std::to_string(n)), closed.character, res.decomposition);
    conservation(r, tag(std::to_string(n)), res);
    std::vector<std::int64_t> ms;
    for (const auto& [w, s] : closed.signs) ms.push_back(to_int(w.parts[0][1]));
    std::sort(ms.begin(), ms.end());
    std::string expected, actual;
    for (std::int64_t m = 0; m <= n; ++m) expected += (m ? "," : "") + std::to_string(m);
    for (std::size_t i = 0; i < ms.size(); ++i) actual += (i ? "," : "") + std::to_string(ms[i]);
    r.add(tag(std::to_string(n)) + ":signed-levels", expected == actual, expected, actual);
  } else {
    throw InputError("unknown rule '" + std::string(rule) + "'");
  }
  return r;
}

std::vector<std::vector<std::int64_t>> rule_parameters(std::string_view rule, int level) {
  std::vector<std::vector<std::int64_t>> ps;
  if (rule == "sp2_to_su2su2") {
    for (std::int64_t x = 0; x <= 2 * level; ++x)
      for (std::int64_t y = 0; y <= x; ++y) ps.push_back({x, y});
  } else if (rule == "so5_to_so3so2") {
    for (std::int64_t a2 = 0; a2 <= 2 * (level + 1); ++a2)
      for (std::int64_t b2 = a2; b2 >= 0; b2 -= 2) ps.push_back({a2, b2});
  } else {
    for (std::int64_t n = 0; n <= level; ++n) ps.push_back({n});
  }
  return ps;
}

}  // namespace

RuleEvaluation evaluate_rule(std::string_view rule, const std::vector<Rational>& args,
                             std::optional<std::int64_t> charge, bool with_generic, std::uint64_t budget) {
  if (std::find(rule_ids().begin(), rule_ids().end(), rule) == rule_ids().end())
    throw InputError("unknown rule '" + std::string(rule) + "'");
  const std::size_t arity = rule == "sp2_to_su2su2" || rule == "so5_to_so3so2" ? 2 : 1;
  if (args.size() != arity)
    throw InputError(std::string(rule) + " takes " + std::to_string(arity) + " parameter(s)");
  if (charge && rule != "su6_omega3") throw InputError("--charge applies to su6_omega3 only");
  auto integer = [&](std::size_t i) {
    if (!is_integer(args[i]) || args[i] < Rational(0))
      throw InputError(std::string(rule) + " parameters must be non-negative integers");
    return args[i].numerator();
  };
  RuleEvaluation out;
  if (rule == "sp4_to_sp2sp2") {
    const auto n = integer(0);
    out.embedding = "sp2xsp2_in_sp4";
    out.source = W({int_coord({n, n, n, n})});
    out.closed = branch_sp4_to_sp2sp2(static_cast<int>(n));
  } else if (rule == "sp2_to_su2su2") {
    const auto x = integer(0), y = integer(1);
    if (y > x) throw InputError("sp2_to_su2su2 needs x >= y");
    out.embedding = "su2su2_in_sp2";
    out.source = W({int_coord({x, y})});
    out.closed = branch_sp2_to_su2su2(static_cast<int>(x), static_cast<int>(y));
  } else if (rule == "so5_to_so3so2") {
    out.embedding = "sp1so2_in_sp2";
    out.source = W({Coord{args[0], args[1]}});
    out.closed = branch_so5_to_so3so2(args[0], args[1]);
  } else if (rule == "spin10_halfspin") {
    const auto n = integer(0);
    out.embedding = "spin8u1_in_spin10";
    out.source = W({Coord(5, Rational(n, 2))});
    out.closed = branch_spin10_halfspin_to_spin8u1(static_cast<int>(n));
  } else if (rule == "su6_omega3") {
    const auto n = integer(0);
    out.embedding = "sp2su2u1_in_su6";
    out.source = W({int_coord({n, n, n, 0, 0, 0})});
    out.closed = FormalCharacter(embedding(out.embedding).small);
    for (std::int64_t m = -n; m <= n; ++m)
      if (!charge || *charge == m) out.closed.add(branch_su6_omega3_to_sp2su2u1(static_cast<int>(n), static_cast<int>(m)));
  } else {
    const auto n = integer(0);
    out.embedding = "sp3_in_su6";
    out.source = W({int_coord({n, n, n, 0, 0, 0})});
    auto signed_char = branch_su6_omega3_to_sp3(static_cast<int>(n));
    out.closed = std::move(signed_char.character);
    out.signs = std::move(signed_char.signs);
  }
  const auto& e = embedding(out.embedding);
  out.source_group = e.big;
  if (with_generic) {
    auto res = restrict_generic(e, out.source, budget);
    if (charge) {
      FormalCharacter block(e.small);
      for (const auto& [w, m] : res.decomposition.terms)
        if (w.charges[0] == Rational(*charge)) block.add(w, m);
      out.generic = std::move(block);
    } else {
      out.generic = std::move(res.decomposition);
    }
  }
  return out;
}

Report verify_rule(std::string_view rule_id, int level, std::uint64_t budget) {
  if (std::find(rule_ids().begin(), rule_ids().end(), rule_id) == rule_ids().end())
    throw InputError("unknown rule '" + std::string(rule_id) + "'");
  if (level < 0) throw InputError("level must be non-negative");
  const auto ps = rule_parameters(rule_id, level);
  const auto parts = parallel_map(ps.size(), [&](std::size_t i) { return verify_one(rule_id, ps[i], budget); });
  Report out;
  for (const auto& r : parts) out.append(r);
  if (rule_id == "su6_omega3")
    out.notes.push_back("su6_omega3: blocks with m < 0 use the charge-negated m > 0 rule (duality convention)");
  return out;
}

}  // namespace liedual
