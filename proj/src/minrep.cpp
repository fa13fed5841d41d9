#include "liedual/minrep.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <set>

#include "liedual/branching.hpp"
#include "liedual/errors.hpp"
#include "liedual/parallel.hpp"

namespace liedual {

namespace {

Weight W(std::vector<Coord> parts, std::vector<Rational> charges = {}) { return {std::move(parts), std::move(charges)}; }

int parity_sign(std::int64_t n) { return n % 2 == 0 ? 1 : -1; }

// Generic restriction of one Sp(2) or SO(5) type, shared across levels.
const FormalCharacter& cached_restriction(const std::string& embedding_name, const Weight& hw) {
  static std::mutex mu;
  static std::map<std::pair<std::string, Weight>, std::unique_ptr<FormalCharacter>> cache;
  const auto key = std::make_pair(embedding_name, hw);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return *it->second;
  }
  auto value = std::make_unique<FormalCharacter>(restrict_generic(embedding(embedding_name), hw).decomposition);
  std::lock_guard lock(mu);
  return *cache.try_emplace(key, std::move(value)).first->second;
}

FormalCharacter split_split_level(int n) {
  FormalCharacter out(GroupSpec::parse("A1^4"));
  for (const auto& [mu, k] : branch_sp4_to_sp2sp2(n).terms) {
    const auto& left = cached_restriction("su2su2_in_sp2", W({mu.parts[0]}));
    const auto& right = cached_restriction("su2su2_in_sp2", W({mu.parts[1]}));
    for (const auto& [l, ml] : left.terms)
      for (const auto& [r, mr] : right.terms) out.add(W({l.parts[0], l.parts[1], r.parts[0], r.parts[1]}), k * ml * mr);
  }
  return out;
}

FormalCharacter split_mixed_level(int n) {
  FormalCharacter out(GroupSpec::parse("C2xA1xU1"));
  for (const auto& [mu, k] : branch_sp4_to_sp2sp2(n).terms) {
    const Coord& xy = mu.parts[0];
    // Sp(2) weight (x,y) is the SO(5) weight ((x+y)/2, (x-y)/2).
    const Coord ab{(xy[0] + xy[1]) / 2, (xy[0] - xy[1]) / 2};
    for (const auto& [t, mt] : cached_restriction("sp1so2_in_sp2", W({ab})).terms)
      out.add(W({xy, t.parts[0]}, {2 * t.charges[0]}), k * mt);
  }
  return out;
}

FormalCharacter herm_mixed_level(int n) {
  const GroupSpec g = GroupSpec::parse("C2xA1xU1");
  const auto& a1 = root_system(CartanType::parse("A1"));
  FormalCharacter out(g);
  for (int m = -n; m <= n; ++m) {
    for (const auto& [w, k] : branch_su6_omega3_to_sp2su2u1(n, m).terms) {
      for (const auto& [z, mz] : tensor_decompose(a1, w.parts[1], int_coord({n + 2})))
        out.add(W({w.parts[0], z}, w.charges), k * mz);
    }
  }
  return out;
}

FormalCharacter e62_spin8_level(int n) {
  FormalCharacter out(GroupSpec::parse("D4xU1^3"));
  for (const auto& [w, k] : branch_spin10_halfspin_to_spin8u1(n).terms) {
    const Rational b = w.charges[0];
    const Rational kk(n + 4);
    out.add(W(w.parts, {kk, -(b + n) / 2 - 2, (b - n) / 2 - 2}), k);
  }
  return out;
}

std::vector<std::map<Weight, int>> uniform_signs(const std::vector<FormalCharacter>& levels) {
  std::vector<std::map<Weight, int>> signs(levels.size());
  for (std::size_t n = 0; n < levels.size(); ++n)
    for (const auto& [w, m] : levels[n].terms) signs[n][w] = parity_sign(static_cast<std::int64_t>(n));
  return signs;
}

template <class F>
std::vector<FormalCharacter> build_levels(int N, F level) {
  if (N < 0) throw InputError("truncation must be non-negative");
  return parallel_map(static_cast<std::size_t>(N) + 1, [&](std::size_t n) { return level(static_cast<int>(n)); });
}

void check_type(DualPairCase c, const Weight& type) {
  const GroupSpec g = case_group(c);
  GroupSpec bare = g;
  bare.circles = 0;
  make_weight(bare, Weight{type.parts, {}}, true);
}

}  // namespace

MinrepCase parse_minrep_case(std::string_view name) {
  if (name == "split-E6") return MinrepCase::SplitE6;
  if (name == "hermitian-E6") return MinrepCase::HermitianE6;
  if (name == "e62-compact") return MinrepCase::E62Compact;
  throw InputError("unknown minimal-representation case '" + std::string(name) + "'");
}

DualPairCase parse_dualpair_case(std::string_view name) {
  if (name == "splitJ-splitE") return DualPairCase::SplitJSplitE;
  if (name == "splitJ-mixedE") return DualPairCase::SplitJMixedE;
  if (name == "hermJ-mixedE") return DualPairCase::HermJMixedE;
  if (name == "e62-spin8") return DualPairCase::E62Spin8;
  throw InputError("unknown dual-pair case '" + std::string(name) + "'");
}

std::string case_name(MinrepCase c) {
  switch (c) {
    case MinrepCase::SplitE6: return "split-E6";
    case MinrepCase::HermitianE6: return "hermitian-E6";
    case MinrepCase::E62Compact: return "e62-compact";
  }
  return {};
}

std::string case_name(DualPairCase c) {
  switch (c) {
    case DualPairCase::SplitJSplitE: return "splitJ-splitE";
    case DualPairCase::SplitJMixedE: return "splitJ-mixedE";
    case DualPairCase::HermJMixedE: return "hermJ-mixedE";
    case DualPairCase::E62Spin8: return "e62-spin8";
  }
  return {};
}

GroupSpec case_group(MinrepCase c) {
  switch (c) {
    case MinrepCase::SplitE6: return GroupSpec::parse("C4");
    case MinrepCase::HermitianE6: return GroupSpec::parse("A1xA5");
    case MinrepCase::E62Compact: return GroupSpec::parse("D5xU1");
  }
  return {};
}

GroupSpec case_group(DualPairCase c) {
  switch (c) {
    case DualPairCase::SplitJSplitE: return GroupSpec::parse("A1^4");
    case DualPairCase::SplitJMixedE:
    case DualPairCase::HermJMixedE: return GroupSpec::parse("C2xA1xU1");
    case DualPairCase::E62Spin8: return GroupSpec::parse("D4xU1^3");
  }
  return {};
}

GradedCharacter minrep_levels(MinrepCase c, int N) {
  const GroupSpec g = case_group(c);
  GradedCharacter out{g, {}, {}};
  out.levels = build_levels(N, [&](int n) {
    Weight hw;
    switch (c) {
      case MinrepCase::SplitE6: hw = W({int_coord({n, n, n, n})}); break;
      case MinrepCase::HermitianE6: hw = W({int_coord({n + 2}), int_coord({n, n, n, 0, 0, 0})}); break;
      case MinrepCase::E62Compact: hw = W({Coord(5, Rational(n, 2))}, {Rational(n + 4)}); break;
    }
    FormalCharacter level(g);
    level.add(make_weight(g, hw, true));
    return level;
  });
  if (c == MinrepCase::SplitE6) out.signs = uniform_signs(out.levels);
  return out;
}

std::map<std::int64_t, int> sp2_trivial_delta_signs(int n) {
  static std::mutex mu;
  static std::map<int, std::map<std::int64_t, int>> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  std::map<std::int64_t, int> signs;
  std::map<std::int64_t, bool> conflict;
  const auto constituents = branch_su6_omega3_to_sp3(n);
  for (const auto& [w, mult] : constituents.character.terms) {
    const int s = constituents.signs.at(w);
    const auto& res = cached_restriction("sp2sp1_in_sp3", w);
    for (const auto& [t, k] : res.terms) {
      if (t.parts[0] != Coord{Rational(0), Rational(0)}) continue;
      const auto ell = to_int(t.parts[1][0]);
      auto [it, fresh] = signs.try_emplace(ell, s);
      if (!fresh && it->second != s) conflict[ell] = true;
    }
  }
  for (const auto& [ell, bad] : conflict)
    if (bad) signs.erase(ell);
  std::lock_guard lock(mu);
  cache.try_emplace(n, signs);
  return signs;
}

namespace {

// Sp(2)-trivial types only occur at charge 0; each SU2 label l of
// V(n omega_3) spreads over V(l) x V(n+2) in the diagonal SU2.
std::map<Weight, int> herm_level_signs(int n, const FormalCharacter& level) {
  const auto& a1 = root_system(CartanType::parse("A1"));
  std::map<Weight, int> signs;
  std::map<Weight, bool> conflict;
  for (const auto& [ell, s] : sp2_trivial_delta_signs(n)) {
    for (const auto& [z, mz] : tensor_decompose(a1, int_coord({ell}), int_coord({n + 2}))) {
      const Weight w = W({int_coord({0, 0}), z}, {Rational(0)});
      if (level.multiplicity(w) <= 0) continue;
      auto [it, fresh] = signs.try_emplace(w, s);
      if (!fresh && it->second != s) conflict[w] = true;
    }
  }
  for (const auto& [w, bad] : conflict) signs.erase(w);
  return signs;
}

}  // namespace

GradedCharacter dualpair_graded(DualPairCase c, int N) {
  const GroupSpec g = case_group(c);
  GradedCharacter out{g, {}, {}};
  switch (c) {
    case DualPairCase::SplitJSplitE:
      out.levels = build_levels(N, split_split_level);
      out.signs = uniform_signs(out.levels);
      break;
    case DualPairCase::SplitJMixedE:
      out.levels = build_levels(N, split_mixed_level);
      out.signs = uniform_signs(out.levels);
      break;
    case DualPairCase::HermJMixedE:
      out.levels = build_levels(N, herm_mixed_level);
      for (int n = 0; n <= N; ++n) out.signs.push_back(herm_level_signs(n, out.levels[n]));
      break;
    case DualPairCase::E62Spin8: out.levels = build_levels(N, e62_spin8_level); break;
  }
  return out;
}

namespace {

std::int64_t count_in_level(const FormalCharacter& level, const Weight& type, const std::optional<Rational>& charge) {
  std::int64_t total = 0;
  for (const auto& [w, m] : level.terms) {
    if (w.parts != type.parts) continue;
    if (charge && (w.charges.empty() || w.charges[0] != *charge)) continue;
    total += m;
  }
  return total;
}

FormalCharacter single_level(DualPairCase c, int n) {
  switch (c) {
    case DualPairCase::SplitJSplitE: return split_split_level(n);
    case DualPairCase::SplitJMixedE: return split_mixed_level(n);
    case DualPairCase::HermJMixedE: return herm_mixed_level(n);
    case DualPairCase::E62Spin8: return e62_spin8_level(n);
  }
  return {};
}

Weight canonical_type(DualPairCase c, const Weight& type) {
  GroupSpec bare = case_group(c);
  bare.circles = 0;
  return make_weight(bare, Weight{type.parts, {}}, true);
}

}  // namespace

std::int64_t ktype_multiplicity(DualPairCase c, const Weight& type, std::optional<Rational> charge, int n) {
  check_type(c, type);
  if (c == DualPairCase::SplitJSplitE && charge) throw InputError("splitJ-splitE types carry no charge");
  if (charge && !is_integer(*charge)) throw InputError("charge must be an integer");
  if (n < 0) throw InputError("level must be non-negative");
  return count_in_level(single_level(c, n), canonical_type(c, type), charge);
}

std::vector<FormalCharacter> dualpair_levels(DualPairCase c, int N) {
  return build_levels(N, [c](int n) { return single_level(c, n); });
}

MultiplicitySeries multiplicity_series(DualPairCase c, const Weight& type, std::optional<Rational> charge, int N) {
  check_type(c, type);
  return multiplicity_series(c, dualpair_levels(c, N), type, charge);
}

MultiplicitySeries multiplicity_series(DualPairCase c, const std::vector<FormalCharacter>& levels, const Weight& type,
                                       std::optional<Rational> charge) {
  check_type(c, type);
  if (c == DualPairCase::SplitJSplitE && charge) throw InputError("splitJ-splitE types carry no charge");
  if (charge && !is_integer(*charge)) throw InputError("charge must be an integer");
  const Weight t = canonical_type(c, type);
  GroupSpec bare = case_group(c);
  bare.circles = 0;
  MultiplicitySeries s;
  s.target = format_weight(bare, t) + (charge ? "[" + to_string(*charge) + "]" : "");
  s.kind = c == DualPairCase::SplitJSplitE ? SeriesKind::Cumulative : SeriesKind::Graded;
  for (const auto& level : levels) s.values.push_back(count_in_level(level, t, charge));
  for (std::size_t n = 0; n < s.values.size(); ++n) {
    if (s.values[n] > 0) {
      s.first_level = static_cast<int>(n);
      break;
    }
  }
  // Read off the tail directly, independently of verify_growth: the last
  // increment for cumulative series, the last value otherwise.
  const auto& v = s.values;
  auto step = [&](std::size_t n) -> std::int64_t {
    if (s.kind == SeriesKind::Graded) return v[n];
    return n == 0 ? v[0] : v[n] - v[n - 1];
  };
  if (v.empty()) return s;
  s.stabilized = step(v.size() - 1);
  int onset = static_cast<int>(v.size()) - 1;
  while (onset > 0 && step(static_cast<std::size_t>(onset - 1)) == s.stabilized) --onset;
  s.onset = onset;
  return s;
}

Report verify_split_multiplicity(int max_sum, int N) {
  if (max_sum < 0 || N < 0) throw InputError("bounds must be non-negative");
  const auto levels = dualpair_levels(DualPairCase::SplitJSplitE, N);
  Report r;
  for (int a = 0; a <= max_sum; ++a)
    for (int b = 0; a + b <= max_sum; ++b)
      for (int c = 0; a + b + c <= max_sum; ++c) {
        const int sum = a + b + c;
        if (sum % 2 != 0) continue;
        const bool triangle = a <= b + c && b <= a + c && c <= a + b;
        const Weight type{{int_coord({a}), int_coord({b}), int_coord({c}), int_coord({0})}, {}};
        const auto s = multiplicity_series(DualPairCase::SplitJSplitE, levels, type, std::nullopt);
        std::string expected, actual;
        bool ok = true;
        for (int n = 0; n <= N; ++n) {
          const std::int64_t want = triangle ? std::max(0, n + 1 - sum / 2) : 0;
          ok = ok && s.values[n] == want;
          expected += (n ? "," : "") + std::to_string(want);
          actual += (n ? "," : "") + std::to_string(s.values[n]);
        }
        r.add("split V(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ",0)", ok, expected,
              actual);
      }
  return r;
}

GrowthVerdict verify_growth(const MultiplicitySeries& s) {
  GrowthVerdict out;
  const auto& v = s.values;
  if (v.size() < 2) {
    out.reason = "need at least two degrees";
    return out;
  }
  std::vector<std::int64_t> inc(v.size());
  for (std::size_t n = 0; n < v.size(); ++n) {
    if (s.kind == SeriesKind::Graded) {
      inc[n] = v[n];
    } else {
      inc[n] = n == 0 ? v[0] : v[n] - v[n - 1];
    }
  }
  for (std::size_t n = 0; n < inc.size(); ++n) {
    if (inc[n] < 0) {
      out.reason = "negative increment at degree " + std::to_string(n);
      return out;
    }
    if (n > 0 && inc[n] < inc[n - 1]) {
      out.reason = "increment decreases at degree " + std::to_string(n);
      return out;
    }
  }
  if (inc.back() != inc[inc.size() - 2]) {
    out.reason = "increments not yet constant at the truncation";
    return out;
  }
  out.accepted = true;
  out.bound = inc.back();
  int onset = static_cast<int>(inc.size()) - 1;
  while (onset > 0 && inc[static_cast<std::size_t>(onset - 1)] == out.bound) --onset;
  out.onset = onset;
  return out;
}

Invariants so3_invariants(int a, int b, int c, int d) {
  if (a < 0 || b < 0 || c < 0 || d < 0) throw InputError("SU2 labels must be non-negative");
  Invariants out;
  if ((a + b + c + d) % 2 != 0) {
    out.odd_parity = true;
    return out;
  }
  const auto& a1 = root_system(CartanType::parse("A1"));
  const auto left = tensor_decompose(a1, int_coord({a}), int_coord({b}));
  const auto right = tensor_decompose(a1, int_coord({c}), int_coord({d}));
  // V_j is self-dual, so invariants pair equal labels.
  for (const auto& [j, mj] : left)
    if (auto it = right.find(j); it != right.end()) out.value += mj * it->second;
  return out;
}

std::string to_string(SignTag t) { return t == SignTag::Rho1 ? "rho1" : "epsilon"; }

int o2_reflection_sign(int k) {
  // Sym^(2k)(U x W) = sum over partitions lambda of 2k with at most two rows
  // of S_lambda(U) x S_lambda(W). S_lambda(C^2) restricted to SL2 is
  // V(lambda1 - lambda2) (times det^lambda2), so the SL2-invariant piece is
  // lambda = (k,k) and contributes S_(k,k)(W) = det(W)^k; a reflection in
  // O(2) has determinant -1.
  for (int l2 = 0; l2 <= k; ++l2) {
    const int l1 = 2 * k - l2;
    if (l1 == l2) return parity_sign(l2);
  }
  return 0;  // k < 0
}

SignAssignment sign_first_appearance(DualPairCase c, const Weight& type, int max_level) {
  auto not_covered = [&](const std::string& why) {
    return NotCovered("no sign rule for " + case_name(c) + " type: " + why);
  };
  auto first_with_sign = [&](const std::optional<Rational>& charge, auto sign_at) {
    const auto s = multiplicity_series(c, type, charge, max_level);
    if (!s.first_level) throw not_covered("does not appear up to level " + std::to_string(max_level));
    SignAssignment out;
    out.first_level = *s.first_level;
    out.sign = sign_at(out.first_level);
    if (out.sign != 1 && out.sign != -1) throw Error("sign rule produced " + std::to_string(out.sign));
    out.tag = out.sign > 0 ? SignTag::Rho1 : SignTag::Epsilon;
    return out;
  };
  switch (c) {
    case DualPairCase::SplitJSplitE: {
      if (type.parts.size() != 4) throw InputError("splitJ-splitE types have four SU2 labels");
      std::vector<std::int64_t> v;
      for (const auto& p : type.parts) v.push_back(to_int(p[0]));
      for (auto x : v)
        if (x % 2 != 0) throw not_covered("entries must all be even");
      auto zero = std::find(v.begin(), v.end(), 0);
      if (zero == v.end()) throw not_covered("needs a zero entry");
      v.erase(zero);
      if (v[0] > v[1] + v[2] || v[1] > v[0] + v[2] || v[2] > v[0] + v[1])
        throw not_covered("remaining entries violate the triangle inequality");
      const auto graded = dualpair_graded(c, max_level);
      const Weight t = canonical_type(c, type);
      return first_with_sign(std::nullopt, [&](int n) { return graded.signs[n].at(t); });
    }
    case DualPairCase::SplitJMixedE: {
      if (type.parts.size() != 2) throw InputError("splitJ-mixedE types are (x,y) x z");
      const auto x = to_int(type.parts[0][0]), y = to_int(type.parts[0][1]), z = to_int(type.parts[1][0]);
      if (y != 0 || z != 0 || x % 2 != 0) throw not_covered("family is V(2k,0) x V0");
      const Weight t = canonical_type(c, type);
      const Weight keyed{t.parts, {Rational(0)}};
      const auto graded = dualpair_graded(c, max_level);
      return first_with_sign(Rational(0), [&](int n) {
        // Cartan sign of the level times the O(2) reflection on the
        // Sp(1)-invariant line of V(2k,0).
        return graded.signs[n].at(keyed) * o2_reflection_sign(static_cast<int>(x / 2));
      });
    }
    case DualPairCase::HermJMixedE: {
      if (type.parts.size() != 2) throw InputError("hermJ-mixedE types are (x,y) x z");
      const auto x = to_int(type.parts[0][0]), y = to_int(type.parts[0][1]), z = to_int(type.parts[1][0]);
      if (x != 0 || y != 0 || z <= 0 || z % 2 != 0) throw not_covered("family is V(0,0) x V(2k), k > 0");
      const Weight t = canonical_type(c, type);
      const Weight keyed{t.parts, {Rational(0)}};
      return first_with_sign(std::nullopt, [&](int n) {
        const auto signs = herm_level_signs(n, single_level(c, n));
        auto it = signs.find(keyed);
        if (it == signs.end()) throw not_covered("delta sign undetermined at level " + std::to_string(n));
        return it->second;
      });
    }
    case DualPairCase::E62Spin8: break;
  }
  throw not_covered("no sign grading");
}

Report verify_sign_rules(int max_first_level) {
  if (max_first_level < 0) throw InputError("max first level must be non-negative");
  const int max_level = std::max(max_first_level, 1);
  struct Witness {
    DualPairCase c;
    Weight type;
    int first;
    SignTag tag;
  };
  std::vector<Witness> ws;
  auto tag_for = [](bool epsilon) { return epsilon ? SignTag::Epsilon : SignTag::Rho1; };
  for (int a = 0; a <= 2 * max_first_level; a += 2)
    for (int b = 0; a + b <= 2 * max_first_level; b += 2)
      for (int c = 0; a + b + c <= 2 * max_first_level; c += 2) {
        if (a > b + c || b > a + c || c > a + b) continue;
        const int first = (a + b + c) / 2;
        std::set<std::vector<int>> seen;
        for (int zero = 0; zero < 4; ++zero) {
          std::vector<int> v{a, b, c};
          v.insert(v.begin() + zero, 0);
          if (!seen.insert(v).second) continue;
          Weight t;
          for (int x : v) t.parts.push_back(int_coord({x}));
          ws.push_back({DualPairCase::SplitJSplitE, t, first, tag_for(first % 2 != 0)});
        }
      }
  for (int k = 0; 2 * k <= max_first_level; ++k)
    ws.push_back({DualPairCase::SplitJMixedE, Weight{{int_coord({2 * k, 0}), int_coord({0})}, {}}, 2 * k,
                  tag_for(k % 2 != 0)});
  for (int k = 1; k - 1 <= max_first_level; ++k)
    ws.push_back({DualPairCase::HermJMixedE, Weight{{int_coord({0, 0}), int_coord({2 * k})}, {}}, k - 1,
                  tag_for(k % 2 == 0)});
  const auto checks = parallel_map(ws.size(), [&](std::size_t i) {
    const auto& w = ws[i];
    const std::string expected = to_string(w.tag) + "@" + std::to_string(w.first);
    std::string actual;
    bool ok = false;
    try {
      const auto got = sign_first_appearance(w.c, w.type, max_level);
      actual = to_string(got.tag) + "@" + std::to_string(got.first_level);
      ok = got.tag == w.tag && got.first_level == w.first;
    } catch (const NotCovered& e) {
      actual = e.what();
    }
    GroupSpec bare = case_group(w.c);
    bare.circles = 0;
    return Check{case_name(w.c) + " " + format_weight(bare, w.type), ok, expected, actual};
  });
  Report r;
  r.checks = checks;
  return r;
}

}  // namespace liedual
