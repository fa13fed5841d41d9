#include "liedual/charalg.hpp"

#include <algorithm>
#include <mutex>

#include "liedual/errors.hpp"

namespace liedual {

void FormalCharacter::add(const Weight& hw, std::int64_t mult) {
  if (mult == 0) return;
  auto [it, inserted] = terms.try_emplace(hw, mult);
  if (!inserted && (it->second += mult) == 0) terms.erase(it);
}

void FormalCharacter::add(const FormalCharacter& other, std::int64_t scale) {
  for (const auto& [w, m] : other.terms) add(w, m * scale);
}

std::int64_t FormalCharacter::multiplicity(const Weight& hw) const {
  auto it = terms.find(hw);
  return it == terms.end() ? 0 : it->second;
}

bool FormalCharacter::is_nonnegative() const {
  return std::all_of(terms.begin(), terms.end(), [](const auto& t) { return t.second > 0; });
}

BigInt FormalCharacter::dimension() const {
  BigInt total = 0;
  for (const auto& [w, m] : terms) total += liedual::dimension(group, w) * m;
  return total;
}

BigInt dimension(const RootSystem& rs, const Coord& hw) {
  if (!rs.is_dominant(hw)) throw NotDominant(to_string(hw) + " is not dominant for " + rs.label());
  const Coord shifted = add(hw, rs.weyl_vector());
  BigInt num = 1, den = 1;
  for (const auto& a : rs.positive_coroots()) {
    // <hw + rho, a^vee> / <rho, a^vee>, both positive; clear denominators.
    const Rational top = dot(shifted, a);
    const Rational bottom = dot(rs.weyl_vector(), a);
    num *= BigInt(top.numerator()) * bottom.denominator();
    den *= BigInt(bottom.numerator()) * top.denominator();
  }
  if (num % den != 0) throw Error("Weyl dimension formula gave a non-integer for " + to_string(hw));
  return num / den;
}

BigInt dimension(const GroupSpec& g, const Weight& hw) {
  BigInt d = 1;
  for (std::size_t f = 0; f < g.factors.size(); ++f) d *= dimension(root_system(g.factors[f]), hw.parts[f]);
  return d;
}

namespace {

using Key = std::pair<CartanType, Coord>;

template <class Compute>
std::shared_ptr<const WeightMap> memoized(std::map<Key, std::shared_ptr<const WeightMap>>& cache, std::mutex& mu,
                                          const Key& key, Compute compute) {
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  auto value = std::make_shared<const WeightMap>(compute());
  std::lock_guard lock(mu);
  return cache.try_emplace(key, std::move(value)).first->second;
}

WeightMap freudenthal(const RootSystem& rs, const Coord& hw) {
  if (!rs.is_dominant(hw)) throw NotDominant(to_string(hw) + " is not dominant for " + rs.label());
  // Dominant weights below hw, grouped by depth (sum of root coefficients of hw - mu).
  std::map<Coord, Rational> depth{{hw, Rational(0)}};
  std::vector<Coord> frontier{hw};
  while (!frontier.empty()) {
    std::vector<Coord> next;
    for (const auto& mu : frontier) {
      for (const auto& a : rs.positive_roots()) {
        auto nu = dominant_conjugate(rs, sub(mu, a)).dominant;
        if (depth.count(nu)) continue;
        const Coord diff = sub(hw, nu);
        if (!rs.in_positive_root_cone(diff)) continue;
        Rational d(0);
        for (const auto& c : rs.root_coefficients(diff)) d += c;
        depth.emplace(nu, d);
        next.push_back(std::move(nu));
      }
    }
    frontier = std::move(next);
  }
  std::vector<Coord> order;
  for (const auto& [mu, d] : depth) order.push_back(mu);
  std::stable_sort(order.begin(), order.end(), [&](const Coord& x, const Coord& y) { return depth[x] < depth[y]; });

  const Coord& rho = rs.weyl_vector();
  const Coord top = add(hw, rho);
  const Rational top_norm = dot(top, top);
  WeightMap mult;
  mult[hw] = 1;
  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    const Coord& mu = order[idx];
    Rational acc(0);
    for (const auto& a : rs.positive_roots()) {
      for (std::int64_t k = 1;; ++k) {
        const Coord up = add(mu, scale(a, Rational(k)));
        auto it = mult.find(dominant_conjugate(rs, up).dominant);
        if (it == mult.end()) break;
        acc += Rational(it->second) * dot(up, a);
      }
    }
    const Coord shifted = add(mu, rho);
    const Rational m = 2 * acc / (top_norm - dot(shifted, shifted));
    if (!is_integer(m) || m < Rational(0)) throw Error("Freudenthal recursion produced " + to_string(m));
    if (m != Rational(0)) mult[mu] = m.numerator();
  }
  return mult;
}

}  // namespace

std::shared_ptr<const WeightMap> dominant_weight_multiplicities(const RootSystem& rs, const Coord& hw) {
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const WeightMap>> cache;
  return memoized(cache, mu, {rs.type(), hw}, [&] { return freudenthal(rs, hw); });
}

std::shared_ptr<const WeightMap> weight_multiplicities(const RootSystem& rs, const Coord& hw) {
  static std::mutex mu;
  static std::map<Key, std::shared_ptr<const WeightMap>> cache;
  return memoized(cache, mu, {rs.type(), hw}, [&] {
    WeightMap full;
    for (const auto& [w, m] : *dominant_weight_multiplicities(rs, hw))
      for (auto& x : weyl_orbit(rs, w)) full.emplace(std::move(x), m);
    return full;
  });
}

std::map<Weight, std::int64_t> weight_diagram(const GroupSpec& g, const Weight& hw) {
  std::map<Weight, std::int64_t> out{{Weight{{}, hw.charges}, 1}};
  for (std::size_t f = 0; f < g.factors.size(); ++f) {
    const auto diagram = weight_multiplicities(root_system(g.factors[f]), hw.parts[f]);
    std::map<Weight, std::int64_t> next;
    for (const auto& [w, m] : out) {
      for (const auto& [c, k] : *diagram) {
        Weight x = w;
        x.parts.push_back(c);
        next.emplace(std::move(x), m * k);
      }
    }
    out = std::move(next);
  }
  return out;
}

WeightMap tensor_decompose(const RootSystem& rs, const Coord& hw1, const Coord& hw2) {
  const bool swap = dimension(rs, hw2) > dimension(rs, hw1);
  const Coord& big = swap ? hw2 : hw1;
  const Coord& small = swap ? hw1 : hw2;
  const Coord shifted = add(big, rs.weyl_vector());
  WeightMap out;
  for (const auto& [nu, m] : *weight_multiplicities(rs, small)) {
    auto dc = dominant_conjugate(rs, add(shifted, nu));
    if (dc.sign == 0) continue;
    auto& slot = out[sub(dc.dominant, rs.weyl_vector())];
    slot += dc.sign * m;
  }
  for (auto it = out.begin(); it != out.end();) {
    if (it->second < 0) throw Error("negative tensor multiplicity at " + to_string(it->first));
    it = it->second == 0 ? out.erase(it) : std::next(it);
  }
  return out;
}

FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b) {
  if (!(a.group == b.group)) throw InputError("tensor of characters of different groups");
  const auto& g = a.group;
  FormalCharacter out(g);
  for (const auto& [wa, ma] : a.terms) {
    for (const auto& [wb, mb] : b.terms) {
      std::map<Weight, std::int64_t> acc{{Weight{{}, {}}, ma * mb}};
      for (std::size_t f = 0; f < g.factors.size(); ++f) {
        const auto piece = tensor_decompose(root_system(g.factors[f]), wa.parts[f], wb.parts[f]);
        std::map<Weight, std::int64_t> next;
        for (const auto& [w, m] : acc) {
          for (const auto& [c, k] : piece) {
            Weight x = w;
            x.parts.push_back(c);
            next.emplace(std::move(x), m * k);
          }
        }
        acc = std::move(next);
      }
      std::vector<Rational> charges(wa.charges.size());
      for (std::size_t i = 0; i < charges.size(); ++i) charges[i] = wa.charges[i] + wb.charges[i];
      for (const auto& [w, m] : acc) out.add(Weight{w.parts, charges}, m);
    }
  }
  return out;
}

InfChar infinitesimal_character(const RootSystem& rs, const Coord& hw) {
  return {dominant_conjugate(rs, add(hw, rs.weyl_vector())).dominant};
}

}  // namespace liedual
