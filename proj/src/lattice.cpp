#include "liedual/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <set>

#include "liedual/errors.hpp"

namespace liedual {

namespace {

Coord unit(std::size_t dim, std::size_t i, std::int64_t c = 1) {
  Coord v(dim, Rational(0));
  v[i] = Rational(c);
  return v;
}

Coord combo(std::size_t dim, std::size_t i, std::int64_t ci, std::size_t j, std::int64_t cj) {
  Coord v(dim, Rational(0));
  v[i] += Rational(ci);
  v[j] += Rational(cj);
  return v;
}

Coord coroot_of(const Coord& a) { return scale(a, Rational(2) / dot(a, a)); }

// Gauss-Jordan inverse of a small invertible rational matrix.
std::vector<Coord> invert(std::vector<Coord> m) {
  const std::size_t n = m.size();
  std::vector<Coord> inv(n, Coord(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (m[p][c] == Rational(0)) ++p;
    std::swap(m[p], m[c]);
    std::swap(inv[p], inv[c]);
    const Rational piv = m[c][c];
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] /= piv;
      inv[c][k] /= piv;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == Rational(0)) continue;
      const Rational f = m[r][c];
      for (std::size_t k = 0; k < n; ++k) {
        m[r][k] -= f * m[c][k];
        inv[r][k] -= f * inv[c][k];
      }
    }
  }
  return inv;
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
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

std::string CartanType::label() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

CartanType CartanType::parse(std::string_view label) {
  const auto t = trim(label);
  if (t.size() < 2) throw UnsupportedType("unsupported Cartan type '" + std::string(label) + "'");
  CartanType ct;
  switch (t.front()) {
    case 'A': ct.family = Family::A; break;
    case 'B': ct.family = Family::B; break;
    case 'C': ct.family = Family::C; break;
    case 'D': ct.family = Family::D; break;
    default: throw UnsupportedType("unsupported Cartan type '" + std::string(label) + "'");
  }
  int r = 0;
  auto [ptr, ec] = std::from_chars(t.data() + 1, t.data() + t.size(), r);
  if (ec != std::errc{} || ptr != t.data() + t.size() || r < 1) {
    throw UnsupportedType("unsupported Cartan type '" + std::string(label) + "'");
  }
  ct.rank = r;
  const bool ok = (ct.family == Family::A && r >= 1) || (ct.family == Family::B && r >= 2) ||
                  (ct.family == Family::C && r >= 2) || (ct.family == Family::D && r >= 4);
  if (!ok || r > 8) throw UnsupportedType("unsupported Cartan type '" + std::string(label) + "'");
  return ct;
}

RootSystem::RootSystem(CartanType type) : type_(type) {
  const auto n = static_cast<std::size_t>(type.rank);
  switch (type.family) {
    case Family::A:
      if (n == 1) {
        ambient_dim_ = 1;
        simple_roots_ = {int_coord({2})};
        positive_roots_ = simple_roots_;
        break;
      }
      ambient_dim_ = n + 1;
      for (std::size_t i = 0; i < n; ++i) simple_roots_.push_back(combo(n + 1, i, 1, i + 1, -1));
      for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = i + 1; j <= n; ++j) positive_roots_.push_back(combo(n + 1, i, 1, j, -1));
      break;
    case Family::B:
    case Family::C:
    case Family::D: {
      ambient_dim_ = n;
      for (std::size_t i = 0; i + 1 < n; ++i) simple_roots_.push_back(combo(n, i, 1, i + 1, -1));
      if (type.family == Family::B) simple_roots_.push_back(unit(n, n - 1));
      if (type.family == Family::C) simple_roots_.push_back(unit(n, n - 1, 2));
      if (type.family == Family::D) simple_roots_.push_back(combo(n, n - 2, 1, n - 1, 1));
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          positive_roots_.push_back(combo(n, i, 1, j, -1));
          positive_roots_.push_back(combo(n, i, 1, j, 1));
        }
        if (type.family == Family::B) positive_roots_.push_back(unit(n, i));
        if (type.family == Family::C) positive_roots_.push_back(unit(n, i, 2));
      }
      break;
    }
  }
  std::sort(positive_roots_.begin(), positive_roots_.end());
  for (const auto& a : simple_roots_) simple_coroots_.push_back(coroot_of(a));
  weyl_vector_.assign(ambient_dim_, Rational(0));
  coroot_sum_.assign(ambient_dim_, Rational(0));
  for (const auto& a : positive_roots_) {
    positive_coroots_.push_back(coroot_of(a));
    weyl_vector_ = add(weyl_vector_, scale(a, Rational(1, 2)));
    coroot_sum_ = add(coroot_sum_, positive_coroots_.back());
  }
  const std::size_t r = simple_roots_.size();
  std::vector<Coord> gram(r, Coord(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) gram[i][j] = dot(simple_roots_[i], simple_roots_[j]);
  const auto ginv = invert(gram);
  coefficient_map_.assign(r, Coord(ambient_dim_, Rational(0)));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      coefficient_map_[i] = add(coefficient_map_[i], scale(simple_roots_[j], ginv[i][j]));
}

std::vector<std::vector<std::int64_t>> RootSystem::cartan_matrix() const {
  const std::size_t r = rank();
  std::vector<std::vector<std::int64_t>> a(r, std::vector<std::int64_t>(r));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a[i][j] = to_int(dot(simple_coroots_[i], simple_roots_[j]));
  return a;
}

Coord RootSystem::reflect(const Coord& w, std::size_t i) const {
  return sub(w, scale(simple_roots_[i], pairing(w, i)));
}

Coord RootSystem::canonical(Coord w) const {
  if (type_.family == Family::A && type_.rank >= 2) {
    Rational mean(0);
    for (const auto& x : w) mean += x;
    mean /= static_cast<std::int64_t>(w.size());
    for (auto& x : w) x -= mean;
  }
  return w;
}

bool RootSystem::in_weight_lattice(const Coord& w) const {
  if (w.size() != ambient_dim_) return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (!is_integer(pairing(w, i))) return false;
  return canonical(w) == w;
}

bool RootSystem::is_dominant(const Coord& w) const {
  for (std::size_t i = 0; i < rank(); ++i)
    if (pairing(w, i) < Rational(0)) return false;
  return true;
}

std::vector<Rational> RootSystem::root_coefficients(const Coord& v) const {
  std::vector<Rational> c(rank());
  for (std::size_t i = 0; i < rank(); ++i) c[i] = dot(coefficient_map_[i], v);
  return c;
}

bool RootSystem::in_positive_root_cone(const Coord& v) const {
  if (canonical(v) != v) return false;
  for (const auto& c : root_coefficients(v))
    if (!is_integer(c) || c < Rational(0)) return false;
  return true;
}

std::uint64_t RootSystem::weyl_group_order() const {
  const int n = type_.rank;
  switch (type_.family) {
    case Family::A: return factorial(n + 1);
    case Family::B:
    case Family::C: return (std::uint64_t{1} << n) * factorial(n);
    case Family::D: return (std::uint64_t{1} << (n - 1)) * factorial(n);
  }
  return 0;
}

RootSystem build_root_system(std::string_view label) { return RootSystem(CartanType::parse(label)); }

const RootSystem& root_system(CartanType type) {
  static std::mutex mu;
  static std::map<CartanType, std::unique_ptr<RootSystem>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[type];
  if (!slot) slot = std::make_unique<RootSystem>(type);
  return *slot;
}

DominantConjugate dominant_conjugate(const RootSystem& rs, Coord w) {
  int sign = 1;
  for (bool moved = true; moved;) {
    moved = false;
    for (std::size_t i = 0; i < rs.rank(); ++i) {
      if (rs.pairing(w, i) < Rational(0)) {
        w = rs.reflect(w, i);
        sign = -sign;
        moved = true;
      }
    }
  }
  for (std::size_t i = 0; i < rs.rank(); ++i)
    if (rs.pairing(w, i) == Rational(0)) sign = 0;
  return {std::move(w), sign};
}

std::vector<Coord> weyl_orbit(const RootSystem& rs, const Coord& dominant) {
  std::set<Coord> seen{dominant};
  std::vector<Coord> frontier{dominant};
  while (!frontier.empty()) {
    std::vector<Coord> next;
    for (const auto& w : frontier) {
      for (std::size_t i = 0; i < rs.rank(); ++i) {
        if (rs.pairing(w, i) == Rational(0)) continue;
        auto r = rs.reflect(w, i);
        if (seen.insert(r).second) next.push_back(std::move(r));
      }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::uint64_t weyl_orbit_size(const RootSystem& rs, const Coord& dominant) {
  if (!rs.is_dominant(dominant)) throw NotDominant(to_string(dominant) + " is not dominant for " + rs.label());
  return weyl_orbit(rs, dominant).size();
}

std::string GroupSpec::label() const {
  std::string out;
  for (const auto& f : factors) {
    if (!out.empty()) out += "x";
    out += f.label();
  }
  if (circles > 0) {
    if (!out.empty()) out += "x";
    out += "U1";
    if (circles > 1) out += "^" + std::to_string(circles);
  }
  return out;
}

GroupSpec GroupSpec::parse(std::string_view label) {
  GroupSpec g;
  for (auto tok : split(trim(label), 'x')) {
    tok = trim(tok);
    int count = 1;
    if (auto caret = tok.find('^'); caret != std::string_view::npos) {
      auto exp = tok.substr(caret + 1);
      auto [ptr, ec] = std::from_chars(exp.data(), exp.data() + exp.size(), count);
      if (ec != std::errc{} || ptr != exp.data() + exp.size() || count < 1)
        throw UnsupportedType("bad group label '" + std::string(label) + "'");
      tok = tok.substr(0, caret);
    }
    if (tok == "U1") {
      g.circles += count;
      continue;
    }
    if (g.circles > 0) throw UnsupportedType("circle factors must come last in '" + std::string(label) + "'");
    const auto ct = CartanType::parse(tok);
    for (int i = 0; i < count; ++i) g.factors.push_back(ct);
  }
  return g;
}

Weight make_weight(const GroupSpec& g, Weight w, bool require_dominant) {
  if (w.parts.size() != g.factors.size() || w.charges.size() != static_cast<std::size_t>(g.circles)) {
    throw InputError("weight shape does not match group " + g.label());
  }
  for (std::size_t f = 0; f < g.factors.size(); ++f) {
    const auto& rs = root_system(g.factors[f]);
    if (w.parts[f].size() != rs.ambient_dim())
      throw InputError("factor " + rs.label() + " expects " + std::to_string(rs.ambient_dim()) + " coordinates");
    w.parts[f] = rs.canonical(std::move(w.parts[f]));
    if (!rs.in_weight_lattice(w.parts[f]))
      throw InputError(to_string(w.parts[f]) + " is not in the weight lattice of " + rs.label());
    if (require_dominant && !rs.is_dominant(w.parts[f]))
      throw NotDominant(to_string(display_coord(g.factors[f], w.parts[f])) + " is not dominant for " + rs.label());
  }
  for (const auto& c : w.charges)
    if (!is_half_integer(c)) throw InputError("circle charge " + to_string(c) + " is not a half-integer");
  return w;
}

bool is_dominant(const GroupSpec& g, const Weight& w) {
  for (std::size_t f = 0; f < g.factors.size(); ++f)
    if (!root_system(g.factors[f]).is_dominant(w.parts[f])) return false;
  return true;
}

Weight zero_weight(const GroupSpec& g) {
  Weight w;
  for (const auto& f : g.factors) w.parts.emplace_back(root_system(f).ambient_dim(), Rational(0));
  w.charges.assign(static_cast<std::size_t>(g.circles), Rational(0));
  return w;
}

Rational height(const GroupSpec& g, const Weight& w) {
  Rational h(0);
  for (std::size_t f = 0; f < g.factors.size(); ++f) h += dot(w.parts[f], root_system(g.factors[f]).coroot_sum());
  return h;
}

Coord display_coord(CartanType t, const Coord& v) {
  if (t.family != Family::A || t.rank == 1 || v.empty()) return v;
  Coord out(v);
  const Rational last = v.back();
  for (auto& x : out) x -= last;
  return out;
}

namespace {

std::string format_impl(const GroupSpec& g, const Weight& w, bool with_v) {
  std::string out;
  for (std::size_t f = 0; f < g.factors.size(); ++f) {
    if (f) out += "x";
    if (with_v) out += "V";
    const auto c = display_coord(g.factors[f], w.parts[f]);
    out += c.size() == 1 ? to_string(c[0]) : to_string(c);
  }
  if (!w.charges.empty()) {
    if (with_v) {
      out += "[";
      for (std::size_t i = 0; i < w.charges.size(); ++i) out += (i ? "," : "") + to_string(w.charges[i]);
      out += "]";
    } else {
      for (const auto& c : w.charges) out += (out.empty() ? "" : "x") + to_string(c);
    }
  }
  return out;
}

}  // namespace

std::string format_weight(const GroupSpec& g, const Weight& w) { return format_impl(g, w, true); }

std::string format_weight_plain(const GroupSpec& g, const Weight& w) { return format_impl(g, w, false); }

Weight parse_weight(const GroupSpec& g, std::string_view text, bool charges_optional) {
  auto blocks = split(trim(text), 'x');
  const std::size_t nf = g.factors.size();
  const std::size_t nc = static_cast<std::size_t>(g.circles);
  // A product of A1 factors (and circles) also takes one flat list "a,b,c,d".
  const bool all_a1 = std::all_of(g.factors.begin(), g.factors.end(), [](const CartanType& t) {
    return t.family == Family::A && t.rank == 1;
  });
  if (blocks.size() == 1 && all_a1 && nf + nc > 1) {
    auto flat = trim(blocks[0]);
    if (!flat.empty() && flat.front() == '(' && flat.back() == ')') flat = flat.substr(1, flat.size() - 2);
    blocks = split(flat, ',');
  }
  if (blocks.size() != nf + nc && !(charges_optional && blocks.size() == nf)) {
    throw InputError("weight '" + std::string(text) + "' needs " + std::to_string(nf + nc) + " x-separated blocks for " +
                     g.label());
  }
  Weight w;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    auto blk = trim(blocks[b]);
    if (!blk.empty() && blk.front() == '(' && blk.back() == ')') blk = blk.substr(1, blk.size() - 2);
    if (blk.empty()) throw InputError("empty weight block in '" + std::string(text) + "'");
    Coord c;
    for (auto t : split(blk, ',')) c.push_back(parse_rational(t));
    if (b < nf) {
      const auto& rs = root_system(g.factors[b]);
      // A_n accepts n entries with an implicit trailing zero.
      if (rs.type().family == Family::A && rs.type().rank >= 2 && c.size() + 1 == rs.ambient_dim())
        c.emplace_back(0);
      w.parts.push_back(std::move(c));
    } else {
      if (c.size() != 1) throw InputError("circle charge block must hold one number");
      w.charges.push_back(c[0]);
    }
  }
  if (w.charges.size() < nc) w.charges.assign(nc, Rational(0));
  return make_weight(g, std::move(w));
}

}  // namespace liedual
