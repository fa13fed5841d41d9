#include "liedual/rational.hpp"

#include <charconv>

#include "liedual/errors.hpp"

namespace liedual {

namespace {

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw InputError("not a rational number: '" + std::string(whole) + "'");
  }
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto t = trim(text);
  const auto slash = t.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(t, text));
  const auto num = parse_int(t.substr(0, slash), text);
  const auto den = parse_int(t.substr(slash + 1), text);
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const Coord& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  return out + ")";
}

bool is_integer(const Rational& r) { return r.denominator() == 1; }

bool is_half_integer(const Rational& r) { return r.denominator() == 1 || r.denominator() == 2; }

std::int64_t to_int(const Rational& r) {
  if (!is_integer(r)) throw InputError("expected an integer, got " + to_string(r));
  return r.numerator();
}

Coord add(const Coord& a, const Coord& b) {
  Coord out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b[i];
  return out;
}

Coord sub(const Coord& a, const Coord& b) {
  Coord out(a);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b[i];
  return out;
}

Coord scale(const Coord& a, const Rational& s) {
  Coord out(a);
  for (auto& x : out) x *= s;
  return out;
}

Rational dot(const Coord& a, const Coord& b) {
  Rational acc(0);
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Coord int_coord(std::initializer_list<std::int64_t> values) {
  Coord out;
  out.reserve(values.size());
  for (auto v : values) out.emplace_back(v);
  return out;
}

}  // namespace liedual
