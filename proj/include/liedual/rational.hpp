#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace liedual {

/// Exact coordinates. Denominators stay tiny (1, 2, 3, 6) for every weight
/// this library manipulates, so 64-bit numerators are ample.
using Rational = boost::rational<std::int64_t>;

/// Dimensions and dimension sums.
using BigInt = boost::multiprecision::cpp_int;

/// A vector in the ambient coordinate space of a root system.
using Coord = std::vector<Rational>;

Rational parse_rational(std::string_view text);
std::string to_string(const Rational& r);
std::string to_string(const Coord& v);

bool is_integer(const Rational& r);
bool is_half_integer(const Rational& r);  // in (1/2)Z, integers included

/// Throws InputError when r is not an integer.
std::int64_t to_int(const Rational& r);

Coord add(const Coord& a, const Coord& b);
Coord sub(const Coord& a, const Coord& b);
Coord scale(const Coord& a, const Rational& s);
Rational dot(const Coord& a, const Coord& b);
Coord int_coord(std::initializer_list<std::int64_t> values);

}  // namespace liedual
