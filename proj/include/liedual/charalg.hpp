#pragma once

#include <cstdint>
#include <map>
#include <memory>

#include "liedual/lattice.hpp"

namespace liedual {

/// Weight -> multiplicity inside one irreducible of a simple factor.
using WeightMap = std::map<Coord, std::int64_t>;

/// Finite sum of irreducibles of a GroupSpec keyed by highest weight.
/// Coefficients may go negative while a virtual character is being built;
/// is_nonnegative() tells whether it is an honest representation.
struct FormalCharacter {
  GroupSpec group;
  std::map<Weight, std::int64_t> terms;

  FormalCharacter() = default;
  explicit FormalCharacter(GroupSpec g) : group(std::move(g)) {}

  /// Adds mult copies of V(hw); drops the entry if it cancels to zero.
  void add(const Weight& hw, std::int64_t mult = 1);
  void add(const FormalCharacter& other, std::int64_t scale = 1);
  std::int64_t multiplicity(const Weight& hw) const;
  bool is_nonnegative() const;
  bool empty() const { return terms.empty(); }
  /// Sum of mult * dim over all terms.
  BigInt dimension() const;

  friend bool operator==(const FormalCharacter& a, const FormalCharacter& b) {
    return a.group == b.group && a.terms == b.terms;
  }
};

struct InfChar {
  Coord rep;
  friend bool operator==(const InfChar&, const InfChar&) = default;
};

/// Weyl dimension formula. Throws NotDominant.
BigInt dimension(const RootSystem& rs, const Coord& hw);
BigInt dimension(const GroupSpec& g, const Weight& hw);

/// Multiplicities of the dominant weights of V(hw) by Freudenthal's recursion.
/// Memoized per (type, hw); the cache is shared and thread-safe.
std::shared_ptr<const WeightMap> dominant_weight_multiplicities(const RootSystem& rs, const Coord& hw);
/// Full weight diagram of V(hw) (dominant multiplicities spread over orbits).
std::shared_ptr<const WeightMap> weight_multiplicities(const RootSystem& rs, const Coord& hw);
/// Weight diagram of an irreducible of a product group; charges are fixed.
std::map<Weight, std::int64_t> weight_diagram(const GroupSpec& g, const Weight& hw);

/// V(hw1) (x) V(hw2) via the shifted-orbit method over the smaller factor.
WeightMap tensor_decompose(const RootSystem& rs, const Coord& hw1, const Coord& hw2);
/// Tensor product of two characters of the same product group; charges add.
FormalCharacter tensor(const FormalCharacter& a, const FormalCharacter& b);

/// Dominant representative of hw + rho.
InfChar infinitesimal_character(const RootSystem& rs, const Coord& hw);

}  // namespace liedual
