#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "liedual/rational.hpp"

namespace liedual {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

struct CartanType {
  Family family = Family::A;
  int rank = 1;

  std::string label() const;
  /// Accepts labels such as "C4", "A5", "D4". Throws UnsupportedType.
  static CartanType parse(std::string_view label);

  friend bool operator==(const CartanType&, const CartanType&) = default;
  friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

/// A simple root system realized in standard coordinates:
///   A1      one coordinate, alpha = (2), so the coordinate is the Dynkin label;
///   A_n     n+1 coordinates, weights kept in the sum-zero hyperplane;
///   B_n/C_n/D_n  the usual epsilon coordinates.
class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  CartanType type() const { return type_; }
  std::string label() const { return type_.label(); }
  std::size_t rank() const { return simple_roots_.size(); }
  std::size_t ambient_dim() const { return ambient_dim_; }

  const std::vector<Coord>& simple_roots() const { return simple_roots_; }
  const std::vector<Coord>& simple_coroots() const { return simple_coroots_; }
  const std::vector<Coord>& positive_roots() const { return positive_roots_; }
  const std::vector<Coord>& positive_coroots() const { return positive_coroots_; }
  /// Half-sum of positive roots.
  const Coord& weyl_vector() const { return weyl_vector_; }
  /// Sum of positive coroots; pairing with it is the height used for peeling.
  const Coord& coroot_sum() const { return coroot_sum_; }

  /// a_ij = <alpha_i^vee, alpha_j>.
  std::vector<std::vector<std::int64_t>> cartan_matrix() const;

  /// <w, alpha_i^vee>
  Rational pairing(const Coord& w, std::size_t i) const { return dot(w, simple_coroots_[i]); }
  Coord reflect(const Coord& w, std::size_t i) const;

  /// Representative used as map key: projection to the sum-zero hyperplane
  /// for type A_n (n >= 2), identity otherwise.
  Coord canonical(Coord w) const;

  bool in_weight_lattice(const Coord& w) const;
  bool is_dominant(const Coord& w) const;

  /// Coefficients of v in the basis of simple roots (v must lie in their span).
  std::vector<Rational> root_coefficients(const Coord& v) const;
  /// True iff v is a non-negative integer combination of simple roots.
  bool in_positive_root_cone(const Coord& v) const;

  std::uint64_t weyl_group_order() const;

 private:
  CartanType type_;
  std::size_t ambient_dim_ = 0;
  std::vector<Coord> simple_roots_, simple_coroots_, positive_roots_, positive_coroots_;
  Coord weyl_vector_, coroot_sum_;
  // rank x ambient matrix mapping a vector to its simple-root coefficients
  std::vector<Coord> coefficient_map_;
};

/// Fresh root system for a label in the supported families.
RootSystem build_root_system(std::string_view label);
/// Shared immutable instance; safe to call concurrently.
const RootSystem& root_system(CartanType type);

struct DominantConjugate {
  Coord dominant;
  /// det of the Weyl element used, or 0 when w lies on a reflection wall.
  int sign = 0;
};

DominantConjugate dominant_conjugate(const RootSystem& rs, Coord w);

/// Full Weyl orbit of a dominant weight, sorted.
std::vector<Coord> weyl_orbit(const RootSystem& rs, const Coord& dominant);
/// |W| / |Stab(w)|. Throws NotDominant for non-dominant input.
std::uint64_t weyl_orbit_size(const RootSystem& rs, const Coord& dominant);

/// Product of simple factors and circle factors. Factor order is identity.
struct GroupSpec {
  std::vector<CartanType> factors;
  int circles = 0;

  std::string label() const;
  /// "C2xA1xU1", "A1xA1xA1xA1", "D4xU1^3".
  static GroupSpec parse(std::string_view label);

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// A weight of a GroupSpec: one coordinate vector per simple factor plus one
/// charge per circle factor.
struct Weight {
  std::vector<Coord> parts;
  std::vector<Rational> charges;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend bool operator<(const Weight& a, const Weight& b) {
    if (a.parts != b.parts) return a.parts < b.parts;
    return a.charges < b.charges;
  }
};

/// Canonicalizes every part and checks shape and lattice membership; with
/// require_dominant also checks dominance. Throws InputError / NotDominant.
Weight make_weight(const GroupSpec& g, Weight w, bool require_dominant = false);
bool is_dominant(const GroupSpec& g, const Weight& w);
Weight zero_weight(const GroupSpec& g);

/// Height of w for the group: sum over factors of <w_f, 2 rho_f^vee>.
Rational height(const GroupSpec& g, const Weight& w);

/// Human-readable weight: A-type parts shown with last coordinate 0, rank-one
/// parts as a bare label ("V(1,0)xV2[1]").
std::string format_weight(const GroupSpec& g, const Weight& w);
/// Same coordinates without the V prefix, "(1,0)x2x1", in the syntax
/// parse_weight accepts.
std::string format_weight_plain(const GroupSpec& g, const Weight& w);
/// Parses "x"-separated blocks of comma-separated rationals, parentheses
/// optional: "(2,0)x0" or "1,1,1,1". One block per simple factor followed by
/// one per circle; with charges_optional the circle blocks may be omitted and
/// default to zero. The result is canonicalized but not checked for dominance.
Weight parse_weight(const GroupSpec& g, std::string_view text, bool charges_optional = false);
/// Display form of one part: A_n shifted so the last coordinate is 0.
Coord display_coord(CartanType t, const Coord& v);

}  // namespace liedual
