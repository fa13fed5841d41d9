#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liedual/charalg.hpp"
#include "liedual/report.hpp"

namespace liedual {

enum class MinrepCase { SplitE6, HermitianE6, E62Compact };
enum class DualPairCase { SplitJSplitE, SplitJMixedE, HermJMixedE, E62Spin8 };

/// "split-E6", "hermitian-E6", "e62-compact".
MinrepCase parse_minrep_case(std::string_view name);
/// "splitJ-splitE", "splitJ-mixedE", "hermJ-mixedE", "e62-spin8".
DualPairCase parse_dualpair_case(std::string_view name);
std::string case_name(MinrepCase c);
std::string case_name(DualPairCase c);
/// Compact group on which the case's K-types live.
GroupSpec case_group(MinrepCase c);
GroupSpec case_group(DualPairCase c);

/// levels[n] for n = 0..N. Circle charges are part of the weights. When a
/// sign grading exists, signs[n] maps terms of level n to +1/-1; it may cover
/// only part of a level (see dualpair_graded).
struct GradedCharacter {
  GroupSpec group;
  std::vector<FormalCharacter> levels;
  std::vector<std::map<Weight, int>> signs;

  bool has_signs() const { return !signs.empty(); }
};

/// K-type models of the minimal representations:
///   split-E6      Sp(4):          V(n,n,n,n), sign (-1)^n;
///   hermitian-E6  SU2 x SU(6):    V(n+2) x V(n omega_3);
///   e62-compact   Spin(10) x U(1): V(n omega_5), charge n+4.
GradedCharacter minrep_levels(MinrepCase c, int N);

/// Level-by-level restriction to the compact data of a dual pair:
///   splitJ-splitE  SU2^4, signs (-1)^n on every term;
///   splitJ-mixedE  Sp(2) x SU2 x U(1) through Sp(2) x Sp(1) x O(2); the SU2
///                  label is twice the SO(3) weight and the charge twice the
///                  SO(2) weight; signs (-1)^n on every term;
///   hermJ-mixedE   Sp(2) x SU2 x U(1), U(1) charge from SU(6); delta signs on
///                  Sp(2)-trivial terms only;
///   e62-spin8      Spin(8) x U(1)^3 with the T' charge triple.
GradedCharacter dualpair_graded(DualPairCase c, int N);

/// Levels 0..N of dualpair_graded without the sign grading.
std::vector<FormalCharacter> dualpair_levels(DualPairCase c, int N);

/// Multiplicity of `type` in level n. `type` carries no charges; with a charge
/// only that charge block is counted, without one all charges are summed.
/// Throws InputError unless the type is a dominant weight of the case's group;
/// weights that never occur (odd label sum) simply give 0.
std::int64_t ktype_multiplicity(DualPairCase c, const Weight& type, std::optional<Rational> charge, int n);

enum class SeriesKind {
  /// values[n] is the total dimension of a graded quotient up to degree n;
  /// the stabilized value is the eventual increment.
  Cumulative,
  /// values[n] is the multiplicity in degree n itself; the stabilized value
  /// is the eventual value.
  Graded,
};

struct MultiplicitySeries {
  std::string target;
  SeriesKind kind = SeriesKind::Graded;
  std::vector<std::int64_t> values;
  std::optional<int> first_level;
  std::int64_t stabilized = 0;
  /// First n from which the stabilized behaviour holds through the end.
  int onset = 0;
};

/// values[n] = ktype_multiplicity(c, type, charge, n) for n = 0..N.
MultiplicitySeries multiplicity_series(DualPairCase c, const Weight& type, std::optional<Rational> charge, int N);
/// Same, reading precomputed dualpair_levels(c, N).
MultiplicitySeries multiplicity_series(DualPairCase c, const std::vector<FormalCharacter>& levels, const Weight& type,
                                       std::optional<Rational> charge);

struct GrowthVerdict {
  bool accepted = false;
  std::int64_t bound = 0;
  int onset = 0;
  std::string reason;
};

/// Graded-growth check: the increments of the cumulative sequence must be
/// non-negative, non-decreasing and constant over at least the last two
/// degrees; the bound is that final increment. For Graded series the
/// cumulative sequence is the sequence of partial sums.
GrowthVerdict verify_growth(const MultiplicitySeries& s);

/// Split model, types V(a,b,c,0) with a+b+c even and a+b+c <= max_sum, levels
/// 0..N: the multiplicity is max(0, n+1-(a+b+c)/2) when (a,b,c) satisfies the
/// triangle inequality and 0 at every level otherwise.
Report verify_split_multiplicity(int max_sum = 12, int N = 8);

struct Invariants {
  std::int64_t value = 0;
  /// Set when a+b+c+d is odd: not a representation of SO(3), value is 0.
  bool odd_parity = false;
};
/// Dimension of the invariants in V_a x V_b x V_c x V_d (A1 labels).
Invariants so3_invariants(int a, int b, int c, int d);

enum class SignTag { Rho1, Epsilon };
std::string to_string(SignTag t);

struct SignAssignment {
  SignTag tag = SignTag::Rho1;
  int first_level = 0;
  int sign = 1;
};

/// Sign of `type` at its first appearance: +1 is the rho(1) side, -1 the
/// epsilon side. Covered families:
///   splitJ-splitE  all-even types with a zero entry whose other three
///                  entries satisfy the triangle inequality;
///   splitJ-mixedE  V(2k,0) x V0 at charge 0;
///   hermJ-mixedE   V(0,0) x V(2k), k > 0.
/// Throws NotCovered outside these families.
SignAssignment sign_first_appearance(DualPairCase c, const Weight& type, int max_level = 12);

/// Witnesses of the three sign rules with first level <= max_first_level:
///   splitJ-splitE  even triangle types with a zero entry: first level
///                  (a+b+c)/2, epsilon iff it is odd;
///   splitJ-mixedE  V(2k,0) x V0: first level 2k, epsilon iff k is odd;
///   hermJ-mixedE   V(0,0) x V(2k), k > 0: first level k-1, epsilon iff k is
///                  even.
Report verify_sign_rules(int max_first_level = 6);

/// Sign of the O(2) reflection on the Sp(1)-invariants of Sym^(2k)(C^2 x C^2),
/// read off the Cauchy decomposition.
int o2_reflection_sign(int k);

/// delta-signs of the Sp(2)-trivial types V(0,0) x V(l) in V(n omega_3),
/// keyed by the SU2 label l, obtained by restricting each signed Sp(3)
/// constituent to Sp(2) x Sp(1).
std::map<std::int64_t, int> sp2_trivial_delta_signs(int n);

}  // namespace liedual
