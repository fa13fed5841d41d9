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

/// Linear restriction of weights from `big` to `small`. Each row is a linear
/// functional on the concatenated ambient coordinates of the big group.
struct EmbeddingMap {
  std::string name;
  std::string description;
  GroupSpec big;
  GroupSpec small;
  std::vector<std::vector<Coord>> factor_rows;  // [small factor][ambient coordinate]
  std::vector<Coord> charge_rows;               // one per small circle factor

  Weight restrict_weight(const Weight& w) const;
};

const std::vector<EmbeddingMap>& embedding_catalog();
/// Looks up a catalog entry; aliases such as "so3so2_in_so5" are accepted.
/// Throws InputError for unknown names.
const EmbeddingMap& embedding(std::string_view name);

struct BranchResult {
  GroupSpec source_group;
  Weight source;
  BigInt source_dimension;
  FormalCharacter decomposition;
};

/// Default dimension budget for restrict_generic: the value given to
/// set_default_budget, else LIEDUAL_BUDGET when set, else 200000.
std::uint64_t default_budget();
/// Process-wide override; 0 clears it.
void set_default_budget(std::uint64_t budget);

/// Restricts the full weight diagram of V(hw) and peels off small-group
/// irreducibles, highest first (height, then lexicographic). Throws
/// BudgetExceeded when dim V(hw) > budget and NegativeMultiplicity when the
/// remainder stops being a character.
BranchResult restrict_generic(const EmbeddingMap& e, const Weight& hw, std::uint64_t budget = default_budget());

/// Sp(4) level-n minimal type n*omega_4 restricted to Sp(2) x Sp(2).
FormalCharacter branch_sp4_to_sp2sp2(int n);
/// Sp(2) V(x,y) restricted to SU2 x SU2.
FormalCharacter branch_sp2_to_su2su2(int x, int y);
/// SO(5) V(a,b) (B2 coordinates, a >= b >= 0, a - b integral) restricted to
/// SO(3) x SO(2). The SO(3) type of weight c is stored as the A1 label 2c; the
/// circle charge is the SO(2) weight.
FormalCharacter branch_so5_to_so3so2(const Rational& a, const Rational& b);
/// Half-spin n*omega of Spin(10) restricted to Spin(8) x U(1).
FormalCharacter branch_spin10_halfspin_to_spin8u1(int n);
/// Charge-m block of V(n*omega_3) of SU(6) restricted to Sp(2) x SU2 x U(1).
/// Negative m is obtained from -m by negating the charge. Empty for |m| > n.
FormalCharacter branch_su6_omega3_to_sp2su2u1(int n, int m);

struct SignedCharacter {
  FormalCharacter character;
  std::map<Weight, int> signs;
};
/// V(n*omega_3) of SU(6) restricted to Sp(3), with the sign of the outer
/// involution on each constituent V(n,m,m): (-1)^(n-m).
SignedCharacter branch_su6_omega3_to_sp3(int n);

/// Rule identifiers accepted by verify_rule, in report order.
const std::vector<std::string>& rule_ids();
/// Compares a closed-form rule with restrict_generic over the parameter range
/// selected by `level` (4 gives the standard range) and checks dimension
/// conservation of every generic result.
Report verify_rule(std::string_view rule_id, int level = 4, std::uint64_t budget = default_budget());

struct RuleEvaluation {
  std::string embedding;  // catalog entry used by the generic oracle
  GroupSpec source_group;
  Weight source;
  FormalCharacter closed;
  std::optional<FormalCharacter> generic;
  std::map<Weight, int> signs;  // su6_omega3_to_sp3 only
};

/// Evaluates a closed-form rule at `args` (rule-specific: n; x,y; a,b) and,
/// when `with_generic` is set, the restrict_generic oracle on the same source.
/// `charge` selects one U(1) block of su6_omega3 and is rejected elsewhere.
RuleEvaluation evaluate_rule(std::string_view rule_id, const std::vector<Rational>& args,
                             std::optional<std::int64_t> charge, bool with_generic,
                             std::uint64_t budget = default_budget());

/// "V(1,0)xV0 + 2 V(1,1)xV1" style rendering, sorted by weight.
std::string format_character(const FormalCharacter& c);

}  // namespace liedual
