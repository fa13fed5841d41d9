#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "liedual/charalg.hpp"
#include "liedual/report.hpp"

namespace liedual {

/// Rational stand-in for a torus character (nu1, nu2, nu3), nu1+nu2+nu3 = 0.
struct TorusCharacterData {
  std::array<Rational, 3> nu;
  std::string case_label;
};

/// Throws InputError unless the triple sums to zero.
TorusCharacterData make_torus_data(Rational a, Rational b, Rational c, std::string case_label = {});

/// D4 infinitesimal character of the lift: dominant form of
/// (a+2, -a+2, b+c, c-b)/2. The sign of the last entry is the one compatible
/// with the T' charges of the Spin(8) x U(1) decomposition; the other sign
/// is its image under the outer automorphism e4 -> -e4.
InfChar infchar_lift(const TorusCharacterData& nu);
/// beta + (a/2) alpha1 + (b/2) alpha2 + (c/2) alpha3 with beta = (1,1,0,0),
/// alpha1 = e1-e2, alpha2 = e3-e4, alpha3 = e3+e4, made dominant.
InfChar infchar_symmetric_form(const TorusCharacterData& nu);

/// T' charge triple attached to the Spin(8) x U(1) type (n/2,n/2,n/2,b/2).
std::array<Rational, 3> tprime_triple(int n, int b);
/// For 0 <= n <= N and |b| <= n, b = n mod 2: the lift of the T' triple
/// equals the infinitesimal character of V(n/2,n/2,n/2,b/2).
Report lemma_infchar_consistency(int N);

/// lemma_infchar_consistency(max_n), agreement of infchar_lift with
/// infchar_symmetric_form on `random_triples` random rational sum-zero triples
/// (fixed seed), and the lift of (0,0,0) being (1,1,0,0).
Report verify_infchar(int max_n = 10, int random_triples = 1000, std::uint32_t seed = 1729);

/// SO(3)-invariants in V_a x V_b x V_c x V_d.
std::int64_t ps_multiplicity_split(int a, int b, int c, int d);
/// Degenerate principal series count in the quasi-split case: number of t
/// with x+y-m >= 2t >= x-y-m and z >= 2t+2+m, gated by z > x-y >= m and
/// z = x-y = m mod 2. Negative m is replaced by -m.
std::int64_t ps_multiplicity_quasisplit(int x, int y, int z, int m);

struct QuasisplitMultiplicity {
  std::int64_t value = 0;       // observed multiplicity at level n
  std::int64_t stabilized = 0;  // closed-form limit count
  int predicted_onset = 0;      // first level from which the count is the limit
};

/// Predicted level-n count from the closed forms: number of t >= 0 with
/// l = n-m-2t >= 0, x+y = z = m mod 2, 2n-2t-2m >= x+y-m >= 2t >= x-y-m >= 0
/// and m+2t+2 <= z <= 2n-m-2t+2.
std::int64_t quasisplit_level_count(int x, int y, int z, int m, int n);
/// Limit of quasisplit_level_count as n grows.
std::int64_t quasisplit_stabilized_count(int x, int y, int z, int m);

/// Multiplicity of V(x,y) x V(z) at charge m in level n of the hermitian
/// model, plus its predicted limit and onset.
QuasisplitMultiplicity minrep_multiplicity_quasisplit(int x, int y, int z, int m, int n);

/// For all x >= y >= 0, z >= 0 with x+y+z <= max_sum and 0 <= m <= max_m:
/// ps count = limit count = observed value at level N, observed onset =
/// predicted onset, observed series non-decreasing.
Report compare_ps_vs_stabilized(int max_sum = 12, int max_m = 4, int N = 12);

enum class TableKind { Split, Quasisplit };
TableKind parse_table_kind(std::string_view name);
std::string table_name(TableKind k);

struct TableRow {
  int row = 0;
  Weight weight;
  std::int64_t dimension = 0;
  std::string annotation;
};

struct TableFixture {
  TableKind kind = TableKind::Split;
  GroupSpec group;
  std::vector<TableRow> rows;  // one entry per listed weight, file order
};

std::filesystem::path fixture_path(const std::filesystem::path& dir, TableKind k);
/// Parses `row_id<TAB>weight_csv<TAB>dimension[<TAB>annotation]`; blank lines,
/// '#' comments and a leading header row are skipped. Throws FixtureError.
TableFixture load_table(const std::filesystem::path& file, TableKind k);
/// One check per table row: every listed weight has the listed dimension.
Report verify_table(const TableFixture& t);

}  // namespace liedual
