#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gg/group.hpp"

namespace gg {

/// Parameters of the two-generator p-group with b^(p^beta) = [a,b]^p = 1,
/// [a,b] central and a^(p^alpha) = [a,b].
struct SnncParams {
  int p;
  int alpha;
  int beta;
};

/// A parsed group constructor expression: a named family with integer
/// arguments, a direct product of two specs, or an external file reference.
struct GroupSpec {
  enum class Kind { Family, Product, File };

  Kind kind = Kind::Family;
  std::string family;           // canonical family name, Kind::Family
  std::vector<long long> args;  // family arguments
  std::shared_ptr<GroupSpec> left, right;  // Kind::Product
  std::string path;             // Kind::File

  /// Canonical display text, e.g. "x(Q8,C3)".
  std::string text() const;
};

/// Spec grammar: FAMILY "(" args ")" | FAMILY digits | "x(" spec "," spec ")"
/// | "file:" path. Family names: C, D, Q, S, A, EA, Heis, SL, SNNC.
/// D(n) is the dihedral group of ORDER 2n; Q(k) takes the group order k = 2^m.
GroupSpec parse_spec(const std::string& text);

/// Check each family's argument domain; throws BadParameter.
void validate_args(const GroupSpec& spec);

/// Build a validated group from a full multiplication table. The identity and
/// inverse table are derived from the table itself.
CayleyGroup from_cayley_table(int order, const std::vector<std::vector<int>>& table,
                              const std::vector<std::string>& labels = {},
                              const std::string& name = "table", const ValidateOptions& opts = {});

/// Closure of permutation generators given in disjoint-cycle notation
/// ("(1 2)(3 4)"; points are 1-based; "()" or "" is the identity).
/// Elements are indexed in BFS discovery order with the identity at index 0.
CayleyGroup from_permutations(int degree, const std::vector<std::string>& generator_cycles,
                              const std::string& name = "", const ValidateOptions& opts = {});

CayleyGroup make_snnc(const SnncParams& params, const ValidateOptions& opts = {});

/// Materialise a GroupSpec (families, direct products, file references).
CayleyGroup make_family(const GroupSpec& spec, const ValidateOptions& opts = {});
CayleyGroup make_family(const std::string& spec_text, const ValidateOptions& opts = {});

/// Load a group from a JSON file: either the Cayley-table schema
/// {"name","order","table","labels"?} or the permutation schema
/// {"name","degree","generators"}.
CayleyGroup load_group_file(const std::string& path, const ValidateOptions& opts = {});

// Individual families (orders: n, 2n, 2^m, n!, n!/2, p^k, p^3, p(p-1)(p+1), |A|*|B|).
CayleyGroup make_cyclic(int n, const ValidateOptions& opts = {});
CayleyGroup make_dihedral(int n, const ValidateOptions& opts = {});
CayleyGroup make_generalized_quaternion(int m, const ValidateOptions& opts = {});
CayleyGroup make_symmetric(int n, const ValidateOptions& opts = {});
CayleyGroup make_alternating(int n, const ValidateOptions& opts = {});
CayleyGroup make_elementary_abelian(int p, int k, const ValidateOptions& opts = {});
CayleyGroup make_heisenberg(int p, const ValidateOptions& opts = {});
CayleyGroup make_special_linear2(int p, const ValidateOptions& opts = {});
CayleyGroup make_direct_product(const CayleyGroup& a, const CayleyGroup& b,
                                const ValidateOptions& opts = {});

// Cycle-notation helpers (shared with the CLI and tests).
std::vector<int> parse_cycle_string(const std::string& text, int degree);
std::string cycle_notation(const std::vector<int>& perm);

}  // namespace gg
