#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gg/families.hpp"
#include "gg/graphs.hpp"
#include "gg/group.hpp"

#include "json.hpp"

namespace gg {

inline constexpr const char* kSuiteVersion = "1.0";
inline constexpr const char* kCommutatorConvention = "[x,y] = x^-1 y^-1 x y";

/// Parameter tuple of a two-generator p-group with central derived subgroup
/// of order p, together with the matching case tag from the classification
/// list (A1a..A2b for odd p, B1a..B3b for p = 2).
struct TypeBParams {
  int p;
  int alpha, beta, rho, sigma;
  std::string case_tag;
};

enum class WitnessKind { SnormNotCom, GeneratingAdjacent };

/// A pair of non-commuting elements that each normalise the other's cyclic
/// subgroup; for GeneratingAdjacent the pair additionally generates the group.
struct WitnessPair {
  Elem x, y;
  WitnessKind kind = WitnessKind::SnormNotCom;
};

/// Structural facts about H = <x,y> for a witness pair. The commutation and
/// power-identity facts hold for every witness pair and are enforced; the
/// remaining fields are recorded observations.
struct WitnessFacts {
  long long subgroup_order = 0;
  long long derived_order = 0;
  bool derived_in_center = false;
  bool p_group = false;
  bool commutator_commutes = false;
  bool power_identities = false;
};

struct CheckResult {
  std::string group;
  std::string check_id;
  std::string lhs_description;
  std::string rhs_description;
  bool pass = false;
  nlohmann::json witness;  // null when there is nothing to show
  double ms = 0.0;
  std::optional<std::string> error;
};

struct VerificationReport {
  std::vector<CheckResult> results;

  bool all_pass() const;
  bool any_error() const;
  /// {"suite_version","commutator_convention","results":[...],"pass"}.
  /// Timings are emitted as 0 unless with_timings is set, keeping the
  /// serialized report byte-identical across runs and thread counts.
  nlohmann::json to_json(bool with_timings = false) const;
};

// ---- witness machinery ----

/// All unordered pairs satisfying: xy != yx, x in N(<y>), y in N(<x>).
std::vector<WitnessPair> snorm_witness_pairs(const CayleyGroup& g);

/// Throws NotAWitness when the pair does not satisfy the witness property.
WitnessFacts verify_witness_subgroup(const CayleyGroup& g, const WitnessPair& w);

/// Non-abelian p-group that is generated by some pair and has derived
/// subgroup of order p.
bool is_type_b(const CayleyGroup& p_group);

/// Q8, or a group with a generating pair (a,b) satisfying b^(p^beta) =
/// [a,b]^p = [a,b,a] = [a,b,b] = 1 and a^(p^alpha) = [a,b] under the
/// parameter constraints alpha >= beta >= 1 (alpha > 1 when p = 2 and
/// alpha = beta). Throws NotAPGroup for non-p-groups.
bool is_snnc(const CayleyGroup& p_group);

/// A pair that generates P and is adjacent in the symmetric normaliser graph
/// of P (normalisers computed inside P).
std::optional<WitnessPair> find_generating_adjacent_pair(const CayleyGroup& p_group);

/// Search over 2-generated subgroups (sufficient: every SNNC group is
/// 2-generated).
std::optional<Subgroup> has_snnc_subgroup(const CayleyGroup& g);

/// The unique matching parameter tuple for type-B groups, nullopt otherwise.
/// A second matching tuple is a hard failure. Throws NotAPGroup.
std::optional<TypeBParams> classify_type_b(const CayleyGroup& p_group);

// ---- theorem checks ----
// Each check computes both sides of its equivalence independently and
// reports a witness when the sides disagree (and, where informative, when
// they agree).

CheckResult check_hierarchy(const CayleyGroup& g, const BuildOptions& opts = {});
CheckResult check_theorem2(const CayleyGroup& g, const BuildOptions& opts = {});
CheckResult check_theorem3(const CayleyGroup& g, const BuildOptions& opts = {});
CheckResult check_epow_equality(const CayleyGroup& g, const BuildOptions& opts = {});
CheckResult check_pow_equality(const CayleyGroup& g, const BuildOptions& opts = {});
CheckResult check_dedekind_complete(const CayleyGroup& g, const BuildOptions& opts = {});
/// Only meaningful when G is not 2-generated (NGen is complete there).
CheckResult check_ngen_equality(const CayleyGroup& g, const BuildOptions& opts = {});
CheckResult check_dnorm_consistency(const CayleyGroup& g, const BuildOptions& opts = {});
/// Commutator identities on random triples plus the class-2 power identity
/// exhaustively on small class-<=2 groups.
CheckResult check_identities(const CayleyGroup& g, const BuildOptions& opts = {});

/// Canonical check ids in suite order.
const std::vector<std::string>& all_check_ids();
/// Default order cap for a check id.
int check_cap(const std::string& check_id);
/// Whether the check applies to this group (order cap; 2-generation rule
/// for "ngen").
bool check_applicable(const std::string& check_id, const CayleyGroup& g,
                      std::optional<int> max_order);
CheckResult run_check(const std::string& check_id, const CayleyGroup& g,
                      const BuildOptions& opts = {});

struct SuiteOptions {
  std::vector<std::string> checks{"all"};
  int threads = 1;
  std::optional<int> max_order;
  bool paranoid = false;  // full associativity validation during construction
};

/// One result per group x applicable check; construction failures become
/// per-group "construction" entries and do not abort the suite.
VerificationReport run_suite(const std::vector<GroupSpec>& catalog, const SuiteOptions& opts = {});

}  // namespace gg
