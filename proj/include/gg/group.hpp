#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "gg/bitset.hpp"
#include "gg/errors.hpp"

namespace gg {

/// Element index inside a CayleyGroup.
using Elem = int;

/// Construction-time validation knobs.
struct ValidateOptions {
  int order_cap = 20000;
  bool paranoid = false;  // run the O(n^3) associativity check even above the threshold
};

/// The full associativity check always runs up to this order.
inline constexpr int kAssocCheckThreshold = 512;

/// Hard ceiling imposed by the 16-bit table storage.
inline constexpr int kMaxRepresentableOrder = 65535;

/// A finite group represented by its full multiplication table.
///
/// Elements are indices 0..n-1. The table is validated at construction:
/// rows/columns must be permutations, a two-sided identity and two-sided
/// inverses must exist, and associativity is verified exhaustively for
/// n <= 512 (or always with ValidateOptions::paranoid).
///
/// The commutator convention throughout this library is
/// [x,y] = x^-1 y^-1 x y.
///
/// Instances are immutable after construction and safe to share across
/// threads read-only.
class CayleyGroup {
public:
  CayleyGroup(std::string name, int order, std::vector<std::uint16_t> table,
              std::vector<std::string> labels, std::map<std::string, Elem> generators,
              const ValidateOptions& opts = {});

  int order() const { return n_; }
  Elem identity() const { return identity_; }

  Elem mul(Elem x, Elem y) const { return table_[std::size_t(x) * std::size_t(n_) + std::size_t(y)]; }
  Elem inv(Elem x) const { return inv_[std::size_t(x)]; }

  /// g x g^-1
  Elem conj(Elem g, Elem x) const { return mul(mul(g, x), inv(g)); }
  /// [x,y] = x^-1 y^-1 x y
  Elem comm(Elem x, Elem y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }

  Elem pow(Elem x, long long k) const;

  int elem_order(Elem x) const { return orders_[std::size_t(x)]; }
  const std::vector<int>& element_orders() const { return orders_; }

  const std::string& label(Elem x) const { return labels_[std::size_t(x)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Elem> elem_by_label(const std::string& label) const;

  const std::string& name() const { return name_; }

  /// Canonical generators recorded by the family constructors (e.g. "a", "b").
  std::optional<Elem> generator(const std::string& tag) const;
  const std::map<std::string, Elem>& generators() const { return generators_; }

private:
  std::string name_;
  int n_ = 0;
  std::vector<std::uint16_t> table_;
  std::vector<std::uint16_t> inv_;
  Elem identity_ = 0;
  std::vector<std::string> labels_;
  std::vector<int> orders_;
  std::map<std::string, Elem> generators_;
};

/// A subgroup given as a membership set inside a parent group.
/// The checked constructor verifies that the set contains the identity and
/// is closed under multiplication; Lagrange divisibility is asserted.
class Subgroup {
public:
  Subgroup(const CayleyGroup& parent, DynBitset members);

  /// Caller guarantees the set is a subgroup (used by closure-style builders).
  static Subgroup unchecked(const CayleyGroup& parent, DynBitset members);

  static Subgroup whole(const CayleyGroup& g);
  static Subgroup trivial(const CayleyGroup& g);

  const CayleyGroup& parent() const { return *parent_; }
  int size() const { return int(elements_.size()); }
  bool contains(Elem x) const { return members_.test(std::size_t(x)); }
  const DynBitset& members() const { return members_; }
  /// Member indices in ascending order.
  const std::vector<Elem>& elements() const { return elements_; }

  bool operator==(const Subgroup& o) const { return parent_ == o.parent_ && members_ == o.members_; }

private:
  struct UncheckedTag {};
  Subgroup(const CayleyGroup& parent, DynBitset members, UncheckedTag);

  const CayleyGroup* parent_;
  DynBitset members_;
  std::vector<Elem> elements_;
};

// ---- structural primitives ----

int elem_order(const CayleyGroup& g, Elem x);

Subgroup cyclic_subgroup(const CayleyGroup& g, Elem x);

/// Least subgroup containing the seed set; the empty seed yields the trivial subgroup.
Subgroup closure(const CayleyGroup& g, std::span<const Elem> seed);
Subgroup closure(const CayleyGroup& g, std::initializer_list<Elem> seed);
Subgroup closure(const CayleyGroup& g, const DynBitset& seed);

/// { g : g S g^-1 = S }; always contains S.
Subgroup normaliser(const CayleyGroup& g, const Subgroup& s);

/// Elements of S commuting with every element of S.
Subgroup center(const CayleyGroup& g, const Subgroup& s);

/// Closure of all commutators [x,y], x,y in S.
Subgroup derived_subgroup(const CayleyGroup& g, const Subgroup& s);

Elem commutator(const CayleyGroup& g, Elem x, Elem y);
/// [x, 1 y] = [x,y]; [x, k y] = [[x, k-1 y], y].
Elem iterated_commutator(const CayleyGroup& g, Elem x, Elem y, int k);

/// Lower central series reaches the trivial subgroup.
bool is_nilpotent(const CayleyGroup& g, const Subgroup& s);
bool is_nilpotent(const CayleyGroup& g);

/// Subgroup of order the exact p-part of |G| (trivial if p does not divide |G|).
/// Greedy normaliser extension: grow a p-subgroup P by adjoining p-power-order
/// elements of N(P) while the closure stays a p-group.
Subgroup sylow_subgroup(const CayleyGroup& g, int p);

Subgroup normal_closure(const CayleyGroup& g, Elem x);

// ---- predicates ----

bool is_abelian(const Subgroup& s);
bool is_abelian(const CayleyGroup& g);
bool is_p_group(const Subgroup& s);
bool is_p_group(const CayleyGroup& g);
/// |S| = p^k with k >= 0; the prime for nontrivial p-groups, nullopt otherwise.
std::optional<int> p_group_prime(const Subgroup& s);
std::optional<int> p_group_prime(const CayleyGroup& g);
long long exponent(const Subgroup& s);
long long exponent(const CayleyGroup& g);
bool is_cyclic(const Subgroup& s);
bool is_cyclic(const CayleyGroup& g);
/// Every cyclic subgroup <x>, x in S, is normal in S.
bool is_dedekind(const Subgroup& s);
bool is_dedekind(const CayleyGroup& g);
/// Every element has prime-power order.
bool is_eppo(const CayleyGroup& g);
/// |G| > 1 and no non-identity element has normal closure smaller than G.
bool is_simple(const CayleyGroup& g);
/// Some pair (possibly equal) generates G.
bool is_2_generated(const CayleyGroup& g);
bool has_cyclic_sylows(const CayleyGroup& g);

// ---- subgroup materialization ----

struct Materialized {
  CayleyGroup group;
  std::vector<Elem> to_parent;  // new index -> parent index
};

/// Standalone CayleyGroup on the re-indexed members of S (identity first,
/// then ascending parent order), with the index map back to the parent.
Materialized materialize(const Subgroup& s);

// ---- number-theory helpers ----

bool is_prime(long long p);
std::vector<int> prime_factors(long long n);
/// n = p^k for some k >= 1; reports p.
bool is_prime_power(long long n, int* prime_out = nullptr);
long long ipow(long long base, int exp);

// ---- per-element cyclic subgroup table ----

/// Precomputed <x> membership for every element, with deduplicated subgroup
/// ids. Powers the O(1) adjacency predicates of the power, symmetric
/// normaliser and directed normalising graphs.
class CyclicTable {
public:
  explicit CyclicTable(const CayleyGroup& g);

  const CayleyGroup& group() const { return *g_; }
  int subgroup_id(Elem x) const { return id_[std::size_t(x)]; }
  int distinct_count() const { return int(subs_.size()); }
  const DynBitset& cyc(Elem x) const { return subs_[std::size_t(id_[std::size_t(x)])]; }

  /// member in <generator>
  bool contains(Elem member, Elem generator) const { return cyc(generator).test(std::size_t(member)); }

  /// x in <y> or y in <x>
  bool pow_adjacent(Elem x, Elem y) const { return contains(x, y) || contains(y, x); }

  /// y in N(<x>), i.e. y x y^-1 in <x>
  bool normalises(Elem y, Elem x) const { return contains(g_->conj(y, x), x); }

  /// x in N(<y>) and y in N(<x>)
  bool snorm_adjacent(Elem x, Elem y) const { return normalises(x, y) && normalises(y, x); }

private:
  const CayleyGroup* g_;
  std::vector<int> id_;
  std::vector<DynBitset> subs_;
};

/// Memoises <x,y> on the unordered pair of cyclic-subgroup ids
/// (<x,y> depends only on <x> and <y>). Not thread-safe; use one per worker.
class JoinCache {
public:
  JoinCache(const CayleyGroup& g, const CyclicTable& ct) : g_(&g), ct_(&ct) {}

  const Subgroup& join(Elem x, Elem y);

private:
  const CayleyGroup* g_;
  const CyclicTable* ct_;
  std::map<std::pair<int, int>, Subgroup> cache_;
};

}  // namespace gg
