// Core group machinery: table validation, subgroup operations, Sylow
// subgroups, structural predicates and the cyclic-subgroup table.

#include "gg/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gg {

namespace {

std::string triple_str(Elem x, Elem y, Elem z) {
  std::ostringstream os;
  os << "(" << x << "," << y << "," << z << ")";
  return os.str();
}

}  // namespace

CayleyGroup::CayleyGroup(std::string name, int order, std::vector<std::uint16_t> table,
                         std::vector<std::string> labels, std::map<std::string, Elem> generators,
                         const ValidateOptions& opts)
    : name_(std::move(name)), n_(order), table_(std::move(table)), labels_(std::move(labels)),
      generators_(std::move(generators)) {
  if (n_ <= 0) throw BadShape("group order must be positive, got " + std::to_string(n_));
  if (n_ > opts.order_cap)
    throw OrderLimitExceeded("order " + std::to_string(n_) + " exceeds cap " +
                             std::to_string(opts.order_cap));
  if (n_ > kMaxRepresentableOrder)
    throw OrderLimitExceeded("order " + std::to_string(n_) + " exceeds representable maximum " +
                             std::to_string(kMaxRepresentableOrder));
  const std::size_t n = std::size_t(n_);
  if (table_.size() != n * n)
    throw BadShape("multiplication table has " + std::to_string(table_.size()) +
                   " entries, expected " + std::to_string(n * n));
  for (std::size_t i = 0; i < table_.size(); ++i)
    if (table_[i] >= n)
      throw BadShape("table entry " + std::to_string(table_[i]) + " out of range at flat index " +
                     std::to_string(i));

  // Latin-square property: every row and column is a permutation.
  std::vector<char> seen(n);
  for (std::size_t r = 0; r < n; ++r) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t c = 0; c < n; ++c) {
      const std::uint16_t v = table_[r * n + c];
      if (seen[v])
        throw NotAGroup("row " + std::to_string(r) + " is not a permutation (value " +
                        std::to_string(v) + " repeats)");
      seen[v] = 1;
    }
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t r = 0; r < n; ++r) {
      const std::uint16_t v = table_[r * n + c];
      if (seen[v])
        throw NotAGroup("column " + std::to_string(c) + " is not a permutation (value " +
                        std::to_string(v) + " repeats)");
      seen[v] = 1;
    }
  }

  // Two-sided identity.
  identity_ = -1;
  for (std::size_t e = 0; e < n; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x)
      ok = table_[e * n + x] == x && table_[x * n + e] == x;
    if (ok) {
      identity_ = Elem(e);
      break;
    }
  }
  if (identity_ < 0) throw NotAGroup("no two-sided identity element");

  if (n_ <= kAssocCheckThreshold || opts.paranoid) {
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t y = 0; y < n; ++y) {
        const std::size_t xy = table_[x * n + y];
        for (std::size_t z = 0; z < n; ++z)
          if (table_[xy * n + z] != table_[x * n + table_[y * n + z]])
            throw NotAGroup("associativity fails at " + triple_str(Elem(x), Elem(y), Elem(z)) +
                            ": (x*y)*z != x*(y*z)");
      }
  }

  inv_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    int found = -1;
    for (std::size_t y = 0; y < n; ++y)
      if (table_[x * n + y] == std::size_t(identity_) && table_[y * n + x] == std::size_t(identity_)) {
        found = int(y);
        break;
      }
    if (found < 0)
      throw NotAGroup("no two-sided inverse for element " + std::to_string(x));
    inv_[x] = std::uint16_t(found);
  }

  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels_.push_back("x" + std::to_string(i));
  }
  if (labels_.size() != n)
    throw BadShape("label list has " + std::to_string(labels_.size()) + " entries, expected " +
                   std::to_string(n));

  orders_.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    int ord = 1;
    Elem cur = Elem(x);
    while (cur != identity_) {
      cur = mul(cur, Elem(x));
      ++ord;
    }
    orders_[x] = ord;
  }
}

Elem CayleyGroup::pow(Elem x, long long k) const {
  const int ord = elem_order(x);
  long long r = k % ord;
  if (r < 0) r += ord;
  Elem acc = identity_;
  Elem base = x;
  while (r > 0) {
    if (r & 1) acc = mul(acc, base);
    base = mul(base, base);
    r >>= 1;
  }
  return acc;
}

std::optional<Elem> CayleyGroup::elem_by_label(const std::string& label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return Elem(i);
  return std::nullopt;
}

std::optional<Elem> CayleyGroup::generator(const std::string& tag) const {
  auto it = generators_.find(tag);
  if (it == generators_.end()) return std::nullopt;
  return it->second;
}

// ---- Subgroup ----

Subgroup::Subgroup(const CayleyGroup& parent, DynBitset members, UncheckedTag)
    : parent_(&parent), members_(std::move(members)) {
  elements_.reserve(members_.count());
  members_.for_each([&](std::size_t i) { elements_.push_back(Elem(i)); });
}

Subgroup::Subgroup(const CayleyGroup& parent, DynBitset members)
    : Subgroup(parent, std::move(members), UncheckedTag{}) {
  if (members_.size() != std::size_t(parent.order()))
    throw DimensionMismatch("member set capacity does not match group order");
  if (!members_.test(std::size_t(parent.identity())))
    throw Error("subgroup must contain the identity");
  for (Elem x : elements_)
    for (Elem y : elements_)
      if (!members_.test(std::size_t(parent.mul(x, y))))
        throw Error("member set not closed under multiplication: " + std::to_string(x) + "*" +
                    std::to_string(y));
  if (parent.order() % size() != 0)
    throw Error("subgroup size " + std::to_string(size()) + " does not divide group order");
}

Subgroup Subgroup::unchecked(const CayleyGroup& parent, DynBitset members) {
  return Subgroup(parent, std::move(members), UncheckedTag{});
}

Subgroup Subgroup::whole(const CayleyGroup& g) {
  DynBitset b(std::size_t(g.order()));
  for (int i = 0; i < g.order(); ++i) b.set(std::size_t(i));
  return unchecked(g, std::move(b));
}

Subgroup Subgroup::trivial(const CayleyGroup& g) {
  DynBitset b(std::size_t(g.order()));
  b.set(std::size_t(g.identity()));
  return unchecked(g, std::move(b));
}

// ---- primitives ----

int elem_order(const CayleyGroup& g, Elem x) { return g.elem_order(x); }

Subgroup cyclic_subgroup(const CayleyGroup& g, Elem x) {
  DynBitset b(std::size_t(g.order()));
  Elem cur = g.identity();
  b.set(std::size_t(cur));
  while (true) {
    cur = g.mul(cur, x);
    if (cur == g.identity()) break;
    b.set(std::size_t(cur));
  }
  return Subgroup::unchecked(g, std::move(b));
}

Subgroup closure(const CayleyGroup& g, std::span<const Elem> seed) {
  const std::size_t n = std::size_t(g.order());
  DynBitset in(n);
  std::vector<Elem> mem;
  auto add = [&](Elem x) {
    if (!in.test(std::size_t(x))) {
      in.set(std::size_t(x));
      mem.push_back(x);
    }
  };
  add(g.identity());
  for (Elem s : seed) {
    if (s < 0 || s >= g.order()) throw Error("closure seed index out of range");
    add(s);
  }
  // Growing double loop; every ordered pair is covered once the outer index
  // reaches the later of the two elements.
  for (std::size_t i = 0; i < mem.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      add(g.mul(mem[i], mem[j]));
      add(g.mul(mem[j], mem[i]));
    }
  return Subgroup::unchecked(g, std::move(in));
}

Subgroup closure(const CayleyGroup& g, std::initializer_list<Elem> seed) {
  return closure(g, std::span<const Elem>(seed.begin(), seed.size()));
}

Subgroup closure(const CayleyGroup& g, const DynBitset& seed) {
  std::vector<Elem> seeds;
  seed.for_each([&](std::size_t i) { seeds.push_back(Elem(i)); });
  return closure(g, std::span<const Elem>(seeds));
}

Subgroup normaliser(const CayleyGroup& g, const Subgroup& s) {
  DynBitset b(std::size_t(g.order()));
  for (int cand = 0; cand < g.order(); ++cand) {
    bool ok = true;
    for (Elem x : s.elements())
      if (!s.contains(g.conj(cand, x))) {
        ok = false;
        break;
      }
    if (ok) b.set(std::size_t(cand));
  }
  return Subgroup::unchecked(g, std::move(b));
}

Subgroup center(const CayleyGroup& g, const Subgroup& s) {
  DynBitset b(std::size_t(g.order()));
  for (Elem x : s.elements()) {
    bool ok = true;
    for (Elem y : s.elements())
      if (g.mul(x, y) != g.mul(y, x)) {
        ok = false;
        break;
      }
    if (ok) b.set(std::size_t(x));
  }
  return Subgroup::unchecked(g, std::move(b));
}

Subgroup derived_subgroup(const CayleyGroup& g, const Subgroup& s) {
  DynBitset seeds(std::size_t(g.order()));
  for (Elem x : s.elements())
    for (Elem y : s.elements()) seeds.set(std::size_t(g.comm(x, y)));
  return closure(g, seeds);
}

Elem commutator(const CayleyGroup& g, Elem x, Elem y) { return g.comm(x, y); }

Elem iterated_commutator(const CayleyGroup& g, Elem x, Elem y, int k) {
  if (k < 1) throw Error("iterated commutator needs k >= 1");
  Elem c = g.comm(x, y);
  for (int i = 1; i < k; ++i) c = g.comm(c, y);
  return c;
}

bool is_nilpotent(const CayleyGroup& g, const Subgroup& s) {
  Subgroup cur = s;
  while (true) {
    DynBitset seeds(std::size_t(g.order()));
    for (Elem x : cur.elements())
      for (Elem y : s.elements()) seeds.set(std::size_t(g.comm(x, y)));
    Subgroup next = closure(g, seeds);
    if (next.size() == cur.size()) return cur.size() == 1;
    cur = std::move(next);
  }
}

bool is_nilpotent(const CayleyGroup& g) { return is_nilpotent(g, Subgroup::whole(g)); }

namespace {

bool order_is_power_of(int ord, int p) {
  while (ord % p == 0) ord /= p;
  return ord == 1;
}

}  // namespace

Subgroup sylow_subgroup(const CayleyGroup& g, int p) {
  if (!is_prime(p)) throw BadParameter("sylow_subgroup: " + std::to_string(p) + " is not prime");
  long long rest = g.order();
  long long ppart = 1;
  while (rest % p == 0) {
    ppart *= p;
    rest /= p;
  }
  if (ppart == 1) return Subgroup::trivial(g);

  Elem best = g.identity();
  int best_ord = 1;
  for (int x = 0; x < g.order(); ++x) {
    const int ord = g.elem_order(x);
    if (order_is_power_of(ord, p) && ord > best_ord) {
      best = x;
      best_ord = ord;
    }
  }
  Subgroup P = cyclic_subgroup(g, best);
  while (P.size() < ppart) {
    const Subgroup N = normaliser(g, P);
    bool grown = false;
    for (Elem cand : N.elements()) {
      if (P.contains(cand)) continue;
      if (!order_is_power_of(g.elem_order(cand), p)) continue;
      std::vector<Elem> seeds = P.elements();
      seeds.push_back(cand);
      Subgroup T = closure(g, std::span<const Elem>(seeds));
      if (order_is_power_of(T.size(), p)) {
        P = std::move(T);
        grown = true;
        break;
      }
    }
    if (!grown) throw Error("sylow_subgroup: extension step failed (internal)");
  }
  return P;
}

Subgroup normal_closure(const CayleyGroup& g, Elem x) {
  DynBitset seeds(std::size_t(g.order()));
  for (int c = 0; c < g.order(); ++c) seeds.set(std::size_t(g.conj(c, x)));
  return closure(g, seeds);
}

// ---- predicates ----

bool is_abelian(const Subgroup& s) {
  const CayleyGroup& g = s.parent();
  const auto& el = s.elements();
  for (std::size_t i = 0; i < el.size(); ++i)
    for (std::size_t j = i + 1; j < el.size(); ++j)
      if (g.mul(el[i], el[j]) != g.mul(el[j], el[i])) return false;
  return true;
}

bool is_abelian(const CayleyGroup& g) { return is_abelian(Subgroup::whole(g)); }

std::optional<int> p_group_prime(const Subgroup& s) {
  long long n = s.size();
  if (n == 1) return std::nullopt;
  int p = 0;
  if (!is_prime_power(n, &p)) return std::nullopt;
  return p;
}

std::optional<int> p_group_prime(const CayleyGroup& g) { return p_group_prime(Subgroup::whole(g)); }

bool is_p_group(const Subgroup& s) { return s.size() == 1 || p_group_prime(s).has_value(); }

bool is_p_group(const CayleyGroup& g) { return is_p_group(Subgroup::whole(g)); }

long long exponent(const Subgroup& s) {
  long long e = 1;
  for (Elem x : s.elements()) e = std::lcm(e, (long long)s.parent().elem_order(x));
  return e;
}

long long exponent(const CayleyGroup& g) { return exponent(Subgroup::whole(g)); }

bool is_cyclic(const Subgroup& s) {
  for (Elem x : s.elements())
    if (s.parent().elem_order(x) == s.size()) return true;
  return false;
}

bool is_cyclic(const CayleyGroup& g) { return is_cyclic(Subgroup::whole(g)); }

bool is_dedekind(const Subgroup& s) {
  const CayleyGroup& g = s.parent();
  for (Elem x : s.elements()) {
    const Subgroup cx = cyclic_subgroup(g, x);
    for (Elem c : s.elements())
      if (!cx.contains(g.conj(c, x))) return false;
  }
  return true;
}

bool is_dedekind(const CayleyGroup& g) { return is_dedekind(Subgroup::whole(g)); }

bool is_eppo(const CayleyGroup& g) {
  for (int x = 0; x < g.order(); ++x) {
    const int ord = g.elem_order(x);
    if (ord > 1 && !is_prime_power(ord)) return false;
  }
  return true;
}

bool is_simple(const CayleyGroup& g) {
  if (g.order() == 1) return false;
  // conjugate elements have the same normal closure, so test one
  // representative per conjugacy class
  std::vector<char> seen(std::size_t(g.order()), 0);
  seen[std::size_t(g.identity())] = 1;
  for (int x = 0; x < g.order(); ++x) {
    if (seen[std::size_t(x)]) continue;
    for (int c = 0; c < g.order(); ++c) seen[std::size_t(g.conj(c, x))] = 1;
    if (normal_closure(g, x).size() != g.order()) return false;
  }
  return true;
}

bool is_2_generated(const CayleyGroup& g) {
  for (int x = 0; x < g.order(); ++x)
    if (g.elem_order(x) == g.order()) return true;
  if (g.order() == 1) return true;
  CyclicTable ct(g);
  JoinCache jc(g, ct);
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (jc.join(x, y).size() == g.order()) return true;
  return false;
}

bool has_cyclic_sylows(const CayleyGroup& g) {
  for (int p : prime_factors(g.order()))
    if (!is_cyclic(sylow_subgroup(g, p))) return false;
  return true;
}

// ---- materialization ----

Materialized materialize(const Subgroup& s) {
  const CayleyGroup& g = s.parent();
  std::vector<Elem> to_parent;
  to_parent.reserve(std::size_t(s.size()));
  to_parent.push_back(g.identity());
  for (Elem x : s.elements())
    if (x != g.identity()) to_parent.push_back(x);

  std::vector<int> to_local(std::size_t(g.order()), -1);
  for (std::size_t i = 0; i < to_parent.size(); ++i) to_local[std::size_t(to_parent[i])] = int(i);

  const std::size_t m = to_parent.size();
  std::vector<std::uint16_t> table(m * m);
  std::vector<std::string> labels;
  labels.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(g.label(to_parent[i]));
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] = std::uint16_t(to_local[std::size_t(g.mul(to_parent[i], to_parent[j]))]);
  }
  ValidateOptions opts;
  opts.order_cap = std::max(int(m), 1);
  CayleyGroup sub(g.name() + ".sub" + std::to_string(m), int(m), std::move(table),
                  std::move(labels), {}, opts);
  return Materialized{std::move(sub), std::move(to_parent)};
}

// ---- number theory ----

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::vector<int> prime_factors(long long n) {
  std::vector<int> out;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(int(d));
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(int(n));
  return out;
}

bool is_prime_power(long long n, int* prime_out) {
  if (n < 2) return false;
  long long d = 2;
  while (d * d <= n && n % d != 0) ++d;
  const long long p = (d * d <= n) ? d : n;
  while (n % p == 0) n /= p;
  if (n != 1) return false;
  if (prime_out) *prime_out = int(p);
  return true;
}

long long ipow(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

// ---- CyclicTable / JoinCache ----

CyclicTable::CyclicTable(const CayleyGroup& g) : g_(&g) {
  const std::size_t n = std::size_t(g.order());
  id_.assign(n, -1);
  std::map<std::vector<std::uint64_t>, int> ids;
  for (std::size_t x = 0; x < n; ++x) {
    DynBitset b(n);
    Elem cur = g.identity();
    b.set(std::size_t(cur));
    while (true) {
      cur = g.mul(cur, Elem(x));
      if (cur == g.identity()) break;
      b.set(std::size_t(cur));
    }
    auto [it, inserted] = ids.try_emplace(b.words(), int(subs_.size()));
    if (inserted) subs_.push_back(std::move(b));
    id_[x] = it->second;
  }
}

const Subgroup& JoinCache::join(Elem x, Elem y) {
  int a = ct_->subgroup_id(x);
  int b = ct_->subgroup_id(y);
  if (a > b) std::swap(a, b);
  const auto key = std::make_pair(a, b);
  auto it = cache_.find(key);
  if (it != cache_.end()) return it->second;
  DynBitset seed = ct_->cyc(x);
  seed.unite_with(ct_->cyc(y));
  return cache_.emplace(key, closure(*g_, seed)).first->second;
}

}  // namespace gg
