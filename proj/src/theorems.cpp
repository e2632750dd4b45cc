// Both sides of every equivalence in the hierarchy are computed
// independently (pairwise graph builds vs structural subgroup searches) and
// compared, with witnesses reported on disagreement.

#include "gg/theorems.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>

namespace gg {

namespace {

int exact_log(long long value, int p) {
  int k = 0;
  while (value % p == 0) {
    value /= p;
    ++k;
  }
  return value == 1 ? k : -1;
}

nlohmann::json pair_json(const CayleyGroup& g, Elem x, Elem y) {
  return {{"pair", {x, y}}, {"labels", {g.label(x), g.label(y)}}};
}

nlohmann::json subgroup_json(const Subgroup& s) {
  auto members = nlohmann::json::array();
  for (Elem x : s.elements()) members.push_back(s.parent().label(x));
  return {{"order", s.size()}, {"members", std::move(members)}};
}

std::optional<std::pair<int, int>> first_subset_violation(const GroupGraph& a,
                                                          const GroupGraph& b) {
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j)
      if (a.adjacent(i, j) && !b.adjacent(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

std::optional<std::pair<int, int>> first_edge_difference(const GroupGraph& a,
                                                         const GroupGraph& b) {
  for (int i = 0; i < a.size(); ++i)
    for (int j = i + 1; j < a.size(); ++j)
      if (a.adjacent(i, j) != b.adjacent(i, j)) return std::make_pair(i, j);
  return std::nullopt;
}

bool is_snnc_impl(const CayleyGroup& p_group, int p);

std::optional<std::pair<Elem, Elem>> first_snorm_witness(const CayleyGroup& g,
                                                         const CyclicTable& ct) {
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x) && ct.snorm_adjacent(x, y)) return std::make_pair(x, y);
  return std::nullopt;
}

// splitmix64 seeded from the group name; keeps sampled triples reproducible
// across runs and thread counts.
struct Rng {
  std::uint64_t state;

  explicit Rng(const std::string& key) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : key) {
      h ^= c;
      h *= 1099511628211ull;
    }
    state = h ^ 0x9e3779b97f4a7c15ull;
  }

  std::uint64_t next() {
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  Elem elem(int n) { return Elem(next() % std::uint64_t(n)); }
};

}  // namespace

// ---- witness machinery ----

std::vector<WitnessPair> snorm_witness_pairs(const CayleyGroup& g) {
  if (g.order() > kLightGraphCap)
    throw OrderLimitExceeded("snorm_witness_pairs: order " + std::to_string(g.order()) +
                             " exceeds cap " + std::to_string(kLightGraphCap));
  const CyclicTable ct(g);
  std::vector<WitnessPair> out;
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (g.mul(x, y) != g.mul(y, x) && ct.snorm_adjacent(x, y))
        out.push_back(WitnessPair{x, y, WitnessKind::SnormNotCom});
  return out;
}

WitnessFacts verify_witness_subgroup(const CayleyGroup& g, const WitnessPair& w) {
  const Elem x = w.x, y = w.y;
  if (x < 0 || y < 0 || x >= g.order() || y >= g.order())
    throw NotAWitness("witness indices out of range");
  if (g.mul(x, y) == g.mul(y, x)) throw NotAWitness("elements commute");
  const Subgroup cx = cyclic_subgroup(g, x);
  const Subgroup cy = cyclic_subgroup(g, y);
  if (!cy.contains(g.conj(x, y)) || !cx.contains(g.conj(y, x)))
    throw NotAWitness("pair is not adjacent in the symmetric normaliser graph");

  WitnessFacts facts;
  const Elem c = g.comm(x, y);
  facts.commutator_commutes = g.mul(c, x) == g.mul(x, c) && g.mul(c, y) == g.mul(y, c);

  facts.power_identities = true;
  for (int m = 1; m <= g.elem_order(x) && facts.power_identities; ++m)
    facts.power_identities = g.comm(g.pow(x, m), y) == g.pow(c, m);
  for (int m = 1; m <= g.elem_order(y) && facts.power_identities; ++m)
    facts.power_identities = g.comm(x, g.pow(y, m)) == g.pow(c, m);

  const Subgroup h = closure(g, {x, y});
  const Subgroup derived = derived_subgroup(g, h);
  const Subgroup z = center(g, h);
  facts.subgroup_order = h.size();
  facts.derived_order = derived.size();
  facts.derived_in_center = derived.members().subset_of(z.members());
  facts.p_group = is_p_group(h);
  return facts;
}

bool is_type_b(const CayleyGroup& p_group) {
  const auto prime = p_group_prime(Subgroup::whole(p_group));
  if (!prime) return false;
  if (is_abelian(p_group)) return false;
  if (derived_subgroup(p_group, Subgroup::whole(p_group)).size() != *prime) return false;
  return is_2_generated(p_group);
}

namespace {

bool is_snnc_impl(const CayleyGroup& p, int prime) {
  const int n = p.order();
  // Q8 recognition shortcut: order 8, non-abelian, exactly one involution.
  if (n == 8 && prime == 2 && !is_abelian(p)) {
    int involutions = 0;
    for (int x = 0; x < n; ++x)
      if (p.elem_order(x) == 2) ++involutions;
    if (involutions == 1) return true;
  }
  if (is_abelian(p)) return false;
  const int e = exact_log(n, prime);
  const CyclicTable ct(p);
  JoinCache joins(p, ct);
  for (int a = 0; a < n; ++a) {
    const int alpha = exact_log(p.elem_order(a), prime) - 1;
    if (alpha < 1) continue;
    const Elem target = p.pow(a, ipow(prime, alpha));  // must equal [a,b]
    for (int b = 0; b < n; ++b) {
      const int beta = exact_log(p.elem_order(b), prime);
      if (beta < 1 || alpha < beta || alpha + beta + 1 != e) continue;
      if (prime == 2 && alpha == beta && alpha == 1) continue;
      const Elem c = p.comm(a, b);
      if (c != target || c == p.identity()) continue;
      if (p.elem_order(c) != prime) continue;
      if (p.comm(c, a) != p.identity() || p.comm(c, b) != p.identity()) continue;
      if (joins.join(a, b).size() != n) continue;
      return true;
    }
  }
  return false;
}

}  // namespace

bool is_snnc(const CayleyGroup& p_group) {
  const auto prime = p_group_prime(Subgroup::whole(p_group));
  if (!prime)
    throw NotAPGroup("is_snnc: group '" + p_group.name() + "' of order " +
                     std::to_string(p_group.order()) + " is not a p-group");
  return is_snnc_impl(p_group, *prime);
}

std::optional<WitnessPair> find_generating_adjacent_pair(const CayleyGroup& p) {
  const int n = p.order();
  const CyclicTable ct(p);
  JoinCache joins(p, ct);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (ct.snorm_adjacent(x, y) && joins.join(x, y).size() == n)
        return WitnessPair{x, y, WitnessKind::GeneratingAdjacent};
  return std::nullopt;
}

std::optional<Subgroup> has_snnc_subgroup(const CayleyGroup& g) {
  const int n = g.order();
  const CyclicTable ct(g);
  JoinCache joins(g, ct);
  std::set<std::vector<std::uint64_t>> tested;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) {
      if (g.mul(x, y) == g.mul(y, x)) continue;  // SNNC groups are non-abelian
      int px = 0, py = 0;
      if (!is_prime_power(g.elem_order(x), &px) || !is_prime_power(g.elem_order(y), &py) ||
          px != py)
        continue;
      const Subgroup& h = joins.join(x, y);
      if (h.size() < 8) continue;  // the smallest SNNC group is Q8
      int hp = 0;
      if (!is_prime_power(h.size(), &hp) || hp != px) continue;
      if (!tested.insert(h.members().words()).second) continue;
      if (is_snnc_impl(materialize(h).group, hp)) return h;
    }
  return std::nullopt;
}

std::optional<TypeBParams> classify_type_b(const CayleyGroup& p) {
  const auto prime = p_group_prime(Subgroup::whole(p));
  if (!prime)
    throw NotAPGroup("classify_type_b: group '" + p.name() + "' is not a p-group");
  if (!is_type_b(p)) return std::nullopt;

  const int pr = *prime;
  const int e = exact_log(p.order(), pr);
  struct Tuple {
    int alpha, beta, rho, sigma;
    const char* tag;
  };
  std::vector<Tuple> tuples;
  auto add_split_cases = [&](int rho, int sigma, const char* tag) {
    for (int alpha = e - 2; alpha >= 1; --alpha) {
      const int beta = e - 1 - alpha;
      if (alpha > beta && beta >= 1) tuples.push_back({alpha, beta, rho, sigma, tag});
    }
  };
  const int half = (e - 1) % 2 == 0 ? (e - 1) / 2 : -1;
  if (pr != 2) {
    add_split_cases(0, 1, "A1a");
    add_split_cases(1, 1, "A1b");
    add_split_cases(1, 0, "A1c");
    if (half >= 1) {
      tuples.push_back({half, half, 0, 1, "A2a"});
      tuples.push_back({half, half, 1, 1, "A2b"});
    }
  } else {
    add_split_cases(0, 1, "B1a");
    add_split_cases(1, 1, "B1b");
    add_split_cases(1, 0, "B1c");
    if (half > 1) {
      tuples.push_back({half, half, 0, 1, "B2a"});
      tuples.push_back({half, half, 1, 1, "B2b"});
    }
    if (half == 1) {
      tuples.push_back({1, 1, 0, 0, "B3a"});
      tuples.push_back({1, 1, 1, 1, "B3b"});
    }
  }

  const int n = p.order();
  const CyclicTable ct(p);
  JoinCache joins(p, ct);
  std::optional<TypeBParams> found;
  for (const auto& t : tuples) {
    bool matched = false;
    for (int a = 0; a < n && !matched; ++a)
      for (int b = 0; b < n && !matched; ++b) {
        const Elem c = p.comm(a, b);
        if (c == p.identity()) continue;
        if (p.elem_order(c) != pr) continue;
        if (p.comm(c, a) != p.identity() || p.comm(c, b) != p.identity()) continue;
        if (p.pow(a, ipow(pr, t.alpha)) != p.pow(c, ipow(pr, t.rho))) continue;
        if (p.pow(b, ipow(pr, t.beta)) != p.pow(c, ipow(pr, t.sigma))) continue;
        if (joins.join(a, b).size() != n) continue;
        matched = true;
      }
    if (!matched) continue;
    if (found)
      throw Error("classify_type_b: group '" + p.name() + "' matches both " + found->case_tag +
                  " and " + t.tag + " (classification demands a unique tuple)");
    found = TypeBParams{pr, t.alpha, t.beta, t.rho, t.sigma, t.tag};
  }
  if (!found)
    throw Error("classify_type_b: type-B group '" + p.name() + "' matched no parameter tuple");
  return found;
}

// ---- theorem checks ----

namespace {

BuildOptions forwarded(const BuildOptions& opts) {
  BuildOptions b = opts;
  b.threads = std::max(1, opts.threads);
  return b;
}

}  // namespace

CheckResult check_hierarchy(const CayleyGroup& g, const BuildOptions& opts) {
  CheckResult r{g.name(), "hierarchy",
                "E(Pow) <= E(EPow) <= E(Com) <= E(SNorm) <= E(Nilp); E(SNorm) <= E(Engel); "
                "E(SNorm) <= E(NGen) when non-abelian simple or not 2-generated",
                "all applicable edge-set inclusions hold", false, nullptr, 0.0, std::nullopt};
  const auto b = forwarded(opts);
  const GroupGraph pow = build_graph(GraphKind::Pow, g, b);
  const GroupGraph epow = build_graph(GraphKind::EPow, g, b);
  const GroupGraph com = build_graph(GraphKind::Com, g, b);
  const GroupGraph snorm = build_graph(GraphKind::SNorm, g, b);
  const GroupGraph nilp = build_graph(GraphKind::Nilp, g, b);
  const GroupGraph engel = build_graph(GraphKind::Engel, g, b);
  const GroupGraph ngen = build_graph(GraphKind::NGen, g, b);

  const bool ngen_hypothesis = (is_simple(g) && !is_abelian(g)) || !is_2_generated(g);

  struct Inclusion {
    const char* name;
    const GroupGraph* a;
    const GroupGraph* b;
  };
  std::vector<Inclusion> chain{{"pow<=epow", &pow, &epow},   {"epow<=com", &epow, &com},
                               {"com<=snorm", &com, &snorm}, {"snorm<=nilp", &snorm, &nilp},
                               {"snorm<=engel", &snorm, &engel}};
  if (ngen_hypothesis) chain.push_back({"snorm<=ngen", &snorm, &ngen});

  r.pass = true;
  for (const auto& inc : chain) {
    if (const auto bad = first_subset_violation(*inc.a, *inc.b)) {
      r.pass = false;
      r.witness = pair_json(g, bad->first, bad->second);
      r.witness["violated"] = inc.name;
      break;
    }
  }
  if (r.pass) {
    // Informational comparisons, not assertions.
    r.witness = {{"info",
                  {{"nilp_subset_engel", is_spanning_subgraph(nilp, engel)},
                   {"snorm_subset_ngen", is_spanning_subgraph(snorm, ngen)},
                   {"ngen_hypothesis", ngen_hypothesis}}}};
  }
  return r;
}

CheckResult check_theorem2(const CayleyGroup& g, const BuildOptions& opts) {
  CheckResult r{g.name(), "thm2", "Com(G) = SNorm(G)", "G has no SNNC subgroup",
                false,     nullptr, 0.0,                std::nullopt};
  const auto b = forwarded(opts);
  const GroupGraph com = build_graph(GraphKind::Com, g, b);
  const GroupGraph snorm = build_graph(GraphKind::SNorm, g, b);
  const bool equal = graphs_equal(com, snorm);
  const auto sub = has_snnc_subgroup(g);
  r.pass = equal == !sub.has_value();
  nlohmann::json w;
  if (sub) w["snnc_subgroup"] = subgroup_json(*sub);
  if (!equal) {
    const CyclicTable ct(g);
    if (const auto pr = first_snorm_witness(g, ct))
      w["noncommuting_adjacent_pair"] = pair_json(g, pr->first, pr->second);
  }
  if (!w.is_null()) r.witness = std::move(w);
  return r;
}

CheckResult check_theorem3(const CayleyGroup& g, const BuildOptions& opts) {
  CheckResult r{g.name(), "thm3", "SNorm(G) = Nilp(G)", "every Sylow subgroup is Dedekind",
                false,     nullptr, 0.0,                 std::nullopt};
  const auto b = forwarded(opts);
  const GroupGraph snorm = build_graph(GraphKind::SNorm, g, b);
  const GroupGraph nilp = build_graph(GraphKind::Nilp, g, b);
  const bool equal = graphs_equal(snorm, nilp);

  bool all_dedekind = true;
  auto sylows = nlohmann::json::array();
  for (int p : prime_factors(g.order())) {
    const Subgroup s = sylow_subgroup(g, p);
    const bool ded = is_dedekind(s);
    all_dedekind = all_dedekind && ded;
    sylows.push_back({{"p", p}, {"order", s.size()}, {"dedekind", ded}});
  }
  r.pass = equal == all_dedekind;
  nlohmann::json w{{"sylows", std::move(sylows)}};
  if (!equal)
    if (const auto d = first_edge_difference(snorm, nilp))
      w["differing_pair"] = pair_json(g, d->first, d->second);
  r.witness = std::move(w);
  return r;
}

CheckResult check_epow_equality(const CayleyGroup& g, const BuildOptions& opts) {
  CheckResult r{g.name(), "epow", "EPow(G) = SNorm(G)", "all Sylow subgroups cyclic",
                false,     nullptr, 0.0,                 std::nullopt};
  const auto b = forwarded(opts);
  const bool equal = graphs_equal(build_graph(GraphKind::EPow, g, b),
                                  build_graph(GraphKind::SNorm, g, b));
  const bool cyclic = has_cyclic_sylows(g);
  r.pass = equal == cyclic;
  r.witness = {{"graphs_equal", equal}, {"cyclic_sylows", cyclic}};
  return r;
}

CheckResult check_pow_equality(const CayleyGroup& g, const BuildOptions& opts) {
  CheckResult r{g.name(), "pow", "Pow(G) = SNorm(G)",
                "G is EPPO with cyclic Sylow subgroups", false, nullptr, 0.0, std::nullopt};
  const auto b = forwarded(opts);
  const bool equal = graphs_equal(build_graph(GraphKind::Pow, g, b),
                                  build_graph(GraphKind::SNorm, g, b));
  const bool eppo = is_eppo(g);
  const bool cyclic = has_cyclic_sylows(g);
  r.pass = equal == (eppo && cyclic);
  r.witness = {{"graphs_equal", equal}, {"eppo", eppo}, {"cyclic_sylows", cyclic}};
  return r;
}

CheckResult check_dedekind_complete(const CayleyGroup& g, const BuildOptions& opts) {
  CheckResult r{g.name(), "dedekind", "SNorm(G) is complete", "G is a Dedekind group",
                false,     nullptr,    0.0,                    std::nullopt};
  const bool complete = build_graph(GraphKind::SNorm, g, forwarded(opts)).complete();
  const bool dedekind = is_dedekind(g);
  r.pass = complete == dedekind;
  r.witness = {{"snorm_complete", complete}, {"dedekind", dedekind}};
  return r;
}

CheckResult check_ngen_equality(const CayleyGroup& g, const BuildOptions& opts) {
  if (is_2_generated(g))
    throw BadParameter("check_ngen_equality applies only to non-2-generated groups; '" +
                       g.name() + "' is 2-generated");
  CheckResult r{g.name(), "ngen", "NGen(G) complete and SNorm(G) = NGen(G) iff Dedekind",
                "G is a Dedekind group", false, nullptr, 0.0, std::nullopt};
  const auto b = forwarded(opts);
  const GroupGraph ngen = build_graph(GraphKind::NGen, g, b);
  const GroupGraph snorm = build_graph(GraphKind::SNorm, g, b);
  const bool ngen_complete = ngen.complete();
  const bool equal = graphs_equal(snorm, ngen);
  const bool dedekind = is_dedekind(g);
  r.pass = ngen_complete && (equal == dedekind);
  r.witness = {{"ngen_complete", ngen_complete}, {"graphs_equal", equal}, {"dedekind", dedekind}};
  return r;
}

CheckResult check_dnorm_consistency(const CayleyGroup& g, const BuildOptions& opts) {
  CheckResult r{g.name(), "dnorm", "SNorm(x,y)", "arc x->y and arc y->x in directed graph",
                false,     nullptr, 0.0,          std::nullopt};
  const auto b = forwarded(opts);
  const GroupGraph snorm = build_graph(GraphKind::SNorm, g, b);
  const DirectedGroupGraph dir = build_directed_normalising(g, b);
  r.pass = true;
  for (int x = 0; x < g.order() && r.pass; ++x)
    for (int y = x + 1; y < g.order(); ++y)
      if (snorm.adjacent(x, y) != (dir.arc(x, y) && dir.arc(y, x))) {
        r.pass = false;
        r.witness = pair_json(g, x, y);
        break;
      }
  return r;
}

CheckResult check_identities(const CayleyGroup& g, const BuildOptions&) {
  CheckResult r{g.name(), "identities",
                "commutator product identities (random triples); class-2 power identity "
                "(exhaustive on small class<=2 groups)",
                "no violations", false, nullptr, 0.0, std::nullopt};
  const int n = g.order();
  const Elem e = g.identity();
  // commutator in the opposite orientation, x y x^-1 y^-1
  auto comm2 = [&](Elem x, Elem y) { return g.mul(g.mul(x, y), g.mul(g.inv(x), g.inv(y))); };

  constexpr int kTriples = 1000;
  Rng rng(g.name());
  r.pass = true;
  for (int t = 0; t < kTriples && r.pass; ++t) {
    const Elem x = rng.elem(n), y = rng.elem(n), z = rng.elem(n);
    const Elem yz = g.mul(y, z), xz = g.mul(x, z);
    // [x,yz] = [x,y] (y [x,z] y^-1)
    const bool a2 = comm2(x, yz) == g.mul(comm2(x, y), g.conj(y, comm2(x, z)));
    // [xz,y] = (x [z,y] x^-1) [x,y]
    const bool b2 = comm2(xz, y) == g.mul(g.conj(x, comm2(z, y)), comm2(x, y));
    // the same identities in the library convention:
    // [x,yz] = [x,z] (z^-1 [x,y] z), [xz,y] = (z^-1 [x,y] z) [z,y]
    const bool a1 = g.comm(x, yz) ==
                    g.mul(g.comm(x, z), g.conj(g.inv(z), g.comm(x, y)));
    const bool b1 = g.comm(xz, y) ==
                    g.mul(g.conj(g.inv(z), g.comm(x, y)), g.comm(z, y));
    if (!(a1 && a2 && b1 && b2)) {
      r.pass = false;
      r.witness = {{"triple", {x, y, z}},
                   {"labels", {g.label(x), g.label(y), g.label(z)}},
                   {"identity", !a2 ? "product-right" : (!b2 ? "product-left" : "convention-form")}};
    }
  }

  // (ab)^i = [b,a]^(i(i-1)/2) a^i b^i for nilpotency class <= 2.
  const Subgroup whole = Subgroup::whole(g);
  const bool class_le_2 =
      derived_subgroup(g, whole).members().subset_of(center(g, whole).members());
  bool exhaustive = false;
  if (r.pass && class_le_2 && n <= 128) {
    exhaustive = true;
    const long long exp = exponent(whole);
    for (int a = 0; a < n && r.pass; ++a)
      for (int b = 0; b < n && r.pass; ++b) {
        const Elem z = g.comm(b, a);
        const Elem ab = g.mul(a, b);
        Elem lhs = e, pa = e, pb = e;
        for (long long i = 1; i <= exp; ++i) {
          lhs = g.mul(lhs, ab);
          pa = g.mul(pa, a);
          pb = g.mul(pb, b);
          const Elem rhs = g.mul(g.pow(z, i * (i - 1) / 2), g.mul(pa, pb));
          if (lhs != rhs) {
            r.pass = false;
            r.witness = {{"pair", {a, b}}, {"labels", {g.label(a), g.label(b)}}, {"i", i},
                         {"identity", "class2-power"}};
            break;
          }
        }
      }
  }
  if (r.pass)
    r.witness = {{"random_triples", kTriples},
                 {"class2_exhaustive", exhaustive},
                 {"class_le_2", class_le_2}};
  return r;
}

// ---- suite ----

const std::vector<std::string>& all_check_ids() {
  static const std::vector<std::string> ids{"hierarchy", "thm2",     "thm3", "epow", "pow",
                                            "dedekind",  "ngen",     "dnorm", "identities"};
  return ids;
}

int check_cap(const std::string& check_id) {
  if (check_id == "hierarchy" || check_id == "thm3" || check_id == "ngen") return kHeavyGraphCap;
  if (check_id == "thm2") return 1024;
  if (check_id == "identities") return kMaxRepresentableOrder;
  return kLightGraphCap;  // epow, pow, dedekind, dnorm
}

bool check_applicable(const std::string& check_id, const CayleyGroup& g,
                      std::optional<int> max_order) {
  const int cap = max_order.value_or(check_cap(check_id));
  if (g.order() > cap) return false;
  if (check_id == "ngen") return !is_2_generated(g);
  return true;
}

CheckResult run_check(const std::string& check_id, const CayleyGroup& g,
                      const BuildOptions& opts) {
  const auto t0 = std::chrono::steady_clock::now();
  CheckResult r;
  if (check_id == "hierarchy") r = check_hierarchy(g, opts);
  else if (check_id == "thm2") r = check_theorem2(g, opts);
  else if (check_id == "thm3") r = check_theorem3(g, opts);
  else if (check_id == "epow") r = check_epow_equality(g, opts);
  else if (check_id == "pow") r = check_pow_equality(g, opts);
  else if (check_id == "dedekind") r = check_dedekind_complete(g, opts);
  else if (check_id == "ngen") r = check_ngen_equality(g, opts);
  else if (check_id == "dnorm") r = check_dnorm_consistency(g, opts);
  else if (check_id == "identities") r = check_identities(g, opts);
  else throw BadParameter("unknown check id '" + check_id + "'");
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

bool VerificationReport::all_pass() const {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass && !r.error; });
}

bool VerificationReport::any_error() const {
  return std::any_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.error.has_value(); });
}

nlohmann::json VerificationReport::to_json(bool with_timings) const {
  nlohmann::json out;
  out["suite_version"] = kSuiteVersion;
  out["commutator_convention"] = kCommutatorConvention;
  auto arr = nlohmann::json::array();
  for (const auto& r : results) {
    nlohmann::json item{{"group", r.group},
                        {"check", r.check_id},
                        {"pass", r.pass},
                        {"ms", with_timings ? r.ms : 0.0}};
    if (!r.witness.is_null()) item["witness"] = r.witness;
    if (r.error) item["witness"] = {{"error", *r.error}};
    arr.push_back(std::move(item));
  }
  out["results"] = std::move(arr);
  out["pass"] = all_pass();
  return out;
}

namespace {

std::vector<std::string> resolve_check_ids(const std::vector<std::string>& requested) {
  std::vector<std::string> ids;
  for (const auto& c : requested) {
    if (c == "all") {
      for (const auto& id : all_check_ids())
        if (std::find(ids.begin(), ids.end(), id) == ids.end()) ids.push_back(id);
      continue;
    }
    if (std::find(all_check_ids().begin(), all_check_ids().end(), c) == all_check_ids().end())
      throw BadParameter("unknown check id '" + c + "'");
    if (std::find(ids.begin(), ids.end(), c) == ids.end()) ids.push_back(c);
  }
  // fixed suite order regardless of request order
  std::vector<std::string> ordered;
  for (const auto& id : all_check_ids())
    if (std::find(ids.begin(), ids.end(), id) != ids.end()) ordered.push_back(id);
  return ordered;
}

}  // namespace

VerificationReport run_suite(const std::vector<GroupSpec>& catalog, const SuiteOptions& opts) {
  const auto ids = resolve_check_ids(opts.checks);
  std::vector<std::vector<CheckResult>> per_group(catalog.size());

  ValidateOptions vopts;
  if (opts.max_order && *opts.max_order > vopts.order_cap) vopts.order_cap = *opts.max_order;
  vopts.paranoid = opts.paranoid;

  const int threads = std::max(1, opts.threads);
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    while (true) {
      const std::size_t idx = cursor.fetch_add(1);
      if (idx >= catalog.size()) break;
      auto& results = per_group[idx];
      std::optional<CayleyGroup> group;
      const std::string display = catalog[idx].text();
      try {
        group.emplace(make_family(catalog[idx], vopts));
      } catch (const std::exception& err) {
        CheckResult r{display, "construction", "group construction", "", false, nullptr, 0.0,
                      err.what()};
        results.push_back(std::move(r));
        continue;
      }
      BuildOptions bopts;
      bopts.max_order = opts.max_order;
      for (const auto& id : ids) {
        if (!check_applicable(id, *group, opts.max_order)) continue;
        try {
          results.push_back(run_check(id, *group, bopts));
        } catch (const std::exception& err) {
          CheckResult r{group->name(), id, "", "", false, nullptr, 0.0, err.what()};
          results.push_back(std::move(r));
        }
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(std::size_t(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  VerificationReport report;
  for (auto& chunk : per_group)
    for (auto& r : chunk) report.results.push_back(std::move(r));
  return report;
}

}  // namespace gg
