#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <numeric>

#include "gg/families.hpp"
#include "gg/group.hpp"

using namespace gg;

namespace {

// deterministic generator for property-style tests
struct Lcg {
  std::uint64_t state = 0x2545f4914f6cdd1dull;
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 11;
  }
  Elem elem(const CayleyGroup& g) { return Elem(next() % std::uint64_t(g.order())); }
};

}  // namespace

TEST_CASE("from_cayley_table basics") {
  SUBCASE("trivial group") {
    const auto g = from_cayley_table(1, {{0}});
    CHECK(g.order() == 1);
    CHECK(g.identity() == 0);
    CHECK(g.elem_order(0) == 1);
  }
  SUBCASE("C2") {
    const auto g = from_cayley_table(2, {{0, 1}, {1, 0}});
    CHECK(g.order() == 2);
    CHECK(g.inv(1) == 1);
    CHECK(g.elem_order(1) == 2);
  }
  SUBCASE("identity not at index zero is derived") {
    // C2 with the identity at index 1
    const auto g = from_cayley_table(2, {{1, 0}, {0, 1}});
    CHECK(g.identity() == 1);
  }
  SUBCASE("shape errors") {
    CHECK_THROWS_AS(from_cayley_table(2, {{0, 1}}), BadShape);
    CHECK_THROWS_AS(from_cayley_table(2, {{0, 1}, {1, 2}}), BadShape);
    CHECK_THROWS_AS(from_cayley_table(0, {}), BadShape);
  }
  SUBCASE("latin square violation") {
    CHECK_THROWS_AS(from_cayley_table(2, {{0, 0}, {1, 1}}), NotAGroup);
  }
  SUBCASE("non-associative loop reports a witness triple") {
    // order-5 loop: rows/columns are permutations, 0 is the identity, but
    // (1*1)*1 = 0 while 1*(1*1) = 4
    const std::vector<std::vector<int>> loop{{0, 1, 2, 3, 4},
                                             {1, 3, 0, 4, 2},
                                             {2, 4, 3, 1, 0},
                                             {3, 0, 4, 2, 1},
                                             {4, 2, 1, 0, 3}};
    CHECK_THROWS_WITH_AS(from_cayley_table(5, loop),
                         doctest::Contains("associativity fails at (1,1,1)"), NotAGroup);
  }
}

TEST_CASE("from_permutations") {
  SUBCASE("S3 from standard generators") {
    const auto g = from_permutations(3, {"(1 2)", "(1 2 3)"});
    CHECK(g.order() == 6);
    CHECK(g.identity() == 0);
    CHECK(g.label(0) == "()");
  }
  SUBCASE("empty generating set gives the trivial group") {
    const auto g = from_permutations(5, {});
    CHECK(g.order() == 1);
  }
  SUBCASE("Klein four group: every non-identity element has order 2") {
    const auto g = from_permutations(4, {"(1 2)(3 4)", "(1 3)(2 4)"});
    REQUIRE(g.order() == 4);
    for (int x = 0; x < 4; ++x)
      CHECK(g.elem_order(x) == (x == g.identity() ? 1 : 2));
  }
  SUBCASE("closure cap") {
    ValidateOptions opts;
    opts.order_cap = 5;
    CHECK_THROWS_AS(from_permutations(3, {"(1 2)", "(1 2 3)"}, "", opts), OrderLimitExceeded);
  }
  SUBCASE("parse errors") {
    CHECK_THROWS_AS(from_permutations(3, {"(1 4)"}), ParseError);
    CHECK_THROWS_AS(from_permutations(3, {"(1 1)"}), ParseError);
    CHECK_THROWS_AS(from_permutations(3, {"(1 2"}), ParseError);
    CHECK_THROWS_AS(from_permutations(3, {"1 2"}), ParseError);
  }
  SUBCASE("cycle notation round trip") {
    CHECK(cycle_notation(parse_cycle_string("(1 2)(3 4)", 5)) == "(1 2)(3 4)");
    CHECK(cycle_notation(parse_cycle_string("()", 4)) == "()");
    CHECK(cycle_notation(parse_cycle_string("", 4)) == "()");
  }
}

TEST_CASE("family constructors") {
  SUBCASE("orders") {
    CHECK(make_cyclic(12).order() == 12);
    CHECK(make_dihedral(4).order() == 8);
    CHECK(make_generalized_quaternion(3).order() == 8);
    CHECK(make_symmetric(4).order() == 24);
    CHECK(make_alternating(5).order() == 60);
    CHECK(make_elementary_abelian(2, 3).order() == 8);
    CHECK(make_heisenberg(3).order() == 27);
    CHECK(make_special_linear2(3).order() == 24);
    CHECK(make_family("x(Q8,C3)").order() == 24);
  }
  SUBCASE("Q8 has exactly one element of order 2") {
    const auto q8 = make_generalized_quaternion(3);
    int involutions = 0;
    for (int x = 0; x < q8.order(); ++x)
      if (q8.elem_order(x) == 2) ++involutions;
    CHECK(involutions == 1);
  }
  SUBCASE("heisenberg(3) has exponent 3") {
    CHECK(exponent(make_heisenberg(3)) == 3);
  }
  SUBCASE("bad parameters") {
    CHECK_THROWS_AS(make_heisenberg(4), BadParameter);
    CHECK_THROWS_AS(make_heisenberg(2), BadParameter);
    CHECK_THROWS_AS(make_symmetric(8), BadParameter);
    CHECK_THROWS_AS(make_generalized_quaternion(2), BadParameter);
    CHECK_THROWS_AS(make_special_linear2(11), BadParameter);
    CHECK_THROWS_AS(make_elementary_abelian(6, 2), BadParameter);
  }
}

TEST_CASE("make_snnc") {
  SUBCASE("excluded parameters") {
    CHECK_THROWS_AS(make_snnc({2, 1, 1}), BadParameter);
    CHECK_THROWS_AS(make_snnc({3, 1, 2}), BadParameter);
    CHECK_THROWS_AS(make_snnc({4, 2, 1}), BadParameter);
  }
  SUBCASE("presentation relations hold for the designated generators") {
    for (const SnncParams params : {SnncParams{2, 2, 1}, SnncParams{2, 2, 2}, SnncParams{3, 1, 1},
                                    SnncParams{3, 2, 1}, SnncParams{5, 1, 1}}) {
      const auto g = make_snnc(params);
      CAPTURE(g.name());
      const auto [p, alpha, beta] = params;
      CHECK(g.order() == ipow(p, alpha + beta + 1));
      const Elem a = g.generator("a").value();
      const Elem b = g.generator("b").value();
      const Elem c = g.comm(a, b);
      CHECK(g.pow(b, ipow(p, beta)) == g.identity());
      CHECK(g.pow(c, p) == g.identity());
      CHECK(g.comm(c, a) == g.identity());
      CHECK(g.comm(c, b) == g.identity());
      CHECK(g.pow(a, ipow(p, alpha)) == c);
      CHECK(g.elem_order(a) == ipow(p, alpha + 1));
      CHECK(g.elem_order(b) == ipow(p, beta));
      // a (ab) a^-1 = (ab)^(1+p^alpha)
      const Elem ab = g.mul(a, b);
      CHECK(g.conj(a, ab) == g.pow(ab, 1 + ipow(p, alpha)));
      // derived subgroup of order p inside the center
      const auto derived = derived_subgroup(g, Subgroup::whole(g));
      CHECK(derived.size() == p);
      CHECK(derived.members().subset_of(center(g, Subgroup::whole(g)).members()));
    }
  }
  SUBCASE("order 16 example has exponent 8") {
    CHECK(exponent(make_snnc({2, 2, 1})) == 8);
  }
  SUBCASE("order 27 example has derived subgroup of order 3") {
    const auto g = make_snnc({3, 1, 1});
    CHECK(g.order() == 27);
    CHECK(derived_subgroup(g, Subgroup::whole(g)).size() == 3);
  }
}

TEST_CASE("element orders and cyclic subgroups") {
  const auto s3 = make_symmetric(3);
  const auto c12 = make_cyclic(12);
  const auto q8 = make_generalized_quaternion(3);

  CHECK(s3.elem_order(s3.identity()) == 1);
  CHECK(c12.elem_order(c12.generator("g").value()) == 12);
  const Elem a = q8.generator("a").value();
  CHECK(q8.elem_order(q8.mul(a, a)) == 2);

  CHECK(cyclic_subgroup(s3, s3.identity()).size() == 1);
  const Elem rot = s3.elem_by_label("(1 2 3)").value();
  CHECK(cyclic_subgroup(s3, rot).size() == 3);
  const auto snnc = make_snnc({3, 1, 1});
  CHECK(cyclic_subgroup(snnc, snnc.generator("a").value()).size() == 9);
}

TEST_CASE("closure") {
  const auto s3 = make_symmetric(3);
  const Elem t = s3.elem_by_label("(1 2)").value();
  const Elem r = s3.elem_by_label("(1 2 3)").value();
  const Elem r2 = s3.elem_by_label("(1 3 2)").value();

  CHECK(closure(s3, {t, r}).size() == 6);
  CHECK(closure(s3, {}).size() == 1);
  CHECK(closure(s3, {r, r2}).size() == 3);
}

TEST_CASE("normaliser, center, derived subgroup") {
  const auto s3 = make_symmetric(3);
  const Elem t = s3.elem_by_label("(1 2)").value();
  const Elem r = s3.elem_by_label("(1 2 3)").value();

  CHECK(normaliser(s3, Subgroup::trivial(s3)).size() == 6);
  CHECK(normaliser(s3, cyclic_subgroup(s3, r)).size() == 6);
  CHECK(normaliser(s3, cyclic_subgroup(s3, t)).size() == 2);

  const auto c6 = make_cyclic(6);
  CHECK(center(c6, Subgroup::whole(c6)).size() == 6);
  const auto q8 = make_generalized_quaternion(3);
  CHECK(center(q8, Subgroup::whole(q8)).size() == 2);
  CHECK(center(s3, Subgroup::whole(s3)).size() == 1);

  CHECK(derived_subgroup(c6, Subgroup::whole(c6)).size() == 1);
  CHECK(derived_subgroup(s3, Subgroup::whole(s3)).size() == 3);
  CHECK(derived_subgroup(make_snnc({3, 2, 1}), Subgroup::whole(make_snnc({3, 2, 1}))).size() == 3);
}

TEST_CASE("commutators") {
  const auto s3 = make_symmetric(3);
  const Elem t = s3.elem_by_label("(1 2)").value();
  const Elem r = s3.elem_by_label("(1 2 3)").value();
  const Elem u = s3.elem_by_label("(1 3)").value();

  SUBCASE("commuting elements") {
    const auto c6 = make_cyclic(6);
    CHECK(commutator(c6, 1, 4) == c6.identity());
  }
  SUBCASE("[x,2 y] = e for x=(1 2), y=(1 2 3)") {
    CHECK(iterated_commutator(s3, t, r, 1) != s3.identity());
    CHECK(iterated_commutator(s3, t, r, 2) == s3.identity());
  }
  SUBCASE("two transpositions never reach the identity") {
    for (int k = 1; k <= s3.order(); ++k)
      CHECK(iterated_commutator(s3, t, u, k) != s3.identity());
  }
}

TEST_CASE("nilpotency") {
  CHECK(is_nilpotent(make_generalized_quaternion(3)));
  CHECK(is_nilpotent(make_dihedral(4)));
  CHECK(is_nilpotent(make_heisenberg(3)));
  CHECK(is_nilpotent(make_cyclic(6)));
  CHECK_FALSE(is_nilpotent(make_symmetric(3)));
  CHECK_FALSE(is_nilpotent(make_alternating(4)));
}

TEST_CASE("sylow subgroups") {
  const auto s4 = make_symmetric(4);
  CHECK(sylow_subgroup(s4, 2).size() == 8);
  CHECK(sylow_subgroup(s4, 3).size() == 3);
  CHECK(sylow_subgroup(s4, 5).size() == 1);

  SUBCASE("SL(2,3) has a quaternion Sylow 2-subgroup") {
    const auto sl = make_special_linear2(3);
    const auto p2 = sylow_subgroup(sl, 2);
    REQUIRE(p2.size() == 8);
    int involutions = 0;
    for (Elem x : p2.elements())
      if (sl.elem_order(x) == 2) ++involutions;
    CHECK(involutions == 1);
    CHECK_FALSE(is_abelian(p2));
  }

  SUBCASE("order equals the exact p-part and the result is a p-group") {
    for (const char* spec : {"S5", "A4", "SL(2,3)", "C12", "SNNC(2,2,1)", "x(Q8,C3)", "D6"}) {
      const auto g = make_family(spec);
      for (int p : prime_factors(g.order())) {
        const auto s = sylow_subgroup(g, p);
        long long ppart = 1, rest = g.order();
        while (rest % p == 0) {
          ppart *= p;
          rest /= p;
        }
        CAPTURE(spec);
        CAPTURE(p);
        CHECK(s.size() == ppart);
        CHECK(is_p_group(s));
      }
    }
  }
}

TEST_CASE("predicates") {
  CHECK(is_dedekind(make_generalized_quaternion(3)));
  CHECK_FALSE(is_dedekind(make_dihedral(4)));
  CHECK(is_dedekind(make_family("x(Q8,C2)")));
  CHECK(is_dedekind(make_family("x(Q8,C3)")));
  CHECK_FALSE(is_dedekind(make_generalized_quaternion(4)));

  CHECK(is_eppo(make_symmetric(3)));
  CHECK_FALSE(is_eppo(make_cyclic(6)));

  CHECK(exponent(make_snnc({2, 2, 1})) == 8);

  CHECK(is_simple(make_alternating(5)));
  CHECK_FALSE(is_simple(make_symmetric(3)));
  CHECK(is_simple(make_cyclic(7)));
  CHECK_FALSE(is_simple(make_cyclic(1)));

  CHECK(is_2_generated(make_symmetric(5)));
  CHECK(is_2_generated(make_cyclic(1)));
  CHECK(is_2_generated(make_elementary_abelian(2, 2)));
  CHECK_FALSE(is_2_generated(make_elementary_abelian(2, 3)));
  CHECK_FALSE(is_2_generated(make_family("x(Q8,C2)")));

  CHECK(has_cyclic_sylows(make_symmetric(3)));
  CHECK_FALSE(has_cyclic_sylows(make_generalized_quaternion(3)));
  CHECK(has_cyclic_sylows(make_cyclic(6)));
}

TEST_CASE("materialize") {
  const auto s3 = make_symmetric(3);
  SUBCASE("whole group copy") {
    const auto m = materialize(Subgroup::whole(s3));
    CHECK(m.group.order() == 6);
    CHECK(m.group.identity() == 0);
  }
  SUBCASE("cyclic subgroup of S3") {
    const Elem r = s3.elem_by_label("(1 2 3)").value();
    const auto m = materialize(cyclic_subgroup(s3, r));
    CHECK(m.group.order() == 3);
  }
  SUBCASE("Sylow-2 of S4 has center of size 2") {
    const auto s4 = make_symmetric(4);
    const auto m = materialize(sylow_subgroup(s4, 2));
    REQUIRE(m.group.order() == 8);
    CHECK(center(m.group, Subgroup::whole(m.group)).size() == 2);
  }
  SUBCASE("predicates agree with the parent through the index map") {
    const auto sl = make_special_linear2(3);
    const auto sub = sylow_subgroup(sl, 2);
    const auto m = materialize(sub);
    REQUIRE(int(m.to_parent.size()) == sub.size());
    for (int i = 0; i < m.group.order(); ++i) {
      CHECK(m.group.elem_order(i) == sl.elem_order(m.to_parent[std::size_t(i)]));
      for (int j = 0; j < m.group.order(); ++j)
        CHECK(m.to_parent[std::size_t(m.group.mul(i, j))] ==
              sl.mul(m.to_parent[std::size_t(i)], m.to_parent[std::size_t(j)]));
    }
    CHECK(is_abelian(m.group) == is_abelian(sub));
    CHECK(is_dedekind(m.group) == is_dedekind(sub));
  }
}

TEST_CASE("subgroup invariants hold for random closures") {
  Lcg rng;
  for (const char* spec : {"S4", "SL(2,3)", "SNNC(3,2,1)", "Q16", "D6"}) {
    const auto g = make_family(spec);
    CAPTURE(spec);
    for (int trial = 0; trial < 20; ++trial) {
      const Elem x = rng.elem(g), y = rng.elem(g);
      const auto h = closure(g, {x, y});
      CHECK(g.order() % h.size() == 0);  // Lagrange
      const auto n = normaliser(g, h);
      CHECK(h.members().subset_of(n.members()));
      const auto z = center(g, h);
      CHECK(z.members().subset_of(h.members()));
      const auto d = derived_subgroup(g, h);
      CHECK(d.members().subset_of(h.members()));
      // derived subgroup is normal in h
      for (Elem s : h.elements())
        for (Elem w : d.elements()) CHECK(d.contains(g.conj(s, w)));
    }
  }
}

TEST_CASE("group spec grammar") {
  CHECK(parse_spec("Q8").text() == "Q8");
  CHECK(make_family("Q8").order() == 8);
  CHECK(make_family("D4").order() == 8);
  CHECK(make_family("x(Q8,C3)").order() == 24);
  CHECK(make_family("SNNC(3,2,1)").order() == 81);
  CHECK(parse_spec("x(Q8,C3)").text() == "x(Q8,C3)");
  CHECK(parse_spec(" S5 ").text() == "S5");

  CHECK_THROWS_AS(parse_spec("Q7"), BadParameter);
  CHECK_THROWS_AS(parse_spec("SNNC(2,1,1)"), BadParameter);
  CHECK_THROWS_AS(parse_spec("Zork(3)"), ParseError);
  CHECK_THROWS_AS(parse_spec("x(Q8"), ParseError);
  CHECK_THROWS_AS(parse_spec("C6 junk"), ParseError);
  CHECK_THROWS_AS(parse_spec(""), ParseError);
  CHECK_THROWS_AS(parse_spec("file:"), ParseError);
}

TEST_CASE("subgroup validation") {
  const auto s3 = make_symmetric(3);
  SUBCASE("checked constructor rejects non-closed sets") {
    DynBitset b(6);
    b.set(std::size_t(s3.identity()));
    b.set(std::size_t(s3.elem_by_label("(1 2)").value()));
    b.set(std::size_t(s3.elem_by_label("(1 3)").value()));
    CHECK_THROWS_AS(Subgroup(s3, b), Error);
  }
  SUBCASE("checked constructor rejects sets without the identity") {
    DynBitset b(6);
    b.set(std::size_t(s3.elem_by_label("(1 2)").value()));
    CHECK_THROWS_AS(Subgroup(s3, b), Error);
  }
  SUBCASE("checked constructor accepts genuine subgroups") {
    DynBitset b(6);
    b.set(std::size_t(s3.identity()));
    b.set(std::size_t(s3.elem_by_label("(1 2)").value()));
    CHECK(Subgroup(s3, b).size() == 2);
  }
  SUBCASE("closure rejects out-of-range seeds") {
    CHECK_THROWS_AS(closure(s3, {42}), Error);
  }
  SUBCASE("iterated commutator needs k >= 1") {
    CHECK_THROWS_AS(iterated_commutator(s3, 1, 2, 0), Error);
  }
}

TEST_CASE("group file loading") {
  SUBCASE("cayley table schema") {
    const char* path = "tmp_test_table.json";
    {
      std::ofstream out(path);
      out << R"({"name":"K4","order":4,
                 "table":[[0,1,2,3],[1,0,3,2],[2,3,0,1],[3,2,1,0]],
                 "labels":["e","a","b","c"]})";
    }
    const auto g = load_group_file(path);
    CHECK(g.order() == 4);
    CHECK(g.name() == "K4");
    CHECK(g.label(3) == "c");
    std::remove(path);
  }
  SUBCASE("permutation schema") {
    const char* path = "tmp_test_perm.json";
    {
      std::ofstream out(path);
      out << R"json({"name":"V","degree":4,"generators":["(1 2)(3 4)","(1 3)(2 4)"]})json";
    }
    const auto g = load_group_file(path);
    CHECK(g.order() == 4);
    std::remove(path);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(load_group_file("definitely_missing.json"), Error);
  }
  SUBCASE("file reference nested in a product") {
    const char* path = "tmp_test_nested.json";
    {
      std::ofstream out(path);
      out << R"({"name":"C2f","order":2,"table":[[0,1],[1,0]]})";
    }
    const auto spec = parse_spec("x(file:" + std::string(path) + ",C3)");
    REQUIRE(spec.kind == GroupSpec::Kind::Product);
    CHECK(spec.left->path == path);
    CHECK(make_family(spec).order() == 6);
    std::remove(path);
  }
}

TEST_CASE("pow handles negative exponents") {
  const auto c12 = make_cyclic(12);
  const Elem gen = c12.generator("g").value();
  CHECK(c12.pow(gen, -1) == c12.inv(gen));
  CHECK(c12.pow(gen, 25) == gen);
  CHECK(c12.pow(gen, 0) == c12.identity());
}
