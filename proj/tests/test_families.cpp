#include "doctest.h"
#include "helpers.hpp"
#include "pgk/gk.hpp"
#include "pgk/search.hpp"

using namespace pgk;

TEST_CASE("family grammar") {
  const FamilySpec s = parse_family("family:abelian(p=2,e=1:2)");
  CHECK(s.name == "abelian");
  CHECK(s.params.at("p") == "2");
  CHECK(s.params.at("e") == "1:2");
  CHECK(parse_family(to_string(s)).params == s.params);
  CHECK(parse_family("sg16_13()").params.empty());
  CHECK(parse_family("sg16_13").name == "sg16_13");
  CHECK(is_isomorphic(make_family("abelian(p=2, e=1:2)"), make_abelian(2, {1, 2})));
  CHECK_THROWS_AS(parse_family("cyclic(n=4"), Error);
  CHECK_THROWS_AS(make_family("nosuch(p=2)"), Error);
  CHECK_THROWS_AS(make_family("cyclic(n=x)"), Error);
  CHECK_THROWS_AS(make_family("twisted_dihedral(l=1)"), Error);
  CHECK_THROWS_AS(make_family("modular_Gl(p=4,l=1)"), Error);
  CHECK_THROWS_AS(make_family("quaternion(l=9)"), Error);
  CHECK_THROWS_AS(make_family("cyclic(n=4,q=1)"), Error);
  for (const auto& f : family_catalog()) CHECK(!f.description.empty());
}

TEST_CASE("every family builds an associative group") {
  const std::vector<std::string> specs{
      "cyclic(n=12)", "cyclic(p=3,e=2)", "abelian(p=3,e=1:1:2)", "elementary(p=5,k=2)", "dihedral(l=2)",
      "dihedral(n=5)", "quaternion(l=2)", "semidihedral(l=2)", "twisted_dihedral(l=3)", "modular_Gl(p=3,l=1)",
      "extraspecial_plus(p=5)", "heisenberg_pe(p=2,e=2)", "sg16_13()", "sg64_198()", "cp3_nonsplit(p=3)",
      "cpe_times_E(p=3,e=1)", "a4()", "dicyclic(n=3)"};
  for (const auto& s : specs) {
    CAPTURE(s);
    const Group g = make_family(s, test::big_limits());
    CHECK(associative_full(g));
    CHECK(g.label(0) == "1");
  }
}

TEST_CASE("named examples") {
  const Group td = make_twisted_dihedral(2);
  CHECK(td.order() == 16);
  const GkReport r = gk_report(td);
  CHECK(r.is_gk);
  CHECK(abelian_invariants_of(td, r.kernel) == AbelianInvariants{2, {1, 2}});
  const Group e = make_extraspecial_plus(3);
  CHECK(e.order() == 27);
  CHECK(exponent(e) == 3);
  CHECK(!is_gk_type(e));
  for (unsigned p : {2u, 3u, 5u}) {
    const Group c = make_cp3_nonsplit(p, test::big_limits());
    const GkReport cr = gk_report(c, test::big_limits());
    CHECK(cr.is_gk);
    CHECK(abelian_invariants_of(c, cr.kernel) == AbelianInvariants{p, {1, 1, 1}});
    CHECK(rank(c) == 2);
    CHECK(abelian_invariants_of(c, center(c)) == AbelianInvariants{p, {1, 1}});
  }
  const Group s = make_sg64_198();
  CHECK(s.order() == 64);
  CHECK(!is_gk_type(s));
  CHECK(exponent(s) == 4);
  CHECK(exponent_of(s, center(s)) == 4);
  CHECK(rank(s) == 4);
  const Group s13 = make_sg16_13();
  CHECK(is_isomorphic(s, direct_product(make_cyclic(4), s13)));
  // [y, x] = z^2 in sg16_13
  const Elem x = test::el(s13, "x"), y = test::el(s13, "y"), z = test::el(s13, "z");
  CHECK(s13.mul(s13.mul(s13.inv(y), s13.inv(x)), s13.mul(y, x)) == s13.mul(z, z));
  CHECK(is_isomorphic(make_dihedral(4), make_dihedral2(1)));
  CHECK(is_isomorphic(make_dicyclic(2), make_quaternion(1)));
  CHECK(make_a4().order() == 12);
  CHECK(derived_subgroup(make_a4()).size() == 4);
}

TEST_CASE("modular groups are GK with kernel C_p x C_{p^l}") {
  for (auto [p, l] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {3, 1}, {3, 2}, {5, 1}, {7, 1}}) {
    CAPTURE(p);
    CAPTURE(l);
    const Group g = make_modular(p, l, test::big_limits());
    CHECK(g.order() == ipow(p, l + 2));
    const GkReport r = gk_report(g, test::big_limits());
    REQUIRE(r.is_gk);
    CHECK(abelian_invariants_of(g, r.kernel) == AbelianInvariants{p, {1, l}});
  }
  // (2,1) is the excluded case: y^g = y^3 = y^-1 gives D8
  CHECK(is_isomorphic(make_modular(2, 1), make_dihedral2(1)));
  CHECK(!is_gk_type(make_modular(2, 1)));
}

TEST_CASE("deficiency one 2-groups") {
  for (unsigned l = 2; l <= 5; ++l) {
    const Group d = make_dihedral2(l), sd = make_semidihedral(l), td = make_twisted_dihedral(l), q = make_quaternion(l);
    for (const Group* g : {&d, &sd, &td, &q}) {
      CHECK(g->order() == ipow(2, l + 2));
      CHECK(cyclic_deficiency(*g) == 1);
    }
    CHECK(!is_gk_type(d));
    CHECK(!is_gk_type(sd));
    CHECK(is_gk_type(td));
    CHECK(!is_gk_type(q));
    CHECK(!is_isomorphic(d, sd));
    CHECK(!is_isomorphic(sd, q));
  }
}

TEST_CASE("Heisenberg groups") {
  for (auto [p, e] : std::vector<std::pair<unsigned, unsigned>>{{3, 1}, {5, 1}, {7, 1}, {3, 2}}) {
    CAPTURE(p);
    CAPTURE(e);
    const Group h = make_heisenberg(p, e, test::big_limits());
    CHECK(h.order() == ipow(p, 3 * e));
    CHECK(exponent(h) == ipow(p, e));
    CHECK(exponent_of(h, center(h)) == ipow(p, e));
    CHECK(!is_gk_type(h));
    for (unsigned a = 0; a <= e; ++a) {
      const ElementSet pw = power_subgroup(h, ipow(p, a));
      CHECK(pw.size() == ipow(p, 3 * (e - a)));
      const bool ab = restrict_to(h, pw).group.is_abelian();
      CHECK(ab == (2 * a >= e));
    }
  }
  CHECK(is_isomorphic(make_heisenberg(3, 1), make_extraspecial_plus(3)));
}

TEST_CASE("C_{p^e} x E(p^e)") {
  const Group c = make_cpe_times_e(3, 1, test::big_limits());
  CHECK(c.order() == 81);
  CHECK(rank(c) == 3);
  CHECK(!is_gk_type(c));
  CHECK(is_isomorphic(c, direct_product(make_cyclic(3), make_heisenberg(3, 1))));
  CHECK(make_cpe_times_e(5, 1, test::big_limits()).order() == 625);
}
