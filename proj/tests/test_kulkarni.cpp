#include "doctest.h"
#include "helpers.hpp"
#include "oracles.hpp"
#include "pgk/gk.hpp"
#include "pgk/kulkarni.hpp"
#include "pgk/search.hpp"

using namespace pgk;

namespace {

std::vector<Group> small_groups(std::size_t max_order) {
  std::vector<Group> out;
  const auto layers = enumerate_small_groups(max_order);
  for (std::size_t n = 1; n <= max_order; ++n) out.insert(out.end(), layers[n].begin(), layers[n].end());
  return out;
}

// groups for the transfer-kernel checks: small groups, 2-groups, and 2-groups times C3
std::vector<Group> kernel_suite() {
  std::vector<Group> out = small_groups(24);
  for (const auto& g : test::all_groups(test::catalog(2, 32))) {
    out.push_back(g);
    if (g.order() <= 16) out.push_back(direct_product(g, make_cyclic(3)));
  }
  return out;
}

}  // namespace

TEST_CASE("gamma and the invariant") {
  CHECK(gamma(make_cyclic(9)) == 1);
  CHECK(gamma(make_extraspecial_plus(3)) == 1);
  CHECK(gamma(make_quaternion(1)) == 2);
  CHECK(gamma(make_cyclic(4)) == 1);
  CHECK(gamma(Group()) == 1);
  CHECK(kulkarni_invariant(make_cyclic(12)) == 1);
  CHECK(kulkarni_invariant(make_elementary(2, 3)) == 2);
  CHECK(kulkarni_invariant(make_quaternion(1)) == 1);
  CHECK(kulkarni_invariant(make_extraspecial_plus(3)) == 9);
  const KulkarniReport r = kulkarni_report(direct_product(make_elementary(2, 2), make_elementary(3, 2)));
  CHECK(r.gamma == 2);
  CHECK(r.invariant == 3);
  REQUIRE(r.factors.size() == 2);
  CHECK(r.factors[0].prime == 2);
  CHECK(r.factors[0].sylow_order == 4);
  CHECK(r.factors[1].sylow_exponent == 3);
  for (std::size_t n = 1; n <= 40; ++n) CHECK(kulkarni_invariant(make_cyclic(n)) == 1);
}

TEST_CASE("invariant over the catalogs") {
  std::vector<Group> groups = small_groups(24);
  for (const auto& g : test::all_groups(test::catalog(2, 32))) groups.push_back(g);
  for (const auto& g : test::all_groups(test::catalog(3, 81))) groups.push_back(g);
  for (const auto& g : groups) {
    const KulkarniReport r = kulkarni_report(g);
    std::uint64_t prod = 1;
    for (const auto& f : r.factors) {
      CHECK(f.sylow_order % f.sylow_exponent == 0);
      prod *= f.sylow_order / f.sylow_exponent;
    }
    CHECK(prod % r.gamma == 0);
    CHECK(r.invariant * r.gamma == prod);
    CHECK(check_2perfect_corollary(g));
  }
}

TEST_CASE("two-maximal kernel examples") {
  const Group c4 = make_cyclic(4);
  CHECK(two_maximal_kernel(c4).members == std::vector<Elem>{0, test::el(c4, "a^2")});
  const ElementSet k12 = two_maximal_kernel(make_cyclic(12));
  CHECK(k12.size() == 6);
  CHECK(is_isomorphic(restrict_to(make_cyclic(12), k12).group, make_cyclic(6)));
  const Group s3 = make_dihedral(3);
  const ElementSet ks = two_maximal_kernel(s3);
  CHECK(ks.size() == 3);
  for (Elem x : ks.members) CHECK(s3.elem_order(x) != 2);
  try {
    two_maximal_kernel(make_cyclic(9));
    FAIL("odd order accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_applicable);
  }
  CHECK_THROWS_AS(two_maximal_kernel(make_a4()), Error);
  CHECK_THROWS_AS(two_maximal_kernel(make_quaternion(1)), Error);
}

TEST_CASE("two-maximal kernel is normal of index 2") {
  for (const auto& g : kernel_suite()) {
    if (g.order() % 2 != 0) continue;
    const Group s = restrict_to(g, sylow_subgroup(g, 2)).group;
    if (!is_gk_type(s)) {
      CHECK_THROWS_AS(two_maximal_kernel(g), Error);
      CHECK(gamma(g) == 2);
      continue;
    }
    CHECK(gamma(g) == 1);
    const ElementSet k = two_maximal_kernel(g);
    CHECK(k.size() * 2 == g.order());
    CHECK(is_subgroup(k));
    CHECK(is_normal(g, k));
    // G then is not 2-perfect
    CHECK(!is_two_perfect(g));
  }
}

TEST_CASE("2-perfect corollary") {
  CHECK(is_two_perfect(make_a4()));
  CHECK(check_2perfect_corollary(make_a4()));
  CHECK(!is_two_perfect(make_dihedral(3)));
  CHECK(check_2perfect_corollary(make_dihedral(3)));
  CHECK(is_two_perfect(make_cyclic(9)));
  CHECK(!is_two_perfect(make_cyclic(2)));
}

TEST_CASE("Riemann-Hurwitz") {
  CHECK(riemann_hurwitz_holds(2, 2, Signature{0, {2, 2, 2, 2, 2, 2}}));
  CHECK(riemann_hurwitz_holds(2, 2, Signature{1, {2, 2}}));
  CHECK(riemann_hurwitz_holds(3, 2, Signature{0, {3, 3, 3, 3}}));
  CHECK(!riemann_hurwitz_holds(3, 2, Signature{0, {3, 3, 3}}));
  CHECK(riemann_hurwitz_holds(8, 2, Signature{0, {4, 4, 4}}));
  CHECK(!riemann_hurwitz_holds(8, 3, Signature{0, {4, 4, 4}}));
}

TEST_CASE("genus search examples") {
  const Group c2 = make_cyclic(2);
  const GenusResult r = genus_search(c2, 2);
  REQUIRE(r.signature);
  CHECK(*r.signature == Signature{1, {2, 2}});
  CHECK(validate_witness(c2, 2, *r.signature, *r.vector));
  // the six-involution witness is valid too
  const Elem t = test::el(c2, "a");
  CHECK(validate_witness(c2, 2, Signature{0, {2, 2, 2, 2, 2, 2}}, GeneratingVector{{}, {t, t, t, t, t, t}}));
  CHECK(!validate_witness(c2, 2, Signature{0, {2, 2, 2, 2, 2}}, GeneratingVector{{}, {t, t, t, t, t}}));
  GenusLimits only_h0;
  only_h0.max_h = 0;
  const GenusResult r0 = genus_search(c2, 2, only_h0);
  REQUIRE(r0.signature);
  CHECK(*r0.signature == Signature{0, {2, 2, 2, 2, 2, 2}});
  GenusLimits higher;
  higher.min_h = 2;
  CHECK(!genus_search(c2, 2, higher).signature);
  const Group c3 = make_cyclic(3);
  const GenusResult s = genus_search(c3, 2);
  REQUIRE(s.signature);
  CHECK(*s.signature == Signature{0, {3, 3, 3, 3}});
  // genera where the search space is fully covered and empty
  const GenusResult none = genus_search(make_elementary(2, 3), 2);
  CHECK(!none.signature);
  CHECK(none.space_fully_covered);
  GenusLimits tiny;
  tiny.max_nodes = 3;
  try {
    genus_search(make_a4(), 6, tiny);
    FAIL("node budget ignored");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::limits_exceeded);
  }
  CHECK_THROWS_AS(genus_search(make_cyclic(32), 2), Error);
  CHECK_THROWS_AS(genus_search(c2, 1), Error);
}

TEST_CASE("genus witnesses for small groups") {
  for (const auto& g : small_groups(12)) {
    if (g.order() == 1) continue;
    const SpectrumReport rep = spectrum_congruence_check(g, 6);
    CHECK(rep.congruence_holds);
    CHECK(rep.invariant == kulkarni_invariant(g));
    for (std::uint64_t genus = 2; genus <= 6; ++genus) {
      const GenusResult res = genus_search(g, genus);
      if (res.signature) {
        CHECK(validate_witness(g, genus, *res.signature, *res.vector));
        CHECK(test::witness_check(g, genus, *res.signature, *res.vector));
        CHECK(riemann_hurwitz_holds(g.order(), genus, *res.signature));
        CHECK((genus - 1) % rep.invariant == 0);
      }
      const bool found = std::find(rep.found.begin(), rep.found.end(), genus) != rep.found.end();
      CHECK(found == res.signature.has_value());
    }
  }
}

TEST_CASE("spectrum congruence") {
  const SpectrumReport e = spectrum_congruence_check(make_elementary(2, 3), 10);
  CHECK(e.invariant == 2);
  CHECK(e.congruence_holds);
  for (auto g : e.found) CHECK(g % 2 == 1);
  CHECK(!e.found.empty());
  CHECK(spectrum_congruence_check(make_cyclic(5), 6).found.size() > 0);
  const SpectrumReport q = spectrum_congruence_check(make_quaternion(1), 10);
  CHECK(q.invariant == 1);
  CHECK(q.congruence_holds);
}
