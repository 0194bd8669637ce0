#include "doctest.h"
#include "helpers.hpp"
#include "pgk/gk.hpp"
#include "pgk/json_io.hpp"

using namespace pgk;
using pgk::test::el;

namespace {

// partitions of n into parts, non-decreasing
void partitions(unsigned n, unsigned min_part, std::vector<unsigned>& cur,
                std::vector<std::vector<unsigned>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (unsigned k = min_part; k <= n; ++k) {
    cur.push_back(k);
    partitions(n - k, k, cur, out);
    cur.pop_back();
  }
}

}  // namespace

TEST_CASE("kernel set examples") {
  const Group d8 = make_dihedral2(1);
  const ElementSet kd = kernel_set(d8);
  CHECK(kd.size() == 6);
  CHECK(kd.is_subgroup == Tri::no);
  const Group q8 = make_quaternion(1);
  const ElementSet kq = kernel_set(q8);
  CHECK(kq.size() == 2);
  CHECK(kq.is_subgroup == Tri::yes);
  CHECK(gk_failure(q8) == GkFailure::subgroup_not_maximal);
  CHECK(gk_failure(d8) == GkFailure::not_a_subgroup);
  const ElementSet k13 = kernel_set(make_sg16_13());
  CHECK(k13.size() == 8);
  CHECK(k13.is_subgroup == Tri::no);
  try {
    kernel_set(Group());
    FAIL("trivial group accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::trivial_group);
  }
}

TEST_CASE("gk reports") {
  for (unsigned p : {2u, 3u, 5u})
    for (unsigned l = 1; l <= 3 && ipow(p, l) <= 125; ++l) {
      const GkReport r = gk_report(make_cyclic(ipow(p, l)));
      CHECK(r.is_gk);
      CHECK(r.level == l);
      CHECK(r.root.order() == 1);
      CHECK(r.deficiency == 0);
    }
  const GkReport a = gk_report(make_abelian(2, {1, 2}));
  CHECK(a.is_gk);
  CHECK(a.level == 1);
  CHECK(abelian_invariants_of(a.group, a.kernel) == AbelianInvariants{2, {1, 1}});
  CHECK(abelian_invariants(a.root) == AbelianInvariants{2, {1, 1}});
  const GkReport d = gk_report(make_dihedral2(1));
  CHECK(!d.is_gk);
  CHECK(d.level == 0);
  CHECK(d.failure == GkFailure::not_a_subgroup);
  const GkReport t = gk_report(Group().with_prime(2));
  CHECK(!t.is_gk);
  CHECK(t.failure == GkFailure::trivial_group);
  CHECK(t.level == 0);
  CHECK(t.rank == 0);
  CHECK_THROWS_AS(gk_report(make_dihedral(3)), Error);
}

TEST_CASE("report JSON and text") {
  const GkReport q = gk_report(make_quaternion(1));
  const Json j = report_to_json(q);
  CHECK(j["is_gk"] == false);
  CHECK(j["failure"] == "subgroup-not-maximal");
  CHECK(j["kernel_size"] == 2);
  CHECK(j["flags"]["mep"] == true);
  CHECK(report_to_text(q).rfind("not GK: kernel is non-maximal subgroup", 0) == 0);
  const Json c = report_to_json(gk_report(make_cyclic(8)));
  CHECK(c["series_orders"] == Json::array({8, 4, 2, 1}));
}

TEST_CASE("cyclic deficiency") {
  CHECK(cyclic_deficiency(make_cyclic(27)) == 0);
  CHECK(cyclic_deficiency(make_quaternion(1)) == 1);
  CHECK(cyclic_deficiency(make_modular(3, 2)) == 1);
  CHECK(cyclic_deficiency(make_twisted_dihedral(3)) == 1);
  for (const auto& g : test::all_groups(test::catalog(2, 32)))
    CHECK((cyclic_deficiency(g) == 0) == (exponent(g) == g.order()));
}

TEST_CASE("class predicate examples") {
  CHECK(is_powerful(make_abelian(3, {1, 2})));
  CHECK(!is_powerful(make_cp3_nonsplit(3)));
  CHECK(!is_powerful(make_cp3_nonsplit(5, test::big_limits())));
  CHECK(!is_powerful(make_cp3_nonsplit(2)));
  CHECK(make_cp3_nonsplit(2).order() == 16);
  CHECK(is_gk_type(make_cp3_nonsplit(3)));
  CHECK(has_mep(make_cp3_nonsplit(3)));
  for (unsigned p : {3u, 5u}) {
    const Group e = make_extraspecial_plus(p);
    CHECK(!has_mep(e));
    CHECK(kernel_set(e).size() == 1);
    CHECK(is_regular(e));
  }
  CHECK(is_regular(make_abelian(2, {1, 3})));
  CHECK(!is_regular(make_dihedral2(1)));
  CHECK(!is_regular(make_quaternion(1)));
  CHECK_THROWS_AS(has_mep(Group()), Error);
  Limits tight;
  tight.regular_check_bound = 16;
  CHECK_THROWS_AS(is_regular(make_dihedral2(3), tight), Error);
  CHECK(is_regular(make_cyclic(32), tight));
}

TEST_CASE("class lattice over the catalogs") {
  std::vector<Group> groups = test::all_groups(test::catalog(2, 32));
  for (const auto& g : test::all_groups(test::catalog(3, 81))) groups.push_back(g);
  for (const auto& g : groups) {
    if (g.order() == 1) continue;
    const bool gk = is_gk_type(g);
    const bool mep = has_mep(g);
    const bool pow = is_powerful(g);
    const bool ab = g.is_abelian();
    const bool reg = is_regular(g);
    if (gk) CHECK(mep);
    if (pow) CHECK(mep);
    if (ab) {
      CHECK(pow);
      CHECK(reg);
    }
    if (*g.prime() == 2) CHECK(reg == ab);
  }
}

TEST_CASE("gk series structure") {
  std::vector<Group> groups = test::all_groups(test::catalog(2, 32));
  for (const auto& g : test::all_groups(test::catalog(3, 81))) groups.push_back(g);
  groups.push_back(make_semidihedral(3));
  groups.push_back(make_twisted_dihedral(3));
  groups.push_back(make_modular(3, 2));
  for (const auto& g : groups) {
    if (g.order() == 1 || !is_gk_type(g)) continue;
    const unsigned p = *g.prime();
    const GkReport r = gk_report(g, {}, GkOptions{false});
    REQUIRE(r.series.size() == r.level + 1);
    CHECK(r.kernel.size() * p == g.order());
    CHECK(exponent_of(g, r.kernel) * p == exponent(g));
    for (std::size_t i = 0; i + 1 < r.series.size(); ++i) CHECK(r.series[i].size() == r.series[i + 1].size() * p);
    CHECK(!is_gk_type(r.root));
    // deficiency constant along the series
    for (const auto& s : r.series) {
      const unsigned d = log_base(s.size(), p) - log_base(exponent_of(g, s), p);
      CHECK(d == r.deficiency);
    }
    // rank chain 1 <= r(G) <= r(K) <= ... <= r(K^{l-1}) <= r(root) + 1
    CHECK(r.series_ranks.front() >= 1);
    for (std::size_t i = 0; i + 1 < r.level; ++i) CHECK(r.series_ranks[i] <= r.series_ranks[i + 1]);
    CHECK(r.series_ranks[r.level - 1] <= rank(r.root) + 1);
    CHECK(r.series_ranks[r.level] == rank(r.root));
    // Frattini inside the kernel, and not inside the second kernel
    const ElementSet phi = frattini(g);
    CHECK(intersection(phi, r.kernel).size() == phi.size());
    if (r.level >= 2) CHECK(intersection(phi, r.series[2]).size() < phi.size());
    // powers of an element outside the kernel walk down the series
    Elem x = 0;
    for (Elem y = 0; y < g.order(); ++y)
      if (!r.kernel.contains(y)) {
        x = y;
        break;
      }
    for (unsigned i = 0; i < r.level; ++i) {
      const Elem xi = g.pow(x, ipow(p, i));
      CHECK(r.series[i].contains(xi));
      CHECK(!r.series[i + 1].contains(xi));
    }
  }
}

TEST_CASE("abelian groups follow the closed form") {
  const Limits lim = test::big_limits();
  for (auto [p, max_n] : std::vector<std::pair<unsigned, unsigned>>{{2, 7}, {3, 7}, {5, 4}}) {
    for (unsigned n = 1; n <= max_n; ++n) {
      std::vector<std::vector<unsigned>> parts;
      std::vector<unsigned> cur;
      partitions(n, 1, cur, parts);
      for (const auto& e : parts) {
        const Group g = make_abelian(p, e, lim);
        const GkReport r = gk_report(g, lim, GkOptions{false});
        const std::size_t k = e.size();
        const bool expect_gk = k == 1 || e[k - 2] < e[k - 1];
        CHECK(r.is_gk == expect_gk);
        // kernel invariants: the top block e_s..e_r drops by one
        std::size_t s = k - 1;
        while (s > 0 && e[s - 1] == e[k - 1]) --s;
        std::vector<unsigned> kinv(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(s));
        for (std::size_t i = s; i < k; ++i)
          if (e[k - 1] > 1) kinv.push_back(e[k - 1] - 1);
        std::sort(kinv.begin(), kinv.end());
        CHECK(abelian_invariants_of(g, kernel_set(g)).exponents == kinv);
        if (expect_gk) {
          const unsigned level = k == 1 ? e[0] : e[k - 1] - e[k - 2];
          CHECK(r.level == level);
          std::vector<unsigned> root(e.begin(), e.end() - 1);
          if (k >= 2) root.push_back(e[k - 2]);
          CHECK(abelian_invariants(r.root).exponents == root);
          CHECK(rank(r.root) == (k == 1 ? 0 : k));
        }
      }
    }
  }
}
