#include "doctest.h"
#include "dot_parser.hpp"
#include "helpers.hpp"
#include "pgk/gk.hpp"
#include "pgk/search.hpp"
#include "pgk/stems.hpp"

using namespace pgk;

namespace {

std::vector<const TreeVertex*> at_level(const GkTree& t, unsigned l) {
  std::vector<const TreeVertex*> out;
  for (const auto& v : t.vertices)
    if (v.level == l) out.push_back(&v);
  return out;
}

std::vector<Group> non_gk(unsigned p, std::size_t max_order) {
  std::vector<Group> out;
  for (const auto& g : test::all_groups(test::catalog(p, max_order)))
    if (g.order() > 1 && !is_gk_type(g)) out.push_back(g);
  return out;
}

void check_tree_structure(const GkTree& t) {
  const Group& root = t.root;
  const unsigned p = *root.prime_hint();
  const unsigned delta = root.order() == 1 ? 0 : cyclic_deficiency(root);
  REQUIRE(!t.vertices.empty());
  CHECK(!t.vertices[0].parent);
  CHECK(t.vertices[0].level == 0);
  for (std::size_t i = 1; i < t.vertices.size(); ++i) {
    const TreeVertex& v = t.vertices[i];
    REQUIRE(v.parent);
    const TreeVertex& parent = t.vertices[*v.parent];
    CHECK(parent.level + 1 == v.level);
    CHECK(t.vertices[i - 1].level <= v.level);
    CHECK(v.group.order() == parent.group.order() * p);
    const GkReport r = gk_report(v.group, test::big_limits(), GkOptions{false});
    REQUIRE(r.is_gk);
    CHECK(r.level == v.level);
    CHECK(is_isomorphic(restrict_to(v.group, r.kernel).group, parent.group, test::big_limits()));
    CHECK(v.on_stem == (exponent(v.group) == exponent_of(v.group, center(v.group))));
    CHECK(v.height + v.depth == v.level);
    CHECK(r.deficiency == delta);
    // ranks never drop below the kernel's except at the root step, and stay within r(R) + 1
    CHECK(v.rank == rank(v.group));
    CHECK(v.rank <= rank(root) + 1);
    if (v.on_stem && parent.on_stem && parent.level >= 1) CHECK(v.rank == parent.rank);
    if (v.on_stem) CHECK(parent.on_stem);
  }
  // two vertices at the same level are never isomorphic
  for (unsigned l = 1; l <= t.max_level; ++l) {
    const auto lv = at_level(t, l);
    for (std::size_t i = 0; i < lv.size(); ++i)
      for (std::size_t j = i + 1; j < lv.size(); ++j)
        CHECK(!is_isomorphic(lv[i]->group, lv[j]->group, test::big_limits()));
  }
}

}  // namespace

TEST_CASE("p-group catalogs") {
  std::vector<std::size_t> counts;
  for (const auto& l : test::catalog(2, 32).layers) counts.push_back(l.size());
  CHECK(counts == std::vector<std::size_t>{1, 1, 2, 5, 14, 51});
  counts.clear();
  for (const auto& l : test::catalog(3, 81).layers) counts.push_back(l.size());
  CHECK(counts == std::vector<std::size_t>{1, 1, 2, 5, 15});
  counts.clear();
  for (const auto& l : enumerate_pgroups(5, 125).layers) counts.push_back(l.size());
  CHECK(counts == std::vector<std::size_t>{1, 1, 2, 5});
  for (const auto& g : test::catalog(2, 32).layers[4]) CHECK(*g.prime() == 2);
  CHECK_THROWS_AS(enumerate_pgroups(4, 16), Error);
  CHECK_THROWS_AS(enumerate_pgroups(2, 1024), Error);
}

TEST_CASE("small group layers") {
  const auto layers = enumerate_small_groups(24);
  const std::vector<std::size_t> expected{1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15};
  REQUIRE(layers.size() == 25);
  for (std::size_t n = 1; n <= 24; ++n) {
    CHECK(layers[n].size() == expected[n - 1]);
    for (const auto& g : layers[n]) CHECK(g.order() == n);
  }
  // S3, A4 and the dicyclic group of order 12 are present
  auto has = [&](const Group& t) {
    for (const auto& g : layers[t.order()])
      if (is_isomorphic(g, t)) return true;
    return false;
  };
  CHECK(has(make_dihedral(3)));
  CHECK(has(make_a4()));
  CHECK(has(make_dicyclic(3)));
}

TEST_CASE("order 16 classification") {
  const Order16Classification c = classify_order16(test::catalog(2, 16));
  CHECK(c.gk.size() == 5);
  CHECK(c.roots.size() == 5);
  CHECK(c.neither.size() == 4);
  const auto& layer = test::catalog(2, 16).layers[4];
  for (std::size_t i : c.gk) CHECK(is_gk_type(layer[i]));
  for (std::size_t i : c.roots) {
    CHECK(!is_gk_type(layer[i]));
    CHECK(build_tree(layer[i], 1, TreeMode::full).vertices.size() > 1);
  }
  for (std::size_t i : c.neither) {
    CHECK(!is_gk_type(layer[i]));
    CHECK(build_tree(layer[i], 1, TreeMode::full).vertices.size() == 1);
  }
  CHECK_THROWS_AS(classify_order16(test::catalog(2, 8)), Error);
}

TEST_CASE("tree examples") {
  for (unsigned p : {2u, 3u}) {
    const GkTree t = build_tree(Group(), 3, TreeMode::full, {}, p);
    CHECK(t.level_sizes() == std::vector<std::size_t>{1, 1, 1, 1});
    for (unsigned l = 1; l <= 3; ++l) CHECK(is_isomorphic(at_level(t, l)[0]->group, make_cyclic(ipow(p, l))));
    check_tree_structure(t);
  }
  CHECK(build_tree(make_dihedral2(1), 3, TreeMode::full).vertices.size() == 1);
  CHECK(build_tree(make_quaternion(1), 3, TreeMode::full).vertices.size() == 1);
  for (const Group& r : {direct_product(make_dihedral2(1), make_cyclic(2)),
                         direct_product(make_quaternion(1), make_cyclic(2))}) {
    const GkTree t = build_tree(r, 2, TreeMode::full);
    CHECK(t.vertices.size() == 2);
    check_tree_structure(t);
  }
  // C3 x C3: stem C3 x C_{3^{l+1}} and one bush vertex per level
  const Group c33 = make_elementary(3, 2);
  const GkTree t3 = build_tree(c33, 3, TreeMode::full);
  CHECK(t3.level_sizes() == std::vector<std::size_t>{1, 2, 2, 2});
  check_tree_structure(t3);
  for (unsigned l = 1; l <= 3; ++l) {
    std::size_t stem = 0, bush = 0;
    for (const auto* v : at_level(t3, l)) {
      if (v->on_stem) {
        ++stem;
        CHECK(abelian_invariants(v->group) == AbelianInvariants{3, {1, l + 1}});
      } else {
        ++bush;
        CHECK(is_isomorphic(v->group, make_modular(3, l)));
        CHECK(t3.vertices[*v->parent].on_stem);
      }
    }
    CHECK(stem == 1);
    CHECK(bush == 1);
  }
  // C2 x C2: level 1 is a single vertex, then the stem and one twisted dihedral branch
  const GkTree t2 = build_tree(make_elementary(2, 2), 3, TreeMode::full);
  CHECK(t2.level_sizes() == std::vector<std::size_t>{1, 1, 2, 2});
  check_tree_structure(t2);
  for (unsigned l = 2; l <= 3; ++l)
    for (const auto* v : at_level(t2, l))
      if (!v->on_stem) CHECK(is_isomorphic(v->group, make_twisted_dihedral(l)));
  // errors
  try {
    build_tree(make_cyclic(4), 2, TreeMode::full);
    FAIL("GK root accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::root_is_gk_type);
  }
  CHECK_THROWS_AS(build_tree(make_sg64_198(), 4, TreeMode::full), Error);
  CHECK_THROWS_AS(build_tree(Group(), 2, TreeMode::full), Error);
}

TEST_CASE("full trees agree with the stem analysis") {
  std::vector<Group> roots = non_gk(2, 16);
  for (const auto& g : non_gk(3, 27)) roots.push_back(g);
  for (const auto& r : roots) {
    const GkTree t = build_tree(r, 2, TreeMode::full);
    check_tree_structure(t);
    const StemAnalysis s = stem_analysis(r);
    const GkTree st = build_tree(r, 2, TreeMode::stems_only);
    for (unsigned l = 1; l <= 2; ++l) {
      std::vector<Group> full_stem;
      for (const auto* v : at_level(t, l))
        if (v->on_stem) full_stem.push_back(v->group);
      std::vector<Group> only;
      for (const auto* v : at_level(st, l)) {
        CHECK(v->on_stem);
        CHECK(v->orbit_label);
        only.push_back(v->group);
      }
      const std::size_t expected = s.stem_count == 0 ? 0 : s.partitions[std::min<unsigned>(l, s.e) - 1].blocks.size();
      CHECK(only.size() == expected);
      REQUIRE(full_stem.size() == only.size());
      for (const auto& a : only) {
        std::size_t matches = 0;
        for (const auto& b : full_stem) matches += is_isomorphic(a, b);
        CHECK(matches == 1);
      }
    }
    // stem vertices in full mode carry the label of their orbit
    for (const auto& v : t.vertices)
      if (v.level > 0) CHECK(v.orbit_label.has_value() == v.on_stem);
  }
}

TEST_CASE("finite tree criterion on small roots") {
  std::vector<Group> roots = non_gk(2, 16);
  for (const auto& g : non_gk(3, 27)) roots.push_back(g);
  for (const auto& r : roots) {
    const bool infinite = exponent(r) == exponent_of(r, center(r));
    const GkTree t = build_tree(r, 3, TreeMode::full, test::big_limits());
    CHECK((t.level_sizes()[3] > 0) == infinite);
  }
}

TEST_CASE("DOT output") {
  const GkTree t = build_tree(make_elementary(2, 2), 3, TreeMode::full);
  const std::string dot = to_dot(t);
  CHECK(dot == to_dot(build_tree(make_elementary(2, 2), 3, TreeMode::full)));
  const test::DotGraph g = test::parse_dot(dot);
  CHECK(g.nodes.size() == t.vertices.size());
  CHECK(g.edges.size() == t.vertices.size() - 1);
  for (std::size_t i = 0; i < t.vertices.size(); ++i) {
    const std::string id = "v" + std::to_string(i);
    REQUIRE(g.nodes.count(id) == 1);
    const auto& a = g.nodes.at(id);
    CHECK(a.at("label").rfind(std::to_string(t.vertices[i].group.order()), 0) == 0);
    CHECK((a.count("style") == 1) == (t.vertices[i].rank == t.max_rank()));
  }
  for (const auto& [from, to] : g.edges) {
    const std::size_t child = std::stoul(from.substr(1));
    CHECK("v" + std::to_string(*t.vertices[child].parent) == to);
  }
  // ranks differ in the C3 x E(3) stems-only tree, so both shapes appear
  const GkTree c = build_tree(make_cpe_times_e(3, 1, test::big_limits()), 1, TreeMode::stems_only, test::big_limits());
  const test::DotGraph cg = test::parse_dot(to_dot(c));
  std::size_t filled = 0;
  for (const auto& [id, a] : cg.nodes) filled += a.count("style");
  CHECK(filled >= 1);
  CHECK(filled < cg.nodes.size());
  CHECK_THROWS(test::parse_dot("digraph { a -> ; }"));
  CHECK_THROWS(test::parse_dot("graph { a }"));
}
