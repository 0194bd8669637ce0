#include "pgk/stems.hpp"

#include <algorithm>
#include <numeric>

#include "pgk/extensions.hpp"
#include "pgk/gk.hpp"
#include "pgk/search.hpp"
#include "pgk/subgroups.hpp"

namespace pgk {

ElementSet z_power_subgroup(const Group& h_group, unsigned i) {
  const ElementSet z = center(h_group);
  if (h_group.order() == 1) return z;
  const unsigned p = *h_group.prime();
  return power_subgroup_of(h_group, z, ipow(p, i));
}

std::vector<std::uint64_t> unit_generators(unsigned p, unsigned e) {
  if (p == 2) {
    const std::uint64_t m = ipow(2, e);
    if (e >= 3) return {m - 1, 5};
    if (e == 2) return {3};
    return {};
  }
  if (e == 0) return {};
  const std::uint64_t m = ipow(p, e);
  const std::uint64_t phi = m / p * (p - 1);
  const auto factors = prime_factors(phi);
  for (std::uint64_t r = 2; r < m; ++r) {
    if (r % p == 0) continue;
    bool primitive = true;
    for (unsigned q : factors) {
      std::uint64_t x = 1, b = r, k = phi / q;
      while (k > 0) {
        if (k & 1) x = x * b % m;
        b = b * b % m;
        k >>= 1;
      }
      if (x == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) return {r};
  }
  return {};
}

namespace {

OrbitPartition orbits_impl(const Group& h_group, unsigned level, const AutGroup* given) {
  OrbitPartition out;
  out.level = level;
  const Group& H = h_group;
  const std::uint64_t exp_h = exponent(H);
  const ElementSet z = center(H);
  if (exponent_of(H, z) != exp_h) throw Error(ErrorCode::criterion_violated, "exp(Z(H)) < exp(H)");
  out.universe = max_order_central(H);
  const auto& universe = out.universe.members;
  const std::size_t u = universe.size();
  std::vector<Elem> local(H.order(), kNoElem);
  for (std::size_t i = 0; i < u; ++i) local[universe[i]] = static_cast<Elem>(i);

  const ElementSet phi = H.order() > 1 ? frattini(H) : trivial_subgroup(H);
  auto make_block = [&](std::vector<Elem> members) {
    OrbitBlock b;
    std::sort(members.begin(), members.end());
    b.members = std::move(members);
    b.representative = b.members.front();
    for (Elem x : b.members)
      if (phi.contains(x)) ++b.frattini_members;
    return b;
  };

  if (level == 0 || u <= 1) {
    out.blocks.push_back(make_block(universe));
    return out;
  }

  const unsigned p = *H.prime();
  const unsigned e = log_base(exp_h, p);
  std::vector<std::vector<Elem>> perms;
  auto add_perm = [&](auto&& f) {
    std::vector<Elem> perm(u);
    for (std::size_t i = 0; i < u; ++i) perm[i] = local[f(universe[i])];
    perms.push_back(std::move(perm));
  };

  AutGroup own;
  if (!given) {
    own = automorphism_group(H);
    given = &own;
  }
  const AutGroup& aut = *given;
  out.exact = aut.complete;
  for (const auto& a : aut.generators) add_perm([&](Elem x) { return a[x]; });
  for (std::uint64_t k : unit_generators(p, e))
    add_perm([&](Elem x) { return H.pow(x, static_cast<long long>(k)); });
  const ElementSet zp = z_power_subgroup(H, level);
  ClosureBuilder zb(H);
  for (Elem y : zp.members) zb.add(y);
  for (Elem y : zb.gens()) add_perm([&](Elem x) { return H.mul(x, y); });

  for (auto& block : orbits_of(u, perms)) {
    std::vector<Elem> members;
    for (Elem i : block) members.push_back(universe[i]);
    out.blocks.push_back(make_block(std::move(members)));
  }
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](const OrbitBlock& a, const OrbitBlock& b) { return a.representative < b.representative; });
  return out;
}

}  // namespace

OrbitPartition a_l_orbits(const Group& h_group, unsigned level, const Limits& limits) {
  (void)limits;
  return orbits_impl(h_group, level, nullptr);
}

OrbitPartition a_l_orbits(const Group& h_group, unsigned level, const AutGroup& aut) {
  return orbits_impl(h_group, level, &aut);
}

StemAnalysis stem_analysis(const Group& root, const Limits& limits) {
  if (root.order() > 1 && is_gk_type(root)) {
    throw Error(ErrorCode::is_gk_type, "stem analysis needs a root that is not of GK type");
  }
  StemAnalysis out;
  out.root = root;
  if (root.order() == 1) {
    out.prime = root.prime_hint().value_or(0);
    out.e = 0;
    out.stem_count = 1;
    return out;
  }
  out.prime = *root.prime();
  const std::uint64_t exp_r = exponent(root);
  out.e = log_base(exp_r, out.prime);
  if (exponent_of(root, center(root)) != exp_r) return out;

  (void)limits;
  const AutGroup aut = automorphism_group(root);
  OrbitPartition prev = a_l_orbits(root, 0, aut);
  auto refine = [&](const OrbitPartition& parent, const OrbitPartition& child, unsigned parent_level,
                    bool record) {
    bool refined = false;
    for (std::size_t i = 0; i < parent.blocks.size(); ++i) {
      BranchRecord rec{parent_level, i, {}};
      const auto& pm = parent.blocks[i].members;
      for (std::size_t j = 0; j < child.blocks.size(); ++j)
        if (std::binary_search(pm.begin(), pm.end(), child.blocks[j].representative)) rec.child_blocks.push_back(j);
      if (rec.child_blocks.size() > 1) {
        refined = true;
        if (record) out.branching.push_back(std::move(rec));
      }
    }
    return refined;
  };
  for (unsigned l = 1; l <= out.e; ++l) {
    OrbitPartition cur = a_l_orbits(root, l, aut);
    out.exact = out.exact && cur.exact;
    refine(prev, cur, l - 1, true);
    out.partitions.push_back(cur);
    prev = std::move(cur);
  }
  OrbitPartition beyond = a_l_orbits(root, out.e + 1, aut);
  out.stable_beyond_e = !refine(prev, beyond, out.e, false) && beyond.blocks.size() == prev.blocks.size();
  out.stem_count = prev.blocks.size();
  return out;
}

Group stem_vertex(const Group& root, const OrbitBlock& block, unsigned level, const Limits& limits) {
  return trivial_gk_extension(root, block.representative, level, limits);
}

}  // namespace pgk
