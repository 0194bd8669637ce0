#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <string>

#include "pgk/families.hpp"
#include "pgk/group.hpp"
#include "pgk/subgroups.hpp"
#include "pgk/tree.hpp"

namespace pgk::test {

inline Elem el(const Group& g, const std::string& label) {
  auto x = g.find_label(label);
  if (!x) throw std::runtime_error("no element labelled " + label);
  return *x;
}

inline Limits big_limits() {
  Limits l;
  l.order_cap = 8192;
  l.automorphism_order_bound = 1024;
  return l;
}

// Catalogs are deterministic and somewhat costly, so build each one once.
inline const Catalog& catalog(unsigned p, std::size_t max_order) {
  static std::map<std::pair<unsigned, std::size_t>, Catalog> cache;
  auto key = std::make_pair(p, max_order);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, enumerate_pgroups(p, max_order)).first;
  return it->second;
}

inline std::vector<Group> all_groups(const Catalog& c) {
  std::vector<Group> out;
  for (const auto& l : c.layers) out.insert(out.end(), l.begin(), l.end());
  return out;
}

// Same group with elements 1..n-1 renamed by a random permutation.
inline Group relabel(const Group& g, std::mt19937& rng) {
  const std::size_t n = g.order();
  std::vector<Elem> perm(n);
  std::iota(perm.begin(), perm.end(), Elem{0});
  std::shuffle(perm.begin() + 1, perm.end(), rng);
  std::vector<std::vector<Elem>> rows(n, std::vector<Elem>(n));
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) rows[perm[a]][perm[b]] = perm[g.mul(a, b)];
  return Group::from_rows(rows);
}

}  // namespace pgk::test
