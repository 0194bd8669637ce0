#include "pgk/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pgk/subgroups.hpp"

namespace pgk {

namespace detail {

std::vector<ElementInvariant> compute_invariants(const Group& g) {
  const std::size_t n = g.order();
  std::vector<ElementInvariant> out(n);
  if (n == 1) {
    out[0] = ElementInvariant{1, 1, 1, 1, true, true, true, 0};
    return out;
  }
  const unsigned q = prime_factors(n).front();
  const ElementSet der = derived_subgroup(g, 1);
  const ElementSet pw = power_subgroup(g, q);
  const auto dm = der.mask();
  const auto pm = pw.mask();
  std::vector<Elem> qpow(n);
  std::vector<std::uint32_t> roots(n, 0);
  for (Elem x = 0; x < n; ++x) {
    qpow[x] = g.pow(x, q);
    ++roots[qpow[x]];
  }
  // characteristic subgroups, each contributing one bit
  std::vector<std::vector<char>> chars;
  auto add_char = [&](std::vector<char> m) {
    if (chars.size() < 64) chars.push_back(std::move(m));
  };
  for (std::uint64_t k = q; chars.size() < 64; k *= q) {
    const ElementSet pk = power_subgroup(g, k);
    add_char(pk.mask());
    add_char(join(g, pk, der).mask());
    if (pk.size() == 1 || k > n) break;
  }
  const auto gens = g.generators();
  std::vector<char> zi(n, 0);
  zi[0] = 1;
  for (std::size_t step = 0; step < n && chars.size() < 64; ++step) {
    std::vector<char> next(n, 0);
    std::size_t count = 0;
    for (Elem x = 0; x < n; ++x) {
      bool in = true;
      for (Elem y : gens)
        if (!zi[g.commutator(x, y)]) {
          in = false;
          break;
        }
      next[x] = in;
      count += in;
    }
    if (next == zi) break;
    zi = std::move(next);
    add_char(zi);
    if (count == n) break;
  }
  for (std::size_t i = 2; chars.size() < 64; ++i) {
    const ElementSet li = lower_central(g, i);
    add_char(li.mask());
    if (li.size() == 1 || i > 64) break;
  }
  for (Elem x = 0; x < n; ++x) {
    std::uint32_t c = 0;
    for (Elem y = 0; y < n; ++y)
      if (g.mul(x, y) == g.mul(y, x)) ++c;
    ElementInvariant& v = out[x];
    v.order = g.elem_order(x);
    v.centralizer = c;
    v.roots = roots[x];
    v.power_order = g.elem_order(qpow[x]);
    v.central = c == n;
    v.in_derived = dm[x] != 0;
    v.in_power = pm[x] != 0;
    for (std::size_t i = 0; i < chars.size(); ++i)
      if (chars[i][x]) v.layers |= std::uint64_t{1} << i;
  }
  return out;
}

Fingerprint compute_fingerprint(const Group& g) {
  Fingerprint f;
  f.order = g.order();
  f.center = center(g).size();
  const ElementSet der = derived_subgroup(g, 1);
  f.derived = der.size();
  f.derived_length = derived_length(g);
  std::map<ElementInvariant, std::uint32_t> counts;
  for (const auto& v : g.invariants()) ++counts[v];
  f.classes.assign(counts.begin(), counts.end());
  const Quotient q = quotient(g, der);
  for (Elem x = 0; x < q.group.order(); ++x) f.abelianization_orders.push_back(q.group.elem_order(x));
  std::sort(f.abelianization_orders.begin(), f.abelianization_orders.end());
  return f;
}

}  // namespace detail

namespace {

std::map<ElementInvariant, std::uint32_t> class_sizes(const Group& g) {
  std::map<ElementInvariant, std::uint32_t> counts;
  for (const auto& v : g.invariants()) ++counts[v];
  return counts;
}

// Backtracking over images of a fixed generating sequence. The partial map
// is defined exactly on the subgroup generated by the assigned prefix.
class HomSearch {
 public:
  HomSearch(const Group& a, const Group& b, std::vector<Elem> base,
            std::vector<std::vector<Elem>> candidates)
      : a_(a), b_(b), base_(std::move(base)), cand_(std::move(candidates)),
        img_(a.order(), kNoElem), used_(b.order(), 0), gen_img_(base_.size(), kNoElem),
        cls_a_(a.order()), cls_b_(b.order()) {
    // an isomorphism preserves invariants, so every assignment must match
    std::map<ElementInvariant, std::uint32_t> ids;
    const auto ia = a.invariants();
    const auto ib = b.invariants();
    for (Elem x = 0; x < a.order(); ++x) cls_a_[x] = ids.emplace(ia[x], ids.size()).first->second;
    for (Elem x = 0; x < b.order(); ++x) cls_b_[x] = ids.emplace(ib[x], ids.size()).first->second;
    img_[0] = 0;
    used_[0] = 1;
    dom_.push_back(0);
  }

  std::size_t depth() const { return base_.size(); }
  const std::vector<Elem>& images() const { return img_; }
  std::uint64_t nodes() const { return nodes_; }

  // Assign base_[k] -> b; on failure the state is rolled back.
  bool extend(std::size_t k, Elem b) {
    ++nodes_;
    marks_.push_back(dom_.size());
    gen_img_[k] = b;
    const std::size_t mark = dom_.size();
    const Elem ak = base_[k];
    bool ok = true;
    for (std::size_t i = 0; i < mark && ok; ++i) {
      const Elem x = dom_[i];
      ok = assign(a_.mul(x, ak), b_.mul(img_[x], b));
    }
    for (std::size_t i = mark; i < dom_.size() && ok; ++i) {
      const Elem x = dom_[i];
      const Elem ix = img_[x];
      for (std::size_t j = 0; j <= k; ++j) {
        if (!assign(a_.mul(x, base_[j]), b_.mul(ix, gen_img_[j]))) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) rollback();
    return ok;
  }

  void rollback() {
    const std::size_t mark = marks_.back();
    marks_.pop_back();
    for (std::size_t i = mark; i < dom_.size(); ++i) {
      used_[img_[dom_[i]]] = 0;
      img_[dom_[i]] = kNoElem;
    }
    dom_.resize(mark);
  }

  // Depth-first over levels k..depth-1. `leaf` returns false to stop.
  // Returns false when stopped (by the visitor or the node budget).
  bool dfs(std::size_t k, const std::function<bool()>& leaf, std::uint64_t budget) {
    if (k == base_.size()) return leaf();
    for (Elem b : cand_[k]) {
      if (used_[b]) continue;
      if (nodes_ >= budget) {
        exhausted_ = true;
        return false;
      }
      if (!extend(k, b)) continue;
      const bool go = dfs(k + 1, leaf, budget);
      rollback();
      if (!go) return false;
    }
    return true;
  }

  bool exhausted() const { return exhausted_; }

 private:
  bool assign(Elem y, Elem t) {
    if (img_[y] == kNoElem) {
      if (used_[t] || cls_a_[y] != cls_b_[t]) return false;
      img_[y] = t;
      used_[t] = 1;
      dom_.push_back(y);
      return true;
    }
    return img_[y] == t;
  }

  const Group& a_;
  const Group& b_;
  std::vector<Elem> base_;
  std::vector<std::vector<Elem>> cand_;
  std::vector<Elem> img_;
  std::vector<char> used_;
  std::vector<Elem> gen_img_;
  std::vector<Elem> dom_;
  std::vector<std::uint32_t> cls_a_;
  std::vector<std::uint32_t> cls_b_;
  std::vector<std::size_t> marks_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

std::vector<std::vector<Elem>> candidates_for(const Group& a, const Group& b,
                                              const std::vector<Elem>& base) {
  const auto ia = a.invariants();
  const auto ib = b.invariants();
  std::vector<std::vector<Elem>> cand(base.size());
  for (std::size_t k = 0; k < base.size(); ++k)
    for (Elem y = 0; y < b.order(); ++y)
      if (ib[y] == ia[base[k]]) cand[k].push_back(y);
  return cand;
}

}  // namespace

std::vector<Elem> search_base(const Group& g) {
  const std::size_t n = g.order();
  if (n == 1) return {};
  const auto sizes = class_sizes(g);
  const auto inv = g.invariants();
  auto weight = [&](Elem x) { return sizes.at(inv[x]); };
  std::vector<Elem> chosen;
  if (g.prime()) {
    ClosureBuilder c(g);
    for (Elem x : frattini(g).members) c.add(x);
    while (c.size() < n) {
      Elem best = kNoElem;
      for (Elem x = 1; x < n; ++x) {
        if (c.contains(x)) continue;
        if (best == kNoElem || weight(x) < weight(best)) best = x;
      }
      chosen.push_back(best);
      c.add(best);
    }
    return chosen;
  }
  ClosureBuilder c(g);
  while (c.size() < n) {
    Elem best = kNoElem;
    for (Elem x = 1; x < n; ++x) {
      if (c.contains(x)) continue;
      if (best == kNoElem || weight(x) < weight(best)) best = x;
    }
    chosen.push_back(best);
    c.add(best);
  }
  for (std::size_t i = chosen.size(); i-- > 0;) {
    std::vector<Elem> rest = chosen;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    if (subgroup_closure(g, rest).size() == n) chosen = std::move(rest);
  }
  return chosen;
}

std::optional<std::vector<Elem>> extend_to_hom(const Group& src, std::span<const Elem> gens,
                                               const Group& tgt, std::span<const Elem> images) {
  const std::size_t n = src.order();
  std::vector<Elem> img(n, kNoElem);
  img[0] = 0;
  std::vector<Elem> order{0};
  for (std::size_t i = 0; i < order.size(); ++i) {
    const Elem x = order[i];
    for (std::size_t j = 0; j < gens.size(); ++j) {
      const Elem y = src.mul(x, gens[j]);
      const Elem t = tgt.mul(img[x], images[j]);
      if (img[y] == kNoElem) {
        img[y] = t;
        order.push_back(y);
      } else if (img[y] != t) {
        return std::nullopt;
      }
    }
  }
  if (order.size() != n) return std::nullopt;  // gens do not generate
  return img;
}

std::uint64_t AutGroup::order() const {
  std::uint64_t r = 1;
  for (auto l : orbit_lengths) r *= l;
  return r;
}

std::vector<std::vector<Elem>> orbits_of(std::size_t n, const std::vector<std::vector<Elem>>& perms) {
  std::vector<Elem> parent(n);
  std::iota(parent.begin(), parent.end(), Elem{0});
  auto find = [&](Elem x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  for (const auto& p : perms)
    for (Elem x = 0; x < n; ++x) {
      Elem a = find(x), b = find(p[x]);
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::map<Elem, std::vector<Elem>> blocks;
  for (Elem x = 0; x < n; ++x) blocks[find(x)].push_back(x);
  std::vector<std::vector<Elem>> out;
  for (auto& [root, b] : blocks) out.push_back(std::move(b));
  return out;
}

AutGroup automorphism_group(const Group& g, const SearchBudget& budget) {
  AutGroup out;
  out.group = g;
  out.base = search_base(g);
  const std::size_t d = out.base.size();
  out.orbit_lengths.assign(d, 1);
  if (d == 0) return out;
  const auto cand = candidates_for(g, g, out.base);
  const std::size_t n = g.order();

  for (std::size_t k = d; k-- > 0;) {
    // orbit of base[k] under the generators found so far (all fix base[0..k-1])
    std::vector<char> in_orbit(n, 0);
    std::vector<Elem> orbit{out.base[k]};
    in_orbit[out.base[k]] = 1;
    auto grow = [&] {
      // new generators act on old points too, so rescan the whole orbit
      for (std::size_t i = 0; i < orbit.size(); ++i)
        for (std::size_t j = 0; j < out.generators.size(); ++j) {
          const Elem y = out.generators[j][orbit[i]];
          if (!in_orbit[y]) {
            in_orbit[y] = 1;
            orbit.push_back(y);
          }
        }
    };
    grow();
    HomSearch s(g, g, out.base, cand);
    for (std::size_t j = 0; j < k; ++j) s.extend(j, out.base[j]);
    for (Elem b : cand[k]) {
      if (in_orbit[b]) continue;
      if (!out.complete) break;
      bool found = false;
      if (s.extend(k, b)) {
        s.dfs(k + 1, [&] {
          out.generators.push_back(s.images());
          found = true;
          return false;
        }, budget.max_nodes);
        s.rollback();
      }
      if (s.exhausted()) out.complete = false;
      if (found) grow();
    }
    out.orbit_lengths[k] = orbit.size();
  }
  return out;
}

std::uint64_t for_each_automorphism(const Group& g,
                                    const std::function<bool(std::span<const Elem>)>& visit) {
  const auto base = search_base(g);
  if (base.empty()) {
    std::vector<Elem> id{0};
    visit(id);
    return 1;
  }
  HomSearch s(g, g, base, candidates_for(g, g, base));
  std::uint64_t count = 0;
  s.dfs(0, [&] {
    ++count;
    return visit(s.images());
  }, UINT64_MAX);
  return count;
}

std::vector<GroupMap> automorphisms(const Group& g, const Limits& limits) {
  if (g.order() > limits.automorphism_order_bound) {
    throw Error(ErrorCode::bound_exceeded, "group order exceeds automorphism bound");
  }
  std::vector<GroupMap> out;
  bool overflow = false;
  for_each_automorphism(g, [&](std::span<const Elem> img) {
    if (out.size() >= limits.max_automorphisms) {
      overflow = true;
      return false;
    }
    out.push_back(GroupMap{g, g, std::vector<Elem>(img.begin(), img.end()), true});
    return true;
  });
  if (overflow) throw Error(ErrorCode::bound_exceeded, "too many automorphisms to list");
  return out;
}

std::uint64_t for_each_isomorphism(const Group& a, const Group& b,
                                   const std::function<bool(std::span<const Elem>)>& visit) {
  if (a.order() != b.order()) return 0;
  if (a.fingerprint() != b.fingerprint()) return 0;
  const auto base = search_base(a);
  if (base.empty()) {
    std::vector<Elem> id{0};
    visit(id);
    return 1;
  }
  HomSearch s(a, b, base, candidates_for(a, b, base));
  std::uint64_t count = 0;
  s.dfs(0, [&] {
    ++count;
    return visit(s.images());
  }, UINT64_MAX);
  return count;
}

std::optional<GroupMap> isomorphism(const Group& a, const Group& b, const Limits& limits) {
  if (a.order() > limits.order_cap || b.order() > limits.order_cap) {
    throw Error(ErrorCode::bound_exceeded, "isomorphism test beyond order cap");
  }
  std::optional<GroupMap> out;
  for_each_isomorphism(a, b, [&](std::span<const Elem> img) {
    out = GroupMap{a, b, std::vector<Elem>(img.begin(), img.end()), true};
    return false;
  });
  return out;
}

bool is_isomorphic(const Group& a, const Group& b, const Limits& limits) {
  return isomorphism(a, b, limits).has_value();
}

bool is_isoclinic(const Group& a, const Group& b, const Limits& limits) {
  if (a.order() > limits.order_cap || b.order() > limits.order_cap) {
    throw Error(ErrorCode::bound_exceeded, "isoclinism test beyond order cap");
  }
  const Quotient qa = quotient(a, center(a));
  const Quotient qb = quotient(b, center(b));
  const ElementSet da = derived_subgroup(a, 1);
  const ElementSet db = derived_subgroup(b, 1);
  if (qa.group.order() != qb.group.order() || da.size() != db.size()) return false;
  const std::size_t m = qa.group.order();
  // commutator of coset representatives
  std::vector<Elem> ca(m * m), cb(m * m);
  for (Elem u = 0; u < m; ++u)
    for (Elem v = 0; v < m; ++v) {
      ca[u * m + v] = a.commutator(qa.representatives[u], qa.representatives[v]);
      cb[u * m + v] = b.commutator(qb.representatives[u], qb.representatives[v]);
    }
  // generators of A' among commutator values
  ClosureBuilder cl(a);
  std::vector<std::pair<Elem, Elem>> gen_pairs;  // representative pair (u,v) per generator
  for (Elem u = 0; u < m && cl.size() < da.size(); ++u)
    for (Elem v = 0; v < m && cl.size() < da.size(); ++v)
      if (cl.add(ca[u * m + v])) gen_pairs.emplace_back(u, v);
  const Subgroup sa = restrict_to(a, da);
  const Subgroup sb = restrict_to(b, db);
  std::vector<Elem> ia(a.order(), kNoElem), ib(b.order(), kNoElem);
  for (std::size_t i = 0; i < sa.embedding.size(); ++i) ia[sa.embedding[i]] = static_cast<Elem>(i);
  for (std::size_t i = 0; i < sb.embedding.size(); ++i) ib[sb.embedding[i]] = static_cast<Elem>(i);
  std::vector<Elem> sgens;
  for (auto [u, v] : gen_pairs) sgens.push_back(ia[ca[u * m + v]]);

  bool found = false;
  for_each_isomorphism(qa.group, qb.group, [&](std::span<const Elem> phi) {
    std::vector<Elem> imgs;
    for (auto [u, v] : gen_pairs) imgs.push_back(ib[cb[phi[u] * m + phi[v]]]);
    auto psi = extend_to_hom(sa.group, sgens, sb.group, imgs);
    if (!psi) return true;
    std::vector<char> seen(sb.group.order(), 0);
    for (Elem t : *psi) {
      if (seen[t]) return true;
      seen[t] = 1;
    }
    for (Elem u = 0; u < m; ++u)
      for (Elem v = 0; v < m; ++v)
        if ((*psi)[ia[ca[u * m + v]]] != ib[cb[phi[u] * m + phi[v]]]) return true;
    found = true;
    return false;
  });
  return found;
}

}  // namespace pgk
