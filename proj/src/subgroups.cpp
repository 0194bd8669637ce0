#include "pgk/subgroups.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace pgk {

ClosureBuilder::ClosureBuilder(const Group& g) : g_(g), mask_(g.order(), 0) {
  mask_[0] = 1;
  elems_.push_back(0);
}

bool ClosureBuilder::add(Elem x) {
  if (mask_[x]) return false;
  gens_.push_back(x);
  const std::size_t old = elems_.size();
  for (std::size_t i = 0; i < old; ++i) {
    Elem y = g_.mul(elems_[i], x);
    if (!mask_[y]) {
      mask_[y] = 1;
      elems_.push_back(y);
    }
  }
  for (std::size_t i = old; i < elems_.size(); ++i) {
    for (Elem s : gens_) {
      Elem y = g_.mul(elems_[i], s);
      if (!mask_[y]) {
        mask_[y] = 1;
        elems_.push_back(y);
      }
    }
  }
  return true;
}

ElementSet ClosureBuilder::to_set() const { return ElementSet(g_, elems_, Tri::yes); }

ElementSet subgroup_closure(const Group& g, std::span<const Elem> gens) {
  ClosureBuilder b(g);
  for (Elem x : gens) b.add(x);
  return b.to_set();
}

ElementSet subgroup_closure(const Group& g, const ElementSet& gens) {
  return subgroup_closure(g, std::span<const Elem>(gens.members));
}

ElementSet whole_group(const Group& g) {
  std::vector<Elem> all(g.order());
  std::iota(all.begin(), all.end(), Elem{0});
  return ElementSet(g, std::move(all), Tri::yes);
}

ElementSet trivial_subgroup(const Group& g) { return ElementSet(g, {0}, Tri::yes); }

bool is_subgroup(const ElementSet& s) {
  if (s.members.empty() || s.members.front() != 0) return false;
  const auto m = s.mask();
  for (Elem a : s.members)
    for (Elem b : s.members)
      if (!m[s.parent.mul(a, b)]) return false;
  return true;
}

ElementSet resolve_subgroup_flag(ElementSet s) {
  if (s.is_subgroup == Tri::unknown) s.is_subgroup = is_subgroup(s) ? Tri::yes : Tri::no;
  return s;
}

bool is_normal(const Group& g, const ElementSet& n) {
  const auto m = n.mask();
  for (Elem x : g.generators())
    for (Elem a : n.members)
      if (!m[g.conj(a, x)]) return false;
  return true;
}

ElementSet intersection(const ElementSet& a, const ElementSet& b) {
  std::vector<Elem> out;
  std::set_intersection(a.members.begin(), a.members.end(), b.members.begin(), b.members.end(),
                        std::back_inserter(out));
  const bool sub = a.is_subgroup == Tri::yes && b.is_subgroup == Tri::yes;
  return ElementSet(a.parent, std::move(out), sub ? Tri::yes : Tri::unknown);
}

ElementSet join(const Group& g, const ElementSet& a, const ElementSet& b) {
  ClosureBuilder c(g);
  for (Elem x : a.members) c.add(x);
  for (Elem x : b.members) c.add(x);
  return c.to_set();
}

ElementSet center(const Group& g) {
  const auto gens = g.generators();
  std::vector<Elem> out;
  for (Elem z = 0; z < g.order(); ++z) {
    bool central = true;
    for (Elem x : gens) {
      if (g.mul(z, x) != g.mul(x, z)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(z);
  }
  return ElementSet(g, std::move(out), Tri::yes);
}

ElementSet centralizer(const Group& g, const ElementSet& s) {
  std::vector<Elem> out;
  for (Elem z = 0; z < g.order(); ++z) {
    bool ok = true;
    for (Elem x : s.members) {
      if (g.mul(z, x) != g.mul(x, z)) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(z);
  }
  return ElementSet(g, std::move(out), Tri::yes);
}

ElementSet normalizer(const Group& g, const ElementSet& s) {
  const auto m = s.mask();
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x) {
    bool ok = true;
    for (Elem a : s.members) {
      if (!m[g.conj(a, x)]) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back(x);
  }
  return ElementSet(g, std::move(out), Tri::yes);
}

ElementSet normal_closure(const Group& g, std::span<const Elem> seeds,
                          std::span<const Elem> ambient) {
  ClosureBuilder c(g);
  for (Elem s : seeds) c.add(s);
  // conjugates of the closure's generators by the ambient generators
  for (std::size_t i = 0; i < c.gens().size(); ++i) {
    const Elem s = c.gens()[i];
    for (Elem x : ambient) {
      c.add(g.conj(s, x));
      c.add(g.conj(s, g.inv(x)));
    }
  }
  return c.to_set();
}

ElementSet commutator_subgroup(const Group& g, std::span<const Elem> a, std::span<const Elem> b) {
  std::vector<Elem> seeds;
  for (Elem x : a)
    for (Elem y : b) seeds.push_back(g.commutator(x, y));
  std::vector<Elem> ambient(a.begin(), a.end());
  ambient.insert(ambient.end(), b.begin(), b.end());
  return normal_closure(g, seeds, ambient);
}

ElementSet derived_subgroup(const Group& g, unsigned depth) {
  std::vector<Elem> gens(g.generators().begin(), g.generators().end());
  ElementSet cur = whole_group(g);
  for (unsigned i = 0; i < depth; ++i) {
    cur = commutator_subgroup(g, gens, gens);
    ClosureBuilder c(g);
    for (Elem x : cur.members) c.add(x);
    gens = c.gens();
    if (cur.size() == 1) break;
  }
  return cur;
}

std::size_t derived_length(const Group& g) {
  std::size_t len = 0;
  std::vector<Elem> gens(g.generators().begin(), g.generators().end());
  std::size_t size = g.order();
  while (size > 1) {
    ElementSet next = commutator_subgroup(g, gens, gens);
    ++len;
    if (next.size() == size) return len;  // perfect section; not solvable
    size = next.size();
    ClosureBuilder c(g);
    for (Elem x : next.members) c.add(x);
    gens = c.gens();
  }
  return len;
}

ElementSet lower_central(const Group& g, unsigned i) {
  const std::vector<Elem> ggens(g.generators().begin(), g.generators().end());
  ElementSet cur = whole_group(g);
  std::vector<Elem> gens = ggens;
  for (unsigned k = 1; k < i; ++k) {
    cur = commutator_subgroup(g, ggens, gens);
    ClosureBuilder c(g);
    for (Elem x : cur.members) c.add(x);
    gens = c.gens();
    if (cur.size() == 1) break;
  }
  return cur;
}

ElementSet power_subgroup_of(const Group& g, const ElementSet& s, std::uint64_t k) {
  ClosureBuilder c(g);
  for (Elem x : s.members) c.add(g.pow(x, static_cast<long long>(k % g.elem_order(x))));
  return c.to_set();
}

ElementSet power_subgroup(const Group& g, std::uint64_t k) {
  return power_subgroup_of(g, whole_group(g), k);
}

ElementSet frattini(const Group& g) {
  if (g.order() == 1) return trivial_subgroup(g);
  auto p = g.prime();
  if (!p) throw Error(ErrorCode::not_a_p_group, "frattini requires a p-group");
  ElementSet pw = power_subgroup(g, *p);
  ElementSet der = derived_subgroup(g, 1);
  return join(g, pw, der);
}

ElementSet frattini_by_maximals(const Group& g) {
  if (g.order() == 1) return trivial_subgroup(g);
  auto pp = g.prime();
  if (!pp) throw Error(ErrorCode::not_a_p_group, "frattini requires a p-group");
  const unsigned p = *pp;
  const std::size_t n = g.order();
  const std::vector<Elem> gens(g.generators().begin(), g.generators().end());
  const std::size_t d = gens.size();

  // BFS spanning tree over the Cayley graph
  std::vector<Elem> order_seen{0};
  std::vector<std::pair<Elem, std::size_t>> parent(n, {kNoElem, 0});
  std::vector<char> seen(n, 0);
  seen[0] = 1;
  for (std::size_t i = 0; i < order_seen.size(); ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      Elem y = g.mul(order_seen[i], gens[j]);
      if (!seen[y]) {
        seen[y] = 1;
        parent[y] = {order_seen[i], j};
        order_seen.push_back(y);
      }
    }
  }

  std::vector<char> in_all(n, 1);
  std::vector<unsigned> values(d, 0);
  std::vector<unsigned> f(n, 0);
  std::uint64_t total = ipow(p, static_cast<unsigned>(d));
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t j = 0; j < d; ++j) {
      values[j] = static_cast<unsigned>(c % p);
      c /= p;
    }
    f[0] = 0;
    for (std::size_t i = 1; i < order_seen.size(); ++i) {
      Elem y = order_seen[i];
      f[y] = (f[parent[y].first] + values[parent[y].second]) % p;
    }
    bool hom = true;
    for (Elem x = 0; x < n && hom; ++x)
      for (std::size_t j = 0; j < d; ++j)
        if (f[g.mul(x, gens[j])] != (f[x] + values[j]) % p) {
          hom = false;
          break;
        }
    if (!hom) continue;
    for (Elem x = 0; x < n; ++x)
      if (f[x] != 0) in_all[x] = 0;
  }
  std::vector<Elem> out;
  for (Elem x = 0; x < n; ++x)
    if (in_all[x]) out.push_back(x);
  return ElementSet(g, std::move(out), Tri::yes);
}

std::uint64_t exponent_of(const Group& g, const ElementSet& s) {
  std::uint64_t e = 1;
  for (Elem x : s.members) e = lcm_u(e, g.elem_order(x));
  return e;
}

std::uint64_t exponent(const Group& g) {
  std::uint64_t e = 1;
  for (Elem x = 0; x < g.order(); ++x) e = lcm_u(e, g.elem_order(x));
  return e;
}

Quotient quotient(const Group& g, const ElementSet& nset) {
  if (!is_subgroup(nset)) throw Error(ErrorCode::not_a_subgroup, "quotient by a non-subgroup");
  if (!is_normal(g, nset)) throw Error(ErrorCode::not_normal, "subgroup is not normal");
  const std::size_t n = g.order();
  std::vector<Elem> coset(n, kNoElem);
  std::vector<Elem> reps;
  for (Elem x = 0; x < n; ++x) {
    if (coset[x] != kNoElem) continue;
    const Elem id = static_cast<Elem>(reps.size());
    reps.push_back(x);
    for (Elem a : nset.members) coset[g.mul(x, a)] = id;
  }
  const std::size_t m = reps.size();
  std::vector<std::uint16_t> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] = static_cast<std::uint16_t>(coset[g.mul(reps[i], reps[j])]);
  std::vector<std::string> labels;
  if (g.has_labels()) {
    for (Elem r : reps) labels.push_back(g.label(r));
  }
  std::optional<unsigned> hint = g.prime();
  Group q = Group::from_trusted(m, std::move(table), std::move(labels), hint);
  GroupMap proj{g, q, coset, m == n};
  return Quotient{q, std::move(proj), std::move(reps)};
}

Group direct_product(const Group& a, const Group& b, const Limits& limits) {
  const std::size_t na = a.order();
  const std::size_t nb = b.order();
  const std::size_t n = na * nb;
  if (n > limits.order_cap) {
    throw Error(ErrorCode::order_cap, "direct product of order " + std::to_string(n) + " exceeds cap");
  }
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    const Elem xa = static_cast<Elem>(x / nb), xb = static_cast<Elem>(x % nb);
    for (std::size_t y = 0; y < n; ++y) {
      const Elem ya = static_cast<Elem>(y / nb), yb = static_cast<Elem>(y % nb);
      table[x * n + y] = static_cast<std::uint16_t>(a.mul(xa, ya) * nb + b.mul(xb, yb));
    }
  }
  std::vector<std::string> labels;
  if (a.has_labels() && b.has_labels()) {
    labels.reserve(n);
    for (std::size_t x = 0; x < n; ++x) {
      const Elem xa = static_cast<Elem>(x / nb), xb = static_cast<Elem>(x % nb);
      if (xa == 0 && xb == 0) labels.emplace_back("1");
      else if (xa == 0) labels.push_back(b.label(xb));
      else if (xb == 0) labels.push_back(a.label(xa));
      else labels.push_back(a.label(xa) + "·" + b.label(xb));
    }
  }
  std::optional<unsigned> prime;
  auto pa = a.prime(), pb = b.prime();
  if (na == 1) prime = pb;
  else if (nb == 1) prime = pa;
  else if (pa && pb && *pa == *pb) prime = pa;
  return Group::from_trusted(n, std::move(table), std::move(labels), prime);
}

Group cyclic_group(std::size_t n, const std::string& symbol) {
  if (n == 0) throw Error(ErrorCode::invalid_params, "cyclic group of order 0");
  std::vector<std::uint16_t> table(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) table[i * n + j] = static_cast<std::uint16_t>((i + j) % n);
  std::vector<std::string> labels(n);
  labels[0] = "1";
  if (n > 1) labels[1] = symbol;
  for (std::size_t i = 2; i < n; ++i) labels[i] = symbol + "^" + std::to_string(i);
  return Group::from_trusted(n, std::move(table), std::move(labels), prime_power_base(n));
}

AbelianInvariants abelian_invariants_of(const Group& g, const ElementSet& s) {
  for (Elem a : s.members)
    for (Elem b : s.members)
      if (g.mul(a, b) != g.mul(b, a)) throw Error(ErrorCode::not_abelian, "subgroup is not abelian");
  AbelianInvariants out;
  if (s.size() == 1) {
    out.prime = g.prime().value_or(0);
    return out;
  }
  auto p = prime_power_base(s.size());
  if (!p) throw Error(ErrorCode::not_a_p_group, "abelian invariants require a p-group");
  out.prime = *p;
  // omega[k] = #{x : x^{p^k} = 1}
  const std::uint64_t e = exponent_of(g, s);
  const unsigned top = log_base(e, *p);
  std::vector<std::uint64_t> omega(top + 1, 0);
  for (Elem x : s.members) {
    unsigned k = log_base(g.elem_order(x), *p);
    for (unsigned j = k; j <= top; ++j) ++omega[j];
  }
  // number of cyclic factors of exponent >= k is log_p(omega[k]/omega[k-1])
  std::vector<unsigned> at_least(top + 2, 0);
  for (unsigned k = 1; k <= top; ++k) at_least[k] = log_base(omega[k] / omega[k - 1], *p);
  for (unsigned k = top; k >= 1; --k) {
    unsigned exactly = at_least[k] - at_least[k + 1];
    for (unsigned i = 0; i < exactly; ++i) out.exponents.push_back(k);
  }
  std::sort(out.exponents.begin(), out.exponents.end());
  return out;
}

AbelianInvariants abelian_invariants(const Group& g) {
  if (!g.is_abelian()) throw Error(ErrorCode::not_abelian, "group is not abelian");
  if (g.order() > 1 && !g.prime()) throw Error(ErrorCode::not_a_p_group, "not a p-group");
  return abelian_invariants_of(g, whole_group(g));
}

ElementSet sylow_subgroup(const Group& g, unsigned p) {
  std::uint64_t target = 1;
  std::uint64_t n = g.order();
  while (n % p == 0) {
    n /= p;
    target *= p;
  }
  ClosureBuilder c(g);
  auto is_p_power = [p](std::uint64_t m) {
    while (m % p == 0) m /= p;
    return m == 1;
  };
  while (c.size() < target) {
    ElementSet cur = c.to_set();
    ElementSet norm = normalizer(g, cur);
    bool grown = false;
    for (Elem x : norm.members) {
      if (!c.contains(x) && is_p_power(g.elem_order(x))) {
        c.add(x);
        grown = true;
        break;
      }
    }
    if (!grown) throw Error(ErrorCode::invalid_table, "Sylow growth stalled");
  }
  return c.to_set();
}

unsigned rank(const Group& g) {
  if (g.order() == 1) return 0;
  auto p = g.prime();
  if (!p) throw Error(ErrorCode::not_a_p_group, "rank requires a p-group");
  return log_base(g.order() / frattini(g).size(), *p);
}

Subgroup restrict_to(const Group& g, const ElementSet& s) {
  if (!is_subgroup(s)) throw Error(ErrorCode::not_a_subgroup, "restriction to a non-subgroup");
  const std::size_t m = s.size();
  std::vector<Elem> index(g.order(), kNoElem);
  for (std::size_t i = 0; i < m; ++i) index[s.members[i]] = static_cast<Elem>(i);
  std::vector<std::uint16_t> table(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      table[i * m + j] = static_cast<std::uint16_t>(index[g.mul(s.members[i], s.members[j])]);
  std::vector<std::string> labels;
  if (g.has_labels())
    for (Elem x : s.members) labels.push_back(g.label(x));
  std::optional<unsigned> hint = g.prime();
  return Subgroup{Group::from_trusted(m, std::move(table), std::move(labels), hint), s.members};
}

ElementSet image(const GroupMap& m, const ElementSet& s) {
  std::vector<Elem> out;
  out.reserve(s.size());
  for (Elem x : s.members) out.push_back(m.images[x]);
  return ElementSet(m.target, std::move(out), s.is_subgroup == Tri::yes ? Tri::yes : Tri::unknown);
}

bool associative_over_generators(const Group& g) {
  const std::size_t n = g.order();
  for (Elem s : g.generators())
    for (Elem x = 0; x < n; ++x) {
      const Elem xs = g.mul(x, s);
      for (Elem y = 0; y < n; ++y)
        if (g.mul(xs, y) != g.mul(x, g.mul(s, y))) return false;
    }
  return true;
}

bool associative_full(const Group& g) {
  const std::size_t n = g.order();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem ab = g.mul(a, b);
      for (Elem c = 0; c < n; ++c)
        if (g.mul(ab, c) != g.mul(a, g.mul(b, c))) return false;
    }
  return true;
}

}  // namespace pgk
