#include "pgk/kulkarni.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "pgk/gk.hpp"
#include "pgk/subgroups.hpp"

namespace pgk {

namespace {

Group sylow_group(const Group& g, unsigned p) {
  Group s = restrict_to(g, sylow_subgroup(g, p)).group;
  return s.order() == 1 ? s.with_prime(p) : s;
}

std::uint64_t two_part(std::uint64_t n) {
  std::uint64_t r = 1;
  while (n % 2 == 0) {
    n /= 2;
    r *= 2;
  }
  return r;
}

}  // namespace

unsigned gamma(const Group& g) {
  if (g.order() % 2 != 0) return 1;
  const Group s = sylow_group(g, 2);
  return is_gk_type(s) ? 1 : 2;
}

KulkarniReport kulkarni_report(const Group& g) {
  KulkarniReport r;
  r.gamma = gamma(g);
  std::uint64_t product = 1;
  for (unsigned p : prime_factors(g.order())) {
    const Group s = sylow_group(g, p);
    KulkarniFactor f{p, s.order(), exponent(s)};
    product *= f.sylow_order / f.sylow_exponent;
    r.factors.push_back(f);
  }
  if (product % r.gamma != 0) throw std::logic_error("Kulkarni invariant is not integral");
  r.invariant = product / r.gamma;
  return r;
}

std::uint64_t kulkarni_invariant(const Group& g) { return kulkarni_report(g).invariant; }

ElementSet two_maximal_kernel(const Group& g) {
  if (g.order() % 2 != 0) throw Error(ErrorCode::not_applicable, "Sylow 2-subgroup is trivial");
  const Group s = sylow_group(g, 2);
  if (!is_gk_type(s)) throw Error(ErrorCode::not_applicable, "Sylow 2-subgroup is not of GK type");
  const std::uint64_t e2 = exponent(s);
  std::vector<Elem> out;
  for (Elem x = 0; x < g.order(); ++x)
    if (two_part(g.elem_order(x)) < e2) out.push_back(x);
  ElementSet k(g, std::move(out));
  if (!is_subgroup(k) || k.size() * 2 != g.order()) {
    throw std::logic_error("2-maximal kernel is not a subgroup of index 2");
  }
  k.is_subgroup = Tri::yes;
  return k;
}

bool is_two_perfect(const Group& g) {
  return (g.order() / derived_subgroup(g, 1).size()) % 2 == 1;
}

bool check_2perfect_corollary(const Group& g) {
  if (!is_two_perfect(g)) return true;
  if (g.order() % 2 != 0) return true;
  return !is_gk_type(sylow_group(g, 2));
}

bool riemann_hurwitz_holds(std::uint64_t order, std::uint64_t genus, const Signature& s) {
  if (genus == 0) return false;
  std::uint64_t l = 1;
  for (unsigned n : s.periods) l = lcm_u(l, n);
  // 2(g-1) L = |G| (2(h-1) L + sum(L - L/n_i)), in signed arithmetic
  long long rhs = 2 * (static_cast<long long>(s.h) - 1) * static_cast<long long>(l);
  for (unsigned n : s.periods) rhs += static_cast<long long>(l - l / n);
  rhs *= static_cast<long long>(order);
  const long long lhs = 2 * (static_cast<long long>(genus) - 1) * static_cast<long long>(l);
  return lhs == rhs;
}

bool validate_witness(const Group& g, std::uint64_t genus, const Signature& s,
                      const GeneratingVector& v) {
  if (v.hyperbolic.size() != 2 * s.h || v.elliptic.size() != s.periods.size()) return false;
  for (std::size_t i = 0; i < s.periods.size(); ++i)
    if (v.elliptic[i] >= g.order() || g.elem_order(v.elliptic[i]) != s.periods[i]) return false;
  Elem prod = 0;
  for (std::size_t i = 0; i < s.h; ++i) prod = g.mul(prod, g.commutator(v.hyperbolic[2 * i], v.hyperbolic[2 * i + 1]));
  for (Elem c : v.elliptic) prod = g.mul(prod, c);
  if (prod != 0) return false;
  std::vector<Elem> all = v.hyperbolic;
  all.insert(all.end(), v.elliptic.begin(), v.elliptic.end());
  if (subgroup_closure(g, all).size() != g.order()) return false;
  return riemann_hurwitz_holds(g.order(), genus, s);
}

GenusResult genus_search(const Group& g, std::uint64_t genus, const GenusLimits& limits) {
  if (g.order() > limits.max_group_order) {
    throw Error(ErrorCode::limits_exceeded, "group order exceeds genus-search limit");
  }
  if (genus < 2) throw Error(ErrorCode::invalid_params, "genus must be at least 2");
  const std::uint64_t n = g.order();
  GenusResult result;

  // element orders >= 2 occurring in G, and the elements of each order
  std::vector<unsigned> orders;
  std::vector<std::vector<Elem>> by_order(n + 1);
  for (Elem x = 0; x < n; ++x) by_order[g.elem_order(x)].push_back(x);
  for (unsigned k = 2; k <= n; ++k)
    if (!by_order[k].empty()) orders.push_back(k);

  // bounds on h and r for any signature of this genus
  const std::uint64_t h_bound = 1 + (genus - 1) / n;
  const std::uint64_t r_bound = 4 * (genus - 1) / n + 4;
  result.space_fully_covered = limits.min_h == 0 && limits.max_h >= h_bound && limits.max_r >= r_bound;

  std::uint64_t nodes = 0;
  auto tick = [&] {
    if (++nodes > limits.max_nodes) throw Error(ErrorCode::limits_exceeded, "genus search node budget exhausted");
  };

  auto search_vector = [&](const Signature& s) -> std::optional<GeneratingVector> {
    GeneratingVector v;
    v.hyperbolic.assign(2 * s.h, 0);
    v.elliptic.assign(s.periods.size(), 0);
    const std::size_t r = s.periods.size();
    std::function<bool(std::size_t, Elem)> elliptic = [&](std::size_t i, Elem prod) -> bool {
      tick();
      if (i + 1 >= r) {
        if (r == 0) {
          if (prod != 0) return false;
        } else {
          const Elem last = g.inv(prod);
          if (g.elem_order(last) != s.periods[r - 1]) return false;
          v.elliptic[r - 1] = last;
        }
        std::vector<Elem> all = v.hyperbolic;
        all.insert(all.end(), v.elliptic.begin(), v.elliptic.end());
        return subgroup_closure(g, all).size() == n;
      }
      for (Elem c : by_order[s.periods[i]]) {
        v.elliptic[i] = c;
        if (elliptic(i + 1, g.mul(prod, c))) return true;
      }
      return false;
    };
    std::function<bool(std::size_t, Elem)> hyper = [&](std::size_t i, Elem prod) -> bool {
      if (i == s.h) return elliptic(0, prod);
      for (Elem a = 0; a < n; ++a)
        for (Elem b = 0; b < n; ++b) {
          tick();
          v.hyperbolic[2 * i] = a;
          v.hyperbolic[2 * i + 1] = b;
          if (hyper(i + 1, g.mul(prod, g.commutator(a, b)))) return true;
        }
      return false;
    };
    if (hyper(0, 0)) return v;
    return std::nullopt;
  };

  for (unsigned r = 0; r <= limits.max_r; ++r) {
    // non-decreasing period tuples in lexicographic order
    std::vector<std::size_t> idx(r, 0);
    bool more = orders.size() > 0 || r == 0;
    while (more) {
      Signature s;
      for (std::size_t i = 0; i < r; ++i) s.periods.push_back(orders[idx[i]]);
      for (unsigned h = limits.min_h; h <= limits.max_h; ++h) {
        s.h = h;
        if (!riemann_hurwitz_holds(n, genus, s)) continue;
        if (auto v = search_vector(s)) {
          result.signature = s;
          result.vector = std::move(*v);
          result.nodes = nodes;
          return result;
        }
      }
      // next tuple
      if (r == 0) break;
      std::size_t pos = r;
      while (pos > 0 && idx[pos - 1] + 1 >= orders.size()) --pos;
      if (pos == 0) {
        more = false;
      } else {
        ++idx[pos - 1];
        for (std::size_t j = pos; j < r; ++j) idx[j] = idx[pos - 1];
      }
    }
  }
  result.nodes = nodes;
  return result;
}

SpectrumReport spectrum_congruence_check(const Group& g, std::uint64_t genus_max,
                                         const GenusLimits& limits) {
  SpectrumReport rep;
  rep.invariant = kulkarni_invariant(g);
  for (std::uint64_t genus = 2; genus <= genus_max; ++genus) {
    GenusResult r = genus_search(g, genus, limits);
    if (r.signature) {
      rep.found.push_back(genus);
      if ((genus - 1) % rep.invariant != 0) rep.congruence_holds = false;
    } else if (r.space_fully_covered) {
      rep.absent.push_back(genus);
    } else {
      rep.undecided.push_back(genus);
    }
  }
  return rep;
}

}  // namespace pgk
