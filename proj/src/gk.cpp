#include "pgk/gk.hpp"

#include <stdexcept>

#include "pgk/subgroups.hpp"

namespace pgk {

namespace {

unsigned require_prime(const Group& g) {
  if (g.order() == 1) return g.prime_hint().value_or(0);
  auto p = g.prime();
  if (!p) throw Error(ErrorCode::not_a_p_group, "group order is not a prime power");
  return *p;
}

// Elements of S with order below exp(S).
ElementSet kernel_of_subset(const Group& g, const ElementSet& s) {
  const std::uint64_t e = exponent_of(g, s);
  std::vector<Elem> out;
  for (Elem x : s.members)
    if (g.elem_order(x) < e) out.push_back(x);
  return resolve_subgroup_flag(ElementSet(g, std::move(out)));
}

GkFailure failure_of(const ElementSet& s, const ElementSet& k, unsigned p) {
  if (s.size() == 1) return GkFailure::trivial_group;
  if (k.is_subgroup != Tri::yes) return GkFailure::not_a_subgroup;
  if (k.size() * p != s.size()) return GkFailure::subgroup_not_maximal;
  return GkFailure::none;
}

}  // namespace

std::string_view to_string(GkFailure f) {
  switch (f) {
    case GkFailure::none: return "none";
    case GkFailure::not_a_subgroup: return "not-a-subgroup";
    case GkFailure::subgroup_not_maximal: return "subgroup-not-maximal";
    case GkFailure::trivial_group: return "trivial-group";
  }
  return "unknown";
}

ElementSet kernel_set(const Group& g) {
  require_prime(g);
  if (g.order() == 1) throw Error(ErrorCode::trivial_group, "kernel undefined for the trivial group");
  return kernel_of_subset(g, whole_group(g));
}

GkFailure gk_failure(const Group& g) {
  const unsigned p = require_prime(g);
  if (g.order() == 1) return GkFailure::trivial_group;
  return failure_of(whole_group(g), kernel_set(g), p);
}

bool is_gk_type(const Group& g) { return gk_failure(g) == GkFailure::none; }

unsigned cyclic_deficiency(const Group& g) {
  if (g.order() == 1) return 0;
  const unsigned p = require_prime(g);
  return log_base(g.order(), p) - log_base(exponent(g), p);
}

bool is_powerful(const Group& g) {
  if (g.order() == 1) return true;
  const unsigned p = require_prime(g);
  const Quotient q = quotient(g, power_subgroup(g, p == 2 ? 4 : p));
  return q.group.is_abelian();
}

bool has_mep(const Group& g) {
  ElementSet k = kernel_set(g);
  if (k.is_subgroup != Tri::yes) return false;
  return quotient(g, k).group.is_abelian();
}

bool is_regular(const Group& g, const Limits& limits) {
  const unsigned p = require_prime(g);
  if (g.order() == 1 || g.is_abelian()) return true;
  if (g.order() > limits.regular_check_bound) {
    throw Error(ErrorCode::bound_exceeded, "regularity check beyond bound");
  }
  const std::size_t n = g.order();
  std::vector<Elem> ppow(n);
  for (Elem x = 0; x < n; ++x) ppow[x] = g.pow(x, p);
  for (Elem x = 1; x < n; ++x)
    for (Elem y = 1; y < n; ++y) {
      if (g.mul(x, y) == g.mul(y, x)) continue;
      const Elem z = g.mul(g.inv(g.mul(ppow[x], ppow[y])), ppow[g.mul(x, y)]);
      if (z == 0) continue;
      const std::vector<Elem> xy{x, y};
      const ElementSet der = commutator_subgroup(g, xy, xy);
      if (!power_subgroup_of(g, der, p).contains(z)) return false;
    }
  return true;
}

GkReport gk_report(const Group& g, const Limits& limits, const GkOptions& options) {
  GkReport r;
  r.group = g;
  r.prime = require_prime(g);
  r.exponent = exponent(g);
  r.deficiency = cyclic_deficiency(g);
  r.rank = rank(g);
  r.flags.abelian = g.is_abelian();
  if (options.flags) {
    if (g.order() <= limits.regular_check_bound || r.flags.abelian) {
      r.flags.regular = is_regular(g, limits) ? Tri::yes : Tri::no;
    }
    r.flags.powerful = is_powerful(g);
    r.flags.mep = g.order() > 1 && has_mep(g);
  }
  if (g.order() == 1) {
    r.failure = GkFailure::trivial_group;
    r.series.push_back(whole_group(g));
    r.series_ranks.push_back(0);
    r.root = g;
    return r;
  }
  const unsigned p = r.prime;
  ElementSet cur = whole_group(g);
  r.kernel = kernel_of_subset(g, cur);
  r.series.push_back(cur);
  for (;;) {
    if (cur.size() == 1) {
      if (r.level == 0) r.failure = GkFailure::trivial_group;
      break;
    }
    ElementSet k = kernel_of_subset(g, cur);
    GkFailure f = failure_of(cur, k, p);
    if (r.level == 0) {
      r.failure = f;
      r.is_gk = f == GkFailure::none;
    }
    if (f != GkFailure::none) break;
    cur = k;
    r.series.push_back(cur);
    ++r.level;
  }
  for (const auto& s : r.series) {
    const Subgroup sub = restrict_to(g, s);
    r.series_ranks.push_back(rank(sub.group));
    if (cyclic_deficiency(sub.group) != r.deficiency) {
      throw std::logic_error("cyclic deficiency differs along the GK series");
    }
  }
  r.root = restrict_to(g, r.series.back()).group;
  if (r.root.order() == 1) r.root = r.root.with_prime(p);
  return r;
}

}  // namespace pgk
