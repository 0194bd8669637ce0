#include "pgk/extensions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "pgk/parallel.hpp"
#include "pgk/search.hpp"
#include "pgk/subgroups.hpp"

namespace pgk {

namespace {

std::string power_label(const std::string& symbol, std::size_t i) {
  if (i == 1) return symbol;
  return symbol + "^" + std::to_string(i);
}

std::vector<Elem> identity_images(std::size_t n) {
  std::vector<Elem> v(n);
  std::iota(v.begin(), v.end(), Elem{0});
  return v;
}

bool is_automorphism(const Group& h, const std::vector<Elem>& kappa) {
  if (kappa.size() != h.order()) return false;
  std::vector<char> seen(h.order(), 0);
  for (Elem x : kappa) {
    if (x >= h.order() || seen[x]) return false;
    seen[x] = 1;
  }
  const auto gens = h.generators();
  std::vector<Elem> imgs;
  for (Elem x : gens) imgs.push_back(kappa[x]);
  auto full = extend_to_hom(h, gens, h, imgs);
  return full && *full == kappa;
}

unsigned least_primitive_root(unsigned p) {
  for (unsigned r = 2; r < p; ++r) {
    unsigned x = 1;
    unsigned ord = 0;
    do {
      x = static_cast<unsigned>((static_cast<std::uint64_t>(x) * r) % p);
      ++ord;
    } while (x != 1);
    if (ord == p - 1) return r;
  }
  return 1;
}

}  // namespace

Group cyclic_extension(const CyclicExtensionSpec& spec, const Limits& limits,
                       const std::string& symbol) {
  const Group& H = spec.base;
  const std::size_t m = H.order();
  const std::size_t d = spec.degree;
  if (d == 0) throw Error(ErrorCode::invalid_params, "degree must be positive");
  const std::size_t n = m * d;
  if (n > limits.order_cap) {
    throw Error(ErrorCode::order_cap, "extension of order " + std::to_string(n) + " exceeds cap");
  }
  const bool trivial_action = spec.kappa.empty();
  const std::vector<Elem> kappa = trivial_action ? identity_images(m) : spec.kappa;
  if (spec.h >= m) throw Error(ErrorCode::incompatible_spec, "h is not an element of H");
  if (!trivial_action && !is_automorphism(H, kappa)) {
    throw Error(ErrorCode::incompatible_spec, "kappa is not an automorphism");
  }
  if (kappa[spec.h] != spec.h) throw Error(ErrorCode::incompatible_spec, "h is not fixed by kappa");
  for (Elem x : H.generators()) {
    Elem y = x;
    if (!trivial_action)
      for (std::size_t t = 0; t < d; ++t) y = kappa[y];
    if (y != H.conj(x, spec.h)) {
      throw Error(ErrorCode::incompatible_spec, "kappa^d differs from conjugation by h");
    }
  }

  // kappa^j for j < d
  std::vector<std::vector<Elem>> kpow;
  if (!trivial_action) {
    kpow.assign(d, identity_images(m));
    for (std::size_t j = 1; j < d; ++j)
      for (std::size_t y = 0; y < m; ++y) kpow[j][y] = kappa[kpow[j - 1][y]];
  }

  std::vector<std::uint16_t> table(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t i = a / m;
    const Elem y = static_cast<Elem>(a % m);
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t j = b / m;
      const Elem z = static_cast<Elem>(b % m);
      const std::size_t s = i + j;
      Elem part = trivial_action ? y : kpow[j][y];
      if (s >= d) part = H.mul(spec.h, part);
      part = H.mul(part, z);
      table[a * n + b] = static_cast<std::uint16_t>((s % d) * m + part);
    }
  }

  std::vector<std::string> labels(n);
  for (std::size_t a = 0; a < n; ++a) {
    const std::size_t i = a / m;
    const Elem y = static_cast<Elem>(a % m);
    if (i == 0) labels[a] = y == 0 ? "1" : H.label(y);
    else if (y == 0) labels[a] = power_label(symbol, i);
    else labels[a] = power_label(symbol, i) + "·" + H.label(y);
  }
  std::optional<unsigned> prime = H.order() > 1 ? H.prime() : prime_power_base(d);
  if (H.order() > 1 && d > 1) {
    auto pd = prime_power_base(d);
    if (!prime || !pd || *pd != *prime) prime.reset();
  }
  Group g = Group::from_trusted(n, std::move(table), std::move(labels), prime);
  const double work = static_cast<double>(n) * static_cast<double>(n) *
                      static_cast<double>(g.generators().size());
  if (work <= 4e8 && !associative_over_generators(g)) {
    throw Error(ErrorCode::not_associative, "cyclic extension table is not associative");
  }
  return g;
}

Group cyclic_extension_p(const CyclicExtensionSpec& spec, const Limits& limits) {
  if (!is_prime(spec.degree)) throw Error(ErrorCode::invalid_params, "degree must be prime");
  if (spec.base.order() > 1) {
    auto p = spec.base.prime();
    if (!p || *p != spec.degree) throw Error(ErrorCode::not_a_p_group, "degree differs from the prime of H");
  }
  return cyclic_extension(spec, limits);
}

ParentGroup parent_group(const Group& h_group, std::uint64_t order_of_h, std::uint64_t degree,
                         const Limits& limits) {
  const std::uint64_t n = order_of_h * degree;
  if (n * h_group.order() > limits.order_cap) {
    throw Error(ErrorCode::order_cap, "parent group exceeds order cap");
  }
  Group c = cyclic_group(static_cast<std::size_t>(n), "g");
  Group hl = h_group.has_labels() ? h_group : h_group.with_labels([&] {
    std::vector<std::string> l(h_group.order());
    for (Elem x = 0; x < h_group.order(); ++x) l[x] = x == 0 ? "1" : h_group.label(x);
    return l;
  }());
  ParentGroup out;
  out.group = direct_product(c, hl, limits);
  out.g_hat = n > 1 ? static_cast<Elem>(h_group.order()) : 0;
  out.base = h_group;
  out.degree = static_cast<std::size_t>(degree);
  return out;
}

Group central_amalgam(const ParentGroup& parent, Elem h) {
  const Group& H = parent.base;
  const std::size_t m = H.order();
  if (h >= m) throw Error(ErrorCode::invalid_params, "h is not an element of H");
  for (Elem x : H.generators())
    if (H.mul(h, x) != H.mul(x, h)) throw Error(ErrorCode::h_not_central, "h is not central in H");
  const std::uint64_t n = parent.group.order() / m;
  if (static_cast<std::uint64_t>(H.elem_order(h)) * parent.degree != n) {
    throw Error(ErrorCode::order_mismatch, "|h| times degree differs from the order of g_hat");
  }
  const Group& P = parent.group;
  const Elem c = P.mul(P.pow(parent.g_hat, static_cast<long long>(parent.degree)), H.inv(h));
  const std::vector<Elem> gens{c};
  Quotient q = quotient(P, subgroup_closure(P, gens));
  return q.group;
}

ElementSet max_order_central(const Group& h_group) {
  const std::uint64_t e = exponent(h_group);
  ElementSet z = center(h_group);
  std::vector<Elem> out;
  for (Elem x : z.members)
    if (h_group.elem_order(x) == e) out.push_back(x);
  return ElementSet(h_group, std::move(out), e == 1 ? Tri::yes : Tri::no);
}

Elem default_h(const Group& h_group) {
  ElementSet z = max_order_central(h_group);
  if (z.members.empty()) throw Error(ErrorCode::criterion_violated, "exp(Z(H)) < exp(H)");
  return z.members.front();
}

Group trivial_gk_extension(const Group& h_group, Elem h, unsigned level, const Limits& limits,
                           unsigned p) {
  unsigned prime = p;
  if (h_group.order() > 1) {
    auto hp = h_group.prime();
    if (!hp) throw Error(ErrorCode::not_a_p_group, "H is not a p-group");
    prime = *hp;
  } else if (prime == 0) {
    prime = h_group.prime_hint().value_or(0);
  }
  if (prime == 0 || !is_prime(prime)) {
    throw Error(ErrorCode::invalid_params, "prime required for the trivial group");
  }
  const std::uint64_t e = exponent(h_group);
  const ElementSet z = center(h_group);
  if (exponent_of(h_group, z) != e) throw Error(ErrorCode::criterion_violated, "exp(Z(H)) < exp(H)");
  if (h >= h_group.order()) throw Error(ErrorCode::invalid_params, "h is not an element of H");
  if (!z.contains(h)) throw Error(ErrorCode::h_not_central, "h is not central");
  if (h_group.elem_order(h) != e) throw Error(ErrorCode::h_not_max_order, "|h| < exp(H)");
  if (level == 0) return h_group;
  CyclicExtensionSpec spec{h_group, {}, h, static_cast<std::size_t>(ipow(prime, level))};
  return cyclic_extension(spec, limits);
}

bool kernel_is_embedded_base(const Group& g, std::size_t base_order, std::uint64_t base_exponent) {
  const std::size_t n = g.order();
  if (n == base_order) return false;
  const std::uint64_t p = n / base_order;
  for (Elem x = static_cast<Elem>(base_order); x < n; ++x)
    if (g.elem_order(x) != p * base_exponent) return false;
  return true;
}

std::vector<Extension> enumerate_p_extensions(const Group& H, unsigned p, const Limits& limits,
                                              const ExtensionOptions& options) {
  if (H.order() > 1) {
    auto hp = H.prime();
    if (!hp || *hp != p) throw Error(ErrorCode::not_a_p_group, "H is not a p-group for this prime");
  }
  return enumerate_prime_extensions(H, p, limits, options);
}

std::vector<Extension> enumerate_prime_extensions(const Group& H, unsigned p, const Limits& limits,
                                                  const ExtensionOptions& options) {
  if (!is_prime(p)) throw Error(ErrorCode::invalid_params, "p must be prime");
  const std::size_t m = H.order();
  if (p * m > limits.order_cap) throw Error(ErrorCode::order_cap, "extension order exceeds cap");
  const std::uint64_t e = exponent(H);
  const auto hgens = H.generators();

  // candidate pairs (kappa, h)
  std::vector<std::vector<Elem>> kappas;
  std::map<std::vector<Elem>, std::uint32_t> kappa_id;
  std::vector<std::pair<std::uint32_t, Elem>> cands;
  std::uint64_t visited = 0;
  bool overflow = false;
  for_each_automorphism(H, [&](std::span<const Elem> k) {
    if (++visited > limits.max_automorphisms) {
      overflow = true;
      return false;
    }
    // kappa^p on generators
    std::vector<Elem> target;
    for (Elem x : hgens) {
      Elem y = x;
      for (unsigned t = 0; t < p; ++t) y = k[y];
      target.push_back(y);
    }
    std::vector<Elem> hs;
    for (Elem h = 0; h < m; ++h) {
      if (k[h] != h) continue;
      if (options.gk_only && H.elem_order(h) != e) continue;
      bool ok = true;
      for (std::size_t i = 0; i < hgens.size(); ++i)
        if (H.conj(hgens[i], h) != target[i]) {
          ok = false;
          break;
        }
      if (ok) hs.push_back(h);
    }
    if (hs.empty()) return true;
    const auto id = static_cast<std::uint32_t>(kappas.size());
    kappas.emplace_back(k.begin(), k.end());
    kappa_id.emplace(kappas.back(), id);
    for (Elem h : hs) cands.emplace_back(id, h);
    return true;
  });
  if (overflow) throw Error(ErrorCode::bound_exceeded, "too many automorphisms of H");

  std::unordered_map<std::uint64_t, std::uint32_t> index;
  index.reserve(cands.size() * 2);
  for (std::uint32_t i = 0; i < cands.size(); ++i)
    index.emplace(static_cast<std::uint64_t>(cands[i].first) * m + cands[i].second, i);
  std::vector<std::uint32_t> uf(cands.size());
  std::iota(uf.begin(), uf.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (uf[x] != x) {
      uf[x] = uf[uf[x]];
      x = uf[x];
    }
    return x;
  };
  auto unite_with = [&](std::uint32_t i, const std::vector<Elem>& k2, Elem h2) {
    auto it = kappa_id.find(k2);
    if (it == kappa_id.end()) {
      if (options.gk_only) return;
      throw std::logic_error("extension move left the candidate set");
    }
    auto jt = index.find(static_cast<std::uint64_t>(it->second) * m + h2);
    if (jt == index.end()) {
      if (options.gk_only) return;
      throw std::logic_error("extension move left the candidate set");
    }
    std::uint32_t a = find(i), b = find(jt->second);
    if (a != b) uf[std::max(a, b)] = std::min(a, b);
  };

  if (!cands.empty() && m > 1) {
    const AutGroup aut = automorphism_group(H);
    std::vector<std::vector<Elem>> inverses;
    for (const auto& a : aut.generators) {
      std::vector<Elem> inv(m);
      for (Elem x = 0; x < m; ++x) inv[a[x]] = x;
      inverses.push_back(std::move(inv));
    }
    const unsigned root = p == 2 ? 1 : least_primitive_root(p);
    std::vector<Elem> k2(m);
    for (std::uint32_t i = 0; i < cands.size(); ++i) {
      const auto& k = kappas[cands[i].first];
      const Elem h = cands[i].second;
      for (std::size_t a = 0; a < aut.generators.size(); ++a) {
        const auto& al = aut.generators[a];
        const auto& ai = inverses[a];
        for (Elem y = 0; y < m; ++y) k2[y] = al[k[ai[y]]];
        unite_with(i, k2, al[h]);
      }
      if (root > 1) {
        for (Elem y = 0; y < m; ++y) {
          Elem v = y;
          for (unsigned t = 0; t < root; ++t) v = k[v];
          k2[y] = v;
        }
        unite_with(i, k2, H.pow(h, root));
      }
      for (Elem y : hgens) {
        for (Elem x = 0; x < m; ++x) k2[x] = H.conj(k[x], y);
        Elem acc = y, cur = y;
        for (unsigned t = 1; t < p; ++t) {
          cur = k[cur];
          acc = H.mul(cur, acc);
        }
        unite_with(i, k2, H.mul(h, acc));
      }
    }
  }

  std::vector<std::uint32_t> reps;
  for (std::uint32_t i = 0; i < cands.size(); ++i)
    if (find(i) == i) reps.push_back(i);

  std::vector<std::optional<Extension>> built(reps.size());
  parallel_for(reps.size(), limits.threads, [&](std::size_t r) {
    const auto& [kid, h] = cands[reps[r]];
    CyclicExtensionSpec spec{H, kappas[kid], h, p};
    Group g = cyclic_extension(spec, limits);
    if (m == 1) g = g.with_prime(p);
    if (options.gk_only && !kernel_is_embedded_base(g, m, e)) return;
    (void)g.fingerprint();
    built[r] = Extension{g, kappas[kid], h};
  });

  std::vector<Extension> out;
  for (auto& b : built) {
    if (!b) continue;
    if (options.dedupe) {
      bool dup = false;
      for (const auto& kept : out) {
        if (kept.group.fingerprint() == b->group.fingerprint() &&
            is_isomorphic(kept.group, b->group, limits)) {
          dup = true;
          break;
        }
      }
      if (dup) continue;
    }
    out.push_back(std::move(*b));
  }
  return out;
}

TrivialFaithfulSplit split_trivial_faithful(const Group& g, const ElementSet& h_set, Elem gen) {
  if (!is_subgroup(h_set)) throw Error(ErrorCode::not_a_subgroup, "H is not a subgroup");
  if (!is_normal(g, h_set)) throw Error(ErrorCode::not_normal, "H is not normal");
  ClosureBuilder all(g);
  for (Elem x : h_set.members) all.add(x);
  all.add(gen);
  if (all.size() != g.order()) throw Error(ErrorCode::g_does_not_generate, "G is not <g, H>");
  std::size_t d = 1;
  while (!h_set.contains(g.pow(gen, static_cast<long long>(d)))) ++d;
  ClosureBuilder hb(g);
  for (Elem x : h_set.members) hb.add(x);
  const std::vector<Elem> hgens = hb.gens();
  for (std::size_t k = 1; k <= d; ++k) {
    if (d % k != 0) continue;
    const Elem x = g.pow(gen, static_cast<long long>(k));
    bool inner = false;
    for (Elem y : h_set.members) {
      bool same = true;
      for (Elem a : hgens)
        if (g.conj(a, x) != g.conj(a, y)) {
          same = false;
          break;
        }
      if (same) {
        inner = true;
        break;
      }
    }
    if (inner) {
      ClosureBuilder t(g);
      for (Elem y : h_set.members) t.add(y);
      t.add(x);
      return TrivialFaithfulSplit{t.to_set(), k};
    }
  }
  throw std::logic_error("conjugation by g^d must be inner");
}

Aut0Triple aut0_identity(const Group& h_group, std::uint64_t n) {
  return Aut0Triple{identity_images(h_group.order()), 1, 0, n};
}

Aut0Triple aut0_compose(const Group& h_group, const Aut0Triple& a, const Aut0Triple& b,
                        std::uint64_t n) {
  if (a.modulus != n || b.modulus != n) throw Error(ErrorCode::modulus_mismatch, "triples use different moduli");
  const std::size_t m = h_group.order();
  Aut0Triple out;
  out.modulus = n;
  out.alpha.resize(m);
  for (Elem y = 0; y < m; ++y) out.alpha[y] = b.alpha[a.alpha[y]];
  out.k = (a.k * b.k) % n;
  out.z = h_group.mul(h_group.pow(b.z, static_cast<long long>(a.k)), b.alpha[a.z]);
  return out;
}

Aut0Triple aut0_inverse(const Group& h_group, const Aut0Triple& t) {
  const std::size_t m = h_group.order();
  Aut0Triple out;
  out.modulus = t.modulus;
  out.alpha.resize(m);
  for (Elem y = 0; y < m; ++y) out.alpha[t.alpha[y]] = y;
  std::uint64_t kinv = 1;
  while ((kinv * t.k) % t.modulus != 1 % t.modulus) ++kinv;
  out.k = kinv % t.modulus;
  // z' with t then t' = identity: z'^{k} alpha'(z) = 1, so z' = (alpha'(z)^-1)^{k^-1}
  out.z = h_group.pow(h_group.inv(out.alpha[t.z]), static_cast<long long>(kinv));
  return out;
}

std::vector<Elem> aut0_apply(const ParentGroup& parent, const Aut0Triple& t) {
  const Group& H = parent.base;
  const std::size_t m = H.order();
  const std::size_t n = parent.group.order() / m;
  if (t.modulus != n) throw Error(ErrorCode::modulus_mismatch, "triple modulus differs from |g_hat|");
  std::vector<Elem> img(parent.group.order());
  for (std::size_t i = 0; i < n; ++i)
    for (Elem y = 0; y < m; ++y) {
      const std::size_t ik = (i * t.k) % n;
      const Elem hpart = H.mul(H.pow(t.z, static_cast<long long>(i)), t.alpha[y]);
      img[i * m + y] = static_cast<Elem>(ik * m + hpart);
    }
  return img;
}

}  // namespace pgk
