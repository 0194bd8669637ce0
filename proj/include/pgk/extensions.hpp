#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pgk/group.hpp"

namespace pgk {

/// Data of a cyclic extension G = <g, H>: kappa is conjugation by g on H
/// (kappa(y) = g^-1 y g) and h = g^degree.
struct CyclicExtensionSpec {
  Group base;
  std::vector<Elem> kappa;  // images; empty means identity
  Elem h = 0;
  std::size_t degree = 1;
};

/// Element g^i*y gets index i*|H| + y, with
/// (g^i y)(g^j z) = g^{(i+j) mod d} h^{floor((i+j)/d)} kappa^j(y) z.
/// Errors: incompatible-spec when kappa is not an automorphism fixing h with
/// kappa^d equal to conjugation by h; order-cap; associativity-failure.
Group cyclic_extension(const CyclicExtensionSpec& spec, const Limits& limits = {},
                       const std::string& symbol = "g");

/// Degree-p case; also checks that p is the prime of H.
Group cyclic_extension_p(const CyclicExtensionSpec& spec, const Limits& limits = {});

struct ParentGroup {
  Group group;       // C_n x H, index a*|H| + y
  Elem g_hat = 0;    // generator of the cyclic factor
  Group base;        // H
  std::size_t degree = 1;
};

ParentGroup parent_group(const Group& h_group, std::uint64_t order_of_h, std::uint64_t degree,
                         const Limits& limits = {});

/// Quotient of the parent by <(g_hat^d, h^-1)>; h is an index of H.
Group central_amalgam(const ParentGroup& parent, Elem h);

/// Central elements of order exp(H).
ElementSet max_order_central(const Group& h_group);

/// Least index in max_order_central (the trivial group yields 0).
Elem default_h(const Group& h_group);

/// Trivial GK extension of degree p^level obtained from h in Z(H) with
/// |h| = exp(H). Built directly with kappa = identity; the parent/amalgam
/// route produces the same table. `p` is only needed for the trivial group.
Group trivial_gk_extension(const Group& h_group, Elem h, unsigned level, const Limits& limits = {},
                           unsigned p = 0);

struct ExtensionOptions {
  bool gk_only = false;  // keep G with GK kernel equal to the embedded H
  bool dedupe = true;
};

struct Extension {
  Group group;
  std::vector<Elem> kappa;
  Elem h = 0;
};

/// All isomorphism classes of degree-p extensions containing H as a normal
/// subgroup (or, with gk_only, as GK kernel). Candidates (kappa, h) are
/// merged under the moves that give isomorphic extensions (conjugation by
/// Aut(H), powering g, shifting g by elements of H) before tables are built.
std::vector<Extension> enumerate_p_extensions(const Group& h_group, unsigned p,
                                              const Limits& limits = {},
                                              const ExtensionOptions& options = {});

/// Same enumeration for any finite H (degree p need not divide |H|).
std::vector<Extension> enumerate_prime_extensions(const Group& h_group, unsigned p,
                                                  const Limits& limits = {},
                                                  const ExtensionOptions& options = {});

struct TrivialFaithfulSplit {
  ElementSet trivial_part;     // T = <g^k, H>
  std::size_t faithful_degree;  // k
};

TrivialFaithfulSplit split_trivial_faithful(const Group& g, const ElementSet& h_set, Elem gen);

/// (alpha, k, z) in Aut(H) x Z_n^* x Z(H), acting on C_n x H by
/// (g_hat^i, y) -> (g_hat^{ik}, z^i alpha(y)).
struct Aut0Triple {
  std::vector<Elem> alpha;
  std::uint64_t k = 1;
  Elem z = 0;
  std::uint64_t modulus = 1;
};

Aut0Triple aut0_identity(const Group& h_group, std::uint64_t n);
/// `a` then `b`: (b.alpha . a.alpha, a.k b.k, b.z^{a.k} b.alpha(a.z)).
Aut0Triple aut0_compose(const Group& h_group, const Aut0Triple& a, const Aut0Triple& b,
                        std::uint64_t n);
Aut0Triple aut0_inverse(const Group& h_group, const Aut0Triple& t);
/// Image vector of the triple on the parent group C_n x H.
std::vector<Elem> aut0_apply(const ParentGroup& parent, const Aut0Triple& t);

/// Checks that every element outside the embedded H (indices >= |H|) has
/// order p*exp(H), i.e. the GK kernel of G is exactly H.
bool kernel_is_embedded_base(const Group& g, std::size_t base_order, std::uint64_t base_exponent);

}  // namespace pgk
