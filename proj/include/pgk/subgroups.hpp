#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pgk/group.hpp"

namespace pgk {

/// Incremental subgroup closure. Adding a generator multiplies the old
/// elements by the new generator only and the new elements by every
/// generator, so repeated growth stays linear in the final size.
class ClosureBuilder {
 public:
  explicit ClosureBuilder(const Group& g);

  bool add(Elem x);  // true when the subgroup grew
  bool contains(Elem x) const { return mask_[x] != 0; }
  std::size_t size() const { return elems_.size(); }
  const std::vector<Elem>& elements() const { return elems_; }
  const std::vector<Elem>& gens() const { return gens_; }
  ElementSet to_set() const;

 private:
  Group g_;
  std::vector<char> mask_;
  std::vector<Elem> elems_;
  std::vector<Elem> gens_;
};

ElementSet subgroup_closure(const Group& g, std::span<const Elem> gens);
ElementSet subgroup_closure(const Group& g, const ElementSet& gens);
ElementSet whole_group(const Group& g);
ElementSet trivial_subgroup(const Group& g);

bool is_subgroup(const ElementSet& s);
/// Resolves the tri-state flag by an explicit closure test.
ElementSet resolve_subgroup_flag(ElementSet s);
bool is_normal(const Group& g, const ElementSet& n);
ElementSet intersection(const ElementSet& a, const ElementSet& b);
ElementSet join(const Group& g, const ElementSet& a, const ElementSet& b);

ElementSet center(const Group& g);
ElementSet centralizer(const Group& g, const ElementSet& s);
ElementSet normalizer(const Group& g, const ElementSet& s);
/// Normal closure of `seeds` inside the subgroup generated by `ambient`.
ElementSet normal_closure(const Group& g, std::span<const Elem> seeds,
                          std::span<const Elem> ambient);
/// [A, B] for subgroups given by generators.
ElementSet commutator_subgroup(const Group& g, std::span<const Elem> a, std::span<const Elem> b);
ElementSet derived_subgroup(const Group& g, unsigned depth = 1);
std::size_t derived_length(const Group& g);
ElementSet lower_central(const Group& g, unsigned i);
ElementSet power_subgroup(const Group& g, std::uint64_t k);
/// <x^k : x in S> for a subgroup S.
ElementSet power_subgroup_of(const Group& g, const ElementSet& s, std::uint64_t k);
ElementSet frattini(const Group& g);
/// Independent route: intersection of the kernels of all surjections onto
/// C_p, found by assigning values to generators and checking the
/// homomorphism law edge by edge.
ElementSet frattini_by_maximals(const Group& g);

std::uint64_t exponent(const Group& g);
std::uint64_t exponent_of(const Group& g, const ElementSet& s);

struct Quotient {
  Group group;
  GroupMap projection;
  std::vector<Elem> representatives;  // least element of each coset
};

/// Cosets are represented by their least element; quotient indices follow
/// ascending representative order, so the identity coset is 0.
Quotient quotient(const Group& g, const ElementSet& n);

Group direct_product(const Group& a, const Group& b, const Limits& limits = {});

/// Cyclic group of order n with labels 1, a, a^2, ...
Group cyclic_group(std::size_t n, const std::string& symbol = "a");

AbelianInvariants abelian_invariants(const Group& g);
/// Invariants of an abelian p-subgroup S of G.
AbelianInvariants abelian_invariants_of(const Group& g, const ElementSet& s);

ElementSet sylow_subgroup(const Group& g, unsigned p);
unsigned rank(const Group& g);

struct Subgroup {
  Group group;
  std::vector<Elem> embedding;  // subgroup index -> parent index
};

/// Table restriction; identity first, then ascending parent index.
Subgroup restrict_to(const Group& g, const ElementSet& s);

/// Image of a subset under a map.
ElementSet image(const GroupMap& m, const ElementSet& s);

/// Light's test over the generators: O(n^2 k).
bool associative_over_generators(const Group& g);
bool associative_full(const Group& g);

}  // namespace pgk
