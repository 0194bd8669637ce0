#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "pgk/group.hpp"

namespace pgk {

namespace detail {
std::vector<ElementInvariant> compute_invariants(const Group& g);
Fingerprint compute_fingerprint(const Group& g);
}  // namespace detail

/// Generating sequence used by the backtracking searches. For p-groups it
/// is a Burnside basis (length equals the rank); elements from small
/// invariant classes come first.
std::vector<Elem> search_base(const Group& g);

/// Extends generator images to a homomorphism src -> tgt. Returns the full
/// image vector, or nothing when the assignment violates a relation.
std::optional<std::vector<Elem>> extend_to_hom(const Group& src, std::span<const Elem> gens,
                                               const Group& tgt, std::span<const Elem> images);

/// Automorphism group as a strong generating set relative to search_base.
struct AutGroup {
  Group group;
  std::vector<Elem> base;
  std::vector<std::vector<Elem>> generators;  // image vectors
  std::vector<std::size_t> orbit_lengths;     // basic orbit length per base point
  bool complete = true;                       // false when the node budget ran out

  std::uint64_t order() const;
};

struct SearchBudget {
  std::uint64_t max_nodes = 50'000'000;
};

AutGroup automorphism_group(const Group& g, const SearchBudget& budget = {});

/// Calls `visit` on every automorphism (image vector) in a deterministic
/// order; stops early when `visit` returns false. Returns the number
/// visited.
std::uint64_t for_each_automorphism(const Group& g,
                                    const std::function<bool(std::span<const Elem>)>& visit);

/// Full automorphism list; error bound-exceeded beyond the configured
/// order bound or list length.
std::vector<GroupMap> automorphisms(const Group& g, const Limits& limits = {});

std::optional<GroupMap> isomorphism(const Group& a, const Group& b, const Limits& limits = {});
bool is_isomorphic(const Group& a, const Group& b, const Limits& limits = {});

/// Calls `visit` on every isomorphism a -> b.
std::uint64_t for_each_isomorphism(const Group& a, const Group& b,
                                   const std::function<bool(std::span<const Elem>)>& visit);

bool is_isoclinic(const Group& a, const Group& b, const Limits& limits = {});

/// Orbits of an action given by generator permutations, as blocks sorted by
/// least element; each block is sorted.
std::vector<std::vector<Elem>> orbits_of(std::size_t n, const std::vector<std::vector<Elem>>& perms);

}  // namespace pgk
