#pragma once

#include <cstdint>
#include <vector>

#include "pgk/group.hpp"
#include "pgk/search.hpp"

namespace pgk {

struct OrbitBlock {
  std::vector<Elem> members;          // sorted
  Elem representative = 0;            // least member
  std::size_t frattini_members = 0;   // members lying in Phi(H)
  bool intersects_frattini() const { return frattini_members > 0; }
};

struct OrbitPartition {
  ElementSet universe;  // Z-set of H: central elements of order exp(H)
  unsigned level = 0;
  std::vector<OrbitBlock> blocks;  // ordered by representative
  bool exact = true;               // false when the automorphism search hit its budget
};

/// (Z(H))^{p^i}.
ElementSet z_power_subgroup(const Group& h_group, unsigned i);

/// Generators of the unit group mod p^e: the least primitive root for odd
/// p; for p = 2 the pair {-1, 5} (e >= 3), {-1} (e = 2), none (e <= 1).
std::vector<std::uint64_t> unit_generators(unsigned p, unsigned e);

/// Partition of the Z-set under the group generated by automorphisms,
/// unit exponentiation and translation by Z^{p^l}(H). Level 0 gives a
/// single block. Error criterion-violated when exp(Z(H)) < exp(H).
OrbitPartition a_l_orbits(const Group& h_group, unsigned level, const Limits& limits = {});
/// Same, reusing a precomputed automorphism group of H.
OrbitPartition a_l_orbits(const Group& h_group, unsigned level, const AutGroup& aut);

struct BranchRecord {
  unsigned level = 0;                  // level of the vertex where stems split
  std::size_t parent_block = 0;        // block index in the partition at `level`
  std::vector<std::size_t> child_blocks;  // block indices at level + 1
};

struct StemAnalysis {
  Group root;
  unsigned prime = 0;
  unsigned e = 0;                            // exp(R) = p^e
  std::vector<OrbitPartition> partitions;    // levels 1..e
  std::size_t stem_count = 0;
  std::vector<BranchRecord> branching;
  bool stable_beyond_e = true;               // A_{e+1} partition equals A_e
  bool exact = true;
};

/// Error is-gk-type for a GK-type input. When exp(Z(R)) < exp(R) the tree is
/// finite and the analysis is empty with stem_count 0.
StemAnalysis stem_analysis(const Group& root, const Limits& limits = {});

/// Trivial GK extension of level l for the block's representative.
Group stem_vertex(const Group& root, const OrbitBlock& block, unsigned level, const Limits& limits = {});

}  // namespace pgk
