#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pgk/group.hpp"

namespace pgk {

/// 2 when the Sylow 2-subgroup is non-trivial and not of GK type, else 1.
unsigned gamma(const Group& g);

struct KulkarniFactor {
  unsigned prime = 0;
  std::uint64_t sylow_order = 1;
  std::uint64_t sylow_exponent = 1;
};

struct KulkarniReport {
  std::uint64_t invariant = 1;  // N(G)
  unsigned gamma = 1;
  std::vector<KulkarniFactor> factors;
};

KulkarniReport kulkarni_report(const Group& g);
std::uint64_t kulkarni_invariant(const Group& g);

/// Elements whose 2-part has order below exp(G_2); verified to be a
/// subgroup of index 2. Error not-applicable when G_2 is trivial or not of
/// GK type.
ElementSet two_maximal_kernel(const Group& g);

bool is_two_perfect(const Group& g);
/// The implication "2-perfect implies G_2 not of GK type" for G.
bool check_2perfect_corollary(const Group& g);

struct Signature {
  unsigned h = 0;
  std::vector<unsigned> periods;  // non-decreasing, each >= 2
  bool operator==(const Signature&) const = default;
};

struct GeneratingVector {
  std::vector<Elem> hyperbolic;  // a_1, b_1, ..., a_h, b_h
  std::vector<Elem> elliptic;    // c_1, ..., c_r
};

struct GenusLimits {
  std::size_t max_group_order = 24;
  unsigned max_r = 8;
  unsigned max_h = 3;
  unsigned min_h = 0;
  std::uint64_t max_nodes = 10'000'000;
};

struct GenusResult {
  std::optional<Signature> signature;
  std::optional<GeneratingVector> vector;
  bool space_fully_covered = false;  // an empty result then proves absence
  std::uint64_t nodes = 0;
};

/// Exact Riemann-Hurwitz check: 2(g-1) = |G| (2(h-1) + sum(1 - 1/n_i)).
bool riemann_hurwitz_holds(std::uint64_t order, std::uint64_t genus, const Signature& s);

/// Signatures are tried by ascending r, then lexicographic periods, then
/// ascending h. Error limits-exceeded when the node budget runs out or the
/// group is larger than allowed.
GenusResult genus_search(const Group& g, std::uint64_t genus, const GenusLimits& limits = {});

/// Orders, long relation, generation and the Riemann-Hurwitz equation.
bool validate_witness(const Group& g, std::uint64_t genus, const Signature& s,
                      const GeneratingVector& v);

struct SpectrumReport {
  std::uint64_t invariant = 1;
  std::vector<std::uint64_t> found;
  std::vector<std::uint64_t> absent;     // proved absent (space fully covered)
  std::vector<std::uint64_t> undecided;  // none found, space not fully covered
  bool congruence_holds = true;          // every found genus is 1 mod N(G)
};

SpectrumReport spectrum_congruence_check(const Group& g, std::uint64_t genus_max,
                                         const GenusLimits& limits = {});

}  // namespace pgk
