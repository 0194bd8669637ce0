#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "pgk/group.hpp"

namespace pgk {

enum class GkFailure { none, not_a_subgroup, subgroup_not_maximal, trivial_group };

std::string_view to_string(GkFailure f);

struct GkFlags {
  bool abelian = false;
  Tri regular = Tri::unknown;  // unknown beyond the regularity bound
  bool powerful = false;
  bool mep = false;
};

/// Full GK diagnosis of a p-group.
struct GkReport {
  Group group;
  unsigned prime = 0;
  std::uint64_t exponent = 1;
  bool is_gk = false;
  GkFailure failure = GkFailure::none;
  ElementSet kernel;                 // K(G) as a set; empty for the trivial group
  std::vector<ElementSet> series;    // G = K^0 > K^1 > ... > K^level (the root)
  std::vector<unsigned> series_ranks;
  unsigned level = 0;
  unsigned deficiency = 0;
  unsigned rank = 0;
  Group root;                        // restriction of G to the last series member
  GkFlags flags;
};

/// Elements of non-maximal order; is_subgroup resolved. Error trivial-group.
ElementSet kernel_set(const Group& g);

/// GK reason a group fails (or none) without computing the series.
GkFailure gk_failure(const Group& g);
bool is_gk_type(const Group& g);

struct GkOptions {
  bool flags = true;
};

GkReport gk_report(const Group& g, const Limits& limits = {}, const GkOptions& options = {});

unsigned cyclic_deficiency(const Group& g);
bool is_powerful(const Group& g);
bool has_mep(const Group& g);
/// Literal pairwise check. Error bound-exceeded beyond the regularity bound.
bool is_regular(const Group& g, const Limits& limits = {});

}  // namespace pgk
