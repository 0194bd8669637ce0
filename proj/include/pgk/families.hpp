#pragma once

#include <map>
#include <string>
#include <vector>

#include "pgk/group.hpp"

namespace pgk {

/// A named family with integer parameters. List-valued parameters (the
/// exponents of `abelian`) are written with ':' separators, e.g. e=1:2.
struct FamilySpec {
  std::string name;
  std::map<std::string, std::string> params;
};

/// Parses "name(k=v,...)" with or without a leading "family:".
FamilySpec parse_family(const std::string& text);
std::string to_string(const FamilySpec& spec);

struct FamilyInfo {
  std::string name;
  std::string params;
  std::string description;
};

const std::vector<FamilyInfo>& family_catalog();

/// Builds the group and re-checks its defining relations on the table.
Group make_family(const FamilySpec& spec, const Limits& limits = {});
Group make_family(const std::string& text, const Limits& limits = {});

// Direct constructors used by tests and the acceptance suite.
Group make_cyclic(std::size_t n, const std::string& symbol = "a");
Group make_abelian(unsigned p, const std::vector<unsigned>& exponents, const Limits& limits = {});
Group make_elementary(unsigned p, unsigned k, const Limits& limits = {});
/// G_(x,a) over <y> = C_{2^{l+1}}, degree 2, y^g = y^a, g^2 = x.
Group make_dihedral2(unsigned l, const Limits& limits = {});
Group make_semidihedral(unsigned l, const Limits& limits = {});
Group make_twisted_dihedral(unsigned l, const Limits& limits = {});
Group make_quaternion(unsigned l, const Limits& limits = {});
/// Dihedral group of order 2n.
Group make_dihedral(unsigned n, const Limits& limits = {});
Group make_dicyclic(unsigned n, const Limits& limits = {});
Group make_modular(unsigned p, unsigned l, const Limits& limits = {});
Group make_heisenberg(unsigned p, unsigned e, const Limits& limits = {});
Group make_extraspecial_plus(unsigned p, const Limits& limits = {});
Group make_sg16_13(const Limits& limits = {});
Group make_sg64_198(const Limits& limits = {});
Group make_cp3_nonsplit(unsigned p, const Limits& limits = {});
Group make_cpe_times_e(unsigned p, unsigned e, const Limits& limits = {});
Group make_a4(const Limits& limits = {});

}  // namespace pgk
