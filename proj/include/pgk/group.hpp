#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pgk {

using Elem = std::uint32_t;

inline constexpr Elem kNoElem = static_cast<Elem>(-1);

enum class ErrorCode {
  not_a_p_group,
  not_abelian,
  not_normal,
  not_a_subgroup,
  bound_exceeded,
  order_cap,
  invalid_table,
  not_associative,
  invalid_params,
  criterion_violated,
  h_not_central,
  h_not_max_order,
  order_mismatch,
  incompatible_spec,
  g_does_not_generate,
  modulus_mismatch,
  trivial_group,
  not_applicable,
  root_is_gk_type,
  is_gk_type,
  incomplete_catalog,
  limits_exceeded,
  parse_error,
  io_error,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Work bounds shared by every enumeration entry point.
///
/// `order_cap` defaults to 512 and can be overridden process-wide with the
/// PGK_ORDER_CAP environment variable. Groups are stored with 16-bit table
/// entries, so no cap may exceed 65536.
struct Limits {
  std::size_t order_cap = default_order_cap();
  std::size_t automorphism_order_bound = 256;
  std::size_t max_automorphisms = 4'000'000;
  std::size_t associativity_check_bound = 256;
  std::size_t regular_check_bound = 128;
  unsigned threads = 1;

  static std::size_t default_order_cap();
};

namespace detail {
struct GroupData;
}

struct ElementInvariant {
  std::uint32_t order = 0;
  std::uint32_t centralizer = 0;
  std::uint32_t roots = 0;       // #{y : y^q = x} for the least prime q dividing |G|
  std::uint32_t power_order = 0; // order of x^q
  bool central = false;
  bool in_derived = false;
  bool in_power = false;  // x in G^q
  // membership in G^{q^a}, G^{q^a}G', Z_i and the lower central terms
  std::uint64_t layers = 0;

  auto operator<=>(const ElementInvariant&) const = default;
};

struct Fingerprint {
  std::size_t order = 0;
  std::size_t center = 0;
  std::size_t derived = 0;
  std::size_t derived_length = 0;
  std::vector<std::pair<ElementInvariant, std::uint32_t>> classes;
  std::vector<std::uint32_t> abelianization_orders;  // sorted coset orders in G/G'

  auto operator<=>(const Fingerprint&) const = default;
};

/// A finite group stored as a dense multiplication table, identity at 0.
///
/// Values are immutable and cheap to copy; derived data (generators, element
/// invariants, fingerprint) is computed lazily and is safe to share across
/// threads.
class Group {
 public:
  Group();  // trivial group

  /// Validated construction from an untrusted table. Checks identity at 0,
  /// the Latin-square property and, for n <= associativity_check_bound,
  /// full associativity.
  static Group from_rows(const std::vector<std::vector<Elem>>& rows,
                         std::vector<std::string> labels = {},
                         std::optional<unsigned> prime = std::nullopt,
                         const Limits& limits = {});

  /// Construction from a recipe known to produce a group. Only shape and
  /// identity are checked; callers are responsible for associativity.
  static Group from_trusted(std::size_t order, std::vector<std::uint16_t> table,
                            std::vector<std::string> labels = {},
                            std::optional<unsigned> prime = std::nullopt);

  std::size_t order() const noexcept;
  Elem mul(Elem a, Elem b) const noexcept;
  Elem inv(Elem a) const noexcept;
  std::uint32_t elem_order(Elem a) const noexcept;
  Elem pow(Elem a, long long k) const noexcept;
  Elem commutator(Elem a, Elem b) const noexcept;  // a^-1 b^-1 a b
  Elem conj(Elem a, Elem g) const noexcept;        // g^-1 a g

  std::string label(Elem a) const;
  bool has_labels() const noexcept;
  const std::vector<std::string>& labels() const noexcept;
  std::optional<Elem> find_label(std::string_view name) const;

  /// Prime of a non-trivial p-group; for the trivial group the hint, if any.
  std::optional<unsigned> prime() const;
  std::optional<unsigned> prime_hint() const noexcept;
  Group with_prime(unsigned p) const;
  Group with_labels(std::vector<std::string> labels) const;

  bool is_abelian() const;

  /// Greedy irredundant generating sequence (ascending index).
  std::span<const Elem> generators() const;
  std::span<const ElementInvariant> invariants() const;
  const Fingerprint& fingerprint() const;

  std::vector<std::vector<Elem>> rows() const;
  std::span<const std::uint16_t> raw_table() const noexcept;

  bool same_object(const Group& other) const noexcept { return d_ == other.d_; }

 private:
  explicit Group(std::shared_ptr<const detail::GroupData> d) : d_(std::move(d)) {}
  std::shared_ptr<const detail::GroupData> d_;
};

enum class Tri { no, yes, unknown };

/// Sorted duplicate-free subset of a group's elements.
struct ElementSet {
  Group parent;
  std::vector<Elem> members;
  Tri is_subgroup = Tri::unknown;

  ElementSet() = default;
  ElementSet(Group g, std::vector<Elem> elems, Tri sub = Tri::unknown);

  std::size_t size() const noexcept { return members.size(); }
  bool contains(Elem x) const;
  std::vector<char> mask() const;
  bool operator==(const ElementSet& other) const { return members == other.members; }
};

/// Element-wise map between groups.
struct GroupMap {
  Group source;
  Group target;
  std::vector<Elem> images;
  bool bijective = false;

  Elem operator()(Elem x) const { return images[x]; }
  bool is_homomorphism() const;
  bool is_permutation() const;
};

GroupMap identity_map(const Group& g);
/// `first` then `second`.
GroupMap compose(const GroupMap& first, const GroupMap& second);
GroupMap inverse(const GroupMap& m);

struct AbelianInvariants {
  unsigned prime = 0;
  std::vector<unsigned> exponents;  // non-decreasing

  bool operator==(const AbelianInvariants&) const = default;
};

// Small integer helpers.
bool is_prime(std::uint64_t n);
std::vector<unsigned> prime_factors(std::uint64_t n);
std::optional<unsigned> prime_power_base(std::uint64_t n);
unsigned log_base(std::uint64_t n, unsigned p);  // exact log; throws otherwise
std::uint64_t ipow(std::uint64_t base, unsigned exp);
std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b);
std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b);

}  // namespace pgk
