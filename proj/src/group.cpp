#include "pgk/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <mutex>
#include <numeric>

#include "pgk/search.hpp"
#include "pgk/subgroups.hpp"

namespace pgk {

namespace detail {

struct GroupData {
  std::size_t n = 1;
  std::vector<std::uint16_t> table{0};
  std::vector<std::uint16_t> inverse{0};
  std::vector<std::uint32_t> orders{1};
  std::vector<std::string> labels;
  std::optional<unsigned> prime_hint;

  mutable std::once_flag gens_once;
  mutable std::once_flag inv_once;
  mutable std::once_flag fp_once;
  mutable std::once_flag abelian_once;
  mutable std::vector<Elem> gens;
  mutable std::vector<ElementInvariant> invs;
  mutable Fingerprint fp;
  mutable bool abelian = true;
};

}  // namespace detail

namespace {

constexpr std::size_t kMaxStorableOrder = 65536;

void finish(detail::GroupData& d) {
  const std::size_t n = d.n;
  d.inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (d.table[a * n + b] == 0) {
        d.inverse[a] = static_cast<std::uint16_t>(b);
        break;
      }
    }
  }
  d.orders.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    std::uint32_t k = 1;
    std::size_t x = a;
    while (x != 0) {
      x = d.table[x * n + a];
      ++k;
    }
    d.orders[a] = k;
  }
}

void check_shape(std::size_t n, std::span<const std::uint16_t> t) {
  for (std::size_t b = 0; b < n; ++b) {
    if (t[b] != b || t[b * n] != b) {
      throw Error(ErrorCode::invalid_table, "element 0 is not the identity");
    }
  }
}

void check_latin(std::size_t n, std::span<const std::uint16_t> t) {
  std::vector<std::uint32_t> seen(n, 0);
  std::uint32_t stamp = 0;
  for (std::size_t a = 0; a < n; ++a) {
    ++stamp;
    for (std::size_t b = 0; b < n; ++b) {
      auto v = t[a * n + b];
      if (seen[v] == stamp) throw Error(ErrorCode::invalid_table, "row is not a permutation");
      seen[v] = stamp;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    ++stamp;
    for (std::size_t a = 0; a < n; ++a) {
      auto v = t[a * n + b];
      if (seen[v] == stamp) throw Error(ErrorCode::invalid_table, "column is not a permutation");
      seen[v] = stamp;
    }
  }
}

void check_associative(std::size_t n, std::span<const std::uint16_t> t) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = t[a * n + b];
      for (std::size_t c = 0; c < n; ++c) {
        if (t[ab * n + c] != t[a * n + t[b * n + c]]) {
          throw Error(ErrorCode::not_associative, "multiplication table is not associative");
        }
      }
    }
}

}  // namespace

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::not_a_p_group: return "not-a-p-group";
    case ErrorCode::not_abelian: return "not-abelian";
    case ErrorCode::not_normal: return "not-normal";
    case ErrorCode::not_a_subgroup: return "not-a-subgroup";
    case ErrorCode::bound_exceeded: return "bound-exceeded";
    case ErrorCode::order_cap: return "order-cap";
    case ErrorCode::invalid_table: return "invalid-table";
    case ErrorCode::not_associative: return "associativity-failure";
    case ErrorCode::invalid_params: return "invalid-params";
    case ErrorCode::criterion_violated: return "criterion-violated";
    case ErrorCode::h_not_central: return "h-not-central";
    case ErrorCode::h_not_max_order: return "h-not-max-order";
    case ErrorCode::order_mismatch: return "order-mismatch";
    case ErrorCode::incompatible_spec: return "incompatible-spec";
    case ErrorCode::g_does_not_generate: return "g-does-not-generate";
    case ErrorCode::modulus_mismatch: return "modulus-mismatch";
    case ErrorCode::trivial_group: return "trivial-group";
    case ErrorCode::not_applicable: return "not-applicable";
    case ErrorCode::root_is_gk_type: return "root-is-gk-type";
    case ErrorCode::is_gk_type: return "is-gk-type";
    case ErrorCode::incomplete_catalog: return "incomplete-catalog";
    case ErrorCode::limits_exceeded: return "limits-exceeded";
    case ErrorCode::parse_error: return "parse-error";
    case ErrorCode::io_error: return "io-error";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

std::size_t Limits::default_order_cap() {
  static const std::size_t cap = [] {
    std::size_t v = 512;
    if (const char* env = std::getenv("PGK_ORDER_CAP")) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(env, &end, 10);
      if (end != env && parsed > 0) v = static_cast<std::size_t>(parsed);
    }
    return std::min(v, kMaxStorableOrder);
  }();
  return cap;
}

Group::Group() : d_(std::make_shared<detail::GroupData>()) {}

Group Group::from_rows(const std::vector<std::vector<Elem>>& rows,
                       std::vector<std::string> labels, std::optional<unsigned> prime,
                       const Limits& limits) {
  const std::size_t n = rows.size();
  if (n == 0) throw Error(ErrorCode::invalid_table, "empty table");
  if (n > limits.order_cap || n > kMaxStorableOrder) {
    throw Error(ErrorCode::order_cap, "order " + std::to_string(n) + " exceeds cap");
  }
  std::vector<std::uint16_t> flat(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n) throw Error(ErrorCode::invalid_table, "table is not square");
    for (std::size_t b = 0; b < n; ++b) {
      if (rows[a][b] >= n) throw Error(ErrorCode::invalid_table, "entry out of range");
      flat[a * n + b] = static_cast<std::uint16_t>(rows[a][b]);
    }
  }
  if (!labels.empty() && labels.size() != n) {
    throw Error(ErrorCode::invalid_table, "label count does not match order");
  }
  check_shape(n, flat);
  check_latin(n, flat);
  if (n <= limits.associativity_check_bound) check_associative(n, flat);
  if (prime) {
    auto base = prime_power_base(n);
    if (n > 1 && (!base || *base != *prime)) {
      throw Error(ErrorCode::invalid_table, "prime does not match group order");
    }
  }
  return from_trusted(n, std::move(flat), std::move(labels), prime);
}

Group Group::from_trusted(std::size_t order, std::vector<std::uint16_t> table,
                          std::vector<std::string> labels, std::optional<unsigned> prime) {
  if (order == 0 || order > kMaxStorableOrder || table.size() != order * order) {
    throw Error(ErrorCode::invalid_table, "bad table shape");
  }
  check_shape(order, table);
  auto d = std::make_shared<detail::GroupData>();
  d->n = order;
  d->table = std::move(table);
  d->labels = std::move(labels);
  d->prime_hint = prime;
  finish(*d);
  return Group(std::move(d));
}

std::size_t Group::order() const noexcept { return d_->n; }

Elem Group::mul(Elem a, Elem b) const noexcept { return d_->table[a * d_->n + b]; }

Elem Group::inv(Elem a) const noexcept { return d_->inverse[a]; }

std::uint32_t Group::elem_order(Elem a) const noexcept { return d_->orders[a]; }

Elem Group::pow(Elem a, long long k) const noexcept {
  const long long m = d_->orders[a];
  k %= m;
  if (k < 0) k += m;
  Elem result = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

Elem Group::commutator(Elem a, Elem b) const noexcept {
  return mul(mul(inv(a), inv(b)), mul(a, b));
}

Elem Group::conj(Elem a, Elem g) const noexcept { return mul(mul(inv(g), a), g); }

std::string Group::label(Elem a) const {
  if (!d_->labels.empty()) return d_->labels[a];
  return "e" + std::to_string(a);
}

bool Group::has_labels() const noexcept { return !d_->labels.empty(); }

const std::vector<std::string>& Group::labels() const noexcept { return d_->labels; }

std::optional<Elem> Group::find_label(std::string_view name) const {
  for (std::size_t i = 0; i < d_->labels.size(); ++i) {
    if (d_->labels[i] == name) return static_cast<Elem>(i);
  }
  return std::nullopt;
}

std::optional<unsigned> Group::prime() const {
  if (d_->n == 1) return d_->prime_hint;
  return prime_power_base(d_->n);
}

std::optional<unsigned> Group::prime_hint() const noexcept { return d_->prime_hint; }

Group Group::with_prime(unsigned p) const {
  return from_trusted(d_->n, d_->table, d_->labels, p);
}

Group Group::with_labels(std::vector<std::string> labels) const {
  if (!labels.empty() && labels.size() != d_->n) {
    throw Error(ErrorCode::invalid_params, "label count does not match order");
  }
  return from_trusted(d_->n, d_->table, std::move(labels), d_->prime_hint);
}

bool Group::is_abelian() const {
  std::call_once(d_->abelian_once, [this] {
    const auto gens = generators();
    for (std::size_t i = 0; i < gens.size() && d_->abelian; ++i)
      for (std::size_t j = i + 1; j < gens.size(); ++j)
        if (mul(gens[i], gens[j]) != mul(gens[j], gens[i])) {
          d_->abelian = false;
          break;
        }
  });
  return d_->abelian;
}

std::span<const Elem> Group::generators() const {
  std::call_once(d_->gens_once, [this] {
    const std::size_t n = d_->n;
    std::vector<Elem> chosen;
    std::vector<char> in(n, 0);
    in[0] = 1;
    std::size_t covered = 1;
    for (Elem x = 1; x < n && covered < n; ++x) {
      if (in[x]) continue;
      chosen.push_back(x);
      auto closure = subgroup_closure(*this, chosen);
      for (Elem y : closure.members) in[y] = 1;
      covered = closure.size();
    }
    // drop redundant entries, latest first
    for (std::size_t i = chosen.size(); i-- > 0;) {
      std::vector<Elem> rest = chosen;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (subgroup_closure(*this, rest).size() == n) chosen = std::move(rest);
    }
    d_->gens = std::move(chosen);
  });
  return d_->gens;
}

std::span<const ElementInvariant> Group::invariants() const {
  std::call_once(d_->inv_once, [this] { d_->invs = detail::compute_invariants(*this); });
  return d_->invs;
}

const Fingerprint& Group::fingerprint() const {
  std::call_once(d_->fp_once, [this] { d_->fp = detail::compute_fingerprint(*this); });
  return d_->fp;
}

std::vector<std::vector<Elem>> Group::rows() const {
  const std::size_t n = d_->n;
  std::vector<std::vector<Elem>> out(n, std::vector<Elem>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) out[a][b] = d_->table[a * n + b];
  return out;
}

std::span<const std::uint16_t> Group::raw_table() const noexcept { return d_->table; }

ElementSet::ElementSet(Group g, std::vector<Elem> elems, Tri sub)
    : parent(std::move(g)), members(std::move(elems)), is_subgroup(sub) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
}

bool ElementSet::contains(Elem x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

std::vector<char> ElementSet::mask() const {
  std::vector<char> m(parent.order(), 0);
  for (Elem x : members) m[x] = 1;
  return m;
}

bool GroupMap::is_homomorphism() const {
  const std::size_t n = source.order();
  if (images.size() != n) return false;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (images[source.mul(a, b)] != target.mul(images[a], images[b])) return false;
  return true;
}

bool GroupMap::is_permutation() const {
  if (images.size() != target.order()) return false;
  std::vector<char> seen(target.order(), 0);
  for (Elem x : images) {
    if (x >= target.order() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

GroupMap identity_map(const Group& g) {
  GroupMap m{g, g, std::vector<Elem>(g.order()), true};
  std::iota(m.images.begin(), m.images.end(), Elem{0});
  return m;
}

GroupMap compose(const GroupMap& first, const GroupMap& second) {
  GroupMap m{first.source, second.target, std::vector<Elem>(first.images.size()),
             first.bijective && second.bijective};
  for (std::size_t i = 0; i < first.images.size(); ++i) m.images[i] = second.images[first.images[i]];
  return m;
}

GroupMap inverse(const GroupMap& m) {
  if (!m.is_permutation()) throw Error(ErrorCode::invalid_params, "map is not bijective");
  GroupMap r{m.target, m.source, std::vector<Elem>(m.images.size()), true};
  for (std::size_t i = 0; i < m.images.size(); ++i) r.images[m.images[i]] = static_cast<Elem>(i);
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<unsigned> prime_factors(std::uint64_t n) {
  std::vector<unsigned> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(static_cast<unsigned>(d));
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(static_cast<unsigned>(n));
  return out;
}

std::optional<unsigned> prime_power_base(std::uint64_t n) {
  auto f = prime_factors(n);
  if (f.size() == 1) return f.front();
  return std::nullopt;
}

unsigned log_base(std::uint64_t n, unsigned p) {
  unsigned k = 0;
  while (n > 1) {
    if (n % p != 0) throw Error(ErrorCode::invalid_params, "value is not a power of p");
    n /= p;
    ++k;
  }
  return k;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

std::uint64_t lcm_u(std::uint64_t a, std::uint64_t b) { return std::lcm(a, b); }

}  // namespace pgk
