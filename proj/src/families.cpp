#include "pgk/families.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pgk/extensions.hpp"
#include "pgk/subgroups.hpp"

namespace pgk {

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::logic_error("family relation failed: " + what);
}

std::string trim(const std::string& s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

unsigned to_unsigned(const std::string& key, const std::string& v) {
  if (v.empty() || !std::all_of(v.begin(), v.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
    throw Error(ErrorCode::invalid_params, "parameter " + key + " must be a non-negative integer");
  }
  try {
    return static_cast<unsigned>(std::stoul(v));
  } catch (const std::exception&) {
    throw Error(ErrorCode::invalid_params, "parameter " + key + " is out of range");
  }
}

class Params {
 public:
  explicit Params(const FamilySpec& spec) : spec_(spec) {}

  bool has(const std::string& k) const { return spec_.params.count(k) != 0; }

  unsigned get(const std::string& k) {
    auto it = spec_.params.find(k);
    if (it == spec_.params.end()) throw Error(ErrorCode::invalid_params, spec_.name + " needs parameter " + k);
    used_.insert(k);
    return to_unsigned(k, it->second);
  }

  unsigned get_or(const std::string& k, unsigned fallback) { return has(k) ? get(k) : fallback; }

  std::vector<unsigned> get_list(const std::string& k) {
    auto it = spec_.params.find(k);
    if (it == spec_.params.end()) throw Error(ErrorCode::invalid_params, spec_.name + " needs parameter " + k);
    used_.insert(k);
    std::vector<unsigned> out;
    std::stringstream ss(it->second);
    std::string part;
    while (std::getline(ss, part, ':')) out.push_back(to_unsigned(k, trim(part)));
    return out;
  }

  unsigned prime(const std::string& k = "p") {
    unsigned p = get(k);
    if (!is_prime(p)) throw Error(ErrorCode::invalid_params, "parameter " + k + " must be prime");
    return p;
  }

  void finish() const {
    for (const auto& [k, v] : spec_.params)
      if (!used_.count(k)) throw Error(ErrorCode::invalid_params, spec_.name + " does not take parameter " + k);
  }

 private:
  const FamilySpec& spec_;
  std::set<std::string> used_;
};

void at_least(unsigned v, unsigned lo, const std::string& what) {
  if (v < lo) throw Error(ErrorCode::invalid_params, what + " must be at least " + std::to_string(lo));
}

// Automorphism of C_n given by y -> y^a.
std::vector<Elem> cyclic_power_map(std::size_t n, std::uint64_t a) {
  std::vector<Elem> k(n);
  for (std::size_t i = 0; i < n; ++i) k[i] = static_cast<Elem>((i * a) % n);
  return k;
}

// G_(x,a) with x = y^xexp.
Group two_group_family(unsigned l, std::uint64_t a, std::uint64_t xexp, const Limits& limits) {
  const std::size_t n = std::size_t{1} << (l + 1);
  Group base = make_cyclic(n, "y");
  CyclicExtensionSpec spec{base, cyclic_power_map(n, a % n), static_cast<Elem>(xexp % n), 2};
  Group g = cyclic_extension_p(spec, limits);
  const Elem gen = static_cast<Elem>(n);
  require(g.conj(1, gen) == g.pow(1, static_cast<long long>(a % n)), "y^g = y^a");
  require(g.mul(gen, gen) == static_cast<Elem>(xexp % n), "g^2 = x");
  require(g.elem_order(1) == n, "|y| = 2^{l+1}");
  return g;
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
  std::string s = trim(text);
  if (s.rfind("family:", 0) == 0) s = s.substr(7);
  FamilySpec spec;
  const auto open = s.find('(');
  if (open == std::string::npos) {
    spec.name = trim(s);
  } else {
    if (s.back() != ')') throw Error(ErrorCode::parse_error, "missing ')' in family spec");
    spec.name = trim(s.substr(0, open));
    std::string body = s.substr(open + 1, s.size() - open - 2);
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) {
      item = trim(item);
      if (item.empty()) continue;
      const auto eq = item.find('=');
      if (eq == std::string::npos) throw Error(ErrorCode::parse_error, "expected key=value in family spec");
      spec.params[trim(item.substr(0, eq))] = trim(item.substr(eq + 1));
    }
  }
  if (spec.name.empty()) throw Error(ErrorCode::parse_error, "empty family name");
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string out = spec.name;
  if (!spec.params.empty()) {
    out += "(";
    bool first = true;
    for (const auto& [k, v] : spec.params) {
      if (!first) out += ",";
      out += k + "=" + v;
      first = false;
    }
    out += ")";
  }
  return out;
}

const std::vector<FamilyInfo>& family_catalog() {
  static const std::vector<FamilyInfo> catalog = {
      {"cyclic", "n | p,e", "cyclic group C_n (or C_{p^e})"},
      {"abelian", "p, e=e1:e2:...", "C_{p^e1} x C_{p^e2} x ..."},
      {"elementary", "p, k", "elementary abelian C_p^k"},
      {"dihedral", "l | n", "dihedral 2-group of order 2^{l+2}, or dihedral of order 2n"},
      {"quaternion", "l", "generalized quaternion of order 2^{l+2}"},
      {"semidihedral", "l>=2", "semidihedral of order 2^{l+2}"},
      {"twisted_dihedral", "l>=2", "modular 2-group <y>:<g>, y^g = y^{1+2^l}, order 2^{l+2}"},
      {"modular_Gl", "p, l>=1", "<y>:<g>, y^g = y^{1+p^l}, |y| = p^{l+1}, |g| = p"},
      {"extraspecial_plus", "p", "Heisenberg group of order p^3 (exponent p for odd p)"},
      {"heisenberg_pe", "p, e", "(<z> x <y>):<x>, y^x = yz, all generators of order p^e"},
      {"sg16_13", "", "(<z> x <y>):<x>, |z| = 4, y^x = y z^2, x^2 = 1"},
      {"sg64_198", "", "C_4 x sg16_13"},
      {"cp3_nonsplit", "p", "<x,y>:<g>, x^g = xy, y^g = y, |g| = p^2"},
      {"cpe_times_E", "p, e", "C_{p^e} x heisenberg_pe(p,e)"},
      {"a4", "", "alternating group of degree 4 as C_2^2:C_3"},
      {"dicyclic", "n>=2", "dicyclic group of order 4n"},
  };
  return catalog;
}

Group make_cyclic(std::size_t n, const std::string& symbol) { return cyclic_group(n, symbol); }

Group make_abelian(unsigned p, const std::vector<unsigned>& exponents, const Limits& limits) {
  static const std::string symbols = "abcdefhjkmnuvw";
  Group g;
  std::uint64_t order = 1;
  for (unsigned e : exponents) order *= ipow(p, e);
  if (order > limits.order_cap) throw Error(ErrorCode::order_cap, "abelian group exceeds order cap");
  std::size_t idx = 0;
  bool first = true;
  for (unsigned e : exponents) {
    if (e == 0) continue;
    const std::string sym(1, symbols[idx++ % symbols.size()]);
    Group c = make_cyclic(ipow(p, e), sym);
    g = first ? c : direct_product(g, c, limits);
    first = false;
  }
  if (first) g = g.with_prime(p).with_labels({"1"});
  return g;
}

Group make_elementary(unsigned p, unsigned k, const Limits& limits) {
  return make_abelian(p, std::vector<unsigned>(k, 1), limits);
}

Group make_dihedral2(unsigned l, const Limits& limits) {
  at_least(l, 1, "l");
  const std::uint64_t n = std::uint64_t{1} << (l + 1);
  return two_group_family(l, n - 1, 0, limits);
}

Group make_semidihedral(unsigned l, const Limits& limits) {
  at_least(l, 2, "l");
  const std::uint64_t n = std::uint64_t{1} << (l + 1);
  return two_group_family(l, n - 1 + (std::uint64_t{1} << l), 0, limits);
}

Group make_twisted_dihedral(unsigned l, const Limits& limits) {
  at_least(l, 2, "l");
  return two_group_family(l, 1 + (std::uint64_t{1} << l), 0, limits);
}

Group make_quaternion(unsigned l, const Limits& limits) {
  at_least(l, 1, "l");
  const std::uint64_t n = std::uint64_t{1} << (l + 1);
  return two_group_family(l, n - 1, std::uint64_t{1} << l, limits);
}

Group make_dihedral(unsigned n, const Limits& limits) {
  at_least(n, 2, "n");
  Group base = make_cyclic(n, "r");
  CyclicExtensionSpec spec{base, cyclic_power_map(n, n - 1), 0, 2};
  Group g = cyclic_extension(spec, limits, "s");
  require(g.conj(1, static_cast<Elem>(n)) == g.inv(1), "r^s = r^-1");
  require(g.elem_order(static_cast<Elem>(n)) == 2, "s^2 = 1");
  return g;
}

Group make_dicyclic(unsigned n, const Limits& limits) {
  at_least(n, 2, "n");
  const std::size_t m = 2 * std::size_t{n};
  Group base = make_cyclic(m, "a");
  CyclicExtensionSpec spec{base, cyclic_power_map(m, m - 1), static_cast<Elem>(n), 2};
  Group g = cyclic_extension(spec, limits, "x");
  const Elem x = static_cast<Elem>(m);
  require(g.conj(1, x) == g.inv(1), "a^x = a^-1");
  require(g.mul(x, x) == static_cast<Elem>(n), "x^2 = a^n");
  return g;
}

Group make_modular(unsigned p, unsigned l, const Limits& limits) {
  at_least(l, 1, "l");
  const std::size_t n = ipow(p, l + 1);
  Group base = make_cyclic(n, "y");
  CyclicExtensionSpec spec{base, cyclic_power_map(n, 1 + ipow(p, l)), 0, p};
  Group g = cyclic_extension_p(spec, limits);
  const Elem gen = static_cast<Elem>(n);
  require(g.conj(1, gen) == g.pow(1, static_cast<long long>(1 + ipow(p, l))), "y^g = y^{1+p^l}");
  require(g.elem_order(gen) == p, "|g| = p");
  return g;
}

Group make_heisenberg(unsigned p, unsigned e, const Limits& limits) {
  at_least(e, 1, "e");
  const std::size_t q = ipow(p, e);
  Group a = direct_product(make_cyclic(q, "z"), make_cyclic(q, "y"), limits);
  // z^i y^j -> z^{i+j} y^j
  std::vector<Elem> kappa(q * q);
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) kappa[i * q + j] = static_cast<Elem>(((i + j) % q) * q + j);
  CyclicExtensionSpec spec{a, kappa, 0, q};
  Group g = cyclic_extension(spec, limits, "x");
  const Elem y = 1, z = static_cast<Elem>(q), x = static_cast<Elem>(q * q);
  require(g.conj(y, x) == g.mul(y, z), "y^x = yz");
  require(g.conj(z, x) == z && g.mul(y, z) == g.mul(z, y), "z central");
  require(g.elem_order(x) == q && g.elem_order(y) == q && g.elem_order(z) == q, "orders p^e");
  return g;
}

Group make_extraspecial_plus(unsigned p, const Limits& limits) { return make_heisenberg(p, 1, limits); }

Group make_sg16_13(const Limits& limits) {
  Group a = direct_product(make_cyclic(4, "z"), make_cyclic(2, "y"), limits);
  // z^i y^j -> z^{i+2j} y^j
  std::vector<Elem> kappa(8);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 2; ++j) kappa[i * 2 + j] = static_cast<Elem>(((i + 2 * j) % 4) * 2 + j);
  CyclicExtensionSpec spec{a, kappa, 0, 2};
  Group g = cyclic_extension_p(spec, limits);
  const Elem y = 1, z = 2, x = 8;
  require(g.conj(y, x) == g.mul(y, g.mul(z, z)), "y^x = y z^2");
  require(g.conj(z, x) == z, "z^x = z");
  require(g.elem_order(x) == 2, "x^2 = 1");
  return g.with_labels([&] {
    std::vector<std::string> l = g.labels();
    for (auto& s : l)
      if (s.rfind("g", 0) == 0) s = "x" + s.substr(1);
    return l;
  }());
}

Group make_sg64_198(const Limits& limits) {
  return direct_product(make_cyclic(4, "w"), make_sg16_13(limits), limits);
}

Group make_cp3_nonsplit(unsigned p, const Limits& limits) {
  Group a = direct_product(make_cyclic(p, "x"), make_cyclic(p, "y"), limits);
  // x^i y^j -> x^i y^{i+j}
  std::vector<Elem> kappa(std::size_t{p} * p);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) kappa[i * p + j] = static_cast<Elem>(i * p + (i + j) % p);
  CyclicExtensionSpec spec{a, kappa, 0, std::size_t{p} * p};
  Group g = cyclic_extension(spec, limits, "g");
  const Elem x = static_cast<Elem>(p), y = 1, gen = static_cast<Elem>(p * p);
  require(g.conj(x, gen) == g.mul(x, y), "x^g = xy");
  require(g.conj(y, gen) == y, "y^g = y");
  require(g.elem_order(gen) == p * p, "|g| = p^2");
  return g;
}

Group make_cpe_times_e(unsigned p, unsigned e, const Limits& limits) {
  return direct_product(make_cyclic(ipow(p, e), "w"), make_heisenberg(p, e, limits), limits);
}

Group make_a4(const Limits& limits) {
  Group a = direct_product(make_cyclic(2, "a"), make_cyclic(2, "b"), limits);
  // a = 2, b = 1, ab = 3; a -> b, b -> ab
  std::vector<Elem> kappa{0, 3, 1, 2};
  CyclicExtensionSpec spec{a, kappa, 0, 3};
  Group g = cyclic_extension(spec, limits, "t");
  require(g.conj(2, 4) == 1 && g.conj(1, 4) == 3, "a^t = b, b^t = ab");
  require(g.elem_order(4) == 3, "t^3 = 1");
  return g;
}

Group make_family(const FamilySpec& spec, const Limits& limits) {
  Params pr(spec);
  const std::string& n = spec.name;
  Group g;
  if (n == "cyclic") {
    if (pr.has("n")) {
      unsigned m = pr.get("n");
      at_least(m, 1, "n");
      if (m > limits.order_cap) throw Error(ErrorCode::order_cap, "order exceeds cap");
      g = make_cyclic(m);
    } else {
      unsigned p = pr.prime();
      unsigned e = pr.get("e");
      if (ipow(p, e) > limits.order_cap) throw Error(ErrorCode::order_cap, "order exceeds cap");
      g = e == 0 ? Group().with_prime(p).with_labels({"1"}) : make_cyclic(ipow(p, e));
    }
  } else if (n == "abelian") {
    unsigned p = pr.prime();
    auto e = pr.get_list("e");
    for (unsigned x : e) at_least(x, 1, "each exponent");
    std::sort(e.begin(), e.end());
    g = make_abelian(p, e, limits);
  } else if (n == "elementary") {
    unsigned p = pr.prime();
    g = make_elementary(p, pr.get("k"), limits);
  } else if (n == "dihedral") {
    if (pr.has("n")) g = make_dihedral(pr.get("n"), limits);
    else g = make_dihedral2(pr.get("l"), limits);
  } else if (n == "quaternion") {
    g = make_quaternion(pr.get("l"), limits);
  } else if (n == "semidihedral") {
    g = make_semidihedral(pr.get("l"), limits);
  } else if (n == "twisted_dihedral") {
    g = make_twisted_dihedral(pr.get("l"), limits);
  } else if (n == "modular_Gl") {
    unsigned p = pr.prime();
    g = make_modular(p, pr.get("l"), limits);
  } else if (n == "extraspecial_plus") {
    g = make_extraspecial_plus(pr.prime(), limits);
  } else if (n == "heisenberg_pe") {
    unsigned p = pr.prime();
    g = make_heisenberg(p, pr.get("e"), limits);
  } else if (n == "sg16_13") {
    g = make_sg16_13(limits);
  } else if (n == "sg64_198") {
    g = make_sg64_198(limits);
  } else if (n == "cp3_nonsplit") {
    g = make_cp3_nonsplit(pr.prime(), limits);
  } else if (n == "cpe_times_E") {
    unsigned p = pr.prime();
    g = make_cpe_times_e(p, pr.get("e"), limits);
  } else if (n == "a4") {
    g = make_a4(limits);
  } else if (n == "dicyclic") {
    g = make_dicyclic(pr.get("n"), limits);
  } else {
    throw Error(ErrorCode::invalid_params, "unknown family " + n);
  }
  pr.finish();
  if (g.order() <= limits.associativity_check_bound && !associative_full(g)) {
    throw Error(ErrorCode::not_associative, "family table is not associative");
  }
  return g;
}

Group make_family(const std::string& text, const Limits& limits) {
  return make_family(parse_family(text), limits);
}

}  // namespace pgk
