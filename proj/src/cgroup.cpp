#include "holoreg/cgroup.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <tuple>

namespace holoreg {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(mod(a, m)) * mod(b, m) % m);
}

// Residue used for unit parameters: least positive, so the modulus-1 unit is 1.
std::int64_t unit_residue(std::int64_t a, std::int64_t m) {
  if (m == 1) return 1;
  return mod(a, m);
}

}  // namespace

std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t modulus) {
  if (modulus == 1) return 0;
  std::int64_t result = 1;
  std::int64_t b = mod(base, modulus);
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, b, modulus);
    b = mulmod(b, b, modulus);
    exp >>= 1;
  }
  return result;
}

std::int64_t geometric_sum(std::int64_t h, std::uint64_t l, std::int64_t modulus) {
  if (modulus <= 0) throw GroupError("geometric_sum modulus must be positive");
  if (l == 0 || modulus == 1) return 0;
  if (l % 2 == 1) return mod(1 + mulmod(h, geometric_sum(h, l - 1, modulus), modulus), modulus);
  const std::int64_t half = geometric_sum(h, l / 2, modulus);
  return mulmod(half, 1 + pow_mod(h, l / 2, modulus), modulus);
}

std::int64_t multiplicative_order(std::int64_t k, std::int64_t e) {
  if (e == 1) return 1;
  if (std::gcd(mod(k, e), e) != 1) throw GroupError("k is not a unit modulo e");
  std::int64_t ord = 1;
  std::int64_t x = mod(k, e);
  while (x != 1) {
    x = mulmod(x, k, e);
    ++ord;
  }
  return ord;
}

std::int64_t inverse_mod(std::int64_t a, std::int64_t modulus) {
  if (modulus == 1) return 0;
  std::int64_t old_r = mod(a, modulus), r = modulus, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
  }
  if (old_r != 1) throw GroupError(std::to_string(a) + " is not invertible modulo " + std::to_string(modulus));
  return mod(old_s, modulus);
}

CGroupPresentation::CGroupPresentation(std::int64_t e, std::int64_t d, std::int64_t k)
    : e_(e), d_(d) {
  if (e < 1 || d < 1) throw GroupError("C(e,d,k) needs e, d >= 1");
  if (std::gcd(e, d) != 1) throw GroupError("C(e,d,k) needs gcd(e,d) = 1");
  k_ = (e == 1) ? 1 : mod(k, e);
  if (e > 1 && std::gcd(k_, e) != 1) throw GroupError("C(e,d,k) needs gcd(e,k) = 1");
  ord_ = multiplicative_order(k_, e_);
  if (d_ % ord_ != 0) throw GroupError("C(e,d,k) needs ord_e(k) to divide d");
  z_ = std::gcd(e_, k_ - 1);
  if (z_ == 0) z_ = e_;
  g_ = e_ / z_;
  normalized_ = true;
  for (std::size_t p : prime_factors(static_cast<std::size_t>(d_)))
    if (ord_ % static_cast<std::int64_t>(p) != 0) normalized_ = false;
}

Elem CGroupPresentation::index(std::int64_t i, std::int64_t j) const {
  return static_cast<Elem>(mod(i, e_) + e_ * mod(j, d_));
}

std::pair<std::int64_t, std::int64_t> CGroupPresentation::coords(Elem idx) const {
  return {idx % e_, idx / e_};
}

std::string CGroupPresentation::to_string() const {
  return "C(" + std::to_string(e_) + "," + std::to_string(d_) + "," + std::to_string(k_) + ")";
}

std::pair<std::int64_t, std::int64_t> cgroup_power(const CGroupPresentation& m, std::int64_t i,
                                                   std::int64_t j, std::uint64_t l) {
  const std::int64_t kj = pow_mod(m.k(), static_cast<std::uint64_t>(mod(j, m.d())), m.e());
  const std::int64_t s = geometric_sum(kj, l, m.e());
  return {mulmod(i, s, m.e()), mod(mulmod(j, static_cast<std::int64_t>(l % static_cast<std::uint64_t>(m.d())), m.d()), m.d())};
}

std::pair<std::int64_t, std::int64_t> cgroup_mul(const CGroupPresentation& m,
                                                 std::pair<std::int64_t, std::int64_t> a,
                                                 std::pair<std::int64_t, std::int64_t> b) {
  const std::int64_t twist = pow_mod(m.k(), static_cast<std::uint64_t>(mod(a.second, m.d())), m.e());
  return {mod(a.first + mulmod(b.first, twist, m.e()), m.e()), mod(a.second + b.second, m.d())};
}

FiniteGroup cgroup_group(const CGroupPresentation& m) {
  const auto n = static_cast<std::size_t>(m.order());
  std::vector<Elem> table(n * n);
  Labels labels{{"x", "y"}, {}};
  for (std::size_t a = 0; a < n; ++a) {
    const auto ca = m.coords(static_cast<Elem>(a));
    labels.coords.push_back({static_cast<int>(ca.first), static_cast<int>(ca.second)});
    for (std::size_t b = 0; b < n; ++b) {
      const auto p = cgroup_mul(m, ca, m.coords(static_cast<Elem>(b)));
      table[a * n + b] = m.index(p.first, p.second);
    }
  }
  return FiniteGroup(n, std::move(table), std::move(labels), m.to_string());
}

UnitGroups unit_groups(const CGroupPresentation& m) {
  UnitGroups out;
  if (m.e() == 1) {
    out.units_e = {1};
  } else {
    for (std::int64_t u = 1; u < m.e(); ++u)
      if (std::gcd(u, m.e()) == 1) out.units_e.push_back(u);
  }
  if (m.d() == 1) {
    out.units_kd = {1};
  } else {
    for (std::int64_t v = 1; v < m.d(); ++v)
      if (std::gcd(v, m.d()) == 1 && mod(v - 1, m.ord()) == 0) out.units_kd.push_back(v);
  }
  return out;
}

CGroupAut standard_aut(const CGroupPresentation& m, StandardAutKind kind, std::int64_t param) {
  CGroupAut a;
  switch (kind) {
    case StandardAutKind::theta:
      a.c = mod(param, m.g_theta());
      break;
    case StandardAutKind::phi:
      if (m.e() > 1 && std::gcd(mod(param, m.e()), m.e()) != 1)
        throw GroupError("phi_" + std::to_string(param) + ": parameter is not in U(e)");
      a.u = unit_residue(param, m.e());
      break;
    case StandardAutKind::psi: {
      const std::int64_t v = unit_residue(param, m.d());
      if (m.d() > 1 && (std::gcd(v, m.d()) != 1 || mod(v - 1, m.ord()) != 0))
        throw GroupError("psi_" + std::to_string(param) + ": parameter is not in U_k(d)");
      a.v = v;
      break;
    }
  }
  // Relation check through the decomposer: it rejects images that break the presentation.
  const auto xi = aut_apply(m, a, 1, 0);
  const auto yi = aut_apply(m, a, 0, 1);
  if (aut_decompose(m, xi, yi) != a) throw GroupError("standard automorphism failed verification");
  return a;
}

CGroupAut aut_compose(const CGroupPresentation& m, const CGroupAut& a, const CGroupAut& b) {
  // theta^ca phi_ua psi_va theta^cb phi_ub psi_vb: psi commutes with theta and phi,
  // and phi_u theta = theta^u phi_u.
  CGroupAut out;
  out.c = mod(a.c + mulmod(a.u, b.c, m.g_theta()), m.g_theta());
  out.u = unit_residue(mulmod(a.u, b.u, m.e()), m.e());
  out.v = unit_residue(mulmod(a.v, b.v, m.d()), m.d());
  return out;
}

CGroupAut aut_inverse(const CGroupPresentation& m, const CGroupAut& a) {
  CGroupAut out;
  out.u = unit_residue(inverse_mod(a.u, m.e()), m.e());
  out.v = unit_residue(inverse_mod(a.v, m.d()), m.d());
  out.c = mod(-mulmod(out.u, a.c, m.g_theta()), m.g_theta());
  return out;
}

CGroupAut aut_power(const CGroupPresentation& m, const CGroupAut& a, std::uint64_t l) {
  CGroupAut result;
  CGroupAut base = a;
  while (l > 0) {
    if (l & 1) result = aut_compose(m, result, base);
    base = aut_compose(m, base, base);
    l >>= 1;
  }
  return result;
}

bool aut_is_identity(const CGroupPresentation&, const CGroupAut& a) {
  return a == CGroupAut{};
}

std::size_t aut_order(const CGroupPresentation& m, const CGroupAut& a) {
  std::size_t k = 1;
  for (CGroupAut x = a; !aut_is_identity(m, x); x = aut_compose(m, x, a)) ++k;
  return k;
}

std::pair<std::int64_t, std::int64_t> aut_apply(const CGroupPresentation& m, const CGroupAut& a,
                                                std::int64_t i, std::int64_t j) {
  const std::int64_t jj = mod(j, m.d());
  const std::int64_t s = geometric_sum(m.k(), static_cast<std::uint64_t>(jj), m.e());
  const std::int64_t cz = mulmod(a.c, m.z(), m.e());
  return {mod(mulmod(a.u, i, m.e()) + mulmod(cz, s, m.e()), m.e()), mulmod(a.v, jj, m.d())};
}

Perm aut_to_perm(const CGroupPresentation& m, const CGroupAut& a) {
  Perm p(static_cast<std::size_t>(m.order()));
  for (std::size_t idx = 0; idx < p.size(); ++idx) {
    const auto [i, j] = m.coords(static_cast<Elem>(idx));
    const auto img = aut_apply(m, a, i, j);
    p[idx] = m.index(img.first, img.second);
  }
  return p;
}

CGroupAut aut_decompose(const CGroupPresentation& m, std::pair<std::int64_t, std::int64_t> x_image,
                        std::pair<std::int64_t, std::int64_t> y_image) {
  const std::int64_t e = m.e(), d = m.d();
  if (mod(x_image.second, d) != 0)
    throw GroupError("image of x leaves <x>: order relation x^e = 1 cannot be preserved bijectively");
  const std::int64_t u = mod(x_image.first, e);
  if (e > 1 && std::gcd(u, e) != 1) throw GroupError("image of x does not have order e");
  const std::int64_t c = mod(y_image.first, e);
  const std::int64_t v = mod(y_image.second, d);
  if (d > 1 && std::gcd(v, d) != 1) throw GroupError("image of y does not have order d");
  const std::int64_t kv = pow_mod(m.k(), static_cast<std::uint64_t>(v), e);
  if (e > 1 && kv != m.k()) throw GroupError("relation y x y^-1 = x^k is violated");
  if (mulmod(c, geometric_sum(kv, static_cast<std::uint64_t>(d), e), e) != 0)
    throw GroupError("relation y^d = 1 is violated");
  if (c % m.z() != 0) throw GroupError("image of y is x^c y^v with z not dividing c");
  CGroupAut out;
  out.c = mod(c / m.z(), m.g_theta());
  out.u = unit_residue(u, e);
  out.v = unit_residue(v, d);
  return out;
}

std::vector<CGroupAut> all_cgroup_auts(const CGroupPresentation& m) {
  const auto units = unit_groups(m);
  std::vector<CGroupAut> out;
  for (std::int64_t c = 0; c < m.g_theta(); ++c)
    for (std::int64_t u : units.units_e)
      for (std::int64_t v : units.units_kd) out.push_back({c, u, v});
  return out;
}

std::size_t aut_group_order(const CGroupPresentation& m) {
  const auto units = unit_groups(m);
  return static_cast<std::size_t>(m.g_theta()) * units.units_e.size() * units.units_kd.size();
}

CGroupAut parse_cgroup_aut(const CGroupPresentation& m, const std::string& text) {
  CGroupAut result;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, '*')) {
    if (part == "id" || part.empty()) continue;
    const auto colon = part.find(':');
    if (colon == std::string::npos) throw GroupError("malformed automorphism term '" + part + "'");
    const std::string kind = part.substr(0, colon);
    std::int64_t param = 0;
    try {
      param = std::stoll(part.substr(colon + 1));
    } catch (const std::exception&) {
      throw GroupError("malformed automorphism parameter in '" + part + "'");
    }
    StandardAutKind k;
    if (kind == "theta") k = StandardAutKind::theta;
    else if (kind == "phi") k = StandardAutKind::phi;
    else if (kind == "psi") k = StandardAutKind::psi;
    else throw GroupError("unknown automorphism kind '" + kind + "'");
    result = aut_compose(m, result, standard_aut(m, k, param));
  }
  return result;
}

std::string format_cgroup_aut(const CGroupAut& a) {
  std::string out;
  auto add = [&](const std::string& s) {
    if (!out.empty()) out += '*';
    out += s;
  };
  if (a.c != 0) add("theta:" + std::to_string(a.c));
  if (a.u != 1) add("phi:" + std::to_string(a.u));
  if (a.v != 1) add("psi:" + std::to_string(a.v));
  return out.empty() ? "id" : out;
}

std::optional<RecognizedCGroup> recognize_cgroup(const FiniteGroup& g) {
  if (!is_cgroup(g)) return std::nullopt;
  const auto n = static_cast<std::int64_t>(g.order());
  const auto gens = minimal_generating_set(g);
  const auto count = static_cast<Elem>(n);
  for (std::int64_t e = 1; e <= n; ++e) {
    if (n % e != 0) continue;
    const std::int64_t d = n / e;
    if (std::gcd(e, d) != 1) continue;
    std::optional<RecognizedCGroup> best;
    for (Elem x = 0; x < count; ++x) {
      if (static_cast<std::int64_t>(g.element_order(x)) != e) continue;
      // exponent lookup for <x>; also decides normality of <x>
      std::vector<std::int64_t> exponent(g.order(), -1);
      Elem p = 0;
      for (std::int64_t i = 0; i < e; ++i, p = g.mul(p, x)) exponent[static_cast<std::size_t>(p)] = i;
      const bool normal = std::all_of(gens.begin(), gens.end(), [&](Elem t) {
        return exponent[static_cast<std::size_t>(g.conj(t, x))] >= 0;
      });
      if (!normal) continue;
      for (Elem y = 0; y < count; ++y) {
        if (static_cast<std::int64_t>(g.element_order(y)) != d) continue;
        const std::int64_t k = exponent[static_cast<std::size_t>(g.conj(y, x))];
        CGroupPresentation pres(e, d, k);
        if (!pres.normalized()) continue;
        if (!best || pres.k() < best->presentation.k()) best = RecognizedCGroup{pres, x, y};
      }
    }
    if (best) return best;
  }
  return std::nullopt;
}

}  // namespace holoreg
