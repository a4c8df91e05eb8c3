#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "holoreg/group.hpp"

namespace holoreg {

/// Metacyclic presentation C(e,d,k) = <x, y | x^e, y^d, y x y^-1 = x^k>.
///
/// `k` is kept as the least positive residue mod e (so k = 1 when e = 1).
/// `z = gcd(e, k-1)`, `g_theta = e / z` is the order bound of theta, and
/// `ord = ord_e(k)`.
class CGroupPresentation {
 public:
  CGroupPresentation(std::int64_t e, std::int64_t d, std::int64_t k);

  std::int64_t e() const { return e_; }
  std::int64_t d() const { return d_; }
  std::int64_t k() const { return k_; }
  std::int64_t z() const { return z_; }
  std::int64_t g_theta() const { return g_; }
  std::int64_t ord() const { return ord_; }
  std::int64_t order() const { return e_ * d_; }
  /// Every prime factor of d divides ord_e(k).
  bool normalized() const { return normalized_; }

  /// Element index of x^i y^j inside cgroup_group(*this).
  Elem index(std::int64_t i, std::int64_t j) const;
  std::pair<std::int64_t, std::int64_t> coords(Elem idx) const;

  std::string to_string() const;
  friend bool operator==(const CGroupPresentation& a, const CGroupPresentation& b) {
    return a.e_ == b.e_ && a.d_ == b.d_ && a.k_ == b.k_;
  }

 private:
  std::int64_t e_, d_, k_, z_, g_, ord_;
  bool normalized_;
};

/// Automorphism theta^c phi_u psi_v of C(e,d,k): x -> x^u, y -> x^{cz} y^v.
struct CGroupAut {
  std::int64_t c = 0;
  std::int64_t u = 1;
  std::int64_t v = 1;
  friend bool operator==(const CGroupAut&, const CGroupAut&) = default;
  friend auto operator<=>(const CGroupAut&, const CGroupAut&) = default;
};

enum class StandardAutKind { theta, phi, psi };

/// S(h, l) = 1 + h + ... + h^{l-1} mod `modulus`, by fast doubling.
std::int64_t geometric_sum(std::int64_t h, std::uint64_t l, std::int64_t modulus);
std::int64_t pow_mod(std::int64_t base, std::uint64_t exp, std::int64_t modulus);
/// Multiplicative order of k modulo e (1 when e = 1). Requires gcd(e, k) = 1.
std::int64_t multiplicative_order(std::int64_t k, std::int64_t e);
std::int64_t inverse_mod(std::int64_t a, std::int64_t modulus);

/// (x^i y^j)^l = x^{i S(k^j, l)} y^{j l}.
std::pair<std::int64_t, std::int64_t> cgroup_power(const CGroupPresentation& m, std::int64_t i,
                                                   std::int64_t j, std::uint64_t l);
/// Product (x^i1 y^j1)(x^i2 y^j2) in normal form.
std::pair<std::int64_t, std::int64_t> cgroup_mul(const CGroupPresentation& m,
                                                 std::pair<std::int64_t, std::int64_t> a,
                                                 std::pair<std::int64_t, std::int64_t> b);

/// The group C(e,d,k) as a Cayley table on labels x^i y^j.
FiniteGroup cgroup_group(const CGroupPresentation& m);

struct UnitGroups {
  std::vector<std::int64_t> units_e;  // U(e)
  std::vector<std::int64_t> units_kd; // U_k(d)
};
UnitGroups unit_groups(const CGroupPresentation& m);

CGroupAut standard_aut(const CGroupPresentation& m, StandardAutKind kind, std::int64_t param);
/// Canonical form of a o b.
CGroupAut aut_compose(const CGroupPresentation& m, const CGroupAut& a, const CGroupAut& b);
CGroupAut aut_inverse(const CGroupPresentation& m, const CGroupAut& a);
CGroupAut aut_power(const CGroupPresentation& m, const CGroupAut& a, std::uint64_t l);
bool aut_is_identity(const CGroupPresentation& m, const CGroupAut& a);
std::size_t aut_order(const CGroupPresentation& m, const CGroupAut& a);
/// Image of x^i y^j.
std::pair<std::int64_t, std::int64_t> aut_apply(const CGroupPresentation& m, const CGroupAut& a,
                                                std::int64_t i, std::int64_t j);
/// The automorphism as a permutation of cgroup_group(m) indices.
Perm aut_to_perm(const CGroupPresentation& m, const CGroupAut& a);
/// Recover (c, u, v) from the images of x and y, each given as (i, j).
/// Throws GroupError naming the violated relation when the images do not
/// define an automorphism.
CGroupAut aut_decompose(const CGroupPresentation& m, std::pair<std::int64_t, std::int64_t> x_image,
                        std::pair<std::int64_t, std::int64_t> y_image);
/// All theta^c phi_u psi_v in canonical (c, u, v) order.
std::vector<CGroupAut> all_cgroup_auts(const CGroupPresentation& m);
/// g_theta * phi(e) * |U_k(d)|.
std::size_t aut_group_order(const CGroupPresentation& m);

/// Parses `theta:c`, `phi:u`, `psi:v`, `id` joined by `*` (left to right
/// composition) into canonical form.
CGroupAut parse_cgroup_aut(const CGroupPresentation& m, const std::string& text);
std::string format_cgroup_aut(const CGroupAut& a);

struct RecognizedCGroup {
  CGroupPresentation presentation;
  Elem x;
  Elem y;
};

/// Finds a normalized presentation C(e,d,k) of a C-group, choosing the
/// lexicographically least (e, d, k) and the first witnesses in index order.
std::optional<RecognizedCGroup> recognize_cgroup(const FiniteGroup& g);

}  // namespace holoreg
