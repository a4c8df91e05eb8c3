#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "holoreg/group.hpp"

namespace holoreg {

inline constexpr std::size_t kDefaultHolBound = 20000;
inline constexpr std::size_t kDefaultRegularSubgroupBound = 5000;
inline constexpr std::size_t kDefaultHolTableBound = 4096;

/// The holomorph element rho(a) pi, acting on N by x -> pi(x) a^-1.
struct HolElement {
  Elem translation = 0;
  Perm twist;

  friend bool operator==(const HolElement&, const HolElement&) = default;
  friend auto operator<=>(const HolElement&, const HolElement&) = default;
};

/// (a, pi)(b, sigma) = (a pi(b), pi o sigma).
HolElement hol_compose(const FiniteGroup& n, const HolElement& a, const HolElement& b);
HolElement hol_identity(const FiniteGroup& n);
HolElement hol_power(const FiniteGroup& n, const HolElement& h, std::size_t l);
Elem hol_apply(const FiniteGroup& n, const HolElement& h, Elem x);
/// rho(a): x -> x a^-1.
HolElement rho(const FiniteGroup& n, Elem a);
/// lambda(a): x -> a x, which is rho(a^-1) conj(a).
HolElement lambda(const FiniteGroup& n, Elem a);
Perm conjugation(const FiniteGroup& n, Elem a);
/// Length of the cycle of 1_N under h.
std::size_t cycle_length_at_identity(const FiniteGroup& n, const HolElement& h);

/// Hol(N) = rho(N) x| Aut(N) with elements indexed as twist * |N| + translation.
///
/// Elements are kept as (translation, twist-index) pairs; the Cayley table is
/// only materialised on request through `as_group`.
class Holomorph {
 public:
  explicit Holomorph(FiniteGroup n, std::size_t bound = kDefaultHolBound);

  const FiniteGroup& base() const { return n_; }
  std::size_t order() const { return n_.order() * auts_.size(); }
  const std::vector<Perm>& automorphisms() const { return auts_; }
  std::optional<std::size_t> aut_index(const Perm& p) const;

  std::size_t index(Elem translation, std::size_t twist) const {
    return twist * n_.order() + static_cast<std::size_t>(translation);
  }
  Elem translation_of(std::size_t idx) const { return static_cast<Elem>(idx % n_.order()); }
  std::size_t twist_of(std::size_t idx) const { return idx / n_.order(); }

  HolElement element(std::size_t idx) const;
  std::size_t index_of(const HolElement& h) const;
  std::size_t mul(std::size_t a, std::size_t b) const;
  std::size_t inv(std::size_t a) const;
  Elem apply(std::size_t idx, Elem x) const;
  std::size_t element_order(std::size_t idx) const;

  /// Cayley table of Hol(N) with labels (translation, twist); throws
  /// BoundExceeded when |Hol(N)| exceeds `table_bound`.
  FiniteGroup as_group(std::size_t table_bound = kDefaultHolTableBound) const;

 private:
  std::size_t compose_auts(std::size_t a, std::size_t b) const;

  FiniteGroup n_;
  std::vector<Perm> auts_;
  std::map<Perm, std::size_t> aut_lookup_;
  std::vector<std::size_t> aut_table_;  // |Aut|^2, empty when too large
  std::vector<std::size_t> aut_inverse_;
};

Holomorph hol_group(const FiniteGroup& n, std::size_t bound = kDefaultHolBound);

/// Closed subgroup whose evaluation at 1_N is a bijection onto N. Throws
/// GroupError if the set is not closed under composition.
bool is_regular_subgroup(const FiniteGroup& n, std::span<const HolElement> s);

/// Every h in Hol(N) whose orbit through 1_N has length |N|, i.e. every
/// generator of a cyclic regular subgroup. OpenMP-parallel over translations;
/// output sorted by holomorph index.
std::vector<std::size_t> cyclic_regular_oracle_indices(const Holomorph& hol);
/// Serial reference scan; must agree with the parallel one exactly.
std::vector<std::size_t> cyclic_regular_oracle_indices_serial(const Holomorph& hol);
std::vector<HolElement> cyclic_regular_oracle(const Holomorph& hol);
/// First generator of a cyclic regular subgroup in index order, if any.
std::optional<std::size_t> find_cyclic_regular(const Holomorph& hol);
/// Distinct subgroups <h> for a list of generators, as sorted index sets.
std::vector<std::vector<std::size_t>> cyclic_subgroups_of(const Holomorph& hol,
                                                          std::span<const std::size_t> gens);

/// All regular subgroups of Hol(N) isomorphic to G, as sorted holomorph index
/// sets. Requires |G| = |N| and |Hol(N)| within `bound`.
std::vector<std::vector<std::size_t>> regular_subgroups_isomorphic_to(
    const FiniteGroup& g, const Holomorph& hol, std::size_t bound = kDefaultRegularSubgroupBound);

/// f: G -> Aut(N), g: G -> N with g(st) = g(s) f(s)(g(t)).
struct CrossedHom {
  FiniteGroup source;  // G
  FiniteGroup target;  // N
  std::vector<Perm> f;
  std::vector<Elem> g;

  bool f_is_homomorphism() const;
  bool satisfies_cocycle() const;
  bool bijective() const;
};

CrossedHom crossed_from_regular(const FiniteGroup& n, std::span<const HolElement> s);
std::vector<HolElement> regular_from_crossed(const CrossedHom& ch);

struct RestrictedCrossedHom {
  Subgroup h;          // g^-1(M) inside G
  EmbeddedGroup h_group;
  EmbeddedGroup m_group;
  CrossedHom crossed;  // for (H, M)
};

/// Restriction to a characteristic subgroup M of N.
RestrictedCrossedHom induction_restrict(const CrossedHom& ch, const Subgroup& m,
                                        std::size_t aut_bound = kDefaultAutBound);

struct QuotientCrossedHom {
  QuotientGroup g_quotient;  // G/H
  QuotientGroup n_quotient;  // N/M
  CrossedHom crossed;
};

/// Induced crossed homomorphism on (G/H, N/M); requires H = g^-1(M) central.
QuotientCrossedHom induction_quotient(const CrossedHom& ch, const Subgroup& m, const Subgroup& h,
                                      std::size_t aut_bound = kDefaultAutBound);

/// (N, ., o) with a o b = sigma_a(b), sigma_a the element of S sending 1_N to a.
class SkewBrace {
 public:
  SkewBrace(FiniteGroup additive, std::vector<Elem> circle_table);

  const FiniteGroup& additive() const { return additive_; }
  Elem circle(Elem a, Elem b) const {
    return circle_[static_cast<std::size_t>(a) * additive_.order() + static_cast<std::size_t>(b)];
  }
  /// a o (b c) == (a o b) a^-1 (a o c) for all triples.
  bool satisfies_brace_axiom() const;
  FiniteGroup circle_group() const;

 private:
  FiniteGroup additive_;
  std::vector<Elem> circle_;
};

SkewBrace skew_brace_from_regular(const FiniteGroup& n, std::span<const HolElement> s);

/// All fixed point free pairs (f, h) in Hom(G, N)^2.
std::vector<std::pair<Homomorphism, Homomorphism>> fpf_search(const FiniteGroup& g,
                                                              const FiniteGroup& n,
                                                              std::size_t bound = kDefaultAutBound);
bool is_fixed_point_free(const Homomorphism& f, const Homomorphism& h);
/// {rho(h(s)) lambda(f(s))}.
std::vector<HolElement> regular_from_fpf(const Homomorphism& f, const Homomorphism& h);

/// Projection pair on N1 x N2 for N = N1 N2 with trivial intersection.
struct ProductFpf {
  FiniteGroup product;  // N1 x N2 with element (a, b) at index ia + |N1| ib
  Homomorphism f;
  Homomorphism h;
};
ProductFpf product_fpf_pair(const FiniteGroup& n, const Subgroup& n1, const Subgroup& n2);

}  // namespace holoreg
