#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "holoreg/cgroup.hpp"
#include "holoreg/group.hpp"
#include "holoreg/holomorph.hpp"

namespace holoreg {

/// Largest |N| accepted by decompose and classify.
inline constexpr std::size_t kDefaultClassifyBound = 1024;

enum class PKind { trivial, cyclic, dihedral, quaternion, other };

enum class Reason {
  c_group,
  theorem_case_1,
  theorem_case_2,
  fails_supersolvable_reduction,
  fails_p_shape,
  fails_alpha_condition,
};

std::string to_string(PKind kind);
std::string to_string(Reason reason);

/// N = M x| P with M the normal Hall 2'-subgroup (an odd C-group) and P a
/// Sylow 2-subgroup. All witnesses are elements of N.
struct Decomposition {
  FiniteGroup n;
  Subgroup m_subgroup;
  CGroupPresentation presentation{1, 1, 1};
  Elem x = 0;
  Elem y = 0;
  /// m_index[g] = i + e j when g = x^i y^j lies in M, else -1.
  std::vector<Elem> m_index;

  Subgroup p_subgroup;
  PKind p_kind = PKind::trivial;
  std::size_t m = 0;  // |P| = 2^m
  Elem r = 0;         // generator of the cyclic index-2 subgroup (or of P when cyclic)
  Elem s = 0;
  /// alpha[i] is conjugation by p_subgroup.elements[i], restricted to M.
  std::vector<CGroupAut> alpha;
  CGroupAut alpha_r;
  CGroupAut alpha_s;
  std::size_t alpha_image_order = 1;

  /// x^i y^j r^a s^b.
  Elem element(std::int64_t i, std::int64_t j, std::int64_t a, std::int64_t b) const;
  /// Conjugation by t (t normalises M) as theta^c phi_u psi_v.
  CGroupAut conjugation_aut(Elem t) const;
  std::string summary() const;
};

/// Normal Hall 2'-subgroup, its presentation, the Sylow 2-subgroup and its
/// shape. Absent when N has no normal Hall 2'-subgroup or it is not a C-group.
/// A Sylow 2-subgroup that is neither cyclic, dihedral nor quaternion gives
/// p_kind = other.
std::optional<Decomposition> decompose(const FiniteGroup& n,
                                        std::size_t bound = kDefaultClassifyBound);

/// Witness data for the explicit cyclic regular subgroup <rho(eta0) xi>.
struct Construction {
  Perm xi;
  Elem eta0 = 0;
  HolElement witness;
  std::size_t xi_order = 0;
  bool xi_is_automorphism = false;
  bool closed_form_matches = false;  // for every l <= 2n
  bool product_n_is_identity = false;
  bool regular = false;              // cycle through 1_N has length n and witness^n = 1
};

struct NormalizedDecomposition {
  Decomposition dec;
  /// N -> M x|_beta P with beta read off the normalised witnesses.
  Homomorphism isomorphism;
};

struct Verdict {
  bool realizable = false;
  Reason reason = Reason::fails_supersolvable_reduction;
  std::optional<Decomposition> decomposition;
  std::optional<NormalizedDecomposition> normalized;
  std::optional<HolElement> witness;
};

/// Realizability of (C_n, N). On a positive verdict the witness has been
/// checked to generate a cyclic regular subgroup of Hol(N).
Verdict classify(const FiniteGroup& n, std::size_t bound = kDefaultClassifyBound);

/// Chooses new witnesses so that alpha_r = Id and alpha_s = phi_u, and checks
/// the resulting isomorphism onto M x|_beta P. Throws GroupError if the
/// classification condition fails.
NormalizedDecomposition normalize_alpha(const Decomposition& dec);

/// xi on M is alpha_s phi_k^-1, xi(r) = r^-1, xi(s) = rs; eta0 = xyrs.
/// Throws GroupError naming the violated precondition.
Construction construct(const Decomposition& dec);

/// x^l y^l r^{(l+1)/2} s^l for odd l, x^l y^l r^{l/2} s^l for even l.
Elem closed_form_product(const Decomposition& dec, std::size_t l);

/// Image of Aut(N) in Aut(N / M P') as permutations of the four cosets, sorted.
/// Cosets are indexed by the representatives 1, r, s, rs.
std::vector<Perm> quotient_action_probe(const Decomposition& dec,
                                        std::size_t bound = kDefaultAutBound);

/// Realizability of (G, C_n): normal Hall 2'-subgroup that is a C-group and a
/// Sylow 2-subgroup that is trivial or has a cyclic subgroup of index 2.
bool classify_rump(const FiniteGroup& g);

/// Generator of a cyclic regular subgroup for a C-group: rho(y) lambda(x).
HolElement cgroup_witness(const FiniteGroup& n, Elem x, Elem y);

/// The witness generates a cyclic regular subgroup of order |N|.
bool verify_cyclic_witness(const FiniteGroup& n, const HolElement& h);

}  // namespace holoreg
