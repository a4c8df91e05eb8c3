#pragma once

#include <string>
#include <vector>

#include "holoreg/cgroup.hpp"
#include "holoreg/group.hpp"

namespace holoreg {

struct CorpusEntry {
  std::string spec;
  std::string family;  // "semidirect", "prime-power", "c-group", "misc"
  FiniteGroup group;
};

/// Odd C-groups of order at most `max_order` in normalised form, one per
/// isomorphism class.
std::vector<CGroupPresentation> odd_cgroups(std::int64_t max_order);

/// Pairs (alpha_r, alpha_s) satisfying the relations of P (dihedral or
/// quaternion of order `p_order`) inside Aut(M).
std::vector<std::pair<CGroupAut, CGroupAut>> p_actions(const CGroupPresentation& m, bool quaternion,
                                                       std::size_t p_order);

/// All M x|_alpha P for M an odd C-group with |M| <= max_m and P in
/// {D4, Q8, D8, D16, Q16}, reduced up to isomorphism.
std::vector<CorpusEntry> semidirect_corpus(std::int64_t max_m = 21);

/// Prime-power groups of orders 4, 8, 9, 16, 27, a few C-groups and a few
/// groups outside the 2-nilpotent family.
std::vector<CorpusEntry> extra_corpus();

/// semidirect_corpus() followed by extra_corpus(), with isomorphic duplicates
/// of earlier entries removed.
std::vector<CorpusEntry> default_corpus();

/// Keeps the first representative of each isomorphism class, preserving order.
std::vector<CorpusEntry> dedupe_by_isomorphism(std::vector<CorpusEntry> entries);

}  // namespace holoreg
