#pragma once

// Independent brute-force oracles. Nothing here calls the search routines
// under test; everything is exhaustive over tables or permutations.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "holoreg/group.hpp"
#include "holoreg/holomorph.hpp"

namespace oracle {

using holoreg::Elem;
using holoreg::FiniteGroup;
using holoreg::Perm;

inline bool latin_square(const FiniteGroup& g) {
  const std::size_t n = g.order();
  for (std::size_t a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (std::size_t b = 0; b < n; ++b) {
      row[static_cast<std::size_t>(g.mul(static_cast<Elem>(a), static_cast<Elem>(b)))] = 1;
      col[static_cast<std::size_t>(g.mul(static_cast<Elem>(b), static_cast<Elem>(a)))] = 1;
    }
    if (std::count(row.begin(), row.end(), 1) != static_cast<long>(n)) return false;
    if (std::count(col.begin(), col.end(), 1) != static_cast<long>(n)) return false;
  }
  for (std::size_t a = 0; a < n; ++a)
    if (g.mul(0, static_cast<Elem>(a)) != static_cast<Elem>(a) || g.mul(static_cast<Elem>(a), 0) != static_cast<Elem>(a))
      return false;
  return true;
}

inline bool associative(const FiniteGroup& g) {
  const auto n = static_cast<Elem>(g.order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        if (g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c))) return false;
  return true;
}

inline std::size_t order_by_powers(const FiniteGroup& g, Elem a) {
  std::size_t k = 1;
  for (Elem x = a; x != 0; x = g.mul(x, a)) ++k;
  return k;
}

inline std::size_t count_of_order(const FiniteGroup& g, std::size_t ord) {
  std::size_t c = 0;
  for (std::size_t a = 0; a < g.order(); ++a) c += order_by_powers(g, static_cast<Elem>(a)) == ord;
  return c;
}

inline std::size_t phi(std::size_t n) {
  std::size_t c = 0;
  for (std::size_t k = 1; k <= n; ++k) c += std::gcd(k, n) == 1;
  return c;
}

inline bool is_hom(const FiniteGroup& g, const Perm& p) {
  const auto n = static_cast<Elem>(g.order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (p[static_cast<std::size_t>(g.mul(a, b))] != g.mul(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

/// Every automorphism, by trying all permutations fixing the identity. Only
/// for |G| <= 8.
inline std::vector<Perm> automorphisms_by_permutations(const FiniteGroup& g) {
  Perm rest(g.order() - 1);
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<Perm> out;
  do {
    Perm p{0};
    p.insert(p.end(), rest.begin(), rest.end());
    if (is_hom(g, p)) out.push_back(p);
  } while (std::next_permutation(rest.begin(), rest.end()));
  return out;
}

/// Action of (a, pi) on N as a permutation.
inline Perm as_permutation(const FiniteGroup& n, Elem a, const Perm& pi) {
  Perm p(n.order());
  for (std::size_t x = 0; x < n.order(); ++x) p[x] = n.mul(pi[x], n.inv(a));
  return p;
}

inline Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

/// Generators of cyclic regular subgroups of Hol(N), found by building <h>
/// as a permutation group and checking it is regular of order n. Returned as
/// (translation, automorphism) with automorphisms from the permutation scan.
inline std::set<std::pair<Elem, Perm>> cyclic_regular_by_permutations(const FiniteGroup& n,
                                                                      const std::vector<Perm>& auts) {
  std::set<std::pair<Elem, Perm>> out;
  Perm id(n.order());
  std::iota(id.begin(), id.end(), 0);
  for (const auto& pi : auts) {
    for (std::size_t a = 0; a < n.order(); ++a) {
      const Perm h = as_permutation(n, static_cast<Elem>(a), pi);
      std::set<Perm> group{id};
      Perm cur = h;
      while (cur != id) {
        group.insert(cur);
        cur = compose(h, cur);
      }
      if (group.size() != n.order()) continue;
      std::set<Elem> images;
      for (const auto& g : group) images.insert(g[0]);
      if (images.size() == n.order()) out.emplace(static_cast<Elem>(a), pi);
    }
  }
  return out;
}

inline std::int64_t geometric_sum_naive(std::int64_t h, std::int64_t l, std::int64_t modulus) {
  std::int64_t sum = 0, term = 1;
  for (std::int64_t i = 0; i < l; ++i) {
    sum = (sum + term) % modulus;
    term = (term * (h % modulus)) % modulus;
  }
  return modulus == 1 ? 0 : sum;
}

inline bool has_element_of_order(const FiniteGroup& g, std::size_t ord) { return count_of_order(g, ord) > 0; }

}  // namespace oracle
