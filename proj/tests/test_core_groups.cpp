#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "holoreg/cgroup.hpp"
#include "holoreg/corpus.hpp"
#include "holoreg/group.hpp"
#include "holoreg/group_spec.hpp"
#include "test_support.hpp"

using namespace holoreg;

namespace {

std::size_t exponent(const FiniteGroup& g) {
  std::size_t e = 1;
  for (std::size_t a = 0; a < g.order(); ++a) e = std::lcm(e, g.element_order(static_cast<Elem>(a)));
  return e;
}

bool contains_subgroup(const std::vector<Subgroup>& subs, const Subgroup& h) {
  return std::find(subs.begin(), subs.end(), h) != subs.end();
}

}  // namespace

TEST_CASE("cyclic groups") {
  CHECK(cyclic_group(1).order() == 1);
  const auto c6 = cyclic_group(6);
  CHECK(c6.element_order(1) == 6);
  CHECK(oracle::count_of_order(cyclic_group(12), 12) == 4);
  for (std::size_t n = 1; n <= 30; ++n) {
    const auto g = cyclic_group(n);
    CHECK(oracle::latin_square(g));
    CHECK(oracle::associative(g));
  }
}

TEST_CASE("dihedral groups") {
  const auto d4 = dihedral_group(4);
  CHECK(d4.is_abelian());
  CHECK(exponent(d4) == 2);

  const auto d8 = dihedral_group(8);
  const auto z = center(d8);
  CHECK(z.size() == 2);
  CHECK(z.contains(d8.mul(1, 1)));

  const auto d16 = dihedral_group(16);
  CHECK(d16.element_order(1) == 8);
  CHECK(d16.element_order(8) == 2);
  CHECK(d16.label_string(1) == "r");
  CHECK(d16.label_string(8) == "s");
  // s r s^-1 = r^-1
  CHECK(d16.conj(8, 1) == d16.inv(1));
  for (std::size_t order : {4u, 8u, 16u, 32u}) {
    const auto g = dihedral_group(order);
    CHECK(oracle::latin_square(g));
    CHECK(oracle::associative(g));
  }
  CHECK_THROWS_AS(dihedral_group(12), GroupError);
  CHECK(dihedral_group_of_order(12).order() == 12);
}

TEST_CASE("quaternion groups") {
  const auto q8 = quaternion_group(8);
  CHECK(oracle::count_of_order(q8, 4) == 6);
  CHECK(oracle::count_of_order(q8, 2) == 1);
  const Elem r = 1, s = 4;
  CHECK(q8.mul(s, s) == q8.mul(r, r));

  const auto q16 = quaternion_group(16);
  CHECK(oracle::count_of_order(q16, 2) == 1);
  CHECK(q16.element_order(q16.power(1, 4)) == 2);
  for (std::size_t order : {8u, 16u, 32u}) {
    const auto g = quaternion_group(order);
    CHECK(oracle::latin_square(g));
    CHECK(oracle::associative(g));
  }
  CHECK_THROWS_AS(quaternion_group(4), GroupError);
}

TEST_CASE("semidirect products") {
  const auto c3 = cyclic_group(3);
  const auto d4 = dihedral_group(4);
  Perm id(3);
  std::iota(id.begin(), id.end(), 0);
  const std::vector<Perm> trivial(4, id);
  const auto direct = semidirect_product(c3, d4, trivial);
  CHECK(direct.order() == 12);
  CHECK(direct.is_abelian());
  CHECK(find_isomorphism(direct, direct_product(c3, d4)).has_value());

  const auto n84 = parse_group_spec("semidirect (cgroup 21 1 1) (dihedral 4) alpha r->phi:8 s->phi:13");
  CHECK(n84.order() == 84);
  const auto d14xd6 = direct_product(dihedral_group_of_order(14), dihedral_group_of_order(6));
  CHECK(find_isomorphism(n84, d14xd6, 1024).has_value());

  const auto n = parse_group_spec("semidirect (cgroup 7 3 2) (dihedral 4) alpha r->id s->phi:6");
  CHECK(n.order() == 84);
  CHECK_FALSE(n.is_abelian());
  const auto hall = normal_hall_odd_subgroup(n);
  REQUIRE(hall.has_value());
  CHECK(hall->size() == 21);
  CHECK(is_normal(n, *hall));
  CHECK(oracle::latin_square(n));
  CHECK(oracle::associative(n));
}

TEST_CASE("element orders") {
  const auto d16 = dihedral_group(16);
  CHECK(element_order(d16, 0) == 1);
  CHECK(element_order(d16, 1) == 8);
  const CGroupPresentation pres(7, 3, 2);
  const auto m = cgroup_group(pres);
  const auto xy = m.mul(pres.index(1, 0), pres.index(0, 1));
  CHECK(element_order(m, xy) == 3);
  for (const auto& e : extra_corpus())
    for (std::size_t a = 0; a < e.group.order(); ++a)
      CHECK(e.group.element_order(static_cast<Elem>(a)) == oracle::order_by_powers(e.group, static_cast<Elem>(a)));
}

TEST_CASE("sylow subgroups") {
  const auto c12 = cyclic_group(12);
  const auto p = sylow_subgroup(c12, 2);
  CHECK(p.size() == 4);
  CHECK(p.contains(3));

  const auto d14xd6 = direct_product(dihedral_group_of_order(14), dihedral_group_of_order(6));
  const auto p2 = sylow_subgroup(d14xd6, 2);
  CHECK(p2.size() == 4);
  for (Elem t : p2.elements) CHECK(d14xd6.element_order(t) <= 2);

  const auto g42 = cgroup_group(CGroupPresentation(21, 2, 20));
  const auto p7 = sylow_subgroup(g42, 7);
  CHECK(p7.size() == 7);
  CHECK(std::count_if(p7.elements.begin(), p7.elements.end(), [&](Elem a) { return g42.element_order(a) == 7; }) == 6);
}

TEST_CASE("C-group detection") {
  for (std::size_t n = 1; n <= 40; ++n) CHECK(is_cgroup(cyclic_group(n)));
  CHECK(is_cgroup(dihedral_group_of_order(6)));
  CHECK_FALSE(is_cgroup(dihedral_group(8)));
  CHECK_FALSE(is_cgroup(dihedral_group(4)));
  CHECK_FALSE(is_cgroup(quaternion_group(8)));
  CHECK(is_cgroup(cgroup_group(CGroupPresentation(7, 3, 2))));
}

TEST_CASE("automorphism groups") {
  CHECK(automorphism_group(cyclic_group(7)).size() == 6);
  CHECK(automorphism_group(dihedral_group(4)).size() == 6);
  CHECK(automorphism_group(cgroup_group(CGroupPresentation(7, 3, 2))).size() == 42);
  CHECK(automorphism_perms(dihedral_group(8)).size() == 8);
  CHECK(automorphism_perms(quaternion_group(8)).size() == 24);
  for (std::size_t n = 1; n <= 64; ++n) CHECK(automorphism_perms(cyclic_group(n)).size() == oracle::phi(n));
}

TEST_CASE("automorphisms agree with a permutation scan") {
  const std::vector<FiniteGroup> small{cyclic_group(6), dihedral_group(4), dihedral_group_of_order(6), dihedral_group(8),
                                       quaternion_group(8), direct_product(cyclic_group(2), cyclic_group(4))};
  for (const auto& g : small) {
    auto mine = automorphism_perms(g, g.order());
    auto brute = oracle::automorphisms_by_permutations(g);
    std::sort(mine.begin(), mine.end());
    std::sort(brute.begin(), brute.end());
    CHECK(mine == brute);
  }
}

TEST_CASE("characteristic subgroups") {
  const auto d4 = dihedral_group(4);
  const auto chars = characteristic_subgroups(d4);
  CHECK(chars.size() == 2);
  CHECK(contains_subgroup(chars, trivial_subgroup()));
  CHECK(contains_subgroup(chars, whole_group(d4)));

  const auto n = parse_group_spec("semidirect (cgroup 7 3 2) (dihedral 4) alpha r->id s->phi:6");
  const auto hall = normal_hall_odd_subgroup(n);
  REQUIRE(hall.has_value());
  CHECK(contains_subgroup(characteristic_subgroups(n, 1024), *hall));

  for (const auto& g : {cyclic_group(12), dihedral_group(8), quaternion_group(8)}) {
    const auto cs = characteristic_subgroups(g);
    CHECK(contains_subgroup(cs, trivial_subgroup()));
    CHECK(contains_subgroup(cs, whole_group(g)));
    CHECK(contains_subgroup(cs, center(g)));
    CHECK(contains_subgroup(cs, commutator_subgroup(g)));
  }
}

TEST_CASE("isomorphism search") {
  CHECK_FALSE(find_isomorphism(cyclic_group(4), direct_product(cyclic_group(2), cyclic_group(2))).has_value());
  const auto iso = find_isomorphism(dihedral_group(4), direct_product(cyclic_group(2), cyclic_group(2)));
  REQUIRE(iso.has_value());
  CHECK(iso->valid());
  CHECK(iso->bijective());
  CHECK_FALSE(find_isomorphism(quaternion_group(8), dihedral_group(8)).has_value());
  CHECK(find_isomorphism(symmetric_group(3), dihedral_group_of_order(6)).has_value());
  CHECK(find_isomorphism(heisenberg_group(3), parse_group_spec("semidirect (cyclic 9) (cyclic 3) alpha g->phi:4")) ==
        std::nullopt);
}

TEST_CASE("relabelled groups are isomorphic") {
  const auto g = dihedral_group(16);
  std::vector<Elem> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  std::reverse(perm.begin() + 1, perm.end());
  const auto h = relabel(g, perm);
  CHECK(oracle::associative(h));
  CHECK(find_isomorphism(g, h).has_value());
  CHECK(isomorphism_invariants(g) == isomorphism_invariants(h));
}

TEST_CASE("invalid tables are rejected") {
  // not a Latin square
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 1}), GroupError);
  // identity not at index 0
  CHECK_THROWS_AS(FiniteGroup(2, {1, 0, 0, 1}), GroupError);
  // Latin square with identity 0 but not associative (order 5 loop)
  const std::vector<Elem> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1, 3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(FiniteGroup(5, loop), GroupError);
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1}), GroupError);
  CHECK_THROWS_AS(FiniteGroup(2, {0, 1, 1, 2}), GroupError);
}

TEST_CASE("commutator subgroup of dihedral and quaternion groups") {
  for (const auto& p : {dihedral_group(8), dihedral_group(16), dihedral_group(32), quaternion_group(8),
                        quaternion_group(16), quaternion_group(32)}) {
    const Elem r = 1;
    const auto expected = subgroup_generated(p, std::vector<Elem>{p.mul(r, r)});
    const auto pp = commutator_subgroup(p);
    CHECK(pp == expected);
    const auto q = quotient_group(p, pp);
    CHECK(find_isomorphism(q.group, dihedral_group(4)).has_value());
  }
}

TEST_CASE("odd-order normal Hall subgroup") {
  CHECK_FALSE(normal_hall_odd_subgroup(alternating_group(4)).has_value());
  const auto s4 = symmetric_group(4);
  CHECK_FALSE(normal_hall_odd_subgroup(s4).has_value());
  const auto h = normal_hall_odd_subgroup(dihedral_group_of_order(6));
  REQUIRE(h.has_value());
  CHECK(h->size() == 3);
  const auto q = normal_hall_odd_subgroup(quaternion_group(8));
  REQUIRE(q.has_value());
  CHECK(q->size() == 1);
}

TEST_CASE("small named groups") {
  CHECK(symmetric_group(4).order() == 24);
  CHECK(alternating_group(4).order() == 12);
  CHECK(heisenberg_group(3).order() == 27);
  CHECK(exponent(heisenberg_group(3)) == 3);
  CHECK(center(heisenberg_group(3)).size() == 3);
  CHECK(oracle::associative(heisenberg_group(3)));
  CHECK(oracle::associative(symmetric_group(4)));
}
