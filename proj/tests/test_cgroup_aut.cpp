#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "holoreg/cgroup.hpp"
#include "holoreg/corpus.hpp"
#include "holoreg/group.hpp"
#include "test_support.hpp"

using namespace holoreg;

namespace {

// Every C(e,d,k) of odd order up to the bound, normalized or not.
std::vector<CGroupPresentation> all_presentations(std::int64_t max_order, bool odd_only) {
  std::vector<CGroupPresentation> out;
  for (std::int64_t e = 1; e <= max_order; ++e)
    for (std::int64_t d = 1; e * d <= max_order; ++d) {
      if (odd_only && (e * d) % 2 == 0) continue;
      if (std::gcd(e, d) != 1) continue;
      for (std::int64_t k = 1; k <= std::max<std::int64_t>(e, 1); ++k) {
        if (e > 1 && k == e) break;
        if (e > 1 && std::gcd(e, k) != 1) continue;
        // y^d acts trivially: k^d = 1 mod e
        std::int64_t kd = 1;
        for (std::int64_t i = 0; i < d; ++i) kd = (kd * k) % std::max<std::int64_t>(e, 1);
        if (e > 1 && kd != 1) continue;
        out.emplace_back(e, d, k);
        if (e == 1) break;
      }
    }
  return out;
}

std::set<Perm> perm_set(const CGroupPresentation& m) {
  std::set<Perm> out;
  for (const auto& a : all_cgroup_auts(m)) out.insert(aut_to_perm(m, a));
  return out;
}

}  // namespace

TEST_CASE("geometric sums") {
  CHECK(geometric_sum(5, 0, 7) == 0);
  CHECK(geometric_sum(2, 3, 7) == 0);
  for (std::int64_t e : {1, 3, 5, 7, 9, 21})
    for (std::uint64_t l = 0; l < 30; ++l) CHECK(geometric_sum(1, l, e) == static_cast<std::int64_t>(l) % e);
  for (std::int64_t e = 1; e <= 25; ++e)
    for (std::int64_t h = 0; h < 12; ++h)
      for (std::int64_t l = 0; l < 40; ++l)
        CHECK(geometric_sum(h, static_cast<std::uint64_t>(l), e) == oracle::geometric_sum_naive(h, l, e));
}

TEST_CASE("power formula against table multiplication") {
  const CGroupPresentation m(7, 3, 2);
  CHECK(cgroup_power(m, 1, 1, 0) == std::make_pair<std::int64_t, std::int64_t>(0, 0));
  CHECK(cgroup_power(m, 1, 1, 3) == std::make_pair<std::int64_t, std::int64_t>(0, 0));
  for (std::uint64_t l = 0; l < 20; ++l)
    CHECK(cgroup_power(m, 3, 0, l) == std::make_pair(static_cast<std::int64_t>(3 * l % 7), std::int64_t{0}));

  for (const auto& pres : all_presentations(45, false)) {
    const auto g = cgroup_group(pres);
    CHECK(oracle::associative(g));
    for (std::size_t idx = 0; idx < g.order(); ++idx) {
      const auto [i, j] = pres.coords(static_cast<Elem>(idx));
      for (std::uint64_t l = 0; l <= 2 * static_cast<std::uint64_t>(g.order()); l += 3) {
        const auto [pi, pj] = cgroup_power(pres, i, j, l);
        CHECK(pres.index(pi, pj) == g.power(static_cast<Elem>(idx), static_cast<long long>(l)));
      }
    }
  }
}

TEST_CASE("defining relations of C(e,d,k)") {
  for (const auto& pres : all_presentations(63, true)) {
    const auto g = cgroup_group(pres);
    const Elem x = pres.index(1, 0), y = pres.index(0, 1);
    CHECK(g.order() == static_cast<std::size_t>(pres.order()));
    CHECK(g.power(x, pres.e()) == 0);
    CHECK(g.power(y, pres.d()) == 0);
    CHECK(g.conj(y, x) == g.power(x, pres.k()));
    CHECK(is_cgroup(g));
  }
}

TEST_CASE("standard automorphisms") {
  const CGroupPresentation m(7, 3, 2);
  CHECK(aut_is_identity(m, standard_aut(m, StandardAutKind::phi, 1)));
  CHECK(standard_aut(m, StandardAutKind::phi, 3) == CGroupAut{0, 3, 1});
  CHECK_THROWS_AS(standard_aut(m, StandardAutKind::phi, 7), GroupError);
  CHECK_THROWS_AS(standard_aut(m, StandardAutKind::psi, 2), GroupError);
  const auto theta = standard_aut(m, StandardAutKind::theta, 1);
  CHECK(aut_apply(m, theta, 0, 1) == std::make_pair(m.z(), std::int64_t{1}));
  CHECK(aut_apply(m, theta, 1, 0) == std::make_pair(std::int64_t{1}, std::int64_t{0}));
}

TEST_CASE("relations between theta, phi and psi") {
  for (const auto& m : odd_cgroups(63)) {
    const auto theta = standard_aut(m, StandardAutKind::theta, 1);
    CHECK(aut_is_identity(m, aut_power(m, theta, static_cast<std::uint64_t>(m.g_theta()))));
    CHECK(aut_order(m, theta) % 2 == 1);
    const auto units = unit_groups(m);
    for (std::int64_t u : units.units_e) {
      const auto phi = standard_aut(m, StandardAutKind::phi, u);
      CHECK(aut_compose(m, phi, theta) ==
            aut_compose(m, aut_power(m, theta, static_cast<std::uint64_t>(u)), phi));
      for (std::int64_t v : units.units_kd) {
        const auto psi = standard_aut(m, StandardAutKind::psi, v);
        CHECK(aut_compose(m, phi, psi) == aut_compose(m, psi, phi));
        CHECK(aut_compose(m, theta, psi) == aut_compose(m, psi, theta));
        const auto tp = aut_compose(m, theta, phi);
        CHECK(aut_compose(m, psi, tp) == aut_compose(m, tp, psi));
      }
    }
  }
}

TEST_CASE("composition matches permutation composition") {
  for (const auto& m : odd_cgroups(45)) {
    const auto auts = all_cgroup_auts(m);
    const auto g = cgroup_group(m);
    for (const auto& a : auts) {
      const Perm pa = aut_to_perm(m, a);
      CHECK(oracle::is_hom(g, pa));
      CHECK(aut_compose(m, a, aut_inverse(m, a)) == CGroupAut{});
      for (std::size_t b = 0; b < auts.size(); b += 3)
        CHECK(aut_to_perm(m, aut_compose(m, a, auts[b])) == oracle::compose(pa, aut_to_perm(m, auts[b])));
    }
  }
}

TEST_CASE("decomposition from images") {
  const CGroupPresentation m(7, 3, 2);
  CHECK(aut_decompose(m, {1, 0}, {0, 1}) == CGroupAut{0, 1, 1});
  CHECK(aut_decompose(m, {1, 0}, {m.z(), 1}) == CGroupAut{1, 1, 1});
  CHECK(aut_decompose(m, {3, 0}, {0, 1}) == CGroupAut{0, 3, 1});
  CHECK_THROWS_AS(aut_decompose(m, {1, 1}, {0, 1}), GroupError);
  CHECK_THROWS_AS(aut_decompose(m, {0, 0}, {0, 1}), GroupError);
  CHECK_THROWS_AS(aut_decompose(m, {1, 0}, {0, 2}), GroupError);
  for (const auto& a : all_cgroup_auts(m)) CHECK(aut_decompose(m, aut_apply(m, a, 1, 0), aut_apply(m, a, 0, 1)) == a);
}

TEST_CASE("recognition of C-groups") {
  const auto c6 = recognize_cgroup(cyclic_group(6));
  REQUIRE(c6.has_value());
  CHECK(c6->presentation == CGroupPresentation(6, 1, 1));

  const auto s3 = recognize_cgroup(symmetric_group(3));
  REQUIRE(s3.has_value());
  CHECK(s3->presentation == CGroupPresentation(3, 2, 2));

  const auto f21 = recognize_cgroup(cgroup_group(CGroupPresentation(7, 3, 4)));
  REQUIRE(f21.has_value());
  CHECK(f21->presentation.e() == 7);
  CHECK(f21->presentation.d() == 3);
  CHECK((f21->presentation.k() == 2 || f21->presentation.k() == 4));

  CHECK_FALSE(recognize_cgroup(dihedral_group(8)).has_value());
  CHECK_FALSE(recognize_cgroup(direct_product(cyclic_group(3), cyclic_group(3))).has_value());

  for (const auto& pres : all_presentations(63, false)) {
    const auto g = cgroup_group(pres);
    const auto rec = recognize_cgroup(g);
    REQUIRE(rec.has_value());
    const auto& p = rec->presentation;
    CHECK(p.normalized());
    CHECK(p.order() == pres.order());
    CHECK(g.element_order(rec->x) == static_cast<std::size_t>(p.e()));
    CHECK(g.element_order(rec->y) == static_cast<std::size_t>(p.d()));
    CHECK(g.conj(rec->y, rec->x) == g.power(rec->x, p.k()));
    CHECK(find_isomorphism(g, cgroup_group(p), 1024).has_value());
  }
}

TEST_CASE("unit groups") {
  const auto u7 = unit_groups(CGroupPresentation(7, 1, 1));
  CHECK(u7.units_e == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6});
  CHECK(unit_groups(CGroupPresentation(7, 3, 2)).units_kd == std::vector<std::int64_t>{1});
  CHECK(unit_groups(CGroupPresentation(1, 9, 1)).units_kd == std::vector<std::int64_t>{1, 2, 4, 5, 7, 8});
  for (std::int64_t d : {3, 5, 15})
    CHECK(unit_groups(CGroupPresentation(1, d, 1)).units_kd.size() == oracle::phi(static_cast<std::size_t>(d)));
}

TEST_CASE("automorphism group formula against brute force") {
  CHECK(aut_group_order(CGroupPresentation(7, 3, 2)) == 42);
  CHECK(automorphism_perms(cgroup_group(CGroupPresentation(7, 3, 2))).size() == 42);
  CHECK(aut_group_order(CGroupPresentation(5, 4, 2)) == 20);
  CHECK(automorphism_perms(cgroup_group(CGroupPresentation(5, 4, 2))).size() == 20);
  for (const auto& m : odd_cgroups(63)) {
    const auto g = cgroup_group(m);
    const auto brute = automorphism_perms(g, std::max<std::size_t>(g.order(), kDefaultAutBound));
    CHECK(brute.size() == aut_group_order(m));
    CHECK(std::set<Perm>(brute.begin(), brute.end()) == perm_set(m));
  }
}

TEST_CASE("theta is well defined") {
  for (const auto& m : odd_cgroups(63)) {
    CHECK((m.z() * geometric_sum(m.k(), static_cast<std::uint64_t>(m.d()), m.e())) % m.e() == 0);
    for (std::int64_t v : unit_groups(m).units_kd)
      CHECK((m.z() * geometric_sum(m.k(), static_cast<std::uint64_t>(v), m.e())) % m.e() == m.z() % m.e());
    CHECK(m.g_theta() % 2 == 1);
  }
}

TEST_CASE("automorphism text round trip") {
  const CGroupPresentation m(7, 3, 2);
  CHECK(format_cgroup_aut(CGroupAut{}) == "id");
  CHECK(parse_cgroup_aut(m, "id") == CGroupAut{});
  CHECK(parse_cgroup_aut(m, "theta:1*phi:6") == CGroupAut{1, 6, 1});
  CHECK(parse_cgroup_aut(m, "phi:6*theta:1") == aut_compose(m, CGroupAut{0, 6, 1}, CGroupAut{1, 1, 1}));
  CHECK_THROWS_AS(parse_cgroup_aut(m, "rot:1"), GroupError);
  CHECK_THROWS_AS(parse_cgroup_aut(m, "phi"), GroupError);
  CHECK_THROWS_AS(parse_cgroup_aut(m, "phi:x"), GroupError);
  for (const auto& pres : odd_cgroups(63))
    for (const auto& a : all_cgroup_auts(pres)) CHECK(parse_cgroup_aut(pres, format_cgroup_aut(a)) == a);
}
