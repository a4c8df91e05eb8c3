#include "holoreg/corpus.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "holoreg/group_spec.hpp"

namespace holoreg {

std::vector<CGroupPresentation> odd_cgroups(std::int64_t max_order) {
  std::vector<CGroupPresentation> found;
  std::vector<FiniteGroup> groups;
  for (std::int64_t order = 1; order <= max_order; order += 2) {
    for (std::int64_t e = 1; e <= order; ++e) {
      if (order % e != 0) continue;
      const std::int64_t d = order / e;
      if (std::gcd(e, d) != 1) continue;
      for (std::int64_t k = 1; k <= e; ++k) {
        if (std::gcd(e, k % e) != 1 && e > 1) continue;
        if (e == 1 && k != 1) continue;
        if (d % multiplicative_order(k, e) != 0) continue;
        CGroupPresentation pres(e, d, k);
        if (!pres.normalized()) continue;
        const FiniteGroup g = cgroup_group(pres);
        const bool seen = std::any_of(groups.begin(), groups.end(), [&](const FiniteGroup& h) {
          return h.order() == g.order() && find_isomorphism(g, h, g.order()).has_value();
        });
        if (seen) continue;
        found.push_back(pres);
        groups.push_back(g);
      }
    }
  }
  return found;
}

std::vector<std::pair<CGroupAut, CGroupAut>> p_actions(const CGroupPresentation& m, bool quaternion,
                                                       std::size_t p_order) {
  const std::uint64_t rot = p_order / 2;
  const auto auts = all_cgroup_auts(m);
  std::vector<std::pair<CGroupAut, CGroupAut>> out;
  for (const auto& ar : auts) {
    if (!aut_is_identity(m, aut_power(m, ar, rot))) continue;
    const CGroupAut ar_inv = aut_inverse(m, ar);
    const CGroupAut s2_target = quaternion ? aut_power(m, ar, rot / 2) : CGroupAut{};
    for (const auto& as : auts) {
      if (aut_compose(m, as, as) != s2_target) continue;
      if (aut_compose(m, aut_compose(m, as, ar), aut_inverse(m, as)) != ar_inv) continue;
      out.emplace_back(ar, as);
    }
  }
  return out;
}

namespace {

// Canonical representative of alpha under Aut(P) x Aut(M).
std::pair<CGroupAut, CGroupAut> orbit_key(const CGroupPresentation& m, const std::vector<Perm>& p_auts,
                                          std::size_t rot, const std::vector<CGroupAut>& m_auts,
                                          const std::pair<CGroupAut, CGroupAut>& alpha) {
  auto eval = [&](Elem t) {
    const auto a = static_cast<std::uint64_t>(t) % rot;
    const auto b = static_cast<std::uint64_t>(t) / rot;
    return aut_compose(m, aut_power(m, alpha.first, a), aut_power(m, alpha.second, b));
  };
  const Elem r = 1;
  const auto s = static_cast<Elem>(rot);
  std::optional<std::pair<CGroupAut, CGroupAut>> best;
  for (const auto& kappa : p_auts) {
    const CGroupAut kr = eval(kappa[static_cast<std::size_t>(r)]);
    const CGroupAut ks = eval(kappa[static_cast<std::size_t>(s)]);
    for (const auto& pi : m_auts) {
      const CGroupAut pinv = aut_inverse(m, pi);
      std::pair<CGroupAut, CGroupAut> key{aut_compose(m, pi, aut_compose(m, kr, pinv)),
                                          aut_compose(m, pi, aut_compose(m, ks, pinv))};
      if (!best || key < *best) best = key;
    }
  }
  return *best;
}

std::string cgroup_spec(const CGroupPresentation& m) {
  return "cgroup " + std::to_string(m.e()) + " " + std::to_string(m.d()) + " " + std::to_string(m.k());
}

}  // namespace

std::vector<CorpusEntry> dedupe_by_isomorphism(std::vector<CorpusEntry> entries) {
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> buckets;
  std::vector<CorpusEntry> out;
  for (auto& entry : entries) {
    auto& bucket = buckets[isomorphism_invariants(entry.group)];
    const bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t i) {
      return find_isomorphism(entry.group, out[i].group, entry.group.order()).has_value();
    });
    if (seen) continue;
    bucket.push_back(out.size());
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<CorpusEntry> semidirect_corpus(std::int64_t max_m) {
  struct PShape {
    bool quaternion;
    std::size_t order;
  };
  const std::vector<PShape> shapes{{false, 4}, {true, 8}, {false, 8}, {false, 16}, {true, 16}};
  std::vector<CorpusEntry> entries;
  for (const auto& m : odd_cgroups(max_m)) {
    const auto m_auts = all_cgroup_auts(m);
    for (const auto& shape : shapes) {
      const FiniteGroup pg = shape.quaternion ? quaternion_group(shape.order) : dihedral_group(shape.order);
      const auto p_auts = automorphism_perms(pg, pg.order());
      const std::size_t rot = shape.order / 2;
      std::set<std::pair<CGroupAut, CGroupAut>> seen;
      for (const auto& alpha : p_actions(m, shape.quaternion, shape.order)) {
        if (!seen.insert(orbit_key(m, p_auts, rot, m_auts, alpha)).second) continue;
        const std::string spec = "semidirect (" + cgroup_spec(m) + ") (" +
                                 (shape.quaternion ? "quaternion " : "dihedral ") +
                                 std::to_string(shape.order) + ") alpha r->" + format_cgroup_aut(alpha.first) +
                                 " s->" + format_cgroup_aut(alpha.second);
        entries.push_back({spec, "semidirect", parse_group_spec(spec)});
      }
    }
  }
  return dedupe_by_isomorphism(std::move(entries));
}

std::vector<CorpusEntry> extra_corpus() {
  const std::vector<std::pair<std::string, std::string>> specs{
      {"cyclic 4", "prime-power"},
      {"dihedral 4", "prime-power"},
      {"cyclic 8", "prime-power"},
      {"direct (cyclic 4) (cyclic 2)", "prime-power"},
      {"direct (direct (cyclic 2) (cyclic 2)) (cyclic 2)", "prime-power"},
      {"dihedral 8", "prime-power"},
      {"quaternion 8", "prime-power"},
      {"cyclic 16", "prime-power"},
      {"direct (cyclic 8) (cyclic 2)", "prime-power"},
      {"direct (cyclic 4) (cyclic 4)", "prime-power"},
      {"direct (direct (cyclic 4) (cyclic 2)) (cyclic 2)", "prime-power"},
      {"direct (direct (cyclic 2) (cyclic 2)) (direct (cyclic 2) (cyclic 2))", "prime-power"},
      {"dihedral 16", "prime-power"},
      {"quaternion 16", "prime-power"},
      {"cyclic 9", "prime-power"},
      {"direct (cyclic 3) (cyclic 3)", "prime-power"},
      {"cyclic 27", "prime-power"},
      {"direct (cyclic 9) (cyclic 3)", "prime-power"},
      {"direct (direct (cyclic 3) (cyclic 3)) (cyclic 3)", "prime-power"},
      {"heisenberg 3", "prime-power"},
      {"semidirect (cyclic 9) (cyclic 3) alpha g->phi:4", "prime-power"},
      {"cyclic 6", "c-group"},
      {"dihedral 6", "c-group"},
      {"dihedral 14", "c-group"},
      {"cgroup 7 3 2", "c-group"},
      {"cgroup 5 4 2", "c-group"},
      {"direct (cyclic 3) (dihedral 8)", "misc"},
      {"direct (cyclic 3) (direct (cyclic 2) (cyclic 2))", "misc"},
      {"direct (cyclic 3) (direct (cyclic 4) (cyclic 2))", "misc"},
      {"alternating 4", "misc"},
      {"symmetric 4", "misc"},
      {"direct (dihedral 14) (dihedral 6)", "misc"},
  };
  std::vector<CorpusEntry> out;
  for (const auto& [spec, family] : specs) out.push_back({spec, family, parse_group_spec(spec)});
  return out;
}

std::vector<CorpusEntry> default_corpus() {
  auto entries = semidirect_corpus();
  for (auto& e : extra_corpus()) entries.push_back(std::move(e));
  return dedupe_by_isomorphism(std::move(entries));
}

}  // namespace holoreg
