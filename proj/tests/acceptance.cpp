// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "holoreg/cgroup.hpp"
#include "holoreg/corpus.hpp"
#include "holoreg/group_spec.hpp"
#include "holoreg/holomorph.hpp"
#include "holoreg/realizability.hpp"
#include "structural.hpp"

using namespace holoreg;

namespace {

constexpr std::size_t kHolBound = 10'000'000;

struct Result {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

struct Item {
  CorpusEntry entry;
  Verdict verdict;
};

std::vector<Item>& corpus() {
  static std::vector<Item> items = [] {
    std::vector<Item> out;
    for (auto& e : default_corpus()) out.push_back({e, classify(e.group)});
    return out;
  }();
  return items;
}

bool oracle_says(const FiniteGroup& n) { return find_cyclic_regular(Holomorph(n, kHolBound)).has_value(); }

bool is_cyclic(const FiniteGroup& g) {
  for (std::size_t a = 0; a < g.order(); ++a)
    if (g.element_order(static_cast<Elem>(a)) == g.order()) return true;
  return false;
}

bool is_dq(const Decomposition& d) { return d.p_kind == PKind::dihedral || d.p_kind == PKind::quaternion; }

Result prime_power_odd() {
  Result res;
  const std::vector<std::string> specs{"cyclic 9",
                                       "direct (cyclic 3) (cyclic 3)",
                                       "cyclic 27",
                                       "direct (cyclic 9) (cyclic 3)",
                                       "direct (cyclic 3) (direct (cyclic 3) (cyclic 3))",
                                       "heisenberg 3",
                                       "semidirect (cyclic 9) (cyclic 3) alpha g->phi:4"};
  for (const auto& spec : specs) {
    const auto n = parse_group_spec(spec);
    const bool c = classify(n).realizable;
    if (c != is_cyclic(n)) res.fail(spec + ": classify disagrees with cyclicity");
    if (c != oracle_says(n)) res.fail(spec + ": oracle disagrees");
  }
  res.detail = res.pass ? "7 groups of order 9 and 27, realizable exactly when cyclic" : res.detail;
  return res;
}

Result prime_power_even() {
  Result res;
  struct Case {
    std::string spec;
    bool expected;
  };
  const std::vector<Case> cases{
      {"cyclic 4", true},
      {"dihedral 4", true},
      {"cyclic 8", true},
      {"dihedral 8", true},
      {"quaternion 8", true},
      {"direct (cyclic 4) (cyclic 2)", false},
      {"direct (cyclic 2) (direct (cyclic 2) (cyclic 2))", false},
      {"cyclic 16", true},
      {"dihedral 16", true},
      {"quaternion 16", true},
      {"direct (cyclic 8) (cyclic 2)", false},
      {"direct (cyclic 4) (cyclic 4)", false},
      {"direct (cyclic 4) (direct (cyclic 2) (cyclic 2))", false},
      {"direct (direct (cyclic 2) (cyclic 2)) (direct (cyclic 2) (cyclic 2))", false},
  };
  for (const auto& [spec, expected] : cases) {
    const auto n = parse_group_spec(spec);
    const bool c = classify(n).realizable;
    if (c != expected) res.fail(spec + ": classify gives " + (c ? "true" : "false"));
    if (oracle_says(n) != expected) res.fail(spec + ": oracle disagrees");
  }
  if (res.pass) res.detail = "orders 4, 8, 16: realizable exactly C_{2^m}, D_{2^m}, Q_{2^m} and both of order 4";
  return res;
}

bool has_order_divisible_by_4(const Holomorph& hol) {
  for (std::size_t i = 0; i < hol.order(); ++i)
    if (hol.element_order(i) % 4 == 0) return true;
  return false;
}

Result order_84() {
  Result res;
  const auto n = parse_group_spec("semidirect (cgroup 21 1 1) (dihedral 4) alpha r->phi:8 s->phi:13");
  const auto d14 = dihedral_group_of_order(14);
  const auto d6 = dihedral_group_of_order(6);
  const auto dec = decompose(n);
  if (!dec || dec->alpha_image_order != 4) res.fail("alpha is not faithful");
  if (!find_isomorphism(n, direct_product(d14, d6), 1024)) res.fail("N is not isomorphic to D14 x D6");
  const Holomorph h14(d14), h6(d6), hn(n, kHolBound);
  if (h14.order() != 588 || h6.order() != 36) res.fail("unexpected holomorph orders");
  if (hn.order() != h14.order() * h6.order()) res.fail("|Hol(N)| differs from |Hol(D14)||Hol(D6)|");
  if (has_order_divisible_by_4(h14) || has_order_divisible_by_4(h6) || has_order_divisible_by_4(hn))
    res.fail("a holomorph has an element of order divisible by 4");
  const auto v = classify(n);
  if (v.realizable || v.reason != Reason::fails_alpha_condition) res.fail("classify is not false/fails-alpha-condition");
  if (oracle_says(n)) res.fail("oracle finds a cyclic regular subgroup");
  if (res.pass) res.detail = "N = D14 x D6, Hol(N) of order 21168 has no element of order 4, fails-alpha-condition";
  return res;
}

Result oracle_equivalence() {
  Result res;
  std::size_t semidirect = 0, realizable = 0, max_hol = 0;
  for (const auto& [entry, v] : corpus()) {
    const Holomorph hol(entry.group, kHolBound);
    max_hol = std::max(max_hol, hol.order());
    semidirect += entry.family == "semidirect";
    realizable += v.realizable;
    if (find_cyclic_regular(hol).has_value() != v.realizable) res.fail("disagreement on " + entry.spec);
  }
  if (res.pass)
    res.detail = std::to_string(corpus().size()) + " groups (" + std::to_string(semidirect) + " semidirect), " +
                 std::to_string(realizable) + " realizable, 0 disagreements, max |Hol| " + std::to_string(max_hol);
  return res;
}

Result constructor_soundness() {
  Result res;
  std::size_t built = 0;
  for (const auto& [entry, v] : corpus()) {
    if (v.reason != Reason::theorem_case_1 && v.reason != Reason::theorem_case_2) continue;
    if (!v.normalized) {
      res.fail(entry.spec + ": no normalized decomposition");
      continue;
    }
    const auto c = construct(v.normalized->dec);
    const auto& n = entry.group;
    auto xi_n = c.xi;
    for (std::size_t i = 1; i < n.order(); ++i)
      for (auto& img : xi_n) img = c.xi[static_cast<std::size_t>(img)];
    bool identity = true;
    for (std::size_t i = 0; i < n.order(); ++i) identity = identity && xi_n[i] == static_cast<Elem>(i);
    if (!c.xi_is_automorphism || !identity) res.fail(entry.spec + ": xi^n is not the identity automorphism");
    if (!c.closed_form_matches) res.fail(entry.spec + ": closed form mismatch");
    if (!c.product_n_is_identity) res.fail(entry.spec + ": length-n product is not 1");
    std::vector<HolElement> sub;
    HolElement h = hol_identity(n);
    for (std::size_t i = 0; i < n.order(); ++i) {
      sub.push_back(h);
      h = hol_compose(n, h, c.witness);
    }
    if (h != hol_identity(n) || !is_regular_subgroup(n, sub)) res.fail(entry.spec + ": witness is not regular of order n");
    ++built;
  }
  if (res.pass) res.detail = std::to_string(built) + " constructions verified";
  return res;
}

Result aut_decomposition() {
  Result res;
  std::size_t checked = 0;
  auto check = [&](const CGroupPresentation& m, const FiniteGroup& g) {
    const auto brute = automorphism_perms(g, std::max<std::size_t>(g.order(), kDefaultAutBound));
    const auto units = unit_groups(m);
    const std::size_t formula = static_cast<std::size_t>(m.g_theta()) * units.units_e.size() * units.units_kd.size();
    if (brute.size() != formula) res.fail(m.to_string() + ": |Aut| mismatch");
    if (brute.size() != aut_group_order(m)) res.fail(m.to_string() + ": aut_group_order mismatch");
    std::set<Perm> generated;
    for (const auto& a : all_cgroup_auts(m)) generated.insert(aut_to_perm(m, a));
    if (generated != std::set<Perm>(brute.begin(), brute.end())) res.fail(m.to_string() + ": permutation sets differ");
    ++checked;
  };
  for (const auto& m : odd_cgroups(21)) check(m, cgroup_group(m));
  for (const auto& m : {CGroupPresentation(7, 3, 2), CGroupPresentation(5, 4, 2)}) check(m, cgroup_group(m));
  if (automorphism_perms(cgroup_group(CGroupPresentation(7, 3, 2))).size() != 42) res.fail("|Aut(C(7,3,2))| != 42");
  if (automorphism_perms(cgroup_group(CGroupPresentation(5, 4, 2))).size() != 20) res.fail("|Aut(C(5,4,2))| != 20");
  for (const auto& [entry, v] : corpus()) {
    if (v.reason != Reason::c_group) continue;
    const auto rec = recognize_cgroup(entry.group);
    if (!rec) {
      res.fail(entry.spec + ": C-group not recognized");
      continue;
    }
    const auto brute = automorphism_perms(entry.group, std::max<std::size_t>(entry.group.order(), kDefaultAutBound));
    if (brute.size() != aut_group_order(rec->presentation)) res.fail(entry.spec + ": |Aut| mismatch");
    ++checked;
  }
  if (res.pass) res.detail = std::to_string(checked) + " C-groups, including |Aut(C(7,3,2))| = 42 and |Aut(C(5,4,2))| = 20";
  return res;
}

Result fpf_gap() {
  Result res;
  std::size_t empty = 0, nonempty = 0;
  for (const auto& [entry, v] : corpus()) {
    const auto& n = entry.group;
    const auto pairs = fpf_search(cyclic_group(n.order()), n, n.order());
    if (is_cgroup(n)) {
      const auto rec = recognize_cgroup(n);
      const auto pair = product_fpf_pair(n, subgroup_generated(n, std::vector<Elem>{rec->x}),
                                         subgroup_generated(n, std::vector<Elem>{rec->y}));
      if (!is_fixed_point_free(pair.f, pair.h) || !is_regular_subgroup(n, regular_from_fpf(pair.f, pair.h)))
        res.fail(entry.spec + ": projection pair fails");
      if (pairs.empty()) res.fail(entry.spec + ": no fpf pair for a C-group");
      ++nonempty;
    } else {
      if (!pairs.empty()) res.fail(entry.spec + ": fpf pair for a non-C-group");
      ++empty;
    }
    for (const auto& [f, h] : pairs)
      if (!is_regular_subgroup(n, regular_from_fpf(f, h))) res.fail(entry.spec + ": fpf pair not regular");
  }
  if (res.pass)
    res.detail = std::to_string(empty) + " non-C-groups without fpf pairs, " + std::to_string(nonempty) +
                 " C-groups with regular fpf subgroups";
  return res;
}

Result rump() {
  Result res;
  std::size_t strict = 0;
  for (const auto& [entry, v] : corpus()) {
    const bool r = classify_rump(entry.group);
    if (v.realizable && !r) res.fail(entry.spec + ": realizable but companion classifier says false");
    if (!v.realizable && r && entry.group.order() == 84) ++strict;
  }
  const auto n84 = parse_group_spec("semidirect (cgroup 21 1 1) (dihedral 4) alpha r->phi:8 s->phi:13");
  if (!classify_rump(n84) || classify(n84).realizable) res.fail("order 84 group does not witness the strict converse");
  if (strict == 0) res.fail("no order-84 corpus member witnesses the converse failure");
  if (res.pass) res.detail = "implication holds; order-84 counterexamples to the converse: " + std::to_string(strict);
  return res;
}

Result structural_lemmas() {
  Result res;
  std::size_t checked = 0, probes = 0;
  for (const auto& [entry, v] : corpus()) {
    if (!v.decomposition || !is_dq(*v.decomposition)) continue;
    const auto& dec = *v.decomposition;
    if (const auto why = structural::violation(dec); !why.empty()) res.fail(entry.spec + ": " + why);
    ++checked;
    const bool large = (dec.p_kind == PKind::dihedral && dec.m >= 3) || (dec.p_kind == PKind::quaternion && dec.m >= 4);
    if (large && !aut_is_identity(dec.presentation, dec.alpha_r)) {
      for (const auto& p : quotient_action_probe(dec, entry.group.order()))
        if (p != Perm{0, 1, 2, 3}) res.fail(entry.spec + ": Aut(N) acts nontrivially on P/P'");
      ++probes;
    }
  }
  if (res.pass)
    res.detail = std::to_string(checked) + " decompositions checked, " + std::to_string(probes) + " trivial quotient actions";
  return res;
}

}  // namespace

int main() {
  const std::vector<std::function<Result()>> criteria{prime_power_odd,       prime_power_even, order_84,
                                                      oracle_equivalence,    constructor_soundness,
                                                      aut_decomposition,     fpf_gap,
                                                      rump,                  structural_lemmas};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[i]();
    } catch (const std::exception& e) {
      r.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %zu: %s %s (%.1fs)\n", i + 1, r.pass ? "PASS" : "FAIL", r.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !r.pass;
  }
  return failures == 0 ? 0 : 1;
}
