#include "holoreg/realizability.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

namespace holoreg {

std::string to_string(PKind kind) {
  switch (kind) {
    case PKind::trivial: return "trivial";
    case PKind::cyclic: return "cyclic";
    case PKind::dihedral: return "dihedral";
    case PKind::quaternion: return "quaternion";
    case PKind::other: return "other";
  }
  return "other";
}

std::string to_string(Reason reason) {
  switch (reason) {
    case Reason::c_group: return "c-group";
    case Reason::theorem_case_1: return "theorem-case-1";
    case Reason::theorem_case_2: return "theorem-case-2";
    case Reason::fails_supersolvable_reduction: return "fails-supersolvable-reduction";
    case Reason::fails_p_shape: return "fails-P-shape";
    case Reason::fails_alpha_condition: return "fails-alpha-condition";
  }
  return "unknown";
}

Elem Decomposition::element(std::int64_t i, std::int64_t j, std::int64_t a, std::int64_t b) const {
  const Elem mpart = n.mul(n.power(x, i), n.power(y, j));
  return n.mul(mpart, n.mul(n.power(r, a), n.power(s, b)));
}

CGroupAut Decomposition::conjugation_aut(Elem t) const {
  auto coords_of = [&](Elem g) {
    const Elem idx = m_index[static_cast<std::size_t>(g)];
    if (idx < 0) throw GroupError("conjugate leaves M");
    return presentation.coords(idx);
  };
  return aut_decompose(presentation, coords_of(n.conj(t, x)), coords_of(n.conj(t, y)));
}

std::string Decomposition::summary() const {
  std::ostringstream out;
  out << "e=" << presentation.e() << " d=" << presentation.d() << " k=" << presentation.k()
      << " P=" << to_string(p_kind) << " m=" << m << " |alpha(P)|=" << alpha_image_order;
  return out.str();
}

namespace {

void fill_m_index(Decomposition& dec) {
  const auto& n = dec.n;
  const auto& pres = dec.presentation;
  dec.m_index.assign(n.order(), -1);
  for (std::int64_t j = 0; j < pres.d(); ++j)
    for (std::int64_t i = 0; i < pres.e(); ++i)
      dec.m_index[static_cast<std::size_t>(n.mul(n.power(dec.x, i), n.power(dec.y, j)))] = pres.index(i, j);
}

void fill_alpha(Decomposition& dec) {
  dec.alpha.clear();
  std::set<CGroupAut> image;
  for (Elem t : dec.p_subgroup.elements) {
    dec.alpha.push_back(dec.conjugation_aut(t));
    image.insert(dec.alpha.back());
  }
  dec.alpha_image_order = image.size();
  dec.alpha_r = dec.conjugation_aut(dec.r);
  dec.alpha_s = dec.conjugation_aut(dec.s);
}

bool dihedral_relations(const FiniteGroup& n, Elem r, Elem s, std::size_t rot) {
  return n.element_order(r) == rot && n.conj(s, r) == n.inv(r) && n.mul(s, s) == 0;
}

bool quaternion_relations(const FiniteGroup& n, Elem r, Elem s, std::size_t rot) {
  return rot >= 4 && n.element_order(r) == rot && n.conj(s, r) == n.inv(r) &&
         n.mul(s, s) == n.power(r, static_cast<long long>(rot / 2));
}

void classify_p(Decomposition& dec) {
  const auto& n = dec.n;
  const auto& p = dec.p_subgroup.elements;
  const std::size_t q = p.size();
  dec.m = 0;
  while ((std::size_t{1} << dec.m) < q) ++dec.m;
  dec.r = dec.s = 0;
  if (q == 1) {
    dec.p_kind = PKind::trivial;
    return;
  }
  for (Elem t : p) {
    if (n.element_order(t) == q) {
      dec.p_kind = PKind::cyclic;
      dec.r = t;
      return;
    }
  }
  const std::size_t rot = q / 2;
  for (Elem r : p) {
    if (n.element_order(r) != rot) continue;
    const auto cyc = subgroup_generated(n, std::vector<Elem>{r});
    for (Elem s : p) {
      if (cyc.contains(s)) continue;
      if (dihedral_relations(n, r, s, rot)) {
        dec.p_kind = PKind::dihedral;
      } else if (quaternion_relations(n, r, s, rot)) {
        dec.p_kind = PKind::quaternion;
      } else {
        continue;
      }
      dec.r = r;
      dec.s = s;
      return;
    }
  }
  dec.p_kind = PKind::other;
}

bool is_dq(const Decomposition& dec) {
  return dec.p_kind == PKind::dihedral || dec.p_kind == PKind::quaternion;
}

// Small case: D_4 or Q_8.
bool small_case(const Decomposition& dec) {
  return (dec.p_kind == PKind::dihedral && dec.m == 2) || (dec.p_kind == PKind::quaternion && dec.m == 3);
}

bool alpha_condition(const Decomposition& dec) {
  if (!is_dq(dec)) return false;
  if (small_case(dec)) return dec.alpha_image_order <= 2;
  return aut_is_identity(dec.presentation, dec.alpha_r);
}

Decomposition with_witnesses(const Decomposition& base, Elem x, Elem y, Elem r, Elem s) {
  Decomposition dec = base;
  dec.x = x;
  dec.y = y;
  dec.r = r;
  dec.s = s;
  fill_m_index(dec);
  fill_alpha(dec);
  return dec;
}

Homomorphism isomorphism_to_semidirect(const Decomposition& dec) {
  const auto& pres = dec.presentation;
  const FiniteGroup mg = cgroup_group(pres);
  const std::size_t q = dec.p_subgroup.size();
  const FiniteGroup pg = dec.p_kind == PKind::dihedral ? dihedral_group(q) : quaternion_group(q);
  const std::size_t rot = q / 2;
  std::vector<Perm> beta(q);
  const Perm beta_s = aut_to_perm(pres, dec.alpha_s);
  for (std::size_t b = 0; b < 2; ++b)
    for (std::size_t a = 0; a < rot; ++a)
      beta[a + rot * b] = b == 0 ? aut_to_perm(pres, CGroupAut{}) : beta_s;
  const FiniteGroup target = semidirect_product(mg, pg, beta);

  Homomorphism iso{dec.n, target, std::vector<Elem>(dec.n.order(), -1)};
  for (std::int64_t b = 0; b < 2; ++b)
    for (std::size_t a = 0; a < rot; ++a)
      for (std::int64_t j = 0; j < pres.d(); ++j)
        for (std::int64_t i = 0; i < pres.e(); ++i) {
          const Elem g = dec.element(i, j, static_cast<std::int64_t>(a), b);
          iso.images[static_cast<std::size_t>(g)] = static_cast<Elem>(
              static_cast<std::size_t>(pres.index(i, j)) + mg.order() * (a + rot * static_cast<std::size_t>(b)));
        }
  if (std::find(iso.images.begin(), iso.images.end(), -1) != iso.images.end() || !iso.bijective())
    throw GroupError("normalised witnesses do not give a normal form for N");
  if (!iso.valid()) throw GroupError("map onto M x|_beta P is not a homomorphism");
  return iso;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

}  // namespace

std::optional<Decomposition> decompose(const FiniteGroup& n, std::size_t bound) {
  if (n.order() > bound)
    throw BoundExceeded("decompose: order " + std::to_string(n.order()) + " exceeds bound " +
                        std::to_string(bound));
  const auto hall = normal_hall_odd_subgroup(n);
  if (!hall) return std::nullopt;
  const auto sub = subgroup_as_group(n, *hall);
  const auto rec = recognize_cgroup(sub.group);
  if (!rec) return std::nullopt;

  Decomposition dec;
  dec.n = n;
  dec.m_subgroup = *hall;
  dec.presentation = rec->presentation;
  dec.x = sub.embedding[static_cast<std::size_t>(rec->x)];
  dec.y = sub.embedding[static_cast<std::size_t>(rec->y)];
  fill_m_index(dec);
  dec.p_subgroup = sylow_subgroup(n, 2);
  classify_p(dec);
  fill_alpha(dec);
  return dec;
}

HolElement cgroup_witness(const FiniteGroup& n, Elem x, Elem y) {
  return hol_compose(n, rho(n, y), lambda(n, x));
}

bool verify_cyclic_witness(const FiniteGroup& n, const HolElement& h) {
  return cycle_length_at_identity(n, h) == n.order() && hol_power(n, h, n.order()) == hol_identity(n);
}

NormalizedDecomposition normalize_alpha(const Decomposition& dec) {
  if (!alpha_condition(dec)) throw GroupError("classification condition on alpha does not hold");
  const auto& n = dec.n;
  const auto& pres = dec.presentation;

  // Step 1: alpha_r = Id by moving r to an element of ker(alpha).
  Elem r = dec.r, s = dec.s;
  if (!aut_is_identity(pres, dec.alpha_r)) {
    if (!small_case(dec)) throw GroupError("alpha_r is not the identity");
    std::vector<std::pair<Elem, Elem>> candidates;
    const Elem rs = n.mul(dec.r, dec.s);
    if (dec.p_kind == PKind::dihedral) {
      candidates = {{dec.s, dec.r}, {rs, dec.s}};
    } else {
      candidates = {{dec.s, n.mul(dec.r, n.mul(dec.s, dec.s))}, {rs, dec.r}};
    }
    const auto pg = subgroup_as_group(n, dec.p_subgroup);
    std::vector<Elem> local(n.order(), -1);
    for (std::size_t i = 0; i < pg.embedding.size(); ++i) local[static_cast<std::size_t>(pg.embedding[i])] = static_cast<Elem>(i);
    for (const auto& kappa : automorphism_perms(pg.group, pg.group.order())) {
      candidates.emplace_back(pg.embedding[static_cast<std::size_t>(kappa[static_cast<std::size_t>(local[static_cast<std::size_t>(dec.r)])])],
                              pg.embedding[static_cast<std::size_t>(kappa[static_cast<std::size_t>(local[static_cast<std::size_t>(dec.s)])])]);
    }
    const std::size_t rot = dec.p_subgroup.size() / 2;
    bool found = false;
    for (const auto& [rr, ss] : candidates) {
      const bool rel = dec.p_kind == PKind::dihedral ? dihedral_relations(n, rr, ss, rot)
                                                     : quaternion_relations(n, rr, ss, rot);
      if (rel && aut_is_identity(pres, dec.conjugation_aut(rr))) {
        r = rr;
        s = ss;
        found = true;
        break;
      }
    }
    if (!found) throw GroupError("no automorphism of P moves r into ker(alpha)");
  }

  // Step 2: alpha_s in {phi_u} by re-choosing x, y through pi in Aut(M).
  const CGroupAut alpha_s = dec.conjugation_aut(s);
  for (const auto& pi : all_cgroup_auts(pres)) {
    const CGroupAut beta = aut_compose(pres, pi, aut_compose(pres, alpha_s, aut_inverse(pres, pi)));
    if (beta.c != 0 || beta.v != 1) continue;
    const CGroupAut pinv = aut_inverse(pres, pi);
    const auto xc = aut_apply(pres, pinv, 1, 0);
    const auto yc = aut_apply(pres, pinv, 0, 1);
    const Elem x2 = dec.element(xc.first, xc.second, 0, 0);
    const Elem y2 = dec.element(yc.first, yc.second, 0, 0);
    NormalizedDecomposition out{with_witnesses(dec, x2, y2, r, s), {}};
    if (!aut_is_identity(pres, out.dec.alpha_r) || out.dec.alpha_s.c != 0 || out.dec.alpha_s.v != 1)
      throw GroupError("renormalised witnesses do not give alpha_s in {phi_u}");
    out.isomorphism = isomorphism_to_semidirect(out.dec);
    return out;
  }
  throw GroupError("no pi in Aut(M) conjugates alpha_s into {phi_u}");
}

Elem closed_form_product(const Decomposition& dec, std::size_t l) {
  const auto ll = static_cast<std::int64_t>(l);
  const std::int64_t a = (l % 2 == 1) ? (ll + 1) / 2 : ll / 2;
  return dec.element(ll, ll, a, ll);
}

Construction construct(const Decomposition& dec) {
  if (!is_dq(dec)) throw GroupError("construct needs a dihedral or quaternion Sylow 2-subgroup");
  const auto& pres = dec.presentation;
  if (!aut_is_identity(pres, dec.alpha_r)) throw GroupError("precondition alpha_r = Id fails");
  if (dec.alpha_s.c != 0 || dec.alpha_s.v != 1) throw GroupError("precondition alpha_s in {phi_u} fails");
  const auto& n = dec.n;
  const std::size_t order = n.order();
  const std::size_t rot = dec.p_subgroup.size() / 2;

  const CGroupAut phi_k_inv{0, pres.e() == 1 ? 1 : inverse_mod(pres.k(), pres.e()), 1};
  const CGroupAut pi = aut_compose(pres, dec.alpha_s, phi_k_inv);
  const Elem r_inv = n.inv(dec.r);
  const Elem rs = n.mul(dec.r, dec.s);

  Construction out;
  out.xi.assign(order, -1);
  for (std::int64_t b = 0; b < 2; ++b)
    for (std::size_t a = 0; a < rot; ++a)
      for (std::int64_t j = 0; j < pres.d(); ++j)
        for (std::int64_t i = 0; i < pres.e(); ++i) {
          const auto [i2, j2] = aut_apply(pres, pi, i, j);
          const Elem image = n.mul(dec.element(i2, j2, 0, 0),
                                   n.mul(n.power(r_inv, static_cast<long long>(a)), n.power(rs, b)));
          out.xi[static_cast<std::size_t>(dec.element(i, j, static_cast<std::int64_t>(a), b))] = image;
        }
  if (std::find(out.xi.begin(), out.xi.end(), -1) != out.xi.end())
    throw GroupError("witnesses do not give a normal form for N");
  out.xi_is_automorphism = Homomorphism{n, n, out.xi}.valid() && Homomorphism{n, n, out.xi}.bijective();

  Perm id(order);
  std::iota(id.begin(), id.end(), 0);
  Perm power = out.xi;
  out.xi_order = 1;
  while (power != id && out.xi_order <= 2 * order) {
    power = compose(out.xi, power);
    ++out.xi_order;
  }

  out.eta0 = dec.element(1, 1, 1, 1);
  // prod_l = eta0 xi(eta0) ... xi^{l-1}(eta0)
  Elem prod = 0;
  Elem term = out.eta0;
  out.closed_form_matches = true;
  for (std::size_t l = 1; l <= 2 * order; ++l) {
    prod = n.mul(prod, term);
    term = out.xi[static_cast<std::size_t>(term)];
    if (prod != closed_form_product(dec, l)) out.closed_form_matches = false;
    if (l == order) out.product_n_is_identity = (prod == 0);
  }
  out.witness = HolElement{out.eta0, out.xi};
  out.regular = out.xi_is_automorphism && verify_cyclic_witness(n, out.witness);
  return out;
}

Verdict classify(const FiniteGroup& n, std::size_t bound) {
  if (n.order() > bound)
    throw BoundExceeded("classify: order " + std::to_string(n.order()) + " exceeds bound " +
                        std::to_string(bound));
  Verdict v;
  if (is_cgroup(n)) {
    const auto rec = recognize_cgroup(n);
    if (!rec) throw GroupError("C-group without a normalised presentation");
    v.realizable = true;
    v.reason = Reason::c_group;
    v.witness = cgroup_witness(n, rec->x, rec->y);
    if (!verify_cyclic_witness(n, *v.witness)) throw GroupError("C-group witness failed verification");
    return v;
  }
  v.decomposition = decompose(n, bound);
  if (!v.decomposition) {
    v.reason = Reason::fails_supersolvable_reduction;
    return v;
  }
  const auto& dec = *v.decomposition;
  if (!is_dq(dec)) {
    v.reason = Reason::fails_p_shape;
    return v;
  }
  if (!alpha_condition(dec)) {
    v.reason = Reason::fails_alpha_condition;
    return v;
  }
  v.reason = small_case(dec) ? Reason::theorem_case_1 : Reason::theorem_case_2;
  v.normalized = normalize_alpha(dec);
  const auto built = construct(v.normalized->dec);
  if (!built.regular || !built.closed_form_matches || !built.product_n_is_identity)
    throw GroupError("constructed witness failed verification");
  v.realizable = true;
  v.witness = built.witness;
  return v;
}

std::vector<Perm> quotient_action_probe(const Decomposition& dec, std::size_t bound) {
  if (!is_dq(dec)) throw GroupError("quotient probe needs a dihedral or quaternion Sylow 2-subgroup");
  const auto& n = dec.n;
  const Elem r2 = n.mul(dec.r, dec.r);
  const auto m0 = subgroup_generated(n, std::vector<Elem>{dec.x, dec.y, r2});
  const auto mask = m0.mask(n.order());
  const std::array<Elem, 4> reps{0, dec.r, dec.s, n.mul(dec.r, dec.s)};
  auto coset = [&](Elem g) -> Elem {
    for (std::size_t q = 0; q < reps.size(); ++q)
      if (mask[static_cast<std::size_t>(n.mul(n.inv(reps[q]), g))]) return static_cast<Elem>(q);
    throw GroupError("element outside the four cosets of M P'");
  };
  std::set<Perm> images;
  for (const auto& phi : automorphism_perms(n, bound)) {
    Perm p(4);
    for (std::size_t q = 0; q < 4; ++q) p[q] = coset(phi[static_cast<std::size_t>(reps[q])]);
    images.insert(std::move(p));
  }
  return {images.begin(), images.end()};
}

bool classify_rump(const FiniteGroup& g) {
  const auto hall = normal_hall_odd_subgroup(g);
  if (!hall) return false;
  if (!is_cgroup(subgroup_as_group(g, *hall).group)) return false;
  const auto p = sylow_subgroup(g, 2);
  if (p.size() <= 2) return true;
  return std::any_of(p.elements.begin(), p.elements.end(),
                     [&](Elem t) { return g.element_order(t) * 2 >= p.size(); });
}

}  // namespace holoreg
