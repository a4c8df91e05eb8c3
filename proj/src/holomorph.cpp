#include "holoreg/holomorph.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "detail/generator_tree.hpp"

namespace holoreg {

namespace {

Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose_perm(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
  return c;
}

Perm inverse_perm(const Perm& a) {
  Perm c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[static_cast<std::size_t>(a[i])] = static_cast<Elem>(i);
  return c;
}

bool is_automorphism(const FiniteGroup& n, const Perm& p) {
  if (p.size() != n.order()) return false;
  std::vector<char> seen(n.order(), 0);
  for (Elem v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= n.order() || seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  const auto k = static_cast<Elem>(n.order());
  for (Elem a = 0; a < k; ++a)
    for (Elem b = 0; b < k; ++b)
      if (p[static_cast<std::size_t>(n.mul(a, b))] != n.mul(p[static_cast<std::size_t>(a)], p[static_cast<std::size_t>(b)]))
        return false;
  return true;
}

}  // namespace

// ---------------------------------------------------------------- elements

HolElement hol_compose(const FiniteGroup& n, const HolElement& a, const HolElement& b) {
  return {n.mul(a.translation, a.twist[static_cast<std::size_t>(b.translation)]),
          compose_perm(a.twist, b.twist)};
}

HolElement hol_identity(const FiniteGroup& n) { return {0, identity_perm(n.order())}; }

HolElement hol_power(const FiniteGroup& n, const HolElement& h, std::size_t l) {
  HolElement result = hol_identity(n);
  HolElement base = h;
  while (l > 0) {
    if (l & 1) result = hol_compose(n, result, base);
    base = hol_compose(n, base, base);
    l >>= 1;
  }
  return result;
}

Elem hol_apply(const FiniteGroup& n, const HolElement& h, Elem x) {
  return n.mul(h.twist[static_cast<std::size_t>(x)], n.inv(h.translation));
}

HolElement rho(const FiniteGroup& n, Elem a) { return {a, identity_perm(n.order())}; }

Perm conjugation(const FiniteGroup& n, Elem a) {
  Perm p(n.order());
  for (std::size_t x = 0; x < p.size(); ++x) p[x] = n.conj(a, static_cast<Elem>(x));
  return p;
}

HolElement lambda(const FiniteGroup& n, Elem a) { return {n.inv(a), conjugation(n, a)}; }

std::size_t cycle_length_at_identity(const FiniteGroup& n, const HolElement& h) {
  std::size_t len = 1;
  for (Elem x = hol_apply(n, h, 0); x != 0; x = hol_apply(n, h, x)) ++len;
  return len;
}

// ---------------------------------------------------------------- Hol(N)

Holomorph::Holomorph(FiniteGroup n, std::size_t bound) : n_(std::move(n)) {
  auts_ = automorphism_perms(n_, std::max(n_.order(), kDefaultAutBound));
  if (n_.order() * auts_.size() > bound)
    throw BoundExceeded("|Hol(N)| = " + std::to_string(n_.order() * auts_.size()) +
                        " exceeds bound " + std::to_string(bound));
  std::sort(auts_.begin(), auts_.end());  // identity first
  for (std::size_t i = 0; i < auts_.size(); ++i) aut_lookup_.emplace(auts_[i], i);
  aut_inverse_.resize(auts_.size());
  for (std::size_t i = 0; i < auts_.size(); ++i) aut_inverse_[i] = aut_lookup_.at(inverse_perm(auts_[i]));
  const std::size_t a = auts_.size();
  if (a * a * n_.order() <= (std::size_t{1} << 24)) {
    aut_table_.resize(a * a);
    for (std::size_t i = 0; i < a; ++i)
      for (std::size_t j = 0; j < a; ++j)
        aut_table_[i * a + j] = aut_lookup_.at(compose_perm(auts_[i], auts_[j]));
  }
}

std::optional<std::size_t> Holomorph::aut_index(const Perm& p) const {
  auto it = aut_lookup_.find(p);
  if (it == aut_lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t Holomorph::compose_auts(std::size_t a, std::size_t b) const {
  if (!aut_table_.empty()) return aut_table_[a * auts_.size() + b];
  return aut_lookup_.at(compose_perm(auts_[a], auts_[b]));
}

HolElement Holomorph::element(std::size_t idx) const {
  return {translation_of(idx), auts_[twist_of(idx)]};
}

std::size_t Holomorph::index_of(const HolElement& h) const {
  auto twist = aut_index(h.twist);
  if (!twist) throw GroupError("twist is not an automorphism of N");
  return index(h.translation, *twist);
}

std::size_t Holomorph::mul(std::size_t a, std::size_t b) const {
  const std::size_t pa = twist_of(a), pb = twist_of(b);
  const Elem t = n_.mul(translation_of(a), auts_[pa][static_cast<std::size_t>(translation_of(b))]);
  return index(t, compose_auts(pa, pb));
}

std::size_t Holomorph::inv(std::size_t a) const {
  const std::size_t pinv = aut_inverse_[twist_of(a)];
  return index(auts_[pinv][static_cast<std::size_t>(n_.inv(translation_of(a)))], pinv);
}

Elem Holomorph::apply(std::size_t idx, Elem x) const {
  return n_.mul(auts_[twist_of(idx)][static_cast<std::size_t>(x)], n_.inv(translation_of(idx)));
}

std::size_t Holomorph::element_order(std::size_t idx) const {
  std::size_t k = 1;
  for (std::size_t x = idx; x != 0; x = mul(x, idx)) ++k;
  return k;
}

FiniteGroup Holomorph::as_group(std::size_t table_bound) const {
  const std::size_t h = order();
  if (h > table_bound)
    throw BoundExceeded("Hol(N) table of order " + std::to_string(h) + " exceeds bound " +
                        std::to_string(table_bound));
  std::vector<Elem> table(h * h);
  for (std::size_t a = 0; a < h; ++a)
    for (std::size_t b = 0; b < h; ++b) table[a * h + b] = static_cast<Elem>(mul(a, b));
  Labels labels{{"t", "aut"}, {}};
  for (std::size_t a = 0; a < h; ++a)
    labels.coords.push_back({static_cast<int>(translation_of(a)), static_cast<int>(twist_of(a))});
  return FiniteGroup(h, std::move(table), std::move(labels), "Hol(" + n_.name() + ")");
}

Holomorph hol_group(const FiniteGroup& n, std::size_t bound) { return Holomorph(n, bound); }

bool is_regular_subgroup(const FiniteGroup& n, std::span<const HolElement> s) {
  std::set<HolElement> members(s.begin(), s.end());
  for (const auto& a : members)
    for (const auto& b : members)
      if (!members.count(hol_compose(n, a, b)))
        throw GroupError("element set is not closed under composition");
  if (members.size() != n.order()) return false;
  std::vector<char> hit(n.order(), 0);
  for (const auto& a : members) {
    const Elem at_one = hol_apply(n, a, 0);
    if (hit[static_cast<std::size_t>(at_one)]) return false;
    hit[static_cast<std::size_t>(at_one)] = 1;
  }
  return true;
}

// ---------------------------------------------------------------- oracle

namespace {

// Orbit of 1_N under x -> pi(x) a^-1 has full length.
bool full_cycle(const FiniteGroup& n, const Perm& pi, Elem a_inv) {
  const std::size_t order = n.order();
  Elem x = 0;
  for (std::size_t l = 1; l < order; ++l) {
    x = n.mul(pi[static_cast<std::size_t>(x)], a_inv);
    if (x == 0) return false;
  }
  return true;
}

}  // namespace

std::vector<std::size_t> cyclic_regular_oracle_indices_serial(const Holomorph& hol) {
  const auto& n = hol.base();
  const auto& auts = hol.automorphisms();
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < auts.size(); ++p)
    for (std::size_t a = 0; a < n.order(); ++a)
      if (full_cycle(n, auts[p], n.inv(static_cast<Elem>(a)))) out.push_back(hol.index(static_cast<Elem>(a), p));
  return out;
}

std::vector<std::size_t> cyclic_regular_oracle_indices(const Holomorph& hol) {
  const auto& n = hol.base();
  const auto& auts = hol.automorphisms();
  const auto count = static_cast<long long>(n.order());
  std::vector<std::vector<std::size_t>> found(n.order());
#pragma omp parallel for schedule(dynamic)
  for (long long a = 0; a < count; ++a) {
    const Elem a_inv = n.inv(static_cast<Elem>(a));
    auto& local = found[static_cast<std::size_t>(a)];
    for (std::size_t p = 0; p < auts.size(); ++p)
      if (full_cycle(n, auts[p], a_inv)) local.push_back(hol.index(static_cast<Elem>(a), p));
  }
  std::vector<std::size_t> out;
  for (auto& v : found) out.insert(out.end(), v.begin(), v.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HolElement> cyclic_regular_oracle(const Holomorph& hol) {
  std::vector<HolElement> out;
  for (std::size_t idx : cyclic_regular_oracle_indices(hol)) out.push_back(hol.element(idx));
  return out;
}

std::optional<std::size_t> find_cyclic_regular(const Holomorph& hol) {
  const auto& n = hol.base();
  const auto& auts = hol.automorphisms();
  for (std::size_t p = 0; p < auts.size(); ++p)
    for (std::size_t a = 0; a < n.order(); ++a)
      if (full_cycle(n, auts[p], n.inv(static_cast<Elem>(a)))) return hol.index(static_cast<Elem>(a), p);
  return std::nullopt;
}

std::vector<std::vector<std::size_t>> cyclic_subgroups_of(const Holomorph& hol,
                                                          std::span<const std::size_t> gens) {
  std::set<std::vector<std::size_t>> seen;
  for (std::size_t h : gens) {
    std::vector<std::size_t> sub{0};
    for (std::size_t x = h; x != 0; x = hol.mul(x, h)) sub.push_back(x);
    std::sort(sub.begin(), sub.end());
    seen.insert(std::move(sub));
  }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<std::size_t>> regular_subgroups_isomorphic_to(const FiniteGroup& g,
                                                                      const Holomorph& hol,
                                                                      std::size_t bound) {
  const auto& n = hol.base();
  if (g.order() != n.order()) throw GroupError("regular subgroups need |G| = |N|");
  if (hol.order() > bound)
    throw BoundExceeded("|Hol(N)| = " + std::to_string(hol.order()) + " exceeds bound " +
                        std::to_string(bound));
  const auto gens = minimal_generating_set(g);
  if (gens.empty()) return {{0}};
  detail::GeneratorTree tree(g, gens);
  const std::size_t k = gens.size();
  std::vector<std::size_t> hol_orders(hol.order());
  for (std::size_t i = 0; i < hol.order(); ++i) hol_orders[i] = hol.element_order(i);
  std::vector<std::vector<std::size_t>> candidates(k);
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < hol.order(); ++i)
      if (hol_orders[i] == g.element_order(gens[j])) candidates[j].push_back(i);

  std::set<std::vector<std::size_t>> found;
  std::vector<std::size_t> img(k), phi(g.order(), 0);
  std::vector<char> translation_used(n.order(), 0);
  translation_used[0] = 1;
  constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
  std::fill(phi.begin(), phi.end(), kUnset);
  phi[0] = 0;

  auto recurse = [&](auto&& self, std::size_t j) -> void {
    const std::size_t begin = (j == 0) ? 1 : tree.layer_end[j - 1];
    const std::size_t end = tree.layer_end[j];
    for (std::size_t cand : candidates[j]) {
      img[j] = cand;
      bool ok = true;
      std::size_t assigned = begin;
      for (; assigned < end; ++assigned) {
        const Elem e = tree.order[assigned];
        const std::size_t v = hol.mul(phi[static_cast<std::size_t>(tree.parent[static_cast<std::size_t>(e)])],
                                      img[static_cast<std::size_t>(tree.via[static_cast<std::size_t>(e)])]);
        // Semiregularity: images must send 1_N to distinct points.
        const auto t = static_cast<std::size_t>(hol.translation_of(v));
        if (translation_used[t]) {
          ok = false;
          break;
        }
        translation_used[t] = 1;
        phi[static_cast<std::size_t>(e)] = v;
      }
      for (std::size_t q = 0; q < end && ok; ++q) {
        const Elem a = tree.order[q];
        for (std::size_t i = (q < begin) ? j : 0; i <= j; ++i) {
          if (phi[static_cast<std::size_t>(g.mul(a, gens[i]))] != hol.mul(phi[static_cast<std::size_t>(a)], img[i])) {
            ok = false;
            break;
          }
        }
      }
      if (ok) {
        if (j + 1 == k) {
          std::vector<std::size_t> sub(phi.begin(), phi.end());
          std::sort(sub.begin(), sub.end());
          found.insert(std::move(sub));
        } else {
          self(self, j + 1);
        }
      }
      for (std::size_t q = begin; q < assigned; ++q) {
        const Elem e = tree.order[q];
        translation_used[static_cast<std::size_t>(hol.translation_of(phi[static_cast<std::size_t>(e)]))] = 0;
        phi[static_cast<std::size_t>(e)] = kUnset;
      }
    }
  };
  recurse(recurse, 0);
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------- crossed homs

bool CrossedHom::f_is_homomorphism() const {
  if (f.size() != source.order()) return false;
  for (const auto& p : f)
    if (!is_automorphism(target, p)) return false;
  if (f[0] != identity_perm(target.order())) return false;
  const auto k = static_cast<Elem>(source.order());
  for (Elem s = 0; s < k; ++s)
    for (Elem t = 0; t < k; ++t)
      if (f[static_cast<std::size_t>(source.mul(s, t))] != compose_perm(f[static_cast<std::size_t>(s)], f[static_cast<std::size_t>(t)]))
        return false;
  return true;
}

bool CrossedHom::satisfies_cocycle() const {
  if (g.size() != source.order()) return false;
  const auto k = static_cast<Elem>(source.order());
  for (Elem s = 0; s < k; ++s) {
    for (Elem t = 0; t < k; ++t) {
      const Elem lhs = g[static_cast<std::size_t>(source.mul(s, t))];
      const Elem rhs = target.mul(g[static_cast<std::size_t>(s)],
                                  f[static_cast<std::size_t>(s)][static_cast<std::size_t>(g[static_cast<std::size_t>(t)])]);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

bool CrossedHom::bijective() const {
  if (source.order() != target.order()) return false;
  std::vector<char> seen(target.order(), 0);
  for (Elem v : g) {
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

CrossedHom crossed_from_regular(const FiniteGroup& n, std::span<const HolElement> s) {
  if (!is_regular_subgroup(n, s)) throw GroupError("subgroup is not regular");
  std::vector<HolElement> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  std::map<HolElement, Elem> position;
  for (std::size_t i = 0; i < sorted.size(); ++i) position.emplace(sorted[i], static_cast<Elem>(i));
  const std::size_t k = sorted.size();
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) table[i * k + j] = position.at(hol_compose(n, sorted[i], sorted[j]));
  CrossedHom ch{FiniteGroup(k, std::move(table), {}, "S"), n, {}, {}};
  for (const auto& h : sorted) {
    ch.f.push_back(h.twist);
    ch.g.push_back(h.translation);
  }
  return ch;
}

std::vector<HolElement> regular_from_crossed(const CrossedHom& ch) {
  if (!ch.bijective()) throw GroupError("crossed homomorphism is not bijective");
  if (!ch.f_is_homomorphism()) throw GroupError("f is not a homomorphism into Aut(N)");
  if (!ch.satisfies_cocycle()) throw GroupError("cocycle relation g(st) = g(s) f(s)(g(t)) fails");
  std::vector<HolElement> out;
  for (std::size_t i = 0; i < ch.g.size(); ++i) out.push_back({ch.g[i], ch.f[i]});
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void require_characteristic(const FiniteGroup& n, const Subgroup& m, std::size_t aut_bound) {
  const auto mask = m.mask(n.order());
  for (const auto& phi : automorphism_perms(n, aut_bound))
    for (Elem a : m.elements)
      if (!mask[static_cast<std::size_t>(phi[static_cast<std::size_t>(a)])])
        throw GroupError("M is not a characteristic subgroup of N");
}

}  // namespace

RestrictedCrossedHom induction_restrict(const CrossedHom& ch, const Subgroup& m, std::size_t aut_bound) {
  if (!ch.bijective()) throw GroupError("crossed homomorphism is not bijective");
  require_characteristic(ch.target, m, aut_bound);
  Subgroup h;
  for (std::size_t s = 0; s < ch.g.size(); ++s)
    if (m.contains(ch.g[s])) h.elements.push_back(static_cast<Elem>(s));
  RestrictedCrossedHom out{h, subgroup_as_group(ch.source, h), subgroup_as_group(ch.target, m), {}};
  std::vector<Elem> m_pos(ch.target.order(), -1);
  for (std::size_t i = 0; i < m.elements.size(); ++i) m_pos[static_cast<std::size_t>(m.elements[i])] = static_cast<Elem>(i);
  out.crossed.source = out.h_group.group;
  out.crossed.target = out.m_group.group;
  for (Elem tau : h.elements) {
    Perm restricted(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
      restricted[i] = m_pos[static_cast<std::size_t>(ch.f[static_cast<std::size_t>(tau)][static_cast<std::size_t>(m.elements[i])])];
    out.crossed.f.push_back(std::move(restricted));
    out.crossed.g.push_back(m_pos[static_cast<std::size_t>(ch.g[static_cast<std::size_t>(tau)])]);
  }
  if (!out.crossed.satisfies_cocycle() || !out.crossed.bijective())
    throw GroupError("restriction did not yield a bijective crossed homomorphism");
  return out;
}

QuotientCrossedHom induction_quotient(const CrossedHom& ch, const Subgroup& m, const Subgroup& h,
                                      std::size_t aut_bound) {
  if (!ch.bijective()) throw GroupError("crossed homomorphism is not bijective");
  require_characteristic(ch.target, m, aut_bound);
  for (std::size_t s = 0; s < ch.g.size(); ++s)
    if (m.contains(ch.g[s]) != h.contains(static_cast<Elem>(s)))
      throw GroupError("H is not the preimage of M");
  const auto& g = ch.source;
  for (Elem tau : h.elements)
    for (Elem s = 0; s < static_cast<Elem>(g.order()); ++s)
      if (g.mul(tau, s) != g.mul(s, tau)) throw GroupError("H does not lie in the center of G");

  QuotientCrossedHom out{quotient_group(g, h), quotient_group(ch.target, m), {}};
  const auto& gq = out.g_quotient;
  const auto& nq = out.n_quotient;
  out.crossed.source = gq.group;
  out.crossed.target = nq.group;
  const std::size_t kq = nq.group.order();
  for (Elem rep : gq.representatives) {
    Perm induced(kq);
    for (std::size_t j = 0; j < kq; ++j)
      induced[j] = nq.projection[static_cast<std::size_t>(ch.f[static_cast<std::size_t>(rep)][static_cast<std::size_t>(nq.representatives[j])])];
    out.crossed.f.push_back(std::move(induced));
    out.crossed.g.push_back(nq.projection[static_cast<std::size_t>(ch.g[static_cast<std::size_t>(rep)])]);
  }
  // Well-definedness on every representative choice.
  for (std::size_t s = 0; s < g.order(); ++s) {
    const auto cs = static_cast<std::size_t>(gq.projection[s]);
    if (nq.projection[static_cast<std::size_t>(ch.g[s])] != out.crossed.g[cs])
      throw GroupError("induced g is not well defined");
    for (std::size_t eta = 0; eta < ch.target.order(); ++eta)
      if (nq.projection[static_cast<std::size_t>(ch.f[s][eta])] !=
          out.crossed.f[cs][static_cast<std::size_t>(nq.projection[eta])])
        throw GroupError("induced f is not well defined");
  }
  const Perm id = identity_perm(kq);
  for (Elem tau : h.elements)
    if (out.crossed.f[static_cast<std::size_t>(gq.projection[static_cast<std::size_t>(tau)])] != id)
      throw GroupError("f(H) does not act trivially on N/M");
  if (!out.crossed.satisfies_cocycle() || !out.crossed.bijective())
    throw GroupError("quotient did not yield a bijective crossed homomorphism");
  return out;
}

// ---------------------------------------------------------------- braces

SkewBrace::SkewBrace(FiniteGroup additive, std::vector<Elem> circle_table)
    : additive_(std::move(additive)), circle_(std::move(circle_table)) {
  if (circle_.size() != additive_.order() * additive_.order())
    throw GroupError("circle table has wrong size");
}

bool SkewBrace::satisfies_brace_axiom() const {
  const auto& n = additive_;
  const auto k = static_cast<Elem>(n.order());
  for (Elem a = 0; a < k; ++a) {
    const Elem a_inv = n.inv(a);
    for (Elem b = 0; b < k; ++b) {
      const Elem ab = circle(a, b);
      for (Elem c = 0; c < k; ++c)
        if (circle(a, n.mul(b, c)) != n.mul(n.mul(ab, a_inv), circle(a, c))) return false;
    }
  }
  return true;
}

FiniteGroup SkewBrace::circle_group() const {
  return FiniteGroup(additive_.order(), circle_, {}, "(" + additive_.name() + ",o)");
}

SkewBrace skew_brace_from_regular(const FiniteGroup& n, std::span<const HolElement> s) {
  if (!is_regular_subgroup(n, s)) throw GroupError("subgroup is not regular");
  std::vector<const HolElement*> sigma(n.order(), nullptr);
  for (const auto& h : s) sigma[static_cast<std::size_t>(hol_apply(n, h, 0))] = &h;
  const std::size_t k = n.order();
  std::vector<Elem> table(k * k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) table[a * k + b] = hol_apply(n, *sigma[a], static_cast<Elem>(b));
  return SkewBrace(n, std::move(table));
}

// ---------------------------------------------------------------- fpf pairs

bool is_fixed_point_free(const Homomorphism& f, const Homomorphism& h) {
  for (std::size_t s = 1; s < f.images.size(); ++s)
    if (f.images[s] == h.images[s]) return false;
  return true;
}

std::vector<std::pair<Homomorphism, Homomorphism>> fpf_search(const FiniteGroup& g,
                                                              const FiniteGroup& n,
                                                              std::size_t bound) {
  const auto homs = all_homomorphisms(g, n, bound);
  std::vector<std::pair<Homomorphism, Homomorphism>> out;
  for (const auto& f : homs)
    for (const auto& h : homs)
      if (is_fixed_point_free(f, h)) out.emplace_back(f, h);
  return out;
}

std::vector<HolElement> regular_from_fpf(const Homomorphism& f, const Homomorphism& h) {
  const auto& n = f.target;
  std::vector<HolElement> out;
  for (std::size_t s = 0; s < f.images.size(); ++s)
    out.push_back(hol_compose(n, rho(n, h.images[s]), lambda(n, f.images[s])));
  std::sort(out.begin(), out.end());
  return out;
}

ProductFpf product_fpf_pair(const FiniteGroup& n, const Subgroup& n1, const Subgroup& n2) {
  if (n1.size() * n2.size() != n.order()) throw GroupError("|N1||N2| must equal |N|");
  for (Elem a : n1.elements)
    if (a != 0 && n2.contains(a)) throw GroupError("N1 and N2 intersect non-trivially");
  const auto g1 = subgroup_as_group(n, n1);
  const auto g2 = subgroup_as_group(n, n2);
  ProductFpf out{direct_product(g1.group, g2.group), {}, {}};
  out.f = {out.product, n, {}};
  out.h = {out.product, n, {}};
  for (std::size_t idx = 0; idx < out.product.order(); ++idx) {
    out.f.images.push_back(g1.embedding[idx % n1.size()]);
    out.h.images.push_back(g2.embedding[idx / n1.size()]);
  }
  return out;
}

}  // namespace holoreg
