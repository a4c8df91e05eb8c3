#include "holoreg/group.hpp"

#include "detail/generator_tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace holoreg {

namespace {

std::string coords_to_string(const Labels& labels, std::size_t idx) {
  std::string out;
  const auto& c = labels.coords[idx];
  for (std::size_t i = 0; i < labels.symbols.size(); ++i) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += '.';
    out += labels.symbols[i];
    if (c[i] != 1) out += '^' + std::to_string(c[i]);
  }
  return out.empty() ? "1" : out;
}

// Right-multiplication orbit of the identity under gens; for a group this is
// the generated subgroup.
std::vector<char> span_mask(std::size_t n, std::span<const Elem> table,
                            std::span<const Elem> gens) {
  std::vector<char> seen(n, 0);
  std::vector<Elem> queue{0};
  seen[0] = 1;
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (Elem g : gens) {
      Elem b = table[static_cast<std::size_t>(queue[q]) * n + static_cast<std::size_t>(g)];
      if (!seen[static_cast<std::size_t>(b)]) {
        seen[static_cast<std::size_t>(b)] = 1;
        queue.push_back(b);
      }
    }
  }
  return seen;
}

}  // namespace

FiniteGroup::FiniteGroup() : FiniteGroup(1, {0}, {}, "1") {}

FiniteGroup::FiniteGroup(std::size_t order, std::vector<Elem> table, Labels labels,
                         std::string name, ValidationOptions options) {
  const std::size_t n = order;
  if (n == 0) throw GroupError("group order must be positive");
  if (table.size() != n * n) throw GroupError("Cayley table has wrong size");
  for (Elem v : table) {
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw GroupError("table entry out of range");
  }
  for (std::size_t a = 0; a < n; ++a) {
    if (table[a] != static_cast<Elem>(a) || table[a * n] != static_cast<Elem>(a))
      throw GroupError("index 0 is not the identity");
  }
  std::vector<char> seen(n);
  for (std::size_t a = 0; a < n; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      auto& s = seen[static_cast<std::size_t>(table[a * n + b])];
      if (s) throw GroupError("table row " + std::to_string(a) + " is not a permutation");
      s = 1;
    }
    std::fill(seen.begin(), seen.end(), 0);
    for (std::size_t b = 0; b < n; ++b) {
      auto& s = seen[static_cast<std::size_t>(table[b * n + a])];
      if (s) throw GroupError("table column " + std::to_string(a) + " is not a permutation");
      s = 1;
    }
  }
  if (n <= options.associativity_bound) {
    // Light's test: checking (a g) b == a (g b) for g in a generating set suffices.
    std::vector<Elem> gens;
    auto span = span_mask(n, table, gens);
    for (std::size_t g = 1; g < n; ++g) {
      if (span[g]) continue;
      gens.push_back(static_cast<Elem>(g));
      span = span_mask(n, table, gens);
    }
    for (Elem g : gens) {
      for (std::size_t a = 0; a < n; ++a) {
        const auto ag = static_cast<std::size_t>(table[a * n + static_cast<std::size_t>(g)]);
        for (std::size_t b = 0; b < n; ++b) {
          const auto gb = static_cast<std::size_t>(table[static_cast<std::size_t>(g) * n + b]);
          if (table[ag * n + b] != table[a * n + gb])
            throw GroupError("operation is not associative");
        }
      }
    }
  }
  if (!labels.empty()) {
    if (labels.coords.size() != n) throw GroupError("label count does not match order");
    for (const auto& c : labels.coords) {
      if (c.size() != labels.symbols.size()) throw GroupError("label arity mismatch");
    }
  }

  auto data = std::make_shared<Data>();
  data->order = n;
  data->inverse.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (table[a * n + b] == 0) {
        data->inverse[a] = static_cast<Elem>(b);
        break;
      }
    }
  }
  data->orders.assign(n, 1);
  for (std::size_t a = 1; a < n; ++a) {
    std::size_t k = 1;
    auto x = static_cast<Elem>(a);
    while (x != 0) {
      x = table[static_cast<std::size_t>(x) * n + a];
      ++k;
    }
    data->orders[a] = k;
  }
  data->table = std::move(table);
  data->labels = std::move(labels);
  data->name = std::move(name);
  data_ = std::move(data);
}

Elem FiniteGroup::power(Elem a, long long k) const {
  const auto ord = static_cast<long long>(element_order(a));
  k %= ord;
  if (k < 0) k += ord;
  Elem result = 0;
  Elem base = a;
  while (k > 0) {
    if (k & 1) result = mul(result, base);
    base = mul(base, base);
    k >>= 1;
  }
  return result;
}

bool FiniteGroup::is_abelian() const {
  const auto n = static_cast<Elem>(order());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a + 1; b < n; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::string FiniteGroup::label_string(Elem a) const {
  if (labels().empty()) return "e" + std::to_string(a);
  return coords_to_string(labels(), static_cast<std::size_t>(a));
}

std::optional<Elem> FiniteGroup::find_label(std::span<const int> coords) const {
  const auto& lab = labels();
  for (std::size_t i = 0; i < lab.coords.size(); ++i) {
    if (std::equal(coords.begin(), coords.end(), lab.coords[i].begin(), lab.coords[i].end()))
      return static_cast<Elem>(i);
  }
  return std::nullopt;
}

FiniteGroup FiniteGroup::with_name(std::string name) const {
  FiniteGroup copy = *this;
  auto data = std::make_shared<Data>(*data_);
  data->name = std::move(name);
  copy.data_ = std::move(data);
  return copy;
}

bool Subgroup::contains(Elem a) const {
  return std::binary_search(elements.begin(), elements.end(), a);
}

std::vector<char> Subgroup::mask(std::size_t group_order) const {
  std::vector<char> m(group_order, 0);
  for (Elem a : elements) m[static_cast<std::size_t>(a)] = 1;
  return m;
}

bool Homomorphism::valid() const {
  const auto n = static_cast<Elem>(source.order());
  if (images.size() != source.order()) return false;
  for (Elem v : images)
    if (v < 0 || static_cast<std::size_t>(v) >= target.order()) return false;
  if (images[0] != 0) return false;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if ((*this)(source.mul(a, b)) != target.mul((*this)(a), (*this)(b))) return false;
  return true;
}

bool Homomorphism::bijective() const {
  if (source.order() != target.order()) return false;
  std::vector<char> seen(target.order(), 0);
  for (Elem v : images) {
    if (seen[static_cast<std::size_t>(v)]) return false;
    seen[static_cast<std::size_t>(v)] = 1;
  }
  return true;
}

// ---------------------------------------------------------------- constructors

FiniteGroup cyclic_group(std::size_t n) {
  if (n == 0) throw GroupError("cyclic group order must be positive");
  std::vector<Elem> table(n * n);
  Labels labels{{"c"}, {}};
  for (std::size_t a = 0; a < n; ++a) {
    labels.coords.push_back({static_cast<int>(a)});
    for (std::size_t b = 0; b < n; ++b) table[a * n + b] = static_cast<Elem>((a + b) % n);
  }
  return FiniteGroup(n, std::move(table), std::move(labels), "C" + std::to_string(n));
}

namespace {

FiniteGroup dihedral_like(std::size_t rotations, bool quaternion, std::string name) {
  const std::size_t n = 2 * rotations;
  const auto rot = static_cast<long long>(rotations);
  std::vector<Elem> table(n * n);
  Labels labels{{"r", "s"}, {}};
  auto index = [&](long long a, long long b) {
    return static_cast<Elem>(((a % rot) + rot) % rot + rot * b);
  };
  for (std::size_t x = 0; x < n; ++x) {
    const long long a1 = static_cast<long long>(x) % rot;
    const long long b1 = static_cast<long long>(x) / rot;
    labels.coords.push_back({static_cast<int>(a1), static_cast<int>(b1)});
    for (std::size_t y = 0; y < n; ++y) {
      const long long a2 = static_cast<long long>(y) % rot;
      const long long b2 = static_cast<long long>(y) / rot;
      long long a = a1 + (b1 ? -a2 : a2);
      long long b = b1 + b2;
      if (b == 2) {
        b = 0;
        if (quaternion) a += rot / 2;
      }
      table[x * n + y] = index(a, b);
    }
  }
  return FiniteGroup(n, std::move(table), std::move(labels), std::move(name));
}

}  // namespace

FiniteGroup dihedral_group(std::size_t order) {
  if (order < 4 || !is_power_of_two(order))
    throw GroupError("dihedral_group needs a power of 2 order >= 4, got " + std::to_string(order));
  return dihedral_like(order / 2, false, "D" + std::to_string(order));
}

FiniteGroup dihedral_group_of_order(std::size_t order) {
  if (order < 4 || order % 2 != 0)
    throw GroupError("dihedral group order must be even and >= 4, got " + std::to_string(order));
  return dihedral_like(order / 2, false, "D" + std::to_string(order));
}

FiniteGroup quaternion_group(std::size_t order) {
  if (order < 8 || !is_power_of_two(order))
    throw GroupError("quaternion_group needs a power of 2 order >= 8, got " +
                     std::to_string(order));
  return dihedral_like(order / 2, true, "Q" + std::to_string(order));
}

namespace {

Labels concat_labels(const Labels& a, std::size_t na, const Labels& b, std::size_t nb) {
  if (a.empty() || b.empty()) return {};
  Labels out;
  out.symbols = a.symbols;
  out.symbols.insert(out.symbols.end(), b.symbols.begin(), b.symbols.end());
  // Disambiguate clashing generator names from the right factor.
  for (std::size_t i = a.symbols.size(); i < out.symbols.size(); ++i) {
    if (std::find(out.symbols.begin(), out.symbols.begin() + static_cast<long>(i),
                  out.symbols[i]) != out.symbols.begin() + static_cast<long>(i))
      out.symbols[i] += '\'';
  }
  out.coords.reserve(na * nb);
  for (std::size_t t = 0; t < nb; ++t) {
    for (std::size_t m = 0; m < na; ++m) {
      auto c = a.coords[m];
      c.insert(c.end(), b.coords[t].begin(), b.coords[t].end());
      out.coords.push_back(std::move(c));
    }
  }
  return out;
}

}  // namespace

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
  std::vector<Elem> table(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      const auto a = g.mul(static_cast<Elem>(x % ng), static_cast<Elem>(y % ng));
      const auto b = h.mul(static_cast<Elem>(x / ng), static_cast<Elem>(y / ng));
      table[x * n + y] = static_cast<Elem>(static_cast<std::size_t>(a) +
                                           ng * static_cast<std::size_t>(b));
    }
  }
  return FiniteGroup(n, std::move(table), concat_labels(g.labels(), ng, h.labels(), nh),
                     g.name() + "x" + h.name());
}

FiniteGroup semidirect_product(const FiniteGroup& m, const FiniteGroup& p,
                               std::span<const Perm> alpha) {
  const std::size_t nm = m.order(), np = p.order(), n = nm * np;
  if (alpha.size() != np) throw GroupError("action must list one automorphism per element of P");
  std::vector<char> seen(nm);
  for (std::size_t t = 0; t < np; ++t) {
    const auto& a = alpha[t];
    if (a.size() != nm) throw GroupError("action map has wrong size");
    std::fill(seen.begin(), seen.end(), 0);
    for (Elem v : a) {
      if (v < 0 || static_cast<std::size_t>(v) >= nm || seen[static_cast<std::size_t>(v)])
        throw GroupError("alpha(" + p.label_string(static_cast<Elem>(t)) + ") is not a bijection");
      seen[static_cast<std::size_t>(v)] = 1;
    }
    for (std::size_t x = 0; x < nm; ++x)
      for (std::size_t y = 0; y < nm; ++y)
        if (a[static_cast<std::size_t>(m.mul(static_cast<Elem>(x), static_cast<Elem>(y)))] !=
            m.mul(a[x], a[y]))
          throw GroupError("alpha(" + p.label_string(static_cast<Elem>(t)) +
                           ") is not an automorphism of M");
  }
  for (std::size_t x = 0; x < nm; ++x)
    if (alpha[0][x] != static_cast<Elem>(x)) throw GroupError("alpha is not a homomorphism");
  for (std::size_t t1 = 0; t1 < np; ++t1) {
    for (std::size_t t2 = 0; t2 < np; ++t2) {
      const auto& a12 = alpha[static_cast<std::size_t>(p.mul(static_cast<Elem>(t1), static_cast<Elem>(t2)))];
      for (std::size_t x = 0; x < nm; ++x)
        if (a12[x] != alpha[t1][static_cast<std::size_t>(alpha[t2][x])])
          throw GroupError("alpha is not a homomorphism");
    }
  }
  std::vector<Elem> table(n * n);
  for (std::size_t u = 0; u < n; ++u) {
    const auto m1 = static_cast<Elem>(u % nm);
    const auto t1 = u / nm;
    for (std::size_t v = 0; v < n; ++v) {
      const auto m2 = static_cast<std::size_t>(v % nm);
      const auto t2 = static_cast<Elem>(v / nm);
      const auto mm = m.mul(m1, alpha[t1][m2]);
      const auto tt = p.mul(static_cast<Elem>(t1), t2);
      table[u * n + v] = static_cast<Elem>(static_cast<std::size_t>(mm) +
                                           nm * static_cast<std::size_t>(tt));
    }
  }
  return FiniteGroup(n, std::move(table), concat_labels(m.labels(), nm, p.labels(), np),
                     m.name() + ":" + p.name());
}

std::optional<std::vector<Perm>> extend_action(const FiniteGroup& p, std::span<const Elem> gens,
                                               std::span<const Perm> gen_images) {
  if (gens.size() != gen_images.size()) throw GroupError("generator/image count mismatch");
  const std::size_t np = p.order();
  const std::size_t width = gen_images.empty() ? 0 : gen_images[0].size();
  Perm id(width);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::optional<Perm>> value(np);
  value[0] = id;
  std::vector<Elem> queue{0};
  auto compose = [](const Perm& a, const Perm& b) {
    Perm c(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = a[static_cast<std::size_t>(b[i])];
    return c;
  };
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Elem a = queue[q];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Elem b = p.mul(a, gens[i]);
      auto candidate = compose(*value[static_cast<std::size_t>(a)], gen_images[i]);
      auto& slot = value[static_cast<std::size_t>(b)];
      if (!slot) {
        slot = std::move(candidate);
        queue.push_back(b);
      } else if (*slot != candidate) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != np) throw GroupError("the given elements do not generate P");
  std::vector<Perm> out;
  out.reserve(np);
  for (auto& v : value) out.push_back(std::move(*v));
  return out;
}

FiniteGroup heisenberg_group(std::size_t p) {
  if (!is_prime(p)) throw GroupError("heisenberg_group needs a prime, got " + std::to_string(p));
  // [[1,a,c],[0,1,b],[0,0,1]] at index a + p b + p^2 c.
  const std::size_t n = p * p * p;
  std::vector<Elem> table(n * n);
  Labels labels{{"a", "b", "c"}, {}};
  for (std::size_t x = 0; x < n; ++x) {
    const std::size_t a1 = x % p, b1 = (x / p) % p, c1 = x / (p * p);
    labels.coords.push_back({static_cast<int>(a1), static_cast<int>(b1), static_cast<int>(c1)});
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t a2 = y % p, b2 = (y / p) % p, c2 = y / (p * p);
      const std::size_t a = (a1 + a2) % p, b = (b1 + b2) % p, c = (c1 + c2 + a1 * b2) % p;
      table[x * n + y] = static_cast<Elem>(a + p * b + p * p * c);
    }
  }
  return FiniteGroup(n, std::move(table), std::move(labels), "Heis" + std::to_string(p));
}

namespace {

FiniteGroup permutation_group(std::size_t degree, bool even_only, std::string name) {
  if (degree == 0 || degree > 6) throw GroupError("permutation groups are limited to degree 1..6");
  std::vector<std::vector<int>> perms;
  std::vector<int> cur(degree);
  std::iota(cur.begin(), cur.end(), 0);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < degree; ++i)
      for (std::size_t j = i + 1; j < degree; ++j) inversions += cur[i] > cur[j];
    if (!even_only || inversions % 2 == 0) perms.push_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end()));
  std::map<std::vector<int>, Elem> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index.emplace(perms[i], static_cast<Elem>(i));
  const std::size_t n = perms.size();
  std::vector<Elem> table(n * n);
  // (a b)(i) = a(b(i))
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::vector<int> c(degree);
      for (std::size_t i = 0; i < degree; ++i) c[i] = perms[a][static_cast<std::size_t>(perms[b][i])];
      table[a * n + b] = index.at(c);
    }
  return FiniteGroup(n, std::move(table), {}, std::move(name));
}

}  // namespace

FiniteGroup symmetric_group(std::size_t degree) {
  return permutation_group(degree, false, "S" + std::to_string(degree));
}

FiniteGroup alternating_group(std::size_t degree) {
  return permutation_group(degree, true, "A" + std::to_string(degree));
}

FiniteGroup relabel(const FiniteGroup& g, std::span<const Elem> perm) {
  const std::size_t n = g.order();
  if (perm.size() != n || perm[0] != 0) throw GroupError("relabelling must fix the identity");
  std::vector<Elem> table(n * n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      table[static_cast<std::size_t>(perm[a]) * n + static_cast<std::size_t>(perm[b])] =
          perm[static_cast<std::size_t>(g.mul(static_cast<Elem>(a), static_cast<Elem>(b)))];
  Labels labels;
  if (!g.labels().empty()) {
    labels.symbols = g.labels().symbols;
    labels.coords.resize(n);
    for (std::size_t a = 0; a < n; ++a)
      labels.coords[static_cast<std::size_t>(perm[a])] = g.labels().coords[a];
  }
  return FiniteGroup(n, std::move(table), std::move(labels), g.name());
}

// ---------------------------------------------------------------- structure

std::size_t element_order(const FiniteGroup& g, Elem a) { return g.element_order(a); }

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Elem> gens) {
  Subgroup h;
  h.elements = {0};
  std::vector<char> seen(g.order(), 0);
  seen[0] = 1;
  for (std::size_t q = 0; q < h.elements.size(); ++q) {
    for (Elem x : gens) {
      const Elem b = g.mul(h.elements[q], x);
      if (!seen[static_cast<std::size_t>(b)]) {
        seen[static_cast<std::size_t>(b)] = 1;
        h.elements.push_back(b);
      }
    }
  }
  std::sort(h.elements.begin(), h.elements.end());
  return h;
}

Subgroup whole_group(const FiniteGroup& g) {
  Subgroup h;
  h.elements.resize(g.order());
  std::iota(h.elements.begin(), h.elements.end(), 0);
  return h;
}

Subgroup trivial_subgroup() { return Subgroup{{0}}; }

bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  const auto mask = h.mask(g.order());
  for (Elem x : minimal_generating_set(g))
    for (Elem a : h.elements)
      if (!mask[static_cast<std::size_t>(g.conj(x, a))]) return false;
  return true;
}

Subgroup center(const FiniteGroup& g) {
  const auto gens = minimal_generating_set(g);
  Subgroup z;
  const auto n = static_cast<Elem>(g.order());
  for (Elem a = 0; a < n; ++a) {
    bool central = std::all_of(gens.begin(), gens.end(),
                               [&](Elem x) { return g.mul(a, x) == g.mul(x, a); });
    if (central) z.elements.push_back(a);
  }
  return z;
}

Subgroup commutator_subgroup(const FiniteGroup& g) {
  const auto n = static_cast<Elem>(g.order());
  std::vector<char> seen(g.order(), 0);
  std::vector<Elem> comms;
  for (Elem a = 0; a < n; ++a) {
    for (Elem b = 0; b < n; ++b) {
      const Elem c = g.commutator(a, b);
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = 1;
        comms.push_back(c);
      }
    }
  }
  return subgroup_generated(g, comms);
}

QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& normal) {
  if (!is_normal(g, normal)) throw GroupError("quotient by a non-normal subgroup");
  const std::size_t n = g.order();
  QuotientGroup q;
  q.projection.assign(n, -1);
  for (std::size_t a = 0; a < n; ++a) {
    if (q.projection[a] >= 0) continue;
    const auto idx = static_cast<Elem>(q.representatives.size());
    q.representatives.push_back(static_cast<Elem>(a));
    for (Elem h : normal.elements)
      q.projection[static_cast<std::size_t>(g.mul(static_cast<Elem>(a), h))] = idx;
  }
  const std::size_t k = q.representatives.size();
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      table[i * k + j] =
          q.projection[static_cast<std::size_t>(g.mul(q.representatives[i], q.representatives[j]))];
  q.group = FiniteGroup(k, std::move(table), {}, g.name() + "/" + std::to_string(normal.size()));
  return q;
}

EmbeddedGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h) {
  const std::size_t k = h.size();
  std::vector<Elem> position(g.order(), -1);
  for (std::size_t i = 0; i < k; ++i) position[static_cast<std::size_t>(h.elements[i])] = static_cast<Elem>(i);
  std::vector<Elem> table(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const Elem v = position[static_cast<std::size_t>(g.mul(h.elements[i], h.elements[j]))];
      if (v < 0) throw GroupError("element set is not closed under multiplication");
      table[i * k + j] = v;
    }
  }
  Labels labels;
  if (!g.labels().empty()) {
    labels.symbols = g.labels().symbols;
    for (Elem a : h.elements) labels.coords.push_back(g.labels().coords[static_cast<std::size_t>(a)]);
  }
  return {FiniteGroup(k, std::move(table), std::move(labels), g.name() + "_sub"), h.elements};
}

Subgroup sylow_subgroup(const FiniteGroup& g, std::size_t p) {
  if (!is_prime(p)) throw GroupError(std::to_string(p) + " is not prime");
  std::size_t target = 1;
  for (std::size_t n = g.order(); n % p == 0; n /= p) target *= p;
  Subgroup h = trivial_subgroup();
  std::vector<Elem> gens;
  const auto n = static_cast<Elem>(g.order());
  auto is_p_power = [p](std::size_t k) {
    while (k % p == 0) k /= p;
    return k == 1;
  };
  while (h.size() < target) {
    bool grown = false;
    for (Elem a = 1; a < n && !grown; ++a) {
      if (!is_p_power(g.element_order(a)) || h.contains(a)) continue;
      gens.push_back(a);
      auto candidate = subgroup_generated(g, gens);
      if (is_p_power(candidate.size())) {
        h = std::move(candidate);
        grown = true;
      } else {
        gens.pop_back();
      }
    }
    if (!grown) throw GroupError("Sylow search stalled");  // unreachable for groups
  }
  return h;
}

bool is_cgroup(const FiniteGroup& g) {
  for (std::size_t p : prime_factors(g.order())) {
    std::size_t pk = 1;
    for (std::size_t n = g.order(); n % p == 0; n /= p) pk *= p;
    const auto& orders = g.element_orders();
    if (std::find(orders.begin(), orders.end(), pk) == orders.end()) return false;
  }
  return true;
}

std::optional<Subgroup> normal_hall_odd_subgroup(const FiniteGroup& g) {
  std::size_t odd = g.order();
  while (odd % 2 == 0) odd /= 2;
  Subgroup h;
  const auto n = static_cast<Elem>(g.order());
  for (Elem a = 0; a < n; ++a)
    if (g.element_order(a) % 2 == 1) h.elements.push_back(a);
  if (h.size() != odd) return std::nullopt;
  const auto mask = h.mask(g.order());
  for (Elem a : h.elements)
    for (Elem b : h.elements)
      if (!mask[static_cast<std::size_t>(g.mul(a, b))]) return std::nullopt;
  return h;
}

std::vector<Elem> minimal_generating_set(const FiniteGroup& g) {
  std::vector<Elem> gens;
  std::size_t current = 1;
  const auto n = static_cast<Elem>(g.order());
  while (current < g.order()) {
    Elem best = -1;
    std::size_t best_size = current;
    auto span = subgroup_generated(g, gens).mask(g.order());
    for (Elem a = 1; a < n; ++a) {
      if (span[static_cast<std::size_t>(a)]) continue;
      gens.push_back(a);
      const auto size = subgroup_generated(g, gens).size();
      gens.pop_back();
      if (size > best_size) {
        best_size = size;
        best = a;
        if (size == g.order()) break;
      }
    }
    gens.push_back(best);
    current = best_size;
  }
  return gens;
}

// ---------------------------------------------------------------- morphisms

namespace {

using detail::GeneratorTree;

enum class SearchMode { homomorphisms, automorphisms };

std::vector<std::size_t> centralizer_sizes(const FiniteGroup& g) {
  const auto n = static_cast<Elem>(g.order());
  std::vector<std::size_t> out(g.order(), 0);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      if (g.mul(a, b) == g.mul(b, a)) ++out[static_cast<std::size_t>(a)];
  return out;
}

// Backtracking over generator images. `emit` receives the full image vector
// and returns false to stop the search.
template <typename Emit>
void search_morphisms(const FiniteGroup& src, const FiniteGroup& dst, SearchMode mode, Emit&& emit) {
  const bool bijective = mode == SearchMode::automorphisms;
  if (bijective && src.order() != dst.order()) return;
  const auto gens = minimal_generating_set(src);
  if (gens.empty()) {
    emit(std::vector<Elem>{0});
    return;
  }
  GeneratorTree tree(src, gens);
  const std::size_t k = gens.size();

  std::vector<std::size_t> src_cent, dst_cent;
  if (bijective) {
    src_cent = centralizer_sizes(src);
    dst_cent = (src == dst) ? src_cent : centralizer_sizes(dst);
  }
  std::vector<std::vector<Elem>> candidates(k);
  for (std::size_t j = 0; j < k; ++j) {
    const auto ord = src.element_order(gens[j]);
    for (Elem b = 0; b < static_cast<Elem>(dst.order()); ++b) {
      const auto ob = dst.element_order(b);
      if (bijective) {
        if (ob == ord && dst_cent[static_cast<std::size_t>(b)] ==
                             src_cent[static_cast<std::size_t>(gens[j])])
          candidates[j].push_back(b);
      } else if (ord % ob == 0) {
        candidates[j].push_back(b);
      }
    }
  }

  std::vector<Elem> img(k, 0);
  std::vector<Elem> phi(src.order(), -1);
  phi[0] = 0;
  std::vector<char> used(dst.order(), 0);
  used[0] = 1;
  bool stop = false;

  auto recurse = [&](auto&& self, std::size_t j) -> void {
    const std::size_t begin = (j == 0) ? 1 : tree.layer_end[j - 1];
    const std::size_t end = tree.layer_end[j];
    for (Elem cand : candidates[j]) {
      if (stop) return;
      img[j] = cand;
      bool ok = true;
      std::size_t assigned = begin;
      for (; assigned < end; ++assigned) {
        const Elem e = tree.order[assigned];
        const Elem v = dst.mul(phi[static_cast<std::size_t>(tree.parent[static_cast<std::size_t>(e)])],
                               img[static_cast<std::size_t>(tree.via[static_cast<std::size_t>(e)])]);
        if (bijective && used[static_cast<std::size_t>(v)]) {
          ok = false;
          break;
        }
        phi[static_cast<std::size_t>(e)] = v;
        if (bijective) used[static_cast<std::size_t>(v)] = 1;
      }
      if (ok) {
        // Old elements against the new generator, new elements against all.
        for (std::size_t q = 0; q < end && ok; ++q) {
          const Elem a = tree.order[q];
          const std::size_t i_begin = (q < begin) ? j : 0;
          for (std::size_t i = i_begin; i <= j; ++i) {
            const Elem b = src.mul(a, gens[i]);
            if (phi[static_cast<std::size_t>(b)] != dst.mul(phi[static_cast<std::size_t>(a)], img[i])) {
              ok = false;
              break;
            }
          }
        }
      }
      if (ok) {
        if (j + 1 == k) {
          if (!emit(phi)) stop = true;
        } else {
          self(self, j + 1);
        }
      }
      for (std::size_t q = begin; q < assigned; ++q) {
        const Elem e = tree.order[q];
        if (bijective) used[static_cast<std::size_t>(phi[static_cast<std::size_t>(e)])] = 0;
        phi[static_cast<std::size_t>(e)] = -1;
      }
    }
  };
  recurse(recurse, 0);
}

void check_bound(std::size_t n, std::size_t bound, const char* what) {
  if (n > bound)
    throw BoundExceeded(std::string(what) + ": group order " + std::to_string(n) +
                        " exceeds bound " + std::to_string(bound));
}

}  // namespace

std::vector<Perm> automorphism_perms(const FiniteGroup& g, std::size_t bound) {
  check_bound(g.order(), bound, "automorphism_group");
  std::vector<Perm> out;
  search_morphisms(g, g, SearchMode::automorphisms, [&](const std::vector<Elem>& phi) {
    out.push_back(phi);
    return true;
  });
  return out;
}

std::vector<Homomorphism> automorphism_group(const FiniteGroup& g, std::size_t bound) {
  std::vector<Homomorphism> out;
  for (auto& p : automorphism_perms(g, bound)) out.push_back({g, g, std::move(p)});
  return out;
}

std::vector<Homomorphism> all_homomorphisms(const FiniteGroup& g, const FiniteGroup& h,
                                            std::size_t bound) {
  check_bound(std::max(g.order(), h.order()), bound, "all_homomorphisms");
  std::vector<Homomorphism> out;
  search_morphisms(g, h, SearchMode::homomorphisms, [&](const std::vector<Elem>& phi) {
    out.push_back({g, h, phi});
    return true;
  });
  return out;
}

std::vector<std::size_t> isomorphism_invariants(const FiniteGroup& g) {
  std::vector<std::size_t> inv{g.order(), center(g).size(), commutator_subgroup(g).size()};
  const auto cent = centralizer_sizes(g);
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> hist;
  for (std::size_t a = 0; a < g.order(); ++a) ++hist[{g.element_order(static_cast<Elem>(a)), cent[a]}];
  for (const auto& [key, count] : hist) {
    inv.push_back(key.first);
    inv.push_back(key.second);
    inv.push_back(count);
  }
  return inv;
}

std::optional<Homomorphism> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                             std::size_t bound) {
  check_bound(std::max(g.order(), h.order()), bound, "find_isomorphism");
  if (g.order() != h.order()) return std::nullopt;
  if (isomorphism_invariants(g) != isomorphism_invariants(h)) return std::nullopt;
  std::optional<Homomorphism> found;
  search_morphisms(g, h, SearchMode::automorphisms, [&](const std::vector<Elem>& phi) {
    found = Homomorphism{g, h, phi};
    return false;
  });
  return found;
}

std::vector<Subgroup> characteristic_subgroups(const FiniteGroup& g, std::size_t bound) {
  const auto auts = automorphism_perms(g, bound);
  const std::size_t n = g.order();
  // Aut-orbits on elements.
  std::vector<int> orbit_of(n, -1);
  std::vector<std::vector<Elem>> orbits;
  for (std::size_t a = 0; a < n; ++a) {
    if (orbit_of[a] >= 0) continue;
    std::vector<Elem> orbit;
    for (const auto& phi : auts) {
      const Elem b = phi[a];
      if (orbit_of[static_cast<std::size_t>(b)] < 0) {
        orbit_of[static_cast<std::size_t>(b)] = static_cast<int>(orbits.size());
        orbit.push_back(b);
      }
    }
    orbits.push_back(std::move(orbit));
  }
  // Every characteristic subgroup is generated by the orbits it contains, so
  // joining orbits one at a time from the trivial subgroup reaches all of them.
  std::vector<Subgroup> found{trivial_subgroup()};
  std::vector<std::vector<Elem>> found_gens{{}};
  std::map<std::vector<Elem>, std::size_t> index{{found[0].elements, 0}};
  for (std::size_t q = 0; q < found.size(); ++q) {
    for (const auto& orbit : orbits) {
      if (found[q].contains(orbit.front())) continue;
      auto gens = found_gens[q];
      auto span = found[q];
      for (Elem a : orbit) {
        if (span.contains(a)) continue;
        gens.push_back(a);
        span = subgroup_generated(g, gens);
      }
      if (index.emplace(span.elements, found.size()).second) {
        found.push_back(std::move(span));
        found_gens.push_back(std::move(gens));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const Subgroup& a, const Subgroup& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.elements < b.elements;
  });
  return found;
}

// ---------------------------------------------------------------- numbers

std::vector<std::size_t> prime_factors(std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::size_t euler_phi(std::size_t n) {
  std::size_t result = n;
  for (std::size_t p : prime_factors(n)) result = result / p * (p - 1);
  return result;
}

bool is_prime(std::size_t n) {
  if (n < 2) return false;
  for (std::size_t p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

}  // namespace holoreg
