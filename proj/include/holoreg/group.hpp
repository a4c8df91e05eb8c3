#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace holoreg {

/// Index of an element inside a FiniteGroup. The identity is always 0.
using Elem = std::int32_t;

/// A permutation (or arbitrary map) of element indices, `p[i]` is the image of i.
using Perm = std::vector<Elem>;

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation would exceed its desk-scale bound.
class BoundExceeded : public GroupError {
 public:
  using GroupError::GroupError;
};

inline constexpr std::size_t kDefaultAssociativityBound = 512;
inline constexpr std::size_t kDefaultAutBound = 256;

/// Structured element labels: element g reads as prod_i symbols[i]^coords[g][i].
struct Labels {
  std::vector<std::string> symbols;
  std::vector<std::vector<int>> coords;

  bool empty() const { return symbols.empty(); }
};

struct ValidationOptions {
  std::size_t associativity_bound = kDefaultAssociativityBound;
};

/// A finite group stored as a full Cayley table over indices 0..n-1.
///
/// Instances are immutable and cheap to copy (the table is shared). The
/// constructor checks the Latin-square property, that index 0 is the identity,
/// and associativity (Light's test over a generating set) when n is within
/// the configured bound.
class FiniteGroup {
 public:
  /// The trivial group.
  FiniteGroup();
  FiniteGroup(std::size_t order, std::vector<Elem> table, Labels labels = {},
              std::string name = {}, ValidationOptions options = {});

  std::size_t order() const { return data_->order; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const {
    return data_->table[static_cast<std::size_t>(a) * data_->order + static_cast<std::size_t>(b)];
  }
  Elem inv(Elem a) const { return data_->inverse[static_cast<std::size_t>(a)]; }
  std::size_t element_order(Elem a) const { return data_->orders[static_cast<std::size_t>(a)]; }
  Elem power(Elem a, long long k) const;
  Elem conj(Elem g, Elem a) const { return mul(mul(g, a), inv(g)); }
  Elem commutator(Elem a, Elem b) const { return mul(mul(a, b), mul(inv(a), inv(b))); }

  std::span<const Elem> table() const { return data_->table; }
  const std::vector<std::size_t>& element_orders() const { return data_->orders; }
  const Labels& labels() const { return data_->labels; }
  const std::string& name() const { return data_->name; }
  bool is_abelian() const;

  /// Human-readable form of an element: its structured label or "e<index>".
  std::string label_string(Elem a) const;
  /// Element with the given label coordinates, if labels are present.
  std::optional<Elem> find_label(std::span<const int> coords) const;

  FiniteGroup with_name(std::string name) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.data_ == b.data_ || (a.order() == b.order() &&
                                  a.data_->table == b.data_->table);
  }

 private:
  struct Data {
    std::size_t order = 1;
    std::vector<Elem> table;
    std::vector<Elem> inverse;
    std::vector<std::size_t> orders;
    Labels labels;
    std::string name;
  };
  std::shared_ptr<const Data> data_;
};

/// A subgroup given by its sorted element list.
struct Subgroup {
  std::vector<Elem> elements;

  std::size_t size() const { return elements.size(); }
  bool contains(Elem a) const;
  std::vector<char> mask(std::size_t group_order) const;
  friend bool operator==(const Subgroup&, const Subgroup&) = default;
  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

/// A map between groups given by element images; `valid()` checks the
/// homomorphism law exhaustively.
struct Homomorphism {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Elem> images;

  Elem operator()(Elem a) const { return images[static_cast<std::size_t>(a)]; }
  bool valid() const;
  bool bijective() const;
};

/// Subgroup re-indexed as a stand-alone group. `embedding[i]` is the element of
/// the ambient group represented by index i (identity first).
struct EmbeddedGroup {
  FiniteGroup group;
  std::vector<Elem> embedding;
};

struct QuotientGroup {
  FiniteGroup group;
  std::vector<Elem> projection;       // ambient element -> coset index
  std::vector<Elem> representatives;  // coset index -> a representative
};

// Constructors.
FiniteGroup cyclic_group(std::size_t n);
/// D_{2^m} on labels r^a s^b; rejects orders that are not a power of 2 or are < 4.
FiniteGroup dihedral_group(std::size_t order);
/// Dihedral group of any even order >= 4 (same labels as dihedral_group).
FiniteGroup dihedral_group_of_order(std::size_t order);
/// Q_{2^m}, m >= 3, labels r^a s^b with s^2 = r^{2^{m-2}}.
FiniteGroup quaternion_group(std::size_t order);
/// Unitriangular 3x3 matrices over F_p.
FiniteGroup heisenberg_group(std::size_t p);
/// Symmetric and alternating groups of degree <= 6; identity permutation first.
FiniteGroup symmetric_group(std::size_t degree);
FiniteGroup alternating_group(std::size_t degree);
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// M x| P with (m1,t1)(m2,t2) = (m1 alpha_{t1}(m2), t1 t2). `alpha[t]` is the
/// automorphism of M attached to element t of P. Element (m, t) has index
/// m + |M| t.
FiniteGroup semidirect_product(const FiniteGroup& m, const FiniteGroup& p,
                               std::span<const Perm> alpha);

/// Extends generator images to a homomorphism P -> Sym(M) given as permutations.
/// Returns nullopt when the images do not define a homomorphism.
std::optional<std::vector<Perm>> extend_action(const FiniteGroup& p, std::span<const Elem> gens,
                                               std::span<const Perm> gen_images);

/// Applies a relabelling; `perm` must fix 0.
FiniteGroup relabel(const FiniteGroup& g, std::span<const Elem> perm);

// Subgroups and structure.
std::size_t element_order(const FiniteGroup& g, Elem a);
Subgroup subgroup_generated(const FiniteGroup& g, std::span<const Elem> gens);
Subgroup whole_group(const FiniteGroup& g);
Subgroup trivial_subgroup();
bool is_normal(const FiniteGroup& g, const Subgroup& h);
Subgroup center(const FiniteGroup& g);
Subgroup commutator_subgroup(const FiniteGroup& g);
QuotientGroup quotient_group(const FiniteGroup& g, const Subgroup& normal);
EmbeddedGroup subgroup_as_group(const FiniteGroup& g, const Subgroup& h);
Subgroup sylow_subgroup(const FiniteGroup& g, std::size_t p);
bool is_cgroup(const FiniteGroup& g);
/// The normal Hall 2'-subgroup (all odd-order elements) when it exists.
std::optional<Subgroup> normal_hall_odd_subgroup(const FiniteGroup& g);
/// Greedy generating set: each step adds the element extending the span most.
std::vector<Elem> minimal_generating_set(const FiniteGroup& g);

// Morphism search.
std::vector<Perm> automorphism_perms(const FiniteGroup& g, std::size_t bound = kDefaultAutBound);
std::vector<Homomorphism> automorphism_group(const FiniteGroup& g,
                                             std::size_t bound = kDefaultAutBound);
std::vector<Homomorphism> all_homomorphisms(const FiniteGroup& g, const FiniteGroup& h,
                                            std::size_t bound = kDefaultAutBound);
std::optional<Homomorphism> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                                             std::size_t bound = kDefaultAutBound);
std::vector<Subgroup> characteristic_subgroups(const FiniteGroup& g,
                                               std::size_t bound = kDefaultAutBound);
/// Permutation-invariant summary used to rule out isomorphisms quickly.
std::vector<std::size_t> isomorphism_invariants(const FiniteGroup& g);

// Small number theory shared by the modules.
std::vector<std::size_t> prime_factors(std::size_t n);
std::size_t euler_phi(std::size_t n);
bool is_prime(std::size_t n);
bool is_power_of_two(std::size_t n);

}  // namespace holoreg
