#pragma once

// Finite permutation groups by full element enumeration. Every group handled
// here has at most a few tens of thousands of elements, so the complete
// element list is the working representation.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "tpg/perm.hpp"

namespace tpg::perm {

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultOrderCeiling = std::size_t{1} << 20;

/// An immutable group handle. Copies share the element list and the lazily
/// computed caches; cache population is thread-safe.
///
/// Elements are indexed in lexicographic order of their image arrays, so
/// index 0 is always the identity.
class PermGroup {
 public:
  /// The trivial group of degree 0.
  PermGroup();

  /// Breadth-first closure of the generators. Throws CapacityError when the
  /// closure exceeds the ceiling and std::invalid_argument on degree mismatch.
  static PermGroup generate(std::size_t degree, std::vector<Perm> gens,
                            std::size_t ceiling = kDefaultOrderCeiling);
  /// As generate, but the closure runs on first access to the elements.
  static PermGroup deferred(std::size_t degree, std::vector<Perm> gens,
                            std::size_t ceiling = kDefaultOrderCeiling);
  /// Adopts a precomputed closure; elements must be exactly the group
  /// generated by gens (any order, the identity included).
  static PermGroup from_elements(std::size_t degree, std::vector<Perm> gens,
                                 std::vector<Perm> elements);

  std::size_t degree() const;
  const std::vector<Perm>& generators() const;
  std::size_t order() const { return elements().size(); }
  std::size_t ceiling() const;

  const std::vector<Perm>& elements() const;
  const Perm& element(std::size_t i) const { return elements()[i]; }
  std::optional<std::size_t> index_of(const Perm& p) const;
  /// index_of that throws std::out_of_range when p is not in the group.
  std::size_t index(const Perm& p) const;
  bool contains(const Perm& p) const { return index_of(p).has_value(); }

  std::size_t mul(std::size_t i, std::size_t j) const;
  std::size_t inv(std::size_t i) const;
  /// Index of element(i)^element(j).
  std::size_t conj(std::size_t i, std::size_t j) const;
  std::size_t order_of(std::size_t i) const { return element_orders()[i]; }

  const std::vector<std::size_t>& element_orders() const;
  /// Conjugacy classes as ascending index lists, ordered by minimal element.
  const std::vector<std::vector<std::size_t>>& classes() const;
  /// Class number of each element.
  const std::vector<std::size_t>& class_index() const;

  bool is_abelian() const;

 private:
  struct Impl;
  explicit PermGroup(std::shared_ptr<Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<Impl> impl_;
};

PermGroup generate(std::size_t degree, std::vector<Perm> gens,
                   std::size_t ceiling = kDefaultOrderCeiling);

/// Conjugacy classes as element lists (see PermGroup::classes for order).
std::vector<std::vector<Perm>> conjugacy_classes(const PermGroup& g);

/// Subgroup generated by gens, which must lie in g. Checks Lagrange.
PermGroup subgroup(const PermGroup& g, std::vector<Perm> gens);

/// Smallest normal subgroup of g containing xs.
PermGroup normal_closure(const PermGroup& g, std::span<const Perm> xs);

bool is_subgroup_of(const PermGroup& h, const PermGroup& g);
bool is_normal(const PermGroup& g, const PermGroup& n);

/// Action of g on the right cosets of a normal subgroup n.
struct Quotient {
  PermGroup group;
  /// Coset number of every element of g, by element index.
  std::vector<std::size_t> coset_of;
  /// Images of the tracked elements in the quotient.
  std::vector<Perm> tracked;
};

/// Throws std::invalid_argument when n is not a normal subgroup of g.
Quotient quotient(const PermGroup& g, const PermGroup& n, std::span<const Perm> tracked = {});

bool is_elementary_abelian_2(const PermGroup& k);

PermGroup center(const PermGroup& g);
PermGroup derived_subgroup(const PermGroup& g);

/// Necessary-condition isomorphism invariants.
struct IsoFingerprint {
  std::size_t order = 0;
  std::map<std::size_t, std::size_t> order_histogram;
  /// Elementary divisors of the abelianization, ascending.
  std::vector<std::size_t> abelian_invariants;
  std::size_t center_order = 0;
  std::size_t derived_order = 0;
  std::size_t class_count = 0;
  /// Multiset of (element order, class size) over the conjugacy classes.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> class_shape;

  friend bool operator==(const IsoFingerprint&, const IsoFingerprint&) = default;
};

IsoFingerprint fingerprint(const PermGroup& g);

/// An isomorphism given by the images of a generating tuple of the source.
struct Isomorphism {
  std::vector<Perm> source_generators;
  std::vector<Perm> target_images;
};

/// Exact isomorphism search: fingerprint filter, then backtracking over
/// images of a generating tuple, certified on every Cayley-graph edge.
std::optional<Isomorphism> find_isomorphism(const PermGroup& g, const PermGroup& h);
bool isomorphic(const PermGroup& g, const PermGroup& h);

/// Removes generators that are not needed to generate g.
std::vector<Perm> irredundant_generators(const PermGroup& g);

/// Action by conjugation on the union of the conjugacy classes of the seeds,
/// computed as orbits under the generators without enumerating the group.
/// The kernel is the centralizer of those classes.
class ConjugationAction {
 public:
  ConjugationAction(std::span<const Perm> gens, std::span<const Perm> seeds);

  std::size_t degree() const { return points_.size(); }
  /// The permuted elements, ascending.
  const std::vector<Perm>& points() const { return points_; }
  /// The permutation of the points induced by conjugation with g.
  Perm image(const Perm& g) const;

 private:
  std::vector<Perm> points_;
  std::unordered_map<Perm, std::size_t, PermHash> where_;
};

}  // namespace tpg::perm
