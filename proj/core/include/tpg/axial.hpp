#pragma once

// Majorana configurations on a concrete group: the T-set closure, pair types,
// and the two obstruction engines (elementary abelian 2^3 subgroups inside T,
// and an exact audit of the associativity of the form on an axis span).

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tpg/dihedral.hpp"
#include "tpg/perm_group.hpp"
#include "tpg/qlin.hpp"
#include "tpg/word.hpp"

namespace tpg::axial {

using perm::Perm;
using perm::PermGroup;
using qlin::Rational;

class NotTrianglePointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnsupportedConfigurationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// How an element entered T.
struct Provenance {
  enum class Rule { Seed, Conjugate, Cube };
  Rule rule = Rule::Seed;
  /// Seed: the seed name ("a", "b", "c", "ab").
  std::string seed;
  /// Conjugate: position of the conjugated element and the conjugating letter.
  /// Cube: positions of t and s with o(ts) = 6.
  std::size_t first = 0;
  std::size_t second = 0;
  fp::Gen letter = fp::Gen::A;
};

/// A group with seeds a, b, c and the smallest G-stable set of involutions
/// containing a, b, c, ab and closed under t, s -> (ts)^3 when o(ts) = 6.
class TConfig {
 public:
  const PermGroup& group() const { return group_; }
  const std::array<Perm, 3>& seeds() const { return seeds_; }

  /// Element indices of T in order of discovery.
  const std::vector<std::size_t>& elements() const { return tset_; }
  std::size_t size() const { return tset_.size(); }
  bool contains(std::size_t element) const { return position_[element] != kAbsent; }
  bool contains(const Perm& p) const;
  /// Position of an element in elements(); throws std::out_of_range if absent.
  std::size_t position(std::size_t element) const;
  const Provenance& provenance(std::size_t pos) const { return provenance_[pos]; }
  /// A word in a, b, c evaluating to elements()[pos], read off the provenance.
  fp::Word word(std::size_t pos) const;

  /// One element per G-class contained in T, in order of discovery.
  const std::vector<std::size_t>& class_representatives() const { return reps_; }

 private:
  friend TConfig t_closure(const PermGroup&, const Perm&, const Perm&, const Perm&);
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);

  PermGroup group_;
  std::array<Perm, 3> seeds_;
  std::vector<std::size_t> tset_;
  std::vector<std::size_t> position_;
  std::vector<Provenance> provenance_;
  std::vector<std::size_t> reps_;
};

/// Throws std::invalid_argument unless a, b, c, ab are involutions of g, and
/// NotTrianglePointError when two members of T have a product of order > 6.
TConfig t_closure(const PermGroup& g, const Perm& a, const Perm& b, const Perm& c);

/// A dihedral type, or the undecided pair 3A/3C.
struct PairType {
  dihedral::Type type = dihedral::Type::T1A;
  bool ambiguous = false;
  std::string str() const;
  friend bool operator==(const PairType&, const PairType&) = default;
};

/// Type of the dihedral algebra of the axes of t, s in T (element indices).
/// Throws std::invalid_argument if either is outside T, NotTrianglePointError
/// if o(ts) > 6.
PairType pair_type(const TConfig& cfg, std::size_t t, std::size_t s);

/// Generators x, y, z of an elementary abelian subgroup of order 8.
struct KleinWitness {
  std::array<std::size_t, 3> generators;
  /// The seven involutions, ascending element indices.
  std::array<std::size_t, 7> involutions;
};

/// First 2^3 subgroup all of whose involutions lie in T: x runs over the
/// T-class representatives, y and z over T in increasing element order.
std::optional<KleinWitness> klein_search(const TConfig& cfg);
/// Every such subgroup, closed under G-conjugation, sorted by involution set.
std::vector<KleinWitness> klein_search_all(const TConfig& cfg);

/// The same search inside the subgroup k with T replaced by s (element
/// indices of the ambient group).
std::optional<KleinWitness> klein_search_in(const PermGroup& g, const PermGroup& k,
                                            const std::vector<std::size_t>& s);

/// Symbolic check of the 2^3 identity on the formal span of seven axes in
/// which every pair generates a 2A algebra.
struct KleinIdentityReport {
  /// c in (psi(t1) - psi(t0t1)) . (psi(t2) - psi(t0t2)) = c (psi(t1t2) - psi(t0t1t2)).
  Rational coefficient;
  bool product_is_multiple = false;
  /// psi(t0) acts as 1/4 on each of the three differences.
  std::array<bool, 3> quarter_eigenvectors{};
  /// Eigenvalues allowed by the fusion rules for (1/4, 1/4).
  std::vector<Rational> allowed;
  /// The product is a nonzero 1/4-eigenvector, which the fusion rules forbid.
  bool contradiction = false;
};
KleinIdentityReport klein_identity();

/// An axis-span model on S = K cap T with types forced by T.
struct M1Witness {
  /// Element indices (in the ambient group) of the three axes.
  std::size_t i = 0, j = 0, k = 0;
  PairType type_ij, type_jk;
  /// (a_i . a_j, a_k) and (a_i, a_j . a_k).
  Rational left, right;
};

/// Exact audit of (a_i a_j, a_k) = (a_i, a_j a_k) on the axis span of s, a
/// K-stable set of involutions of k. Pairs (i, j) are visited 2A first, then
/// 2B, then 4B, each in increasing element order; the first violation is
/// returned. Throws UnsupportedConfigurationError unless every element of k
/// has order 1, 2 or 4.
std::optional<M1Witness> m1_audit(const PermGroup& g, const PermGroup& k, const std::vector<std::size_t>& s);
/// As above with s = K cap T.
std::optional<M1Witness> m1_audit(const TConfig& cfg, const PermGroup& k);

/// Subgroups of g isomorphic to ref, generated by tuples whose orders match
/// an irredundant generating tuple of ref; deduplicated by element set and
/// sorted by ascending element-index list.
std::vector<PermGroup> find_subgroups_iso(const PermGroup& g, const PermGroup& ref);

}  // namespace tpg::axial
