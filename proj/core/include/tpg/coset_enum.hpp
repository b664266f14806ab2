#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "tpg/perm_group.hpp"
#include "tpg/word.hpp"

namespace tpg::fp {

inline constexpr std::size_t kDefaultCosetCapacity = 1'000'000;

class CosetCapacityError : public perm::CapacityError {
 public:
  using perm::CapacityError::CapacityError;
};

/// A complete, standardized coset table: row 0 is the subgroup coset and the
/// remaining rows are numbered in breadth-first order of first appearance
/// (scanning rows in order, generators in the order a, b, c).
struct CosetTable {
  std::vector<std::array<std::uint32_t, kNumGens>> rows;
  /// Largest number of simultaneously allocated rows during enumeration.
  std::size_t peak_rows = 0;

  std::size_t size() const { return rows.size(); }
  std::uint32_t operator()(std::size_t coset, Gen g) const { return rows[coset][static_cast<std::size_t>(g)]; }
  /// Every relator closes at every coset and every subgroup word fixes row 0.
  bool satisfies(const Presentation& pres, const std::vector<Word>& subgroup = {}) const;
};

/// Felsch-style coset enumeration of <subgroup> in the presented group.
/// Generators are treated as involutions, so a^2, b^2, c^2 are implicit.
/// Throws CosetCapacityError once more than `capacity` rows are needed.
CosetTable todd_coxeter(const Presentation& pres, const std::vector<Word>& subgroup = {},
                        std::size_t capacity = kDefaultCosetCapacity);

/// Order of the presented group (enumeration over the trivial subgroup).
std::size_t presented_order(const Presentation& pres, std::size_t capacity = kDefaultCosetCapacity);

/// Permutation action of a, b, c on the cosets. The group itself is deferred:
/// its elements are only enumerated when first needed.
struct CosetAction {
  perm::PermGroup group;
  std::array<perm::Perm, kNumGens> images;
};
CosetAction coset_action(const CosetTable& table);

}  // namespace tpg::fp
