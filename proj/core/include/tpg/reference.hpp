#pragma once

// Named reference groups used to identify quotients, and the complete list of
// groups of order 4, 8 and 12.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tpg/perm_group.hpp"
#include "tpg/word.hpp"

namespace tpg::classify {

using perm::Perm;
using perm::PermGroup;

struct Reference {
  /// ASCII type name, e.g. "2xD8", "2^4:S5", "(3^2:2):(3^(1+2):2^2)".
  std::string name;
  /// Other names for the same type.
  std::vector<std::string> aliases;
  std::string construction;
  PermGroup group;
  /// When set, group is generated by images of a, b, c satisfying it, and
  /// |group| equals the order of the presented group.
  std::optional<fp::Presentation> presentation;
};

/// Built once and validated by order; thread-safe.
const std::vector<Reference>& references();
/// Throws std::out_of_range for unknown names (aliases accepted).
const Reference& reference(std::string_view name);

/// True when the two names denote the same reference type (aliases
/// resolved); otherwise compares the strings.
bool same_type(std::string_view x, std::string_view y);
/// The primary name for an alias, or the input unchanged.
std::string canonical_name(std::string_view name);

/// Name of the first reference isomorphic to g. When g has three generators
/// satisfying a reference presentation and the orders agree, that settles it
/// without a search. Unmatched groups get a fingerprint-derived placeholder
/// beginning with '?'.
std::string identify(const PermGroup& g);

/// Every group of order 4, 8 and 12 up to isomorphism (2, 5 and 5 groups).
struct SmallGroup {
  std::string name;
  PermGroup group;
};
const std::vector<SmallGroup>& small_groups();

/// Faithful permutation action of a presented group: the action on the
/// cosets of the first candidate subgroup whose action has the full order.
/// Throws std::runtime_error if none is faithful.
struct PresentedAction {
  PermGroup group;
  std::array<Perm, 3> images;
  std::vector<std::string> subgroup;
  std::size_t order = 0;
};
PresentedAction faithful_action(const fp::Presentation& pres, const std::vector<std::vector<std::string>>& candidates,
                                std::size_t capacity);

}  // namespace tpg::classify
