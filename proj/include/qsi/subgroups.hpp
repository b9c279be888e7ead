#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qsi/classes.hpp"

namespace qsi {

/// One conjugacy class of subgroups of G.
struct SubgroupClass {
  PermGroup group;
  std::uint64_t order = 1;
  /// Number of conjugates, [G : N_G(H)].
  std::uint64_t conjugates = 1;
  /// |C_i ∩ H| for each class C_i of G.
  std::vector<std::uint64_t> class_counts;
};

/// One representative per conjugacy class of subgroups, sorted by increasing
/// order (trivial group first, G last).
///
/// Built by cyclic extension: starting from the trivial group, every found
/// representative H is extended by one cyclic subgroup of prime-power order
/// from each N_G(H)-orbit, and the results are reduced up to conjugacy.
std::vector<SubgroupClass> all_subgroups_up_to_conjugacy(const PermGroup& g,
                                                         std::uint64_t max_order = kDefaultSubgroupBound);
std::vector<SubgroupClass> all_subgroups_up_to_conjugacy(const ConjugacyClassSet& g,
                                                         std::uint64_t max_order = kDefaultSubgroupBound);

/// The subgroup of the enumerated group generated by the given elements.
PermGroup subgroup_generated(const ElementTable& table, std::span<const std::size_t> elements);

/// Subgroup whose element set is exactly `elements` (which must be closed);
/// generators are chosen greedily.
PermGroup subgroup_from_element_set(const ElementTable& table, std::span<const std::size_t> elements);

} // namespace qsi
