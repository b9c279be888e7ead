#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qsi/permgroup.hpp"

namespace qsi {

struct SmallGroup {
  /// "G<order>_<k>" with k counting from 1 in construction order.
  std::string id;
  std::uint64_t order = 1;
  /// Right regular representation.
  PermGroup group;
};

/// One group per isomorphism type for every order up to max_order (≤ 31).
/// Every such group is solvable, so each is a cyclic extension N.C_p of a
/// smaller one; extensions are enumerated over automorphisms of N and then
/// reduced up to isomorphism.
std::vector<SmallGroup> all_small_groups(unsigned max_order);

} // namespace qsi
