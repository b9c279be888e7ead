#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "qsi/element_table.hpp"

namespace qsi {

/// Conjugacy classes of a fully enumerated group.
///
/// Classes are sorted by (element order, class size, lexicographically
/// least element); the representative of each class is that least element,
/// so the identity class comes first.
class ConjugacyClassSet {
public:
  ConjugacyClassSet(std::shared_ptr<const ElementTable> table);

  const PermGroup& group() const noexcept { return table_->group(); }
  const ElementTable& elements() const noexcept { return *table_; }
  std::shared_ptr<const ElementTable> element_table() const noexcept { return table_; }

  std::size_t count() const noexcept { return sizes_.size(); }
  std::uint64_t group_order() const noexcept { return table_->size(); }
  std::uint64_t size(std::size_t c) const noexcept { return sizes_[c]; }
  const std::vector<std::uint64_t>& sizes() const noexcept { return sizes_; }
  std::uint32_t element_order(std::size_t c) const noexcept { return orders_[c]; }
  std::size_t representative_index(std::size_t c) const noexcept { return rep_index_[c]; }
  Permutation representative(std::size_t c) const { return table_->element(rep_index_[c]); }
  std::uint64_t centralizer_order(std::size_t c) const noexcept { return group_order() / sizes_[c]; }

  std::size_t class_of_index(std::size_t element) const noexcept { return element_to_class_[element]; }
  /// Throws DomainError if `p` is not a group element.
  std::size_t class_of(const Permutation& p) const;
  const std::vector<std::uint32_t>& element_to_class() const noexcept { return element_to_class_; }
  /// Element indices of class c.
  const std::vector<std::size_t>& members(std::size_t c) const noexcept { return members_[c]; }

  /// Class of g^k for g in class c.
  std::size_t power_class(std::size_t c, std::uint64_t k) const;
  std::size_t inverse_class(std::size_t c) const noexcept { return inverse_class_[c]; }
  /// lcm of element orders.
  std::uint64_t exponent() const noexcept { return exponent_; }

private:
  std::shared_ptr<const ElementTable> table_;
  std::vector<std::uint64_t> sizes_;
  std::vector<std::uint32_t> orders_;
  std::vector<std::size_t> rep_index_;
  std::vector<std::uint32_t> element_to_class_;
  std::vector<std::vector<std::size_t>> members_;
  std::vector<std::size_t> inverse_class_;
  std::uint64_t exponent_ = 1;
};

using ClassesPtr = std::shared_ptr<const ConjugacyClassSet>;

ClassesPtr conjugacy_classes(const PermGroup& g, std::uint64_t element_bound = kDefaultElementBound);

/// For each class of `sub`, the class of `super` containing its representative.
/// Throws DomainError if `sub` is not contained in `super`.
std::vector<std::size_t> class_fusion(const ConjugacyClassSet& sub, const ConjugacyClassSet& super);

} // namespace qsi
