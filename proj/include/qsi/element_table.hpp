#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qsi/permgroup.hpp"

namespace qsi {

/// Every element of a group, indexed 0..|G|-1 with the identity at 0.
///
/// Elements are kept as one flat image array; lookup goes through an
/// open-addressing hash on the image list.
class ElementTable {
public:
  explicit ElementTable(const PermGroup& group, std::uint64_t bound = kDefaultElementBound);

  std::size_t size() const noexcept { return count_; }
  std::size_t degree() const noexcept { return degree_; }
  const PermGroup& group() const noexcept { return group_; }

  std::span<const Point> images(std::size_t i) const noexcept {
    return {flat_.data() + i * degree_, degree_};
  }
  Permutation element(std::size_t i) const;

  std::optional<std::size_t> find(std::span<const Point> images) const;
  std::optional<std::size_t> find(const Permutation& p) const { return find(p.images()); }
  /// Throws DomainError if `p` is not in the group.
  std::size_t index_of(const Permutation& p) const;

  std::size_t multiply(std::size_t a, std::size_t b) const;
  std::size_t inverse(std::size_t a) const noexcept { return inverse_[a]; }
  /// b^-1 a b
  std::size_t conjugate(std::size_t a, std::size_t b) const;
  std::size_t power(std::size_t a, std::uint64_t e) const;
  std::uint32_t order(std::size_t a) const noexcept { return order_[a]; }

  /// Lexicographic comparison of image lists.
  bool less(std::size_t a, std::size_t b) const noexcept;

private:
  std::size_t insert(std::span<const Point> images);
  std::uint64_t hash(std::span<const Point> images) const noexcept;
  /// Looks an element up by its images of the base points, which determine it.
  std::size_t find_by_base(const Point* key) const noexcept;
  std::uint64_t base_hash(const Point* key) const noexcept;

  PermGroup group_;
  std::size_t degree_;
  std::size_t count_ = 0;
  std::vector<Point> flat_;
  std::vector<std::uint32_t> slots_;
  std::uint64_t mask_ = 0;
  std::vector<Point> base_;
  std::vector<std::uint32_t> base_slots_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> order_;
};

} // namespace qsi
