#include "qsi/element_table.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "qsi/errors.hpp"

namespace qsi {

namespace {
constexpr std::uint32_t kEmpty = 0xffffffffu;
constexpr std::size_t kMaxBase = 64;
}

ElementTable::ElementTable(const PermGroup& group, std::uint64_t bound)
    : group_(group), degree_(group.degree()) {
  if (group.order() > bound) throw CapacityError("element enumeration of a group of order " + group.order().get_str(), bound);
  const std::uint64_t n = group.small_order();
  if (group.base().size() > kMaxBase) throw CapacityError("element enumeration with a base longer than 64", kMaxBase);
  if (n >= kEmpty) throw CapacityError("element enumeration", kEmpty - 1);
  std::uint64_t cap = std::bit_ceil(std::max<std::uint64_t>(2 * n, 16));
  slots_.assign(cap, kEmpty);
  mask_ = cap - 1;
  flat_.reserve(n * degree_);

  std::vector<Point> id(degree_);
  std::iota(id.begin(), id.end(), Point{0});
  insert(id);

  std::vector<std::vector<Point>> gens;
  for (const Permutation& s : group.generators())
    if (!s.is_identity()) gens.emplace_back(s.images().begin(), s.images().end());

  std::vector<Point> buf(degree_);
  for (std::size_t k = 0; k < count_; ++k) {
    for (const auto& s : gens) {
      const Point* x = flat_.data() + k * degree_;
      for (std::size_t i = 0; i < degree_; ++i) buf[i] = s[x[i]];
      if (!find(buf)) insert(buf);
    }
  }
  if (count_ != n) throw IntegrityError("enumeration produced " + std::to_string(count_) + " elements, expected " +
                                        std::to_string(n));

  base_ = group.base();
  base_slots_.assign(cap, kEmpty);
  for (std::size_t k = 0; k < count_; ++k) {
    Point key[kMaxBase];
    const Point* x = flat_.data() + k * degree_;
    for (std::size_t j = 0; j < base_.size(); ++j) key[j] = x[base_[j]];
    std::uint64_t slot = base_hash(key) & mask_;
    while (base_slots_[slot] != kEmpty) slot = (slot + 1) & mask_;
    base_slots_[slot] = static_cast<std::uint32_t>(k);
  }

  inverse_.resize(count_);
  order_.resize(count_);
  for (std::size_t k = 0; k < count_; ++k) {
    const Point* x = flat_.data() + k * degree_;
    for (std::size_t i = 0; i < degree_; ++i) buf[x[i]] = static_cast<Point>(i);
    inverse_[k] = static_cast<std::uint32_t>(*find(buf));
    order_[k] = static_cast<std::uint32_t>(element(k).order());
  }
}

std::uint64_t ElementTable::hash(std::span<const Point> images) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (Point p : images) {
    h ^= p + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return h;
}

std::size_t ElementTable::insert(std::span<const Point> images) {
  std::uint64_t slot = hash(images) & mask_;
  while (slots_[slot] != kEmpty) slot = (slot + 1) & mask_;
  slots_[slot] = static_cast<std::uint32_t>(count_);
  flat_.insert(flat_.end(), images.begin(), images.end());
  return count_++;
}

std::optional<std::size_t> ElementTable::find(std::span<const Point> images) const {
  if (images.size() != degree_) return std::nullopt;
  std::uint64_t slot = hash(images) & mask_;
  while (slots_[slot] != kEmpty) {
    std::size_t idx = slots_[slot];
    if (std::equal(images.begin(), images.end(), flat_.begin() + static_cast<std::ptrdiff_t>(idx * degree_)))
      return idx;
    slot = (slot + 1) & mask_;
  }
  return std::nullopt;
}

Permutation ElementTable::element(std::size_t i) const {
  auto im = images(i);
  return Permutation(std::vector<Point>(im.begin(), im.end()));
}

std::size_t ElementTable::index_of(const Permutation& p) const {
  auto idx = find(p.images());
  if (!idx) throw DomainError("permutation " + p.to_cycle_string() + " is not in the group");
  return *idx;
}

std::uint64_t ElementTable::base_hash(const Point* key) const noexcept {
  std::uint64_t h = 1469598103934665603ull;
  for (std::size_t j = 0; j < base_.size(); ++j) {
    h ^= key[j] + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return h;
}

std::size_t ElementTable::find_by_base(const Point* key) const noexcept {
  std::uint64_t slot = base_hash(key) & mask_;
  for (;;) {
    std::size_t idx = base_slots_[slot];
    const Point* x = flat_.data() + idx * degree_;
    bool same = true;
    for (std::size_t j = 0; j < base_.size() && same; ++j) same = x[base_[j]] == key[j];
    if (same) return idx;
    slot = (slot + 1) & mask_;
  }
}

std::size_t ElementTable::multiply(std::size_t a, std::size_t b) const {
  Point key[kMaxBase];
  const Point* x = flat_.data() + a * degree_;
  const Point* y = flat_.data() + b * degree_;
  for (std::size_t j = 0; j < base_.size(); ++j) key[j] = y[x[base_[j]]];
  return find_by_base(key);
}

std::size_t ElementTable::conjugate(std::size_t a, std::size_t b) const {
  // (b^-1 a b)[β] = b[a[b^-1[β]]]
  Point key[kMaxBase];
  const Point* x = flat_.data() + a * degree_;
  const Point* g = flat_.data() + b * degree_;
  const Point* gi = flat_.data() + inverse_[b] * degree_;
  for (std::size_t j = 0; j < base_.size(); ++j) key[j] = g[x[gi[base_[j]]]];
  return find_by_base(key);
}

std::size_t ElementTable::power(std::size_t a, std::uint64_t e) const {
  e %= order_[a];
  std::size_t result = 0;
  std::size_t base = a;
  while (e) {
    if (e & 1) result = multiply(result, base);
    base = multiply(base, base);
    e >>= 1;
  }
  return result;
}

bool ElementTable::less(std::size_t a, std::size_t b) const noexcept {
  auto x = images(a);
  auto y = images(b);
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

} // namespace qsi
