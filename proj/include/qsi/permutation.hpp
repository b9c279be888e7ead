#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace qsi {

using Point = std::uint32_t;

/// A bijection of {0, ..., n-1}, stored as its image list.
///
/// Products compose left to right: `(a * b)[i] == b[a[i]]`, so `a * b`
/// applies `a` first. Conjugation follows the same right-action
/// convention, `x^g = g^-1 * x * g`.
class Permutation {
public:
  Permutation() = default;
  explicit Permutation(std::size_t degree);
  explicit Permutation(std::vector<Point> images);

  /// Parses disjoint-cycle notation with 1-based points, e.g. "(1,2,3)(4,5)".
  /// Whitespace is ignored and "()" denotes the identity.
  static Permutation from_cycles(std::string_view text, std::size_t degree);

  std::size_t degree() const noexcept { return images_.size(); }
  Point operator[](std::size_t i) const noexcept { return images_[i]; }
  std::span<const Point> images() const noexcept { return images_; }

  bool is_identity() const noexcept;
  Permutation inverse() const;
  Permutation pow(long long e) const;
  std::uint64_t order() const;
  std::size_t fixed_points(std::size_t limit) const;

  /// Disjoint-cycle notation with 1-based points; the identity is "()".
  std::string to_cycle_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<Point> images_;
};

/// x^g = g^-1 x g.
Permutation conjugate(const Permutation& x, const Permutation& g);

/// [a, b] = a^-1 b^-1 a b.
Permutation commutator(const Permutation& a, const Permutation& b);

} // namespace qsi
