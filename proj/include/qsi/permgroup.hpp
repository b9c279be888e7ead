#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "qsi/permutation.hpp"

namespace qsi {

inline constexpr std::uint64_t kDefaultElementBound = 1'000'000;
inline constexpr std::uint64_t kDefaultSubgroupBound = 30'000;

/// One level of a stabilizer chain.
struct StabilizerLevel {
  Point base_point = 0;
  std::vector<Permutation> generators;
  /// transversal_index[pt] indexes `transversal`, or -1 when pt is not in the orbit.
  std::vector<int> transversal_index;
  std::vector<Permutation> transversal;
  std::vector<Point> orbit;
};

/// A permutation group given by generators, with a base and strong
/// generating set computed on construction.
class PermGroup {
public:
  /// Trivial group of the given degree.
  explicit PermGroup(std::size_t degree = 1);

  /// Runs deterministic Schreier-Sims. All generators must have `degree`.
  static PermGroup generate(std::size_t degree, std::vector<Permutation> generators);

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation>& generators() const noexcept { return generators_; }
  const mpz_class& order() const noexcept { return order_; }

  /// Order as a machine integer; throws CapacityError when it does not fit.
  std::uint64_t small_order() const;

  bool contains(const Permutation& g) const;
  bool is_trivial() const noexcept { return order_ == 1; }
  bool is_subgroup_of(const PermGroup& other) const;

  std::vector<Point> base() const;
  std::span<const StabilizerLevel> chain() const noexcept { return chain_; }
  Permutation identity() const { return Permutation(degree_); }

private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::vector<StabilizerLevel> chain_;
  mpz_class order_;
};

/// Same as PermGroup::generate.
PermGroup schreier_sims(std::size_t degree, std::vector<Permutation> generators);

/// True iff `n` is a subgroup of `g` normalized by every generator of `g`.
bool is_normal_in(const PermGroup& n, const PermGroup& g);

PermGroup normal_closure(const PermGroup& g, std::vector<Permutation> seeds);
PermGroup derived_subgroup(const PermGroup& g);
std::vector<PermGroup> derived_series(const PermGroup& g);
bool is_solvable(const PermGroup& g);
bool is_abelian(const PermGroup& g);

/// Faithful action of G/N on the right cosets of N. N must be normal.
PermGroup quotient(const PermGroup& g, const PermGroup& n,
                   std::uint64_t element_bound = kDefaultElementBound);

/// Exact set of element orders, by full enumeration.
std::vector<std::uint64_t> element_orders_present(const PermGroup& g,
                                                  std::uint64_t element_bound = kDefaultElementBound);

} // namespace qsi
