#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qsi/classes.hpp"
#include "qsi/cyclotomic.hpp"

namespace qsi {

/// A class function: one cyclotomic value per conjugacy class.
class Character {
public:
  Character(ClassesPtr classes, std::vector<Cyclotomic> values);

  const ClassesPtr& classes() const noexcept { return classes_; }
  const PermGroup& group() const noexcept { return classes_->group(); }
  std::size_t size() const noexcept { return values_.size(); }
  const Cyclotomic& operator[](std::size_t c) const noexcept { return values_[c]; }
  const std::vector<Cyclotomic>& values() const noexcept { return values_; }

  /// χ(1); throws DomainError unless it is a positive integer.
  std::uint64_t degree() const;
  bool is_linear() const { return values_[0] == Cyclotomic(1); }

  Character& operator+=(const Character& o);
  Character& operator-=(const Character& o);
  Character& operator*=(const Cyclotomic& s);
  friend Character operator+(Character a, const Character& b) { return a += b; }
  friend Character operator-(Character a, const Character& b) { return a -= b; }
  friend Character operator*(Character a, const Cyclotomic& s) { return a *= s; }
  friend Character operator*(const Cyclotomic& s, Character a) { return a *= s; }

  /// Same class set object and identical values.
  friend bool operator==(const Character& a, const Character& b);

private:
  ClassesPtr classes_;
  std::vector<Cyclotomic> values_;
};

/// Irreducible characters, sorted by degree and then by value vector.
struct CharacterTable {
  ClassesPtr classes;
  std::vector<Character> irreducibles;

  std::size_t size() const noexcept { return irreducibles.size(); }
  const Character& operator[](std::size_t i) const noexcept { return irreducibles[i]; }
};

/// Exact character table by the Dixon-Schneider method.
CharacterTable character_table(ClassesPtr classes);
CharacterTable character_table(const PermGroup& g, std::uint64_t element_bound = kDefaultElementBound);

/// (1/|G|) Σ a(g) conj(b(g)).
Cyclotomic inner_product(const Character& a, const Character& b);

/// φ^G, with `fusion` mapping classes of φ's group into classes of G.
Character induce(const Character& phi, const ClassesPtr& g, std::span<const std::size_t> fusion);
Character induce(const Character& phi, const ClassesPtr& g);

/// χ restricted to U, with `fusion` mapping classes of U into classes of χ's group.
Character restrict(const Character& chi, const ClassesPtr& u, std::span<const std::size_t> fusion);
Character restrict(const Character& chi, const ClassesPtr& u);

/// {g : χ(g) = χ(1)}.
PermGroup kernel(const Character& chi);
std::uint64_t kernel_order(const Character& chi);

/// Number of fixed points among the points 0..n-1.
Character permutation_character(const ClassesPtr& g, std::size_t n);
Character permutation_character(const ClassesPtr& g);
Character trivial_character(const ClassesPtr& g);
Character regular_character(const ClassesPtr& g);

/// Multiplicities ⟨χ, ψ_i⟩ of the irreducibles in χ.
std::vector<Cyclotomic> decompose(const Character& chi, const CharacterTable& table);

} // namespace qsi

namespace qsi {

/// Index of the linear character of `table` taking value `values[i]` on
/// `gens[i]`, if any.
std::optional<std::size_t> find_linear_character(const CharacterTable& table, std::span<const Permutation> gens,
                                                 std::span<const Cyclotomic> values);

} // namespace qsi
