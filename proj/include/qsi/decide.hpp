#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsi/character.hpp"
#include "qsi/subgroups.hpp"

namespace qsi {

struct SearchBounds {
  std::uint64_t subgroup_bound = kDefaultSubgroupBound;
  std::uint64_t element_bound = kDefaultElementBound;
  bool prefilters = true;
};

enum class QsiStatus {
  qsi_with_witness,
  monomial_with_witness,
  refuted_exhaustive,
  refuted_by_prefilter,
  undecided_capacity,
};

std::string_view to_string(QsiStatus s);
bool is_positive(QsiStatus s);

/// k·χ = φ^G with φ = Irr(U)[char_index] and U/ker(φ) solvable.
struct QsiWitness {
  PermGroup subgroup;
  std::uint64_t subgroup_order = 1;
  std::size_t char_index = 0;
  Character phi;
  std::uint64_t multiplier = 1;
  std::uint64_t solvable_quotient_order = 1;
};

/// How one subgroup class was disposed of during a refutation.
struct PruneEntry {
  std::size_t subgroup_class = 0;
  std::uint64_t subgroup_order = 1;
  /// "class-fraction", "simple-subgroup" or "steinberg-kernel" for prefilters;
  /// "degree" when no φ(1) makes k integral; "searched" otherwise.
  std::string reason;
};

struct QsiVerdict {
  std::size_t char_index = 0;
  Character character;
  QsiStatus status = QsiStatus::undecided_capacity;
  std::optional<QsiWitness> witness;
  std::vector<PruneEntry> pruning_log;

  bool positive() const { return is_positive(status); }
};

struct GroupVerdict {
  std::vector<QsiVerdict> verdicts;
  bool monomial_mode = false;
  /// Empty when some verdict is undecided.
  std::optional<bool> holds;
  bool solvable = false;
};

/// Everything the searches need about G, computed once and shared between
/// characters: classes, character table, subgroup classes and their tables.
class QsiContext {
public:
  QsiContext(PermGroup g, SearchBounds bounds = {});

  const PermGroup& group() const noexcept { return group_; }
  const SearchBounds& bounds() const noexcept { return bounds_; }
  const ClassesPtr& classes() const noexcept { return classes_; }
  const CharacterTable& table() const;
  bool solvable() const;

  /// Throws CapacityError when |G| exceeds the subgroup bound.
  const std::vector<SubgroupClass>& subgroups() const;

  struct SubgroupData {
    ClassesPtr classes;
    CharacterTable table;
    std::vector<std::size_t> fusion;
    /// Classes of U inside the last term of its derived series.
    std::vector<std::size_t> residual_classes;
    bool simple_nonabelian = false;
  };
  /// Lazily built data for an arbitrary subgroup U ≤ G.
  std::shared_ptr<const SubgroupData> analyze(const PermGroup& u) const;
  /// Cached analysis of subgroup class i.
  std::shared_ptr<const SubgroupData> subgroup_data(std::size_t i) const;

  /// |C ∩ U| for every class C of G.
  std::vector<std::uint64_t> class_counts(const PermGroup& u) const;

private:
  PermGroup group_;
  SearchBounds bounds_;
  ClassesPtr classes_;
  mutable std::optional<CharacterTable> table_;
  mutable std::optional<bool> solvable_;
  mutable std::optional<std::vector<SubgroupClass>> subgroups_;
  mutable std::vector<std::shared_ptr<const SubgroupData>> subgroup_data_;
};

/// Necessary condition: U meets every class C with χ(g_C) ≠ 0 in
/// at least the fraction |χ(g_C)|/χ(1). `class_counts` holds |C ∩ U|.
bool class_fraction_prefilter(const Character& chi, std::span<const std::uint64_t> class_counts);
bool class_fraction_prefilter(const QsiContext& ctx, const Character& chi, const PermGroup& u);

/// False iff U is non-abelian simple and χ is not trivial.
bool simple_subgroup_prefilter(const Character& chi, const PermGroup& u);
bool simple_subgroup_prefilter(const Character& chi, bool u_simple_nonabelian);

/// True iff p does not divide |ker φ|.
bool steinberg_kernel_constraint(const Character& phi, std::uint64_t p);
bool steinberg_kernel_constraint(const PermGroup& u, const Character& phi, std::uint64_t p);

/// The prime p when χ(1) is the full p-part of |G|, otherwise none.
std::optional<std::uint64_t> steinberg_prime(const Character& chi);

QsiVerdict decide_qsi_character(const QsiContext& ctx, std::size_t char_index);
QsiVerdict decide_monomial_character(const QsiContext& ctx, std::size_t char_index);
QsiVerdict decide_qsi_character(const PermGroup& g, std::size_t char_index, SearchBounds bounds = {});
QsiVerdict decide_monomial_character(const PermGroup& g, std::size_t char_index, SearchBounds bounds = {});

/// One verdict per irreducible; throws IntegrityError if a non-solvable group
/// comes out QSI or a non-solvable group comes out monomial.
GroupVerdict decide_qsi_group(const QsiContext& ctx);
GroupVerdict decide_monomial_group(const QsiContext& ctx);
GroupVerdict decide_qsi_group(const PermGroup& g, SearchBounds bounds = {});

/// True iff "G QSI implies G/N QSI" holds on the computed verdicts.
bool quotient_transfer_check(const GroupVerdict& g, const GroupVerdict& quotient);

/// Recomputes φ^G pointwise, (1/|U|) Σ_{y ∈ G, x^y ∈ U} φ(x^y), and checks
/// that it equals k·χ; also rechecks solvability of U/ker(φ) from scratch.
bool verify_witness(const QsiContext& ctx, const Character& chi, const QsiWitness& w);

/// Induced character computed by the pointwise formula.
Character induce_pointwise(const Character& phi, const ClassesPtr& g);

/// Outcome of screening one candidate subgroup against χ with the prefilters.
struct ScreenResult {
  /// Name of the rejecting prefilter, or empty when U survives.
  std::string rejected_by;
  /// Indices into Irr(U) surviving every prefilter (when not rejected).
  std::vector<std::size_t> surviving_characters;
};

/// Applies class-fraction and simple-subgroup tests to U, then the degree,
/// solvable-quotient and (for p-part degrees) kernel conditions to each φ.
ScreenResult screen_subgroup(const QsiContext& ctx, const Character& chi, const PermGroup& u);

} // namespace qsi
