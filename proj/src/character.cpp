#include "qsi/character.hpp"

#include <algorithm>

#include "qsi/errors.hpp"
#include "qsi/subgroups.hpp"

namespace qsi {

Character::Character(ClassesPtr classes, std::vector<Cyclotomic> values)
    : classes_(std::move(classes)), values_(std::move(values)) {
  if (!classes_) throw MalformedInput("character without a class set");
  if (values_.size() != classes_->count()) throw MalformedInput("character value count differs from class count");
}

std::uint64_t Character::degree() const {
  auto q = values_[0].rational();
  if (!q || q->get_den() != 1 || *q <= 0 || !q->get_num().fits_ulong_p())
    throw DomainError("value at the identity is not a positive integer: " + values_[0].to_string());
  return q->get_num().get_ui();
}

Character& Character::operator+=(const Character& o) {
  if (classes_ != o.classes_) throw DomainError("adding characters of different groups");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

Character& Character::operator-=(const Character& o) {
  if (classes_ != o.classes_) throw DomainError("subtracting characters of different groups");
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

Character& Character::operator*=(const Cyclotomic& s) {
  for (auto& v : values_) v *= s;
  return *this;
}

bool operator==(const Character& a, const Character& b) {
  return a.classes_ == b.classes_ && a.values_ == b.values_;
}

Cyclotomic inner_product(const Character& a, const Character& b) {
  if (a.classes() != b.classes()) throw DomainError("inner product of characters of different groups");
  const ConjugacyClassSet& cls = *a.classes();
  Cyclotomic sum;
  for (std::size_t c = 0; c < cls.count(); ++c) {
    if (a[c].is_zero() || b[c].is_zero()) continue;
    Cyclotomic term = a[c] * b[c].conj();
    term *= Cyclotomic(static_cast<long>(cls.size(c)));
    sum += term;
  }
  return sum / mpq_class(static_cast<unsigned long>(cls.group_order()));
}

namespace {

void check_fusion(const ConjugacyClassSet& sub, const ConjugacyClassSet& super, std::span<const std::size_t> fusion) {
  if (!sub.group().is_subgroup_of(super.group())) throw DomainError("subgroup is not contained in the group");
  if (fusion.size() != sub.count()) throw IntegrityError("fusion map has the wrong length");
  for (std::size_t c = 0; c < sub.count(); ++c) {
    if (fusion[c] >= super.count() || super.element_order(fusion[c]) != sub.element_order(c))
      throw IntegrityError("fusion map is inconsistent with element orders");
  }
}

} // namespace

Character induce(const Character& phi, const ClassesPtr& g, std::span<const std::size_t> fusion) {
  const ConjugacyClassSet& u = *phi.classes();
  check_fusion(u, *g, fusion);
  // φ^G(x) = |C_G(x)|/|U| Σ_{c ⊆ x^G ∩ U} |c| φ(c)
  std::vector<Cyclotomic> sums(g->count());
  for (std::size_t c = 0; c < u.count(); ++c) {
    if (phi[c].is_zero()) continue;
    sums[fusion[c]] += phi[c] * Cyclotomic(static_cast<long>(u.size(c)));
  }
  const mpq_class u_order(static_cast<unsigned long>(u.group_order()));
  for (std::size_t k = 0; k < g->count(); ++k) {
    if (sums[k].is_zero()) continue;
    sums[k] *= Cyclotomic(mpq_class(static_cast<unsigned long>(g->centralizer_order(k))) / u_order);
  }
  return Character(g, std::move(sums));
}

Character induce(const Character& phi, const ClassesPtr& g) {
  auto fusion = class_fusion(*phi.classes(), *g);
  return induce(phi, g, fusion);
}

Character restrict(const Character& chi, const ClassesPtr& u, std::span<const std::size_t> fusion) {
  check_fusion(*u, *chi.classes(), fusion);
  std::vector<Cyclotomic> vals;
  vals.reserve(u->count());
  for (std::size_t c = 0; c < u->count(); ++c) vals.push_back(chi[fusion[c]]);
  return Character(u, std::move(vals));
}

Character restrict(const Character& chi, const ClassesPtr& u) {
  auto fusion = class_fusion(*u, *chi.classes());
  return restrict(chi, u, fusion);
}

std::uint64_t kernel_order(const Character& chi) {
  const ConjugacyClassSet& cls = *chi.classes();
  std::uint64_t n = 0;
  for (std::size_t c = 0; c < cls.count(); ++c)
    if (chi[c] == chi[0]) n += cls.size(c);
  return n;
}

PermGroup kernel(const Character& chi) {
  const ConjugacyClassSet& cls = *chi.classes();
  std::vector<std::size_t> members;
  for (std::size_t c = 0; c < cls.count(); ++c)
    if (chi[c] == chi[0]) members.insert(members.end(), cls.members(c).begin(), cls.members(c).end());
  std::sort(members.begin(), members.end());
  return subgroup_from_element_set(cls.elements(), members);
}

Character permutation_character(const ClassesPtr& g, std::size_t n) {
  std::vector<Cyclotomic> vals;
  for (std::size_t c = 0; c < g->count(); ++c)
    vals.emplace_back(static_cast<long>(g->representative(c).fixed_points(n)));
  return Character(g, std::move(vals));
}

Character permutation_character(const ClassesPtr& g) { return permutation_character(g, g->group().degree()); }

Character trivial_character(const ClassesPtr& g) {
  return Character(g, std::vector<Cyclotomic>(g->count(), Cyclotomic(1)));
}

Character regular_character(const ClassesPtr& g) {
  std::vector<Cyclotomic> vals(g->count(), Cyclotomic(0));
  vals[0] = Cyclotomic(static_cast<long>(g->group_order()));
  return Character(g, std::move(vals));
}

std::vector<Cyclotomic> decompose(const Character& chi, const CharacterTable& table) {
  std::vector<Cyclotomic> out;
  for (const Character& psi : table.irreducibles) out.push_back(inner_product(chi, psi));
  return out;
}

} // namespace qsi

namespace qsi {

std::optional<std::size_t> find_linear_character(const CharacterTable& table, std::span<const Permutation> gens,
                                                 std::span<const Cyclotomic> values) {
  if (gens.size() != values.size()) throw MalformedInput("one value per generator is required");
  const ConjugacyClassSet& cls = *table.classes;
  std::vector<std::size_t> gc;
  for (const auto& g : gens) gc.push_back(cls.class_of(g));
  for (std::size_t j = 0; j < table.size(); ++j) {
    if (!table[j].is_linear()) continue;
    bool ok = true;
    for (std::size_t i = 0; i < gens.size() && ok; ++i) ok = table[j][gc[i]] == values[i];
    if (ok) return j;
  }
  return std::nullopt;
}

} // namespace qsi
