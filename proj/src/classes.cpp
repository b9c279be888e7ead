#include "qsi/classes.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "qsi/errors.hpp"

namespace qsi {

ConjugacyClassSet::ConjugacyClassSet(std::shared_ptr<const ElementTable> table) : table_(std::move(table)) {
  const ElementTable& t = *table_;
  const std::size_t n = t.size();
  constexpr std::uint32_t unassigned = 0xffffffffu;
  std::vector<std::uint32_t> raw(n, unassigned);

  std::vector<std::size_t> gens;
  for (const Permutation& s : t.group().generators())
    if (!s.is_identity()) gens.push_back(t.index_of(s));

  struct Raw {
    std::vector<std::size_t> members;
    std::size_t least;
  };
  std::vector<Raw> found;
  for (std::size_t x = 0; x < n; ++x) {
    if (raw[x] != unassigned) continue;
    auto id = static_cast<std::uint32_t>(found.size());
    Raw cls{{x}, x};
    raw[x] = id;
    for (std::size_t k = 0; k < cls.members.size(); ++k) {
      std::size_t y = cls.members[k];
      for (std::size_t s : gens) {
        std::size_t z = t.conjugate(y, s);
        if (raw[z] != unassigned) continue;
        raw[z] = id;
        cls.members.push_back(z);
        if (t.less(z, cls.least)) cls.least = z;
      }
    }
    found.push_back(std::move(cls));
  }

  std::vector<std::size_t> perm(found.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  std::sort(perm.begin(), perm.end(), [&](std::size_t a, std::size_t b) {
    const Raw& x = found[a];
    const Raw& y = found[b];
    auto ka = std::make_tuple(t.order(x.least), x.members.size());
    auto kb = std::make_tuple(t.order(y.least), y.members.size());
    if (ka != kb) return ka < kb;
    return t.less(x.least, y.least);
  });
  std::vector<std::uint32_t> new_id(found.size());
  for (std::size_t k = 0; k < perm.size(); ++k) new_id[perm[k]] = static_cast<std::uint32_t>(k);

  element_to_class_.resize(n);
  for (std::size_t x = 0; x < n; ++x) element_to_class_[x] = new_id[raw[x]];
  for (std::size_t k = 0; k < perm.size(); ++k) {
    Raw& r = found[perm[k]];
    sizes_.push_back(r.members.size());
    orders_.push_back(t.order(r.least));
    rep_index_.push_back(r.least);
    std::sort(r.members.begin(), r.members.end());
    members_.push_back(std::move(r.members));
    exponent_ = std::lcm(exponent_, static_cast<std::uint64_t>(orders_.back()));
  }
  for (std::size_t c = 0; c < count(); ++c) inverse_class_.push_back(element_to_class_[t.inverse(rep_index_[c])]);
}

std::size_t ConjugacyClassSet::class_of(const Permutation& p) const {
  return element_to_class_[table_->index_of(p)];
}

std::size_t ConjugacyClassSet::power_class(std::size_t c, std::uint64_t k) const {
  return element_to_class_[table_->power(rep_index_[c], k)];
}

ClassesPtr conjugacy_classes(const PermGroup& g, std::uint64_t element_bound) {
  auto table = std::make_shared<const ElementTable>(g, element_bound);
  return std::make_shared<const ConjugacyClassSet>(std::move(table));
}

std::vector<std::size_t> class_fusion(const ConjugacyClassSet& sub, const ConjugacyClassSet& super) {
  if (sub.elements().degree() != super.elements().degree())
    throw DomainError("class fusion between groups of different degree");
  std::vector<std::size_t> fusion;
  fusion.reserve(sub.count());
  for (std::size_t c = 0; c < sub.count(); ++c) {
    auto idx = super.elements().find(sub.elements().images(sub.representative_index(c)));
    if (!idx) throw DomainError("subgroup element " + sub.representative(c).to_cycle_string() + " not in group");
    std::size_t target = super.class_of_index(*idx);
    if (super.element_order(target) != sub.element_order(c)) throw IntegrityError("class fusion changes element order");
    fusion.push_back(target);
  }
  return fusion;
}

} // namespace qsi
