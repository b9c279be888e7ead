#include "qsi/decide.hpp"

#include <algorithm>
#include <numeric>

#include "qsi/errors.hpp"

namespace qsi {

std::string_view to_string(QsiStatus s) {
  switch (s) {
    case QsiStatus::qsi_with_witness: return "qsi-with-witness";
    case QsiStatus::monomial_with_witness: return "monomial-with-witness";
    case QsiStatus::refuted_exhaustive: return "refuted-exhaustive";
    case QsiStatus::refuted_by_prefilter: return "refuted-by-prefilter";
    case QsiStatus::undecided_capacity: return "undecided-capacity";
  }
  return "unknown";
}

bool is_positive(QsiStatus s) {
  return s == QsiStatus::qsi_with_witness || s == QsiStatus::monomial_with_witness;
}

namespace {

bool simple_nonabelian(const PermGroup& u, const ConjugacyClassSet& cls) {
  if (cls.count() == cls.group_order()) return false;
  if (derived_subgroup(u).order() != u.order()) return false;
  for (std::size_t c = 1; c < cls.count(); ++c)
    if (normal_closure(u, {cls.representative(c)}).order() != u.order()) return false;
  return true;
}

std::vector<std::size_t> residual_classes(const PermGroup& u, const ConjugacyClassSet& cls) {
  PermGroup r = derived_series(u).back();
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < cls.count(); ++c)
    if (r.contains(cls.representative(c))) out.push_back(c);
  return out;
}

bool quotient_solvable(const Character& phi, std::span<const std::size_t> residual) {
  return std::all_of(residual.begin(), residual.end(), [&](std::size_t c) { return phi[c] == phi[0]; });
}

/// |C_U(1)|/|ker φ| without building the kernel.
std::uint64_t quotient_order(const Character& phi) { return phi.classes()->group_order() / kernel_order(phi); }

} // namespace

QsiContext::QsiContext(PermGroup g, SearchBounds bounds)
    : group_(std::move(g)), bounds_(bounds), classes_(conjugacy_classes(group_, bounds.element_bound)) {
  if (bounds_.subgroup_bound == 0 || bounds_.element_bound == 0) throw DomainError("bounds must be positive");
}

const CharacterTable& QsiContext::table() const {
  if (!table_) table_ = character_table(classes_);
  return *table_;
}

bool QsiContext::solvable() const {
  if (!solvable_) solvable_ = is_solvable(group_);
  return *solvable_;
}

const std::vector<SubgroupClass>& QsiContext::subgroups() const {
  if (!subgroups_) {
    subgroups_ = all_subgroups_up_to_conjugacy(*classes_, bounds_.subgroup_bound);
    subgroup_data_.assign(subgroups_->size(), nullptr);
  }
  return *subgroups_;
}

std::shared_ptr<const QsiContext::SubgroupData> QsiContext::analyze(const PermGroup& u) const {
  auto data = std::make_shared<SubgroupData>();
  data->classes = u.order() == group_.order() ? classes_ : conjugacy_classes(u, bounds_.element_bound);
  data->table = data->classes == classes_ ? table() : character_table(data->classes);
  data->fusion = class_fusion(*data->classes, *classes_);
  data->residual_classes = residual_classes(u, *data->classes);
  data->simple_nonabelian = simple_nonabelian(u, *data->classes);
  return data;
}

std::shared_ptr<const QsiContext::SubgroupData> QsiContext::subgroup_data(std::size_t i) const {
  const auto& subs = subgroups();
  if (i >= subs.size()) throw NotFound("subgroup class index out of range");
  if (!subgroup_data_[i]) subgroup_data_[i] = analyze(subs[i].group);
  return subgroup_data_[i];
}

std::vector<std::uint64_t> QsiContext::class_counts(const PermGroup& u) const {
  if (!u.is_subgroup_of(group_)) throw DomainError("subgroup is not contained in the group");
  ElementTable t(u, bounds_.element_bound);
  std::vector<std::uint64_t> counts(classes_->count(), 0);
  const ElementTable& big = classes_->elements();
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto idx = big.find(t.images(i));
    if (!idx) throw IntegrityError("subgroup element missing from the group");
    ++counts[classes_->class_of_index(*idx)];
  }
  return counts;
}

bool class_fraction_prefilter(const Character& chi, std::span<const std::uint64_t> class_counts) {
  const ConjugacyClassSet& cls = *chi.classes();
  if (class_counts.size() != cls.count()) throw MalformedInput("class count vector has the wrong length");
  const mpq_class degree(static_cast<unsigned long>(chi.degree()));
  for (std::size_t c = 0; c < cls.count(); ++c) {
    if (chi[c].is_zero()) continue;
    if (class_counts[c] == 0) return false;
    mpq_class bound = degree * static_cast<unsigned long>(class_counts[c]) / static_cast<unsigned long>(cls.size(c));
    bound *= bound;
    Cyclotomic diff = Cyclotomic(bound) - chi[c] * chi[c].conj();
    if (real_sign(diff) < 0) return false;
  }
  return true;
}

bool class_fraction_prefilter(const QsiContext& ctx, const Character& chi, const PermGroup& u) {
  return class_fraction_prefilter(chi, ctx.class_counts(u));
}

bool simple_subgroup_prefilter(const Character& chi, bool u_simple_nonabelian) {
  if (!u_simple_nonabelian) return true;
  return std::all_of(chi.values().begin(), chi.values().end(), [](const Cyclotomic& v) { return v == Cyclotomic(1); });
}

bool simple_subgroup_prefilter(const Character& chi, const PermGroup& u) {
  auto cls = conjugacy_classes(u);
  return simple_subgroup_prefilter(chi, simple_nonabelian(u, *cls));
}

bool steinberg_kernel_constraint(const Character& phi, std::uint64_t p) {
  if (p < 2) throw DomainError("kernel constraint needs a prime");
  return kernel_order(phi) % p != 0;
}

bool steinberg_kernel_constraint(const PermGroup& u, const Character& phi, std::uint64_t p) {
  if (!(phi.group().order() == u.order()) || !phi.group().is_subgroup_of(u))
    throw DomainError("character does not belong to the given subgroup");
  return steinberg_kernel_constraint(phi, p);
}

std::optional<std::uint64_t> steinberg_prime(const Character& chi) {
  std::uint64_t d = chi.degree();
  if (d < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (d % p) ++p;
  std::uint64_t rest = d;
  while (rest % p == 0) rest /= p;
  if (rest != 1) return std::nullopt;
  std::uint64_t order = chi.classes()->group_order();
  if ((order / d) % p == 0 || order % d) return std::nullopt;
  return p;
}

Character induce_pointwise(const Character& phi, const ClassesPtr& g) {
  const ConjugacyClassSet& u = *phi.classes();
  if (!u.group().is_subgroup_of(g->group())) throw DomainError("subgroup is not contained in the group");
  const ElementTable& gt = g->elements();
  const ElementTable& ut = u.elements();
  std::vector<Cyclotomic> values;
  for (std::size_t k = 0; k < g->count(); ++k) {
    const std::size_t x = g->representative_index(k);
    std::vector<std::uint64_t> hits(u.count(), 0);
    for (std::size_t y = 0; y < gt.size(); ++y) {
      auto in_u = ut.find(gt.images(gt.conjugate(x, y)));
      if (in_u) ++hits[u.class_of_index(*in_u)];
    }
    Cyclotomic sum;
    for (std::size_t c = 0; c < u.count(); ++c)
      if (hits[c]) sum += phi[c] * Cyclotomic(static_cast<long>(hits[c]));
    values.push_back(sum / mpq_class(static_cast<unsigned long>(u.group_order())));
  }
  return Character(g, std::move(values));
}

bool verify_witness(const QsiContext& ctx, const Character& chi, const QsiWitness& w) {
  const ConjugacyClassSet& u = *w.phi.classes();
  if (!(u.group().order() == w.subgroup.order()) || !u.group().is_subgroup_of(w.subgroup)) return false;
  if (!w.subgroup.is_subgroup_of(ctx.group())) return false;
  const std::uint64_t index = ctx.classes()->group_order() / u.group_order();
  if (index * w.phi.degree() != w.multiplier * chi.degree()) return false;
  Character induced = induce_pointwise(w.phi, ctx.classes());
  if (!(induced == chi * Cyclotomic(static_cast<long>(w.multiplier)))) return false;
  PermGroup k = kernel(w.phi);
  PermGroup q = quotient(w.subgroup, k, ctx.bounds().element_bound);
  if (q.order() != mpz_class(static_cast<unsigned long>(w.solvable_quotient_order))) return false;
  return is_solvable(q);
}

namespace {

QsiVerdict search(const QsiContext& ctx, std::size_t idx, bool monomial) {
  const CharacterTable& table = ctx.table();
  if (idx >= table.size()) throw NotFound("character index " + std::to_string(idx) + " out of range");
  const Character& chi = table[idx];
  QsiVerdict v{idx, chi, QsiStatus::undecided_capacity, std::nullopt, {}};
  const QsiStatus found = monomial ? QsiStatus::monomial_with_witness : QsiStatus::qsi_with_witness;
  const std::uint64_t order = ctx.classes()->group_order();
  const std::uint64_t d = chi.degree();

  auto accept = [&](QsiWitness w) {
    if (!verify_witness(ctx, chi, w)) throw IntegrityError("witness failed independent re-verification");
    v.status = found;
    v.witness = std::move(w);
    return v;
  };

  // U = G: φ must be χ itself.
  {
    auto residual = residual_classes(ctx.group(), *ctx.classes());
    bool ok = monomial ? d == 1 : quotient_solvable(chi, residual);
    if (ok) return accept(QsiWitness{ctx.group(), order, idx, chi, 1, quotient_order(chi)});
  }

  const std::vector<SubgroupClass>* subs = nullptr;
  try {
    subs = &ctx.subgroups();
  } catch (const CapacityError&) {
    return v;
  }

  const auto sp = ctx.bounds().prefilters ? steinberg_prime(chi) : std::nullopt;
  for (std::size_t i = subs->size(); i-- > 0;) {
    const SubgroupClass& sc = (*subs)[i];
    PruneEntry entry{i, sc.order, "searched"};
    const std::uint64_t index = order / sc.order;
    if (sc.order == order) {
      v.pruning_log.push_back(entry);
      continue;
    }
    // Smallest φ(1) making k integral; it must divide |U| with φ(1)² ≤ |U|.
    const std::uint64_t need = d / std::gcd(d, index);
    bool degree_possible = monomial ? index == d : sc.order % need == 0 && need * need <= sc.order;
    if (!degree_possible) {
      entry.reason = "degree";
      v.pruning_log.push_back(entry);
      continue;
    }
    if (ctx.bounds().prefilters) {
      if (!class_fraction_prefilter(chi, sc.class_counts)) {
        entry.reason = "class-fraction";
        v.pruning_log.push_back(entry);
        continue;
      }
    }
    auto data = ctx.subgroup_data(i);
    if (ctx.bounds().prefilters && !simple_subgroup_prefilter(chi, data->simple_nonabelian)) {
      entry.reason = "simple-subgroup";
      v.pruning_log.push_back(entry);
      continue;
    }
    bool admissible = false, kernel_rejected_all = true;
    for (std::size_t j = data->table.size(); j-- > 0;) {
      const Character& phi = data->table[j];
      const std::uint64_t pd = phi.degree();
      if ((index * pd) % d) continue;
      const std::uint64_t k = index * pd / d;
      if (monomial && (pd != 1 || k != 1)) continue;
      if (!quotient_solvable(phi, data->residual_classes)) continue;
      admissible = true;
      if (sp && !steinberg_kernel_constraint(phi, *sp)) continue;
      kernel_rejected_all = false;
      Character induced = induce(phi, ctx.classes(), data->fusion);
      if (induced == chi * Cyclotomic(static_cast<long>(k)))
        return accept(QsiWitness{sc.group, sc.order, j, phi, k, quotient_order(phi)});
    }
    if (admissible && kernel_rejected_all) entry.reason = "steinberg-kernel";
    v.pruning_log.push_back(entry);
  }
  v.status = QsiStatus::refuted_exhaustive;
  return v;
}

GroupVerdict decide_group(const QsiContext& ctx, bool monomial) {
  GroupVerdict out;
  out.monomial_mode = monomial;
  out.solvable = ctx.solvable();
  bool undecided = false, refuted = false;
  for (std::size_t i = 0; i < ctx.table().size(); ++i) {
    out.verdicts.push_back(search(ctx, i, monomial));
    const QsiStatus s = out.verdicts.back().status;
    if (s == QsiStatus::undecided_capacity) undecided = true;
    else if (!is_positive(s)) refuted = true;
  }
  if (refuted) out.holds = false;
  else if (!undecided) out.holds = true;
  if (out.holds == true && !out.solvable)
    throw IntegrityError(monomial ? "non-solvable group certified monomial" : "non-solvable group certified QSI");
  if (!monomial && out.solvable && out.holds == false) throw IntegrityError("solvable group refuted as QSI");
  return out;
}

} // namespace

QsiVerdict decide_qsi_character(const QsiContext& ctx, std::size_t char_index) { return search(ctx, char_index, false); }

QsiVerdict decide_monomial_character(const QsiContext& ctx, std::size_t char_index) {
  return search(ctx, char_index, true);
}

QsiVerdict decide_qsi_character(const PermGroup& g, std::size_t char_index, SearchBounds bounds) {
  return decide_qsi_character(QsiContext(g, bounds), char_index);
}

QsiVerdict decide_monomial_character(const PermGroup& g, std::size_t char_index, SearchBounds bounds) {
  return decide_monomial_character(QsiContext(g, bounds), char_index);
}

GroupVerdict decide_qsi_group(const QsiContext& ctx) { return decide_group(ctx, false); }
GroupVerdict decide_monomial_group(const QsiContext& ctx) { return decide_group(ctx, true); }
GroupVerdict decide_qsi_group(const PermGroup& g, SearchBounds bounds) { return decide_qsi_group(QsiContext(g, bounds)); }

bool quotient_transfer_check(const GroupVerdict& g, const GroupVerdict& quotient) {
  if (g.holds != true) return true;
  return quotient.holds == true;
}

ScreenResult screen_subgroup(const QsiContext& ctx, const Character& chi, const PermGroup& u) {
  ScreenResult r;
  if (!class_fraction_prefilter(chi, ctx.class_counts(u))) {
    r.rejected_by = "class-fraction";
    return r;
  }
  auto data = ctx.analyze(u);
  if (!simple_subgroup_prefilter(chi, data->simple_nonabelian)) {
    r.rejected_by = "simple-subgroup";
    return r;
  }
  const std::uint64_t index = ctx.classes()->group_order() / data->classes->group_order();
  const std::uint64_t d = chi.degree();
  const auto sp = steinberg_prime(chi);
  bool admissible = false;
  for (std::size_t j = 0; j < data->table.size(); ++j) {
    const Character& phi = data->table[j];
    if ((index * phi.degree()) % d) continue;
    if (!quotient_solvable(phi, data->residual_classes)) continue;
    admissible = true;
    if (sp && !steinberg_kernel_constraint(phi, *sp)) continue;
    r.surviving_characters.push_back(j);
  }
  if (r.surviving_characters.empty()) r.rejected_by = admissible ? "steinberg-kernel" : "degree-or-solvability";
  return r;
}

} // namespace qsi
