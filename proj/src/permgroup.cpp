#include "qsi/permgroup.hpp"

#include <algorithm>
#include <set>

#include "qsi/element_table.hpp"
#include "qsi/errors.hpp"

namespace qsi {

namespace {

void rebuild_orbit(StabilizerLevel& level, std::size_t degree) {
  level.transversal_index.assign(degree, -1);
  level.transversal.clear();
  level.orbit.clear();
  level.transversal_index[level.base_point] = 0;
  level.transversal.emplace_back(degree);
  level.orbit.push_back(level.base_point);
  for (std::size_t k = 0; k < level.orbit.size(); ++k) {
    Point beta = level.orbit[k];
    const Permutation u = level.transversal[static_cast<std::size_t>(level.transversal_index[beta])];
    for (const Permutation& s : level.generators) {
      Point gamma = s[beta];
      if (level.transversal_index[gamma] >= 0) continue;
      level.transversal_index[gamma] = static_cast<int>(level.transversal.size());
      level.transversal.push_back(u * s);
      level.orbit.push_back(gamma);
    }
  }
}

/// Strips g through the chain starting at `from`. Returns the residue and
/// the level at which stripping stopped (chain.size() if it went through).
std::pair<Permutation, std::size_t> sift(const std::vector<StabilizerLevel>& chain, Permutation g,
                                         std::size_t from) {
  for (std::size_t j = from; j < chain.size(); ++j) {
    Point beta = g[chain[j].base_point];
    int idx = chain[j].transversal_index[beta];
    if (idx < 0) return {std::move(g), j};
    g = g * chain[j].transversal[static_cast<std::size_t>(idx)].inverse();
  }
  return {std::move(g), chain.size()};
}

Point first_moved_point(const Permutation& g) {
  for (std::size_t i = 0; i < g.degree(); ++i)
    if (g[i] != i) return static_cast<Point>(i);
  throw IntegrityError("identity has no moved point");
}

} // namespace

PermGroup::PermGroup(std::size_t degree) : degree_(degree), order_(1) {
  if (degree == 0) throw MalformedInput("permutation group degree must be at least 1");
}

PermGroup PermGroup::generate(std::size_t degree, std::vector<Permutation> generators) {
  PermGroup g(degree);
  for (const Permutation& p : generators)
    if (p.degree() != degree)
      throw MalformedInput("generator of degree " + std::to_string(p.degree()) + " in group of degree " +
                           std::to_string(degree));
  g.generators_ = std::move(generators);

  std::vector<Permutation> strong;
  for (const Permutation& p : g.generators_)
    if (!p.is_identity() && std::find(strong.begin(), strong.end(), p) == strong.end()) strong.push_back(p);
  if (strong.empty()) return g;

  auto& chain = g.chain_;
  for (const Permutation& s : strong) {
    bool fixes_base = std::all_of(chain.begin(), chain.end(),
                                  [&](const StabilizerLevel& l) { return s[l.base_point] == l.base_point; });
    if (fixes_base) {
      StabilizerLevel level;
      level.base_point = first_moved_point(s);
      chain.push_back(std::move(level));
    }
  }
  for (std::size_t i = 0; i < chain.size(); ++i) {
    for (const Permutation& s : strong) {
      bool fixes_prefix = true;
      for (std::size_t j = 0; j < i; ++j)
        if (s[chain[j].base_point] != chain[j].base_point) fixes_prefix = false;
      if (fixes_prefix) chain[i].generators.push_back(s);
    }
    rebuild_orbit(chain[i], degree);
  }

  std::ptrdiff_t i = static_cast<std::ptrdiff_t>(chain.size()) - 1;
  while (i >= 0) {
    auto level_index = static_cast<std::size_t>(i);
    bool extended = false;
    const std::vector<Point> orbit = chain[level_index].orbit;
    const std::vector<Permutation> gens = chain[level_index].generators;
    for (Point beta : orbit) {
      for (const Permutation& s : gens) {
        const StabilizerLevel& lv = chain[level_index];
        const Permutation& u_beta = lv.transversal[static_cast<std::size_t>(lv.transversal_index[beta])];
        const Permutation& u_gamma = lv.transversal[static_cast<std::size_t>(lv.transversal_index[s[beta]])];
        Permutation h = u_beta * s * u_gamma.inverse();
        if (h.is_identity()) continue;
        auto [y, j] = sift(chain, std::move(h), level_index + 1);
        if (j < chain.size() || !y.is_identity()) {
          if (j == chain.size()) {
            StabilizerLevel level;
            level.base_point = first_moved_point(y);
            chain.push_back(std::move(level));
          }
          for (std::size_t l = level_index + 1; l <= j; ++l) {
            chain[l].generators.push_back(y);
            rebuild_orbit(chain[l], degree);
          }
          i = static_cast<std::ptrdiff_t>(j);
          extended = true;
          break;
        }
      }
      if (extended) break;
    }
    if (!extended) --i;
  }

  g.order_ = 1;
  for (const StabilizerLevel& l : chain) g.order_ *= static_cast<unsigned long>(l.orbit.size());
  return g;
}

std::uint64_t PermGroup::small_order() const {
  if (!order_.fits_ulong_p()) throw CapacityError("group order does not fit a machine word", UINT64_MAX);
  return order_.get_ui();
}

bool PermGroup::contains(const Permutation& g) const {
  if (g.degree() != degree_) return false;
  auto [residue, level] = sift(chain_, g, 0);
  return level == chain_.size() && residue.is_identity();
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (other.degree() != degree_) return false;
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Permutation& s) { return other.contains(s); });
}

std::vector<Point> PermGroup::base() const {
  std::vector<Point> b;
  for (const auto& l : chain_) b.push_back(l.base_point);
  return b;
}

PermGroup schreier_sims(std::size_t degree, std::vector<Permutation> generators) {
  return PermGroup::generate(degree, std::move(generators));
}

bool is_normal_in(const PermGroup& n, const PermGroup& g) {
  if (!n.is_subgroup_of(g)) return false;
  for (const Permutation& h : n.generators())
    for (const Permutation& s : g.generators())
      if (!n.contains(conjugate(h, s))) return false;
  return true;
}

PermGroup normal_closure(const PermGroup& g, std::vector<Permutation> seeds) {
  std::vector<Permutation> gens;
  for (auto& s : seeds)
    if (!s.is_identity()) gens.push_back(std::move(s));
  PermGroup h = PermGroup::generate(g.degree(), gens);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t k = 0; k < gens.size(); ++k) {
      for (const Permutation& s : g.generators()) {
        Permutation c = conjugate(gens[k], s);
        if (!h.contains(c)) {
          gens.push_back(std::move(c));
          h = PermGroup::generate(g.degree(), gens);
          changed = true;
        }
      }
    }
  }
  return h;
}

PermGroup derived_subgroup(const PermGroup& g) {
  std::vector<Permutation> comms;
  const auto& gens = g.generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b) comms.push_back(commutator(gens[a], gens[b]));
  return normal_closure(g, std::move(comms));
}

std::vector<PermGroup> derived_series(const PermGroup& g) {
  std::vector<PermGroup> series{g};
  for (;;) {
    PermGroup next = derived_subgroup(series.back());
    if (next.order() == series.back().order()) break;
    series.push_back(std::move(next));
  }
  return series;
}

bool is_solvable(const PermGroup& g) { return derived_series(g).back().is_trivial(); }

bool is_abelian(const PermGroup& g) {
  const auto& gens = g.generators();
  for (std::size_t a = 0; a < gens.size(); ++a)
    for (std::size_t b = a + 1; b < gens.size(); ++b)
      if (gens[a] * gens[b] != gens[b] * gens[a]) return false;
  return true;
}

PermGroup quotient(const PermGroup& g, const PermGroup& n, std::uint64_t element_bound) {
  if (!is_normal_in(n, g)) throw DomainError("quotient: subgroup is not normal");
  ElementTable table(g, element_bound);
  std::vector<std::size_t> n_elems;
  n_elems.reserve(n.small_order());
  for (std::size_t i = 0; i < table.size(); ++i)
    if (n.contains(table.element(i))) n_elems.push_back(i);

  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset(table.size(), unassigned);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < table.size(); ++x) {
    if (coset[x] != unassigned) continue;
    for (std::size_t m : n_elems) coset[table.multiply(m, x)] = reps.size();
    reps.push_back(x);
  }

  std::vector<Permutation> images;
  for (const Permutation& s : g.generators()) {
    std::size_t si = table.index_of(s);
    std::vector<Point> img(reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) img[c] = static_cast<Point>(coset[table.multiply(reps[c], si)]);
    images.emplace_back(std::move(img));
  }
  return PermGroup::generate(reps.size(), std::move(images));
}

std::vector<std::uint64_t> element_orders_present(const PermGroup& g, std::uint64_t element_bound) {
  ElementTable table(g, element_bound);
  std::set<std::uint64_t> orders;
  for (std::size_t i = 0; i < table.size(); ++i) orders.insert(table.order(i));
  return {orders.begin(), orders.end()};
}

} // namespace qsi
