#include "qsi/subgroups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "qsi/errors.hpp"

namespace qsi {

namespace {

class Bitset {
public:
  explicit Bitset(std::size_t n = 0) : words_((n + 63) / 64, 0) {}
  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  bool operator==(const Bitset&) const = default;
  std::uint64_t hash() const noexcept {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (std::uint64_t w : words_) {
      h ^= w;
      h *= 0x100000001b3ull;
      h ^= h >> 31;
    }
    return h;
  }

private:
  std::vector<std::uint64_t> words_;
};

struct ElementSet {
  Bitset bits;
  std::vector<std::size_t> elements;
  std::vector<std::size_t> generators;
};

/// Extends the subgroup `h` by `extra` generators (Dimino's coset method).
ElementSet extend(const ElementTable& t, const ElementSet& h, std::span<const std::size_t> extra) {
  ElementSet k = h;
  std::vector<std::size_t> gens = h.generators;
  for (std::size_t z : extra) {
    if (k.bits.test(z)) continue;
    gens.push_back(z);
    const std::vector<std::size_t> base = k.elements;
    std::vector<std::size_t> reps{0};
    for (std::size_t r = 0; r < reps.size(); ++r) {
      for (std::size_t s : gens) {
        std::size_t g = t.multiply(reps[r], s);
        if (k.bits.test(g)) continue;
        for (std::size_t b : base) {
          std::size_t e = t.multiply(b, g);
          k.bits.set(e);
          k.elements.push_back(e);
        }
        reps.push_back(g);
      }
    }
  }
  k.generators = std::move(gens);
  return k;
}

ElementSet trivial_set(const ElementTable& t) {
  ElementSet s{Bitset(t.size()), {0}, {}};
  s.bits.set(0);
  return s;
}

std::vector<std::size_t> greedy_generators(const ElementTable& t, std::span<const std::size_t> members) {
  ElementSet cur = trivial_set(t);
  for (std::size_t x : members) {
    if (cur.bits.test(x)) continue;
    std::size_t one[] = {x};
    cur = extend(t, cur, one);
  }
  return cur.generators;
}

PermGroup to_group(const ElementTable& t, std::span<const std::size_t> gens) {
  std::vector<Permutation> perms;
  for (std::size_t g : gens) perms.push_back(t.element(g));
  return PermGroup::generate(t.degree(), std::move(perms));
}

} // namespace

PermGroup subgroup_generated(const ElementTable& table, std::span<const std::size_t> elements) {
  ElementSet k = extend(table, trivial_set(table), elements);
  return to_group(table, k.generators);
}

PermGroup subgroup_from_element_set(const ElementTable& table, std::span<const std::size_t> elements) {
  auto gens = greedy_generators(table, elements);
  PermGroup g = to_group(table, gens);
  if (g.order() != elements.size()) throw IntegrityError("element set is not a subgroup");
  return g;
}

std::vector<SubgroupClass> all_subgroups_up_to_conjugacy(const PermGroup& g, std::uint64_t max_order) {
  if (g.order() > max_order)
    throw CapacityError("subgroup enumeration of a group of order " + g.order().get_str(), max_order);
  return all_subgroups_up_to_conjugacy(*conjugacy_classes(g, std::max<std::uint64_t>(max_order, 1)), max_order);
}

std::vector<SubgroupClass> all_subgroups_up_to_conjugacy(const ConjugacyClassSet& cls, std::uint64_t max_order) {
  const ElementTable& t = cls.elements();
  const std::size_t n = t.size();
  if (n > max_order) throw CapacityError("subgroup enumeration of a group of order " + std::to_string(n), max_order);

  // Cyclic subgroups of prime-power order ("zuppos"), each with one generator.
  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> zuppo_of(n, none);
  std::vector<std::size_t> zuppo_gen;
  auto prime_power = [](std::uint64_t m) {
    if (m < 2) return false;
    std::uint64_t p = 2;
    while (m % p) ++p;
    while (m % p == 0) m /= p;
    return m == 1;
  };
  for (std::size_t x = 0; x < n; ++x) {
    if (zuppo_of[x] != none || !prime_power(t.order(x))) continue;
    std::size_t id = zuppo_gen.size();
    zuppo_gen.push_back(x);
    std::uint64_t o = t.order(x);
    for (std::uint64_t k = 1; k < o; ++k)
      if (std::gcd(k, o) == 1) zuppo_of[t.power(x, k)] = id;
  }

  struct Found {
    ElementSet set;
    std::vector<std::uint64_t> counts;
    std::uint64_t conjugates = 0;
  };
  std::vector<Found> reps;
  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> by_invariant;
  std::unordered_map<std::uint64_t, std::vector<std::pair<Bitset, std::size_t>>> seen;

  auto counts_of = [&](const ElementSet& s) {
    std::vector<std::uint64_t> c(cls.count() + 1, 0);
    c[0] = s.elements.size();
    for (std::size_t e : s.elements) ++c[cls.class_of_index(e) + 1];
    return c;
  };
  // conj_to[x] conjugates the class representative of x to x; centralizers
  // of representatives are filled on demand.
  std::vector<std::size_t> conj_to(n, none);
  for (std::size_t c = 0; c < cls.count(); ++c) {
    std::size_t r = cls.representative_index(c);
    conj_to[r] = 0;
    std::vector<std::size_t> queue{r};
    for (std::size_t q = 0; q < queue.size(); ++q)
      for (const Permutation& s : cls.group().generators()) {
        std::size_t si = t.index_of(s);
        std::size_t y = t.conjugate(queue[q], si);
        if (conj_to[y] != none) continue;
        conj_to[y] = t.multiply(conj_to[queue[q]], si);
        queue.push_back(y);
      }
  }
  std::vector<std::vector<std::size_t>> centralizer(cls.count());
  auto centralizer_of_rep = [&](std::size_t c) -> const std::vector<std::size_t>& {
    auto& z = centralizer[c];
    if (z.empty()) {
      std::size_t r = cls.representative_index(c);
      for (std::size_t g = 0; g < n; ++g)
        if (t.multiply(r, g) == t.multiply(g, r)) z.push_back(g);
    }
    return z;
  };
  // Some g with a^g ≤ b. Any such g sends the generator s of a with the
  // smallest class into that class within b, so g ∈ conj_to[s]^-1 C(rep) conj_to[h].
  auto conjugate_into = [&](const ElementSet& a, const ElementSet& b) {
    std::size_t s = a.generators.front();
    for (std::size_t x : a.generators)
      if (cls.size(cls.class_of_index(x)) < cls.size(cls.class_of_index(s))) s = x;
    std::size_t c = cls.class_of_index(s);
    std::size_t a_inv = t.inverse(conj_to[s]);
    const auto& z = centralizer_of_rep(c);
    for (std::size_t h : b.elements) {
      if (cls.class_of_index(h) != c) continue;
      for (std::size_t zc : z) {
        std::size_t g = t.multiply(t.multiply(a_inv, zc), conj_to[h]);
        bool ok = true;
        for (std::size_t x : a.generators)
          if (!b.bits.test(t.conjugate(x, g))) {
            ok = false;
            break;
          }
        if (ok) return true;
      }
    }
    return false;
  };
  auto classify = [&](ElementSet k) {
    std::uint64_t h = k.bits.hash();
    auto& bucket = seen[h];
    for (const auto& [bits, id] : bucket)
      if (bits == k.bits) return;
    auto inv = counts_of(k);
    auto& candidates = by_invariant[inv];
    for (std::size_t r : candidates)
      if (conjugate_into(k, reps[r].set)) {
        bucket.emplace_back(k.bits, r);
        return;
      }
    std::size_t id = reps.size();
    bucket.emplace_back(k.bits, id);
    candidates.push_back(id);
    reps.push_back(Found{std::move(k), std::move(inv), 0});
  };

  classify(trivial_set(t));
  for (std::size_t r = 0; r < reps.size(); ++r) {
    // Normalizer of the representative.
    std::vector<std::size_t> normalizer;
    for (std::size_t g = 0; g < n; ++g) {
      bool ok = true;
      for (std::size_t s : reps[r].set.generators)
        if (!reps[r].set.bits.test(t.conjugate(s, g))) {
          ok = false;
          break;
        }
      if (ok) normalizer.push_back(g);
    }
    reps[r].conjugates = n / normalizer.size();
    std::vector<std::size_t> ngens = greedy_generators(t, normalizer);

    std::vector<bool> done(zuppo_gen.size(), false);
    for (std::size_t z = 0; z < zuppo_gen.size(); ++z) {
      if (done[z]) continue;
      std::vector<std::size_t> orbit{z};
      done[z] = true;
      for (std::size_t k = 0; k < orbit.size(); ++k)
        for (std::size_t s : ngens) {
          std::size_t w = zuppo_of[t.conjugate(zuppo_gen[orbit[k]], s)];
          if (!done[w]) {
            done[w] = true;
            orbit.push_back(w);
          }
        }
      if (reps[r].set.bits.test(zuppo_gen[z])) continue;
      std::size_t extra[] = {zuppo_gen[z]};
      classify(extend(t, reps[r].set, extra));
    }
  }

  std::vector<std::size_t> order(reps.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (reps[a].set.elements.size() != reps[b].set.elements.size())
      return reps[a].set.elements.size() < reps[b].set.elements.size();
    return reps[a].counts < reps[b].counts;
  });

  std::vector<SubgroupClass> out;
  out.reserve(reps.size());
  for (std::size_t i : order) {
    Found& f = reps[i];
    SubgroupClass sc{to_group(t, f.set.generators), f.set.elements.size(), f.conjugates,
                     std::vector<std::uint64_t>(f.counts.begin() + 1, f.counts.end())};
    out.push_back(std::move(sc));
  }
  return out;
}

} // namespace qsi
