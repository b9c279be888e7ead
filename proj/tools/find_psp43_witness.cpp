// Searches PSU42 (= PSp4(3)) for a subgroup U of order 160 and a linear
// character φ of U with φ^G = 2·St, St the degree-81 irreducible, and prints
// the fixture data (generator file plus φ on the generators).
#include <iostream>
#include <random>

#include "qsi/catalog.hpp"
#include "qsi/character.hpp"
#include "qsi/subgroups.hpp"

using namespace qsi;

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }

} // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 1;
  std::mt19937_64 rng(seed);
  PermGroup g = load("PSU42");
  auto classes = conjugacy_classes(g);
  CharacterTable table = character_table(classes);
  const Character* st = nullptr;
  for (const auto& chi : table.irreducibles)
    if (chi.degree() == 81) st = &chi;
  if (!st) {
    std::cerr << "no degree-81 character\n";
    return 1;
  }
  const ElementTable& el = classes->elements();

  // A subgroup of order 960 (2^4:A5) from random pairs.
  PermGroup m;
  for (int tries = 0;; ++tries) {
    Permutation x = el.element(pick(rng, el.size())), y = el.element(pick(rng, el.size()));
    PermGroup h = PermGroup::generate(g.degree(), {x, y});
    if (h.order() == 960) {
      m = h;
      std::cerr << "order-960 subgroup after " << tries + 1 << " pairs\n";
      break;
    }
  }
  auto subs = all_subgroups_up_to_conjugacy(m);
  const Character target = *st * Cyclotomic(2);
  for (const auto& sc : subs) {
    if (sc.order != 160) continue;
    auto uc = conjugacy_classes(sc.group);
    auto fusion = class_fusion(*uc, *classes);
    CharacterTable ut = character_table(uc);
    for (std::size_t j = 0; j < ut.size(); ++j) {
      const Character& phi = ut[j];
      if (phi.degree() != 1 || !(induce(phi, classes, fusion) == target)) continue;
      // Two-element generating set for the fixture.
      const ElementTable& ue = uc->elements();
      std::vector<Permutation> gens;
      for (int t = 0; t < 100000 && gens.empty(); ++t) {
        Permutation a = ue.element(pick(rng, ue.size())), b = ue.element(pick(rng, ue.size()));
        if (PermGroup::generate(g.degree(), {a, b}).order() == 160) gens = {a, b};
      }
      if (gens.empty()) gens = sc.group.generators();
      std::cout << format_generator_file(g.degree(), gens, "order-160 subgroup of PSU42 inducing 2*St from a linear character");
      std::cout << "# linear character on generators as (a, m) with value z_m^a:";
      for (const auto& s : gens) {
        std::size_t c = uc->class_of(s);
        std::uint32_t ord = uc->element_order(c);
        for (std::uint32_t a = 0; a < ord; ++a)
          if (phi[c] == Cyclotomic::root_of_unity(ord, a)) std::cout << " [" << a << ", " << ord << "]";
      }
      std::cout << "\n";
      return 0;
    }
  }
  std::cerr << "no witness found in this order-960 subgroup\n";
  return 1;
}
