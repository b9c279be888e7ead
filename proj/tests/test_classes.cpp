#include "doctest.h"
#include "oracles.hpp"
#include "qsi/catalog.hpp"
#include "qsi/classes.hpp"
#include "qsi/errors.hpp"
#include "qsi/subgroups.hpp"

namespace {

std::multiset<std::pair<std::uint64_t, std::uint64_t>> oracle_class_shape(const oracle::Set& g) {
  std::multiset<std::pair<std::uint64_t, std::uint64_t>> shape;
  for (const auto& c : oracle::conjugacy_classes(g)) shape.emplace(oracle::order(*c.begin()), c.size());
  return shape;
}

} // namespace

TEST_CASE("conjugacy classes match orbit enumeration") {
  for (std::string id : {"C6", "S3", "D8", "Q8", "A4", "D12", "S4", "SL23", "A5", "F20", "S5", "PSL27", "A6"}) {
    CAPTURE(id);
    qsi::PermGroup g = qsi::load(id);
    auto cls = qsi::conjugacy_classes(g);
    oracle::Set all = oracle::closure(g.degree(), g.generators());
    auto brute = oracle::conjugacy_classes(all);
    REQUIRE(cls->count() == brute.size());

    std::multiset<std::pair<std::uint64_t, std::uint64_t>> shape;
    for (std::size_t c = 0; c < cls->count(); ++c) shape.emplace(cls->element_order(c), cls->size(c));
    CHECK(shape == oracle_class_shape(all));

    // Each class's member list is exactly one brute-force orbit.
    for (std::size_t c = 0; c < cls->count(); ++c) {
      oracle::Set members;
      for (std::size_t i : cls->members(c)) members.insert(oracle::raw(cls->elements().element(i)));
      CHECK(std::find(brute.begin(), brute.end(), members) != brute.end());
    }
    CHECK(cls->representative(0).is_identity());
    for (std::size_t c = 1; c < cls->count(); ++c) {
      auto key = [&](std::size_t k) { return std::pair(cls->element_order(k), cls->size(k)); };
      CHECK(key(c - 1) <= key(c));
    }
  }
}

TEST_CASE("power maps and inverse classes") {
  auto cls = qsi::conjugacy_classes(qsi::load("PSL27"));
  for (std::size_t c = 0; c < cls->count(); ++c) {
    qsi::Permutation r = cls->representative(c);
    for (std::uint64_t k = 0; k < 10; ++k) CHECK(cls->power_class(c, k) == cls->class_of(r.pow(static_cast<long long>(k))));
    CHECK(cls->inverse_class(c) == cls->class_of(r.inverse()));
  }
}

TEST_CASE("class fusion from a subgroup") {
  qsi::PermGroup s4 = qsi::load("S4");
  qsi::PermGroup a4 = qsi::load("A4");
  auto gc = qsi::conjugacy_classes(s4);
  auto uc = qsi::conjugacy_classes(a4);
  auto f = qsi::class_fusion(*uc, *gc);
  REQUIRE(f.size() == uc->count());
  for (std::size_t c = 0; c < uc->count(); ++c) CHECK(gc->class_of(uc->representative(c)) == f[c]);
  CHECK_THROWS(qsi::class_fusion(*gc, *uc));
}

TEST_CASE("subgroup classes agree with the brute-force lattice") {
  for (std::string id : {"S3", "D8", "Q8", "C6", "A4", "D12", "S4", "SL23", "F20", "A5", "S5", "PSL27", "A6"}) {
    CAPTURE(id);
    qsi::PermGroup g = qsi::load(id);
    auto classes = qsi::all_subgroups_up_to_conjugacy(g);
    oracle::Set all = oracle::closure(g.degree(), g.generators());
    auto brute = oracle::subgroups_mod_conjugacy(all);
    REQUIRE(classes.size() == brute.size());

    std::multiset<std::pair<std::uint64_t, std::uint64_t>> mine, theirs;
    for (const auto& s : classes) mine.emplace(s.order, s.conjugates);
    for (const auto& b : brute) theirs.emplace(b.size(), oracle::conjugate_count(all, b));
    CHECK(mine == theirs);
    CHECK(classes.front().order == 1);
    CHECK(classes.back().order == g.order());
    for (const auto& s : classes) {
      CHECK(s.group.order() == s.order);
      CHECK(s.group.is_subgroup_of(g));
    }
  }
  CHECK_THROWS_AS(qsi::all_subgroups_up_to_conjugacy(qsi::load("A6"), 100), qsi::CapacityError);
}

TEST_CASE("subgroup from element set") {
  qsi::PermGroup g = qsi::load("S4");
  qsi::ElementTable t(g);
  std::vector<std::size_t> evens;
  for (std::size_t i = 0; i < t.size(); ++i) {
    auto p = t.element(i);
    std::size_t moved = 0;
    for (std::size_t k = 0; k < 4; ++k) moved += p[k] != k;
    if (p.order() != 2 && p.order() != 4) evens.push_back(i);
    else if (p.order() == 2 && moved == 4) evens.push_back(i);
  }
  CHECK(qsi::subgroup_from_element_set(t, evens).order() == 12);
  std::vector<std::size_t> bad{0, 1};
  if (t.order(1) != 2) CHECK_THROWS_AS(qsi::subgroup_from_element_set(t, bad), qsi::IntegrityError);
}
