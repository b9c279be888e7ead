#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "qsi/catalog.hpp"
#include "qsi/element_table.hpp"
#include "qsi/errors.hpp"
#include "qsi/permgroup.hpp"

using qsi::Permutation;
using qsi::PermGroup;

namespace {

Permutation random_perm(std::mt19937& rng, std::size_t n) {
  std::vector<qsi::Point> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<qsi::Point>(i);
  std::shuffle(v.begin(), v.end(), rng);
  return Permutation(v);
}

} // namespace

TEST_CASE("permutation arithmetic agrees with the raw-vector oracle") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 1 + rng() % 12;
    Permutation a = random_perm(rng, n), b = random_perm(rng, n);
    CHECK(oracle::raw(a * b) == oracle::mul(oracle::raw(a), oracle::raw(b)));
    CHECK(oracle::raw(a.inverse()) == oracle::inv(oracle::raw(a)));
    CHECK(a.order() == oracle::order(oracle::raw(a)));
    CHECK(oracle::raw(qsi::conjugate(a, b)) ==
          oracle::mul(oracle::mul(oracle::inv(oracle::raw(b)), oracle::raw(a)), oracle::raw(b)));
    long long e = static_cast<long long>(rng() % 20) - 10;
    Permutation expect(n);
    for (long long k = 0; k < (e < 0 ? -e : e); ++k) expect = expect * (e < 0 ? a.inverse() : a);
    CHECK(a.pow(e) == expect);
  }
}

TEST_CASE("cycle notation round-trips and is 1-based") {
  Permutation p = Permutation::from_cycles("(1,2,3)(4,5)", 6);
  CHECK(p[0] == 1);
  CHECK(p[2] == 0);
  CHECK(p[5] == 5);
  CHECK(p.to_cycle_string() == "(1,2,3)(4,5)");
  CHECK(Permutation::from_cycles(p.to_cycle_string(), 6) == p);
  CHECK(Permutation(4).to_cycle_string() == "()");
  CHECK_THROWS_AS(Permutation::from_cycles("(1,2,2)", 3), qsi::MalformedInput);
  CHECK_THROWS_AS(Permutation::from_cycles("(1,4)", 3), qsi::MalformedInput);
  CHECK_THROWS_AS(Permutation::from_cycles("(1,x)", 3), qsi::MalformedInput);
  CHECK_THROWS_AS(Permutation(std::vector<qsi::Point>{0, 0, 1}), qsi::MalformedInput);
}

TEST_CASE("Schreier-Sims orders match breadth-first closure") {
  for (const auto& e : qsi::builtin_entries()) {
    if (e.expected_order > 30000) continue;
    CAPTURE(e.id);
    PermGroup g = qsi::build_group(e);
    oracle::Set all = oracle::closure(g.degree(), g.generators());
    CHECK(g.order() == all.size());
    CHECK(g.order() == e.expected_order);
  }
}

TEST_CASE("membership agrees with closure on random permutations") {
  std::mt19937 rng(11);
  for (std::string id : {"S4", "A5", "PSL27", "D12", "F20"}) {
    PermGroup g = qsi::load(id);
    oracle::Set all = oracle::closure(g.degree(), g.generators());
    for (int k = 0; k < 300; ++k) {
      Permutation p = random_perm(rng, g.degree());
      CHECK(g.contains(p) == (all.count(oracle::raw(p)) > 0));
    }
    for (const auto& x : all) CHECK(g.contains(Permutation(x)));
  }
}

TEST_CASE("solvability and derived subgroups match element-set oracle") {
  for (std::string id : {"S3", "D8", "Q8", "A4", "S4", "SL23", "A5", "F20", "S5", "PSL27"}) {
    CAPTURE(id);
    PermGroup g = qsi::load(id);
    oracle::Set all = oracle::closure(g.degree(), g.generators());
    CHECK(qsi::is_solvable(g) == oracle::solvable(all));
    CHECK(qsi::derived_subgroup(g).order() == oracle::derived(all).size());
  }
}

TEST_CASE("quotients by normal subgroups") {
  PermGroup s4 = qsi::load("S4");
  PermGroup v4 = PermGroup::generate(4, {Permutation::from_cycles("(1,2)(3,4)", 4), Permutation::from_cycles("(1,3)(2,4)", 4)});
  CHECK(qsi::is_normal_in(v4, s4));
  PermGroup q = qsi::quotient(s4, v4);
  CHECK(q.order() == 6);
  CHECK(!qsi::is_abelian(q));
  PermGroup c3 = PermGroup::generate(4, {Permutation::from_cycles("(1,2,3)", 4)});
  CHECK(!qsi::is_normal_in(c3, s4));
  CHECK_THROWS_AS(qsi::quotient(s4, c3), qsi::DomainError);
}

TEST_CASE("element table indexes every element once") {
  PermGroup g = qsi::load("SL23");
  qsi::ElementTable t(g);
  oracle::Set all = oracle::closure(g.degree(), g.generators());
  REQUIRE(t.size() == all.size());
  oracle::Set listed;
  for (std::size_t i = 0; i < t.size(); ++i) listed.insert(oracle::raw(t.element(i)));
  CHECK(listed == all);
  CHECK(t.element(0).is_identity());
  for (std::size_t a = 0; a < t.size(); a += 3)
    for (std::size_t b = 0; b < t.size(); b += 5) {
      CHECK(t.element(t.multiply(a, b)) == t.element(a) * t.element(b));
      CHECK(t.order(a) == t.element(a).order());
    }
  CHECK_THROWS_AS(qsi::ElementTable(qsi::load("A9"), 1000), qsi::CapacityError);
}

TEST_CASE("element orders present") {
  CHECK(qsi::element_orders_present(qsi::load("A5")) == std::vector<std::uint64_t>{1, 2, 3, 5});
  CHECK(qsi::element_orders_present(qsi::load("M11")) == std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 8, 11});
}
