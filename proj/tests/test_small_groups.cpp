#include "doctest.h"
#include "oracles.hpp"
#include "qsi/small_groups.hpp"

namespace {

/// Isomorphism invariant: sorted multiset of (element order, centralizer size).
std::multiset<std::pair<std::uint64_t, std::size_t>> signature(const oracle::Set& g) {
  std::multiset<std::pair<std::uint64_t, std::size_t>> s;
  for (const auto& x : g) {
    std::size_t c = 0;
    for (const auto& y : g) c += oracle::mul(x, y) == oracle::mul(y, x);
    s.emplace(oracle::order(x), c);
  }
  return s;
}

bool abelian(const oracle::Set& g) {
  for (const auto& x : g)
    for (const auto& y : g)
      if (oracle::mul(x, y) != oracle::mul(y, x)) return false;
  return true;
}

} // namespace

TEST_CASE("small groups are regular representations of the stated order") {
  auto groups = qsi::all_small_groups(31);
  std::map<std::uint64_t, int> count;
  for (const auto& s : groups) {
    CAPTURE(s.id);
    ++count[s.order];
    CHECK(s.group.order() == s.order);
    CHECK(s.group.degree() == s.order);
    CHECK(s.id == "G" + std::to_string(s.order) + "_" + std::to_string(count[s.order]));
  }
  // Abelian groups of order n: product over p^e || n of the partition numbers p(e).
  auto partitions = [](unsigned e) { return std::vector<int>{1, 1, 2, 3, 5, 7}[e]; };
  for (unsigned n = 1; n <= 31; ++n) {
    int expected = 1;
    unsigned m = n;
    for (unsigned p = 2; p <= m; ++p) {
      unsigned e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      expected *= partitions(e);
    }
    int found = 0;
    for (const auto& s : groups)
      if (s.order == n && abelian(oracle::closure(s.group.degree(), s.group.generators()))) ++found;
    CHECK_MESSAGE(found == expected, "order " << n);
  }
}

TEST_CASE("small groups of equal order are pairwise non-isomorphic where invariants separate them") {
  auto groups = qsi::all_small_groups(24);
  std::map<std::uint64_t, std::vector<std::multiset<std::pair<std::uint64_t, std::size_t>>>> sigs;
  for (const auto& s : groups) sigs[s.order].push_back(signature(oracle::closure(s.group.degree(), s.group.generators())));
  // Orders 1..15 and 17..23 are fully separated by this invariant.
  for (auto& [n, v] : sigs) {
    if (n == 16 || n == 24) continue;
    std::set<std::multiset<std::pair<std::uint64_t, std::size_t>>> distinct(v.begin(), v.end());
    CHECK_MESSAGE(distinct.size() == v.size(), "order " << n);
  }
}

TEST_CASE("group counts for prime and squarefree orders") {
  auto groups = qsi::all_small_groups(31);
  std::map<std::uint64_t, int> count;
  for (const auto& s : groups) ++count[s.order];
  for (unsigned p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u}) CHECK(count[p] == 1);
  for (unsigned p : {2u, 3u, 5u}) CHECK(count[p * p] == 2);
  // pq with q ≡ 1 mod p has two groups, otherwise one.
  CHECK(count[6] == 2);
  CHECK(count[10] == 2);
  CHECK(count[15] == 1);
  CHECK(count[21] == 2);
  CHECK(count[22] == 2);
}
