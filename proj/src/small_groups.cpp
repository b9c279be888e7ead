#include "qsi/small_groups.hpp"

#include <algorithm>
#include <map>

#include "qsi/errors.hpp"

namespace qsi {

namespace {

using Elem = std::uint8_t;

struct Cayley {
  unsigned n = 1;
  std::vector<Elem> mul{0};

  Elem operator()(Elem a, Elem b) const { return mul[a * n + b]; }
  Elem inverse(Elem a) const {
    for (Elem b = 0; b < n; ++b)
      if ((*this)(a, b) == 0) return b;
    throw IntegrityError("element without inverse in a Cayley table");
  }
  unsigned order(Elem a) const {
    unsigned k = 1;
    for (Elem x = a; x != 0; x = (*this)(x, a)) ++k;
    return k;
  }
};

std::vector<Elem> greedy_generators(const Cayley& g) {
  std::vector<Elem> gens;
  std::vector<bool> in(g.n, false);
  in[0] = true;
  std::size_t covered = 1;
  for (Elem c = 1; c < g.n && covered < g.n; ++c) {
    if (in[c]) continue;
    gens.push_back(c);
    std::vector<Elem> members{0};
    std::fill(in.begin(), in.end(), false);
    in[0] = true;
    for (std::size_t k = 0; k < members.size(); ++k)
      for (Elem s : gens) {
        Elem y = g(members[k], s);
        if (!in[y]) in[y] = true, members.push_back(y);
      }
    covered = members.size();
  }
  return gens;
}

/// Extends gens[i] -> images[i] to a map; empty when that is not an isomorphism onto h.
std::vector<Elem> extend_map(const Cayley& g, const Cayley& h, const std::vector<Elem>& gens,
                             const std::vector<Elem>& images) {
  std::vector<int> f(g.n, -1);
  f[0] = 0;
  std::vector<Elem> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    Elem x = queue[k];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Elem y = g(x, gens[i]);
      Elem fy = h(static_cast<Elem>(f[x]), images[i]);
      if (f[y] < 0) {
        f[y] = fy;
        queue.push_back(y);
      } else if (f[y] != fy) {
        return {};
      }
    }
  }
  std::vector<bool> hit(h.n, false);
  std::vector<Elem> out(g.n);
  for (unsigned x = 0; x < g.n; ++x) {
    if (f[x] < 0 || hit[f[x]]) return {};
    hit[f[x]] = true;
    out[x] = static_cast<Elem>(f[x]);
  }
  return out;
}

/// Per-element invariant: (order, centralizer size, number of square roots).
std::vector<std::uint32_t> element_invariants(const Cayley& g) {
  std::vector<std::uint32_t> inv(g.n);
  std::vector<unsigned> roots(g.n, 0);
  for (Elem a = 0; a < g.n; ++a) ++roots[g(a, a)];
  for (Elem a = 0; a < g.n; ++a) {
    unsigned c = 0;
    for (Elem b = 0; b < g.n; ++b)
      if (g(a, b) == g(b, a)) ++c;
    inv[a] = (g.order(a) << 16) | (c << 8) | roots[a];
  }
  return inv;
}

struct Candidate {
  Cayley table;
  std::vector<std::uint32_t> inv;
  std::vector<std::uint32_t> signature;
};

Candidate make_candidate(Cayley t) {
  Candidate c{std::move(t), {}, {}};
  c.inv = element_invariants(c.table);
  c.signature = c.inv;
  std::sort(c.signature.begin(), c.signature.end());
  return c;
}

bool isomorphic(const Candidate& a, const Candidate& b) {
  if (a.signature != b.signature) return false;
  const auto gens = greedy_generators(a.table);
  std::vector<std::vector<Elem>> options(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem y = 0; y < b.table.n; ++y)
      if (b.inv[y] == a.inv[gens[i]]) options[i].push_back(y);
  std::vector<Elem> images(gens.size());
  std::vector<std::size_t> pos(gens.size(), 0);
  if (std::any_of(options.begin(), options.end(), [](auto& o) { return o.empty(); })) return false;
  for (;;) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = options[i][pos[i]];
    if (!extend_map(a.table, b.table, gens, images).empty()) return true;
    std::size_t i = 0;
    while (i < gens.size() && ++pos[i] == options[i].size()) pos[i++] = 0;
    if (i == gens.size()) return false;
  }
}

std::vector<std::vector<Elem>> automorphisms(const Cayley& g) {
  const auto gens = greedy_generators(g);
  const auto inv = element_invariants(g);
  std::vector<std::vector<Elem>> out;
  std::vector<std::vector<Elem>> options(gens.size());
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (Elem y = 0; y < g.n; ++y)
      if (inv[y] == inv[gens[i]]) options[i].push_back(y);
  if (gens.empty()) return {std::vector<Elem>(g.n, 0)};
  std::vector<std::size_t> pos(gens.size(), 0);
  std::vector<Elem> images(gens.size());
  for (;;) {
    for (std::size_t i = 0; i < gens.size(); ++i) images[i] = options[i][pos[i]];
    auto f = extend_map(g, g, gens, images);
    if (!f.empty()) out.push_back(std::move(f));
    std::size_t i = 0;
    while (i < gens.size() && ++pos[i] == options[i].size()) pos[i++] = 0;
    if (i == gens.size()) break;
  }
  return out;
}

std::vector<Cayley> extensions(const Cayley& nt, unsigned p) {
  const unsigned m = nt.n;
  std::vector<Cayley> out;
  for (const auto& alpha : automorphisms(nt)) {
    // alpha^j for j < p, and alpha^p
    std::vector<std::vector<Elem>> powers{std::vector<Elem>(m)};
    for (Elem x = 0; x < m; ++x) powers[0][x] = x;
    for (unsigned j = 1; j <= p; ++j) {
      std::vector<Elem> next(m);
      for (Elem x = 0; x < m; ++x) next[x] = alpha[powers[j - 1][x]];
      powers.push_back(std::move(next));
    }
    for (Elem z = 0; z < m; ++z) {
      if (alpha[z] != z) continue;
      const Elem zi = nt.inverse(z);
      bool ok = true;
      for (Elem x = 0; x < m && ok; ++x) ok = powers[p][x] == nt(nt(zi, x), z);
      if (!ok) continue;
      Cayley g;
      g.n = m * p;
      g.mul.assign(g.n * g.n, 0);
      for (unsigned i = 0; i < p; ++i)
        for (Elem a = 0; a < m; ++a)
          for (unsigned j = 0; j < p; ++j)
            for (Elem b = 0; b < m; ++b) {
              Elem c = nt(powers[j][a], b);
              unsigned k = i + j;
              if (k >= p) {
                k -= p;
                c = nt(z, c);
              }
              g.mul[(i * m + a) * g.n + (j * m + b)] = static_cast<Elem>(k * m + c);
            }
      out.push_back(std::move(g));
    }
  }
  return out;
}

bool is_prime(unsigned p) {
  if (p < 2) return false;
  for (unsigned d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

PermGroup regular_representation(const Cayley& g) {
  std::vector<Permutation> gens;
  for (Elem s : greedy_generators(g)) {
    std::vector<Point> img(g.n);
    for (Elem x = 0; x < g.n; ++x) img[x] = g(x, s);
    gens.emplace_back(std::move(img));
  }
  return PermGroup::generate(g.n, std::move(gens));
}

} // namespace

std::vector<SmallGroup> all_small_groups(unsigned max_order) {
  if (max_order < 1 || max_order > 31) throw DomainError("small groups are available for orders 1..31");
  std::map<unsigned, std::vector<Candidate>> by_order;
  by_order[1].push_back(make_candidate(Cayley{}));
  for (unsigned n = 2; n <= max_order; ++n) {
    auto& found = by_order[n];
    for (unsigned p = 2; p <= n; ++p) {
      if (n % p || !is_prime(p)) continue;
      for (const Candidate& base : by_order[n / p]) {
        for (Cayley& t : extensions(base.table, p)) {
          Candidate c = make_candidate(std::move(t));
          bool seen = std::any_of(found.begin(), found.end(), [&](const Candidate& f) { return isomorphic(c, f); });
          if (!seen) found.push_back(std::move(c));
        }
      }
    }
  }
  std::vector<SmallGroup> out;
  for (auto& [n, list] : by_order) {
    for (std::size_t k = 0; k < list.size(); ++k) {
      SmallGroup s{"G" + std::to_string(n) + "_" + std::to_string(k + 1), n, regular_representation(list[k].table)};
      if (s.group.order() != n) throw IntegrityError("regular representation has the wrong order");
      out.push_back(std::move(s));
    }
  }
  return out;
}

} // namespace qsi
