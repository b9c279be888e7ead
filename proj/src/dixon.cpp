#include <algorithm>
#include <cmath>

#include "qsi/character.hpp"
#include "qsi/errors.hpp"
#include "qsi/modular.hpp"

namespace qsi {

namespace {

using modp::Matrix;

struct Splitter {
  const ConjugacyClassSet& cls;
  std::uint64_t p;
  std::vector<Matrix> matrices;
  std::vector<bool> built;

  Splitter(const ConjugacyClassSet& c, std::uint64_t prime)
      : cls(c), p(prime), matrices(c.count()), built(c.count(), false) {}

  // (M_j)[l][k] = #{x in C_j : x^-1 g_k in C_l}; central characters are right eigenvectors.
  const Matrix& class_matrix(std::size_t j) {
    if (built[j]) return matrices[j];
    const std::size_t r = cls.count();
    const ElementTable& t = cls.elements();
    Matrix m(r, std::vector<std::uint64_t>(r, 0));
    for (std::size_t k = 0; k < r; ++k) {
      std::size_t g = cls.representative_index(k);
      for (std::size_t x : cls.members(j)) ++m[cls.class_of_index(t.multiply(t.inverse(x), g))][k];
    }
    matrices[j] = std::move(m);
    built[j] = true;
    return matrices[j];
  }

  // Split an invariant subspace (RREF basis with pivots) by the eigenspaces of M_j.
  std::vector<Matrix> split(const Matrix& basis, const std::vector<std::size_t>& pivots, std::size_t j) {
    const Matrix& m = class_matrix(j);
    const std::size_t d = basis.size(), r = cls.count();
    Matrix a(d, std::vector<std::uint64_t>(d, 0));
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t i = 0; i < d; ++i) {
        std::uint64_t s = 0;
        const auto& row = m[pivots[i]];
        for (std::size_t k = 0; k < r; ++k)
          if (row[k] && basis[b][k]) s = (s + modp::mul(row[k] % p, basis[b][k], p)) % p;
        a[i][b] = s;
      }
    }
    auto poly = modp::charpoly(a, p);
    std::vector<std::uint64_t> roots;
    for (std::uint64_t x = 0; x < p && roots.size() < d; ++x) {
      std::uint64_t v = 0;
      for (std::size_t i = poly.size(); i-- > 0;) v = (modp::mul(v, x, p) + poly[i]) % p;
      if (v == 0) roots.push_back(x);
    }
    if (roots.size() <= 1) return {};
    std::vector<Matrix> parts;
    std::size_t total = 0;
    for (std::uint64_t lambda : roots) {
      Matrix shifted = a;
      for (std::size_t i = 0; i < d; ++i) shifted[i][i] = (shifted[i][i] + p - lambda) % p;
      Matrix null = modp::nullspace(std::move(shifted), p);
      Matrix part;
      for (const auto& coords : null) {
        std::vector<std::uint64_t> v(r, 0);
        for (std::size_t b = 0; b < d; ++b) {
          if (!coords[b]) continue;
          for (std::size_t k = 0; k < r; ++k) v[k] = (v[k] + modp::mul(coords[b], basis[b][k], p)) % p;
        }
        part.push_back(std::move(v));
      }
      total += part.size();
      parts.push_back(std::move(part));
    }
    if (total != d) throw IntegrityError("class matrix is not diagonalizable over the chosen prime");
    return parts;
  }
};

std::uint64_t isqrt(std::uint64_t n) {
  auto s = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(n)));
  while (s * s > n) --s;
  while ((s + 1) * (s + 1) <= n) ++s;
  return s;
}

} // namespace

CharacterTable character_table(ClassesPtr classes) {
  const ConjugacyClassSet& cls = *classes;
  const std::size_t r = cls.count();
  const std::uint64_t order = cls.group_order();
  const std::uint64_t e = cls.exponent();
  const std::uint64_t p = modp::prime_one_mod(e, std::max<std::uint64_t>(2 * isqrt(order) + 2, r + 1));
  Splitter sp(cls, p);

  std::vector<std::pair<Matrix, std::vector<std::size_t>>> work;
  {
    Matrix id(r, std::vector<std::uint64_t>(r, 0));
    std::vector<std::size_t> piv(r);
    for (std::size_t i = 0; i < r; ++i) id[i][i] = 1, piv[i] = i;
    work.emplace_back(std::move(id), std::move(piv));
  }
  std::vector<std::vector<std::uint64_t>> central;
  std::vector<std::size_t> next_class(1, 1);
  while (!work.empty()) {
    auto [basis, pivots] = std::move(work.back());
    work.pop_back();
    std::size_t j = next_class.back();
    next_class.pop_back();
    if (basis.size() == 1) {
      central.push_back(basis[0]);
      continue;
    }
    std::vector<Matrix> parts;
    for (; j < r && parts.empty(); ++j) parts = sp.split(basis, pivots, j);
    if (parts.empty()) throw IntegrityError("class matrices failed to separate the central characters");
    for (auto& part : parts) {
      auto piv = modp::rref(part, p);
      work.emplace_back(std::move(part), std::move(piv));
      next_class.push_back(j);
    }
  }
  if (central.size() != r) throw IntegrityError("number of central characters differs from class count");

  const std::uint64_t z = modp::primitive_root(p);
  std::vector<Character> irr;
  irr.reserve(r);
  mpz_class degree_sq_sum = 0;
  for (auto w : central) {
    const std::uint64_t w0inv = modp::inv(w[0], p);
    for (auto& x : w) x = modp::mul(x, w0inv, p);
    std::uint64_t s = 0;
    for (std::size_t k = 0; k < r; ++k) {
      std::uint64_t term = modp::mul(w[k], w[cls.inverse_class(k)], p);
      s = (s + modp::mul(term, modp::inv(cls.size(k) % p, p), p)) % p;
    }
    const std::uint64_t d2 = modp::mul(order % p, modp::inv(s, p), p);
    std::uint64_t d = 0;
    for (std::uint64_t c = 1, lim = isqrt(order); c <= lim; ++c)
      if (modp::mul(c, c, p) == d2) { d = c; break; }
    if (d == 0) throw IntegrityError("no admissible degree for a central character");
    std::vector<std::uint64_t> modval(r);
    for (std::size_t k = 0; k < r; ++k)
      modval[k] = modp::mul(modp::mul(d, w[k], p), modp::inv(cls.size(k) % p, p), p);

    std::vector<Cyclotomic> values;
    values.reserve(r);
    for (std::size_t k = 0; k < r; ++k) {
      const std::uint32_t o = cls.element_order(k);
      if (o == 1) {
        values.emplace_back(static_cast<long>(d));
        continue;
      }
      const std::uint64_t eps = modp::pow(z, (p - 1) / o, p);
      const std::uint64_t oinv = modp::inv(o, p);
      std::vector<long> mult(o);
      for (std::uint32_t l = 0; l < o; ++l) {
        std::uint64_t s2 = 0;
        const std::uint64_t step = modp::pow(modp::inv(eps, p), l, p);
        std::uint64_t f = 1;
        for (std::uint32_t t = 0; t < o; ++t) {
          s2 = (s2 + modp::mul(modval[cls.power_class(k, t)], f, p)) % p;
          f = modp::mul(f, step, p);
        }
        std::uint64_t m = modp::mul(s2, oinv, p);
        if (m > d) throw IntegrityError("eigenvalue multiplicity out of range while lifting character values");
        mult[l] = static_cast<long>(m);
      }
      values.push_back(Cyclotomic::from_root_sum(o, mult));
    }
    degree_sq_sum += mpz_class(static_cast<unsigned long>(d)) * d;
    irr.emplace_back(classes, std::move(values));
  }
  if (degree_sq_sum != mpz_class(static_cast<unsigned long>(order)))
    throw IntegrityError("sum of squared degrees differs from the group order");

  std::sort(irr.begin(), irr.end(), [](const Character& a, const Character& b) {
    auto da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    return std::lexicographical_compare_three_way(a.values().begin(), a.values().end(), b.values().begin(),
                                                  b.values().end()) < 0;
  });
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t k = i; k < r; ++k) {
      Cyclotomic ip = inner_product(irr[i], irr[k]);
      if (ip != Cyclotomic(i == k ? 1 : 0)) throw IntegrityError("character table fails orthogonality");
    }
  }
  return CharacterTable{std::move(classes), std::move(irr)};
}

CharacterTable character_table(const PermGroup& g, std::uint64_t element_bound) {
  return character_table(conjugacy_classes(g, element_bound));
}

} // namespace qsi
