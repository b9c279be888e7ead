#include "qsi/modular.hpp"

#include "qsi/errors.hpp"

namespace qsi::modp {

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw DomainError("inverse of zero modulo p");
  return pow(a, p - 2, p);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % d == 0) return n == d;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t primitive_root(std::uint64_t p) {
  std::vector<std::uint64_t> factors;
  std::uint64_t m = p - 1;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    factors.push_back(d);
    while (m % d == 0) m /= d;
  }
  if (m > 1) factors.push_back(m);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool ok = true;
    for (std::uint64_t f : factors)
      if (pow(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  return 1;
}

std::uint64_t prime_one_mod(std::uint64_t m, std::uint64_t lower) {
  std::uint64_t p = (lower / m + 1) * m + 1;
  while (!is_prime(p)) p += m;
  return p;
}

std::vector<std::uint64_t> charpoly(const Matrix& a, std::uint64_t p) {
  // Faddeev-LeVerrier; valid since p exceeds the matrix size.
  const std::size_t n = a.size();
  std::vector<std::uint64_t> c(n + 1, 0);
  c[n] = 1;
  Matrix m(n, std::vector<std::uint64_t>(n, 0));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    Matrix next(n, std::vector<std::uint64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        if (a[i][l] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) next[i][j] = (next[i][j] + mul(a[i][l], m[l][j], p)) % p;
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] = (next[i][i] + c[n - k + 1]) % p;
    m = std::move(next);
    std::uint64_t tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr = (tr + mul(a[i][l], m[l][i], p)) % p;
    c[n - k] = (p - mul(tr, inv(k % p, p), p)) % p;
  }
  return c;
}

std::vector<std::size_t> rref(Matrix& rows, std::uint64_t p) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    std::uint64_t s = inv(rows[r][c], p);
    for (auto& x : rows[r]) x = mul(x, s, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      std::uint64_t f = rows[i][c];
      for (std::size_t j = 0; j < cols; ++j) rows[i][j] = (rows[i][j] + p - mul(f, rows[r][j], p)) % p;
    }
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  return pivots;
}

Matrix nullspace(Matrix a, std::uint64_t p) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  auto pivots = rref(a, p);
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivots) is_pivot[c] = true;
  Matrix basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<std::uint64_t> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = (p - a[r][f]) % p;
    basis.push_back(std::move(v));
  }
  return basis;
}

} // namespace qsi::modp
