#include "qsi/numtheory.hpp"

#include <algorithm>
#include <map>

#include "qsi/errors.hpp"

namespace qsi {

bool is_probable_prime(const mpz_class& n) { return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) > 0; }

namespace {

// Brent's variant, gcds batched over 128 steps.
mpz_class pollard_rho(const mpz_class& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  mpz_srcptr N = n.get_mpz_t();
  mpz_class y, x, ys, q, g, t;
  for (unsigned long c = 1;; ++c) {
    auto step = [&](mpz_class& v) {
      mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
      mpz_add_ui(v.get_mpz_t(), v.get_mpz_t(), c);
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), N);
    };
    y = 2;
    q = 1;
    g = 1;
    constexpr unsigned long batch = 128;
    for (unsigned long r = 1; g == 1; r *= 2) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      for (unsigned long k = 0; k < r && g == 1; k += batch) {
        ys = y;
        for (unsigned long i = 0; i < std::min(batch, r - k); ++i) {
          step(y);
          t = x - y;
          mpz_mul(q.get_mpz_t(), q.get_mpz_t(), t.get_mpz_t());
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), N);
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), N);
      }
    }
    if (g == n) {
      // The batch overshot; redo it one step at a time.
      do {
        step(ys);
        t = x - ys;
        mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), N);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul, 11ul, 13ul, 17ul, 19ul, 23ul, 29ul, 31ul, 37ul}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  std::vector<mpz_class> stack{n};
  while (!stack.empty()) {
    mpz_class m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (is_probable_prime(m)) {
      ++out[m];
      continue;
    }
    mpz_class f = pollard_rho(m);
    stack.push_back(f);
    stack.push_back(m / f);
  }
}

} // namespace

std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n) {
  if (n < 1) throw DomainError("factorization of a non-positive integer");
  std::map<mpz_class, unsigned> m;
  factor_into(n, m);
  return {m.begin(), m.end()};
}

std::vector<mpz_class> prime_divisors(const mpz_class& n) {
  std::vector<mpz_class> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

mpz_class p_part(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw DomainError("p-part of zero");
  mpz_class r = 1, m = abs(n);
  while (m % p == 0) {
    m /= p;
    r *= p;
  }
  return r;
}

unsigned multiplicative_order(const mpz_class& q, const mpz_class& l) {
  mpz_class qm = q % l;
  if (qm == 0) throw DomainError("multiplicative order of a non-unit");
  mpz_class order = l - 1;
  for (auto& [p, e] : factorize(order)) {
    for (unsigned i = 0; i < e; ++i) {
      mpz_class cand = order / p, r;
      mpz_powm(r.get_mpz_t(), qm.get_mpz_t(), cand.get_mpz_t(), l.get_mpz_t());
      if (r != 1) break;
      order = cand;
    }
  }
  return static_cast<unsigned>(order.get_ui());
}

mpz_class cyclotomic_value(unsigned n, const mpz_class& d) {
  if (n == 0) throw DomainError("cyclotomic polynomial of index 0");
  // Φ_n(d) = Π_{k | n} (d^k - 1)^μ(n/k)
  auto mobius = [](unsigned m) {
    int s = 1;
    for (unsigned p = 2; p * p <= m; ++p) {
      if (m % p) continue;
      m /= p;
      if (m % p == 0) return 0;
      s = -s;
    }
    return m > 1 ? -s : s;
  };
  mpz_class num = 1, den = 1;
  for (unsigned k = 1; k <= n; ++k) {
    if (n % k) continue;
    int mu = mobius(n / k);
    if (mu == 0) continue;
    mpz_class t;
    mpz_pow_ui(t.get_mpz_t(), d.get_mpz_t(), k);
    t -= 1;
    if (t == 0) throw DomainError("cyclotomic value at 1 is not defined by this product");
    (mu > 0 ? num : den) *= t;
  }
  return num / den;
}

std::vector<mpz_class> primitive_prime_divisors(const mpz_class& d, unsigned n) {
  if (d < 2 || n < 2) throw DomainError("primitive prime divisors need d, n ≥ 2");
  mpz_class r = cyclotomic_value(n, d);
  for (unsigned m = n, p = 2; m > 1; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    while (r % p == 0) r /= p;
  }
  return prime_divisors(r);
}

std::optional<mpz_class> zsigmondy(const mpz_class& d, unsigned n) {
  if (d < 2 || n < 2) throw DomainError("zsigmondy needs d, n ≥ 2");
  mpz_class r = cyclotomic_value(n, d);
  for (unsigned m = n, p = 2; m > 1; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    while (r % p == 0) r /= p;
  }
  if (r == 1) return std::nullopt;
  // Every primitive prime divisor is 1 mod n; try small ones directly.
  for (unsigned long k = 1; k <= 100000; ++k) {
    mpz_class c = mpz_class(k) * n + 1;
    if (c * c > r) break;
    if (r % c == 0 && is_probable_prime(c)) return c;
  }
  return prime_divisors(r).front();
}

bool is_zsigmondy_exception(const mpz_class& d, unsigned n) {
  if (d < 2 || n < 2) throw DomainError("zsigmondy needs d, n ≥ 2");
  if (d == 2 && n == 6) return true;
  if (n != 2) return false;
  mpz_class m = d + 1;
  return (m & (m - 1)) == 0;
}

PpdProperties ppd_properties(const mpz_class& d, unsigned n, const mpz_class& p) {
  if (d < 2 || n < 2) throw DomainError("ppd properties need d, n ≥ 2");
  if (!is_probable_prime(p) || d % p == 0 || multiplicative_order(d, p) != n)
    throw DomainError(p.get_str() + " is not a primitive prime divisor of " + d.get_str() + "^" + std::to_string(n) + "-1");
  PpdProperties r;
  r.congruence_ok = p % n == 1;
  r.divisibility_rule = [d, n, p](unsigned m) {
    if (m == 0) return true;
    mpz_class e(m), v;
    mpz_powm(v.get_mpz_t(), d.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    return v != 1 || m % n == 0;
  };
  return r;
}

} // namespace qsi
