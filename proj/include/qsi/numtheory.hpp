#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace qsi {

bool is_probable_prime(const mpz_class& n);

/// Prime factorization in increasing order of primes.
std::vector<std::pair<mpz_class, unsigned>> factorize(const mpz_class& n);
std::vector<mpz_class> prime_divisors(const mpz_class& n);

/// Largest power of p dividing n.
mpz_class p_part(const mpz_class& n, const mpz_class& p);

/// Smallest k ≥ 1 with q^k ≡ 1 (mod l); l prime not dividing q.
unsigned multiplicative_order(const mpz_class& q, const mpz_class& l);

/// n-th cyclotomic polynomial evaluated at d.
mpz_class cyclotomic_value(unsigned n, const mpz_class& d);

/// Smallest primitive prime divisor of d^n - 1, or none.
/// Throws DomainError unless d, n ≥ 2.
std::optional<mpz_class> zsigmondy(const mpz_class& d, unsigned n);

/// All primitive prime divisors of d^n - 1.
std::vector<mpz_class> primitive_prime_divisors(const mpz_class& d, unsigned n);

/// The cases with no primitive prime divisor: (2,6), and n = 2 with d + 1 a power of 2.
bool is_zsigmondy_exception(const mpz_class& d, unsigned n);

struct PpdProperties {
  bool congruence_ok = false;
  /// For m ≥ 1: p | d^m - 1 implies n | m.
  std::function<bool(unsigned)> divisibility_rule;
};

/// Throws DomainError if p is not a primitive prime divisor of d^n - 1.
PpdProperties ppd_properties(const mpz_class& d, unsigned n, const mpz_class& p);

} // namespace qsi
