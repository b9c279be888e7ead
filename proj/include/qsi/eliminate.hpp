#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsi/lietype.hpp"

namespace qsi {

/// A prime dividing |S| that is a primitive prime divisor of q^d - 1.
struct MissingPrime {
  unsigned d = 0;
  mpz_class prime;
};

struct CandidateOvergroup {
  std::string label;
  /// Upper bound for |M|; zero for candidates handled only by descent.
  mpz_class order_bound;
  /// Primes ℓ ≠ p dividing |S| but not order_bound, each with d = ord_ℓ(q).
  std::vector<MissingPrime> missing;
  /// The exponent d whose primitive prime divisor the argument loses.
  std::optional<unsigned> headline_d;
  bool descent = false;
  std::string note;
};

struct EliminationReport {
  LieFamily family;
  unsigned n = 0;
  mpz_class q;
  mpz_class p;
  std::string group;
  mpz_class simple_order;
  mpz_class steinberg_degree;
  TorusOrder torus;
  std::vector<CandidateOvergroup> candidates;
  /// Exponents d with no primitive prime divisor of q^d - 1 that the argument touches.
  std::vector<unsigned> zsigmondy_exceptions_hit;
  /// Set when orders alone do not settle the group and a direct check is needed.
  bool manual_case = false;
  std::string manual_note;

  /// Every candidate either misses a prime or is handled by descent, and no manual case remains.
  bool eliminated() const;
};

/// Throws UnsupportedCase outside the encoded tables.
EliminationReport eliminate(LieFamily f, unsigned n, const mpz_class& q);

} // namespace qsi
