#pragma once

#include <compare>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace qsi {

/// An element of a cyclotomic field Q(ζ_N) with exact rational coefficients.
///
/// Values are always stored at their minimal conductor N (never ≡ 2 mod 4,
/// except N = 1) in the power basis 1, ζ_N, ..., ζ_N^{φ(N)-1} of Q(ζ_N),
/// i.e. reduced modulo the N-th cyclotomic polynomial. Equal numbers therefore
/// have identical representations and `==` is structural.
class Cyclotomic {
public:
  Cyclotomic();
  Cyclotomic(long value);
  Cyclotomic(const mpq_class& value);

  /// ζ_n^k.
  static Cyclotomic root_of_unity(std::uint32_t n, std::int64_t k);
  /// Σ_k coeffs[k] ζ_n^k; `coeffs` may have any length (exponents taken mod n).
  static Cyclotomic from_root_sum(std::uint32_t n, std::span<const mpq_class> coeffs);
  /// Σ_k coeffs[k] ζ_n^k with integer coefficients.
  static Cyclotomic from_root_sum(std::uint32_t n, std::span<const long> coeffs);
  /// Builds from power-basis coordinates at conductor n (length φ(n)).
  static Cyclotomic from_power_basis(std::uint32_t n, std::vector<mpq_class> coords);

  std::uint32_t conductor() const noexcept { return conductor_; }
  /// Power-basis coordinates at the conductor; length φ(conductor).
  const std::vector<mpq_class>& coefficients() const noexcept { return coeffs_; }

  bool is_zero() const noexcept { return conductor_ == 1 && coeffs_[0] == 0; }
  bool is_rational() const noexcept { return conductor_ == 1; }
  std::optional<mpq_class> rational() const;
  bool is_integer() const;

  Cyclotomic conj() const;
  /// Image under ζ ↦ ζ^a, gcd(a, conductor) = 1.
  Cyclotomic galois(std::int64_t a) const;
  std::complex<long double> to_complex() const;

  std::string to_string() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const mpq_class& q);
  Cyclotomic operator-() const;

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
  friend Cyclotomic operator/(Cyclotomic a, const mpq_class& q) { return a /= q; }

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  /// A fixed total order on representations (conductor, then coordinates);
  /// not related to the numeric value.
  friend std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b);

private:
  Cyclotomic(std::uint32_t n, std::vector<mpq_class> coords, bool canonical);
  void canonicalize();

  std::uint32_t conductor_;
  std::vector<mpq_class> coeffs_;
};

/// Euler's totient.
std::uint32_t euler_phi(std::uint32_t n);

/// Sign of a real cyclotomic number: -1, 0 or 1. Throws DomainError for
/// non-real input.
int real_sign(const Cyclotomic& x);

} // namespace qsi
