#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "doctest.h"
#include "qsi/cyclotomic.hpp"
#include "qsi/errors.hpp"

using qsi::Cyclotomic;

namespace {

std::complex<long double> root(std::uint32_t n, std::int64_t k) {
  long double a = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / n;
  return {std::cos(a), std::sin(a)};
}

bool close(std::complex<long double> a, std::complex<long double> b) { return std::abs(a - b) < 1e-9L; }

/// Random element of Q(ζ_n) together with its complex value computed directly.
std::pair<Cyclotomic, std::complex<long double>> random_element(std::mt19937& rng, std::uint32_t n) {
  std::vector<long> c(n);
  std::complex<long double> z = 0;
  for (std::uint32_t k = 0; k < n; ++k) {
    c[k] = static_cast<long>(rng() % 7) - 3;
    z += static_cast<long double>(c[k]) * root(n, k);
  }
  return {Cyclotomic::from_root_sum(n, std::span<const long>(c)), z};
}

} // namespace

TEST_CASE("ring operations agree with complex evaluation") {
  std::mt19937 rng(3);
  for (std::uint32_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 9u, 12u, 15u, 20u, 21u, 24u}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto [a, za] = random_element(rng, n);
      auto [b, zb] = random_element(rng, n);
      CHECK(close(a.to_complex(), za));
      CHECK(close((a + b).to_complex(), za + zb));
      CHECK(close((a - b).to_complex(), za - zb));
      CHECK(close((a * b).to_complex(), za * zb));
      CHECK(close(a.conj().to_complex(), std::conj(za)));
      CHECK(close((a / mpq_class(3, 2)).to_complex(), za / 1.5L));
    }
  }
}

TEST_CASE("mixed conductors combine in the compositum") {
  std::mt19937 rng(5);
  for (auto [n, m] : {std::pair{3u, 4u}, {5u, 3u}, {8u, 12u}, {7u, 9u}}) {
    auto [a, za] = random_element(rng, n);
    auto [b, zb] = random_element(rng, m);
    CHECK(close((a * b).to_complex(), za * zb));
    CHECK(close((a + b).to_complex(), za + zb));
  }
}

TEST_CASE("representation is canonical at the minimal conductor") {
  CHECK(Cyclotomic::root_of_unity(4, 2) == Cyclotomic(-1));
  CHECK(Cyclotomic::root_of_unity(6, 1) == -Cyclotomic::root_of_unity(3, 2));
  CHECK(Cyclotomic::root_of_unity(6, 1).conductor() == 3);
  CHECK(Cyclotomic::root_of_unity(10, 3).conductor() == 5);
  Cyclotomic s = 0;
  for (int k = 0; k < 5; ++k) s += Cyclotomic::root_of_unity(5, k);
  CHECK(s.is_zero());
  CHECK(s.conductor() == 1);
  // ζ_8 + ζ_8^7 = √2 lives in Q(ζ_8); its square is rational.
  Cyclotomic r2 = Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, 7);
  CHECK(r2.conductor() == 8);
  CHECK(r2 * r2 == Cyclotomic(2));
  // b5 = (-1 + √5)/2 = ζ_5 + ζ_5^4
  Cyclotomic b5 = Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4);
  CHECK(b5 * b5 + b5 == Cyclotomic(1));
  CHECK(b5.coefficients().size() == qsi::euler_phi(5));
}

TEST_CASE("galois action and rationality") {
  std::mt19937 rng(9);
  for (std::uint32_t n : {5u, 7u, 12u, 15u}) {
    auto [a, za] = random_element(rng, n);
    auto [b, zb] = random_element(rng, n);
    for (std::int64_t k = 1; k < n; ++k) {
      if (std::gcd<std::int64_t, std::int64_t>(k, n) != 1) continue;
      CHECK((a * b).galois(k) == a.galois(k) * b.galois(k));
      CHECK((a + b).galois(k) == a.galois(k) + b.galois(k));
    }
    CHECK(a.galois(-1) == a.conj());
    Cyclotomic norm = a * a.conj();
    CHECK(norm == norm.conj());
  }
  CHECK(Cyclotomic(mpq_class(3, 4)).rational() == mpq_class(3, 4));
  CHECK(!Cyclotomic(mpq_class(3, 4)).is_integer());
  CHECK(Cyclotomic(-6).is_integer());
  CHECK(!Cyclotomic::root_of_unity(3, 1).rational());
  CHECK_THROWS(Cyclotomic::root_of_unity(5, 1).galois(5));
}

TEST_CASE("sign of real numbers") {
  Cyclotomic b5 = Cyclotomic::root_of_unity(5, 1) + Cyclotomic::root_of_unity(5, 4);
  CHECK(qsi::real_sign(b5) == 1);
  CHECK(qsi::real_sign(-b5) == -1);
  CHECK(qsi::real_sign(b5 * b5 + b5 - Cyclotomic(1)) == 0);
  Cyclotomic r2 = Cyclotomic::root_of_unity(8, 1) + Cyclotomic::root_of_unity(8, 7);
  CHECK(qsi::real_sign(r2 - Cyclotomic(mpq_class(141421, 100000))) == 1);
  CHECK(qsi::real_sign(r2 - Cyclotomic(mpq_class(141422, 100000))) == -1);
  CHECK_THROWS_AS(qsi::real_sign(Cyclotomic::root_of_unity(3, 1)), qsi::DomainError);
}

TEST_CASE("text form") {
  CHECK(Cyclotomic(0).to_string() == "0");
  CHECK(Cyclotomic(mpq_class(-2, 3)).to_string() == "-2/3");
  Cyclotomic x = -Cyclotomic::root_of_unity(5, 2) - Cyclotomic::root_of_unity(5, 3);
  CHECK(x.to_string() == "-z5^2 - z5^3");
}
