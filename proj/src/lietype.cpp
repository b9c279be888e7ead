#include "qsi/lietype.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "qsi/errors.hpp"
#include "qsi/numtheory.hpp"

namespace qsi {

namespace {

constexpr std::array<std::pair<LieFamily, std::string_view>, 16> kNames{{
    {LieFamily::PSL, "PSL"},        {LieFamily::PSp, "PSp"},          {LieFamily::PSU, "PSU"},
    {LieFamily::Omega, "Omega"},    {LieFamily::OmegaMinus, "OmegaMinus"}, {LieFamily::OmegaPlus, "OmegaPlus"},
    {LieFamily::B2Twisted, "2B2"},  {LieFamily::G2Twisted, "2G2"},    {LieFamily::F4Twisted, "2F4"},
    {LieFamily::G2, "G2"},          {LieFamily::D4Triality, "3D4"},   {LieFamily::F4, "F4"},
    {LieFamily::E6, "E6"},          {LieFamily::E6Twisted, "2E6"},    {LieFamily::E7, "E7"},
    {LieFamily::E8, "E8"},
}};

mpz_class pw(const mpz_class& q, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), e);
  return r;
}

/// q = p^(2m+1) for the given p; returns m.
unsigned odd_power_exponent(const mpz_class& q, unsigned long p, std::string_view family) {
  auto pp = as_prime_power(q);
  if (!pp || pp->p != p || pp->e % 2 == 0)
    throw DomainError(std::string(family) + " requires q = " + std::to_string(p) + "^(2m+1), got " + q.get_str());
  return (pp->e - 1) / 2;
}

} // namespace

std::string_view family_name(LieFamily f) {
  for (auto& [k, v] : kNames)
    if (k == f) return v;
  return "?";
}

std::optional<LieFamily> parse_family(std::string_view s) {
  auto lower = [](std::string_view x) {
    std::string r(x);
    for (auto& c : r) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return r;
  };
  for (auto& [k, v] : kNames)
    if (lower(v) == lower(s)) return k;
  return std::nullopt;
}

bool is_classical(LieFamily f) { return static_cast<int>(f) <= static_cast<int>(LieFamily::OmegaPlus); }

std::string group_label(LieFamily f, unsigned n, const mpz_class& q) {
  const std::string qs = q.get_str();
  switch (f) {
    case LieFamily::PSL: return "PSL_" + std::to_string(n) + "(" + qs + ")";
    case LieFamily::PSp: return "PSp_" + std::to_string(2 * n) + "(" + qs + ")";
    case LieFamily::PSU: return "PSU_" + std::to_string(n) + "(" + qs + ")";
    case LieFamily::Omega: return "POmega_" + std::to_string(2 * n + 1) + "(" + qs + ")";
    case LieFamily::OmegaMinus: return "POmega^-_" + std::to_string(2 * n) + "(" + qs + ")";
    case LieFamily::OmegaPlus: return "POmega^+_" + std::to_string(2 * n) + "(" + qs + ")";
    default: return std::string(family_name(f)) + "(" + qs + ")";
  }
}

std::optional<PrimePower> as_prime_power(const mpz_class& q) {
  if (q < 2) return std::nullopt;
  auto f = factorize(q);
  if (f.size() != 1) return std::nullopt;
  return PrimePower{f[0].first, f[0].second};
}

namespace order_of {

mpz_class gl(unsigned m, const mpz_class& q) {
  mpz_class r = pw(q, m * (m - 1) / 2);
  for (unsigned i = 1; i <= m; ++i) r *= pw(q, i) - 1;
  return r;
}

mpz_class gu(unsigned m, const mpz_class& q) {
  mpz_class r = pw(q, m * (m - 1) / 2);
  for (unsigned i = 1; i <= m; ++i) r *= i % 2 ? mpz_class(pw(q, i) + 1) : mpz_class(pw(q, i) - 1);
  return r;
}

mpz_class sp(unsigned m, const mpz_class& q) {
  mpz_class r = pw(q, m * m);
  for (unsigned i = 1; i <= m; ++i) r *= pw(q, 2 * i) - 1;
  return r;
}

mpz_class o_minus(unsigned m, const mpz_class& q) {
  mpz_class r = 2 * pw(q, m * (m - 1)) * (pw(q, m) + 1);
  for (unsigned i = 1; i < m; ++i) r *= pw(q, 2 * i) - 1;
  return r;
}

mpz_class o_odd(unsigned m, const mpz_class& q) { return 2 * sp(m, q); }

} // namespace order_of

LieOrder group_order(LieFamily f, unsigned n, const mpz_class& q) {
  auto pp = as_prime_power(q);
  if (!pp) throw DomainError("q = " + q.get_str() + " is not a prime power");
  LieOrder r;
  r.p = pp->p;
  const bool q_odd = pp->p != 2;
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) throw DomainError(std::string(family_name(f)) + ": " + what);
  };
  mpz_class sc = 1, z = 1;
  switch (f) {
    case LieFamily::PSL:
      need(n >= 2, "n must be at least 2");
      sc = pw(q, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) sc *= pw(q, i) - 1;
      z = gcd(n, q - 1);
      r.is_simple = !(n == 2 && q <= 3);
      break;
    case LieFamily::PSp:
      need(n >= 1, "n must be at least 1");
      sc = order_of::sp(n, q);
      z = q_odd ? 2 : 1;
      r.is_simple = !((n == 1 && q <= 3) || (n == 2 && q == 2));
      break;
    case LieFamily::PSU:
      need(n >= 2, "n must be at least 2");
      sc = pw(q, n * (n - 1) / 2);
      for (unsigned i = 2; i <= n; ++i) sc *= i % 2 ? mpz_class(pw(q, i) + 1) : mpz_class(pw(q, i) - 1);
      z = gcd(n, q + 1);
      r.is_simple = !((n == 2 && q <= 3) || (n == 3 && q == 2));
      break;
    case LieFamily::Omega:
      need(n >= 1, "n must be at least 1");
      need(q_odd, "q must be odd");
      sc = order_of::sp(n, q);
      z = 2;
      r.is_simple = !(n == 1 && q == 3);
      break;
    case LieFamily::OmegaMinus:
      need(n >= 2, "n must be at least 2");
      sc = pw(q, n * (n - 1)) * (pw(q, n) + 1);
      for (unsigned i = 1; i < n; ++i) sc *= pw(q, 2 * i) - 1;
      z = gcd(4, pw(q, n) + 1);
      break;
    case LieFamily::OmegaPlus:
      need(n >= 2, "n must be at least 2");
      sc = pw(q, n * (n - 1)) * (pw(q, n) - 1);
      for (unsigned i = 1; i < n; ++i) sc *= pw(q, 2 * i) - 1;
      z = gcd(4, pw(q, n) - 1);
      r.is_simple = n != 2;
      break;
    case LieFamily::B2Twisted:
      odd_power_exponent(q, 2, "2B2");
      sc = pw(q, 2) * (pw(q, 2) + 1) * (q - 1);
      r.is_simple = q != 2;
      break;
    case LieFamily::G2Twisted:
      odd_power_exponent(q, 3, "2G2");
      sc = pw(q, 3) * (pw(q, 3) + 1) * (q - 1);
      r.is_simple = q != 3;
      break;
    case LieFamily::F4Twisted:
      odd_power_exponent(q, 2, "2F4");
      sc = pw(q, 12) * (pw(q, 6) + 1) * (pw(q, 4) - 1) * (pw(q, 3) + 1) * (q - 1);
      r.is_simple = q != 2;
      break;
    case LieFamily::G2:
      sc = pw(q, 6) * (pw(q, 6) - 1) * (pw(q, 2) - 1);
      r.is_simple = q != 2;
      break;
    case LieFamily::D4Triality:
      sc = pw(q, 12) * (pw(q, 8) + pw(q, 4) + 1) * (pw(q, 6) - 1) * (pw(q, 2) - 1);
      break;
    case LieFamily::F4:
      sc = pw(q, 24) * (pw(q, 12) - 1) * (pw(q, 8) - 1) * (pw(q, 6) - 1) * (pw(q, 2) - 1);
      break;
    case LieFamily::E6:
      sc = pw(q, 36) * (pw(q, 12) - 1) * (pw(q, 9) - 1) * (pw(q, 8) - 1) * (pw(q, 6) - 1) * (pw(q, 5) - 1) *
           (pw(q, 2) - 1);
      z = gcd(3, q - 1);
      break;
    case LieFamily::E6Twisted:
      sc = pw(q, 36) * (pw(q, 12) - 1) * (pw(q, 9) + 1) * (pw(q, 8) - 1) * (pw(q, 6) - 1) * (pw(q, 5) + 1) *
           (pw(q, 2) - 1);
      z = gcd(3, q + 1);
      break;
    case LieFamily::E7:
      sc = pw(q, 63);
      for (unsigned e : {18u, 14u, 12u, 10u, 8u, 6u, 2u}) sc *= pw(q, e) - 1;
      z = gcd(2, q - 1);
      break;
    case LieFamily::E8:
      sc = pw(q, 120);
      for (unsigned e : {30u, 24u, 20u, 18u, 14u, 12u, 8u, 2u}) sc *= pw(q, e) - 1;
      break;
  }
  r.simply_connected = sc;
  r.center = z;
  r.simple = sc / z;
  if (r.simple * z != sc) throw IntegrityError("center order does not divide the group order");
  return r;
}

mpz_class steinberg_degree(LieFamily f, unsigned n, const mpz_class& q) {
  LieOrder o = group_order(f, n, q);
  return p_part(o.simple, o.p);
}

TorusOrder singer_torus_order(LieFamily f, unsigned n, const mpz_class& q) {
  LieOrder o = group_order(f, n, q);
  const bool q_odd = o.p != 2;
  const mpz_class two_q = q_odd ? 2 : 1;
  mpz_class ord;
  mpz_class extra = 1;
  switch (f) {
    case LieFamily::PSL: ord = (pw(q, n) - 1) / (q - 1); break;
    case LieFamily::PSp: ord = pw(q, n) + 1; break;
    case LieFamily::PSU:
      if (n % 2) {
        ord = (pw(q, n) + 1) / (q + 1);
      } else {
        ord = (pw(q, n - 1) + 1) / (q + 1);
        extra = q + 1;
      }
      break;
    case LieFamily::Omega: ord = (pw(q, n) + 1) / 2; break;
    case LieFamily::OmegaMinus: ord = (pw(q, n) + 1) / two_q; break;
    case LieFamily::OmegaPlus:
      ord = (pw(q, n - 1) + 1) / two_q;
      extra = q + 1;
      break;
    case LieFamily::B2Twisted: {
      unsigned m = odd_power_exponent(q, 2, "2B2");
      ord = q + pw(2, m + 1) + 1;
      break;
    }
    case LieFamily::G2Twisted: {
      unsigned m = odd_power_exponent(q, 3, "2G2");
      ord = q + pw(3, m + 1) + 1;
      break;
    }
    case LieFamily::F4Twisted: {
      unsigned m = odd_power_exponent(q, 2, "2F4");
      ord = pw(q, 2) + pw(2, 3 * m + 2) + q + pw(2, m + 1) + 1;
      break;
    }
    case LieFamily::G2: ord = pw(q, 2) - q + 1; break;
    case LieFamily::D4Triality:
    case LieFamily::F4: ord = pw(q, 4) - pw(q, 2) + 1; break;
    case LieFamily::E6: ord = pw(q, 6) + pw(q, 3) + 1; break;
    case LieFamily::E6Twisted: ord = pw(q, 6) - pw(q, 3) + 1; break;
    case LieFamily::E7: ord = (q + 1) * (pw(q, 6) - pw(q, 3) + 1); break;
    case LieFamily::E8: ord = pw(q, 8) + pw(q, 7) - pw(q, 5) - pw(q, 4) - pw(q, 3) + q + 1; break;
  }
  return TorusOrder{ord, ord * extra};
}

} // namespace qsi
