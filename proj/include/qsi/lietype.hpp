#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace qsi {

/// Family tags. Classical families carry a parameter n as in their names:
/// PSL_n, PSp_2n, PSU_n, PΩ_2n+1, PΩ^-_2n, PΩ^+_2n. Exceptional families ignore n.
enum class LieFamily {
  PSL, PSp, PSU, Omega, OmegaMinus, OmegaPlus,
  B2Twisted, G2Twisted, F4Twisted, G2, D4Triality, F4, E6, E6Twisted, E7, E8,
};

std::string_view family_name(LieFamily f);
/// Accepts the names produced by family_name, case-insensitively.
std::optional<LieFamily> parse_family(std::string_view s);
bool is_classical(LieFamily f);
/// Human-readable group name such as "PSL_4(2)" or "2B2(8)".
std::string group_label(LieFamily f, unsigned n, const mpz_class& q);

struct PrimePower {
  mpz_class p;
  unsigned e = 0;
};
std::optional<PrimePower> as_prime_power(const mpz_class& q);

struct LieOrder {
  mpz_class simply_connected;
  mpz_class center;
  mpz_class simple;
  mpz_class p;
  /// False at the small non-simple evaluation points.
  bool is_simple = true;
};

/// Throws DomainError for invalid n or q.
LieOrder group_order(LieFamily f, unsigned n, const mpz_class& q);

/// The full power of the defining characteristic in the simple order.
mpz_class steinberg_degree(LieFamily f, unsigned n, const mpz_class& q);

struct TorusOrder {
  /// ord(x̂) in the simply connected group.
  mpz_class element_order;
  /// |T̂|.
  mpz_class torus_order;
};

TorusOrder singer_torus_order(LieFamily f, unsigned n, const mpz_class& q);

/// Orders of classical and related groups used as overgroup bounds.
namespace order_of {
mpz_class gl(unsigned m, const mpz_class& q);
mpz_class gu(unsigned m, const mpz_class& q);
mpz_class sp(unsigned m, const mpz_class& q);          // Sp_2m
mpz_class o_minus(unsigned m, const mpz_class& q);     // O^-_2m
mpz_class o_odd(unsigned m, const mpz_class& q);       // O_2m+1
} // namespace order_of

} // namespace qsi
