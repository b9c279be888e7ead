#include "qsi/eliminate.hpp"

#include "qsi/errors.hpp"
#include "qsi/numtheory.hpp"

namespace qsi {

namespace {

mpz_class pw(const mpz_class& q, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), q.get_mpz_t(), e);
  return r;
}

std::vector<unsigned> divisors_above_one(unsigned n) {
  std::vector<unsigned> out;
  for (unsigned r = 2; r <= n; ++r)
    if (n % r == 0) out.push_back(r);
  return out;
}

class Builder {
public:
  Builder(LieFamily f, unsigned n, const mpz_class& q) : order_(group_order(f, n, q)) {
    rep_.family = f;
    rep_.n = n;
    rep_.q = q;
    rep_.p = order_.p;
    rep_.group = group_label(f, n, q);
    rep_.simple_order = order_.simple;
    rep_.steinberg_degree = p_part(order_.simple, order_.p);
    rep_.torus = singer_torus_order(f, n, q);
    primes_ = prime_divisors(order_.simple);
  }

  const mpz_class& q() const { return rep_.q; }

  CandidateOvergroup& add(std::string label, const mpz_class& bound, std::optional<unsigned> headline = {}) {
    CandidateOvergroup c;
    c.label = std::move(label);
    c.order_bound = bound;
    c.headline_d = headline;
    for (const mpz_class& l : primes_) {
      if (l == rep_.p || bound % l == 0) continue;
      c.missing.push_back({multiplicative_order(rep_.q, l), l});
    }
    if (headline) note_exponent(*headline);
    rep_.candidates.push_back(std::move(c));
    return rep_.candidates.back();
  }

  void descent(std::string label, std::string note) {
    CandidateOvergroup c;
    c.label = std::move(label);
    c.descent = true;
    c.note = std::move(note);
    rep_.candidates.push_back(std::move(c));
  }

  void manual(std::string note) {
    rep_.manual_case = true;
    rep_.manual_note = std::move(note);
  }

  void note_exponent(unsigned d) {
    if (d >= 2 && is_zsigmondy_exception(rep_.q, d)) {
      for (unsigned x : rep_.zsigmondy_exceptions_hit)
        if (x == d) return;
      rep_.zsigmondy_exceptions_hit.push_back(d);
    }
  }

  /// True when some prime missing from c is a primitive prime divisor of q^d - 1.
  static bool loses(const CandidateOvergroup& c, unsigned d) {
    for (const auto& m : c.missing)
      if (m.d == d) return true;
    return false;
  }

  EliminationReport take() { return std::move(rep_); }

private:
  LieOrder order_;
  EliminationReport rep_;
  std::vector<mpz_class> primes_;
};

void psl(Builder& b, unsigned n) {
  const mpz_class& q = b.q();
  if (n < 4) throw UnsupportedCase("PSL_n(q) with n ≤ 3 is argued separately, not by overgroup orders");
  if (n == 7 && q == 2) b.manual("PSL_7(2) is checked directly");
  for (unsigned r : divisors_above_one(n)) {
    auto& c = b.add("GL_" + std::to_string(n / r) + "(q^" + std::to_string(r) + ")." + std::to_string(r),
                    order_of::gl(n / r, pw(q, r)) * r, n - 1);
    if (!Builder::loses(c, n - 1) && r == n) {
      c.headline_d = n - 2;
      c.note = "the primitive prime divisor of q^(n-1)-1 is r itself";
      b.note_exponent(n - 2);
    }
  }
}

void psp(Builder& b, unsigned n) {
  const mpz_class& q = b.q();
  if (n < 2) throw UnsupportedCase("PSp_2(q) is PSL_2(q)");
  if (n == 2) b.manual("n = 2 lies in the Zsigmondy exception range and needs the special argument");
  if (n == 4 && q == 2) b.manual("PSp_8(2): the subgroup PSp_4(4).4 loses the prime 7");
  for (unsigned r : divisors_above_one(n))
    b.add("Sp_" + std::to_string(2 * n / r) + "(q^" + std::to_string(r) + ")." + std::to_string(r),
          order_of::sp(n / r, pw(q, r)) * r, 2 * n - 2);
  if (n % 2) b.add("GU_" + std::to_string(n) + "(q).2", order_of::gu(n, q) * 2, 2 * n - 2);
  b.descent("O^-_" + std::to_string(2 * n) + "(q).2", "reduces to the POmega^- case");
}

void psu(Builder& b, unsigned n) {
  const mpz_class& q = b.q();
  if (n < 3) throw UnsupportedCase("PSU_2(q) is PSL_2(q)");
  if (n % 2) {
    if (n == 5 && q == 2) b.manual("PSU_5(2) is excluded directly");
    if (n == 3) b.manual("PSU_3(q) is settled by the order of q+1");
    for (unsigned r : divisors_above_one(n))
      b.add("GU_" + std::to_string(n / r) + "(q^" + std::to_string(r) + ")." + std::to_string(r),
            order_of::gu(n / r, pw(q, r)) * r, 2 * (n - 2));
  } else {
    b.add("GU_1(q) x GU_" + std::to_string(n - 1) + "(q)", (q + 1) * order_of::gu(n - 1, q), n % 4 ? n / 2 : n);
  }
}

void omega_odd(Builder& b, unsigned n) {
  const mpz_class& q = b.q();
  if (n < 2) throw UnsupportedCase("POmega_3(q) is PSL_2(q)");
  auto& c = b.add("O_1(q) x O^-_" + std::to_string(2 * n) + "(q)", 2 * order_of::o_minus(n, q),
                  n % 2 ? std::optional<unsigned>(n) : std::nullopt);
  c.note = "cyclic tori of order q^n-1 are not contained";
}

void omega_minus(Builder& b, unsigned n) {
  const mpz_class& q = b.q();
  if (n < 2) throw UnsupportedCase("POmega^-_2(q) is cyclic");
  if (n == 4 && q == 2) b.manual("POmega^-_8(2): no maximal subgroup has order divisible by 7 and 17");
  for (unsigned r : divisors_above_one(n))
    b.add("O^-_" + std::to_string(2 * n / r) + "(q^" + std::to_string(r) + ")." + std::to_string(r),
          order_of::o_minus(n / r, pw(q, r)) * r, 2 * n - 2);
  if (n % 2) b.add("GU_" + std::to_string(n) + "(q)", order_of::gu(n, q) * 2, 2 * n - 2);
}

void omega_plus(Builder& b, unsigned n) {
  const mpz_class& q = b.q();
  if (n < 4) throw UnsupportedCase("POmega^+_2n(q) with n ≤ 3 is not a separate simple family");
  if (n % 2 == 0) {
    b.add("GU_" + std::to_string(n) + "(q)", order_of::gu(n, q) * 2, n - 1);
  } else {
    if (n == 5 && q == 2) b.manual("POmega^+_10(2): no proper subgroup has order divisible by 31 and 17");
    b.add("O_" + std::to_string(n) + "(q^2)", order_of::o_odd((n - 1) / 2, pw(q, 2)) * 2, 2 * (n - 2));
  }
  b.descent("O_1(q) x O_" + std::to_string(2 * n - 1) + "(q)", "conjugates of x lie only in the non-solvable factor");
  b.descent("O^-_2(q) x O^-_" + std::to_string(2 * n - 2) + "(q)", "conjugates of x lie only in the non-solvable factor");
}

void exceptional(Builder& b, LieFamily f) {
  const mpz_class& q = b.q();
  const mpz_class ord = singer_torus_order(f, 0, q).element_order;
  switch (f) {
    case LieFamily::B2Twisted:
      if (q == 2) throw UnsupportedCase("2B2(2) is solvable");
      b.add("N(<x>) = <x>.4", 4 * ord).note = "misses every divisor of q-1";
      break;
    case LieFamily::G2Twisted:
      if (q == 3) throw UnsupportedCase("2G2(3) is not simple");
      b.add("N(<x>) = <x>.6", 6 * ord).note = "misses every odd divisor of q-1";
      break;
    case LieFamily::F4Twisted:
      if (q == 2) throw UnsupportedCase("2F4(2) is not simple; the Tits group is not handled here");
      b.add("N(<x>) = <x>.12", 12 * ord).note = "misses every divisor of q^3+1";
      break;
    case LieFamily::D4Triality:
      b.add("N(<x>) = <x>.4", 4 * ord).note = "misses every odd divisor of q^6-1";
      break;
    case LieFamily::G2:
      if (q == 2) throw UnsupportedCase("G2(2) is not simple");
      if (q == 3 || q == 4) {
        b.manual(q == 3 ? "G2(3): subgroups PSL_2(13) contain the primes but no elements of order 8"
                        : "G2(4): no maximal subgroup contains the primes 3, 5, 7 and 13");
        break;
      }
      b.add("SU_3(q).2", 2 * order_of::gu(3, q) / (q + 1)).note = "misses every odd prime divisor of q^3-1";
      break;
    case LieFamily::F4:
      if (q == 2) {
        b.manual("F4(2): elements of order 17 lie only in subgroups of type Sp_8(2)");
        break;
      }
      b.add("3D4(q).3", 3 * group_order(LieFamily::D4Triality, 0, q).simple);
      break;
    case LieFamily::E6:
      b.add("SL_3(q^3).3/(3,q-1)", 3 * pw(q, 9) * (pw(q, 9) - 1) * (pw(q, 6) - 1));
      break;
    case LieFamily::E6Twisted:
      b.add("SU_3(q^3).3/(3,q+1)", 3 * pw(q, 9) * (pw(q, 9) + 1) * (pw(q, 6) - 1));
      break;
    case LieFamily::E7:
      if (q == 2) {
        b.manual("E7(2): elements of order 129 lie only in subgroups of type SU_8(2)");
        break;
      }
      b.add("(Z_(q+1).2E6(q)).2/(2,q-1)",
            2 * (q + 1) * group_order(LieFamily::E6Twisted, 0, q).simply_connected / (q % 2 != 0 ? 2 : 1));
      break;
    case LieFamily::E8:
      b.add("N(<x>) = <x>.30", 30 * ord);
      break;
    default: throw UnsupportedCase("not an exceptional family");
  }
}

} // namespace

bool EliminationReport::eliminated() const {
  if (manual_case) return false;
  for (const auto& c : candidates)
    if (!c.descent && c.missing.empty()) return false;
  return true;
}

EliminationReport eliminate(LieFamily f, unsigned n, const mpz_class& q) {
  Builder b(f, n, q);
  switch (f) {
    case LieFamily::PSL: psl(b, n); break;
    case LieFamily::PSp: psp(b, n); break;
    case LieFamily::PSU: psu(b, n); break;
    case LieFamily::Omega: omega_odd(b, n); break;
    case LieFamily::OmegaMinus: omega_minus(b, n); break;
    case LieFamily::OmegaPlus: omega_plus(b, n); break;
    default: exceptional(b, f); break;
  }
  return b.take();
}

} // namespace qsi
