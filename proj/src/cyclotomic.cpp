#include "qsi/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <numeric>

#include "qsi/errors.hpp"

namespace qsi {

namespace {

using IntPoly = std::vector<long long>;

/// Data for Q(ζ_N): φ(N) and the power-basis coordinates of ζ_N^e, 0 ≤ e < N.
struct FieldData {
  std::uint32_t n = 1;
  std::uint32_t phi = 1;
  std::vector<std::vector<long long>> powers;
};

/// Embedding of Q(ζ_M) into Q(ζ_N) together with a left inverse on a set of
/// pivot coordinates.
struct Embedding {
  std::vector<std::size_t> pivot_rows;
  std::vector<std::vector<mpq_class>> inverse; // φ(M) x φ(M)
};

std::mutex cache_mutex;
std::map<std::uint32_t, IntPoly> cyclo_polys;
std::map<std::uint32_t, std::shared_ptr<const FieldData>> fields;
std::map<std::pair<std::uint32_t, std::uint32_t>, std::shared_ptr<const Embedding>> embeddings;

IntPoly cyclotomic_poly_locked(std::uint32_t n) {
  if (auto it = cyclo_polys.find(n); it != cyclo_polys.end()) return it->second;
  IntPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d) continue;
    IntPoly den = cyclotomic_poly_locked(d);
    // Exact division of monic polynomials.
    std::size_t dn = den.size() - 1;
    IntPoly q(num.size() - dn, 0);
    for (std::size_t i = num.size() - 1; i + 1 > dn; --i) {
      long long c = num[i];
      q[i - dn] = c;
      if (c != 0)
        for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
      if (i == dn) break;
    }
    num = std::move(q);
  }
  cyclo_polys[n] = num;
  return num;
}

std::shared_ptr<const FieldData> field(std::uint32_t n) {
  std::lock_guard lock(cache_mutex);
  if (auto it = fields.find(n); it != fields.end()) return it->second;
  IntPoly phi_poly = cyclotomic_poly_locked(n);
  auto data = std::make_shared<FieldData>();
  data->n = n;
  data->phi = static_cast<std::uint32_t>(phi_poly.size() - 1);
  std::vector<long long> row(data->phi, 0);
  row[0] = 1;
  if (data->phi == 0) throw IntegrityError("degenerate cyclotomic field");
  for (std::uint32_t e = 0; e < n; ++e) {
    data->powers.push_back(row);
    // Multiply by x and reduce with the monic Φ_n.
    long long top = row[data->phi - 1];
    for (std::size_t i = data->phi - 1; i > 0; --i) row[i] = row[i - 1];
    row[0] = 0;
    if (top != 0)
      for (std::size_t i = 0; i < data->phi; ++i) row[i] -= top * phi_poly[i];
  }
  fields[n] = data;
  return data;
}

std::vector<mpq_class> reduce_root_sum(const FieldData& f, std::span<const mpq_class> by_exponent) {
  std::vector<mpq_class> out(f.phi, 0);
  for (std::size_t e = 0; e < by_exponent.size(); ++e) {
    const mpq_class& c = by_exponent[e];
    if (c == 0) continue;
    const auto& row = f.powers[e % f.n];
    for (std::size_t i = 0; i < f.phi; ++i)
      if (row[i]) out[i] += c * static_cast<long>(row[i]);
  }
  return out;
}

/// Coordinates of a conductor-m value after embedding into Q(ζ_n), m | n.
std::vector<mpq_class> lift(const std::vector<mpq_class>& v, std::uint32_t m, std::uint32_t n) {
  if (m == n) return v;
  auto f = field(n);
  std::uint32_t step = n / m;
  std::vector<mpq_class> out(f->phi, 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    const auto& row = f->powers[(k * step) % n];
    for (std::size_t i = 0; i < f->phi; ++i)
      if (row[i]) out[i] += v[k] * static_cast<long>(row[i]);
  }
  return out;
}

std::shared_ptr<const Embedding> embedding(std::uint32_t m, std::uint32_t n) {
  {
    std::lock_guard lock(cache_mutex);
    if (auto it = embeddings.find({m, n}); it != embeddings.end()) return it->second;
  }
  auto fm = field(m);
  auto fn = field(n);
  const std::size_t rows = fn->phi, cols = fm->phi;
  std::uint32_t step = n / m;
  // E[i][k] = coordinate i of ζ_n^{k*step}.
  std::vector<std::vector<mpq_class>> e(rows, std::vector<mpq_class>(cols));
  for (std::size_t k = 0; k < cols; ++k) {
    const auto& row = fn->powers[(k * step) % n];
    for (std::size_t i = 0; i < rows; ++i) e[i][k] = static_cast<long>(row[i]);
  }
  // Pick independent rows greedily by elimination on a copy.
  std::vector<std::size_t> pivots;
  std::vector<std::vector<mpq_class>> basis;
  for (std::size_t i = 0; i < rows && pivots.size() < cols; ++i) {
    std::vector<mpq_class> r = e[i];
    for (const auto& b : basis) {
      std::size_t lead = 0;
      while (b[lead] == 0) ++lead;
      if (r[lead] != 0) {
        mpq_class f = r[lead] / b[lead];
        for (std::size_t k = 0; k < cols; ++k) r[k] -= f * b[k];
      }
    }
    if (std::any_of(r.begin(), r.end(), [](const mpq_class& x) { return x != 0; })) {
      pivots.push_back(i);
      basis.push_back(std::move(r));
    }
  }
  if (pivots.size() != cols) throw IntegrityError("cyclotomic embedding is not injective");
  // Invert the square submatrix E[pivots].
  std::vector<std::vector<mpq_class>> a(cols, std::vector<mpq_class>(2 * cols, 0));
  for (std::size_t r = 0; r < cols; ++r) {
    for (std::size_t k = 0; k < cols; ++k) a[r][k] = e[pivots[r]][k];
    a[r][cols + r] = 1;
  }
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    mpq_class inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < cols; ++r) {
      if (r == c || a[r][c] == 0) continue;
      mpq_class f = a[r][c];
      for (std::size_t k = 0; k < 2 * cols; ++k) a[r][k] -= f * a[c][k];
    }
  }
  auto emb = std::make_shared<Embedding>();
  emb->pivot_rows = pivots;
  emb->inverse.assign(cols, std::vector<mpq_class>(cols));
  for (std::size_t r = 0; r < cols; ++r)
    for (std::size_t k = 0; k < cols; ++k) emb->inverse[r][k] = a[r][cols + k];
  std::lock_guard lock(cache_mutex);
  embeddings[{m, n}] = emb;
  return emb;
}

} // namespace

std::uint32_t euler_phi(std::uint32_t n) {
  std::uint32_t result = n;
  for (std::uint32_t p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

Cyclotomic::Cyclotomic() : conductor_(1), coeffs_{mpq_class(0)} {}
Cyclotomic::Cyclotomic(long value) : conductor_(1), coeffs_{mpq_class(value)} {}
Cyclotomic::Cyclotomic(const mpq_class& value) : conductor_(1), coeffs_{value} {}

Cyclotomic::Cyclotomic(std::uint32_t n, std::vector<mpq_class> coords, bool canonical)
    : conductor_(n), coeffs_(std::move(coords)) {
  if (!canonical) canonicalize();
}

Cyclotomic Cyclotomic::root_of_unity(std::uint32_t n, std::int64_t k) {
  if (n == 0) throw DomainError("root of unity of order 0");
  std::int64_t e = ((k % static_cast<std::int64_t>(n)) + n) % n;
  std::vector<mpq_class> c(static_cast<std::size_t>(e) + 1, 0);
  c[static_cast<std::size_t>(e)] = 1;
  return from_root_sum(n, std::span<const mpq_class>(c));
}

Cyclotomic Cyclotomic::from_root_sum(std::uint32_t n, std::span<const mpq_class> coeffs) {
  if (n == 0) throw DomainError("conductor 0");
  auto f = field(n);
  return Cyclotomic(n, reduce_root_sum(*f, coeffs), false);
}

Cyclotomic Cyclotomic::from_root_sum(std::uint32_t n, std::span<const long> coeffs) {
  std::vector<mpq_class> q(coeffs.begin(), coeffs.end());
  return from_root_sum(n, std::span<const mpq_class>(q));
}

Cyclotomic Cyclotomic::from_power_basis(std::uint32_t n, std::vector<mpq_class> coords) {
  if (n == 0) throw DomainError("conductor 0");
  if (coords.size() != field(n)->phi) throw MalformedInput("wrong number of power-basis coordinates");
  return Cyclotomic(n, std::move(coords), false);
}

void Cyclotomic::canonicalize() {
  const std::uint32_t n = conductor_;
  if (n == 1) return;
  bool rational = true;
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) {
      rational = false;
      break;
    }
  if (rational) {
    coeffs_.resize(1);
    conductor_ = 1;
    return;
  }
  for (std::uint32_t m = 3; m < n; ++m) {
    if (n % m || m % 4 == 2) continue;
    auto emb = embedding(m, n);
    const std::size_t cols = emb->inverse.size();
    std::vector<mpq_class> b(cols, 0);
    for (std::size_t r = 0; r < cols; ++r)
      for (std::size_t k = 0; k < cols; ++k)
        if (emb->inverse[r][k] != 0) b[r] += emb->inverse[r][k] * coeffs_[emb->pivot_rows[k]];
    if (lift(b, m, n) == coeffs_) {
      conductor_ = m;
      coeffs_ = std::move(b);
      return;
    }
  }
  if (n % 4 == 2) {
    // Q(ζ_n) = Q(ζ_{n/2}) for odd n/2; reached only if n/2 < 3 failed above.
    throw IntegrityError("cyclotomic value failed to reduce from conductor " + std::to_string(n));
  }
}

std::optional<mpq_class> Cyclotomic::rational() const {
  if (conductor_ != 1) return std::nullopt;
  return coeffs_[0];
}

bool Cyclotomic::is_integer() const { return conductor_ == 1 && coeffs_[0].get_den() == 1; }

Cyclotomic Cyclotomic::galois(std::int64_t a) const {
  const std::uint32_t n = conductor_;
  if (n == 1) return *this;
  std::int64_t am = ((a % static_cast<std::int64_t>(n)) + n) % n;
  if (std::gcd(static_cast<std::uint64_t>(am), static_cast<std::uint64_t>(n)) != 1)
    throw DomainError("Galois exponent not coprime to the conductor");
  std::vector<mpq_class> by_exp(n, 0);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    by_exp[(k * static_cast<std::uint64_t>(am)) % n] += coeffs_[k];
  return from_root_sum(n, std::span<const mpq_class>(by_exp));
}

Cyclotomic Cyclotomic::conj() const { return galois(-1); }

std::complex<long double> Cyclotomic::to_complex() const {
  std::complex<long double> z = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    long double angle = 2 * std::numbers::pi_v<long double> * static_cast<long double>(k) / conductor_;
    z += static_cast<long double>(coeffs_[k].get_d()) * std::polar<long double>(1, angle);
  }
  return z;
}

std::string Cyclotomic::to_string() const {
  if (conductor_ == 1) return coeffs_[0].get_str();
  std::string out;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const mpq_class& c = coeffs_[k];
    if (c == 0) continue;
    std::string mag = mpq_class(abs(c)).get_str();
    bool negative = c < 0;
    if (out.empty())
      out += negative ? "-" : "";
    else
      out += negative ? " - " : " + ";
    std::string root = k == 0 ? "" : "z" + std::to_string(conductor_) + (k == 1 ? "" : "^" + std::to_string(k));
    if (k == 0)
      out += mag;
    else if (mag == "1")
      out += root;
    else
      out += mag + "*" + root;
  }
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  std::uint32_t l = std::lcm(conductor_, o.conductor_);
  std::vector<mpq_class> a = lift(coeffs_, conductor_, l);
  std::vector<mpq_class> b = lift(o.coeffs_, o.conductor_, l);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  *this = Cyclotomic(l, std::move(a), false);
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  if (o.conductor_ == 1) {
    for (auto& c : coeffs_) c *= o.coeffs_[0];
    if (o.coeffs_[0] == 0) *this = Cyclotomic();
    return *this;
  }
  if (conductor_ == 1) {
    mpq_class s = coeffs_[0];
    *this = o;
    for (auto& c : coeffs_) c *= s;
    if (s == 0) *this = Cyclotomic();
    return *this;
  }
  std::uint32_t l = std::lcm(conductor_, o.conductor_);
  std::vector<mpq_class> a = lift(coeffs_, conductor_, l);
  std::vector<mpq_class> b = lift(o.coeffs_, o.conductor_, l);
  std::vector<mpq_class> by_exp(l, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) by_exp[(i + j) % l] += a[i] * b[j];
  }
  *this = from_root_sum(l, std::span<const mpq_class>(by_exp));
  return *this;
}

Cyclotomic& Cyclotomic::operator/=(const mpq_class& q) {
  if (q == 0) throw DomainError("division by zero");
  for (auto& c : coeffs_) c /= q;
  return *this;
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  if (auto c = a.conductor_ <=> b.conductor_; c != 0) return c;
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    int s = cmp(a.coeffs_[i], b.coeffs_[i]);
    if (s < 0) return std::strong_ordering::less;
    if (s > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

int real_sign(const Cyclotomic& x) {
  if (x.conj() != x) throw DomainError("sign of a non-real cyclotomic number");
  if (auto q = x.rational()) return sgn(*q);
  long double v = x.to_complex().real();
  if (std::fabs(v) < 1e-9L) throw IntegrityError("sign of " + x.to_string() + " undecided at working precision");
  return v > 0 ? 1 : -1;
}

} // namespace qsi
