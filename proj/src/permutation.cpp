#include "qsi/permutation.hpp"

#include <cctype>
#include <numeric>

#include "qsi/errors.hpp"

namespace qsi {

Permutation::Permutation(std::size_t degree) : images_(degree) {
  std::iota(images_.begin(), images_.end(), Point{0});
}

Permutation::Permutation(std::vector<Point> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (Point p : images_) {
    if (p >= images_.size() || seen[p])
      throw MalformedInput("image list is not a bijection");
    seen[p] = true;
  }
}

Permutation Permutation::from_cycles(std::string_view text, std::size_t degree) {
  Permutation result(degree);
  std::vector<bool> used(degree, false);
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(')
      throw MalformedInput("expected '(' in cycle string \"" + std::string(text) + "\"");
    ++i;
    std::vector<Point> cycle;
    for (;;) {
      skip_ws();
      if (i >= text.size()) throw MalformedInput("unterminated cycle in \"" + std::string(text) + "\"");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!cycle.empty()) {
        if (text[i] != ',') throw MalformedInput("expected ',' in cycle string \"" + std::string(text) + "\"");
        ++i;
        skip_ws();
      }
      std::size_t start = i;
      std::uint64_t value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[i] - '0');
        if (value > degree) break;
        ++i;
      }
      if (i == start) throw MalformedInput("expected a point in cycle string \"" + std::string(text) + "\"");
      if (value < 1 || value > degree)
        throw MalformedInput("point " + std::to_string(value) + " outside 1.." + std::to_string(degree));
      Point p = static_cast<Point>(value - 1);
      if (used[p]) throw MalformedInput("point " + std::to_string(value) + " repeated in cycle string");
      used[p] = true;
      cycle.push_back(p);
    }
    for (std::size_t k = 0; k < cycle.size(); ++k)
      result.images_[cycle[k]] = cycle[(k + 1) % cycle.size()];
    skip_ws();
  }
  return result;
}

bool Permutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  Permutation r(degree());
  for (std::size_t i = 0; i < images_.size(); ++i) r.images_[images_[i]] = static_cast<Point>(i);
  return r;
}

Permutation Permutation::pow(long long e) const {
  Permutation base = e < 0 ? inverse() : *this;
  unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
  Permutation result(degree());
  while (k) {
    if (k & 1) result = result * base;
    base = base * base;
    k >>= 1;
  }
  return result;
}

std::uint64_t Permutation::order() const {
  std::vector<bool> seen(degree(), false);
  std::uint64_t ord = 1;
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

std::size_t Permutation::fixed_points(std::size_t limit) const {
  std::size_t n = 0;
  for (std::size_t i = 0; i < limit && i < degree(); ++i)
    if (images_[i] == i) ++n;
  return n;
}

std::string Permutation::to_cycle_string() const {
  std::string out;
  std::vector<bool> seen(degree(), false);
  for (std::size_t i = 0; i < degree(); ++i) {
    if (seen[i] || images_[i] == i) continue;
    out += '(';
    for (std::size_t j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      if (j != i) out += ',';
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree()) throw MalformedInput("degree mismatch in permutation product");
  std::vector<Point> out(a.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = b.images_[a.images_[i]];
  Permutation r;
  r.images_ = std::move(out);
  return r;
}

Permutation conjugate(const Permutation& x, const Permutation& g) {
  // x^g maps g(i) to g(x(i)).
  std::vector<Point> out(x.degree());
  for (std::size_t i = 0; i < out.size(); ++i) out[g[i]] = g[x[i]];
  return Permutation(std::move(out));
}

Permutation commutator(const Permutation& a, const Permutation& b) {
  return a.inverse() * b.inverse() * a * b;
}

} // namespace qsi
