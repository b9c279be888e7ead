#pragma once

#include <cstdint>
#include <vector>

namespace qsi::modp {

using Matrix = std::vector<std::vector<std::uint64_t>>;

std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p);
std::uint64_t pow(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv(std::uint64_t a, std::uint64_t p);
bool is_prime(std::uint64_t n);
std::uint64_t primitive_root(std::uint64_t p);

/// Smallest prime p ≡ 1 (mod m) with p > lower.
std::uint64_t prime_one_mod(std::uint64_t m, std::uint64_t lower);

/// Characteristic polynomial det(xI - A), coefficients by increasing degree.
std::vector<std::uint64_t> charpoly(const Matrix& a, std::uint64_t p);

/// Basis of the right null space of A (as row vectors).
Matrix nullspace(Matrix a, std::uint64_t p);

/// Reduced row echelon form; returns pivot columns. Zero rows are dropped.
std::vector<std::size_t> rref(Matrix& rows, std::uint64_t p);

} // namespace qsi::modp
