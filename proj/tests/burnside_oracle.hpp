#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "oracles.hpp"

namespace oracle {

/// Irreducible characters computed numerically with Burnside's method from
/// brute-force class structure constants; rows are indexed like `classes`.
inline std::vector<std::vector<std::complex<double>>> burnside_table(const std::vector<oracle::Set>& classes) {
  const std::size_t k = classes.size();
  std::vector<oracle::Perm> reps;
  for (const auto& c : classes) reps.push_back(*c.begin());
  auto class_of = [&](const oracle::Perm& x) {
    for (std::size_t i = 0; i < k; ++i)
      if (classes[i].count(x)) return i;
    return k;
  };
  // a[i][j][l] = #{x in C_i : x^-1 z_l in C_j}
  std::vector<std::vector<std::vector<double>>> a(k, std::vector<std::vector<double>>(k, std::vector<double>(k, 0)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (const auto& x : classes[i]) a[i][class_of(oracle::mul(oracle::inv(x), reps[l]))][l] += 1;

  std::mt19937 rng(1);
  std::uniform_real_distribution<double> coef(0.5, 1.5);
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
  for (std::size_t i = 0; i < k; ++i) {
    double r = coef(rng);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t l = 0; l < k; ++l) m(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) += r * a[i][j][l];
  }
  // Central characters satisfy w_i w = A_i w with (A_i)[j][l] = a[i][j][l].
  Eigen::EigenSolver<Eigen::MatrixXd> solver(m);
  std::uint64_t order = 0;
  for (const auto& c : classes) order += c.size();
  std::vector<std::vector<std::complex<double>>> rows;
  for (Eigen::Index e = 0; e < static_cast<Eigen::Index>(k); ++e) {
    Eigen::VectorXcd w = solver.eigenvectors().col(e);
    std::size_t id = class_of(oracle::identity(reps[0].size()));
    w /= w(static_cast<Eigen::Index>(id));
    double s = 0;
    for (std::size_t l = 0; l < k; ++l) s += std::norm(w(static_cast<Eigen::Index>(l))) / static_cast<double>(classes[l].size());
    double degree = std::sqrt(static_cast<double>(order) / s);
    std::vector<std::complex<double>> row(k);
    for (std::size_t l = 0; l < k; ++l) row[l] = degree * w(static_cast<Eigen::Index>(l)) / static_cast<double>(classes[l].size());
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace oracle
