#pragma once

#include <complex>
#include <cmath>
#include <numbers>
#include <vector>

#include "cobord/int_matrix.hpp"
#include "oracles.hpp"

namespace testutil {

inline oracle::ZMat to_z(const cobord::IntMatrix& m) {
  oracle::ZMat out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j);
  }
  return out;
}

inline std::vector<std::vector<double>> to_double(const cobord::IntMatrix& m) {
  std::vector<std::vector<double>> out(m.rows(), std::vector<double>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_d();
  }
  return out;
}

using CMat = std::vector<std::vector<std::complex<double>>>;

// (1 - xi) A - eps (1 - conj xi) A^T in double precision, with
// xi = exp(2 pi i p / q).
inline CMat lt_matrix_double(const cobord::IntMatrix& a, int eps, long p, long q) {
  const double th = 2 * std::numbers::pi * static_cast<double>(p) / static_cast<double>(q);
  const std::complex<double> xi(std::cos(th), std::sin(th));
  const std::size_t k = a.rows();
  CMat b(k, std::vector<std::complex<double>>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      b[i][j] = (1.0 - xi) * a(i, j).get_d() -
                static_cast<double>(eps) * (1.0 - std::conj(xi)) * a(j, i).get_d();
    }
  }
  return b;
}

// Oracle Levine-Tristram data: for eps = +1 the matrix is skew-hermitian and
// is turned hermitian by the factor i.
inline oracle::Inertia lt_oracle(const cobord::IntMatrix& a, int eps, long p, long q) {
  CMat b = lt_matrix_double(a, eps, p, q);
  if (eps == 1) {
    for (auto& row : b) {
      for (auto& x : row) x *= std::complex<double>(0, 1);
    }
  }
  return oracle::hermitian_inertia(b);
}

}  // namespace testutil
