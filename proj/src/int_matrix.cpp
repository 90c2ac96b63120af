#include "cobord/int_matrix.hpp"

#include <ostream>
#include <sstream>
#include <utility>

#include "cobord/errors.hpp"

namespace cobord {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols_) {
      throw DimensionError("ragged initializer: row " + std::to_string(r) +
                           " has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(cols_));
    }
    for (long v : row) data_.emplace_back(v);
    ++r;
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Integer>>& rows,
                               std::size_t cols_if_empty) {
  if (rows.empty()) return IntMatrix(0, cols_if_empty);
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols_) {
      throw DimensionError("ragged matrix: row " + std::to_string(i + 1) +
                           " has " + std::to_string(rows[i].size()) +
                           " entries, expected " + std::to_string(m.cols_));
    }
    for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::column(std::span<const Integer> entries) {
  IntMatrix m(entries.size(), 1);
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, 0) = entries[i];
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& v : data_) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) {
    throw DimensionError("matrix product: " + std::to_string(rows_) + "x" +
                         std::to_string(cols_) + " times " +
                         std::to_string(rhs.rows_) + "x" +
                         std::to_string(rhs.cols_));
  }
  IntMatrix p(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (sgn(a) == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) p(i, j) += a * rhs(k, j);
    }
  }
  return p;
}

IntMatrix IntMatrix::operator+(const IntMatrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw DimensionError("matrix sum: shape mismatch");
  }
  IntMatrix s = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] += rhs.data_[i];
  return s;
}

IntMatrix IntMatrix::operator-(const IntMatrix& rhs) const {
  return *this + (-rhs);
}

IntMatrix IntMatrix::operator-() const {
  IntMatrix n = *this;
  for (auto& v : n.data_) v = -v;
  return n;
}

IntMatrix IntMatrix::scaled(const Integer& c) const {
  IntMatrix s = *this;
  for (auto& v : s.data_) v *= c;
  return s;
}

IntMatrix IntMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                           std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) {
    throw DimensionError("block out of range");
  }
  IntMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void IntMatrix::set_block(std::size_t r0, std::size_t c0, const IntMatrix& b) {
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) {
    throw DimensionError("set_block out of range");
  }
  for (std::size_t i = 0; i < b.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

IntMatrix IntMatrix::select_rows(std::span<const std::size_t> idx) const {
  IntMatrix s(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(idx[i], j);
  return s;
}

IntMatrix IntMatrix::select_columns(std::span<const std::size_t> idx) const {
  IntMatrix s(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) s(i, j) = (*this)(i, idx[j]);
  return s;
}

IntMatrix IntMatrix::hstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.rows_ != b.rows_) throw DimensionError("hstack: row count mismatch");
  IntMatrix s(a.rows_, a.cols_ + b.cols_);
  s.set_block(0, 0, a);
  s.set_block(0, a.cols_, b);
  return s;
}

IntMatrix IntMatrix::vstack(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.cols_) throw DimensionError("vstack: column count mismatch");
  IntMatrix s(a.rows_ + b.rows_, a.cols_);
  s.set_block(0, 0, a);
  s.set_block(a.rows_, 0, b);
  return s;
}

IntMatrix IntMatrix::direct_sum(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix s(a.rows_ + b.rows_, a.cols_ + b.cols_);
  s.set_block(0, 0, a);
  s.set_block(a.rows_, a.cols_, b);
  return s;
}

Integer IntMatrix::determinant() const {
  if (!is_square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return 1;
  IntMatrix a = *this;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t swap = k + 1;
      while (swap < n && sgn(a(swap, k)) == 0) ++swap;
      if (swap == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(swap, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t IntMatrix::rank() const {
  IntMatrix a = *this;
  std::size_t rank = 0;
  Integer prev = 1;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t piv = rank;
    while (piv < rows_ && sgn(a(piv, col)) == 0) ++piv;
    if (piv == rows_) continue;
    if (piv != rank) {
      for (std::size_t j = 0; j < cols_; ++j) std::swap(a(rank, j), a(piv, j));
    }
    for (std::size_t i = rank + 1; i < rows_; ++i) {
      for (std::size_t j = col + 1; j < cols_; ++j) {
        Integer v = a(rank, col) * a(i, j) - a(i, col) * a(rank, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(v);
      }
      a(i, col) = 0;
    }
    prev = a(rank, col);
    ++rank;
  }
  return rank;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) os << ", ";
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << ", ";
      os << m(i, j);
    }
    os << ']';
  }
  return os << ']';
}

}  // namespace cobord
