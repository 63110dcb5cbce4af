#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gpd/scalar.hpp"

namespace gpd {

/// Small dense row-major matrix. Sizes here are at most a few hundred, so no
/// blocking or sparse storage.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  /// Matrix whose columns are the given vectors (all of length `rows`).
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t rows) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows, std::size_t cols) {
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  std::vector<T> col(std::size_t c) const {
    std::vector<T> v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }
  std::vector<std::vector<T>> columns() const {
    std::vector<std::vector<T>> out;
    out.reserve(cols_);
    for (std::size_t c = 0; c < cols_; ++c) out.push_back(col(c));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Matrix select_columns(const std::vector<std::size_t>& idx) const {
    Matrix m(rows_, idx.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < idx.size(); ++j) m(r, j) = (*this)(r, idx[j]);
    return m;
  }
  Matrix select_rows(const std::vector<std::size_t>& idx) const {
    Matrix m(idx.size(), cols_);
    for (std::size_t i = 0; i < idx.size(); ++i)
      for (std::size_t c = 0; c < cols_; ++c) m(i, c) = (*this)(idx[i], c);
    return m;
  }

  Matrix operator+(const Matrix& o) const {
    check_same(o);
    Matrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] += o.data_[i];
    return m;
  }
  Matrix operator-(const Matrix& o) const {
    check_same(o);
    Matrix m = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) m.data_[i] -= o.data_[i];
    return m;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix m(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (ScalarTraits<T>::is_zero(a, 0.0) && ScalarTraits<T>::exact) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) m(i, j) += a * o(k, j);
      }
    return m;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    if (cols_ != v.size()) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> out(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) out[i] += (*this)(i, k) * v[k];
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  double max_magnitude() const {
    double m = 0;
    for (const T& x : data_) m = std::max(m, ScalarTraits<T>::magnitude(x));
    return m;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

template <class T>
Matrix<T> hstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix<T> m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix<T> m(a.rows() + b.rows(), a.cols());
  for (std::size_t c = 0; c < a.cols(); ++c) {
    for (std::size_t r = 0; r < a.rows(); ++r) m(r, c) = a(r, c);
    for (std::size_t r = 0; r < b.rows(); ++r) m(a.rows() + r, c) = b(r, c);
  }
  return m;
}

template <class T>
Matrix<T> scaled(Matrix<T> m, const T& s) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) *= s;
  return m;
}

template <class T>
struct Echelon {
  Matrix<T> reduced;                // reduced row echelon form, zero rows trimmed
  std::vector<std::size_t> pivots;  // pivot column of each remaining row
};

/// Reduced row echelon form. For doubles, entries below tolerance relative to
/// the largest input entry count as zero and partial pivoting is used.
template <class T>
Echelon<T> rref(Matrix<T> m) {
  using Tr = ScalarTraits<T>;
  const double scale = Tr::exact ? 1.0 : m.max_magnitude();
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t best = m.rows();
    if constexpr (Tr::exact) {
      for (std::size_t r = row; r < m.rows(); ++r)
        if (!Tr::is_zero(m(r, col))) {
          best = r;
          break;
        }
    } else {
      double best_mag = 0;
      for (std::size_t r = row; r < m.rows(); ++r) {
        double mag = Tr::magnitude(m(r, col));
        if (mag > best_mag) best_mag = mag, best = r;
      }
      if (best != m.rows() && Tr::is_zero(m(best, col), scale)) best = m.rows();
    }
    if (best == m.rows()) {
      if constexpr (!Tr::exact)
        for (std::size_t r = row; r < m.rows(); ++r) m(r, col) = T(0);
      continue;
    }
    if (best != row)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(row, c), m(best, c));
    const T inv = T(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    m(row, col) = T(1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || Tr::is_zero(m(r, col), 0.0)) continue;
      const T f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
      m(r, col) = T(0);
    }
    pivots.push_back(col);
    ++row;
  }
  Matrix<T> trimmed(row, m.cols());
  for (std::size_t r = 0; r < row; ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) trimmed(r, c) = m(r, c);
  return {std::move(trimmed), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

/// Basis of {x : A x = 0}, returned as the columns of a cols(A) x nullity matrix.
template <class T>
Matrix<T> nullspace(const Matrix<T>& a) {
  Echelon<T> e = rref(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < n; ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix<T> basis(n, free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = T(1);
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, free[k]);
  }
  return basis;
}

/// Solves A X = B for square nonsingular A. Throws on singular input.
template <class T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.rows() != a.cols() || a.rows() != b.rows()) throw std::invalid_argument("solve shape mismatch");
  const std::size_t n = a.rows();
  Echelon<T> e = rref(hstack(a, b));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1))
    throw std::domain_error("singular matrix");
  Matrix<T> x(n, b.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) x(r, c) = e.reduced(r, n + c);
  return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& a) {
  return solve(a, Matrix<T>::identity(a.rows()));
}

template <class T>
bool is_symmetric(const Matrix<T>& m) {
  if (m.rows() != m.cols()) return false;
  const double scale = m.max_magnitude();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i + 1; j < m.cols(); ++j)
      if (!ScalarTraits<T>::equal(m(i, j), m(j, i), scale)) return false;
  return true;
}

/// Symmetric positive definite test via pivots of Gaussian elimination
/// without row exchanges (all pivots positive iff SPD).
template <class T>
bool is_positive_definite(Matrix<T> m) {
  if (!is_symmetric(m)) return false;
  const double scale = m.max_magnitude();
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (!(m(k, k) > T(0)) || ScalarTraits<T>::is_zero(m(k, k), scale)) return false;
    for (std::size_t r = k + 1; r < m.rows(); ++r) {
      const T f = m(r, k) / m(k, k);
      for (std::size_t c = k; c < m.cols(); ++c) m(r, c) -= f * m(k, c);
    }
  }
  return true;
}

template <class T, class U>
Matrix<T> convert(const Matrix<U>& m) {
  Matrix<T> out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if constexpr (std::is_same_v<U, Rational>)
        out(r, c) = ScalarTraits<T>::from_rational(m(r, c));
      else
        out(r, c) = static_cast<T>(m(r, c));
    }
  return out;
}

}  // namespace gpd
