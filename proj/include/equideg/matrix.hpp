#pragma once

// Dense matrices and exact Gaussian elimination over an exact field.

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "equideg/cyclo.hpp"
#include "equideg/error.hpp"

namespace equideg::linalg {

template <class T>
struct FieldTraits;

template <>
struct FieldTraits<cyclo::Rational> {
  static bool is_zero(const cyclo::Rational& x) { return sgn(x) == 0; }
  static cyclo::Rational zero() { return 0; }
  static cyclo::Rational one() { return 1; }
};

template <>
struct FieldTraits<cyclo::Cyc> {
  static bool is_zero(const cyclo::Cyc& x) { return x.is_zero(); }
  static cyclo::Cyc zero() { return cyclo::Cyc(); }
  static cyclo::Cyc one() { return cyclo::Cyc(1); }
};

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, FieldTraits<T>::zero()) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldTraits<T>::one();
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw InputError("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols, std::size_t nrows) {
    Matrix m(nrows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
      for (std::size_t i = 0; i < nrows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!FieldTraits<T>::is_zero(x)) return false;
    return true;
  }

  T trace() const {
    T t = FieldTraits<T>::zero();
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) t += (*this)(i, i);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw InternalError("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (FieldTraits<T>::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.cols_ != v.size()) throw InternalError("matrix-vector shape mismatch");
    std::vector<T> out(a.rows_, FieldTraits<T>::zero());
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k)
        if (!FieldTraits<T>::is_zero(v[k])) out[i] += a(i, k) * v[k];
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InternalError("matrix sum shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }

  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InternalError("matrix difference shape mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x *= s;
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i)
      if (!(a.data_[i] == b.data_[i])) return false;
    return true;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
struct Echelon {
  Matrix<T> reduced;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Reduced row echelon form.
template <class T>
Echelon<T> rref(Matrix<T> m) {
  using F = FieldTraits<T>;
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && F::is_zero(m(p, c))) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    T inv = F::one() / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || F::is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(m), std::move(pivots)};
}

template <class T>
std::size_t rank(const Matrix<T>& m) {
  return rref(m).pivots.size();
}

/// Basis of the right kernel, as the columns of the returned matrix.
template <class T>
Matrix<T> kernel(const Matrix<T>& m) {
  using F = FieldTraits<T>;
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(m.cols(), F::zero());
    v[free] = F::one();
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return Matrix<T>::from_columns(basis, m.cols());
}

/// Some solution of a x = b, or nullopt if inconsistent.
template <class T>
std::optional<std::vector<T>> solve(const Matrix<T>& a, const std::vector<T>& b) {
  using F = FieldTraits<T>;
  if (b.size() != a.rows()) throw InternalError("solve: shape mismatch");
  Matrix<T> aug(a.rows(), a.cols() + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == a.cols()) return std::nullopt;
  std::vector<T> x(a.cols(), F::zero());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced(r, a.cols());
  return x;
}

/// Solves a X = b for a matrix right-hand side; throws if inconsistent.
template <class T>
Matrix<T> solve_matrix(const Matrix<T>& a, const Matrix<T>& b) {
  Matrix<T> x(a.cols(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto col = solve(a, b.column(j));
    if (!col) throw InternalError("solve_matrix: inconsistent system");
    for (std::size_t i = 0; i < a.cols(); ++i) x(i, j) = (*col)[i];
  }
  return x;
}

template <class T>
Matrix<T> inverse(const Matrix<T>& m) {
  if (!m.is_square()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = FieldTraits<T>::one();
  }
  auto e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
  Matrix<T> inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

template <class T>
T determinant(Matrix<T> m) {
  using F = FieldTraits<T>;
  if (!m.is_square()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  T det = F::one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && F::is_zero(m(p, c))) ++p;
    if (p == n) return F::zero();
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    T inv = F::one() / m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (F::is_zero(m(i, c))) continue;
      T f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

/// Characteristic polynomial det(x I - m), coefficients low to high (monic).
/// Reduction to Hessenberg form followed by the standard recurrence.
template <class T>
std::vector<T> charpoly(const Matrix<T>& m) {
  using F = FieldTraits<T>;
  if (!m.is_square()) throw DomainError("charpoly of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> h = m;
  // 1-based indices below mirror the textbook recurrence.
  auto H = [&](std::size_t i, std::size_t j) -> T& { return h(i - 1, j - 1); };
  for (std::size_t mm = 2; mm + 1 <= n; ++mm) {
    std::size_t i = mm;
    while (i <= n && F::is_zero(H(i, mm - 1))) ++i;
    if (i > n) continue;
    T t = H(i, mm - 1);
    if (i > mm) {
      for (std::size_t j = mm - 1; j <= n; ++j) std::swap(H(i, j), H(mm, j));
      for (std::size_t j = 1; j <= n; ++j) std::swap(H(j, i), H(j, mm));
    }
    for (std::size_t r = mm + 1; r <= n; ++r) {
      if (F::is_zero(H(r, mm - 1))) continue;
      T u = H(r, mm - 1) / t;
      for (std::size_t j = mm - 1; j <= n; ++j) H(r, j) -= u * H(mm, j);
      for (std::size_t j = 1; j <= n; ++j) H(j, mm) += u * H(j, r);
    }
  }
  // p[k] is the char poly of the leading k x k block.
  std::vector<std::vector<T>> p(n + 1);
  p[0] = {F::one()};
  for (std::size_t k = 1; k <= n; ++k) {
    std::vector<T> next(k + 1, F::zero());
    for (std::size_t d = 0; d < p[k - 1].size(); ++d) {
      next[d + 1] += p[k - 1][d];
      next[d] -= H(k, k) * p[k - 1][d];
    }
    T t = F::one();
    for (std::size_t i = 1; i + 1 <= k; ++i) {
      t *= H(k - i + 1, k - i);
      T c = t * H(k - i, k);
      for (std::size_t d = 0; d < p[k - i - 1].size(); ++d) next[d] -= c * p[k - i - 1][d];
    }
    p[k] = std::move(next);
  }
  return p[n];
}

}  // namespace equideg::linalg
