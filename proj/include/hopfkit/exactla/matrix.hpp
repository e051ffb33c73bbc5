#pragma once

#include <cassert>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfkit/exactla/field.hpp"

namespace hopfkit {

template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(size_t n, const FieldOf<K>& F) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = F.one();
    return m;
  }
  static Matrix from_rows(const std::vector<Vec<K>>& rows, size_t cols) {
    Matrix m(rows.size(), cols);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
      for (size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_columns(const std::vector<Vec<K>>& cols, size_t rows) {
    Matrix m(rows, cols.size());
    for (size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  K& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const K& operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  const std::vector<K>& data() const { return a_; }
  std::vector<K>& data() { return a_; }

  Vec<K> row(size_t i) const { return Vec<K>(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_); }
  Vec<K> col(size_t j) const {
    Vec<K> c(rows_);
    for (size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }
  void set_row(size_t i, const Vec<K>& v) {
    for (size_t j = 0; j < cols_; ++j) (*this)(i, j) = v[j];
  }
  void set_col(size_t j, const Vec<K>& v) {
    for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }
  bool is_square() const { return rows_ == cols_; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Vec<K> apply(const Vec<K>& v) const {
    if (v.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    Vec<K> r(rows_);
    for (size_t j = 0; j < cols_; ++j) {
      if (v[j].is_zero()) continue;
      for (size_t i = 0; i < rows_; ++i) {
        const K& x = (*this)(i, j);
        if (!x.is_zero()) r[i] += x * v[j];
      }
    }
    return r;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
    Matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const K& x = a(i, k);
        if (x.is_zero()) continue;
        for (size_t j = 0; j < b.cols_; ++j) {
          const K& y = b(k, j);
          if (!y.is_zero()) r(i, j) += x * y;
        }
      }
    return r;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r(a);
    for (size_t i = 0; i < r.a_.size(); ++i)
      if (!b.a_[i].is_zero()) r.a_[i] += b.a_[i];
    return r;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix r(a);
    for (size_t i = 0; i < r.a_.size(); ++i)
      if (!b.a_[i].is_zero()) r.a_[i] -= b.a_[i];
    return r;
  }
  friend Matrix operator*(const K& c, const Matrix& a) {
    Matrix r(a.rows_, a.cols_);
    if (c.is_zero()) return r;
    for (size_t i = 0; i < r.a_.size(); ++i)
      if (!a.a_[i].is_zero()) r.a_[i] = c * a.a_[i];
    return r;
  }
  Matrix& operator+=(const Matrix& b) {
    check_same(*this, b);
    for (size_t i = 0; i < a_.size(); ++i)
      if (!b.a_[i].is_zero()) a_[i] += b.a_[i];
    return *this;
  }
  // this += c * b
  void add_scaled(const K& c, const Matrix& b) {
    check_same(*this, b);
    if (c.is_zero()) return;
    for (size_t i = 0; i < a_.size(); ++i)
      if (!b.a_[i].is_zero()) a_[i] += c * b.a_[i];
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  // Row-major flattening, used when matrices are treated as vectors.
  Vec<K> flatten() const { return a_; }
  static Matrix unflatten(const Vec<K>& v, size_t rows, size_t cols) {
    if (v.size() != rows * cols) throw std::invalid_argument("flattened size mismatch");
    Matrix m(rows, cols);
    m.a_ = v;
    return m;
  }

  Matrix submatrix(const std::vector<size_t>& rs, const std::vector<size_t>& cs) const {
    Matrix m(rs.size(), cs.size());
    for (size_t i = 0; i < rs.size(); ++i)
      for (size_t j = 0; j < cs.size(); ++j) m(i, j) = (*this)(rs[i], cs[j]);
    return m;
  }

  std::string to_string() const {
    std::string s = "[";
    for (size_t i = 0; i < rows_; ++i) {
      s += i ? ", [" : "[";
      for (size_t j = 0; j < cols_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
      s += "]";
    }
    return s + "]";
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("dimension mismatch");
  }
  size_t rows_ = 0, cols_ = 0;
  std::vector<K> a_;
};

template <class K>
Matrix<K> kron(const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> r(a.rows() * b.rows(), a.cols() * b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) {
      const K& x = a(i, j);
      if (x.is_zero()) continue;
      for (size_t k = 0; k < b.rows(); ++k)
        for (size_t l = 0; l < b.cols(); ++l) {
          const K& y = b(k, l);
          if (!y.is_zero()) r(i * b.rows() + k, j * b.cols() + l) = x * y;
        }
    }
  return r;
}

template <class K>
Matrix<K> block_diag(const Matrix<K>& a, const Matrix<K>& b) {
  Matrix<K> r(a.rows() + b.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, a.cols() + j) = b(i, j);
  return r;
}

template <class K>
Matrix<K> hstack(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack row mismatch");
  Matrix<K> r(a.rows(), a.cols() + b.cols());
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
    for (size_t j = 0; j < b.cols(); ++j) r(i, a.cols() + j) = b(i, j);
  }
  return r;
}

template <class K>
Matrix<K> vstack(const Matrix<K>& a, const Matrix<K>& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack column mismatch");
  Matrix<K> r(a.rows() + b.rows(), a.cols());
  for (size_t i = 0; i < a.rows(); ++i)
    for (size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (size_t i = 0; i < b.rows(); ++i)
    for (size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

}  // namespace hopfkit
