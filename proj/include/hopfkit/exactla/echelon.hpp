#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hopfkit/exactla/matrix.hpp"

namespace hopfkit {

template <class K>
struct Echelon {
  Matrix<K> rref;               // only the nonzero rows
  std::vector<size_t> pivots;   // pivot column of each row
  size_t rank() const { return pivots.size(); }
};

namespace detail {

// Fraction-free Gauss-Jordan on an integer matrix; every intermediate entry
// is a minor of the input, so the divisions by the previous pivot are exact.
inline std::vector<size_t> bareiss_jordan(std::vector<std::vector<mpz_class>>& m, size_t cols, mpz_class& last) {
  size_t rows = m.size();
  std::vector<size_t> pivots;
  mpz_class prev = 1;
  size_t r = 0;
  mpz_class t;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const mpz_class piv = m[r][c];
    for (size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const mpz_class a = m[i][c];
      auto& row = m[i];
      const auto& prow = m[r];
      for (size_t j = 0; j < cols; ++j) {
        if (a == 0) {
          if (row[j] == 0) continue;
          t = piv * row[j];
        } else {
          t = piv * row[j];
          t -= a * prow[j];
        }
        if (prev != 1) mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        row[j] = t;
      }
    }
    prev = piv;
    pivots.push_back(c);
    ++r;
  }
  last = prev;
  return pivots;
}

inline std::vector<std::vector<mpz_class>> clear_denominators(const Matrix<Rational>& m) {
  std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i) {
    mpz_class l = 1;
    for (size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& v = m(i, j).value();
      if (v.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
    }
    for (size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& v = m(i, j).value();
      if (sgn(v) == 0) continue;
      out[i][j] = v.get_num() * (l / v.get_den());
    }
  }
  return out;
}

template <class K>
Echelon<K> gauss_jordan(Matrix<K> m) {
  size_t rows = m.rows(), cols = m.cols();
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r)
      for (size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    K inv = m(r, c).inverse();
    for (size_t j = c; j < cols; ++j)
      if (!m(r, j).is_zero()) m(r, j) = m(r, j) * inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      K a = m(i, c);
      if (a.is_zero()) continue;
      for (size_t j = c; j < cols; ++j)
        if (!m(r, j).is_zero()) m(i, j) -= a * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix<K> out(r, cols);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < cols; ++j) out(i, j) = m(i, j);
  return {std::move(out), std::move(pivots)};
}

}  // namespace detail

template <class K>
Echelon<K> row_reduce(const Matrix<K>& m) {
  if constexpr (is_rational_v<K>) {
    auto z = detail::clear_denominators(m);
    mpz_class last;
    auto pivots = detail::bareiss_jordan(z, m.cols(), last);
    Matrix<Rational> out(pivots.size(), m.cols());
    for (size_t i = 0; i < pivots.size(); ++i) {
      // Every pivot entry equals the last pivot after fraction-free Gauss-Jordan.
      const mpz_class& d = z[i][pivots[i]];
      for (size_t j = 0; j < m.cols(); ++j)
        if (z[i][j] != 0) out(i, j) = Rational(z[i][j], d);
    }
    return {std::move(out), std::move(pivots)};
  } else {
    return detail::gauss_jordan(m);
  }
}

template <class K>
size_t rank(const Matrix<K>& m) {
  return row_reduce(m).rank();
}

template <class K>
K determinant(const Matrix<K>& m) {
  if (!m.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  size_t n = m.rows();
  if (n == 0) {
    if constexpr (is_rational_v<K>) return Rational(1);
    else throw std::invalid_argument("empty determinant needs a field");
  }
  if constexpr (is_rational_v<K>) {
    mpz_class scale = 1;
    std::vector<std::vector<mpz_class>> z(n, std::vector<mpz_class>(n));
    for (size_t i = 0; i < n; ++i) {
      mpz_class l = 1;
      for (size_t j = 0; j < n; ++j) {
        const mpq_class& v = m(i, j).value();
        if (v.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den().get_mpz_t());
      }
      scale *= l;
      for (size_t j = 0; j < n; ++j) {
        const mpq_class& v = m(i, j).value();
        if (sgn(v) != 0) z[i][j] = v.get_num() * (l / v.get_den());
      }
    }
    // Classic Bareiss: the last pivot is the determinant up to the sign of the swaps.
    int sign = 1;
    mpz_class prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
      size_t p = k;
      while (p < n && z[p][k] == 0) ++p;
      if (p == n) return Rational(0);
      if (p != k) {
        std::swap(z[p], z[k]);
        sign = -sign;
      }
      for (size_t i = k + 1; i < n; ++i) {
        for (size_t j = k + 1; j < n; ++j) {
          mpz_class t = z[k][k] * z[i][j] - z[i][k] * z[k][j];
          mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
          z[i][j] = t;
        }
        z[i][k] = 0;
      }
      prev = z[k][k];
    }
    mpz_class d = z[n - 1][n - 1] * sign;
    return Rational(d, scale);
  } else {
    Matrix<K> a(m);
    K det;
    bool first = true;
    for (size_t k = 0; k < n; ++k) {
      size_t p = k;
      while (p < n && a(p, k).is_zero()) ++p;
      if (p == n) return K();
      bool swapped = p != k;
      if (swapped)
        for (size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      K piv = a(k, k);
      if (first) {
        det = swapped ? -piv : piv;
        first = false;
      } else {
        det = det * (swapped ? -piv : piv);
      }
      K inv = piv.inverse();
      for (size_t i = k + 1; i < n; ++i) {
        if (a(i, k).is_zero()) continue;
        K f = a(i, k) * inv;
        for (size_t j = k; j < n; ++j)
          if (!a(k, j).is_zero()) a(i, j) -= f * a(k, j);
      }
    }
    return det;
  }
}

template <class K>
bool is_invertible(const Matrix<K>& m) {
  return m.is_square() && rank(m) == m.rows();
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& m, const FieldOf<K>& F) {
  if (!m.is_square()) return std::nullopt;
  size_t n = m.rows();
  auto e = row_reduce(hstack(m, Matrix<K>::identity(n, F)));
  if (e.rank() < n || (n > 0 && e.pivots[n - 1] >= n)) return std::nullopt;
  Matrix<K> inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  return inv;
}

// Canonical solution of m v = target: free coordinates set to zero.
template <class K>
std::optional<Vec<K>> solve_affine(const Matrix<K>& m, const Vec<K>& target) {
  if (target.size() != m.rows()) throw std::invalid_argument("dimension mismatch in solve_affine");
  Matrix<K> aug(m.rows(), m.cols() + 1);
  for (size_t i = 0; i < m.rows(); ++i) {
    for (size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = target[i];
  }
  auto e = row_reduce(aug);
  Vec<K> v(m.cols());
  for (size_t r = 0; r < e.rank(); ++r) {
    if (e.pivots[r] == m.cols()) return std::nullopt;
    v[e.pivots[r]] = e.rref(r, m.cols());
  }
#ifdef HOPFKIT_CHECKED
  if (m.apply(v) != target) throw std::logic_error("solve_affine post-check failed");
#endif
  return v;
}

}  // namespace hopfkit
