#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hopfkit/exactla/echelon.hpp"

namespace hopfkit {

// Subspace of K^n held as a canonical RREF basis; equal subspaces have identical bases.
template <class K>
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(size_t ambient) : n_(ambient), basis_(0, ambient) {}

  static Subspace zero(size_t n) { return Subspace(n); }
  static Subspace full(size_t n, const FieldOf<K>& F) {
    Subspace s(n);
    s.basis_ = Matrix<K>::identity(n, F);
    s.piv_.resize(n);
    for (size_t i = 0; i < n; ++i) s.piv_[i] = i;
    return s;
  }
  static Subspace span(const Matrix<K>& rows) {
    Subspace s(rows.cols());
    if (rows.rows() == 0) return s;
    auto e = row_reduce(rows);
    s.basis_ = std::move(e.rref);
    s.piv_ = std::move(e.pivots);
    return s;
  }
  static Subspace span(size_t n, const std::vector<Vec<K>>& vs) { return span(Matrix<K>::from_rows(vs, n)); }

  size_t ambient() const { return n_; }
  size_t dim() const { return piv_.size(); }
  bool is_zero() const { return piv_.empty(); }
  bool is_full() const { return piv_.size() == n_; }
  const Matrix<K>& basis() const { return basis_; }
  Vec<K> basis_vector(size_t i) const { return basis_.row(i); }
  std::vector<Vec<K>> basis_vectors() const {
    std::vector<Vec<K>> out;
    for (size_t i = 0; i < dim(); ++i) out.push_back(basis_.row(i));
    return out;
  }
  const std::vector<size_t>& pivots() const { return piv_; }

  std::vector<size_t> nonpivots() const {
    std::vector<size_t> out;
    size_t r = 0;
    for (size_t j = 0; j < n_; ++j) {
      if (r < piv_.size() && piv_[r] == j) {
        ++r;
        continue;
      }
      out.push_back(j);
    }
    return out;
  }

  // Remainder of v after eliminating the pivot coordinates.
  Vec<K> reduce(Vec<K> v) const {
    check(v);
    for (size_t r = 0; r < piv_.size(); ++r) {
      K c = v[piv_[r]];
      if (c.is_zero()) continue;
      for (size_t j = piv_[r]; j < n_; ++j)
        if (!basis_(r, j).is_zero()) v[j] -= c * basis_(r, j);
    }
    return v;
  }
  bool contains(const Vec<K>& v) const { return is_zero_vec(reduce(v)); }

  // Coordinates with respect to the RREF basis (valid only for members).
  Vec<K> coordinates(const Vec<K>& v) const {
    check(v);
    Vec<K> c(piv_.size());
    for (size_t r = 0; r < piv_.size(); ++r) c[r] = v[piv_[r]];
    return c;
  }
  Vec<K> combine(const Vec<K>& coords) const {
    Vec<K> v(n_);
    for (size_t r = 0; r < piv_.size(); ++r) {
      if (coords[r].is_zero()) continue;
      for (size_t j = 0; j < n_; ++j)
        if (!basis_(r, j).is_zero()) v[j] += coords[r] * basis_(r, j);
    }
    return v;
  }
  // Coordinates of the image in the quotient K^n / this, on the non-pivot basis.
  Vec<K> quotient_coordinates(const Vec<K>& v) const {
    Vec<K> red = reduce(v);
    auto np = nonpivots();
    Vec<K> out(np.size());
    for (size_t i = 0; i < np.size(); ++i) out[i] = red[np[i]];
    return out;
  }

  bool is_subspace_of(const Subspace& o) const {
    if (o.n_ != n_) throw std::invalid_argument("ambient mismatch");
    for (size_t r = 0; r < dim(); ++r)
      if (!o.contains(basis_.row(r))) return false;
    return true;
  }

  Subspace operator+(const Subspace& o) const {
    if (o.n_ != n_) throw std::invalid_argument("ambient mismatch");
    if (o.is_zero()) return *this;
    if (is_zero()) return o;
    return span(vstack(basis_, o.basis_));
  }
  Subspace with(const std::vector<Vec<K>>& extra) const {
    if (extra.empty()) return *this;
    return *this + span(n_, extra);
  }

  // {w : <v, w> = 0 for all v in this} under the standard pairing.
  Subspace annihilator(const FieldOf<K>& F) const;

  Subspace intersect(const Subspace& o, const FieldOf<K>& F) const {
    if (o.n_ != n_) throw std::invalid_argument("ambient mismatch");
    return (annihilator(F) + o.annihilator(F)).annihilator(F);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.piv_ == b.piv_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  void check(const Vec<K>& v) const {
    if (v.size() != n_) throw std::invalid_argument("vector length does not match ambient dimension");
  }
  size_t n_ = 0;
  Matrix<K> basis_;
  std::vector<size_t> piv_;
};

// {v : m v = 0}.
template <class K>
Subspace<K> linear_kernel(const Matrix<K>& m, const FieldOf<K>& F) {
  size_t n = m.cols();
  if (m.rows() == 0) return Subspace<K>::full(n, F);
  auto e = row_reduce(m);
  std::vector<bool> is_piv(n, false);
  for (auto p : e.pivots) is_piv[p] = true;
  std::vector<Vec<K>> basis;
  for (size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    Vec<K> v(n);
    v[f] = F.one();
    for (size_t r = 0; r < e.rank(); ++r)
      if (!e.rref(r, f).is_zero()) v[e.pivots[r]] = -e.rref(r, f);
    basis.push_back(std::move(v));
  }
  return Subspace<K>::span(n, basis);
}

template <class K>
Subspace<K> Subspace<K>::annihilator(const FieldOf<K>& F) const {
  return linear_kernel(basis_, F);
}

// Image (column space) of m.
template <class K>
Subspace<K> image(const Matrix<K>& m) {
  return Subspace<K>::span(m.transpose());
}

// Preimage {v : m v in target}.
template <class K>
Subspace<K> preimage(const Matrix<K>& m, const Subspace<K>& target, const FieldOf<K>& F) {
  auto ann = target.annihilator(F);
  if (ann.is_zero()) return Subspace<K>::full(m.cols(), F);
  return linear_kernel(ann.basis() * m, F);
}

// Solve m v = target with v constrained to a subspace; canonical in the subspace coordinates.
template <class K>
std::optional<Vec<K>> solve_affine_in(const Matrix<K>& m, const Vec<K>& target, const Subspace<K>& domain) {
  Matrix<K> param = domain.basis().transpose();  // cols(m) x dim
  auto c = solve_affine(m * param, target);
  if (!c) return std::nullopt;
  return param.apply(*c);
}

}  // namespace hopfkit
