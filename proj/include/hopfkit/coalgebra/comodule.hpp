#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfkit/coalgebra/coalgebra.hpp"

namespace hopfkit {

// Comodule given by one coefficient matrix per coalgebra basis element c_l:
//   right: rho(v)    = sum_l (T_l v) (x) c_l     (tensor index r*dimC + l)
//   left:  lambda(v) = sum_l c_l (x) (T_l v)     (tensor index l*dim + r)
template <class K>
class Comodule {
 public:
  Comodule(CoalgebraPtr<K> c, Side side, size_t dim, std::vector<Matrix<K>> coeff)
      : c_(std::move(c)), side_(side), dim_(dim), coeff_(std::move(coeff)) {
    if (coeff_.size() != c_->dim()) throw InputError("comodule needs one coefficient matrix per coalgebra basis element");
    for (auto& m : coeff_)
      if (m.rows() != dim_ || m.cols() != dim_) throw InputError("coefficient matrix has wrong size");
  }

  const CoalgebraPtr<K>& coalgebra_ptr() const { return c_; }
  const Coalgebra<K>& coalgebra() const { return *c_; }
  const FieldOf<K>& field() const { return c_->field(); }
  Side side() const { return side_; }
  size_t dim() const { return dim_; }
  const std::vector<Matrix<K>>& coefficients() const { return coeff_; }
  const Matrix<K>& coefficient(size_t l) const { return coeff_[l]; }

  Vec<K> coact(const Vec<K>& v) const {
    size_t dc = c_->dim();
    Vec<K> out(dim_ * dc);
    for (size_t l = 0; l < dc; ++l) {
      Vec<K> w = coeff_[l].apply(v);
      for (size_t r = 0; r < dim_; ++r) {
        if (w[r].is_zero()) continue;
        if (side_ == Side::Right)
          out[r * dc + l] = w[r];
        else
          out[l * dim_ + r] = w[r];
      }
    }
    return out;
  }

 private:
  CoalgebraPtr<K> c_;
  Side side_;
  size_t dim_;
  std::vector<Matrix<K>> coeff_;
};

// right: T_m T_l = sum_k Delta_k^{ml} T_k; left: T_m T_l = sum_k Delta_k^{lm} T_k; sum_l eps_l T_l = id.
template <class K>
ValidationReport validate_comodule(const Comodule<K>& m) {
  ValidationReport rep;
  const auto& c = m.coalgebra();
  size_t n = c.dim();
  Matrix<K> ecount(m.dim(), m.dim());
  for (size_t l = 0; l < n; ++l) ecount.add_scaled(c.counit()[l], m.coefficient(l));
  if (ecount != Matrix<K>::identity(m.dim(), m.field())) rep.add("comodule counit", {});
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) {
      Matrix<K> rhs(m.dim(), m.dim());
      for (size_t k = 0; k < n; ++k) {
        const K& x = m.side() == Side::Right ? c.coeff(k, a, b) : c.coeff(k, b, a);
        if (!x.is_zero()) rhs.add_scaled(x, m.coefficient(k));
      }
      if (m.coefficient(a) * m.coefficient(b) != rhs)
        rep.add("comodule coassociativity", {a, b}, c.labels()[a] + "," + c.labels()[b]);
    }
  return rep;
}

template <class K>
Comodule<K> regular_comodule(const CoalgebraPtr<K>& c, Side side) {
  size_t n = c->dim();
  std::vector<Matrix<K>> coeff(n, Matrix<K>(n, n));
  for (size_t col = 0; col < n; ++col)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        const K& x = c->coeff(col, i, j);
        if (x.is_zero()) continue;
        if (side == Side::Right)
          coeff[j](i, col) += x;  // e_i (x) c_j
        else
          coeff[i](j, col) += x;  // c_i (x) e_j
      }
  return Comodule<K>(c, side, n, std::move(coeff));
}

// Coaction composed with a coalgebra map f: C -> D.
template <class K>
Comodule<K> comodule_pushforward(const Comodule<K>& m, const CoalgebraPtr<K>& d, const Matrix<K>& f) {
  std::vector<Matrix<K>> coeff(d->dim(), Matrix<K>(m.dim(), m.dim()));
  for (size_t l = 0; l < m.coalgebra().dim(); ++l)
    for (size_t t = 0; t < d->dim(); ++t)
      if (!f(t, l).is_zero()) coeff[t].add_scaled(f(t, l), m.coefficient(l));
  return Comodule<K>(d, m.side(), m.dim(), std::move(coeff));
}

template <class K>
Comodule<K> comodule_direct_sum(const Comodule<K>& x, const Comodule<K>& y) {
  if (x.side() != y.side()) throw InputError("comodule_direct_sum: side mismatch");
  std::vector<Matrix<K>> coeff;
  for (size_t l = 0; l < x.coalgebra().dim(); ++l) coeff.push_back(block_diag(x.coefficient(l), y.coefficient(l)));
  return Comodule<K>(x.coalgebra_ptr(), x.side(), x.dim() + y.dim(), std::move(coeff));
}

template <class K>
bool is_comodule_map(const Comodule<K>& m, const Comodule<K>& n, const Matrix<K>& f) {
  if (f.rows() != n.dim() || f.cols() != m.dim()) return false;
  for (size_t l = 0; l < m.coalgebra().dim(); ++l)
    if (n.coefficient(l) * f != f * m.coefficient(l)) return false;
  return true;
}

template <class K>
bool is_subcomodule(const Comodule<K>& m, const Subspace<K>& s) {
  for (auto& v : s.basis_vectors())
    for (auto& t : m.coefficients())
      if (!s.contains(t.apply(v))) return false;
  return true;
}

template <class K>
struct QuotientComodule {
  Comodule<K> comodule;
  Matrix<K> projection;
};

template <class K>
QuotientComodule<K> quotient_comodule(const Comodule<K>& m, const Subspace<K>& s) {
  if (!is_subcomodule(m, s)) throw InputError("quotient_comodule: subspace is not a subcomodule");
  auto np = s.nonpivots();
  size_t q = np.size();
  Matrix<K> proj(q, m.dim());
  for (size_t j = 0; j < m.dim(); ++j) proj.set_col(j, s.quotient_coordinates(unit_vec<K>(m.dim(), j, m.field())));
  std::vector<Matrix<K>> coeff;
  for (auto& t : m.coefficients()) {
    Matrix<K> r(q, q);
    for (size_t c = 0; c < q; ++c) r.set_col(c, s.quotient_coordinates(t.col(np[c])));
    coeff.push_back(r);
  }
  return {Comodule<K>(m.coalgebra_ptr(), m.side(), q, std::move(coeff)), std::move(proj)};
}

template <class K>
Comodule<K> subcomodule(const Comodule<K>& m, const Subspace<K>& s) {
  if (!is_subcomodule(m, s)) throw InputError("subcomodule: subspace is not stable");
  auto bv = s.basis_vectors();
  std::vector<Matrix<K>> coeff;
  for (auto& t : m.coefficients()) {
    Matrix<K> r(s.dim(), s.dim());
    for (size_t c = 0; c < bv.size(); ++c) r.set_col(c, s.coordinates(t.apply(bv[c])));
    coeff.push_back(r);
  }
  return Comodule<K>(m.coalgebra_ptr(), m.side(), s.dim(), std::move(coeff));
}

// V box_D W = ker(rho_V (x) id - id (x) lambda_W) inside V (x) W (index a*dim W + b).
template <class K>
Subspace<K> cotensor(const Comodule<K>& v, const Comodule<K>& w) {
  if (v.side() != Side::Right || w.side() != Side::Left) throw InputError("cotensor: need a right and a left comodule");
  if (v.coalgebra().dim() != w.coalgebra().dim()) throw InputError("cotensor: coalgebra mismatch");
  size_t dv = v.dim(), dw = w.dim(), dd = v.coalgebra().dim();
  if (dv == 0 || dw == 0) return Subspace<K>::zero(dv * dw);
  Matrix<K> sys(dv * dd * dw, dv * dw);
  for (size_t a = 0; a < dv; ++a)
    for (size_t b = 0; b < dw; ++b) {
      size_t col = a * dw + b;
      for (size_t l = 0; l < dd; ++l) {
        const auto& tv = v.coefficient(l);
        const auto& tw = w.coefficient(l);
        for (size_t r = 0; r < dv; ++r)
          if (!tv(r, a).is_zero()) sys((r * dd + l) * dw + b, col) += tv(r, a);
        for (size_t s = 0; s < dw; ++s)
          if (!tw(s, b).is_zero()) sys((a * dd + l) * dw + s, col) -= tw(s, b);
      }
    }
  return linear_kernel(sys, v.field());
}

// M_C = {m : lambda(m) in C (x) M} for a left comodule M and subcoalgebra C.
template <class K>
Subspace<K> comodule_part(const Comodule<K>& m, const Subspace<K>& c) {
  if (m.side() != Side::Left) throw InputError("comodule_part: need a left comodule");
  const auto& D = m.coalgebra();
  if (!is_subcoalgebra(D, c)) throw InputError("comodule_part: subspace is not a subcoalgebra");
  size_t d = m.dim();
  auto np = c.nonpivots();
  if (np.empty()) return Subspace<K>::full(d, m.field());
  // sum_l pi(c_l) (x) T_l m = 0 for the projection pi: D -> D/C
  Matrix<K> sys(np.size() * d, d);
  for (size_t l = 0; l < D.dim(); ++l) {
    auto pl = c.quotient_coordinates(unit_vec<K>(D.dim(), l, m.field()));
    for (size_t t = 0; t < np.size(); ++t) {
      if (pl[t].is_zero()) continue;
      const auto& T = m.coefficient(l);
      for (size_t r = 0; r < d; ++r)
        for (size_t col = 0; col < d; ++col)
          if (!T(r, col).is_zero()) sys(t * d + r, col) += pl[t] * T(r, col);
    }
  }
  return linear_kernel(sys, m.field());
}

}  // namespace hopfkit
