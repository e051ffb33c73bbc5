#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hopfkit/algebra/algebra.hpp"

namespace hopfkit {

enum class Side { Left, Right };

inline const char* side_name(Side s) { return s == Side::Left ? "left" : "right"; }

// Finite-dimensional module; act[i] is the matrix of the basis element e_i
// acting on column vectors (m -> m e_i for right modules, m -> e_i m for left).
template <class K>
class Module {
 public:
  Module(AlgebraPtr<K> alg, Side side, size_t dim, std::vector<Matrix<K>> act)
      : alg_(std::move(alg)), side_(side), dim_(dim), act_(std::move(act)) {
    if (act_.size() != alg_->dim()) throw InputError("module needs one action matrix per algebra basis element");
    for (auto& m : act_)
      if (m.rows() != dim_ || m.cols() != dim_) throw InputError("action matrix has wrong size");
  }

  const AlgebraPtr<K>& algebra_ptr() const { return alg_; }
  const Algebra<K>& algebra() const { return *alg_; }
  const FieldOf<K>& field() const { return alg_->field(); }
  Side side() const { return side_; }
  size_t dim() const { return dim_; }
  const std::vector<Matrix<K>>& actions() const { return act_; }
  const Matrix<K>& action_basis(size_t i) const { return act_[i]; }

  Matrix<K> action(const Vec<K>& a) const {
    Matrix<K> m(dim_, dim_);
    for (size_t i = 0; i < a.size(); ++i) m.add_scaled(a[i], act_[i]);
    return m;
  }
  Vec<K> act(const Vec<K>& a, const Vec<K>& m) const { return action(a).apply(m); }

  // The same data seen as a right module over the opposite algebra (identity for right modules).
  Module as_right() const {
    if (side_ == Side::Right) return *this;
    return Module(opposite_of(*alg_), Side::Right, dim_, act_);
  }

 private:
  AlgebraPtr<K> alg_;
  Side side_;
  size_t dim_;
  std::vector<Matrix<K>> act_;
};

template <class K>
ValidationReport validate_module(const Module<K>& m) {
  ValidationReport rep;
  const auto& a = m.algebra();
  size_t n = a.dim();
  if (m.action(a.unit()) != Matrix<K>::identity(m.dim(), a.field())) rep.add("unit acts as identity", {});
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      Matrix<K> lhs = m.action(a.basis_product(i, j));
      Matrix<K> rhs = m.side() == Side::Right ? m.action_basis(j) * m.action_basis(i)
                                              : m.action_basis(i) * m.action_basis(j);
      if (lhs != rhs) rep.add("module associativity", {i, j}, a.labels()[i] + "," + a.labels()[j]);
    }
  return rep;
}

template <class K>
Module<K> regular_module(const AlgebraPtr<K>& a, Side side) {
  std::vector<Matrix<K>> act;
  for (size_t i = 0; i < a->dim(); ++i)
    act.push_back(side == Side::Right ? a->right_mult_basis(i) : a->left_mult_basis(i));
  return Module<K>(a, side, a->dim(), std::move(act));
}

template <class K>
Module<K> direct_sum(const Module<K>& x, const Module<K>& y) {
  if (x.side() != y.side() || x.algebra().dim() != y.algebra().dim()) throw InputError("direct_sum: incompatible modules");
  std::vector<Matrix<K>> act;
  for (size_t i = 0; i < x.algebra().dim(); ++i) act.push_back(block_diag(x.action_basis(i), y.action_basis(i)));
  return Module<K>(x.algebra_ptr(), x.side(), x.dim() + y.dim(), std::move(act));
}

template <class K>
Module<K> free_module(const AlgebraPtr<K>& a, Side side, size_t rank) {
  if (rank == 0) {
    std::vector<Matrix<K>> act(a->dim(), Matrix<K>(0, 0));
    return Module<K>(a, side, 0, act);
  }
  Module<K> m = regular_module(a, side);
  Module<K> r = m;
  for (size_t i = 1; i < rank; ++i) r = direct_sum(r, m);
  return r;
}

// Submodule generated by seeds.
template <class K>
Subspace<K> submodule_closure(const Module<K>& m, const std::vector<Vec<K>>& seeds) {
  return operator_closure(m.dim(), seeds, m.actions());
}

template <class K>
bool is_submodule(const Module<K>& m, const Subspace<K>& s) {
  for (auto& v : s.basis_vectors())
    for (auto& op : m.actions())
      if (!s.contains(op.apply(v))) return false;
  return true;
}

template <class K>
Module<K> submodule(const Module<K>& m, const Subspace<K>& s) {
  if (!is_submodule(m, s)) throw InputError("submodule: subspace is not stable");
  auto bv = s.basis_vectors();
  std::vector<Matrix<K>> act;
  for (auto& op : m.actions()) {
    Matrix<K> r(s.dim(), s.dim());
    for (size_t c = 0; c < bv.size(); ++c) r.set_col(c, s.coordinates(op.apply(bv[c])));
    act.push_back(r);
  }
  return Module<K>(m.algebra_ptr(), m.side(), s.dim(), std::move(act));
}

template <class K>
struct QuotientModule {
  Module<K> module;
  Matrix<K> projection;  // dim(M/S) x dim(M)
};

template <class K>
QuotientModule<K> quotient_module(const Module<K>& m, const Subspace<K>& s) {
  if (!is_submodule(m, s)) throw InputError("quotient_module: subspace is not a submodule");
  auto np = s.nonpivots();
  size_t q = np.size();
  Matrix<K> proj(q, m.dim());
  for (size_t j = 0; j < m.dim(); ++j) proj.set_col(j, s.quotient_coordinates(unit_vec<K>(m.dim(), j, m.field())));
  std::vector<Matrix<K>> act;
  for (auto& op : m.actions()) {
    Matrix<K> r(q, q);
    for (size_t t = 0; t < q; ++t) r.set_col(t, s.quotient_coordinates(op.col(np[t])));
    act.push_back(r);
  }
  return {Module<K>(m.algebra_ptr(), m.side(), q, std::move(act)), std::move(proj)};
}

// Linear dual with the opposite side: (a xi)(m) = xi(m a), (xi a)(m) = xi(a m).
template <class K>
Module<K> dual_module(const Module<K>& m) {
  std::vector<Matrix<K>> act;
  for (auto& op : m.actions()) act.push_back(op.transpose());
  return Module<K>(m.algebra_ptr(), m.side() == Side::Right ? Side::Left : Side::Right, m.dim(), std::move(act));
}

// M*X for a subspace X of the algebra: span of all x acting on M.
template <class K>
Subspace<K> module_times(const Module<K>& m, const Subspace<K>& x) {
  std::vector<Vec<K>> vs;
  for (auto& a : x.basis_vectors()) {
    Matrix<K> op = m.action(a);
    for (size_t c = 0; c < m.dim(); ++c) vs.push_back(op.col(c));
  }
  if (vs.empty()) return Subspace<K>::zero(m.dim());
  return Subspace<K>::span(m.dim(), vs);
}

// Module homomorphisms M -> N (same algebra and side), as flattened dim(N) x dim(M) matrices.
template <class K>
Subspace<K> hom_space(const Module<K>& m, const Module<K>& n) {
  if (m.side() != n.side() || m.algebra().dim() != n.algebra().dim()) throw InputError("hom_space: modules are incompatible");
  size_t dm = m.dim(), dn = n.dim();
  const auto& F = m.field();
  if (dm == 0 || dn == 0) return Subspace<K>::zero(dm * dn);
  // Impose f A^M_i = A^N_i f one generator at a time on the current solution space.
  std::vector<Matrix<K>> sol;
  for (size_t p = 0; p < dn; ++p)
    for (size_t q = 0; q < dm; ++q) {
      Matrix<K> e(dn, dm);
      e(p, q) = F.one();
      sol.push_back(std::move(e));
    }
  for (size_t i = 0; i < m.algebra().dim() && !sol.empty(); ++i) {
    const auto& am = m.action_basis(i);
    const auto& an = n.action_basis(i);
    std::vector<Vec<K>> residuals;
    for (auto& f : sol) residuals.push_back((f * am - an * f).flatten());
    auto k = linear_kernel(Matrix<K>::from_columns(residuals, dn * dm), F);
    std::vector<Matrix<K>> next;
    for (auto& c : k.basis_vectors()) {
      Matrix<K> f(dn, dm);
      for (size_t t = 0; t < sol.size(); ++t) f.add_scaled(c[t], sol[t]);
      next.push_back(std::move(f));
    }
    sol = std::move(next);
  }
  std::vector<Vec<K>> vs;
  for (auto& f : sol) vs.push_back(f.flatten());
  if (vs.empty()) return Subspace<K>::zero(dm * dn);
  return Subspace<K>::span(dm * dn, vs);
}

template <class K>
std::vector<Matrix<K>> hom_basis(const Module<K>& m, const Module<K>& n) {
  auto s = hom_space(m, n);
  std::vector<Matrix<K>> out;
  for (auto& v : s.basis_vectors()) out.push_back(Matrix<K>::unflatten(v, n.dim(), m.dim()));
  return out;
}

template <class K>
bool is_module_map(const Module<K>& m, const Module<K>& n, const Matrix<K>& f) {
  if (f.rows() != n.dim() || f.cols() != m.dim()) return false;
  for (size_t i = 0; i < m.algebra().dim(); ++i)
    if (f * m.action_basis(i) != n.action_basis(i) * f) return false;
  return true;
}

}  // namespace hopfkit
