#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/coalgebra.hpp"

namespace hopfkit {

// Hopf algebra: algebra and coalgebra on the same basis plus the antipode (column j = s(e_j)).
template <class K>
class HopfAlgebra {
 public:
  HopfAlgebra(AlgebraPtr<K> a, CoalgebraPtr<K> c, Matrix<K> s, std::optional<Matrix<K>> s_inv = std::nullopt,
              std::string name = {})
      : a_(std::move(a)), c_(std::move(c)), s_(std::move(s)), s_inv_(std::move(s_inv)), name_(std::move(name)) {
    if (a_->dim() != c_->dim()) throw InputError("algebra and coalgebra dimensions differ");
    if (s_.rows() != a_->dim() || s_.cols() != a_->dim()) throw InputError("antipode has wrong size");
    if (s_inv_ && (s_inv_->rows() != a_->dim() || s_inv_->cols() != a_->dim()))
      throw InputError("antipode inverse has wrong size");
  }

  const AlgebraPtr<K>& algebra_ptr() const { return a_; }
  const CoalgebraPtr<K>& coalgebra_ptr() const { return c_; }
  const Algebra<K>& algebra() const { return *a_; }
  const Coalgebra<K>& coalgebra() const { return *c_; }
  const FieldOf<K>& field() const { return a_->field(); }
  size_t dim() const { return a_->dim(); }
  const std::vector<std::string>& labels() const { return a_->labels(); }
  const Matrix<K>& antipode() const { return s_; }
  const std::optional<Matrix<K>>& antipode_inverse() const { return s_inv_; }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& notes() const { return notes_; }
  void add_note(std::string n) { notes_.push_back(std::move(n)); }

  Vec<K> s(const Vec<K>& v) const { return s_.apply(v); }
  Vec<K> delta(const Vec<K>& v) const { return c_->comultiply(v); }
  K eps(const Vec<K>& v) const { return c_->counit_of(v); }

 private:
  AlgebraPtr<K> a_;
  CoalgebraPtr<K> c_;
  Matrix<K> s_;
  std::optional<Matrix<K>> s_inv_;
  std::string name_;
  std::vector<std::string> notes_;
};

template <class K>
using HopfPtr = std::shared_ptr<const HopfAlgebra<K>>;

template <class K>
HopfPtr<K> share(HopfAlgebra<K> h) {
  return std::make_shared<const HopfAlgebra<K>>(std::move(h));
}

// Product in A (x) B of tensor vectors (index i*dim B + j).
template <class K>
Vec<K> tensor_multiply(const Algebra<K>& a, const Algebra<K>& b, const Vec<K>& u, const Vec<K>& v) {
  size_t na = a.dim(), nb = b.dim();
  Vec<K> out(na * nb);
  for (size_t p = 0; p < u.size(); ++p) {
    if (u[p].is_zero()) continue;
    size_t i = p / nb, j = p % nb;
    for (size_t q = 0; q < v.size(); ++q) {
      if (v[q].is_zero()) continue;
      size_t k = q / nb, l = q % nb;
      K c = u[p] * v[q];
      for (auto& [x, cx] : a.basis_product_sparse(i, k))
        for (auto& [y, cy] : b.basis_product_sparse(j, l)) out[x * nb + y] += c * cx * cy;
    }
  }
  return out;
}

template <class K>
ValidationReport validate_hopf(const HopfAlgebra<K>& h) {
  ValidationReport rep;
  const auto& A = h.algebra();
  const auto& C = h.coalgebra();
  const auto& F = h.field();
  size_t n = h.dim();
  rep.merge(validate_algebra(A), "algebra");
  rep.merge(validate_coalgebra(C), "coalgebra");
  // bialgebra
  if (h.delta(A.unit()) != tensor_vec(A.unit(), A.unit())) rep.add("Delta(1) = 1(x)1", {});
  if (h.eps(A.unit()) != F.one()) rep.add("eps(1) = 1", {});
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const auto& ij = A.basis_product(i, j);
      if (h.delta(ij) != tensor_multiply(A, A, C.comult_basis(i), C.comult_basis(j)))
        rep.add("Delta multiplicative", {i, j}, A.labels()[i] + "," + A.labels()[j]);
      if (h.eps(ij) != C.counit()[i] * C.counit()[j])
        rep.add("eps multiplicative", {i, j}, A.labels()[i] + "," + A.labels()[j]);
    }
  // antipode: sum s(h1) h2 = eps(h) 1 = sum h1 s(h2)
  for (size_t l = 0; l < n; ++l) {
    Vec<K> left(n), right(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        const K& c = C.coeff(l, i, j);
        if (c.is_zero()) continue;
        axpy(left, c, A.multiply(h.antipode().col(i), A.basis_vector(j)));
        axpy(right, c, A.multiply(A.basis_vector(i), h.antipode().col(j)));
      }
    Vec<K> target = scale_vec(C.counit()[l], A.unit());
    if (left != target) rep.add("antipode left", {l}, "s(h1)h2 != eps(h)1 for h = " + A.labels()[l]);
    if (right != target) rep.add("antipode right", {l}, "h1 s(h2) != eps(h)1 for h = " + A.labels()[l]);
  }
  // derived sanity: s is an algebra anti-morphism
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (h.s(A.basis_product(i, j)) != A.multiply(h.antipode().col(j), h.antipode().col(i)))
        rep.add("antipode anti-multiplicative", {i, j}, A.labels()[i] + "," + A.labels()[j]);
  if (h.antipode_inverse()) {
    auto id = Matrix<K>::identity(n, F);
    if (h.antipode() * *h.antipode_inverse() != id || *h.antipode_inverse() * h.antipode() != id)
      rep.add("antipode inverse", {});
  }
  return rep;
}

// Order of s as a linear map (0 if above `limit`).
template <class K>
size_t antipode_order(const HopfAlgebra<K>& h, size_t limit = 64) {
  auto id = Matrix<K>::identity(h.dim(), h.field());
  Matrix<K> p = h.antipode();
  for (size_t k = 1; k <= limit; ++k) {
    if (p == id) return k;
    p = p * h.antipode();
  }
  return 0;
}

// H^op with the same coalgebra and antipode s^{-1} (the anti-Hopf variant).
template <class K>
HopfAlgebra<K> opposite_hopf(const HopfAlgebra<K>& h) {
  Matrix<K> sinv = h.antipode_inverse() ? *h.antipode_inverse() : [&] {
    auto inv = inverse(h.antipode(), h.field());
    if (!inv) throw InputError("opposite_hopf: antipode is not bijective");
    return *inv;
  }();
  return HopfAlgebra<K>(opposite_of(h.algebra()), h.coalgebra_ptr(), sinv, h.antipode(), h.name() + "^op");
}

// One structure constant changed by +1.
struct Mutation {
  enum Kind { Mult, Unit, Comult, Counit, Antipode } kind;
  size_t a = 0, b = 0, c = 0;  // Mult: e_a e_b coeff c; Comult: Delta(e_a) coeff (b,c); Antipode: (a,b)
  std::string describe() const {
    static const char* names[] = {"mult", "unit", "comult", "counit", "antipode"};
    return std::string(names[kind]) + "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
  }
  // Basis elements the mutated constant is attached to.
  std::vector<size_t> touched() const {
    switch (kind) {
      case Mult: return {a, b, c};
      case Comult: return {a, b, c};
      case Antipode: return {a, b};
      default: return {a};
    }
  }
};

template <class K>
std::vector<Mutation> all_mutations(const HopfAlgebra<K>& h) {
  std::vector<Mutation> out;
  size_t n = h.dim();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c) out.push_back({Mutation::Mult, a, b, c});
  for (size_t a = 0; a < n; ++a) out.push_back({Mutation::Unit, a, 0, 0});
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b)
      for (size_t c = 0; c < n; ++c) out.push_back({Mutation::Comult, a, b, c});
  for (size_t a = 0; a < n; ++a) out.push_back({Mutation::Counit, a, 0, 0});
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) out.push_back({Mutation::Antipode, a, b, 0});
  return out;
}

template <class K>
HopfAlgebra<K> apply_mutation(const HopfAlgebra<K>& h, const Mutation& m) {
  const auto& A = h.algebra();
  const auto& C = h.coalgebra();
  const auto& F = h.field();
  size_t n = h.dim();
  std::vector<Vec<K>> mult;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) mult.push_back(A.basis_product(i, j));
  Vec<K> unit = A.unit();
  std::vector<Vec<K>> comult;
  for (size_t l = 0; l < n; ++l) comult.push_back(C.comult_basis(l));
  Vec<K> counit = C.counit();
  Matrix<K> s = h.antipode();
  switch (m.kind) {
    case Mutation::Mult: mult[m.a * n + m.b][m.c] += F.one(); break;
    case Mutation::Unit: unit[m.a] += F.one(); break;
    case Mutation::Comult: comult[m.a][m.b * n + m.c] += F.one(); break;
    case Mutation::Counit: counit[m.a] += F.one(); break;
    case Mutation::Antipode: s(m.a, m.b) += F.one(); break;
  }
  return HopfAlgebra<K>(share(Algebra<K>(F, A.labels(), mult, unit)), share(Coalgebra<K>(F, C.labels(), comult, counit)),
                        s, std::nullopt, h.name() + "/" + m.describe());
}

}  // namespace hopfkit
