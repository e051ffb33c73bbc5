#pragma once

#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "hopfkit/algebra.hpp"
#include "hopfkit/hopf.hpp"

namespace hopfkit {

// Right H-comodule algebra. The coaction is stored through its coefficient maps
// T_l = (id (x) xi_l) rho, so rho(a) = sum_l T_l(a) (x) h_l.
template <class K>
class ComoduleAlgebra {
 public:
  ComoduleAlgebra(AlgebraPtr<K> a, HopfPtr<K> h, std::vector<Matrix<K>> coeff, std::string name = {})
      : a_(std::move(a)), h_(std::move(h)), coeff_(std::move(coeff)), name_(std::move(name)) {
    if (coeff_.size() != h_->dim()) throw InputError("coaction needs one coefficient map per basis element of H");
    for (auto& m : coeff_)
      if (m.rows() != a_->dim() || m.cols() != a_->dim()) throw InputError("coefficient map has wrong size");
  }

  // rho(e_i) = sum of c (e_a (x) h_l) over the triples (a, l, c) listed for i.
  static ComoduleAlgebra from_triples(AlgebraPtr<K> a, HopfPtr<K> h,
                                      const std::vector<std::vector<std::tuple<size_t, size_t, K>>>& rho,
                                      std::string name = {}) {
    if (rho.size() != a->dim()) throw InputError("coaction needs one entry per basis element of A");
    std::vector<Matrix<K>> coeff(h->dim(), Matrix<K>(a->dim(), a->dim()));
    for (size_t i = 0; i < rho.size(); ++i)
      for (auto& [r, l, c] : rho[i]) {
        if (r >= a->dim() || l >= h->dim()) throw InputError("coaction triple index out of range");
        coeff[l](r, i) += c;
      }
    return ComoduleAlgebra(std::move(a), std::move(h), std::move(coeff), std::move(name));
  }

  const AlgebraPtr<K>& algebra_ptr() const { return a_; }
  const Algebra<K>& algebra() const { return *a_; }
  const HopfPtr<K>& hopf_ptr() const { return h_; }
  const HopfAlgebra<K>& hopf() const { return *h_; }
  const FieldOf<K>& field() const { return a_->field(); }
  size_t dim() const { return a_->dim(); }
  const std::string& name() const { return name_; }
  const std::vector<Matrix<K>>& coefficients() const { return coeff_; }
  const Matrix<K>& coefficient(size_t l) const { return coeff_[l]; }

  Comodule<K> comodule() const { return Comodule<K>(h_->coalgebra_ptr(), Side::Right, dim(), coeff_); }
  Vec<K> rho(const Vec<K>& a) const { return comodule().coact(a); }

  std::vector<std::tuple<size_t, size_t, K>> triples(size_t i) const {
    std::vector<std::tuple<size_t, size_t, K>> out;
    for (size_t r = 0; r < dim(); ++r)
      for (size_t l = 0; l < h_->dim(); ++l)
        if (!coeff_[l](r, i).is_zero()) out.emplace_back(r, l, coeff_[l](r, i));
    return out;
  }

 private:
  AlgebraPtr<K> a_;
  HopfPtr<K> h_;
  std::vector<Matrix<K>> coeff_;
  std::string name_;
};

template <class K>
using ComoduleAlgebraPtr = std::shared_ptr<const ComoduleAlgebra<K>>;

template <class K>
ComoduleAlgebraPtr<K> share(ComoduleAlgebra<K> c) {
  return std::make_shared<const ComoduleAlgebra<K>>(std::move(c));
}

template <class K>
ValidationReport validate_comodule_algebra(const ComoduleAlgebra<K>& ca) {
  ValidationReport rep;
  const auto& A = ca.algebra();
  const auto& H = ca.hopf();
  rep.merge(validate_algebra(A), "algebra");
  rep.merge(validate_comodule(ca.comodule()), "comodule");
  if (ca.rho(A.unit()) != tensor_vec(A.unit(), H.algebra().unit())) rep.add("rho(1) = 1 (x) 1", {});
  size_t n = A.dim();
  std::vector<Vec<K>> images;
  for (size_t i = 0; i < n; ++i) images.push_back(ca.rho(A.basis_vector(i)));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      auto lhs = ca.rho(A.basis_product(i, j));
      auto rhs = tensor_multiply(A, H.algebra(), images[i], images[j]);
      if (lhs != rhs) rep.add("rho multiplicative", {i, j}, A.labels()[i] + "*" + A.labels()[j]);
    }
  return rep;
}

// H over itself via Delta.
template <class K>
ComoduleAlgebra<K> regular_coaction(const HopfPtr<K>& h) {
  auto reg = regular_comodule(h->coalgebra_ptr(), Side::Right);
  return ComoduleAlgebra<K>(h->algebra_ptr(), h, reg.coefficients(), h->name() + " regular");
}

// a -> a (x) 1.
template <class K>
ComoduleAlgebra<K> trivial_coaction(const AlgebraPtr<K>& a, const HopfPtr<K>& h) {
  const auto& one = h->algebra().unit();
  std::vector<Matrix<K>> coeff;
  for (size_t l = 0; l < h->dim(); ++l) coeff.push_back(one[l] * Matrix<K>::identity(a->dim(), a->field()));
  return ComoduleAlgebra<K>(a, h, std::move(coeff), "trivial");
}

// Restriction of Delta to a subalgebra S of H with Delta(S) inside S (x) H.
template <class K>
ComoduleAlgebra<K> restricted_coaction(const HopfPtr<K>& h, const Subspace<K>& s, std::vector<std::string> labels = {}) {
  auto sub = subalgebra_from_span(h->algebra(), s, std::move(labels));
  size_t d = s.dim(), n = h->dim();
  auto bv = s.basis_vectors();
  std::vector<Matrix<K>> coeff(n, Matrix<K>(d, d));
  for (size_t j = 0; j < d; ++j) {
    auto dv = h->delta(bv[j]);
    for (size_t l = 0; l < n; ++l) {
      Vec<K> left(n);
      for (size_t r = 0; r < n; ++r) left[r] = dv[r * n + l];
      if (!s.contains(left)) throw InputError("restricted_coaction: Delta does not map the span into span (x) H");
      coeff[l].set_col(j, s.coordinates(left));
    }
  }
  return ComoduleAlgebra<K>(share(std::move(sub.algebra)), h, std::move(coeff), "restricted");
}

// R (x) A with coaction id (x) rho.
template <class K>
ComoduleAlgebra<K> tensor_with_algebra(const AlgebraPtr<K>& r, const ComoduleAlgebra<K>& ca) {
  auto ra = share(tensor_of_algebras(*r, ca.algebra()));
  std::vector<Matrix<K>> coeff;
  for (auto& t : ca.coefficients()) coeff.push_back(kron(Matrix<K>::identity(r->dim(), r->field()), t));
  return ComoduleAlgebra<K>(ra, ca.hopf_ptr(), std::move(coeff), "R (x) " + ca.name());
}

// A^H = {a : rho(a) = a (x) 1}.
template <class K>
SubAlgebra<K> invariants_subalgebra(const ComoduleAlgebra<K>& ca) {
  size_t n = ca.dim(), h = ca.hopf().dim();
  const auto& one = ca.hopf().algebra().unit();
  Matrix<K> sys(n * h, n);
  for (size_t l = 0; l < h; ++l) {
    Matrix<K> d = ca.coefficient(l) - one[l] * Matrix<K>::identity(n, ca.field());
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) sys(l * n + r, c) = d(r, c);
  }
  return subalgebra_from_span(ca.algebra(), linear_kernel(sys, ca.field()));
}

template <class K>
bool is_costable(const ComoduleAlgebra<K>& ca, const Subspace<K>& s) {
  for (auto& v : s.basis_vectors())
    for (auto& t : ca.coefficients())
      if (!s.contains(t.apply(v))) return false;
  return true;
}

template <class K>
struct CostableIdeal {
  Subspace<K> ideal;
  bool costable = false;  // verified rho(I) inside I (x) H
  bool is_ideal = false;
};

template <class K>
std::vector<Matrix<K>> costable_ideal_ops(const ComoduleAlgebra<K>& ca) {
  auto ops = two_sided_ops(ca.algebra());
  ops.insert(ops.end(), ca.coefficients().begin(), ca.coefficients().end());
  return ops;
}

template <class K>
CostableIdeal<K> costable_closure(const ComoduleAlgebra<K>& ca, const std::vector<Vec<K>>& seeds) {
  auto I = operator_closure(ca.dim(), seeds, costable_ideal_ops(ca));
  return {I, is_costable(ca, I), is_two_sided_ideal(ca.algebra(), I)};
}

// K = rho^{-1}(I (x) H) = intersection of T_l^{-1}(I).
template <class K>
CostableIdeal<K> largest_costable_inside(const ComoduleAlgebra<K>& ca, const Subspace<K>& I) {
  const auto& A = ca.algebra();
  if (!is_two_sided_ideal(A, I)) throw InputError("largest_costable_inside: not a two-sided ideal");
  size_t n = A.dim(), q = n - I.dim();
  if (q == 0) return {I, true, true};
  Matrix<K> proj(q, n);
  for (size_t j = 0; j < n; ++j) proj.set_col(j, I.quotient_coordinates(A.basis_vector(j)));
  Matrix<K> sys(0, n);
  for (auto& t : ca.coefficients()) sys = vstack(sys, proj * t);
  auto Kspace = linear_kernel(sys, ca.field());
  CostableIdeal<K> res{Kspace, is_costable(ca, Kspace), is_two_sided_ideal(A, Kspace)};
  if (!Kspace.is_subspace_of(I) || !res.costable || !res.is_ideal)
    throw std::logic_error("largest_costable_inside: rho^{-1}(I (x) H) failed its own checks");
  // Maximality probes: every element of I outside K generates a costable ideal leaving I.
  for (auto& v : I.basis_vectors()) {
    if (Kspace.contains(v)) continue;
    if (operator_closure(n, {v}, costable_ideal_ops(ca)).is_subspace_of(I))
      throw std::logic_error("largest_costable_inside: maximality probe failed");
  }
  return res;
}

// H-simplicity: A as a module over the algebra generated by L_a, R_a and the T_l.
template <class K>
SimplicityResult<K> is_h_simple(const ComoduleAlgebra<K>& ca, uint64_t seed = 0) {
  return operator_simplicity(ca.dim(), costable_ideal_ops(ca), ca.field(), seed);
}

}  // namespace hopfkit
