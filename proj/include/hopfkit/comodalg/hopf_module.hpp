#pragma once

#include <string>
#include <vector>

#include "hopfkit/comodalg/comodule_algebra.hpp"

namespace hopfkit {

// Object of M_A^H (module side Right) or _A M^H (module side Left): an A-module
// with a right H-comodule structure on the same space.
template <class K>
struct HopfModule {
  ComoduleAlgebraPtr<K> ca;
  Module<K> module;
  Comodule<K> coaction;
  std::string name;

  Side side() const { return module.side(); }
  size_t dim() const { return module.dim(); }
};

namespace detail {

// rho_M(m) rho_A(a) for the right side, rho_A(a) rho_M(m) for the left side, in M (x) H.
template <class K>
Vec<K> hopf_module_product(const HopfModule<K>& m, const Vec<K>& vm, const Vec<K>& va) {
  const auto& H = m.ca->hopf().algebra();
  size_t dh = H.dim(), dm = m.dim(), da = m.ca->dim();
  Vec<K> out(dm * dh);
  for (size_t r = 0; r < dm; ++r)
    for (size_t p = 0; p < dh; ++p) {
      const K& x = vm[r * dh + p];
      if (x.is_zero()) continue;
      for (size_t s = 0; s < da; ++s)
        for (size_t q = 0; q < dh; ++q) {
          const K& y = va[s * dh + q];
          if (y.is_zero()) continue;
          K c = x * y;
          const auto& act = m.module.action_basis(s);
          const auto& hp = m.side() == Side::Right ? H.basis_product_sparse(p, q) : H.basis_product_sparse(q, p);
          for (size_t u = 0; u < dm; ++u) {
            if (act(u, r).is_zero()) continue;
            K cu = c * act(u, r);
            for (auto& [w, cw] : hp) out[u * dh + w] += cu * cw;
          }
        }
    }
  return out;
}

}  // namespace detail

template <class K>
ValidationReport validate_hopf_module(const HopfModule<K>& m) {
  ValidationReport rep;
  if (m.module.algebra_ptr() != m.ca->algebra_ptr() && !same_algebra_data(m.module.algebra(), m.ca->algebra()))
    rep.add("module is over the comodule algebra", {});
  if (m.coaction.side() != Side::Right || m.coaction.dim() != m.dim())
    rep.add("coaction is a right comodule structure on the module", {});
  if (!rep.ok()) return rep;
  rep.merge(validate_module(m.module), "module");
  rep.merge(validate_comodule(m.coaction), "comodule");
  size_t dm = m.dim(), da = m.ca->dim();
  std::vector<Vec<K>> ra;
  for (size_t i = 0; i < da; ++i) ra.push_back(m.ca->rho(m.ca->algebra().basis_vector(i)));
  for (size_t c = 0; c < dm; ++c) {
    auto e = unit_vec<K>(dm, c, m.module.field());
    auto rm = m.coaction.coact(e);
    for (size_t i = 0; i < da; ++i) {
      auto lhs = m.coaction.coact(m.module.action_basis(i).col(c));
      if (lhs != detail::hopf_module_product(m, rm, ra[i]))
        rep.add(m.side() == Side::Right ? "rho(ma) = rho(m)rho(a)" : "rho(am) = rho(a)rho(m)", {c, i});
    }
  }
  return rep;
}

template <class K>
HopfModule<K> regular_hopf_module(const ComoduleAlgebraPtr<K>& ca, Side side) {
  return {ca, regular_module(ca->algebra_ptr(), side), ca->comodule(), "A"};
}

// V (x) H with A acting through rho and coaction id (x) Delta.
template <class K>
HopfModule<K> induced_hopf_module(const ComoduleAlgebraPtr<K>& ca, const Module<K>& v, std::string name = "V (x) H") {
  const auto& H = ca->hopf();
  const auto& F = ca->field();
  size_t dh = H.dim(), dv = v.dim(), da = ca->dim();
  std::vector<Matrix<K>> hmul;
  for (size_t q = 0; q < dh; ++q)
    hmul.push_back(v.side() == Side::Right ? H.algebra().right_mult_basis(q) : H.algebra().left_mult_basis(q));
  std::vector<Matrix<K>> act(da, Matrix<K>(dv * dh, dv * dh));
  for (size_t i = 0; i < da; ++i)
    for (size_t q = 0; q < dh; ++q)
      for (size_t s = 0; s < da; ++s) {
        const K& t = ca->coefficient(q)(s, i);
        if (!t.is_zero()) act[i].add_scaled(t, kron(v.action_basis(s), hmul[q]));
      }
  auto reg = regular_comodule(H.coalgebra_ptr(), Side::Right);
  std::vector<Matrix<K>> coeff;
  for (auto& t : reg.coefficients()) coeff.push_back(kron(Matrix<K>::identity(dv, F), t));
  return {ca, Module<K>(ca->algebra_ptr(), v.side(), dv * dh, std::move(act)),
          Comodule<K>(H.coalgebra_ptr(), Side::Right, dv * dh, std::move(coeff)), std::move(name)};
}

// Linear dual. A left object goes to M_A^H with rho(xi) = sum xi o T_l (x) s(h_l);
// a right object goes to _A M^H using the inverse antipode instead.
template <class K>
HopfModule<K> dual_hopf_module(const HopfModule<K>& m) {
  const auto& H = m.ca->hopf();
  Matrix<K> s = H.antipode();
  if (m.side() == Side::Right) {
    if (H.antipode_inverse()) {
      s = *H.antipode_inverse();
    } else {
      auto inv = inverse(H.antipode(), H.field());
      if (!inv) throw InputError("dual_hopf_module: antipode is not bijective");
      s = *inv;
    }
  }
  size_t dh = H.dim(), dm = m.dim();
  std::vector<Matrix<K>> coeff(dh, Matrix<K>(dm, dm));
  for (size_t l = 0; l < dh; ++l) {
    Matrix<K> tt = m.coaction.coefficient(l).transpose();
    for (size_t k = 0; k < dh; ++k)
      if (!s(k, l).is_zero()) coeff[k].add_scaled(s(k, l), tt);
  }
  return {m.ca, dual_module(m.module), Comodule<K>(H.coalgebra_ptr(), Side::Right, dm, std::move(coeff)),
          m.name + "*"};
}

template <class K>
HopfModule<K> hopf_module_sum(const HopfModule<K>& x, const HopfModule<K>& y) {
  return {x.ca, direct_sum(x.module, y.module), comodule_direct_sum(x.coaction, y.coaction),
          x.name + " + " + y.name};
}

// Least Hopf submodule containing the seeds.
template <class K>
Subspace<K> hopf_submodule_closure(const HopfModule<K>& m, const std::vector<Vec<K>>& seeds) {
  auto ops = m.module.actions();
  ops.insert(ops.end(), m.coaction.coefficients().begin(), m.coaction.coefficients().end());
  return operator_closure(m.dim(), seeds, ops);
}

template <class K>
HopfModule<K> hopf_submodule(const HopfModule<K>& m, const Subspace<K>& s) {
  return {m.ca, submodule(m.module, s), subcomodule(m.coaction, s), "sub(" + m.name + ")"};
}

template <class K>
HopfModule<K> hopf_quotient(const HopfModule<K>& m, const Subspace<K>& s) {
  auto q = quotient_module(m.module, s);
  return {m.ca, std::move(q.module), quotient_comodule(m.coaction, s).comodule, m.name + "/sub"};
}

template <class K>
struct FundamentalSplit {
  Subspace<K> m0;         // coinvariants {m : rho(m) = m (x) 1}
  Matrix<K> iso;          // M0 (x) H -> M, m (x) h -> m h
  bool bijective = false;
};

// M = M0 (x) H for M in M_H^H.
template <class K>
FundamentalSplit<K> fundamental_theorem_split(const HopfModule<K>& m) {
  const auto& H = m.ca->hopf();
  auto reg = regular_comodule(H.coalgebra_ptr(), Side::Right);
  if (!same_algebra_data(m.ca->algebra(), H.algebra()) || m.ca->coefficients() != reg.coefficients())
    throw InputError("fundamental_theorem_split: comodule algebra is not H over itself");
  if (m.side() != Side::Right) throw InputError("fundamental_theorem_split: expects an object of M_H^H");
  size_t d = m.dim(), dh = H.dim();
  const auto& one = H.algebra().unit();
  Matrix<K> sys(d * dh, d);
  for (size_t l = 0; l < dh; ++l) {
    Matrix<K> t = m.coaction.coefficient(l) - one[l] * Matrix<K>::identity(d, H.field());
    for (size_t r = 0; r < d; ++r)
      for (size_t c = 0; c < d; ++c) sys(l * d + r, c) = t(r, c);
  }
  FundamentalSplit<K> res;
  res.m0 = linear_kernel(sys, H.field());
  auto bv = res.m0.basis_vectors();
  res.iso = Matrix<K>(d, bv.size() * dh);
  for (size_t i = 0; i < bv.size(); ++i)
    for (size_t j = 0; j < dh; ++j) res.iso.set_col(i * dh + j, m.module.action_basis(j).apply(bv[i]));
  res.bijective = res.iso.rows() == res.iso.cols() && is_invertible(res.iso);
  return res;
}

template <class K>
struct RelationIdeal {
  Subspace<K> i_gens;   // ideal generated by coefficients of relations among the generators
  CostableIdeal<K> k;   // rho^{-1}(I (x) H) for the supplied I
  Subspace<K> i;        // the supplied ideal
  bool sandwich = false;  // I_gens <= K <= I and K costable
};

// Ideal generated by all coordinates of the relation module ker(A^n -> M).
template <class K>
Subspace<K> relation_coefficient_ideal(const Module<K>& m, const std::vector<Vec<K>>& gens) {
  Module<K> r = m.as_right();
  const auto& A = m.algebra();
  size_t n = A.dim();
  Matrix<K> bm = basis_map(r, gens);
  if (rank(bm) != m.dim()) throw InputError("relation_ideal: the elements do not generate the module");
  auto rel = linear_kernel(bm, m.field());
  std::vector<Vec<K>> coeffs;
  for (auto& z : rel.basis_vectors())
    for (size_t g = 0; g < gens.size(); ++g) coeffs.emplace_back(z.begin() + g * n, z.begin() + (g + 1) * n);
  return ideal_closure(A, coeffs);
}

template <class K>
RelationIdeal<K> relation_ideal(const HopfModule<K>& m, const std::vector<Vec<K>>& gens, const Subspace<K>& ideal) {
  RelationIdeal<K> res;
  res.i_gens = relation_coefficient_ideal(m.module, gens);
  res.i = ideal;
  if (!res.i_gens.is_subspace_of(res.i)) throw InputError("relation_ideal: supplied ideal does not contain I_gens");
  res.k = largest_costable_inside(*m.ca, res.i);
  res.sandwich = res.i_gens.is_subspace_of(res.k.ideal) && res.k.ideal.is_subspace_of(res.i) && res.k.costable;
  return res;
}

template <class K>
RelationIdeal<K> relation_ideal(const HopfModule<K>& m, const std::vector<Vec<K>>& gens) {
  return relation_ideal(m, gens, relation_coefficient_ideal(m.module, gens));
}

}  // namespace hopfkit
