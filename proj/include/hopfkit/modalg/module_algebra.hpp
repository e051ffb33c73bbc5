#pragma once

#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "hopfkit/algebra.hpp"
#include "hopfkit/comodalg/hopf_module.hpp"
#include "hopfkit/hopf.hpp"

namespace hopfkit {

// Left H-module algebra; action[l] is the matrix of h_l acting on A.
template <class K>
class HModuleAlgebra {
 public:
  HModuleAlgebra(AlgebraPtr<K> a, HopfPtr<K> h, std::vector<Matrix<K>> action, std::string name = {})
      : a_(std::move(a)), h_(std::move(h)), action_(std::move(action)), name_(std::move(name)) {
    if (action_.size() != h_->dim()) throw InputError("module algebra needs one action matrix per basis element of H");
    for (auto& m : action_)
      if (m.rows() != a_->dim() || m.cols() != a_->dim()) throw InputError("action matrix has wrong size");
  }

  const AlgebraPtr<K>& algebra_ptr() const { return a_; }
  const Algebra<K>& algebra() const { return *a_; }
  const HopfPtr<K>& hopf_ptr() const { return h_; }
  const HopfAlgebra<K>& hopf() const { return *h_; }
  const FieldOf<K>& field() const { return a_->field(); }
  size_t dim() const { return a_->dim(); }
  const std::vector<Matrix<K>>& actions() const { return action_; }
  const Matrix<K>& action_basis(size_t l) const { return action_[l]; }
  const std::string& name() const { return name_; }

  Matrix<K> action(const Vec<K>& h) const {
    Matrix<K> m(dim(), dim());
    for (size_t l = 0; l < h.size(); ++l) m.add_scaled(h[l], action_[l]);
    return m;
  }

 private:
  AlgebraPtr<K> a_;
  HopfPtr<K> h_;
  std::vector<Matrix<K>> action_;
  std::string name_;
};

template <class K>
using ModuleAlgebraPtr = std::shared_ptr<const HModuleAlgebra<K>>;

template <class K>
ModuleAlgebraPtr<K> share(HModuleAlgebra<K> ma) {
  return std::make_shared<const HModuleAlgebra<K>>(std::move(ma));
}

template <class K>
ValidationReport validate_module_algebra(const HModuleAlgebra<K>& ma) {
  ValidationReport rep;
  const auto& A = ma.algebra();
  const auto& H = ma.hopf();
  const auto& C = H.coalgebra();
  const auto& F = ma.field();
  size_t n = A.dim(), d = H.dim();
  const auto& hl = H.labels();
  const auto& al = A.labels();
  if (ma.action(H.algebra().unit()) != Matrix<K>::identity(n, F)) rep.add("1 acts as identity", {});
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      if (ma.action(H.algebra().basis_product(i, j)) != ma.action_basis(i) * ma.action_basis(j))
        rep.add("H-module associativity", {i, j}, hl[i] + "," + hl[j]);
  for (size_t l = 0; l < d; ++l) {
    if (ma.action_basis(l).apply(A.unit()) != scale_vec(C.counit()[l], A.unit()))
      rep.add("h.1 = eps(h)1", {l}, "h = " + hl[l]);
    auto terms = C.triples(l);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        Vec<K> rhs(n);
        for (auto& [p, q, c] : terms)
          axpy(rhs, c, A.multiply(ma.action_basis(p).col(i), ma.action_basis(q).col(j)));
        if (ma.action_basis(l).apply(A.basis_product(i, j)) != rhs)
          rep.add("measuring", {l, i, j}, "h = " + hl[l] + ", a = " + al[i] + ", b = " + al[j]);
      }
  }
  return rep;
}

// h.a = eps(h) a
template <class K>
HModuleAlgebra<K> trivial_action(AlgebraPtr<K> a, HopfPtr<K> h) {
  std::vector<Matrix<K>> act;
  auto id = Matrix<K>::identity(a->dim(), a->field());
  for (size_t l = 0; l < h->dim(); ++l) act.push_back(h->coalgebra().counit()[l] * id);
  return HModuleAlgebra<K>(std::move(a), std::move(h), std::move(act), "trivial");
}

// k[C2] acting on k x k by exchanging the factors.
template <class K>
HModuleAlgebra<K> swap_action(const FieldOf<K>& F) {
  auto k = matrix_algebra<K>(1, F);
  auto a = share(direct_product(k, k));
  auto h = share(group_algebra<K>(cyclic_group(2), F));
  Matrix<K> sw(2, 2);
  sw(0, 1) = F.one();
  sw(1, 0) = F.one();
  std::vector<Matrix<K>> act;
  for (size_t l = 0; l < 2; ++l) act.push_back(h->algebra().unit()[l].is_zero() ? sw : Matrix<K>::identity(2, F));
  return HModuleAlgebra<K>(a, h, std::move(act), "swap");
}

// H acting on itself by h.a = sum h1 a s(h2).
template <class K>
HModuleAlgebra<K> adjoint_action(HopfPtr<K> h) {
  const auto& A = h->algebra();
  size_t n = h->dim();
  std::vector<Matrix<K>> act;
  for (size_t l = 0; l < n; ++l) {
    Matrix<K> m(n, n);
    for (auto& [p, q, c] : h->coalgebra().triples(l)) m.add_scaled(c, A.left_mult_basis(p) * A.right_mult(h->antipode().col(q)));
    act.push_back(std::move(m));
  }
  return HModuleAlgebra<K>(h->algebra_ptr(), h, std::move(act), "adjoint");
}

// End(V) = Mat_n(k) for a left H-module V, with h.f = sum h1 f s(h2); basis E_ij at i*n + j.
template <class K>
HModuleAlgebra<K> endomorphism_action(HopfPtr<K> h, const Module<K>& v) {
  if (v.side() != Side::Left || v.algebra().dim() != h->dim()) throw InputError("endomorphism_action: need a left H-module");
  const auto& F = h->field();
  size_t n = v.dim(), N = n * n;
  auto a = share(matrix_algebra<K>(n, F));
  std::vector<Matrix<K>> act;
  for (size_t l = 0; l < h->dim(); ++l) {
    Matrix<K> m(N, N);
    for (auto& [p, q, c] : h->coalgebra().triples(l)) {
      const auto& rp = v.action_basis(p);
      auto rs = v.action(h->antipode().col(q));
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          // rho(h_p) E_ij rho(s h_q) has (r, t) entry rp(r, i) * rs(j, t)
          for (size_t r = 0; r < n; ++r) {
            if (rp(r, i).is_zero()) continue;
            for (size_t t = 0; t < n; ++t) m(r * n + t, i * n + j) += c * rp(r, i) * rs(j, t);
          }
        }
    }
    act.push_back(std::move(m));
  }
  return HModuleAlgebra<K>(a, std::move(h), std::move(act), "End(V)");
}

// The 2-dim left module of sweedler_h4 (basis 1, g, x, gx) with g = diag(1, -1) and x = E21.
template <class K>
Module<K> sweedler_two_dim_module(const HopfPtr<K>& h) {
  if (h->dim() != 4) throw InputError("sweedler_two_dim_module: expected sweedler_h4");
  const auto& F = h->field();
  Matrix<K> g(2, 2), x(2, 2);
  g(0, 0) = F.one();
  g(1, 1) = F.from_int(-1);
  x(1, 0) = F.one();
  Module<K> v(h->algebra_ptr(), Side::Left, 2, {Matrix<K>::identity(2, F), g, x, g * x});
  if (!validate_module(v).ok()) throw InputError("sweedler_two_dim_module: not a module over " + h->name());
  return v;
}

enum class SmashVariant { Plain, OpCop };  // A#H, Aop#Hcop

inline const char* smash_variant_name(SmashVariant v) { return v == SmashVariant::Plain ? "A#H" : "Aop#Hcop"; }

template <class K>
struct SmashProduct {
  AlgebraPtr<K> algebra;  // basis a_i # h_j at i*dim H + j
  Matrix<K> a_embed;      // a -> a # 1
  Matrix<K> h_embed;      // h -> 1 # h
  SmashVariant variant = SmashVariant::Plain;
};

// (a#h)(b#g) = sum a (h1.b) # h2 g, computed in Aop and Hcop for the second variant.
template <class K>
SmashProduct<K> smash_product(const HModuleAlgebra<K>& ma, SmashVariant variant = SmashVariant::Plain) {
  const auto& A = ma.algebra();
  const auto& HA = ma.hopf().algebra();
  const auto& C = ma.hopf().coalgebra();
  const auto& F = ma.field();
  size_t n = A.dim(), d = HA.dim(), N = n * d;
  bool op = variant == SmashVariant::OpCop;
  std::vector<Vec<K>> mult(N * N);
  for (size_t j = 0; j < d; ++j) {
    auto terms = C.triples(j);
    for (size_t i = 0; i < n; ++i)
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < d; ++l) {
          Vec<K> out(N);
          for (auto& [p, q, c] : terms) {
            size_t first = op ? q : p, second = op ? p : q;
            const auto& hb = ma.action_basis(first).col(k);
            Vec<K> left = op ? A.multiply(hb, A.basis_vector(i)) : A.multiply(A.basis_vector(i), hb);
            axpy(out, c, tensor_vec(left, HA.basis_product(second, l)));
          }
          mult[(i * d + j) * N + (k * d + l)] = std::move(out);
        }
  }
  std::vector<std::string> labels;
  for (auto& x : A.labels())
    for (auto& y : HA.labels()) labels.push_back(x + "#" + y);
  SmashProduct<K> res;
  res.variant = variant;
  res.algebra = share(Algebra<K>(F, std::move(labels), std::move(mult), tensor_vec(A.unit(), HA.unit())));
  res.a_embed = Matrix<K>(N, n);
  res.h_embed = Matrix<K>(N, d);
  for (size_t i = 0; i < n; ++i) res.a_embed.set_col(i, tensor_vec(A.basis_vector(i), HA.unit()));
  for (size_t j = 0; j < d; ++j) res.h_embed.set_col(j, tensor_vec(A.unit(), HA.basis_vector(j)));
#ifdef HOPFKIT_CHECKED
  if (!validate_algebra(*res.algebra).ok()) throw std::logic_error("smash product failed validation");
#endif
  return res;
}

// The H-stable ideal generated by `seeds`, and K = {a : H.a in I} for I (default: that ideal).
template <class K>
struct StableClosure {
  Subspace<K> closure;
  Subspace<K> i;
  Subspace<K> k;
};

template <class K>
std::vector<Matrix<K>> stable_ideal_ops(const HModuleAlgebra<K>& ma) {
  auto ops = two_sided_ops(ma.algebra());
  for (auto& m : ma.actions()) ops.push_back(m);
  return ops;
}

template <class K>
bool is_h_stable(const HModuleAlgebra<K>& ma, const Subspace<K>& s) {
  for (auto& m : ma.actions())
    for (auto& v : s.basis_vectors())
      if (!s.contains(m.apply(v))) return false;
  return true;
}

template <class K>
StableClosure<K> stable_closure_and_K(const HModuleAlgebra<K>& ma, const std::vector<Vec<K>>& seeds,
                                      std::optional<std::type_identity_t<Subspace<K>>> ideal = std::nullopt) {
  const auto& A = ma.algebra();
  const auto& F = ma.field();
  size_t n = A.dim();
  StableClosure<K> res;
  res.closure = operator_closure(n, seeds, stable_ideal_ops(ma));
  res.i = ideal ? *ideal : res.closure;
  if (res.i.ambient() != n || !is_two_sided_ideal(A, res.i)) throw InputError("stable_closure_and_K: I is not an ideal");
  // a lies in K iff the class of h_l.a in A/I vanishes for every l
  size_t r = n - res.i.dim();
  Matrix<K> stacked(r * ma.actions().size(), n);
  for (size_t l = 0; l < ma.actions().size(); ++l)
    for (size_t c = 0; c < n; ++c) {
      auto q = res.i.quotient_coordinates(ma.action_basis(l).col(c));
      for (size_t t = 0; t < r; ++t) stacked(l * r + t, c) = q[t];
    }
  res.k = r == 0 ? Subspace<K>::full(n, F) : linear_kernel(stacked, F);
  if (!res.k.is_subspace_of(res.i) || !is_h_stable(ma, res.k) || !is_two_sided_ideal(A, res.k))
    throw std::logic_error("stable_closure_and_K: K is not an H-stable ideal inside I");
  return res;
}

template <class K>
SimplicityResult<K> is_h_simple(const HModuleAlgebra<K>& ma, uint64_t seed = 0) {
  return operator_simplicity(ma.dim(), stable_ideal_ops(ma), ma.field(), seed);
}

// Object of the category of right A-modules with a compatible left H-action:
// h(ma) = sum (h1 m)(h2 a).
template <class K>
struct HMObject {
  Module<K> module;  // right A-module
  std::vector<Matrix<K>> h_action;
  std::string name;

  size_t dim() const { return module.dim(); }
};

template <class K>
ValidationReport validate_hm_object(const HModuleAlgebra<K>& ma, const HMObject<K>& m) {
  ValidationReport rep;
  if (m.module.side() != Side::Right || m.module.algebra_ptr().get() != ma.algebra_ptr().get())
    throw InputError("validate_hm_object: need a right module over the module algebra");
  if (m.h_action.size() != ma.hopf().dim()) throw InputError("validate_hm_object: one H matrix per basis element");
  rep.merge(validate_module(m.module), "A-module");
  const auto& H = ma.hopf();
  const auto& F = ma.field();
  size_t dm = m.dim(), d = H.dim();
  auto act = [&](const Vec<K>& h) {
    Matrix<K> out(dm, dm);
    for (size_t l = 0; l < d; ++l) out.add_scaled(h[l], m.h_action[l]);
    return out;
  };
  if (act(H.algebra().unit()) != Matrix<K>::identity(dm, F)) rep.add("1 acts as identity", {});
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j)
      if (act(H.algebra().basis_product(i, j)) != m.h_action[i] * m.h_action[j])
        rep.add("H-module associativity", {i, j});
  for (size_t l = 0; l < d; ++l) {
    auto terms = H.coalgebra().triples(l);
    for (size_t i = 0; i < ma.dim(); ++i) {
      Matrix<K> rhs(dm, dm);
      for (auto& [p, q, c] : terms) rhs.add_scaled(c, m.module.action(ma.action_basis(q).col(i)) * m.h_action[p]);
      if (m.h_action[l] * m.module.action_basis(i) != rhs) rep.add("h(ma) = (h1 m)(h2 a)", {l, i});
    }
  }
  return rep;
}

template <class K>
HMObject<K> algebra_as_object(const HModuleAlgebra<K>& ma) {
  return {regular_module(ma.algebra_ptr(), Side::Right), ma.actions(), "A"};
}

// (a#h) m = (h m) a over Aop#Hcop.
template <class K>
Module<K> as_smash_module(const HModuleAlgebra<K>& ma, const SmashProduct<K>& s, const HMObject<K>& m) {
  if (s.variant != SmashVariant::OpCop) throw InputError("as_smash_module: objects are modules over Aop#Hcop");
  size_t d = ma.hopf().dim();
  std::vector<Matrix<K>> act;
  for (size_t i = 0; i < ma.dim(); ++i)
    for (size_t j = 0; j < d; ++j) act.push_back(m.module.action_basis(i) * m.h_action[j]);
  return Module<K>(s.algebra, Side::Left, m.dim(), std::move(act));
}

template <class K>
HMObject<K> object_from_smash_module(const HModuleAlgebra<K>& ma, const SmashProduct<K>& s, const Module<K>& n,
                                     std::string name = {}) {
  if (n.side() != Side::Left || n.algebra_ptr().get() != s.algebra.get())
    throw InputError("object_from_smash_module: need a left module over the smash product");
  std::vector<Matrix<K>> ra, hs;
  for (size_t i = 0; i < ma.dim(); ++i) ra.push_back(n.action(s.a_embed.col(i)));
  for (size_t j = 0; j < ma.hopf().dim(); ++j) hs.push_back(n.action(s.h_embed.col(j)));
  return {Module<K>(ma.algebra_ptr(), Side::Right, n.dim(), std::move(ra)), std::move(hs), std::move(name)};
}

// Left modules over an algebra: its simple modules, read off the Wedderburn data of the opposite algebra.
template <class K>
std::vector<Module<K>> simple_left_modules(const AlgebraPtr<K>& a) {
  auto wd = wedderburn_data(*opposite_of(*a));
  if (!wd->conclusive) throw InputError("Wedderburn data inconclusive: " + wd->note);
  std::vector<Module<K>> out;
  for (auto& b : wd->blocks) out.emplace_back(a, Side::Left, b.simple_dim, b.simple_action);
  return out;
}

// Sandwich I_gens in K in I with K = {a : H.a in I}.
template <class K>
struct StableSandwich {
  Subspace<K> i_gens;
  Subspace<K> i;
  Subspace<K> k;
  bool sandwich = false;
};

template <class K>
StableSandwich<K> stable_sandwich(const HModuleAlgebra<K>& ma, const HMObject<K>& m, const std::vector<Vec<K>>& gens,
                                  std::optional<std::type_identity_t<Subspace<K>>> ideal = std::nullopt) {
  StableSandwich<K> res;
  res.i_gens = relation_coefficient_ideal(m.module, gens);
  res.i = ideal ? *ideal : res.i_gens;
  if (!res.i_gens.is_subspace_of(res.i)) throw InputError("stable_sandwich: supplied ideal does not contain I_gens");
  res.k = stable_closure_and_K(ma, {}, res.i).k;
  res.sandwich = res.i_gens.is_subspace_of(res.k) && res.k.is_subspace_of(res.i);
  return res;
}

}  // namespace hopfkit
