#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/algebra/module.hpp"
#include "hopfkit/algebra/radical.hpp"

namespace hopfkit {

// Algebra structure on a subspace closed under multiplication whose identity is `one`
// (a corner eAe or a block eA), in the RREF basis of the subspace.
template <class K>
struct Corner {
  Algebra<K> algebra;
  Subspace<K> span;
  Matrix<K> inclusion;  // dim(A) x dim(corner)
};

template <class K>
Corner<K> corner_algebra(const Algebra<K>& a, const Subspace<K>& s, const Vec<K>& one) {
  auto bv = s.basis_vectors();
  size_t d = bv.size();
  std::vector<Vec<K>> mult(d * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) mult[i * d + j] = s.coordinates(a.multiply(bv[i], bv[j]));
  std::vector<std::string> labels;
  for (auto& v : bv) labels.push_back(a.format_vector(v));
  return {Algebra<K>(a.field(), labels, std::move(mult), s.coordinates(one)), s,
          Matrix<K>::from_columns(bv, a.dim())};
}

template <class K>
struct IdempotentSplit {
  bool conclusive = true;
  std::vector<Vec<K>> idempotents;  // pairwise orthogonal, summing to 1
  std::string note;
};

namespace detail {

template <class K>
Vec<K> algebra_pow(const Algebra<K>& a, Vec<K> x, uint64_t e, const Vec<K>& one) {
  Vec<K> r = one;
  while (e) {
    if (e & 1) r = a.multiply(r, x);
    x = a.multiply(x, x);
    e >>= 1;
  }
  return r;
}

// Orthogonal idempotents from a factorization m = f_1 ... f_r of the minimal polynomial of z.
template <class K>
std::vector<Vec<K>> crt_idempotents(const Algebra<K>& a, const std::vector<Poly<K>>& factors, const Poly<K>& m,
                                    const Vec<K>& z, const Vec<K>& one) {
  std::vector<Vec<K>> out;
  for (auto& f : factors) {
    Poly<K> cof = m / f;
    auto [g, u, v] = poly_xgcd(cof, f, a.field());
    (void)v;
    Poly<K> ginv = Poly<K>::constant(g.lead().inverse());
    Poly<K> e = (cof * u * ginv) % m;
    out.push_back(eval_poly(a, e, z, one));
  }
  return out;
}

// Berlekamp splitting of the component eZ of a commutative semisimple algebra over F_q.
// Returns nullopt when e is primitive.
inline std::optional<std::vector<Vec<GF>>> berlekamp_split(const Algebra<GF>& Z, const Vec<GF>& e) {
  const auto& F = Z.field();
  auto E = image(Z.left_mult(e));
  auto bv = E.basis_vectors();
  uint64_t q = F.order();
  Matrix<GF> phi(bv.size(), bv.size());
  for (size_t t = 0; t < bv.size(); ++t)
    phi.set_col(t, E.coordinates(sub_vec(algebra_pow(Z, bv[t], q, e), bv[t])));
  auto ker = linear_kernel(phi, F);
  if (ker.dim() <= 1) return std::nullopt;
  for (auto& c : ker.basis_vectors()) {
    Vec<GF> b(Z.dim());
    for (size_t t = 0; t < bv.size(); ++t) axpy(b, c[t], bv[t]);
    auto m = minimal_polynomial(Z, b, e);
    if (m.degree() <= 1) continue;
    std::vector<GF> roots;
    for (uint64_t i = 0; i < q; ++i)
      if (m.eval(F.element(i)).is_zero()) roots.push_back(F.element(i));
    std::vector<Vec<GF>> out;
    for (auto& lam : roots) {
      Vec<GF> acc = e;
      for (auto& mu : roots) {
        if (mu == lam) continue;
        Vec<GF> fac = sub_vec(b, scale_vec(mu, e));
        acc = scale_vec((lam - mu).inverse(), Z.multiply(acc, fac));
      }
      out.push_back(acc);
    }
    return out;
  }
  return std::nullopt;
}

}  // namespace detail

// Primitive idempotents of a commutative semisimple algebra.
template <class K>
IdempotentSplit<K> split_commutative_semisimple(const Algebra<K>& Z, uint64_t seed = 0) {
  IdempotentSplit<K> res;
  const auto& F = Z.field();
  Rng rng(seed);
  std::vector<Vec<K>> work{Z.unit()};
  while (!work.empty()) {
    Vec<K> e = work.back();
    work.pop_back();
    auto E = image(Z.left_mult(e));
    if (E.dim() == 1) {
      res.idempotents.push_back(e);
      continue;
    }
    if constexpr (!is_rational_v<K>) {
      auto sp = detail::berlekamp_split(Z, e);
      if (sp)
        for (auto& v : *sp) work.push_back(v);
      else
        res.idempotents.push_back(e);
    } else {
      auto bv = E.basis_vectors();
      bool decided = false;
      for (size_t attempt = 0; attempt < bv.size() + 30 && !decided; ++attempt) {
        Vec<K> z;
        if (attempt < bv.size()) {
          z = Z.multiply(e, bv[attempt]);
        } else {
          z = Z.zero();
          for (auto& v : bv) axpy(z, sample_scalar(F, rng, 2 * bv.size() + 8), v);
          z = Z.multiply(e, z);
        }
        auto m = minimal_polynomial(Z, z, e);
        if (m.degree() <= 1) continue;
        auto fac = factor_rational(m);
        size_t nf = fac.irreducible.size() + fac.unresolved.size();
        if (nf >= 2) {
          std::vector<Poly<K>> all = fac.irreducible;
          for (auto& u : fac.unresolved) all.push_back(u);
          for (auto& v : detail::crt_idempotents(Z, all, m, z, e)) work.push_back(v);
          decided = true;
        } else if (static_cast<size_t>(m.degree()) == E.dim() && fac.unresolved.empty()) {
          res.idempotents.push_back(e);  // eZ = Q[z]/(m) is a field
          decided = true;
        }
      }
      if (!decided) {
        res.conclusive = false;
        res.note = "could not split a commutative component of dimension " + std::to_string(E.dim());
        res.idempotents.push_back(e);
      }
    }
  }
  return res;
}

enum class DivisionStatus { Division, ZeroDivisor, Unknown };

template <class K>
struct DivisionCheck {
  DivisionStatus status = DivisionStatus::Unknown;
  Vec<K> zero_divisor;  // nonzero element y with y*w = 0 for some nonzero w
  std::string note;
};

// Looks for a zero divisor among basis elements and seeded random elements,
// using the minimal polynomial: a reducible or non-squarefree one exposes one.
template <class K>
std::optional<Vec<K>> find_zero_divisor(const Algebra<K>& T, Rng& rng, size_t random_trials = 40) {
  const auto& F = T.field();
  size_t n = T.dim();
  for (size_t attempt = 0; attempt < n + random_trials; ++attempt) {
    Vec<K> y;
    if (attempt < n) {
      y = T.basis_vector(attempt);
    } else {
      y = T.zero();
      for (size_t i = 0; i < n; ++i) y[i] = sample_scalar(F, rng, 2 * n + 8);
    }
    if (is_zero_vec(y)) continue;
    auto m = minimal_polynomial(T, y, T.unit());
    if (m.degree() <= 1) continue;
    if (m.coeff(0).is_zero()) return y;
    auto sq = squarefree_part(m, F);
    if (sq.degree() < m.degree()) return eval_poly(T, sq, y, T.unit());
    // K[y] is a product of fields; a nontrivial idempotent of it is a zero divisor.
    std::vector<Vec<K>> pw{T.unit()};
    for (int i = 1; i < m.degree(); ++i) pw.push_back(T.multiply(pw.back(), y));
    auto sub = subalgebra_from_span(T, Subspace<K>::span(n, pw));
    auto sp = split_commutative_semisimple(sub.algebra, rng.next());
    if (sp.idempotents.size() >= 2) return sub.inclusion.apply(sp.idempotents.front());
  }
  return std::nullopt;
}

template <class K>
DivisionCheck<K> check_division_algebra(const Algebra<K>& T, uint64_t seed = 0) {
  DivisionCheck<K> res;
  if (T.dim() == 1) {
    res.status = DivisionStatus::Division;
    return res;
  }
  auto rad = radical_of(T);
  if (!rad->conclusive) {
    res.note = rad->note;
    return res;
  }
  if (!rad->ideal.is_zero()) {
    res.status = DivisionStatus::ZeroDivisor;
    res.zero_divisor = rad->ideal.basis_vector(0);
    return res;
  }
  Rng rng(seed);
  if (T.is_commutative()) {
    auto sp = split_commutative_semisimple(T, seed);
    if (sp.idempotents.size() >= 2) {
      res.status = DivisionStatus::ZeroDivisor;
      res.zero_divisor = sp.idempotents.front();
    } else if (sp.conclusive) {
      res.status = DivisionStatus::Division;
    } else {
      res.note = sp.note;
    }
    return res;
  }
  if (auto y = find_zero_divisor(T, rng)) {
    res.status = DivisionStatus::ZeroDivisor;
    res.zero_divisor = *y;
    return res;
  }
  // Finite division algebras are commutative, so over F_q a zero divisor always exists.
  res.note = "noncommutative semisimple algebra without a zero divisor found";
  return res;
}

// One simple block of A/J.
template <class K>
struct WedderburnBlock {
  Vec<K> central_idempotent;  // in A/J coordinates
  Subspace<K> block_span;     // eB inside B = A/J
  Subspace<K> max_ideal;      // preimage in A of (1-e)B
  std::vector<Matrix<K>> simple_action;  // simple right A-module, one matrix per basis element
  size_t simple_dim = 0;
  size_t multiplicity = 0;    // number of copies of the simple module in eB
  size_t division_dim = 0;    // dim End(simple)
};

template <class K>
struct WedderburnData {
  bool conclusive = true;
  std::string note;
  Subspace<K> radical;
  std::shared_ptr<const Algebra<K>> quotient;  // B = A/J
  Matrix<K> projection;                         // A -> B
  std::vector<WedderburnBlock<K>> blocks;
};

namespace detail {

// Primitive idempotent of a simple algebra S, by shrinking f through left identities
// of right ideals yT in corners T = fSf until the corner is a division algebra.
template <class K>
std::optional<Vec<K>> primitive_idempotent_of_simple(const Algebra<K>& S, Rng& rng, std::string& note) {
  Vec<K> f = S.unit();
  for (int iter = 0; iter < 64; ++iter) {
    auto Tspan = image(S.left_mult(f) * S.right_mult(f));
    auto T = corner_algebra(S, Tspan, f);
    if (T.algebra.dim() == 1) return f;
    if (T.algebra.is_commutative()) {
      auto sp = split_commutative_semisimple(T.algebra, rng.next());
      if (sp.idempotents.size() <= 1) {
        if (!sp.conclusive) note = sp.note;
        return sp.conclusive ? std::optional<Vec<K>>(f) : std::nullopt;
      }
      return T.inclusion.apply(sp.idempotents.front());
    }
    auto y = find_zero_divisor(T.algebra, rng);
    if (!y) {
      note = "no zero divisor found in a noncommutative corner of dimension " + std::to_string(T.algebra.dim());
      return std::nullopt;
    }
    // Left identity g of R = yT: g in R with g r = r for all r in R.
    const auto& Ta = T.algebra;
    auto R = image(Ta.left_mult(*y));
    auto rb = R.basis_vectors();
    size_t d = Ta.dim();
    Matrix<K> sys(d * rb.size(), rb.size());
    Vec<K> rhs(d * rb.size());
    for (size_t i = 0; i < rb.size(); ++i)
      for (size_t t = 0; t < rb.size(); ++t) {
        auto prod = Ta.multiply(rb[t], rb[i]);
        for (size_t r = 0; r < d; ++r) {
          sys(i * d + r, t) = prod[r];
          rhs[i * d + r] = rb[i][r];
        }
      }
    auto c = solve_affine(sys, rhs);
    if (!c) {
      note = "right ideal without left identity (algebra not semisimple?)";
      return std::nullopt;
    }
    Vec<K> g(d);
    for (size_t t = 0; t < rb.size(); ++t) axpy(g, (*c)[t], rb[t]);
    f = T.inclusion.apply(g);
  }
  note = "primitive idempotent search did not converge";
  return std::nullopt;
}

template <class K>
WedderburnData<K> compute_wedderburn(const Algebra<K>& a, uint64_t seed) {
  WedderburnData<K> res;
  const auto& F = a.field();
  auto rad = radical_of(a);
  res.radical = rad->ideal;
  if (!rad->conclusive) {
    res.conclusive = false;
    res.note = rad->note;
    return res;
  }
  std::shared_ptr<const Algebra<K>> B;
  if (rad->ideal.is_zero()) {
    B = std::make_shared<Algebra<K>>(a);
    res.projection = Matrix<K>::identity(a.dim(), F);
  } else {
    auto q = quotient_algebra(a, rad->ideal);
    B = std::make_shared<Algebra<K>>(q.algebra);
    res.projection = q.projection;
  }
  res.quotient = B;
  auto zspan = center(*B);
  auto Z = subalgebra_from_span(*B, zspan);
  Rng rng(seed);
  auto sp = split_commutative_semisimple(Z.algebra, rng.next());
  if (!sp.conclusive) {
    res.conclusive = false;
    res.note = sp.note;
  }
  for (auto& zi : sp.idempotents) {
    WedderburnBlock<K> blk;
    Vec<K> e = Z.inclusion.apply(zi);
    blk.central_idempotent = e;
    Matrix<K> Le = B->left_mult(e);
    blk.block_span = image(Le);
    blk.max_ideal = linear_kernel(Le * res.projection, F);
    auto S = corner_algebra(*B, blk.block_span, e);
    std::string note;
    auto f = primitive_idempotent_of_simple(S.algebra, rng, note);
    if (!f) {
      res.conclusive = false;
      res.note = note;
      res.blocks.push_back(std::move(blk));
      continue;
    }
    // V = fS as a right A-module through A -> B -> S, a |-> e pi(a).
    auto V = image(S.algebra.left_mult(*f));
    auto vb = V.basis_vectors();
    std::vector<Matrix<K>> act;
    for (size_t i = 0; i < a.dim(); ++i) {
      Vec<K> img = B->multiply(e, res.projection.apply(a.basis_vector(i)));
      Vec<K> s = S.span.coordinates(img);
      Matrix<K> R = S.algebra.right_mult(s);
      Matrix<K> m(vb.size(), vb.size());
      for (size_t t = 0; t < vb.size(); ++t) m.set_col(t, V.coordinates(R.apply(vb[t])));
      act.push_back(m);
    }
    blk.simple_action = std::move(act);
    blk.simple_dim = vb.size();
    blk.multiplicity = S.algebra.dim() / vb.size();
    auto fsf = image(S.algebra.left_mult(*f) * S.algebra.right_mult(*f));
    blk.division_dim = fsf.dim();
    res.blocks.push_back(std::move(blk));
  }
  return res;
}

}  // namespace detail

template <class K>
std::shared_ptr<const WedderburnData<K>> wedderburn_data(const Algebra<K>& a) {
  return memoize<WedderburnData<K>>(a, &Algebra<K>::Cache::wedderburn, [&] { return detail::compute_wedderburn(a, 0); });
}

}  // namespace hopfkit
