#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/exactla.hpp"
#include "hopfkit/validation.hpp"

namespace hopfkit {

template <class K>
class Algebra;
template <class K>
using AlgebraPtr = std::shared_ptr<const Algebra<K>>;

// Finite-dimensional associative algebra given by structure constants.
template <class K>
class Algebra {
 public:
  using Field = FieldOf<K>;

  Algebra(Field F, std::vector<std::string> labels, std::vector<Vec<K>> mult, Vec<K> unit)
      : F_(F), n_(labels.size()), labels_(std::move(labels)), mult_(std::move(mult)), unit_(std::move(unit)) {
    if (n_ == 0) throw InputError("algebra dimension must be positive");
    if (mult_.size() != n_ * n_) throw InputError("multiplication table has wrong size");
    for (auto& v : mult_)
      if (v.size() != n_) throw InputError("structure constant vector has wrong length");
    if (unit_.size() != n_) throw InputError("unit vector has wrong length");
    sparse_.resize(n_ * n_);
    for (size_t ij = 0; ij < n_ * n_; ++ij)
      for (size_t k = 0; k < n_; ++k)
        if (!mult_[ij][k].is_zero()) sparse_[ij].push_back({k, mult_[ij][k]});
  }

  const Field& field() const { return F_; }
  size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec<K>& unit() const { return unit_; }
  const Vec<K>& basis_product(size_t i, size_t j) const { return mult_[i * n_ + j]; }
  const std::vector<std::pair<size_t, K>>& basis_product_sparse(size_t i, size_t j) const { return sparse_[i * n_ + j]; }
  Vec<K> basis_vector(size_t i) const { return unit_vec<K>(n_, i, F_); }
  Vec<K> zero() const { return Vec<K>(n_); }
  Vec<K> scalar(const K& c) const { return scale_vec(c, unit_); }

  Vec<K> multiply(const Vec<K>& a, const Vec<K>& b) const {
    Vec<K> r(n_);
    for (size_t i = 0; i < n_; ++i) {
      if (a[i].is_zero()) continue;
      for (size_t j = 0; j < n_; ++j) {
        if (b[j].is_zero()) continue;
        K c = a[i] * b[j];
        for (auto& [k, v] : sparse_[i * n_ + j]) r[k] += c * v;
      }
    }
    return r;
  }
  // Column j is a * e_j.
  Matrix<K> left_mult(const Vec<K>& a) const {
    Matrix<K> m(n_, n_);
    for (size_t i = 0; i < n_; ++i) {
      if (a[i].is_zero()) continue;
      for (size_t j = 0; j < n_; ++j)
        for (auto& [k, v] : sparse_[i * n_ + j]) m(k, j) += a[i] * v;
    }
    return m;
  }
  // Column j is e_j * a.
  Matrix<K> right_mult(const Vec<K>& a) const {
    Matrix<K> m(n_, n_);
    for (size_t i = 0; i < n_; ++i) {
      if (a[i].is_zero()) continue;
      for (size_t j = 0; j < n_; ++j)
        for (auto& [k, v] : sparse_[j * n_ + i]) m(k, j) += a[i] * v;
    }
    return m;
  }
  Matrix<K> left_mult_basis(size_t i) const { return left_mult(basis_vector(i)); }
  Matrix<K> right_mult_basis(size_t i) const { return right_mult(basis_vector(i)); }

  Vec<K> power(const Vec<K>& a, size_t e) const {
    Vec<K> r = unit_;
    for (size_t i = 0; i < e; ++i) r = multiply(r, a);
    return r;
  }

  bool is_commutative() const {
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = i + 1; j < n_; ++j)
        if (mult_[i * n_ + j] != mult_[j * n_ + i]) return false;
    return true;
  }

  std::string format_vector(const Vec<K>& v) const {
    std::string s;
    for (size_t i = 0; i < n_; ++i) {
      if (v[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += v[i].is_one() ? labels_[i] : "(" + v[i].to_string() + ")" + labels_[i];
    }
    return s.empty() ? "0" : s;
  }

  // Memo slots shared by copies; filled lazily by the structure routines.
  struct Cache {
    std::mutex mu;
    std::shared_ptr<const void> radical, wedderburn, opposite;
  };
  Cache& cache() const { return *cache_; }

 private:
  Field F_;
  size_t n_;
  std::vector<std::string> labels_;
  std::vector<Vec<K>> mult_;
  std::vector<std::vector<std::pair<size_t, K>>> sparse_;
  Vec<K> unit_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};


template <class K>
AlgebraPtr<K> share(Algebra<K> a) {
  return std::make_shared<const Algebra<K>>(std::move(a));
}

// Lazily computes and stores a value in one of the algebra's cache slots.
template <class T, class K, class Fn>
std::shared_ptr<const T> memoize(const Algebra<K>& a, std::shared_ptr<const void> Algebra<K>::Cache::*slot, Fn fn) {
  auto& c = a.cache();
  {
    std::lock_guard<std::mutex> lock(c.mu);
    if (c.*slot) return std::static_pointer_cast<const T>(c.*slot);
  }
  auto value = std::make_shared<const T>(fn());
  std::lock_guard<std::mutex> lock(c.mu);
  if (!(c.*slot)) c.*slot = value;
  return std::static_pointer_cast<const T>(c.*slot);
}

template <class K>
ValidationReport validate_algebra(const Algebra<K>& a) {
  ValidationReport rep;
  size_t n = a.dim();
  for (size_t i = 0; i < n; ++i) {
    auto e = a.basis_vector(i);
    if (a.multiply(a.unit(), e) != e) rep.add("left unit", {i}, "1*" + a.labels()[i] + " != " + a.labels()[i]);
    if (a.multiply(e, a.unit()) != e) rep.add("right unit", {i}, a.labels()[i] + "*1 != " + a.labels()[i]);
  }
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      const auto& ij = a.basis_product(i, j);
      for (size_t k = 0; k < n; ++k) {
        Vec<K> lhs = a.multiply(ij, a.basis_vector(k));
        Vec<K> rhs = a.multiply(a.basis_vector(i), a.basis_product(j, k));
        if (lhs != rhs)
          rep.add("associativity", {i, j, k},
                  "(" + a.labels()[i] + a.labels()[j] + ")" + a.labels()[k] + " = " + a.format_vector(lhs) +
                      " but " + a.labels()[i] + "(" + a.labels()[j] + a.labels()[k] + ") = " + a.format_vector(rhs));
      }
    }
  return rep;
}

// Least subspace containing `seeds` and stable under every operator.
template <class K>
Subspace<K> operator_closure(size_t n, const std::vector<Vec<K>>& seeds, const std::vector<Matrix<K>>& ops) {
  Subspace<K> S = Subspace<K>::span(n, seeds.empty() ? std::vector<Vec<K>>{} : seeds);
  if (seeds.empty()) S = Subspace<K>::zero(n);
  std::vector<Vec<K>> frontier = S.basis_vectors();
  while (!frontier.empty()) {
    std::vector<Vec<K>> cand;
    for (auto& v : frontier)
      for (auto& op : ops) {
        auto w = S.reduce(op.apply(v));
        if (!is_zero_vec(w)) cand.push_back(std::move(w));
      }
    if (cand.empty()) break;
    Subspace<K> C = Subspace<K>::span(n, cand);
    S = S + C;
    frontier = C.basis_vectors();
  }
  return S;
}

template <class K>
std::vector<Matrix<K>> left_mult_ops(const Algebra<K>& a) {
  std::vector<Matrix<K>> ops;
  for (size_t i = 0; i < a.dim(); ++i) ops.push_back(a.left_mult_basis(i));
  return ops;
}
template <class K>
std::vector<Matrix<K>> right_mult_ops(const Algebra<K>& a) {
  std::vector<Matrix<K>> ops;
  for (size_t i = 0; i < a.dim(); ++i) ops.push_back(a.right_mult_basis(i));
  return ops;
}
template <class K>
std::vector<Matrix<K>> two_sided_ops(const Algebra<K>& a) {
  auto ops = left_mult_ops(a);
  auto r = right_mult_ops(a);
  ops.insert(ops.end(), r.begin(), r.end());
  return ops;
}

template <class K>
Subspace<K> ideal_closure(const Algebra<K>& a, const std::vector<Vec<K>>& gens) {
  return operator_closure(a.dim(), gens, two_sided_ops(a));
}
template <class K>
Subspace<K> left_ideal_closure(const Algebra<K>& a, const std::vector<Vec<K>>& gens) {
  return operator_closure(a.dim(), gens, left_mult_ops(a));
}
template <class K>
Subspace<K> right_ideal_closure(const Algebra<K>& a, const std::vector<Vec<K>>& gens) {
  return operator_closure(a.dim(), gens, right_mult_ops(a));
}

template <class K>
bool is_two_sided_ideal(const Algebra<K>& a, const Subspace<K>& s) {
  for (auto& v : s.basis_vectors())
    for (size_t i = 0; i < a.dim(); ++i) {
      auto e = a.basis_vector(i);
      if (!s.contains(a.multiply(e, v)) || !s.contains(a.multiply(v, e))) return false;
    }
  return true;
}

// Product I*J of subspaces (span of all products).
template <class K>
Subspace<K> subspace_product(const Algebra<K>& a, const Subspace<K>& I, const Subspace<K>& J) {
  std::vector<Vec<K>> prods;
  for (auto& u : I.basis_vectors())
    for (auto& v : J.basis_vectors()) prods.push_back(a.multiply(u, v));
  if (prods.empty()) return Subspace<K>::zero(a.dim());
  return Subspace<K>::span(a.dim(), prods);
}

template <class K>
bool is_nilpotent_ideal(const Algebra<K>& a, const Subspace<K>& I) {
  Subspace<K> P = I;
  for (size_t k = 0; k <= a.dim() && !P.is_zero(); ++k) P = subspace_product(a, P, I);
  return P.is_zero();
}

// ---- constructions ----

template <class K>
Algebra<K> opposite_algebra(const Algebra<K>& a) {
  size_t n = a.dim();
  std::vector<Vec<K>> mult(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) mult[i * n + j] = a.basis_product(j, i);
  return Algebra<K>(a.field(), a.labels(), std::move(mult), a.unit());
}

template <class K>
AlgebraPtr<K> opposite_of(const Algebra<K>& a) {
  auto p = memoize<Algebra<K>>(a, &Algebra<K>::Cache::opposite, [&] { return opposite_algebra(a); });
  return p;
}

template <class K>
std::vector<std::string> tensor_labels(const std::vector<std::string>& x, const std::vector<std::string>& y) {
  std::vector<std::string> out;
  for (auto& a : x)
    for (auto& b : y) out.push_back(a + "⊗" + b);
  return out;
}

template <class K>
Algebra<K> tensor_of_algebras(const Algebra<K>& a, const Algebra<K>& b) {
  size_t n = a.dim(), m = b.dim(), N = n * m;
  std::vector<Vec<K>> mult(N * N);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < n; ++k)
        for (size_t l = 0; l < m; ++l)
          mult[(i * m + j) * N + (k * m + l)] = tensor_vec(a.basis_product(i, k), b.basis_product(j, l));
  return Algebra<K>(a.field(), tensor_labels<K>(a.labels(), b.labels()), std::move(mult), tensor_vec(a.unit(), b.unit()));
}

template <class K>
Algebra<K> matrix_algebra(size_t r, const FieldOf<K>& F) {
  size_t N = r * r;
  std::vector<std::string> labels;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) labels.push_back("E" + std::to_string(i + 1) + std::to_string(j + 1));
  std::vector<Vec<K>> mult(N * N, Vec<K>(N));
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j)
      for (size_t k = 0; k < r; ++k) mult[(i * r + j) * N + (j * r + k)][i * r + k] = F.one();
  Vec<K> unit(N);
  for (size_t i = 0; i < r; ++i) unit[i * r + i] = F.one();
  return Algebra<K>(F, labels, std::move(mult), unit);
}

template <class K>
Algebra<K> direct_product(const Algebra<K>& a, const Algebra<K>& b) {
  size_t n = a.dim(), m = b.dim(), N = n + m;
  std::vector<Vec<K>> mult(N * N, Vec<K>(N));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) mult[i * N + j][k] = a.basis_product(i, j)[k];
  for (size_t i = 0; i < m; ++i)
    for (size_t j = 0; j < m; ++j)
      for (size_t k = 0; k < m; ++k) mult[(n + i) * N + (n + j)][n + k] = b.basis_product(i, j)[k];
  std::vector<std::string> labels;
  for (auto& l : a.labels()) labels.push_back("(" + l + ",0)");
  for (auto& l : b.labels()) labels.push_back("(0," + l + ")");
  return Algebra<K>(a.field(), labels, std::move(mult), concat_vec(a.unit(), b.unit()));
}

// Quotient by a two-sided ideal; basis = images of the non-pivot basis vectors.
template <class K>
struct QuotientAlgebra {
  Algebra<K> algebra;
  Matrix<K> projection;  // dim(A/I) x dim(A)
  Matrix<K> section;     // dim(A) x dim(A/I): non-pivot standard vectors
};

template <class K>
QuotientAlgebra<K> quotient_algebra(const Algebra<K>& a, const Subspace<K>& ideal) {
  if (!is_two_sided_ideal(a, ideal)) throw InputError("quotient_algebra: subspace is not a two-sided ideal");
  auto np = ideal.nonpivots();
  size_t q = np.size();
  if (q == 0) throw InputError("quotient by the whole algebra");
  Matrix<K> proj(q, a.dim()), sec(a.dim(), q);
  for (size_t j = 0; j < a.dim(); ++j) proj.set_col(j, ideal.quotient_coordinates(a.basis_vector(j)));
  for (size_t t = 0; t < q; ++t) sec(np[t], t) = a.field().one();
  std::vector<Vec<K>> mult(q * q);
  for (size_t s = 0; s < q; ++s)
    for (size_t t = 0; t < q; ++t) mult[s * q + t] = ideal.quotient_coordinates(a.basis_product(np[s], np[t]));
  std::vector<std::string> labels;
  for (auto j : np) labels.push_back(a.labels()[j]);
  Algebra<K> b(a.field(), labels, std::move(mult), ideal.quotient_coordinates(a.unit()));
  return {std::move(b), std::move(proj), std::move(sec)};
}

// Subalgebra on a subspace; basis = the RREF basis of the span.
template <class K>
struct SubAlgebra {
  Algebra<K> algebra;
  Subspace<K> span;
  Matrix<K> inclusion;  // dim(A) x dim(S)
};

template <class K>
std::optional<std::pair<size_t, size_t>> subalgebra_failure(const Algebra<K>& a, const Subspace<K>& s) {
  auto bv = s.basis_vectors();
  for (size_t i = 0; i < bv.size(); ++i)
    for (size_t j = 0; j < bv.size(); ++j)
      if (!s.contains(a.multiply(bv[i], bv[j]))) return std::make_pair(i, j);
  return std::nullopt;
}

template <class K>
SubAlgebra<K> subalgebra_from_span(const Algebra<K>& a, const Subspace<K>& s,
                                   std::vector<std::string> labels = {}) {
  if (!s.contains(a.unit())) throw InputError("subalgebra_from_span: span does not contain 1");
  if (subalgebra_failure(a, s)) throw InputError("subalgebra_from_span: span is not closed under multiplication");
  size_t d = s.dim();
  auto bv = s.basis_vectors();
  std::vector<Vec<K>> mult(d * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) mult[i * d + j] = s.coordinates(a.multiply(bv[i], bv[j]));
  if (labels.size() != d) {
    labels.clear();
    for (auto& v : bv) labels.push_back(a.format_vector(v));
  }
  Matrix<K> inc = Matrix<K>::from_columns(bv, a.dim());
  return {Algebra<K>(a.field(), labels, std::move(mult), s.coordinates(a.unit())), s, inc};
}

// Algebra spanned by products of the given square matrices (together with the identity).
template <class K>
struct MatrixAlgebra {
  Algebra<K> algebra;
  std::vector<Matrix<K>> basis;  // basis matrices, in algebra basis order
  Subspace<K> span;              // flattened span
};

template <class K>
Subspace<K> matrix_span_generated_by(const std::vector<Matrix<K>>& gens, size_t n, const FieldOf<K>& F) {
  // Closure of {I} under left multiplication by the generators, on flattened matrices.
  auto span = Subspace<K>::span(n * n, {Matrix<K>::identity(n, F).flatten()});
  std::vector<Matrix<K>> frontier{Matrix<K>::identity(n, F)};
  while (!frontier.empty() && span.dim() < n * n) {
    std::vector<Vec<K>> cand;
    for (auto& f : frontier)
      for (auto& g : gens) {
        auto w = span.reduce((g * f).flatten());
        if (!is_zero_vec(w)) cand.push_back(std::move(w));
      }
    if (cand.empty()) break;
    auto C = Subspace<K>::span(n * n, cand);
    span = span + C;
    frontier.clear();
    for (auto& v : C.basis_vectors()) frontier.push_back(Matrix<K>::unflatten(v, n, n));
  }
  return span;
}

template <class K>
MatrixAlgebra<K> algebra_generated_by(const std::vector<Matrix<K>>& gens, size_t n, const FieldOf<K>& F,
                                      std::optional<Subspace<K>> known_span = std::nullopt) {
  auto span = known_span ? *known_span : matrix_span_generated_by(gens, n, F);
  size_t d = span.dim();
  std::vector<Matrix<K>> basis;
  for (size_t i = 0; i < d; ++i) basis.push_back(Matrix<K>::unflatten(span.basis_vector(i), n, n));
  std::vector<Vec<K>> mult(d * d);
  for (size_t i = 0; i < d; ++i)
    for (size_t j = 0; j < d; ++j) mult[i * d + j] = span.coordinates((basis[i] * basis[j]).flatten());
  std::vector<std::string> labels;
  for (size_t i = 0; i < d; ++i) labels.push_back("T" + std::to_string(i));
  Algebra<K> alg(F, labels, std::move(mult), span.coordinates(Matrix<K>::identity(n, F).flatten()));
  return {std::move(alg), std::move(basis), std::move(span)};
}

// Center {z : z e_i = e_i z}.
template <class K>
Subspace<K> center(const Algebra<K>& a) {
  size_t n = a.dim();
  Matrix<K> sys(n * n, n);
  for (size_t i = 0; i < n; ++i) {
    // z e_i - e_i z = (R_{e_i} - L_{e_i}) z
    Matrix<K> d = a.right_mult_basis(i) - a.left_mult_basis(i);
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) sys(i * n + r, c) = d(r, c);
  }
  return linear_kernel(sys, a.field());
}

// Minimal polynomial of x inside a unital (sub)algebra whose identity is `one`.
template <class K>
Poly<K> minimal_polynomial(const Algebra<K>& a, const Vec<K>& x, const Vec<K>& one) {
  std::vector<Vec<K>> powers{one};
  while (true) {
    Vec<K> next = a.multiply(powers.back(), x);
    Matrix<K> cols = Matrix<K>::from_columns(powers, a.dim());
    auto sol = solve_affine(cols, next);
    if (sol) {
      std::vector<K> c(powers.size() + 1);
      for (size_t i = 0; i < powers.size(); ++i) c[i] = -(*sol)[i];
      c[powers.size()] = a.field().one();
      return Poly<K>(c);
    }
    powers.push_back(next);
  }
}

template <class K>
Vec<K> eval_poly(const Algebra<K>& a, const Poly<K>& p, const Vec<K>& x, const Vec<K>& one) {
  Vec<K> acc(a.dim());
  for (size_t i = p.coeffs().size(); i-- > 0;) {
    acc = a.multiply(acc, x);
    axpy(acc, p.coeffs()[i], one);
  }
  return acc;
}

}  // namespace hopfkit
