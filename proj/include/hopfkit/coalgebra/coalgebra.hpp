#pragma once

#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "hopfkit/algebra.hpp"

namespace hopfkit {

template <class K>
struct Triple {
  size_t i, j;
  K c;
};

// Finite-dimensional coalgebra. Delta(e_l) is stored densely in the tensor basis i*n + j.
template <class K>
class Coalgebra {
 public:
  using Field = FieldOf<K>;

  Coalgebra(Field F, std::vector<std::string> labels, std::vector<Vec<K>> comult, Vec<K> counit)
      : F_(F), n_(labels.size()), labels_(std::move(labels)), comult_(std::move(comult)), counit_(std::move(counit)) {
    if (n_ == 0) throw InputError("coalgebra dimension must be positive");
    if (comult_.size() != n_) throw InputError("comultiplication needs one entry per basis element");
    for (auto& v : comult_)
      if (v.size() != n_ * n_) throw InputError("comultiplication vector has wrong length");
    if (counit_.size() != n_) throw InputError("counit has wrong length");
  }

  static Coalgebra from_triples(Field F, std::vector<std::string> labels, const std::vector<std::vector<Triple<K>>>& t,
                                Vec<K> counit) {
    size_t n = labels.size();
    std::vector<Vec<K>> comult(n, Vec<K>(n * n));
    for (size_t l = 0; l < t.size() && l < n; ++l)
      for (auto& [i, j, c] : t[l]) {
        if (i >= n || j >= n) throw InputError("comultiplication index out of range");
        comult[l][i * n + j] += c;
      }
    return Coalgebra(F, std::move(labels), std::move(comult), std::move(counit));
  }

  const Field& field() const { return F_; }
  size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vec<K>& comult_basis(size_t l) const { return comult_[l]; }
  const Vec<K>& counit() const { return counit_; }
  // Coefficient of e_i (x) e_j in Delta(e_l).
  const K& coeff(size_t l, size_t i, size_t j) const { return comult_[l][i * n_ + j]; }

  std::vector<Triple<K>> triples(size_t l) const {
    std::vector<Triple<K>> out;
    for (size_t i = 0; i < n_; ++i)
      for (size_t j = 0; j < n_; ++j)
        if (!coeff(l, i, j).is_zero()) out.push_back({i, j, coeff(l, i, j)});
    return out;
  }

  Vec<K> comultiply(const Vec<K>& v) const {
    Vec<K> r(n_ * n_);
    for (size_t l = 0; l < n_; ++l)
      if (!v[l].is_zero()) axpy(r, v[l], comult_[l]);
    return r;
  }
  K counit_of(const Vec<K>& v) const {
    K s;
    for (size_t l = 0; l < n_; ++l) s += v[l] * counit_[l];
    return s;
  }
  // Delta as an n^2 x n matrix.
  Matrix<K> comult_matrix() const { return Matrix<K>::from_columns(comult_, n_ * n_); }

  friend bool operator==(const Coalgebra& a, const Coalgebra& b) {
    return a.n_ == b.n_ && a.comult_ == b.comult_ && a.counit_ == b.counit_;
  }

 private:
  Field F_;
  size_t n_;
  std::vector<std::string> labels_;
  std::vector<Vec<K>> comult_;
  Vec<K> counit_;
};

template <class K>
using CoalgebraPtr = std::shared_ptr<const Coalgebra<K>>;

template <class K>
CoalgebraPtr<K> share(Coalgebra<K> c) {
  return std::make_shared<const Coalgebra<K>>(std::move(c));
}

// (f (x) g) on tensor vectors, f: a -> b, g: c -> d.
template <class K>
Vec<K> apply_tensor(const Matrix<K>& f, const Matrix<K>& g, const Vec<K>& v) {
  size_t a = f.cols(), c = g.cols(), b = f.rows(), d = g.rows();
  Vec<K> out(b * d);
  for (size_t i = 0; i < a; ++i)
    for (size_t j = 0; j < c; ++j) {
      const K& x = v[i * c + j];
      if (x.is_zero()) continue;
      for (size_t r = 0; r < b; ++r) {
        if (f(r, i).is_zero()) continue;
        K fx = x * f(r, i);
        for (size_t s = 0; s < d; ++s)
          if (!g(s, j).is_zero()) out[r * d + s] += fx * g(s, j);
      }
    }
  return out;
}

template <class K>
ValidationReport validate_coalgebra(const Coalgebra<K>& c) {
  ValidationReport rep;
  size_t n = c.dim();
  for (size_t l = 0; l < n; ++l) {
    // (Delta (x) id) Delta vs (id (x) Delta) Delta, in the basis (i*n + j)*n + k
    Vec<K> lhs(n * n * n), rhs(n * n * n);
    for (size_t a = 0; a < n; ++a)
      for (size_t b = 0; b < n; ++b) {
        const K& x = c.coeff(l, a, b);
        if (x.is_zero()) continue;
        for (size_t i = 0; i < n; ++i)
          for (size_t j = 0; j < n; ++j) {
            const K& y = c.coeff(a, i, j);
            if (!y.is_zero()) lhs[(i * n + j) * n + b] += x * y;
            const K& z = c.coeff(b, i, j);
            if (!z.is_zero()) rhs[(a * n + i) * n + j] += x * z;
          }
      }
    if (lhs != rhs) rep.add("coassociativity", {l}, "Delta fails on " + c.labels()[l]);
    Vec<K> left(n), right(n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        const K& x = c.coeff(l, i, j);
        if (x.is_zero()) continue;
        left[j] += c.counit()[i] * x;
        right[i] += x * c.counit()[j];
      }
    Vec<K> e = unit_vec<K>(n, l, c.field());
    if (left != e) rep.add("left counit", {l}, "(eps x id)Delta(" + c.labels()[l] + ") != " + c.labels()[l]);
    if (right != e) rep.add("right counit", {l}, "(id x eps)Delta(" + c.labels()[l] + ") != " + c.labels()[l]);
  }
  return rep;
}

// C* with (xi eta)(c) = sum xi(c1) eta(c2); unit eps.
template <class K>
Algebra<K> dual_algebra(const Coalgebra<K>& c) {
  size_t n = c.dim();
  std::vector<Vec<K>> mult(n * n, Vec<K>(n));
  for (size_t l = 0; l < n; ++l)
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) mult[i * n + j][l] = c.coeff(l, i, j);
  std::vector<std::string> labels;
  for (auto& s : c.labels()) labels.push_back(s + "*");
  return Algebra<K>(c.field(), labels, std::move(mult), c.counit());
}

template <class K>
Coalgebra<K> dual_coalgebra(const Algebra<K>& a) {
  size_t n = a.dim();
  std::vector<Vec<K>> comult(n, Vec<K>(n * n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (auto& [l, v] : a.basis_product_sparse(i, j)) comult[l][i * n + j] = v;
  std::vector<std::string> labels;
  for (auto& s : a.labels()) labels.push_back(s + "*");
  return Coalgebra<K>(a.field(), labels, std::move(comult), a.unit());
}

// Labels are not part of the comparison; dual_coalgebra(dual_algebra(c)) == c.
template <class K>
bool same_algebra_data(const Algebra<K>& a, const Algebra<K>& b) {
  if (a.dim() != b.dim() || a.unit() != b.unit()) return false;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j)
      if (a.basis_product(i, j) != b.basis_product(i, j)) return false;
  return true;
}

template <class K>
Coalgebra<K> matrix_coalgebra(size_t r, const FieldOf<K>& F) {
  size_t n = r * r;
  std::vector<std::string> labels;
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) labels.push_back("c" + std::to_string(i + 1) + std::to_string(j + 1));
  std::vector<Vec<K>> comult(n, Vec<K>(n * n));
  Vec<K> eps(n);
  for (size_t i = 0; i < r; ++i)
    for (size_t j = 0; j < r; ++j) {
      for (size_t l = 0; l < r; ++l) comult[i * r + j][(i * r + l) * n + (l * r + j)] = F.one();
      if (i == j) eps[i * r + j] = F.one();
    }
  return Coalgebra<K>(F, labels, std::move(comult), eps);
}

// Coalgebra with every basis element group-like.
template <class K>
Coalgebra<K> grouplike_coalgebra(std::vector<std::string> labels, const FieldOf<K>& F) {
  size_t n = labels.size();
  std::vector<Vec<K>> comult(n, Vec<K>(n * n));
  Vec<K> eps(n);
  for (size_t i = 0; i < n; ++i) {
    comult[i][i * n + i] = F.one();
    eps[i] = F.one();
  }
  return Coalgebra<K>(F, std::move(labels), std::move(comult), eps);
}

// Span of I (x) C + C (x) I inside C (x) C.
template <class K>
Subspace<K> coideal_sum_space(const Coalgebra<K>& c, const Subspace<K>& I) {
  size_t n = c.dim();
  std::vector<Vec<K>> vs;
  for (auto& b : I.basis_vectors())
    for (size_t j = 0; j < n; ++j) {
      auto e = unit_vec<K>(n, j, c.field());
      vs.push_back(tensor_vec(b, e));
      vs.push_back(tensor_vec(e, b));
    }
  if (vs.empty()) return Subspace<K>::zero(n * n);
  return Subspace<K>::span(n * n, vs);
}

// nullopt when I is a coideal; otherwise the violated condition.
template <class K>
std::optional<std::string> coideal_failure(const Coalgebra<K>& c, const Subspace<K>& I) {
  auto bv = I.basis_vectors();
  for (size_t t = 0; t < bv.size(); ++t)
    if (!c.counit_of(bv[t]).is_zero()) return "counit does not vanish on basis vector " + std::to_string(t) + " of I";
  auto S = coideal_sum_space(c, I);
  for (size_t t = 0; t < bv.size(); ++t)
    if (!S.contains(c.comultiply(bv[t])))
      return "Delta(v) not in I(x)C + C(x)I for v = basis vector " + std::to_string(t) + " of I";
  return std::nullopt;
}

template <class K>
bool is_subcoalgebra(const Coalgebra<K>& c, const Subspace<K>& s) {
  if (s.is_zero()) return true;
  auto bv = s.basis_vectors();
  std::vector<Vec<K>> ts;
  for (auto& x : bv)
    for (auto& y : bv) ts.push_back(tensor_vec(x, y));
  auto SS = Subspace<K>::span(c.dim() * c.dim(), ts);
  for (auto& x : bv)
    if (!SS.contains(c.comultiply(x))) return false;
  return true;
}

template <class K>
struct QuotientCoalgebra {
  Coalgebra<K> coalgebra;
  Matrix<K> projection;  // dim(C/I) x dim(C)
};

template <class K>
QuotientCoalgebra<K> quotient_coalgebra(const Coalgebra<K>& c, const Subspace<K>& I) {
  if (auto f = coideal_failure(c, I)) throw InputError("quotient_coalgebra: " + *f);
  auto np = I.nonpivots();
  size_t q = np.size();
  Matrix<K> proj(q, c.dim());
  for (size_t j = 0; j < c.dim(); ++j) proj.set_col(j, I.quotient_coordinates(unit_vec<K>(c.dim(), j, c.field())));
  std::vector<Vec<K>> comult;
  Vec<K> eps(q);
  std::vector<std::string> labels;
  for (size_t t = 0; t < q; ++t) {
    comult.push_back(apply_tensor(proj, proj, c.comult_basis(np[t])));
    eps[t] = c.counit()[np[t]];
    labels.push_back("[" + c.labels()[np[t]] + "]");
  }
  return {Coalgebra<K>(c.field(), labels, std::move(comult), eps), std::move(proj)};
}

template <class K>
bool is_coalgebra_map(const Coalgebra<K>& c, const Coalgebra<K>& d, const Matrix<K>& f) {
  for (size_t l = 0; l < c.dim(); ++l) {
    Vec<K> col = f.col(l);
    if (apply_tensor(f, f, c.comult_basis(l)) != d.comultiply(col)) return false;
    if (d.counit_of(col) != c.counit()[l]) return false;
  }
  return true;
}

template <class K>
struct CoradicalData {
  bool conclusive = true;
  std::string note;
  Subspace<K> coradical;
  std::vector<Subspace<K>> simples;
};

// Coradical = annihilator of rad(C*); simples = annihilators of the maximal ideals of C*.
template <class K>
CoradicalData<K> coradical_and_simples(const Coalgebra<K>& c) {
  CoradicalData<K> res;
  auto dual = dual_algebra(c);
  auto w = wedderburn_data(dual);
  res.conclusive = w->conclusive;
  res.note = w->note;
  res.coradical = w->radical.annihilator(c.field());
  Subspace<K> sum = Subspace<K>::zero(c.dim());
  for (auto& b : w->blocks) {
    auto s = b.max_ideal.annihilator(c.field());
    res.simples.push_back(s);
    sum = sum + s;
  }
  if (res.conclusive && !(sum == res.coradical)) {
    res.conclusive = false;
    res.note = "simple subcoalgebras do not sum to the coradical";
  }
  return res;
}

// Sums of subsets of the simple subcoalgebras, plus the whole coalgebra.
template <class K>
std::vector<Subspace<K>> subcoalgebra_lattice(const Coalgebra<K>& c, const std::vector<Subspace<K>>& simples) {
  std::vector<Subspace<K>> out;
  auto add = [&](const Subspace<K>& s) {
    for (auto& o : out)
      if (o == s) return;
    out.push_back(s);
  };
  size_t s = simples.size();
  if (s <= 12)
    for (uint64_t mask = 0; mask < (uint64_t{1} << s); ++mask) {
      Subspace<K> sum = Subspace<K>::zero(c.dim());
      for (size_t i = 0; i < s; ++i)
        if (mask >> i & 1) sum = sum + simples[i];
      add(sum);
    }
  add(Subspace<K>::full(c.dim(), c.field()));
  return out;
}

// Hom(C, B) with convolution, modelled as B (x) C*.
template <class K>
Algebra<K> convolution_algebra(const Coalgebra<K>& c, const Algebra<K>& b) {
  if (c.field().characteristic() != b.field().characteristic()) throw InputError("convolution_algebra: field mismatch");
  auto alg = tensor_of_algebras(b, dual_algebra(c));
#ifdef HOPFKIT_CHECKED
  if (!validate_algebra(alg).ok()) throw std::logic_error("convolution algebra failed validation");
#endif
  return alg;
}

}  // namespace hopfkit
