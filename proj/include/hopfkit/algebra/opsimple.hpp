#pragma once

#include <string>
#include <vector>

#include "hopfkit/algebra/wedderburn.hpp"

namespace hopfkit {

enum class Simplicity { Simple, NotSimple, Inconclusive };

inline const char* simplicity_name(Simplicity s) {
  switch (s) {
    case Simplicity::Simple: return "simple";
    case Simplicity::NotSimple: return "not simple";
    default: return "inconclusive";
  }
}

template <class K>
struct SimplicityResult {
  Simplicity status = Simplicity::Inconclusive;
  Subspace<K> witness;  // proper nonzero invariant subspace when NotSimple
  std::string certificate;
  size_t operator_dim = 0;  // dim of the algebra generated by the operators (0 if not built)
  size_t end_dim = 0;
};

// {X : X P = P X for every P}, as flattened n x n matrices.
template <class K>
Subspace<K> commutant(const std::vector<Matrix<K>>& ops, size_t n, const FieldOf<K>& F) {
  Matrix<K> sys(ops.size() * n * n, n * n);
  for (size_t o = 0; o < ops.size(); ++o) {
    const auto& P = ops[o];
    for (size_t r = 0; r < n; ++r)
      for (size_t c = 0; c < n; ++c) {
        size_t row = (o * n + r) * n + c;
        for (size_t k = 0; k < n; ++k) {
          sys(row, r * n + k) += P(k, c);
          sys(row, k * n + c) -= P(r, k);
        }
      }
  }
  return linear_kernel(sys, F);
}

// Decides whether k^n has a proper nonzero subspace invariant under all operators.
// Cheap closure probes first, then the operator algebra E: a nonzero radical gives the
// witness ann(rad E); otherwise k^n is semisimple and simple iff End_E is a division algebra.
template <class K>
SimplicityResult<K> operator_simplicity(size_t n, const std::vector<Matrix<K>>& ops, const FieldOf<K>& F,
                                        uint64_t seed = 0) {
  SimplicityResult<K> res;
  auto full = Subspace<K>::full(n, F);
  for (size_t i = 0; i < n; ++i) {
    auto c = operator_closure(n, {unit_vec<K>(n, i, F)}, ops);
    if (c != full) {
      res.status = Simplicity::NotSimple;
      res.witness = c;
      res.certificate = "closure of basis vector " + std::to_string(i) + " has dimension " + std::to_string(c.dim());
      return res;
    }
  }
  auto espan = matrix_span_generated_by(ops, n, F);
  res.operator_dim = espan.dim();
  if (res.operator_dim == n * n) {
    res.status = Simplicity::Simple;
    res.end_dim = 1;
    res.certificate = "operators generate all of End(k^" + std::to_string(n) + ")";
    return res;
  }
  auto E = algebra_generated_by(ops, n, F, std::optional<Subspace<K>>(espan));
  auto rad = radical_of(E.algebra);
  if (!rad->conclusive) {
    res.certificate = "radical of the operator algebra: " + rad->note;
    return res;
  }
  if (!rad->ideal.is_zero()) {
    Matrix<K> stacked(0, n);
    for (auto& r : rad->ideal.basis_vectors()) {
      Matrix<K> op(n, n);
      for (size_t t = 0; t < r.size(); ++t) op.add_scaled(r[t], E.basis[t]);
      stacked = vstack(stacked, op);
    }
    res.status = Simplicity::NotSimple;
    res.witness = linear_kernel(stacked, F);
    res.certificate = "operator algebra has radical of dimension " + std::to_string(rad->ideal.dim()) +
                      "; its annihilator is invariant";
    return res;
  }
  auto end = commutant(ops, n, F);
  res.end_dim = end.dim();
  if (end.dim() == 1) {
    res.status = Simplicity::Simple;
    res.certificate = "operator algebra semisimple of dimension " + std::to_string(res.operator_dim) +
                      ", endomorphisms are scalars";
    return res;
  }
  std::vector<Matrix<K>> eb;
  for (auto& v : end.basis_vectors()) eb.push_back(Matrix<K>::unflatten(v, n, n));
  auto endalg = algebra_generated_by(eb, n, F);
  auto div = check_division_algebra(endalg.algebra, seed);
  if (div.status == DivisionStatus::Division) {
    res.status = Simplicity::Simple;
    res.certificate = "operator algebra semisimple, endomorphism algebra of dimension " +
                      std::to_string(end.dim()) + " is a division algebra";
  } else if (div.status == DivisionStatus::ZeroDivisor) {
    Matrix<K> y(n, n);
    for (size_t t = 0; t < div.zero_divisor.size(); ++t) y.add_scaled(div.zero_divisor[t], endalg.basis[t]);
    res.status = Simplicity::NotSimple;
    res.witness = image(y);
    res.certificate = "endomorphism with a kernel; its image is invariant";
  } else {
    res.certificate = "endomorphism algebra undecided: " + div.note;
  }
  return res;
}

}  // namespace hopfkit
