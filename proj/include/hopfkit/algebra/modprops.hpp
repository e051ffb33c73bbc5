#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/algebra/module.hpp"
#include "hopfkit/algebra/radical.hpp"

namespace hopfkit {

enum class Verdict { Yes, No, Unknown };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "unknown";
  }
}

template <class K>
struct TopData {
  Subspace<K> mJ;    // M * rad
  Module<K> top;     // M / M rad
  Matrix<K> projection;
};

template <class K>
TopData<K> module_top(const Module<K>& m) {
  const auto& J = radical(m.algebra());
  auto mJ = module_times(m, J);
  auto q = quotient_module(m, mJ);
  return {mJ, std::move(q.module), std::move(q.projection)};
}

// Semisimple modules X, Y are isomorphic iff dim Hom(X,Y) = dim End(X) = dim End(Y).
template <class K>
bool semisimple_isomorphic(const Module<K>& x, const Module<K>& y) {
  if (x.dim() != y.dim()) return false;
  size_t xy = hom_space(x, y).dim();
  return xy == hom_space(x, x).dim() && xy == hom_space(y, y).dim();
}

template <class K>
struct ProjectivityResult {
  Verdict status = Verdict::Unknown;
  std::vector<Vec<K>> generators;  // minimal generators m_1..m_g
  Matrix<K> splitting;             // sigma: M -> A^g, (g*dimA) x dim M
  std::string note;
};

// Decides whether pi: A^g -> M splits, g = dim(M / M rad).
template <class K>
ProjectivityResult<K> is_projective(const Module<K>& m_in) {
  ProjectivityResult<K> res;
  Module<K> m = m_in.as_right();
  const auto& A = m.algebra();
  const auto& F = m.field();
  size_t d = m.dim(), n = A.dim();
  if (d == 0) {
    res.status = Verdict::Yes;
    res.note = "zero module";
    return res;
  }
  auto top = module_top(m);
  for (size_t j : top.mJ.nonpivots()) res.generators.push_back(unit_vec<K>(d, j, F));
  size_t g = res.generators.size();
  auto reg = regular_module(m.algebra_ptr(), Side::Right);
  auto hom = hom_basis(m, reg);  // each n x d
  // x |-> m_i . h_t(x)
  std::vector<Vec<K>> cols;
  for (size_t i = 0; i < g; ++i)
    for (auto& h : hom) {
      Matrix<K> phi(d, d);
      for (size_t c = 0; c < d; ++c) phi.set_col(c, m.action(h.col(c)).apply(res.generators[i]));
      cols.push_back(phi.flatten());
    }
  if (cols.empty()) {
    res.status = Verdict::No;
    res.note = "no nonzero maps to the regular module";
    return res;
  }
  auto sol = solve_affine(Matrix<K>::from_columns(cols, d * d), Matrix<K>::identity(d, F).flatten());
  if (!sol) {
    res.status = Verdict::No;
    res.note = "pi o sigma = id has no solution in Hom(M, A^" + std::to_string(g) + ")";
    return res;
  }
  Matrix<K> sigma(g * n, d);
  size_t idx = 0;
  for (size_t i = 0; i < g; ++i)
    for (auto& h : hom) {
      const K& c = (*sol)[idx++];
      if (c.is_zero()) continue;
      for (size_t r = 0; r < n; ++r)
        for (size_t col = 0; col < d; ++col) sigma(i * n + r, col) += c * h(r, col);
    }
  res.status = Verdict::Yes;
  res.splitting = std::move(sigma);
  return res;
}

// The map A^r -> M, (a_i) |-> sum m_i a_i, with columns indexed (i, basis j).
template <class K>
Matrix<K> basis_map(const Module<K>& m, const std::vector<Vec<K>>& gens) {
  size_t n = m.algebra().dim();
  Matrix<K> out(m.dim(), gens.size() * n);
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = 0; j < n; ++j) out.set_col(i * n + j, m.action_basis(j).apply(gens[i]));
  return out;
}

template <class K>
struct FreeResult {
  Verdict status = Verdict::Unknown;
  size_t rank = 0;
  std::vector<Vec<K>> basis;
  std::string stage;  // failing stage for No: "dimension" or "top"
  std::string note;
};

template <class K>
FreeResult<K> is_free(const Module<K>& m_in, size_t trials = 60, uint64_t seed = 0) {
  FreeResult<K> res;
  Module<K> m = m_in.as_right();
  const auto& F = m.field();
  size_t d = m.dim(), n = m.algebra().dim();
  if (d % n != 0) {
    res.status = Verdict::No;
    res.stage = "dimension";
    res.note = std::to_string(d) + "/" + std::to_string(n) + " is not an integer";
    return res;
  }
  size_t r = d / n;
  res.rank = r;
  if (r == 0) {
    res.status = Verdict::Yes;
    return res;
  }
  auto topM = module_top(m);
  auto topA = module_top(free_module(m.algebra_ptr(), Side::Right, r));
  if (!semisimple_isomorphic(topA.top, topM.top)) {
    res.status = Verdict::No;
    res.stage = "top";
    res.note = "M/M rad is not isomorphic to (A/rad)^" + std::to_string(r);
    return res;
  }
  size_t t = topM.top.dim();
  auto found = generic_determinant_nonzero(hom_space(topA.top, topM.top), t, F, trials, seed);
  if (found.status != DetStatus::Witness) {
    res.status = Verdict::Unknown;
    res.note = "tops agree but no top isomorphism was sampled: " + found.note;
    return res;
  }
  // Lift the images of the free generators through the section of M -> M/M rad.
  auto np = topM.mJ.nonpivots();
  for (size_t i = 0; i < r; ++i) {
    Vec<K> u(r * n);
    for (size_t k = 0; k < n; ++k) u[i * n + k] = m.algebra().unit()[k];
    Vec<K> img = found.witness.apply(topA.projection.apply(u));
    Vec<K> lift(d);
    for (size_t s = 0; s < np.size(); ++s) lift[np[s]] = img[s];
    res.basis.push_back(lift);
  }
  if (rank(basis_map(m, res.basis)) != d) {
    res.status = Verdict::Unknown;
    res.note = "lifted basis map is not bijective (internal inconsistency)";
    res.basis.clear();
    return res;
  }
  res.status = Verdict::Yes;
  return res;
}

template <class K>
struct IsoResult {
  Verdict status = Verdict::Unknown;
  Matrix<K> witness;
  std::string note;
  double bound = 1.0;
};

template <class K>
IsoResult<K> module_iso(const Module<K>& m_in, const Module<K>& n_in, size_t trials = 40, uint64_t seed = 0) {
  IsoResult<K> res;
  Module<K> m = m_in.as_right(), n = n_in.as_right();
  if (m_in.side() != n_in.side()) throw InputError("module_iso: side mismatch");
  if (m.dim() != n.dim()) {
    res.status = Verdict::No;
    res.note = "dimensions differ";
    res.bound = 0;
    return res;
  }
  if (m.dim() == 0) {
    res.status = Verdict::Yes;
    return res;
  }
  auto tm = module_top(m), tn = module_top(n);
  if (!semisimple_isomorphic(tm.top, tn.top)) {
    res.status = Verdict::No;
    res.note = "tops differ";
    res.bound = 0;
    return res;
  }
  auto found = generic_determinant_nonzero(hom_space(m, n), m.dim(), m.field(), trials, seed);
  if (found.status == DetStatus::Witness) {
    res.status = Verdict::Yes;
    res.witness = found.witness;
    res.bound = 0;
  } else if (radical(m.algebra()).is_zero()) {
    res.status = Verdict::Yes;
    res.note = "semisimple algebra: isomorphic tops force an isomorphism (no witness sampled)";
    res.bound = 0;
  } else if (found.exact) {
    res.status = Verdict::No;
    res.note = "hom space has no invertible element (exhaustive)";
    res.bound = 0;
  } else {
    res.note = found.note;
    res.bound = found.bound;
  }
  return res;
}

template <class K>
Module<K> dual_right_regular(const AlgebraPtr<K>& a) {  // A* with (xi a)(b) = xi(ab)
  return dual_module(regular_module(a, Side::Left));
}
template <class K>
Module<K> dual_left_regular(const AlgebraPtr<K>& a) {  // A* with (a xi)(b) = xi(ba)
  return dual_module(regular_module(a, Side::Right));
}

template <class K>
struct FrobeniusResult {
  Verdict status = Verdict::Unknown;
  Vec<K> functional;  // lambda in the dual basis
  std::string note;
};

template <class K>
FrobeniusResult<K> is_frobenius(const AlgebraPtr<K>& a, uint64_t seed = 0) {
  FrobeniusResult<K> res;
  auto fr = is_free(dual_right_regular(a), 60, seed);
  res.status = fr.status;
  res.note = fr.note;
  if (fr.status != Verdict::Yes) return res;
  res.functional = fr.basis[0];
  size_t n = a->dim();
  Matrix<K> gram(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (auto& [k, v] : a->basis_product_sparse(i, j)) gram(i, j) += v * res.functional[k];
  if (!is_invertible(gram)) {
    res.status = Verdict::Unknown;
    res.note = "witness functional has degenerate Gram matrix (internal inconsistency)";
  }
  return res;
}

template <class K>
struct QFResult {
  Verdict status = Verdict::Unknown;
  Verdict right_self_injective = Verdict::Unknown;  // A* projective as left module
  Verdict left_self_injective = Verdict::Unknown;   // A* projective as right module
  std::string note;
};

template <class K>
QFResult<K> is_quasi_frobenius(const AlgebraPtr<K>& a) {
  QFResult<K> res;
  res.right_self_injective = is_projective(dual_left_regular(a)).status;
  res.left_self_injective = is_projective(dual_right_regular(a)).status;
  if (res.right_self_injective == Verdict::Yes && res.left_self_injective == Verdict::Yes)
    res.status = Verdict::Yes;
  else if (res.right_self_injective == Verdict::No || res.left_self_injective == Verdict::No)
    res.status = Verdict::No;
  if (res.right_self_injective == Verdict::No) res.note = "A* is not projective as a left module";
  else if (res.left_self_injective == Verdict::No) res.note = "A* is not projective as a right module";
  return res;
}

struct ProbeReport {
  size_t n = 0;
  size_t trials = 0;
  size_t solvable = 0;    // samples X with a right inverse
  size_t violations = 0;  // XY = 1 but YX != 1
  uint64_t seed = 0;
  bool clean() const { return violations == 0; }
};

// Samples X in Mat_n(A), solves XY = 1 and checks YX = 1 whenever it is solvable.
template <class K>
ProbeReport weak_finiteness_probe(const Algebra<K>& a, size_t n, size_t trials, uint64_t seed) {
  ProbeReport rep;
  rep.n = n;
  rep.trials = trials;
  rep.seed = seed;
  const auto& F = a.field();
  auto M = tensor_of_algebras(matrix_algebra<K>(n, F), a);
  Rng rng(seed);
  for (size_t t = 0; t < trials; ++t) {
    Vec<K> x(M.dim());
    for (auto& c : x) c = sample_scalar(F, rng, 5);
    auto y = solve_affine(M.left_mult(x), M.unit());
    if (!y) continue;
    ++rep.solvable;
    if (M.multiply(*y, x) != M.unit()) ++rep.violations;
  }
  return rep;
}

}  // namespace hopfkit
