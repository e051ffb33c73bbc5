#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopfkit/algebra/algebra.hpp"

namespace hopfkit {

template <class K>
struct RadicalResult {
  bool conclusive = true;
  Subspace<K> ideal;
  std::string note;
};

namespace detail {

// Dickson: in characteristic 0 the radical is the kernel of (x,y) -> tr(L_{xy}).
template <class K>
Subspace<K> radical_trace_form(const Algebra<K>& a) {
  size_t n = a.dim();
  std::vector<K> tr(n);
  for (size_t k = 0; k < n; ++k)
    for (size_t j = 0; j < n; ++j) tr[k] += a.basis_product(k, j)[j];
  Matrix<K> gram(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (auto& [k, v] : a.basis_product_sparse(i, j)) gram(i, j) += v * tr[k];
  return linear_kernel(gram, a.field());
}

using IMat = std::vector<std::vector<int64_t>>;

inline IMat imat_mul(const IMat& x, const IMat& y, int64_t mod) {
  size_t n = x.size();
  IMat r(n, std::vector<int64_t>(n, 0));
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      int64_t a = x[i][k];
      if (a == 0) continue;
      for (size_t j = 0; j < n; ++j) r[i][j] = (r[i][j] + a * y[k][j]) % mod;
    }
  return r;
}

// Iterated trace maps over F_p (after restriction of scalars from F_{p^k}):
// I_{-1} = A, I_i = {a in I_{i-1} : g_i(ab) = 0 for all b}, with
// g_i(x) = (Tr(X^{p^i}) mod p^{i+1}) / p^i for an integral lift X of L_x.
// The last I_i with p^i <= dim_{F_p} A is the radical.
inline Subspace<GF> radical_trace_maps(const Algebra<GF>& a) {
  const GFContext* ctx = a.field().context();
  uint32_t p = ctx->p, k = ctx->k;
  size_t n = a.dim(), N = n * k;
  GFField Fp(GFContext::get(p, 1));

  auto to_fp = [&](const Vec<GF>& v) {
    Vec<GF> out(N);
    for (size_t j = 0; j < n; ++j) {
      auto d = ctx->digits(v[j].code());
      for (uint32_t t = 0; t < k; ++t) out[j * k + t] = Fp.from_int(d[t]);
    }
    return out;
  };
  auto from_fp = [&](const Vec<GF>& w) {
    Vec<GF> out(n);
    for (size_t j = 0; j < n; ++j) {
      std::vector<uint32_t> d(k);
      for (uint32_t t = 0; t < k; ++t) d[t] = w[j * k + t].code();
      out[j] = GF(ctx, ctx->encode(d));
    }
    return out;
  };
  std::vector<Vec<GF>> beta;  // F_p basis of A: omega^t e_j
  uint32_t pt = 1;
  std::vector<uint32_t> omega_pow(k);
  for (uint32_t t = 0; t < k; ++t) {
    omega_pow[t] = pt;
    pt *= p;
  }
  for (size_t j = 0; j < n; ++j)
    for (uint32_t t = 0; t < k; ++t) {
      Vec<GF> v(n);
      v[j] = GF(ctx, omega_pow[t]);
      beta.push_back(v);
    }

  size_t l = 0;
  for (uint64_t pw = p; pw <= N; pw *= p) ++l;
  int64_t mod = 1;
  for (size_t i = 0; i <= l; ++i) mod *= p;

  auto lift_regular = [&](const Vec<GF>& x) {
    IMat m(N, std::vector<int64_t>(N, 0));
    for (size_t c = 0; c < N; ++c) {
      auto col = to_fp(a.multiply(x, beta[c]));
      for (size_t r = 0; r < N; ++r) m[r][c] = col[r].code();
    }
    return m;
  };
  auto g = [&](const Vec<GF>& x, size_t i) -> uint32_t {
    int64_t mi = 1;
    for (size_t t = 0; t <= i; ++t) mi *= p;
    IMat X = lift_regular(x);
    for (size_t t = 0; t < i; ++t) {
      // X <- X^p mod p^{i+1}
      IMat r = X;
      for (uint32_t s = 1; s < p; ++s) r = imat_mul(r, X, mi);
      X = r;
    }
    int64_t tr = 0;
    for (size_t r = 0; r < N; ++r) tr = (tr + X[r][r]) % mi;
    return static_cast<uint32_t>((tr / (mi / p)) % p);
  };

  Subspace<GF> I = Subspace<GF>::full(N, Fp);
  for (size_t i = 0; i <= l && !I.is_zero(); ++i) {
    auto basis = I.basis_vectors();
    Matrix<GF> G(N, basis.size());
    for (size_t r = 0; r < basis.size(); ++r) {
      Vec<GF> ar = from_fp(basis[r]);
      for (size_t s = 0; s < N; ++s) G(s, r) = Fp.from_int(g(a.multiply(ar, beta[s]), i));
    }
    auto ker = linear_kernel(G, Fp);
    std::vector<Vec<GF>> next;
    for (auto& c : ker.basis_vectors()) {
      Vec<GF> v(N);
      for (size_t r = 0; r < basis.size(); ++r) axpy(v, c[r], basis[r]);
      next.push_back(v);
    }
    I = next.empty() ? Subspace<GF>::zero(N) : Subspace<GF>::span(N, next);
  }
  std::vector<Vec<GF>> back;
  for (auto& w : I.basis_vectors()) back.push_back(from_fp(w));
  if (back.empty()) return Subspace<GF>::zero(n);
  return Subspace<GF>::span(n, back);
}

template <class K>
Subspace<K> radical_raw(const Algebra<K>& a) {
  if constexpr (is_rational_v<K>) {
    return radical_trace_form(a);
  } else {
    if (static_cast<uint64_t>(a.field().characteristic()) > a.dim() * a.field().degree())
      return radical_trace_form(a);
    return radical_trace_maps(a);
  }
}

}  // namespace detail

// Jacobson radical, with nilpotency and semisimple-quotient sanity checks.
template <class K>
RadicalResult<K> compute_radical(const Algebra<K>& a) {
  RadicalResult<K> res;
  res.ideal = detail::radical_raw(a);
  if (!is_two_sided_ideal(a, res.ideal)) {
    res.conclusive = false;
    res.note = "candidate radical is not an ideal";
    return res;
  }
  if (!is_nilpotent_ideal(a, res.ideal)) {
    res.conclusive = false;
    res.note = "candidate radical is not nilpotent";
    return res;
  }
  if (!res.ideal.is_zero()) {
    auto q = quotient_algebra(a, res.ideal);
    if (!detail::radical_raw(q.algebra).is_zero()) {
      res.conclusive = false;
      res.note = "quotient by candidate radical is not semisimple";
    }
  }
  return res;
}

template <class K>
std::shared_ptr<const RadicalResult<K>> radical_of(const Algebra<K>& a) {
  return memoize<RadicalResult<K>>(a, &Algebra<K>::Cache::radical, [&] { return compute_radical(a); });
}

template <class K>
const Subspace<K>& radical(const Algebra<K>& a) {
  auto r = radical_of(a);
  if (!r->conclusive) throw std::runtime_error("radical computation inconclusive: " + r->note);
  return r->ideal;
}

}  // namespace hopfkit
