#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "hopfkit/exactla/subspace.hpp"

namespace hopfkit {

enum class DetStatus { Witness, NotFound, Unknown };

template <class K>
struct DetSearchResult {
  DetStatus status = DetStatus::Unknown;
  Matrix<K> witness;       // valid when status == Witness
  Vec<K> coordinates;      // coordinates of the witness in the supplied basis
  bool exact = false;      // NotFound: true when the search was exhaustive
  double bound = 1.0;      // probability bound that a nonzero determinant was missed
  size_t trials_used = 0;
  uint64_t seed = 0;
  std::string note;
};

namespace detail {

constexpr uint64_t kExhaustLimit = 1u << 16;
constexpr uint64_t kGridLimit = 20000;

inline uint64_t bounded_pow(uint64_t base, size_t e, uint64_t cap) {
  uint64_t r = 1;
  for (size_t i = 0; i < e; ++i) {
    if (base != 0 && r > cap / base) return cap + 1;
    r *= base;
  }
  return r;
}

template <class K>
Matrix<K> combine_mats(const std::vector<Matrix<K>>& basis, const Vec<K>& c) {
  Matrix<K> m(basis[0].rows(), basis[0].cols());
  for (size_t i = 0; i < basis.size(); ++i) m.add_scaled(c[i], basis[i]);
  return m;
}

// Evaluate on every point of S^d where S is the first s field elements; stops at the first nonzero.
template <class K>
bool grid_search(const std::vector<Matrix<K>>& basis, const FieldOf<K>& F, uint64_t s, Vec<K>& hit) {
  size_t d = basis.size();
  std::vector<uint64_t> idx(d, 0);
  std::vector<K> elems;
  for (uint64_t i = 0; i < s; ++i) elems.push_back(F.element(i));
  while (true) {
    Vec<K> c(d);
    for (size_t i = 0; i < d; ++i) c[i] = elems[idx[i]];
    if (!is_zero_vec(c) && !determinant(combine_mats(basis, c)).is_zero()) {
      hit = c;
      return true;
    }
    size_t i = 0;
    while (i < d && ++idx[i] == s) idx[i++] = 0;
    if (i == d) return false;
  }
}

}  // namespace detail

// Decides whether some member of span(basis) is invertible. Random evaluation
// (Schwartz-Zippel) first; exhaustive or grid certificates when small enough.
template <class K>
DetSearchResult<K> generic_determinant_nonzero(const std::vector<Matrix<K>>& basis, const FieldOf<K>& F,
                                               size_t trials, uint64_t seed) {
  DetSearchResult<K> res;
  res.seed = seed;
  if (basis.empty()) {
    res.status = DetStatus::NotFound;
    res.exact = true;
    res.bound = 0;
    res.note = "empty space";
    return res;
  }
  size_t n = basis[0].rows();
  for (auto& b : basis)
    if (!b.is_square() || b.rows() != n) throw std::invalid_argument("generic determinant needs square matrices of one size");
  size_t d = basis.size();
  auto found = [&](const Vec<K>& c, const std::string& how) {
    res.status = DetStatus::Witness;
    res.coordinates = c;
    res.witness = detail::combine_mats(basis, c);
    if (determinant(res.witness).is_zero()) throw std::logic_error("witness re-verification failed");
    res.exact = true;
    res.bound = 0;
    res.note = how;
    return res;
  };
  if (n == 0) return found(Vec<K>(d), "zero size");

  uint64_t sample_size = F.is_finite() ? F.order() : std::max<uint64_t>(2 * n, 16);
  Rng rng(seed);
  for (size_t t = 0; t < trials; ++t) {
    Vec<K> c(d);
    for (size_t i = 0; i < d; ++i) c[i] = sample_scalar(F, rng, sample_size);
    ++res.trials_used;
    if (!determinant(detail::combine_mats(basis, c)).is_zero()) return found(c, "random evaluation");
  }

  if (F.is_finite()) {
    uint64_t total = detail::bounded_pow(F.order(), d, detail::kExhaustLimit);
    if (total <= detail::kExhaustLimit) {
      Vec<K> hit;
      if (detail::grid_search(basis, F, F.order(), hit)) return found(hit, "exhaustive enumeration");
      res.status = DetStatus::NotFound;
      res.exact = true;
      res.bound = 0;
      res.note = "exhaustive enumeration over the base field";
      return res;
    }
  }
  // det is a polynomial of degree <= n in d variables: vanishing on S^d with |S| > n forces det == 0.
  bool grid_ok = !F.is_finite() || F.order() > n;
  if (grid_ok && detail::bounded_pow(n + 1, d, detail::kGridLimit) <= detail::kGridLimit) {
    Vec<K> hit;
    if (detail::grid_search(basis, F, n + 1, hit)) return found(hit, "grid certificate");
    res.status = DetStatus::NotFound;
    res.exact = true;
    res.bound = 0;
    res.note = "determinant vanishes identically (grid of size n+1 in each variable)";
    return res;
  }
  res.status = DetStatus::Unknown;
  if (F.is_finite() && F.order() <= 2 * n) {
    res.bound = 1.0;
    res.note = "field too small for a useful sampling bound";
    if constexpr (std::is_same_v<K, GF>) {
      // Sample in an extension of size > 2n to learn whether det is identically zero.
      const GFContext* ctx = F.context();
      uint32_t m = 1;
      uint64_t Q = ctx->q;
      while (Q <= 2 * n) {
        Q *= ctx->q;
        ++m;
      }
      if (Q <= GFContext::kMaxOrder) {
        GFField big(GFContext::get(ctx->p, ctx->k * m));
        auto emb = F.embedding_into(big);
        std::vector<Matrix<GF>> lifted;
        for (auto& b : basis) {
          Matrix<GF> l(n, n);
          for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) l(i, j) = emb[b(i, j).code()];
          lifted.push_back(l);
        }
        bool nonzero = false;
        for (size_t t = 0; t < trials && !nonzero; ++t) {
          Vec<GF> c(d);
          for (size_t i = 0; i < d; ++i) c[i] = sample_scalar(big, rng, Q);
          nonzero = !determinant(detail::combine_mats(lifted, c)).is_zero();
        }
        if (nonzero) {
          res.note = "determinant is nonzero over " + big.name() + " but no base-field witness was found";
        } else {
          res.bound = std::pow(static_cast<double>(n) / static_cast<double>(Q), static_cast<double>(trials));
          res.note = "determinant vanished on all samples over " + big.name();
        }
      }
    }
  } else {
    res.bound = std::pow(static_cast<double>(n) / static_cast<double>(sample_size), static_cast<double>(trials));
    std::ostringstream os;
    os << "(" << n << "/" << sample_size << ")^" << trials;
    res.note = "no witness in " + std::to_string(trials) + " trials; miss probability <= " + os.str();
  }
  return res;
}

template <class K>
DetSearchResult<K> generic_determinant_nonzero(const Subspace<K>& space, size_t n, const FieldOf<K>& F,
                                               size_t trials, uint64_t seed) {
  if (space.ambient() != n * n) throw std::invalid_argument("space is not a space of square matrices");
  std::vector<Matrix<K>> basis;
  for (size_t i = 0; i < space.dim(); ++i) basis.push_back(Matrix<K>::unflatten(space.basis_vector(i), n, n));
  return generic_determinant_nonzero(basis, F, trials, seed);
}

}  // namespace hopfkit
