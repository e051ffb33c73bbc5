#pragma once

#include <cstdint>
#include <random>
#include <type_traits>
#include <vector>

#include "hopfkit/exactla/gf.hpp"
#include "hopfkit/exactla/rational.hpp"

namespace hopfkit {

template <class K>
using FieldOf = typename K::Field;

template <class K>
using Vec = std::vector<K>;

template <class K>
inline constexpr bool is_rational_v = std::is_same_v<K, Rational>;

// Seeded generator shared by every randomized routine; results depend only on the seed.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t next() { return eng_(); }
  uint64_t below(uint64_t n) { return n == 0 ? 0 : eng_() % n; }

 private:
  std::mt19937_64 eng_;
};

// Uniform element for finite fields; an integer in [0, bound) for Q.
template <class F>
typename F::Scalar sample_scalar(const F& field, Rng& rng, uint64_t bound) {
  if (field.is_finite()) return field.element(rng.below(field.order()));
  return field.element(rng.below(bound));
}

template <class K>
bool is_zero_vec(const Vec<K>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

template <class K>
Vec<K> zero_vec(size_t n) {
  return Vec<K>(n);
}

template <class K>
Vec<K> unit_vec(size_t n, size_t i, const FieldOf<K>& F) {
  Vec<K> v(n);
  v[i] = F.one();
  return v;
}

template <class K>
Vec<K> add_vec(const Vec<K>& a, const Vec<K>& b) {
  Vec<K> r(a);
  for (size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] += b[i];
  return r;
}

template <class K>
Vec<K> sub_vec(const Vec<K>& a, const Vec<K>& b) {
  Vec<K> r(a);
  for (size_t i = 0; i < r.size(); ++i)
    if (!b[i].is_zero()) r[i] -= b[i];
  return r;
}

template <class K>
Vec<K> scale_vec(const K& c, const Vec<K>& a) {
  Vec<K> r(a.size());
  if (c.is_zero()) return r;
  for (size_t i = 0; i < r.size(); ++i)
    if (!a[i].is_zero()) r[i] = c * a[i];
  return r;
}

// r += c * a
template <class K>
void axpy(Vec<K>& r, const K& c, const Vec<K>& a) {
  if (c.is_zero()) return;
  for (size_t i = 0; i < r.size(); ++i)
    if (!a[i].is_zero()) r[i] += c * a[i];
}

template <class K>
Vec<K> concat_vec(const Vec<K>& a, const Vec<K>& b) {
  Vec<K> r(a);
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// Coordinates of a⊗b in the basis e_i⊗f_j ordered i*dim(b)+j.
template <class K>
Vec<K> tensor_vec(const Vec<K>& a, const Vec<K>& b) {
  Vec<K> r(a.size() * b.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (size_t j = 0; j < b.size(); ++j)
      if (!b[j].is_zero()) r[i * b.size() + j] = a[i] * b[j];
  }
  return r;
}

}  // namespace hopfkit
