#pragma once

// Small algebras written out by hand from their defining rules, independent of
// the library catalog, so tests can compare the two.

#include <functional>
#include <memory>

#include "hopfkit/algebra.hpp"
#include "hopfkit/coalgebra.hpp"

namespace testsupport {

using namespace hopfkit;

template <class K>
Vec<K> vec_of_ints(const FieldOf<K>& F, std::vector<long> xs) {
  Vec<K> v;
  for (long x : xs) v.push_back(F.from_int(x));
  return v;
}

template <class K>
AlgebraPtr<K> from_rule(const FieldOf<K>& F, std::vector<std::string> labels,
                        const std::function<Vec<K>(size_t, size_t)>& rule, size_t unit_index = 0) {
  size_t n = labels.size();
  std::vector<Vec<K>> mult(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) mult[i * n + j] = rule(i, j);
  return std::make_shared<Algebra<K>>(F, labels, mult, unit_vec<K>(n, unit_index, F));
}

// k[C_n] on {1, g, ..., g^{n-1}}.
template <class K>
AlgebraPtr<K> cyclic_group_algebra(size_t n, const FieldOf<K>& F) {
  std::vector<std::string> labels;
  for (size_t i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : "g" + std::to_string(i));
  return from_rule<K>(F, labels, [&](size_t i, size_t j) { return unit_vec<K>(n, (i + j) % n, F); });
}

// k[t]/(t^m).
template <class K>
AlgebraPtr<K> truncated_poly(size_t m, const FieldOf<K>& F) {
  std::vector<std::string> labels;
  for (size_t i = 0; i < m; ++i) labels.push_back(i == 0 ? "1" : "t" + std::to_string(i));
  return from_rule<K>(F, labels, [&](size_t i, size_t j) {
    return i + j < m ? unit_vec<K>(m, i + j, F) : Vec<K>(m);
  });
}

// k[x,y]/(x^2, xy, y^2) on {1, x, y}.
template <class K>
AlgebraPtr<K> square_zero_two(const FieldOf<K>& F) {
  return from_rule<K>(F, {"1", "x", "y"}, [&](size_t i, size_t j) {
    if (i == 0) return unit_vec<K>(3, j, F);
    if (j == 0) return unit_vec<K>(3, i, F);
    return Vec<K>(3);
  });
}

// Sweedler's algebra on {1, g, x, gx}: (g^a x^b)(g^c x^d) = (-1)^{bc} g^{a+c} x^{b+d}.
template <class K>
AlgebraPtr<K> sweedler_algebra(const FieldOf<K>& F) {
  return from_rule<K>(F, {"1", "g", "x", "gx"}, [&](size_t i, size_t j) {
    size_t a = i % 2, b = i / 2, c = j % 2, d = j / 2;
    Vec<K> v(4);
    if (b + d >= 2) return v;
    K s = (b * c) % 2 ? -F.one() : F.one();
    v[((a + c) % 2) + 2 * (b + d)] = s;
    return v;
  });
}

// Upper triangular 2x2 matrices on {e11, e12, e22}, unit e11 + e22.
template <class K>
AlgebraPtr<K> upper_triangular2(const FieldOf<K>& F) {
  std::vector<Vec<K>> mult(9, Vec<K>(3));
  mult[0 * 3 + 0][0] = F.one();  // e11 e11
  mult[0 * 3 + 1][1] = F.one();  // e11 e12
  mult[1 * 3 + 2][1] = F.one();  // e12 e22
  mult[2 * 3 + 2][2] = F.one();  // e22 e22
  Vec<K> unit(3);
  unit[0] = F.one();
  unit[2] = F.one();
  return std::make_shared<Algebra<K>>(F, std::vector<std::string>{"e11", "e12", "e22"}, mult, unit);
}

// Right module A -> End(V) restricted from a right module over a bigger algebra
// through an inclusion matrix (columns = images of the subalgebra basis).
template <class K>
Module<K> restrict_module(const Module<K>& m, const AlgebraPtr<K>& sub, const Matrix<K>& inclusion) {
  std::vector<Matrix<K>> act;
  for (size_t i = 0; i < sub->dim(); ++i) act.push_back(m.action(inclusion.col(i)));
  return Module<K>(sub, m.side(), m.dim(), act);
}

}  // namespace testsupport

namespace testsupport {

// Sweedler's coalgebra on {1, g, x, gx}: g group-like, Delta x = x(x)1 + g(x)x,
// Delta gx = gx(x)g + 1(x)gx.
template <class K>
Coalgebra<K> sweedler_coalgebra(const FieldOf<K>& F) {
  using T = Triple<K>;
  K one = F.one();
  std::vector<std::vector<T>> t = {
      {{0, 0, one}}, {{1, 1, one}}, {{2, 0, one}, {1, 2, one}}, {{3, 1, one}, {0, 3, one}}};
  return Coalgebra<K>::from_triples(F, {"1", "g", "x", "gx"}, t, vec_of_ints<K>(F, {1, 1, 0, 0}));
}

}  // namespace testsupport
