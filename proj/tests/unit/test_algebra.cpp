#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "hopfkit/algebra.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace hopfkit;
using namespace testsupport;

namespace {

using Q = Rational;
RationalField QQ;
GFField F2(2, 1), F3(3, 1);

template <class K>
Vec<K> vec_of(const FieldOf<K>& F, std::vector<long> xs) {
  Vec<K> v;
  for (long x : xs) v.push_back(F.from_int(x));
  return v;
}

template <class K>
Subspace<K> span_of(const FieldOf<K>& F, size_t n, std::vector<std::vector<long>> vs) {
  std::vector<Vec<K>> out;
  for (auto& v : vs) out.push_back(vec_of<K>(F, v));
  return Subspace<K>::span(n, out);
}

}  // namespace

TEST(Algebra, CatalogStyleTablesValidate) {
  EXPECT_TRUE(validate_algebra(*cyclic_group_algebra<GF>(2, F3)).ok());
  EXPECT_TRUE(validate_algebra(*upper_triangular2<Q>(QQ)).ok());
  EXPECT_TRUE(validate_algebra(matrix_algebra<Q>(2, QQ)).ok());
}

TEST(Algebra, SweedlerTableMatchesDirectTripleExpansion) {
  // Independent check of all 64 triples using the word rule on (a,b) exponents.
  auto h = sweedler_algebra<Q>(QQ);
  auto word = [](size_t i) { return std::pair<int, int>(i % 2, i / 2); };
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j)
      for (size_t k = 0; k < 4; ++k) {
        auto [a1, b1] = word(i);
        auto [a2, b2] = word(j);
        auto [a3, b3] = word(k);
        int xs = b1 + b2 + b3;
        int sign = ((b1 * a2) + (b1 * a3) + (b2 * a3)) % 2 ? -1 : 1;
        Vec<Q> expect(4);
        if (xs < 2) expect[(a1 + a2 + a3) % 2 + 2 * xs] = Q(sign);
        auto e = [&](size_t t) { return h->basis_vector(t); };
        EXPECT_EQ(h->multiply(h->multiply(e(i), e(j)), e(k)), expect);
        EXPECT_EQ(h->multiply(e(i), h->multiply(e(j), e(k))), expect);
      }
  EXPECT_TRUE(validate_algebra(*h).ok());
}

TEST(Algebra, MutationReportsExactlyTheAffectedTriples) {
  // g*g = 2 would still be associative (Q[x]/(x^2-2)); g*1 = 1 + g is not.
  auto a = cyclic_group_algebra<Q>(2, QQ);
  std::vector<std::vector<std::vector<long>>> table = {{{1, 0}, {0, 1}}, {{1, 1}, {1, 0}}};
  std::vector<Vec<Q>> mult;
  for (auto& row : table)
    for (auto& v : row) mult.push_back(vec_of<Q>(QQ, v));
  Algebra<Q> bad(QQ, a->labels(), mult, a->unit());
  // brute force on the integer table
  auto prod = [&](std::vector<long> x, std::vector<long> y) {
    std::vector<long> r(2, 0);
    for (size_t i = 0; i < 2; ++i)
      for (size_t j = 0; j < 2; ++j)
        for (size_t k = 0; k < 2; ++k) r[k] += x[i] * y[j] * table[i][j][k];
    return r;
  };
  std::set<std::vector<size_t>> expected;
  std::vector<std::vector<long>> e = {{1, 0}, {0, 1}};
  for (size_t i = 0; i < 2; ++i)
    for (size_t j = 0; j < 2; ++j)
      for (size_t k = 0; k < 2; ++k)
        if (prod(prod(e[i], e[j]), e[k]) != prod(e[i], prod(e[j], e[k]))) expected.insert({i, j, k});
  ASSERT_FALSE(expected.empty());
  auto rep = validate_algebra(bad);
  std::set<std::vector<size_t>> reported;
  bool unit_failure = false;
  for (auto& v : rep.violations) {
    if (v.axiom == "associativity") reported.insert(v.indices);
    if (v.axiom == "right unit") unit_failure = true;
  }
  EXPECT_EQ(reported, expected);
  EXPECT_TRUE(unit_failure);
}

TEST(Algebra, IdealClosure) {
  auto h = sweedler_algebra<Q>(QQ);
  EXPECT_EQ(ideal_closure(*h, {h->unit()}).dim(), 4u);
  EXPECT_TRUE(ideal_closure(*h, {}).is_zero());
  EXPECT_EQ(ideal_closure(*h, {h->basis_vector(2)}), span_of<Q>(QQ, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
}

TEST(Radical, SpecExamples) {
  EXPECT_TRUE(radical(*cyclic_group_algebra<Q>(2, QQ)).is_zero());
  EXPECT_EQ(radical(*cyclic_group_algebra<GF>(2, F2)), span_of<GF>(F2, 2, {{1, 1}}));
  EXPECT_EQ(radical(*sweedler_algebra<Q>(QQ)), span_of<Q>(QQ, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(radical(*upper_triangular2<Q>(QQ)), span_of<Q>(QQ, 3, {{0, 1, 0}}));
}

TEST(Radical, AgreesWithBruteForceOverSmallFields) {
  std::vector<AlgebraPtr<GF>> algs = {
      cyclic_group_algebra<GF>(2, F2), cyclic_group_algebra<GF>(3, F2), cyclic_group_algebra<GF>(3, F3),
      cyclic_group_algebra<GF>(4, F2), truncated_poly<GF>(3, F3),       sweedler_algebra<GF>(F3),
      upper_triangular2<GF>(F3),        square_zero_two<GF>(F3),         share(matrix_algebra<GF>(2, F2)),
  };
  algs.push_back(share(tensor_of_algebras(*cyclic_group_algebra<GF>(2, F2), *cyclic_group_algebra<GF>(2, F2))));
  algs.push_back(share(direct_product(*truncated_poly<GF>(2, F2), *cyclic_group_algebra<GF>(3, F2))));
  GFField F4(2, 2);
  algs.push_back(cyclic_group_algebra<GF>(3, F4));
  algs.push_back(truncated_poly<GF>(2, F4));
  for (auto& a : algs) {
    auto brute = brute_radical(*a);
    auto J = radical(*a);
    EXPECT_EQ(brute.size(), static_cast<size_t>(std::pow(a->field().order(), J.dim()))) << a->dim();
    for (auto& x : brute) EXPECT_TRUE(J.contains(x));
  }
}

TEST(Radical, RandomQuotientsHaveSemisimpleQuotients) {
  Rng rng(7);
  std::vector<AlgebraPtr<GF>> bases = {cyclic_group_algebra<GF>(4, F2), sweedler_algebra<GF>(F3),
                                       cyclic_group_algebra<GF>(6, F3)};
  std::vector<AlgebraPtr<Q>> qbases = {sweedler_algebra<Q>(QQ), cyclic_group_algebra<Q>(4, QQ)};
  for (int t = 0; t < 40; ++t) {
    auto& a = bases[t % bases.size()];
    Vec<GF> v(a->dim());
    for (auto& c : v) c = sample_scalar(a->field(), rng, 3);
    auto I = ideal_closure(*a, {v});
    if (I.dim() == a->dim()) continue;
    auto q = quotient_algebra(*a, I);
    auto r = radical_of(q.algebra);
    ASSERT_TRUE(r->conclusive) << r->note;
    EXPECT_TRUE(is_nilpotent_ideal(q.algebra, r->ideal));
  }
  for (int t = 0; t < 20; ++t) {
    auto& a = qbases[t % qbases.size()];
    Vec<Q> v(a->dim());
    for (auto& c : v) c = sample_scalar(a->field(), rng, 3);
    auto I = ideal_closure(*a, {v});
    if (I.dim() == a->dim()) continue;
    auto q = quotient_algebra(*a, I);
    EXPECT_TRUE(radical_of(q.algebra)->conclusive);
  }
}

TEST(Wedderburn, SpecExamples) {
  auto w = wedderburn_data(*cyclic_group_algebra<Q>(2, QQ));
  ASSERT_TRUE(w->conclusive);
  ASSERT_EQ(w->blocks.size(), 2u);
  for (auto& b : w->blocks) {
    EXPECT_EQ(b.simple_dim, 1u);
    EXPECT_EQ(b.max_ideal.dim(), 1u);
  }
  auto w2 = wedderburn_data(*cyclic_group_algebra<GF>(2, F2));
  ASSERT_EQ(w2->blocks.size(), 1u);
  EXPECT_EQ(w2->blocks[0].max_ideal, w2->radical);
  auto w4 = wedderburn_data(*sweedler_algebra<Q>(QQ));
  EXPECT_EQ(w4->blocks.size(), 2u);
  auto m2 = wedderburn_data(matrix_algebra<Q>(2, QQ));
  ASSERT_EQ(m2->blocks.size(), 1u);
  EXPECT_EQ(m2->blocks[0].simple_dim, 2u);
  EXPECT_EQ(m2->blocks[0].multiplicity, 2u);
}

TEST(Wedderburn, SplitsOverExtensionAndRationals) {
  GFField F4(2, 2);
  auto w = wedderburn_data(*cyclic_group_algebra<GF>(3, F4));  // F4[C3] = F4^3
  EXPECT_EQ(w->blocks.size(), 3u);
  auto w2 = wedderburn_data(*cyclic_group_algebra<GF>(3, F2));  // F2 x F4
  ASSERT_EQ(w2->blocks.size(), 2u);
  auto wq = wedderburn_data(*cyclic_group_algebra<Q>(4, QQ));  // Q x Q x Q(i)
  ASSERT_TRUE(wq->conclusive);
  ASSERT_EQ(wq->blocks.size(), 3u);
  size_t total = 0;
  for (auto& b : wq->blocks) total += b.block_span.dim();
  EXPECT_EQ(total, 4u);
  // Mat2(F3) x F3: one block of multiplicity 2
  auto w3 = wedderburn_data(direct_product(matrix_algebra<GF>(2, F3), *truncated_poly<GF>(1, F3)));
  ASSERT_EQ(w3->blocks.size(), 2u);
  for (auto& b : w3->blocks) EXPECT_EQ(b.block_span.dim(), b.multiplicity * b.simple_dim);
}

TEST(Wedderburn, SimplesAreValidModules) {
  auto a = share(direct_product(matrix_algebra<Q>(2, QQ), *sweedler_algebra<Q>(QQ)));
  auto w = wedderburn_data(*a);
  ASSERT_TRUE(w->conclusive);
  EXPECT_EQ(w->blocks.size(), 3u);
  for (auto& b : w->blocks) {
    Module<Q> s(a, Side::Right, b.simple_dim, b.simple_action);
    EXPECT_TRUE(validate_module(s).ok());
    EXPECT_EQ(hom_space(s, s).dim(), b.division_dim);
  }
}

TEST(Hom, SpecExamples) {
  auto c2 = cyclic_group_algebra<Q>(2, QQ);
  auto reg = regular_module(c2, Side::Right);
  EXPECT_EQ(hom_space(reg, reg).dim(), 2u);
  Matrix<Q> plus(1, 1), one(1, 1), minus(1, 1);
  one(0, 0) = Q(1);
  minus(0, 0) = Q(-1);
  Module<Q> sp(c2, Side::Right, 1, {one, one}), sm(c2, Side::Right, 1, {one, minus});
  EXPECT_EQ(hom_space(sp, sm).dim(), 0u);
  // H4 as a right module over A = span{1, gx}: Hom(H, A) has dim 4.
  auto h = sweedler_algebra<Q>(QQ);
  auto sub = subalgebra_from_span(*h, span_of<Q>(QQ, 4, {{1, 0, 0, 0}, {0, 0, 0, 1}}));
  auto A = share(sub.algebra);
  auto H_A = restrict_module(regular_module(h, Side::Right), A, sub.inclusion);
  EXPECT_EQ(hom_space(H_A, regular_module(A, Side::Right)).dim(), 4u);
}

TEST(Projective, SpecExamples) {
  auto a = cyclic_group_algebra<GF>(2, F2);
  auto reg = regular_module(a, Side::Right);
  auto p = is_projective(reg);
  EXPECT_EQ(p.status, Verdict::Yes);
  Matrix<GF> one = Matrix<GF>::identity(1, F2);
  Module<GF> triv(a, Side::Right, 1, {one, one});
  EXPECT_EQ(is_projective(triv).status, Verdict::No);
  EXPECT_EQ(is_projective(direct_sum(reg, reg)).status, Verdict::Yes);
  EXPECT_EQ(is_projective(direct_sum(triv, reg)).status, Verdict::No);
  // Over a semisimple algebra everything is projective.
  auto c3 = cyclic_group_algebra<GF>(3, F2);
  Module<GF> t3(c3, Side::Right, 1, {one, one, one});
  EXPECT_EQ(is_projective(t3).status, Verdict::Yes);
}

TEST(Projective, SplittingIsVerified) {
  auto a = upper_triangular2<Q>(QQ);
  // e11 A = span{e11, e12} is projective, the simple top of e22 A is not
  auto reg = regular_module(a, Side::Right);
  auto p1 = submodule(reg, span_of<Q>(QQ, 3, {{1, 0, 0}, {0, 1, 0}}));
  auto res = is_projective(p1);
  ASSERT_EQ(res.status, Verdict::Yes);
  // pi o sigma = id
  auto pi = basis_map(p1, res.generators);
  EXPECT_EQ(pi * res.splitting, Matrix<Q>::identity(p1.dim(), QQ));
  auto s = quotient_module(p1, span_of<Q>(QQ, 2, {{0, 1}})).module;
  EXPECT_EQ(is_projective(s).status, Verdict::No);
}

TEST(Projective, DoubleDualAgrees) {
  Rng rng(11);
  auto a = sweedler_algebra<GF>(F3);
  for (int t = 0; t < 10; ++t) {
    auto m = random_module(a, 6, rng);
    auto dd = dual_module(dual_module(m));
    EXPECT_EQ(is_projective(m).status, is_projective(dd).status);
  }
}

TEST(Free, SpecExamples) {
  auto a = cyclic_group_algebra<GF>(2, F2);
  auto f3 = is_free(free_module(a, Side::Right, 3));
  EXPECT_EQ(f3.status, Verdict::Yes);
  EXPECT_EQ(f3.rank, 3u);
  Matrix<GF> one = Matrix<GF>::identity(1, F2);
  auto nf = is_free(Module<GF>(a, Side::Right, 1, {one, one}));
  EXPECT_EQ(nf.status, Verdict::No);
  EXPECT_EQ(nf.stage, "dimension");
  // H4 over span{1, gx}, with {1, g} a basis (checked in the F3 model).
  auto h = sweedler_algebra<GF>(F3);
  auto sub = subalgebra_from_span(*h, span_of<GF>(F3, 4, {{1, 0, 0, 0}, {0, 0, 0, 1}}));
  auto A = share(sub.algebra);
  auto H_A = restrict_module(regular_module(h, Side::Right), A, sub.inclusion);
  auto fr = is_free(H_A);
  ASSERT_EQ(fr.status, Verdict::Yes);
  EXPECT_EQ(fr.rank, 2u);
  EXPECT_EQ(rank(basis_map(H_A, fr.basis)), 4u);
  EXPECT_EQ(rank(basis_map(H_A, {h->basis_vector(0), h->basis_vector(1)})), 4u);
  // exhaustive count of bases in the F3 model: pairs (m1, m2) with m1 A + m2 A = H
  size_t count = 0;
  auto all = all_vectors(4, F3);
  for (auto& m1 : all)
    for (auto& m2 : all)
      if (rank(basis_map(H_A, {m1, m2})) == 4) ++count;
  EXPECT_GT(count, 0u);
  EXPECT_EQ(count % 2, 0u);
}

TEST(Free, LeftModulesUseTheOppositeAlgebra) {
  auto h = sweedler_algebra<Q>(QQ);
  auto sub = subalgebra_from_span(*h, span_of<Q>(QQ, 4, {{1, 0, 0, 0}, {0, 0, 0, 1}}));
  auto A = share(sub.algebra);
  auto H_A = restrict_module(regular_module(h, Side::Left), A, sub.inclusion);
  auto fr = is_free(H_A);
  EXPECT_EQ(fr.status, Verdict::Yes);
  EXPECT_EQ(fr.rank, 2u);
}

TEST(Free, AgreesWithExhaustiveSearchOverF2) {
  std::vector<AlgebraPtr<GF>> algs = {cyclic_group_algebra<GF>(2, F2), upper_triangular2<GF>(F2),
                                      cyclic_group_algebra<GF>(3, F2), truncated_poly<GF>(3, F2)};
  Rng rng(2024);
  for (int t = 0; t < 40; ++t) {
    auto& a = algs[t % algs.size()];
    auto m = random_module(a, 6, rng);
    bool brute = brute_is_free(pack(m));
    auto fr = is_free(m);
    ASSERT_NE(fr.status, Verdict::Unknown) << fr.note;
    EXPECT_EQ(fr.status == Verdict::Yes, brute) << "trial " << t;
    if (fr.status == Verdict::Yes) {
      EXPECT_EQ(is_projective(m).status, Verdict::Yes);
    }
  }
}

TEST(Iso, SpecExamples) {
  auto c2 = cyclic_group_algebra<Q>(2, QQ);
  auto reg = regular_module(c2, Side::Right);
  auto same = module_iso(reg, reg);
  EXPECT_EQ(same.status, Verdict::Yes);
  Matrix<Q> one(1, 1), minus(1, 1);
  one(0, 0) = Q(1);
  minus(0, 0) = Q(-1);
  Module<Q> sp(c2, Side::Right, 1, {one, one}), sm(c2, Side::Right, 1, {one, minus});
  EXPECT_EQ(module_iso(sp, sm).status, Verdict::No);
  // A* vs A for Q[t]/(t^2): the Gram matrix of lambda(a + bt) = b is [[0,1],[1,0]]
  auto t2 = truncated_poly<Q>(2, QQ);
  auto iso = module_iso(dual_right_regular(t2), regular_module(t2, Side::Right));
  EXPECT_EQ(iso.status, Verdict::Yes);
}

TEST(Iso, SemisimpleAgreesWithMultiplicities) {
  auto a = cyclic_group_algebra<GF>(3, F2);  // F2 x F4
  auto w = wedderburn_data(*a);
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    auto m = random_module(a, 6, rng);
    auto n = random_module(a, 6, rng);
    auto mult = [&](const Module<GF>& x) {
      std::vector<size_t> v;
      for (auto& b : w->blocks) {
        Module<GF> s(a, Side::Right, b.simple_dim, b.simple_action);
        v.push_back(hom_space(x, s).dim() / b.division_dim);
      }
      return v;
    };
    auto r = module_iso(m, n, 40, t);
    ASSERT_NE(r.status, Verdict::Unknown);
    EXPECT_EQ(r.status == Verdict::Yes, mult(m) == mult(n));
  }
}

TEST(Frobenius, SpecExamples) {
  auto t2 = truncated_poly<Q>(2, QQ);
  auto f = is_frobenius(t2);
  ASSERT_EQ(f.status, Verdict::Yes);
  EXPECT_FALSE(f.functional[1].is_zero());
  EXPECT_EQ(is_frobenius(square_zero_two<Q>(QQ)).status, Verdict::No);
  auto h = sweedler_algebra<Q>(QQ);
  auto sub = subalgebra_from_span(*h, span_of<Q>(QQ, 4, {{1, 0, 0, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(is_frobenius(share(sub.algebra)).status, Verdict::Yes);
  EXPECT_EQ(is_frobenius(h).status, Verdict::Yes);
  EXPECT_EQ(is_frobenius(upper_triangular2<Q>(QQ)).status, Verdict::No);
}

TEST(QuasiFrobenius, SpecExamples) {
  EXPECT_EQ(is_quasi_frobenius(truncated_poly<Q>(3, QQ)).status, Verdict::Yes);
  EXPECT_EQ(is_quasi_frobenius(square_zero_two<Q>(QQ)).status, Verdict::No);
  EXPECT_EQ(is_quasi_frobenius(cyclic_group_algebra<Q>(2, QQ)).status, Verdict::Yes);
  EXPECT_EQ(is_quasi_frobenius(upper_triangular2<Q>(QQ)).status, Verdict::No);
}

TEST(WeakFiniteness, ProbesAreClean) {
  auto q = share(matrix_algebra<Q>(1, QQ));
  auto r1 = weak_finiteness_probe(*q, 2, 30, 1);
  EXPECT_TRUE(r1.clean());
  EXPECT_GT(r1.solvable, 0u);
  auto r2 = weak_finiteness_probe(*sweedler_algebra<Q>(QQ), 2, 100, 2);
  EXPECT_TRUE(r2.clean());
  auto r3 = weak_finiteness_probe(*cyclic_group_algebra<GF>(2, F2), 1, 50, 3);
  EXPECT_TRUE(r3.clean());
  EXPECT_GT(r3.solvable, 0u);
}
