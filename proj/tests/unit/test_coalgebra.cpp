#include <gtest/gtest.h>

#include "hopfkit/coalgebra.hpp"
#include "support/builders.hpp"

using namespace hopfkit;
using namespace testsupport;

namespace {

using Q = Rational;
RationalField QQ;
GFField F3(3, 1);

Subspace<Q> qspan(size_t n, std::vector<std::vector<long>> vs) {
  std::vector<Vec<Q>> out;
  for (auto& v : vs) out.push_back(vec_of_ints<Q>(QQ, v));
  return Subspace<Q>::span(n, out);
}

}  // namespace

TEST(Coalgebra, ValidatesCatalogShapes) {
  EXPECT_TRUE(validate_coalgebra(grouplike_coalgebra<Q>({"1", "g"}, QQ)).ok());
  EXPECT_TRUE(validate_coalgebra(matrix_coalgebra<Q>(3, QQ)).ok());
  EXPECT_TRUE(validate_coalgebra(sweedler_coalgebra<Q>(QQ)).ok());
}

TEST(Coalgebra, MutationIsLocalized) {
  auto c = sweedler_coalgebra<Q>(QQ);
  std::vector<Vec<Q>> comult;
  for (size_t l = 0; l < 4; ++l) comult.push_back(c.comult_basis(l));
  comult[2][0 * 4 + 2] = Q(1);  // add 1 (x) x to Delta x
  Coalgebra<Q> bad(QQ, c.labels(), comult, c.counit());
  auto rep = validate_coalgebra(bad);
  ASSERT_FALSE(rep.ok());
  for (auto& v : rep.violations) EXPECT_EQ(v.indices, std::vector<size_t>{2}) << v.to_string();
}

TEST(Coalgebra, Duals) {
  auto g2 = grouplike_coalgebra<Q>({"a", "b"}, QQ);
  auto d = dual_algebra(g2);
  EXPECT_TRUE(d.is_commutative());
  EXPECT_EQ(wedderburn_data(d)->blocks.size(), 2u);
  auto m3 = dual_algebra(matrix_coalgebra<Q>(3, QQ));
  EXPECT_TRUE(validate_algebra(m3).ok());
  auto w = wedderburn_data(m3);
  EXPECT_TRUE(w->radical.is_zero());
  EXPECT_EQ(w->blocks.size(), 1u);
  auto h = sweedler_coalgebra<Q>(QQ);
  EXPECT_EQ(dual_coalgebra(dual_algebra(h)), h);
  auto a = sweedler_algebra<Q>(QQ);
  EXPECT_TRUE(same_algebra_data(dual_algebra(dual_coalgebra(*a)), *a));
}

TEST(Coalgebra, CoradicalAndSimples) {
  auto g3 = grouplike_coalgebra<Q>({"a", "b", "c"}, QQ);
  auto cr = coradical_and_simples(g3);
  EXPECT_EQ(cr.simples.size(), 3u);
  for (auto& s : cr.simples) EXPECT_EQ(s.dim(), 1u);
  auto h = coradical_and_simples(sweedler_coalgebra<Q>(QQ));
  ASSERT_TRUE(h.conclusive);
  EXPECT_EQ(h.coradical, qspan(4, {{1, 0, 0, 0}, {0, 1, 0, 0}}));
  EXPECT_EQ(h.simples.size(), 2u);
  auto m = coradical_and_simples(matrix_coalgebra<Q>(3, QQ));
  ASSERT_EQ(m.simples.size(), 1u);
  EXPECT_EQ(m.simples[0].dim(), 9u);
}

TEST(Coalgebra, QuotientCoalgebra) {
  auto h = sweedler_coalgebra<Q>(QQ);
  auto same = quotient_coalgebra(h, Subspace<Q>::zero(4));
  EXPECT_EQ(same.coalgebra, h);
  auto D = quotient_coalgebra(h, qspan(4, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(D.coalgebra.dim(), 2u);
  EXPECT_EQ(D.coalgebra, grouplike_coalgebra<Q>({"1", "g"}, QQ));
  EXPECT_TRUE(is_coalgebra_map(h, D.coalgebra, D.projection));
  // ker(eps) is always a coideal, with quotient k
  EXPECT_EQ(quotient_coalgebra(h, qspan(4, {{1, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}})).coalgebra.dim(), 1u);
  // span{gx - x}: eps vanishes but the Delta inclusion fails
  auto f = coideal_failure(h, qspan(4, {{0, 0, -1, 1}}));
  ASSERT_TRUE(f.has_value());
  EXPECT_NE(f->find("Delta"), std::string::npos);
  EXPECT_THROW(quotient_coalgebra(h, qspan(4, {{0, 0, -1, 1}})), InputError);
}

TEST(Comodule, RegularComodulesValidate) {
  auto h = share(sweedler_coalgebra<Q>(QQ));
  EXPECT_TRUE(validate_comodule(regular_comodule(h, Side::Right)).ok());
  EXPECT_TRUE(validate_comodule(regular_comodule(h, Side::Left)).ok());
  auto m = share(matrix_coalgebra<GF>(2, F3));
  EXPECT_TRUE(validate_comodule(regular_comodule(m, Side::Left)).ok());
  // coact agrees with Delta on the regular right comodule
  auto r = regular_comodule(h, Side::Right);
  for (size_t l = 0; l < 4; ++l) EXPECT_EQ(r.coact(h->comult_basis(l).size() ? unit_vec<Q>(4, l, QQ) : Vec<Q>()), h->comult_basis(l));
}

TEST(Comodule, CotensorCounitLaws) {
  auto h = share(sweedler_coalgebra<Q>(QQ));
  auto D = share(quotient_coalgebra(*h, qspan(4, {{0, 0, 1, 0}, {0, 0, 0, 1}})).coalgebra);
  auto w = regular_comodule(h, Side::Left);
  auto pushed = comodule_pushforward(w, D, quotient_coalgebra(*h, qspan(4, {{0, 0, 1, 0}, {0, 0, 0, 1}})).projection);
  EXPECT_TRUE(validate_comodule(pushed).ok());
  EXPECT_EQ(cotensor(regular_comodule(D, Side::Right), pushed).dim(), 4u);
  auto v = regular_comodule(h, Side::Right);
  EXPECT_EQ(cotensor(v, regular_comodule(h, Side::Left)).dim(), 4u);
  Comodule<Q> zero(D, Side::Right, 0, std::vector<Matrix<Q>>(2, Matrix<Q>(0, 0)));
  EXPECT_EQ(cotensor(zero, pushed).dim(), 0u);
}

TEST(Comodule, ComodulePart) {
  auto h = share(sweedler_coalgebra<Q>(QQ));
  auto q = quotient_coalgebra(*h, qspan(4, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
  auto D = share(q.coalgebra);
  auto M = comodule_pushforward(regular_comodule(h, Side::Left), D, q.projection);
  EXPECT_EQ(comodule_part(M, Subspace<Q>::full(2, QQ)).dim(), 4u);
  EXPECT_EQ(comodule_part(M, Subspace<Q>::zero(2)).dim(), 0u);
  auto part = comodule_part(M, qspan(2, {{1, 0}}));
  EXPECT_EQ(part, qspan(4, {{1, 0, 0, 0}, {0, 0, 0, 1}}));  // span{1, gx}
}

TEST(Comodule, DnPartsHaveDimensionNTimesC) {
  auto c = share(sweedler_coalgebra<Q>(QQ));
  auto cr = coradical_and_simples(*c);
  auto lattice = subcoalgebra_lattice(*c, cr.simples);
  for (size_t n = 1; n <= 3; ++n) {
    auto M = regular_comodule(c, Side::Left);
    for (size_t i = 1; i < n; ++i) M = comodule_direct_sum(M, regular_comodule(c, Side::Left));
    for (auto& s : lattice) {
      ASSERT_TRUE(is_subcoalgebra(*c, s));
      EXPECT_EQ(comodule_part(M, s).dim(), n * s.dim());
    }
  }
}

TEST(Convolution, SpecExamples) {
  auto k = share(grouplike_coalgebra<Q>({"1"}, QQ));
  auto b = sweedler_algebra<Q>(QQ);
  EXPECT_EQ(convolution_algebra(*k, *b).dim(), 4u);
  auto kk = convolution_algebra(grouplike_coalgebra<Q>({"p", "q"}, QQ), matrix_algebra<Q>(1, QQ));
  EXPECT_TRUE(kk.is_commutative());
  EXPECT_EQ(wedderburn_data(kk)->blocks.size(), 2u);
  // dual of F3[C2] as coalgebra, B = F3[C2]
  auto c2 = cyclic_group_algebra<GF>(2, F3);
  auto conv = convolution_algebra(dual_coalgebra(*c2), *c2);
  EXPECT_EQ(conv.dim(), 4u);
  EXPECT_TRUE(weak_finiteness_probe(conv, 2, 50, 9).clean());
}
