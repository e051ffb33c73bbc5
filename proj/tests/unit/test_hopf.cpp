#include <gtest/gtest.h>

#include "hopfkit/hopf.hpp"
#include "support/builders.hpp"

using namespace hopfkit;
using namespace testsupport;

namespace {

using Q = Rational;
RationalField QQ;
GFField F2(2, 1), F3(3, 1), F7(7, 1);

}  // namespace

TEST(Hopf, CatalogValidates) {
  for (std::string g : {"C2", "C3", "C4", "S3"}) {
    auto h = group_algebra<Q>(group_by_name(g), QQ);
    EXPECT_TRUE(validate_hopf(h).ok()) << g;
    auto d = dual_group_algebra<GF>(group_by_name(g), F3);
    EXPECT_TRUE(validate_hopf(d).ok()) << g;
    EXPECT_EQ(*h.antipode_inverse(), h.antipode());
  }
  EXPECT_TRUE(validate_hopf(sweedler_h4<Q>(QQ)).ok());
  EXPECT_TRUE(validate_hopf(sweedler_h4<GF>(F3)).ok());
  auto t = taft_algebra<GF>(3, F7);
  EXPECT_EQ(t.dim(), 9u);
  EXPECT_TRUE(validate_hopf(t).ok());
  EXPECT_EQ(t.notes().at(0).substr(0, 8), "zeta = 2");
}

TEST(Hopf, SweedlerMatchesHandTables) {
  auto h = sweedler_h4<Q>(QQ);
  EXPECT_TRUE(same_algebra_data(h.algebra(), *sweedler_algebra<Q>(QQ)));
  EXPECT_EQ(h.coalgebra(), sweedler_coalgebra<Q>(QQ));
  // s(g) = g, s(x) = -gx
  EXPECT_EQ(h.antipode().col(1), vec_of_ints<Q>(QQ, {0, 1, 0, 0}));
  EXPECT_EQ(h.antipode().col(2), vec_of_ints<Q>(QQ, {0, 0, 0, -1}));
  EXPECT_EQ(antipode_order(h), 4u);
  // s^2 is conjugation by g
  Matrix<Q> s2 = h.antipode() * h.antipode();
  auto g = h.algebra().basis_vector(1);
  for (size_t i = 0; i < 4; ++i) {
    auto e = h.algebra().basis_vector(i);
    EXPECT_EQ(s2.apply(e), h.algebra().multiply(h.algebra().multiply(g, e), g));
  }
}

TEST(Hopf, WrongAntipodeIsReported) {
  auto h = sweedler_h4<Q>(QQ);
  Matrix<Q> s = h.antipode();
  s.set_col(2, vec_of_ints<Q>(QQ, {0, 0, 1, 0}));  // s(x) = x
  HopfAlgebra<Q> bad(h.algebra_ptr(), h.coalgebra_ptr(), s);
  auto rep = validate_hopf(bad);
  ASSERT_FALSE(rep.ok());
  bool antipode_hit = false;
  for (auto& v : rep.violations)
    if (v.axiom.rfind("antipode", 0) == 0) antipode_hit = true;
  EXPECT_TRUE(antipode_hit);
}

TEST(Hopf, GroupAlgebraOverF2IsLocal) {
  auto h = builtin_hopf<GF>("group_algebra(C2)", F2);
  EXPECT_EQ(h.dim(), 2u);
  EXPECT_EQ(wedderburn_data(h.algebra())->blocks.size(), 1u);
}

TEST(Hopf, BuiltinNamesAndErrors) {
  EXPECT_EQ(builtin_hopf<Q>("sweedler_h4", QQ).dim(), 4u);
  EXPECT_EQ(builtin_hopf<GF>("taft(3)", F7).dim(), 9u);
  EXPECT_EQ(builtin_hopf<GF>("dual_group_algebra_S3", F3).dim(), 6u);
  try {
    builtin_hopf<GF>("taft(3)", F3);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("F7"), std::string::npos) << e.what();
  }
  EXPECT_THROW(builtin_hopf<Q>("taft(3)", QQ), InputError);
  EXPECT_THROW(builtin_hopf<Q>("nonsense", QQ), InputError);
}

TEST(Hopf, SingleConstantMutationsFail) {
  auto h = group_algebra<GF>(cyclic_group(3), F3);
  size_t failed = 0, total = 0;
  for (auto& m : all_mutations(h)) {
    ++total;
    if (!validate_hopf(apply_mutation(h, m)).ok()) ++failed;
  }
  EXPECT_GE(failed * 100, total * 95);
}

TEST(Hopf, OppositeIsHopfWithInverseAntipode) {
  auto h = sweedler_h4<Q>(QQ);
  EXPECT_TRUE(validate_hopf(opposite_hopf(h)).ok());
}

TEST(Ni89b, CertifiesOverQAndF3) {
  for (int which = 0; which < 2; ++which) {
    std::vector<std::string> traces;
    bool ok;
    if (which == 0) {
      auto c = ni89b_certificate<Q>(QQ);
      ok = c.ok;
      EXPECT_EQ(c.entries.size(), 8u);
      for (auto& e : c.entries) traces.insert(traces.end(), e.trace.begin(), e.trace.end());
      // entry (1,1) of XY: s(c11+c13)(c11+c31) + s(c12)c21 -> 1
      auto& e11 = c.entries[0];
      EXPECT_EQ(e11.terms.size(), 5u);
      EXPECT_EQ(e11.expected, "1");
      // entry (2,1) of XZ: s(c22)c23 vanishes by (i)
      auto& z21 = c.entries[6];
      ASSERT_EQ(z21.terms.size(), 1u);
      EXPECT_NE(z21.terms[0].fate.find("(i)"), std::string::npos);
    } else {
      auto c = ni89b_certificate<GF>(F3);
      ok = c.ok;
    }
    EXPECT_TRUE(ok);
  }
  EXPECT_THROW(ni89b_certificate<GF>(F2), InputError);
}

TEST(Ni89b, DroppingARelationBreaksTheCertificate) {
  // Sanity: without relation (ii) the XY diagonal cannot reduce to 1, so the checker is not vacuous.
  auto c = ni89b_certificate<Q>(QQ);
  EXPECT_TRUE(c.relations_consistent);
  EXPECT_LT(c.relation_rank, c.symbol_count);
}
