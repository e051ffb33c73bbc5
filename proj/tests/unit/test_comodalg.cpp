#include <gtest/gtest.h>

#include "hopfkit/comodalg.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace hopfkit;
using namespace testsupport;

namespace {

using Q = Rational;
RationalField QQ;
GFField F2(2, 1), F3(3, 1);

// H4 basis order: 1, g, x, gx.
template <class K>
Subspace<K> span_of(const FieldOf<K>& F, size_t n, std::vector<std::vector<long>> vs) {
  std::vector<Vec<K>> out;
  for (auto& v : vs) out.push_back(vec_of_ints<K>(F, v));
  return Subspace<K>::span(n, out);
}

template <class K>
ComoduleAlgebraPtr<K> h4_regular(const FieldOf<K>& F) {
  return share(regular_coaction(share(sweedler_h4<K>(F))));
}

// k x k[s]/(s^2) with the trivial coaction of k[C2].
template <class K>
ComoduleAlgebraPtr<K> trivial_on_product(const FieldOf<K>& F, size_t truncation) {
  auto k = truncated_poly<K>(1, F);
  auto a = share(direct_product(*k, *truncated_poly<K>(truncation, F)));
  return share(trivial_coaction(a, share(group_algebra<K>(cyclic_group(2), F))));
}

// H-simple iff every nonzero element generates all of A as a costable ideal.
bool brute_h_simple(const ComoduleAlgebra<GF>& ca) {
  auto ops = costable_ideal_ops(ca);
  for (auto& v : all_vectors(ca.dim(), ca.field())) {
    if (is_zero_vec(v)) continue;
    if (operator_closure(ca.dim(), {v}, ops).dim() != ca.dim()) return false;
  }
  return true;
}

}  // namespace

TEST(ComoduleAlgebra, ValidationExamples) {
  auto h = share(sweedler_h4<Q>(QQ));
  EXPECT_TRUE(validate_comodule_algebra(regular_coaction(h)).ok());
  auto a = restricted_coaction(h, span_of<Q>(QQ, 4, {{1, 0, 0, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(a.dim(), 2u);
  EXPECT_TRUE(validate_comodule_algebra(a).ok());
  EXPECT_TRUE(validate_comodule_algebra(trivial_coaction(upper_triangular2<Q>(QQ), h)).ok());
  // span{1, x} is not stable: Delta(x) has the term g (x) x
  EXPECT_THROW(restricted_coaction(h, span_of<Q>(QQ, 4, {{1, 0, 0, 0}, {0, 0, 1, 0}})), InputError);

  auto bad = regular_coaction(h);
  auto coeff = bad.coefficients();
  coeff[1](2, 2) += QQ.one();  // rho(x) gains x (x) g
  ComoduleAlgebra<Q> mutated(bad.algebra_ptr(), h, coeff);
  auto rep = validate_comodule_algebra(mutated);
  ASSERT_FALSE(rep.ok());
  bool localized = false;
  for (auto& v : rep.violations)
    if (v.axiom == "rho multiplicative" && (v.indices[0] == 2 || v.indices[1] == 2)) localized = true;
  EXPECT_TRUE(localized);
}

TEST(ComoduleAlgebra, Invariants) {
  auto h = share(sweedler_h4<Q>(QQ));
  auto inv = invariants_subalgebra(regular_coaction(h));
  EXPECT_EQ(inv.span, span_of<Q>(QQ, 4, {{1, 0, 0, 0}}));
  auto triv = trivial_coaction(upper_triangular2<Q>(QQ), h);
  EXPECT_EQ(invariants_subalgebra(triv).span.dim(), 3u);
  auto sub = restricted_coaction(h, span_of<Q>(QQ, 4, {{1, 0, 0, 0}, {0, 0, 0, 1}}));
  EXPECT_EQ(invariants_subalgebra(sub).span.dim(), 1u);
}

TEST(ComoduleAlgebra, CostableClosureAndLargestInside) {
  auto ca = h4_regular<Q>(QQ);
  EXPECT_EQ(costable_closure(*ca, {ca->algebra().unit()}).ideal.dim(), 4u);
  auto cx = costable_closure(*ca, {vec_of_ints<Q>(QQ, {0, 0, 1, 0})});
  EXPECT_EQ(cx.ideal.dim(), 4u);
  EXPECT_TRUE(cx.costable && cx.is_ideal);

  auto rad = span_of<Q>(QQ, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  EXPECT_TRUE(largest_costable_inside(*ca, rad).ideal.is_zero());
  EXPECT_EQ(largest_costable_inside(*ca, Subspace<Q>::full(4, QQ)).ideal.dim(), 4u);

  // Trivial coaction: costable ideals are all ideals.
  auto triv = trivial_on_product<Q>(QQ, 2);
  auto s = vec_of_ints<Q>(QQ, {0, 0, 1});
  auto I = ideal_closure(triv->algebra(), {s});
  EXPECT_EQ(costable_closure(*triv, {s}).ideal, I);
  EXPECT_EQ(largest_costable_inside(*triv, I).ideal, I);
}

TEST(ComoduleAlgebra, HSimplicityExamples) {
  auto r = is_h_simple(*h4_regular<Q>(QQ));
  EXPECT_EQ(r.status, Simplicity::Simple) << r.certificate;

  auto f2 = share(regular_coaction(share(group_algebra<GF>(cyclic_group(2), F2))));
  EXPECT_EQ(is_h_simple(*f2).status, Simplicity::Simple);
  EXPECT_FALSE(radical(f2->algebra()).is_zero());  // local, not a field

  auto kk = share(direct_product(*truncated_poly<Q>(1, QQ), *truncated_poly<Q>(1, QQ)));
  auto triv = trivial_coaction(kk, share(group_algebra<Q>(cyclic_group(2), QQ)));
  auto t = is_h_simple(triv);
  ASSERT_EQ(t.status, Simplicity::NotSimple);
  EXPECT_EQ(t.witness.dim(), 1u);
  EXPECT_TRUE(is_costable(triv, t.witness));
  EXPECT_TRUE(is_two_sided_ideal(*kk, t.witness));
}

TEST(ComoduleAlgebra, HSimplicityAgreesWithExhaustiveSearch) {
  std::vector<ComoduleAlgebra<GF>> cases;
  for (std::string g : {"C2", "C3", "C4", "S3"}) {
    cases.push_back(regular_coaction(share(group_algebra<GF>(group_by_name(g), F3))));
    cases.push_back(regular_coaction(share(dual_group_algebra<GF>(group_by_name(g), F3))));
  }
  auto h4 = share(sweedler_h4<GF>(F3));
  cases.push_back(regular_coaction(h4));
  cases.push_back(restricted_coaction(h4, span_of<GF>(F3, 4, {{1, 0, 0, 0}, {0, 0, 0, 1}})));
  cases.push_back(restricted_coaction(h4, span_of<GF>(F3, 4, {{1, 0, 0, 0}, {0, 1, 0, 0}})));
  cases.push_back(trivial_coaction(truncated_poly<GF>(2, F3), h4));
  cases.push_back(trivial_coaction(share(matrix_algebra<GF>(2, F3)), h4));
  auto c2 = share(group_algebra<GF>(cyclic_group(2), F2));
  cases.push_back(regular_coaction(c2));
  cases.push_back(trivial_coaction(share(direct_product(*c2->algebra_ptr(), *truncated_poly<GF>(1, F2))), c2));
  for (auto& ca : cases) {
    ASSERT_TRUE(validate_comodule_algebra(ca).ok());
    auto r = is_h_simple(ca);
    ASSERT_NE(r.status, Simplicity::Inconclusive) << r.certificate;
    bool brute = brute_h_simple(ca);
    EXPECT_EQ(r.status == Simplicity::Simple, brute) << ca.hopf().name() << " " << ca.name();
    if (r.status == Simplicity::NotSimple) {
      EXPECT_TRUE(is_costable(ca, r.witness));
      EXPECT_TRUE(is_two_sided_ideal(ca.algebra(), r.witness));
      EXPECT_GT(r.witness.dim(), 0u);
      EXPECT_LT(r.witness.dim(), ca.dim());
    }
  }
}

TEST(HopfModule, ValidationAndInduction) {
  auto ca = h4_regular<Q>(QQ);
  EXPECT_TRUE(validate_hopf_module(regular_hopf_module(ca, Side::Right)).ok());
  EXPECT_TRUE(validate_hopf_module(regular_hopf_module(ca, Side::Left)).ok());
  for (auto& v : simple_right_modules(ca->algebra_ptr())) {
    auto ind = induced_hopf_module(ca, v);
    EXPECT_EQ(ind.dim(), v.dim() * 4);
    EXPECT_TRUE(validate_hopf_module(ind).ok());
    EXPECT_TRUE(validate_hopf_module(induced_hopf_module(ca, dual_module(v))).ok());
  }
  auto a = regular_hopf_module(ca, Side::Right);
  auto ind = induced_hopf_module(ca, a.module);
  EXPECT_EQ(ind.dim(), 16u);
  EXPECT_TRUE(validate_hopf_module(ind).ok());

  auto coeff = a.coaction.coefficients();
  coeff[1](0, 0) += QQ.one();
  HopfModule<Q> bad{ca, a.module, Comodule<Q>(a.coaction.coalgebra_ptr(), Side::Right, 4, coeff), "bad"};
  EXPECT_FALSE(validate_hopf_module(bad).ok());

  // Trivial coaction, trivial V: V (x) H is H with its regular structures.
  auto h = share(sweedler_h4<Q>(QQ));
  auto triv = share(trivial_coaction(truncated_poly<Q>(1, QQ), h));
  Module<Q> k(triv->algebra_ptr(), Side::Right, 1, {Matrix<Q>::identity(1, QQ)});
  auto kh = induced_hopf_module(triv, k);
  EXPECT_TRUE(validate_hopf_module(kh).ok());
  EXPECT_EQ(kh.coaction.coefficients(), regular_comodule(h->coalgebra_ptr(), Side::Right).coefficients());
}

TEST(HopfModule, DualsOfLeftObjects) {
  auto h = share(sweedler_h4<Q>(QQ));
  auto sub = share(restricted_coaction(h, span_of<Q>(QQ, 4, {{1, 0, 0, 0}, {0, 0, 0, 1}})));
  auto left = regular_hopf_module(sub, Side::Left);
  auto d = dual_hopf_module(left);
  EXPECT_EQ(d.side(), Side::Right);
  EXPECT_EQ(d.dim(), left.dim());
  EXPECT_TRUE(validate_hopf_module(d).ok());
  EXPECT_EQ(module_iso(d.module, regular_module(sub->algebra_ptr(), Side::Right)).status, Verdict::Yes);
  auto dd = dual_hopf_module(d);
  EXPECT_EQ(dd.side(), Side::Left);
  EXPECT_TRUE(validate_hopf_module(dd).ok());
  EXPECT_EQ(module_iso(dd.module, left.module).status, Verdict::Yes);

  auto ca = h4_regular<Q>(QQ);
  for (auto& m : hopf_module_battery(ca, Side::Right, 3)) EXPECT_TRUE(validate_hopf_module(m).ok()) << m.name;
  for (auto& m : hopf_module_battery(ca, Side::Left, 3)) EXPECT_TRUE(validate_hopf_module(m).ok()) << m.name;

  auto triv = share(trivial_coaction(truncated_poly<Q>(1, QQ), h));
  auto kd = dual_hopf_module(regular_hopf_module(triv, Side::Left));
  EXPECT_EQ(kd.dim(), 1u);
  EXPECT_TRUE(validate_hopf_module(kd).ok());
}

TEST(HopfModule, FundamentalTheorem) {
  auto ca = h4_regular<Q>(QQ);
  auto h = regular_hopf_module(ca, Side::Right);
  auto f = fundamental_theorem_split(h);
  EXPECT_EQ(f.m0, span_of<Q>(QQ, 4, {{1, 0, 0, 0}}));
  EXPECT_TRUE(f.bijective);
  EXPECT_EQ(fundamental_theorem_split(hopf_module_sum(h, h)).m0.dim(), 2u);
  auto v = simple_right_modules(ca->algebra_ptr()).at(0);
  auto vv = direct_sum(v, v);
  auto ind = fundamental_theorem_split(induced_hopf_module(ca, vv));
  EXPECT_EQ(ind.m0.dim(), vv.dim());
  EXPECT_TRUE(ind.bijective);
  auto sub = share(restricted_coaction(ca->hopf_ptr(), span_of<Q>(QQ, 4, {{1, 0, 0, 0}, {0, 0, 0, 1}})));
  EXPECT_THROW(fundamental_theorem_split(regular_hopf_module(sub, Side::Right)), InputError);
}

TEST(HopfModule, RelationIdeal) {
  auto ca = h4_regular<Q>(QQ);
  auto a = regular_hopf_module(ca, Side::Right);
  EXPECT_TRUE(relation_ideal(a, {ca->algebra().unit()}).i_gens.is_zero());

  // Q[t]/(t^2), generators 1 and t: relations are spanned by (-t, 1) and (0, t),
  // so the coefficient 1 occurs and the ideal is everything.
  auto triv = share(trivial_coaction(truncated_poly<Q>(2, QQ), share(group_algebra<Q>(cyclic_group(2), QQ))));
  auto m = regular_hopf_module(triv, Side::Right);
  auto rel = relation_ideal(m, {vec_of_ints<Q>(QQ, {1, 0}), vec_of_ints<Q>(QQ, {0, 1})});
  EXPECT_EQ(rel.i_gens.dim(), 2u);
  EXPECT_TRUE(rel.sandwich);
  EXPECT_THROW(relation_ideal(m, {vec_of_ints<Q>(QQ, {0, 1})}), InputError);

  // H as an object of M_A^H over A = span{1, gx}: a basis of H/HQ lifts to an A-basis
  // because Q contains no nonzero costable ideal.
  auto h = ca->hopf_ptr();
  auto sub = share(restricted_coaction(h, span_of<Q>(QQ, 4, {{1, 0, 0, 0}, {0, 0, 0, 1}})));
  std::vector<Matrix<Q>> act;
  for (size_t i = 0; i < 2; ++i) {
    Vec<Q> b = sub->algebra().basis_vector(i);
    Vec<Q> inH = i == 0 ? vec_of_ints<Q>(QQ, {1, 0, 0, 0}) : vec_of_ints<Q>(QQ, {0, 0, 0, 1});
    act.push_back(h->algebra().right_mult(inH));
  }
  HopfModule<Q> hm{sub, Module<Q>(sub->algebra_ptr(), Side::Right, 4, act),
                   regular_comodule(h->coalgebra_ptr(), Side::Right), "H"};
  ASSERT_TRUE(validate_hopf_module(hm).ok());
  auto qs = maximal_ideals(sub->algebra());
  ASSERT_EQ(qs.size(), 1u);
  EXPECT_TRUE(largest_costable_inside(*sub, qs[0]).ideal.is_zero());
  // Images of 1 and g form a basis of H/HQ, since HQ = span{gx, x}.
  std::vector<Vec<Q>> gens{vec_of_ints<Q>(QQ, {1, 0, 0, 0}), vec_of_ints<Q>(QQ, {0, 1, 0, 0})};
  EXPECT_EQ(module_times(hm.module, qs[0]), span_of<Q>(QQ, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}}));
  auto r = relation_ideal(hm, gens, qs[0]);
  EXPECT_TRUE(r.sandwich);
  EXPECT_TRUE(r.k.ideal.is_zero());
  EXPECT_TRUE(r.i_gens.is_zero());
  EXPECT_EQ(rank(basis_map(hm.module, gens)), 4u);
}

TEST(ComodalgTheorems, Projectivity35OverF2) {
  auto ca = share(regular_coaction(share(group_algebra<GF>(cyclic_group(2), F2))));
  auto rep = verify_comodalg_theorem("3.5", ComodalgInputs<GF>{ca, nullptr, {}}, 1);
  EXPECT_TRUE(rep.passed()) << rep.summary();
  size_t members = 0;
  for (auto& c : rep.checks)
    if (c.name.find(": projective") != std::string::npos) ++members;
  EXPECT_GE(members, 6u);
  auto r36 = verify_comodalg_theorem("3.6", ComodalgInputs<GF>{ca, nullptr, {}}, 1);
  EXPECT_TRUE(r36.passed()) << r36.summary();
  EXPECT_EQ(invariants_subalgebra(*ca).algebra.dim(), 1u);
}

TEST(ComodalgTheorems, SweedlerDrivers) {
  auto ca = h4_regular<Q>(QQ);
  for (std::string id : {"3.5", "3.7", "3.8", "4.2", "5.2", "5.4"}) {
    auto rep = verify_comodalg_theorem(id, ComodalgInputs<Q>{ca, nullptr, {}}, 2);
    EXPECT_TRUE(rep.passed()) << rep.summary();
  }
  // H4 is not semisimple, so the costability statement for J refuses.
  auto r53 = verify_comodalg_theorem("5.3", ComodalgInputs<Q>{ca, nullptr, {}}, 2);
  EXPECT_EQ(r53.status(), Status::HypothesisFailure);
}

TEST(ComodalgTheorems, SemisimpleGroupAlgebra) {
  auto h = share(group_algebra<Q>(cyclic_group(2), QQ));
  auto ca = share(regular_coaction(h));
  auto r52 = verify_comodalg_theorem("5.2", ComodalgInputs<Q>{ca, nullptr, {}}, 0);
  EXPECT_TRUE(r52.passed()) << r52.summary();
  // W = sign representation, V = trivial: (1)(2) | (1)(1)(2)
  Module<Q> triv(h->algebra_ptr(), Side::Right, 1, {Matrix<Q>::identity(1, QQ), Matrix<Q>::identity(1, QQ)});
  auto r54 = verify_comodalg_theorem("5.4", ComodalgInputs<Q>{ca, nullptr, {triv}}, 0);
  EXPECT_TRUE(r54.passed()) << r54.summary();
  bool sign_row = false;
  for (auto& c : r54.checks)
    if (c.detail.find("dim D=1 dim A=2 dim V=1 dim W=1 dim H=2: 2 | 2") != std::string::npos) sign_row = true;
  EXPECT_TRUE(sign_row);

  auto tp = trivial_on_product<Q>(QQ, 2);
  auto r53 = verify_comodalg_theorem("5.3", ComodalgInputs<Q>{tp, nullptr, {}}, 0);
  EXPECT_TRUE(r53.passed()) << r53.summary();
  auto r35 = verify_comodalg_theorem("3.5", ComodalgInputs<Q>{tp, nullptr, {}}, 0);
  EXPECT_EQ(r35.status(), Status::HypothesisFailure);
  EXPECT_EQ(r35.failed_stage, "H-simplicity");
}

TEST(ComodalgTheorems, SandwichOnRandomGenerators) {
  auto ca = h4_regular<Q>(QQ);
  Rng rng(11);
  size_t checked = 0;
  for (auto& m : hopf_module_battery(ca, Side::Right, 5)) {
    for (int rep = 0; rep < 3; ++rep) {
      auto gens = is_projective(m.module).generators;
      Vec<Q> extra(m.dim());
      for (auto& x : extra) x = QQ.from_int(long(rng.below(5)) - 2);
      gens.push_back(extra);
      auto base = relation_coefficient_ideal(m.module, gens);
      auto I = base + ideal_closure(ca->algebra(), {ca->algebra().basis_vector(2 + rng.below(2))});
      auto r = relation_ideal(m, gens, I);
      EXPECT_TRUE(r.sandwich) << m.name;
      ++checked;
    }
  }
  EXPECT_GE(checked, 18u);
}
