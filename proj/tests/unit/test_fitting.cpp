#include <gtest/gtest.h>

#include "hopfkit/fitting.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace hopfkit;
using namespace testsupport;

namespace {

using Q = Rational;
RationalField QQ;
GFField F3(3, 1);

template <class K>
Subspace<K> span_of(const FieldOf<K>& F, size_t n, std::vector<std::vector<long>> vs) {
  std::vector<Vec<K>> out;
  for (auto& v : vs) out.push_back(vec_of_ints<K>(F, v));
  return Subspace<K>::span(n, out);
}

// k[s]/(s^2) (x) k[C2] with k[C2] coacting on the second factor; basis s^a g^b at 2a + b.
template <class K>
ComoduleAlgebraPtr<K> c2_times_dual_numbers(const FieldOf<K>& F) {
  auto h = share(group_algebra<K>(cyclic_group(2), F));
  return share(tensor_with_algebra(truncated_poly<K>(2, F), regular_coaction(h)));
}

template <class K>
void expect_chain(const FittingLedger<K>& led) {
  EXPECT_TRUE(led.fitt(-1).is_zero());
  for (long i = -1; i < long(led.n()); ++i) EXPECT_TRUE(led.fitt(i).is_subspace_of(led.fitt(i + 1))) << i;
  EXPECT_TRUE(led.fitt(long(led.n())).is_full());
  EXPECT_TRUE(led.fitt(long(led.n()) + 3).is_full());
}

}  // namespace

TEST(Fitting, CyclicQuotientOfTwoPointAlgebra) {
  // A = Q[t]/(t^2 - 1) with t = g; M = A/(t - 1) has the single relation t - 1.
  auto a = cyclic_group_algebra<Q>(2, QQ);
  auto reg = regular_module(a, Side::Right);
  auto m = quotient_module(reg, span_of<Q>(QQ, 2, {{-1, 1}})).module;
  auto led = fitting_ledger(m);
  EXPECT_EQ(led.n(), 1u);
  EXPECT_EQ(led.fitt(0), span_of<Q>(QQ, 2, {{-1, 1}}));
  EXPECT_TRUE(led.fitt(1).is_full());
  EXPECT_TRUE(led.presentation_checked);
  expect_chain(led);
  EXPECT_EQ(fitting_ideal(m, 0), led.fitt(0));
  EXPECT_TRUE(fitting_ideal(m, -1).is_zero());
}

TEST(Fitting, FreeModuleHasEmptyKernel) {
  auto a = cyclic_group_algebra<Q>(2, QQ);
  auto led = fitting_ledger(free_module(a, Side::Right, 2));
  EXPECT_EQ(led.n(), 2u);
  EXPECT_TRUE(led.presentation.relations.empty());
  EXPECT_TRUE(led.fitt(1).is_zero());
  EXPECT_TRUE(led.fitt(0).is_zero());
  EXPECT_TRUE(led.fitt(2).is_full());
}

TEST(Fitting, PresentationIndependenceWithExplicitGenerators) {
  // Non-minimal generating set: every basis vector of a 2-dim module over k[s]/(s^3).
  auto a = truncated_poly<Q>(3, QQ);
  auto reg = regular_module(a, Side::Right);
  auto m = quotient_module(reg, span_of<Q>(QQ, 3, {{0, 0, 1}})).module;  // A/(s^2)
  auto led_min = fitting_ledger(m);
  std::vector<Vec<Q>> gens = {unit_vec<Q>(2, 0, QQ), unit_vec<Q>(2, 1, QQ)};
  auto led_big = fitting_ledger(m, gens);
  for (long i = -1; i <= 3; ++i) EXPECT_EQ(led_min.fitt(i), led_big.fitt(i)) << i;
  EXPECT_EQ(led_min.fitt(0), span_of<Q>(QQ, 3, {{0, 0, 1}}));
}

TEST(Fitting, Errors) {
  auto h4 = share(sweedler_h4<Q>(QQ));
  EXPECT_THROW(fitting_ledger(regular_module(h4->algebra_ptr(), Side::Right)), InputError);
  auto k = truncated_poly<Q>(1, QQ);
  auto big = free_module(k, Side::Right, 7);
  EXPECT_THROW(fitting_ledger(big), InputError);
  EXPECT_THROW(fitting_ideal(big, 0), InputError);
  EXPECT_TRUE(fitting_ideal(big, 1).is_zero());
  EXPECT_THROW(present(big, {unit_vec<Q>(7, 0, QQ)}), InputError);
}

TEST(Fitting, P11OnDualNumbersOverC2) {
  auto ca = c2_times_dual_numbers<Q>(QQ);
  auto s_ideal = span_of<Q>(QQ, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  auto m = hopf_quotient(regular_hopf_module(ca, Side::Right), s_ideal);
  ASSERT_TRUE(validate_hopf_module(m).ok());
  auto led = fitting_ledger(m.module);
  EXPECT_EQ(led.fitt(0), s_ideal);
  EXPECT_TRUE(is_costable(*ca, led.fitt(0)));

  FittingInputs<Q> in;
  in.hopf_module = m;
  auto rep = verify_fitting_property("P1.1", in);
  EXPECT_TRUE(rep.passed()) << rep.summary();

  // A has the proper costable ideal (s), so the corollary's hypothesis fails.
  auto c16 = verify_fitting_property("C1.6", in);
  EXPECT_EQ(c16.status(), Status::HypothesisFailure);
  EXPECT_EQ(c16.failed_stage, "H-simplicity");
}

TEST(Fitting, F1BaseChangeKillsRelation) {
  auto ca = c2_times_dual_numbers<Q>(QQ);
  auto s_ideal = span_of<Q>(QQ, 4, {{0, 0, 1, 0}, {0, 0, 0, 1}});
  auto reg = regular_module(ca->algebra_ptr(), Side::Right);
  auto m = quotient_module(reg, s_ideal).module;
  auto qa = quotient_algebra(ca->algebra(), s_ideal);
  auto b = share(std::move(qa.algebra));
  auto bm = base_change(m, s_ideal, b);
  EXPECT_EQ(bm.dim(), 2u);
  EXPECT_TRUE(fitting_ledger(bm).fitt(0).is_zero());

  FittingInputs<Q> in;
  in.modules = {m, free_module(ca->algebra_ptr(), Side::Right, 1)};
  // second base change: A/(g - 1) = k[s]/(s^2)
  in.base_changes = {s_ideal, span_of<Q>(QQ, 4, {{-1, 1, 0, 0}, {0, 0, -1, 1}})};
  auto rep = verify_fitting_property("F1", in);
  EXPECT_TRUE(rep.passed()) << rep.summary();
  EXPECT_EQ(rep.checks.size(), 4u);
}

TEST(Fitting, F2AgreesWithFreenessOnRandomModules) {
  Rng rng(17);
  FittingInputs<Q> in;
  auto c2 = cyclic_group_algebra<Q>(2, QQ);
  auto ca = c2_times_dual_numbers<Q>(QQ);
  for (int i = 0; i < 10; ++i) in.modules.push_back(random_module(c2, 4, rng));
  for (int i = 0; i < 10; ++i) in.modules.push_back(random_module(ca->algebra_ptr(), 6, rng));
  in.modules.push_back(free_module(c2, Side::Right, 2));
  auto rep = verify_fitting_property("F2", in, 5);
  EXPECT_TRUE(rep.passed()) << rep.summary();
  EXPECT_EQ(rep.checks.size(), 21u);
  size_t with_rank = 0;
  for (auto& c : rep.checks) with_rank += c.detail.find("; Fitting rank") != std::string::npos;
  EXPECT_GT(with_rank, 0u);
  EXPECT_LT(with_rank, 21u);
  for (auto& m : in.modules) expect_chain(fitting_ledger(m));
}

TEST(Fitting, C16OnHSimpleAlgebras) {
  auto h = share(group_algebra<Q>(cyclic_group(2), QQ));
  auto ca = share(regular_coaction(h));
  Rng rng(3);
  for (int t = 0; t < 4; ++t) {
    FittingInputs<Q> in;
    in.hopf_module = induced_hopf_module(ca, random_module(ca->algebra_ptr(), 3, rng));
    auto rep = verify_fitting_property("C1.6", in);
    EXPECT_TRUE(rep.passed()) << rep.summary();
  }
}

TEST(Fitting, P11OnRandomHopfModules) {
  // Commutative comodule algebras over commutative Hopf algebras from the catalog.
  std::vector<ComoduleAlgebraPtr<GF>> cas;
  auto c3 = share(group_algebra<GF>(cyclic_group(3), F3));
  auto c2 = share(group_algebra<GF>(cyclic_group(2), F3));
  cas.push_back(share(regular_coaction(c3)));
  cas.push_back(share(regular_coaction(share(dual_group_algebra<GF>(cyclic_group(3), F3)))));
  cas.push_back(c2_times_dual_numbers<GF>(F3));
  cas.push_back(share(trivial_coaction(truncated_poly<GF>(3, F3), c2)));
  Rng rng(11);
  size_t checked = 0;
  for (int t = 0; t < 50; ++t) {
    const auto& ca = cas[t % cas.size()];
    auto hm = induced_hopf_module(ca, random_module(ca->algebra_ptr(), 2, rng));
    if (rng.below(2)) {
      Vec<GF> seed(hm.dim());
      for (auto& c : seed) c = sample_scalar(F3, rng, 3);
      auto sub = hopf_submodule_closure(hm, {seed});
      if (sub.dim() > 0 && sub.dim() < hm.dim()) hm = rng.below(2) ? hopf_submodule(hm, sub) : hopf_quotient(hm, sub);
    }
    ASSERT_TRUE(validate_hopf_module(hm).ok());
    FittingInputs<GF> in;
    in.hopf_module = hm;
    auto rep = verify_fitting_property("P1.1", in);
    EXPECT_TRUE(rep.passed()) << rep.summary();
    ++checked;
  }
  EXPECT_EQ(checked, 50u);
}

TEST(Fitting, HypothesisFailures) {
  auto h4 = share(sweedler_h4<Q>(QQ));
  FittingInputs<Q> in;
  in.hopf_module = regular_hopf_module(share(regular_coaction(h4)), Side::Right);
  EXPECT_EQ(verify_fitting_property("P1.1", in).failed_stage, "H commutative");
  EXPECT_EQ(verify_fitting_property("F2", FittingInputs<Q>{}).status(), Status::HypothesisFailure);
  EXPECT_THROW(verify_fitting_property("F9", in), InputError);
}
