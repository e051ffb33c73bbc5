#include <gtest/gtest.h>

#include "hopfkit/modalg.hpp"
#include "support/builders.hpp"
#include "support/oracles.hpp"

using namespace hopfkit;
using namespace testsupport;

namespace {

using Q = Rational;
RationalField QQ;
GFField F3(3, 1);

// k^n with orthogonal idempotents e_0..e_{n-1}.
template <class K>
AlgebraPtr<K> split_algebra(size_t n, const FieldOf<K>& F) {
  std::vector<Vec<K>> mult(n * n, Vec<K>(n));
  std::vector<std::string> labels;
  Vec<K> unit(n);
  for (size_t i = 0; i < n; ++i) {
    mult[i * n + i][i] = F.one();
    unit[i] = F.one();
    labels.push_back("e" + std::to_string(i));
  }
  return std::make_shared<const Algebra<K>>(F, labels, mult, unit);
}

// C_n permuting the idempotents of k^n cyclically: g^i e_j = e_{i+j}.
template <class K>
HModuleAlgebra<K> rotation_action(size_t n, const FieldOf<K>& F) {
  auto h = share(group_algebra<K>(cyclic_group(n), F));
  std::vector<Matrix<K>> act;
  for (size_t i = 0; i < n; ++i) {
    Matrix<K> m(n, n);
    for (size_t j = 0; j < n; ++j) m((i + j) % n, j) = F.one();
    act.push_back(m);
  }
  return HModuleAlgebra<K>(split_algebra<K>(n, F), h, act, "rotation");
}

// The 2-dim left H4-module with g = diag(1, -1) and x = E21.
template <class K>
Module<K> h4_two_dim(const HopfPtr<K>& h) {
  const auto& F = h->field();
  Matrix<K> g(2, 2), x(2, 2);
  g(0, 0) = F.one();
  g(1, 1) = F.from_int(-1);
  x(1, 0) = F.one();
  // basis 1, g, x, gx
  return Module<K>(h->algebra_ptr(), Side::Left, 2, {Matrix<K>::identity(2, F), g, x, g * x});
}

template <class K>
bool same_structure_constants(const Algebra<K>& a, const Algebra<K>& b) {
  if (a.dim() != b.dim() || a.unit() != b.unit()) return false;
  for (size_t i = 0; i < a.dim(); ++i)
    for (size_t j = 0; j < a.dim(); ++j)
      if (a.basis_product(i, j) != b.basis_product(i, j)) return false;
  return true;
}

}  // namespace

TEST(Modalg, ValidationExamples) {
  EXPECT_TRUE(validate_module_algebra(swap_action<Q>(QQ)).ok());
  auto h4 = share(sweedler_h4<Q>(QQ));
  EXPECT_TRUE(validate_module_algebra(trivial_action(truncated_poly<Q>(3, QQ), h4)).ok());
  EXPECT_TRUE(validate_module_algebra(adjoint_action(h4)).ok());
  auto v = h4_two_dim(h4);
  ASSERT_TRUE(validate_module(v).ok());
  EXPECT_TRUE(validate_module_algebra(endomorphism_action(h4, v)).ok());
  EXPECT_TRUE(validate_module_algebra(rotation_action<GF>(3, F3)).ok());

  // g acting by the identity plus one stray entry
  auto sw = swap_action<Q>(QQ);
  auto act = sw.actions();
  act[1](0, 0) += QQ.one();
  auto bad = validate_module_algebra(HModuleAlgebra<Q>(sw.algebra_ptr(), sw.hopf_ptr(), act));
  ASSERT_FALSE(bad.ok());
  EXPECT_EQ(bad.violations.front().indices.front(), 1u);
}

TEST(Modalg, SmashProducts) {
  auto h = share(group_algebra<Q>(cyclic_group(2), QQ));
  auto a = truncated_poly<Q>(2, QQ);
  auto triv = smash_product(trivial_action(a, h));
  EXPECT_TRUE(same_structure_constants(*triv.algebra, tensor_of_algebras(*a, h->algebra())));

  auto sw = smash_product(swap_action<Q>(QQ));
  ASSERT_EQ(sw.algebra->dim(), 4u);
  EXPECT_TRUE(validate_algebra(*sw.algebra).ok());
  auto wd = wedderburn_data(*sw.algebra);
  ASSERT_TRUE(wd->conclusive);
  EXPECT_TRUE(wd->radical.is_zero());
  ASSERT_EQ(wd->blocks.size(), 1u);
  EXPECT_EQ(wd->blocks[0].simple_dim, 2u);
  EXPECT_EQ(wd->blocks[0].division_dim, 1u);
  EXPECT_EQ(wd->blocks[0].multiplicity, 2u);

  auto h4 = share(sweedler_h4<Q>(QQ));
  for (auto v : {SmashVariant::Plain, SmashVariant::OpCop}) {
    auto s = smash_product(adjoint_action(h4), v);
    EXPECT_EQ(s.algebra->dim(), 16u);
    EXPECT_TRUE(validate_algebra(*s.algebra).ok()) << smash_variant_name(v);
    // the embeddings are algebra maps
    const auto& S = *s.algebra;
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j)
        EXPECT_EQ(S.multiply(s.h_embed.col(i), s.h_embed.col(j)), s.h_embed.apply(h4->algebra().basis_product(i, j)));
  }
}

TEST(Modalg, StableClosureAndK) {
  auto sw = swap_action<Q>(QQ);
  auto full = Subspace<Q>::full(2, QQ);
  auto first = Subspace<Q>::span(2, {unit_vec<Q>(2, 0, QQ)});
  EXPECT_EQ(stable_closure_and_K(sw, {}, full).k, full);
  // the swap moves Q x 0 onto 0 x Q, so nothing nonzero stays inside
  EXPECT_TRUE(stable_closure_and_K(sw, {}, first).k.is_zero());
  EXPECT_EQ(stable_closure_and_K(sw, {unit_vec<Q>(2, 0, QQ)}).closure, full);

  auto h = share(group_algebra<Q>(cyclic_group(2), QQ));
  auto a = truncated_poly<Q>(3, QQ);
  auto triv = trivial_action(a, h);
  auto i = ideal_closure(*a, {unit_vec<Q>(3, 1, QQ)});
  auto sc = stable_closure_and_K(triv, {unit_vec<Q>(3, 2, QQ)}, i);
  EXPECT_EQ(sc.k, i);
  EXPECT_EQ(sc.closure.dim(), 1u);
  EXPECT_THROW(stable_closure_and_K(triv, {}, Subspace<Q>::span(3, {unit_vec<Q>(3, 0, QQ)})), InputError);

  // the radical of H4 is stable under the adjoint action
  auto ad = adjoint_action(share(sweedler_h4<Q>(QQ)));
  auto rad = stable_closure_and_K(ad, {unit_vec<Q>(4, 2, QQ)});
  EXPECT_EQ(rad.closure.dim(), 2u);
  EXPECT_EQ(is_h_simple(ad).status, Simplicity::NotSimple);
  EXPECT_EQ(is_h_simple(sw).status, Simplicity::Simple);
}

TEST(Modalg, ObjectBatteryAndTransport) {
  auto h4 = share(sweedler_h4<Q>(QQ));
  std::vector<HModuleAlgebra<Q>> mas = {swap_action<Q>(QQ), endomorphism_action(h4, h4_two_dim(h4)), adjoint_action(h4)};
  for (auto& ma : mas) {
    auto s = smash_product(ma, SmashVariant::OpCop);
    auto battery = hm_object_battery(ma, 3);
    EXPECT_GE(battery.size(), 4u) << ma.name();
    for (auto& m : battery) {
      auto val = validate_hm_object(ma, m);
      EXPECT_TRUE(val.ok()) << ma.name() << " " << m.name << ": " << val.violations.front().to_string();
      auto sm = as_smash_module(ma, s, m);
      EXPECT_TRUE(validate_module(sm).ok()) << ma.name() << " " << m.name;
      auto back = object_from_smash_module(ma, s, sm);
      EXPECT_EQ(back.module.actions(), m.module.actions());
      EXPECT_EQ(back.h_action, m.h_action);
    }
  }
}

TEST(Modalg, DualityConsistencyForCommutativeCocommutative) {
  // With A commutative and H cocommutative the two smash products agree, so a module over
  // one is a module over the other with the same matrices.
  std::vector<HModuleAlgebra<GF>> mas = {rotation_action<GF>(2, F3), rotation_action<GF>(3, F3), swap_action<GF>(F3)};
  auto c2 = share(group_algebra<GF>(cyclic_group(2), F3));
  mas.push_back(trivial_action(truncated_poly<GF>(2, F3), c2));
  Rng rng(29);
  size_t checked = 0;
  for (size_t t = 0; t < 20; ++t) {
    const auto& ma = mas[t % mas.size()];
    auto plain = smash_product(ma, SmashVariant::Plain);
    auto opcop = smash_product(ma, SmashVariant::OpCop);
    ASSERT_TRUE(same_structure_constants(*plain.algebra, *opcop.algebra));
    auto r = random_module(opposite_of(*opcop.algebra), 6, rng);
    Module<GF> left(opcop.algebra, Side::Left, r.dim(), r.actions());
    ASSERT_TRUE(validate_module(left).ok());
    auto obj = object_from_smash_module(ma, opcop, left);
    EXPECT_TRUE(validate_hm_object(ma, obj).ok());
    Module<GF> over_plain(plain.algebra, Side::Left, left.dim(), left.actions());
    EXPECT_TRUE(validate_module(over_plain).ok());
    EXPECT_EQ(as_smash_module(ma, opcop, obj).actions(), left.actions());
    ++checked;
  }
  EXPECT_EQ(checked, 20u);
}

TEST(Modalg, SandwichOnRandomGenerators) {
  auto h4 = share(sweedler_h4<GF>(F3));
  std::vector<HModuleAlgebra<GF>> mas = {swap_action<GF>(F3), rotation_action<GF>(3, F3), adjoint_action(h4),
                                         endomorphism_action(h4, h4_two_dim(h4))};
  Rng rng(41);
  size_t checked = 0;
  for (size_t t = 0; t < 50; ++t) {
    const auto& ma = mas[t % mas.size()];
    auto battery = hm_object_battery(ma, t);
    const auto& m = battery[rng.below(battery.size())];
    std::vector<Vec<GF>> gens;
    while (submodule_closure(m.module, gens).dim() < m.dim()) {
      Vec<GF> v(m.dim());
      for (auto& c : v) c = sample_scalar(F3, rng, 3);
      gens.push_back(v);
    }
    auto base = stable_sandwich(ma, m, gens);
    EXPECT_TRUE(base.sandwich);
    // I_gens is itself H-stable
    EXPECT_EQ(base.k, base.i_gens);
    Vec<GF> extra(ma.dim());
    for (auto& c : extra) c = sample_scalar(F3, rng, 3);
    auto gens_i = base.i_gens.basis_vectors();
    gens_i.push_back(extra);
    auto bigger = stable_sandwich(ma, m, gens, ideal_closure(ma.algebra(), gens_i));
    EXPECT_TRUE(bigger.sandwich) << ma.name() << " " << m.name;
    EXPECT_TRUE(is_h_stable(ma, bigger.k));
    ++checked;
  }
  EXPECT_EQ(checked, 50u);
}

TEST(Modalg, Driver76) {
  ModalgInputs<Q> in;
  in.ma = share(swap_action<Q>(QQ));
  auto rep = verify_modalg_theorem("7.6", in, 1);
  EXPECT_TRUE(rep.passed()) << rep.summary();
  EXPECT_GE(rep.checks.size(), 8u);

  auto h4 = share(sweedler_h4<Q>(QQ));
  in.ma = share(endomorphism_action(h4, h4_two_dim(h4)));
  rep = verify_modalg_theorem("7.6", in, 2);
  EXPECT_TRUE(rep.passed()) << rep.summary();

  in.ma = share(adjoint_action(h4));
  rep = verify_modalg_theorem("7.6", in, 2);
  EXPECT_EQ(rep.status(), Status::HypothesisFailure);
  EXPECT_EQ(rep.failed_stage, "H-simplicity");
}

TEST(Modalg, Driver77) {
  ModalgInputs<Q> in;
  in.ma = share(swap_action<Q>(QQ));
  EXPECT_TRUE(verify_modalg_theorem("7.7", in, 4).passed());
  auto h4 = share(sweedler_h4<Q>(QQ));
  in.ma = share(endomorphism_action(h4, h4_two_dim(h4)));
  auto rep = verify_modalg_theorem("7.7", in, 4);
  EXPECT_TRUE(rep.passed()) << rep.summary();
}

TEST(Modalg, Driver71Probe) {
  ModalgInputs<Q> in;
  auto dual = share(dual_group_algebra<Q>(cyclic_group(2), QQ));
  in.c = dual->coalgebra_ptr();
  in.b = share(matrix_algebra<Q>(1, QQ));
  auto rep = verify_modalg_theorem("7.1", in, 7);
  EXPECT_TRUE(rep.passed()) << rep.summary();
  EXPECT_NE(rep.checks.front().detail.find(" 0 with YX != 1"), std::string::npos);
  EXPECT_EQ(verify_modalg_theorem("7.1", ModalgInputs<Q>{}, 0).status(), Status::HypothesisFailure);
}

TEST(Modalg, Driver72) {
  auto h4 = share(sweedler_h4<Q>(QQ));
  ModalgInputs<Q> in;
  in.ma = share(adjoint_action(h4));
  auto rep = verify_modalg_theorem("7.2", in, 0);
  EXPECT_TRUE(rep.passed()) << rep.summary();
  EXPECT_NE(rep.checks[0].detail.find("rank 16 of 16"), std::string::npos);

  // a simple object of End(V) with a single generator
  auto ma = share(endomorphism_action(h4, h4_two_dim(h4)));
  auto battery = hm_object_battery(*ma, 0);
  in.ma = ma;
  in.objects = {battery[2]};
  in.gens = {unit_vec<Q>(battery[2].dim(), 0, QQ)};
  rep = verify_modalg_theorem("7.2", in, 0);
  EXPECT_TRUE(rep.passed()) << rep.summary();

  in.gens = {};
  EXPECT_EQ(verify_modalg_theorem("7.2", in, 0).failed_stage, "inputs");
}

TEST(Modalg, Errors) {
  ModalgInputs<Q> in;
  EXPECT_THROW(verify_modalg_theorem("7.4", in), InputError);
  EXPECT_EQ(verify_modalg_theorem("7.6", in).failed_stage, "inputs");
  auto sw = swap_action<Q>(QQ);
  auto act = sw.actions();
  act[0](1, 0) += QQ.one();
  in.ma = share(HModuleAlgebra<Q>(sw.algebra_ptr(), sw.hopf_ptr(), act));
  EXPECT_EQ(verify_modalg_theorem("7.6", in).failed_stage, "module algebra axioms");
}
