#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/coalgebra.hpp"
#include "hopfkit/comodalg/theorems.hpp"
#include "hopfkit/modalg/module_algebra.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit {

template <class K>
struct ModalgInputs {
  ModuleAlgebraPtr<K> ma;
  std::vector<HMObject<K>> objects;   // battery extensions; for "7.2" the first one is M
  std::vector<Vec<K>> gens;           // "7.2": A-module generators of M (default: unit of A for M = A)
  CoalgebraPtr<K> c;                  // "7.1"
  AlgebraPtr<K> b;                    // "7.1"
  size_t n = 2;                       // "7.1"
  size_t trials = 100;                // "7.1"
};

inline const std::vector<std::string>& modalg_theorem_ids() {
  static const std::vector<std::string> ids{"7.1", "7.2", "7.6", "7.7"};
  return ids;
}

// A, the regular smash module, the simple smash modules, A + V0 and a random sub-object with its quotient.
template <class K>
std::vector<HMObject<K>> hm_object_battery(const HModuleAlgebra<K>& ma, uint64_t seed,
                                           const std::vector<HMObject<K>>& extra = {}) {
  auto s = smash_product(ma, SmashVariant::OpCop);
  std::vector<HMObject<K>> out;
  out.push_back(algebra_as_object(ma));
  out.push_back(object_from_smash_module(ma, s, regular_module(s.algebra, Side::Left), "Aop#Hcop"));
  auto simples = simple_left_modules(s.algebra);
  for (size_t i = 0; i < simples.size(); ++i)
    out.push_back(object_from_smash_module(ma, s, simples[i], "V" + std::to_string(i)));
  for (auto& e : extra) out.push_back(e);
  auto sum = direct_sum(as_smash_module(ma, s, out[0]), simples.front());
  out.push_back(object_from_smash_module(ma, s, sum, "A + V0"));
  Rng rng(seed);
  for (size_t attempt = 0; attempt < 8; ++attempt) {
    Vec<K> v(sum.dim());
    for (auto& x : v) x = sample_scalar(ma.field(), rng, 3);
    if (is_zero_vec(v)) continue;
    auto sub = submodule_closure(sum, {v});
    if (sub.dim() == sum.dim()) continue;
    out.push_back(object_from_smash_module(ma, s, submodule(sum, sub), "sub"));
    out.push_back(object_from_smash_module(ma, s, quotient_module(sum, sub).module, "quotient"));
    break;
  }
  return out;
}

namespace detail {

template <class K>
bool require_stable_simple(TheoremReport& rep, const HModuleAlgebra<K>& ma, uint64_t seed) {
  auto hs = is_h_simple(ma, seed);
  if (hs.status == Simplicity::Simple) {
    rep.hypothesis("A is H-simple: " + hs.certificate);
    return true;
  }
  if (hs.status == Simplicity::NotSimple)
    rep.refuse("H-simplicity", "proper H-stable ideal of dimension " + std::to_string(hs.witness.dim()) + " (" +
                                   hs.certificate + ")");
  else
    rep.add("hypothesis: H-simplicity", Status::Inconclusive, hs.certificate);
  return false;
}

// Projectivity and "free iff some M/MQ is free" for one module over A.
template <class K>
void check_projective_and_criterion(TheoremReport& rep, const std::string& tag, const Module<K>& m_in, uint64_t seed) {
  Module<K> m = m_in.as_right();
  auto pr = is_projective(m);
  rep.add(tag + ": projective", verdict_status(pr.status), pr.note);
  auto fr = is_free(m, 60, seed);
  auto crit = freeness_criterion(m);
  std::string rq;
  for (auto& r : crit.r_q) rq += (rq.empty() ? "" : ",") + r;
  std::string detail = "dim " + std::to_string(m.dim()) + ", r_Q = [" + rq + "], is_free = " + verdict_name(fr.status);
  if (fr.status == Verdict::Unknown) {
    rep.add(tag + ": free iff some M/MQ free", Status::Inconclusive, detail + "; " + fr.note);
    return;
  }
  rep.expect(tag + ": free iff some M/MQ free", (fr.status == Verdict::Yes) == crit.free_at.has_value(), detail);
}

// Hom(H, M) as M (x) H*: xi at m*dH + l is the coefficient of e_m in xi(h_l).
template <class K>
Vec<K> hom_from_values(const std::vector<Vec<K>>& values, size_t dm) {
  size_t dh = values.size();
  Vec<K> out(dm * dh);
  for (size_t l = 0; l < dh; ++l)
    for (size_t m = 0; m < dm; ++m) out[m * dh + l] = values[l][m];
  return out;
}

// Span of xi * eta over eta in Hom(H, A): (xi eta)(h) = sum xi(h1) eta(h2).
template <class K>
Subspace<K> convolution_submodule(const HModuleAlgebra<K>& ma, const HMObject<K>& m, const std::vector<Vec<K>>& xis) {
  const auto& C = ma.hopf().coalgebra();
  size_t dh = C.dim(), dm = m.dim(), da = ma.dim();
  std::vector<Vec<K>> span;
  for (auto& xi : xis) {
    std::vector<Vec<K>> vals(dh, Vec<K>(dm));
    for (size_t l = 0; l < dh; ++l)
      for (size_t r = 0; r < dm; ++r) vals[l][r] = xi[r * dh + l];
    for (size_t t = 0; t < dh; ++t)
      for (size_t k = 0; k < da; ++k) {
        // eta = a_k (x) h_t^*
        std::vector<Vec<K>> out(dh, Vec<K>(dm));
        for (size_t l = 0; l < dh; ++l)
          for (size_t p = 0; p < dh; ++p) {
            const K& c = C.coeff(l, p, t);
            if (c.is_zero()) continue;
            axpy(out[l], c, m.module.action_basis(k).apply(vals[p]));
          }
        span.push_back(hom_from_values(out, dm));
      }
  }
  return Subspace<K>::span(dm * dh, span);
}

template <class K>
TheoremReport modalg_71(const ModalgInputs<K>& in, uint64_t seed) {
  TheoremReport rep{"7.1", "Hom(C, B) is weakly finite when B is", {}, {}, {}, seed};
  if (!in.c || !in.b) {
    rep.refuse("inputs", "need a coalgebra C and an algebra B");
    return rep;
  }
  rep.hypothesis("dim C = " + std::to_string(in.c->dim()) + ", dim B = " + std::to_string(in.b->dim()) +
                 "; Mat_n(Hom(C, B)) = Hom(C, Mat_n(B))");
  auto conv = convolution_algebra(*in.c, *in.b);
  auto pr = weak_finiteness_probe(conv, in.n, in.trials, seed);
  std::string detail = "n = " + std::to_string(pr.n) + ", " + std::to_string(pr.solvable) + "/" +
                       std::to_string(pr.trials) + " samples with XY = 1, " + std::to_string(pr.violations) +
                       " with YX != 1";
  rep.expect("probe clean", pr.clean(), detail);
  return rep;
}

template <class K>
TheoremReport modalg_72(const ModalgInputs<K>& in, uint64_t seed) {
  TheoremReport rep{"7.2", "both e^_i and tau(e_i) generate Hom(H, M) over Hom(H, A)", {}, {}, {}, seed};
  const auto& ma = *in.ma;
  HMObject<K> m = in.objects.empty() ? algebra_as_object(ma) : in.objects.front();
  auto val = validate_hm_object(ma, m);
  if (!val.ok()) {
    rep.refuse("object axioms", val.violations.front().to_string());
    return rep;
  }
  std::vector<Vec<K>> gens = in.gens;
  if (gens.empty()) {
    if (!in.objects.empty()) {
      rep.refuse("inputs", "need generators of M");
      return rep;
    }
    gens.push_back(ma.algebra().unit());
  }
  if (submodule_closure(m.module, gens).dim() != m.dim()) {
    rep.refuse("generators", "the elements do not generate M as an A-module");
    return rep;
  }
  rep.hypothesis(std::to_string(gens.size()) + " generators of M, dim M = " + std::to_string(m.dim()));
  const auto& C = ma.hopf().coalgebra();
  size_t dh = C.dim(), dm = m.dim();
  std::vector<Vec<K>> hats, taus;
  for (auto& e : gens) {
    std::vector<Vec<K>> hv, tv;
    for (size_t l = 0; l < dh; ++l) {
      hv.push_back(scale_vec(C.counit()[l], e));
      tv.push_back(m.h_action[l].apply(e));
    }
    hats.push_back(hom_from_values(hv, dm));
    taus.push_back(hom_from_values(tv, dm));
  }
  size_t target = dm * dh;
  auto s1 = convolution_submodule(ma, m, hats);
  auto s2 = convolution_submodule(ma, m, taus);
  auto d = [&](const Subspace<K>& s) { return "rank " + std::to_string(s.dim()) + " of " + std::to_string(target); };
  rep.expect("e^_i generate", s1.dim() == target, d(s1));
  rep.expect("tau(e_i) generate", s2.dim() == target, d(s2));
  return rep;
}

template <class K>
TheoremReport modalg_76(const ModalgInputs<K>& in, uint64_t seed) {
  TheoremReport rep{"7.6", "objects of HM_A are projective; free iff some M/MQ is free", {}, {}, {}, seed};
  const auto& ma = *in.ma;
  if (!require_stable_simple(rep, ma, seed)) return rep;
  rep.hypothesis("A finite-dimensional, hence semilocal");
  rep.hypothesis("no condition on coinvariants: convolution algebras Hom(H, A/Q) are weakly finite");
  for (auto& m : hm_object_battery(ma, seed, in.objects)) {
    auto val = validate_hm_object(ma, m);
    rep.expect(m.name + ": object axioms", val.ok(), val.ok() ? "" : val.violations.front().to_string());
    if (!val.ok()) continue;
    check_projective_and_criterion(rep, m.name, m.module, seed);
  }
  return rep;
}

template <class K>
TheoremReport modalg_77(const ModalgInputs<K>& in, uint64_t seed) {
  TheoremReport rep{"7.7", "left A#H-modules are projective A-modules", {}, {}, {}, seed};
  const auto& ma = *in.ma;
  const auto& H = ma.hopf();
  if (!H.antipode_inverse() && !inverse(H.antipode(), H.field())) {
    rep.refuse("bijective antipode", "s is not invertible");
    return rep;
  }
  rep.hypothesis("antipode bijective");
  if (!require_stable_simple(rep, ma, seed)) return rep;
  auto s = smash_product(ma, SmashVariant::Plain);
  std::vector<std::pair<std::string, Module<K>>> battery;
  battery.emplace_back("A#H", regular_module(s.algebra, Side::Left));
  auto simples = simple_left_modules(s.algebra);
  for (size_t i = 0; i < simples.size(); ++i) battery.emplace_back("W" + std::to_string(i), simples[i]);
  auto sum = direct_sum(battery[0].second, simples.front());
  Rng rng(seed);
  for (size_t attempt = 0; attempt < 8; ++attempt) {
    Vec<K> v(sum.dim());
    for (auto& x : v) x = sample_scalar(ma.field(), rng, 3);
    auto sub = submodule_closure(sum, {v});
    if (sub.dim() == 0 || sub.dim() == sum.dim()) continue;
    battery.emplace_back("sub", submodule(sum, sub));
    battery.emplace_back("quotient", quotient_module(sum, sub).module);
    break;
  }
  for (auto& [name, w] : battery) {
    std::vector<Matrix<K>> act;
    for (size_t i = 0; i < ma.dim(); ++i) act.push_back(w.action(s.a_embed.col(i)));
    Module<K> restricted(ma.algebra_ptr(), Side::Left, w.dim(), std::move(act));
    check_projective_and_criterion(rep, name, restricted, seed);
  }
  return rep;
}

}  // namespace detail

template <class K>
TheoremReport verify_modalg_theorem(const std::string& id, const ModalgInputs<K>& in, uint64_t seed = 0) {
  if (id == "7.1") return detail::modalg_71(in, seed);
  if (id != "7.2" && id != "7.6" && id != "7.7") throw InputError("unknown module-algebra theorem id: " + id);
  if (!in.ma) {
    TheoremReport rep{id, "", {}, {}, {}, seed};
    rep.refuse("inputs", "need a module algebra");
    return rep;
  }
  auto val = validate_module_algebra(*in.ma);
  if (!val.ok()) {
    TheoremReport rep{id, "", {}, {}, {}, seed};
    rep.refuse("module algebra axioms", val.violations.front().to_string());
    return rep;
  }
  if (id == "7.2") return detail::modalg_72(in, seed);
  if (id == "7.6") return detail::modalg_76(in, seed);
  return detail::modalg_77(in, seed);
}

}  // namespace hopfkit
