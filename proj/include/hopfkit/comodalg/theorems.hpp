#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "hopfkit/comodalg/hopf_module.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit {

inline Status verdict_status(Verdict v) {
  return v == Verdict::Yes ? Status::Pass : v == Verdict::No ? Status::Fail : Status::Inconclusive;
}

inline std::string fraction_string(size_t num, size_t den) {
  size_t g = std::gcd(num, den);
  if (g == 0) return "0";
  return den / g == 1 ? std::to_string(num / g) : std::to_string(num / g) + "/" + std::to_string(den / g);
}

template <class K>
std::vector<Module<K>> simple_right_modules(const AlgebraPtr<K>& a) {
  auto wd = wedderburn_data(*a);
  if (!wd->conclusive) throw InputError("Wedderburn data inconclusive: " + wd->note);
  std::vector<Module<K>> out;
  for (auto& b : wd->blocks) out.emplace_back(a, Side::Right, b.simple_dim, b.simple_action);
  return out;
}

// Ideals Q with A/Q simple, one per Wedderburn block.
template <class K>
std::vector<Subspace<K>> maximal_ideals(const Algebra<K>& a) {
  auto wd = wedderburn_data(a);
  if (!wd->conclusive) throw InputError("Wedderburn data inconclusive: " + wd->note);
  std::vector<Subspace<K>> out;
  for (auto& b : wd->blocks) out.push_back(b.max_ideal);
  return out;
}

template <class K>
struct FreenessCriterion {
  std::vector<std::string> r_q;  // dim(M/MQ) / dim(A/Q) per maximal ideal
  std::optional<size_t> free_at;  // first Q (lowest block index) where M/MQ is free over A/Q
  size_t argmax = 0;              // maximizer of r_Q, ties to the lowest index
};

// Over the simple Artinian ring A/Q a module is free iff its dimension is a multiple of dim A/Q.
template <class K>
FreenessCriterion<K> freeness_criterion(const Module<K>& m) {
  FreenessCriterion<K> res;
  const auto& A = m.algebra();
  auto qs = maximal_ideals(A);
  double best = -1;
  for (size_t i = 0; i < qs.size(); ++i) {
    size_t top = m.dim() - module_times(m, qs[i]).dim();
    size_t aq = A.dim() - qs[i].dim();
    res.r_q.push_back(fraction_string(top, aq));
    if (top % aq == 0 && !res.free_at) res.free_at = i;
    double r = double(top) / double(aq);
    if (r > best) {
      best = r;
      res.argmax = i;
    }
  }
  return res;
}

template <class K>
std::vector<HopfModule<K>> hopf_module_battery(const ComoduleAlgebraPtr<K>& ca, Side side, uint64_t seed,
                                               const std::vector<Module<K>>& extra = {}) {
  std::vector<HopfModule<K>> out;
  auto simples = simple_right_modules(ca->algebra_ptr());
  Side other = side == Side::Right ? Side::Left : Side::Right;
  auto oriented = [&](const Module<K>& v, Side s) { return v.side() == s ? v : dual_module(v); };
  out.push_back(regular_hopf_module(ca, side));
  for (size_t i = 0; i < simples.size(); ++i)
    out.push_back(induced_hopf_module(ca, oriented(simples[i], side), "V" + std::to_string(i) + " (x) H"));
  out.push_back(dual_hopf_module(regular_hopf_module(ca, other)));
  out.back().name = "A*";
  for (size_t i = 0; i < simples.size(); ++i) {
    auto ind = induced_hopf_module(ca, oriented(simples[i], other), "V" + std::to_string(i) + "' (x) H");
    out.push_back(dual_hopf_module(ind));
  }
  for (auto& v : extra) out.push_back(induced_hopf_module(ca, oriented(v, side), "U (x) H"));
  auto sum = hopf_module_sum(out[0], out[1]);
  out.push_back(sum);
  // Random Hopf sub-object of A + V0 (x) H and the matching quotient.
  Rng rng(seed);
  const auto& F = ca->field();
  for (size_t attempt = 0; attempt < 8; ++attempt) {
    Vec<K> v(sum.dim());
    for (auto& x : v) x = sample_scalar(F, rng, 3);
    if (rng.below(2)) {
      // sparse seeds hit smaller sub-objects more often
      for (size_t i = 0; i < v.size(); ++i)
        if (rng.below(3)) v[i] = F.zero();
    }
    if (is_zero_vec(v)) continue;
    auto s = hopf_submodule_closure(sum, {v});
    if (s.dim() == sum.dim()) continue;
    out.push_back(hopf_submodule(sum, s));
    out.push_back(hopf_quotient(sum, s));
    break;
  }
  return out;
}

template <class K>
void check_hopf_module_battery(TheoremReport& rep, const std::vector<HopfModule<K>>& battery, uint64_t seed,
                               bool require_free = false) {
  for (auto& m : battery) {
    std::string tag = std::string(side_name(m.side())) + " " + m.name;
    auto val = validate_hopf_module(m);
    rep.expect(tag + ": Hopf module axioms", val.ok(),
               val.ok() ? "" : val.violations.front().to_string());
    auto pr = is_projective(m.module);
    rep.add(tag + ": projective", verdict_status(pr.status), pr.note);
    auto fr = is_free(m.module, 60, seed);
    auto crit = freeness_criterion(m.module);
    std::string rq;
    for (auto& r : crit.r_q) rq += (rq.empty() ? "" : ",") + r;
    std::string detail = "dim " + std::to_string(m.dim()) + ", r_Q = [" + rq + "], is_free = " + verdict_name(fr.status);
    if (fr.status == Verdict::Unknown) {
      rep.add(tag + ": free iff some M/MQ free", Status::Inconclusive, detail + "; " + fr.note);
      continue;
    }
    bool lhs = fr.status == Verdict::Yes, rhs = crit.free_at.has_value();
    rep.expect(tag + ": free iff some M/MQ free", lhs == rhs, detail);
    if (require_free) rep.expect(tag + ": free", lhs, detail);
  }
}

template <class K>
struct ComodalgInputs {
  ComoduleAlgebraPtr<K> ca;
  AlgebraPtr<K> r;                    // the simple algebra R for "3.8"
  std::vector<Module<K>> modules;     // extra A-modules: battery extensions, V's for "5.4"
};

inline const std::vector<std::string>& comodalg_theorem_ids() {
  static const std::vector<std::string> ids{"3.5", "3.6", "3.7", "3.8", "4.2", "5.2", "5.3", "5.4"};
  return ids;
}

namespace detail {

inline const char* finiteness_line() {
  return "weak finiteness of A/Q (x) H: automatic, a finite-dimensional algebra is weakly finite";
}

template <class K>
bool require_h_simple(TheoremReport& rep, const ComoduleAlgebra<K>& ca, uint64_t seed) {
  auto hs = is_h_simple(ca, seed);
  if (hs.status == Simplicity::Simple) {
    rep.hypothesis("A is H-simple: " + hs.certificate);
    return true;
  }
  if (hs.status == Simplicity::NotSimple)
    rep.refuse("H-simplicity", "proper costable ideal of dimension " + std::to_string(hs.witness.dim()) + " (" +
                                   hs.certificate + ")");
  else
    rep.add("hypothesis: H-simplicity", Status::Inconclusive, hs.certificate);
  return false;
}

// A maximal ideal containing no nonzero costable ideal, lowest block index first.
template <class K>
std::optional<size_t> clean_maximal_ideal(const ComoduleAlgebra<K>& ca, const std::vector<Subspace<K>>& qs) {
  for (size_t i = 0; i < qs.size(); ++i)
    if (largest_costable_inside(ca, qs[i]).ideal.is_zero()) return i;
  return std::nullopt;
}

template <class K>
std::optional<size_t> skew_field_quotient(const Algebra<K>& a) {
  auto wd = wedderburn_data(a);
  for (size_t i = 0; i < wd->blocks.size(); ++i)
    if (a.dim() - wd->blocks[i].max_ideal.dim() == wd->blocks[i].division_dim) return i;
  return std::nullopt;
}

}  // namespace detail

template <class K>
TheoremReport verify_comodalg_theorem(const std::string& id, const ComodalgInputs<K>& in, uint64_t seed = 0) {
  TheoremReport rep;
  rep.id = id;
  rep.seed = seed;
  if (!in.ca) throw InputError("verify: a comodule algebra is required");
  const auto& ca = *in.ca;
  const auto& A = ca.algebra();
  auto val = validate_comodule_algebra(ca);
  if (!val.ok()) {
    rep.refuse("comodule algebra axioms", val.violations.front().to_string());
    return rep;
  }
  rep.hypothesis("A is semilocal: finite-dimensional");

  if (id == "3.5") {
    rep.statement = "every battery object of M_A^H is projective; free iff M/MQ is free over A/Q for some maximal Q";
    rep.hypothesis(detail::finiteness_line());
    if (!detail::require_h_simple(rep, ca, seed)) return rep;
    check_hopf_module_battery(rep, hopf_module_battery(in.ca, Side::Right, seed, in.modules), seed);
  } else if (id == "3.6") {
    rep.statement = "with a skew field quotient A/Q: objects of M_A^H are free, A is a simple object, A^H is a skew field";
    rep.hypothesis(detail::finiteness_line());
    if (!detail::require_h_simple(rep, ca, seed)) return rep;
    auto q = detail::skew_field_quotient(A);
    if (!q) {
      rep.refuse("skew field quotient", "no maximal ideal Q with A/Q a division algebra");
      return rep;
    }
    rep.hypothesis("A/Q is a division algebra for block " + std::to_string(*q));
    check_hopf_module_battery(rep, hopf_module_battery(in.ca, Side::Right, seed, in.modules), seed, true);
    auto ops = right_mult_ops(A);
    ops.insert(ops.end(), ca.coefficients().begin(), ca.coefficients().end());
    auto simp = operator_simplicity(A.dim(), ops, A.field(), seed);
    rep.add("A is a simple object of M_A^H",
            simp.status == Simplicity::Simple ? Status::Pass
            : simp.status == Simplicity::NotSimple ? Status::Fail
                                                   : Status::Inconclusive,
            simp.certificate);
    auto inv = invariants_subalgebra(ca);
    auto div = check_division_algebra(inv.algebra, seed);
    rep.add("A^H is a skew field",
            div.status == DivisionStatus::Division ? Status::Pass
            : div.status == DivisionStatus::ZeroDivisor ? Status::Fail
                                                        : Status::Inconclusive,
            "dim A^H = " + std::to_string(inv.algebra.dim()) + (div.note.empty() ? "" : "; " + div.note));
  } else if (id == "3.7") {
    rep.statement = "a maximal ideal without nonzero costable ideals forces H-simplicity";
    rep.hypothesis(detail::finiteness_line());
    rep.hypothesis("a minimal nonzero costable ideal exists and is finitely generated: A is finite-dimensional");
    auto qs = maximal_ideals(A);
    auto p = detail::clean_maximal_ideal(ca, qs);
    if (!p) {
      rep.refuse("clean maximal ideal", "every maximal ideal contains a nonzero costable ideal");
      return rep;
    }
    rep.hypothesis("maximal ideal " + std::to_string(*p) + " contains no nonzero costable ideal");
    auto hs = is_h_simple(ca, seed);
    rep.add("A is H-simple",
            hs.status == Simplicity::Simple ? Status::Pass
            : hs.status == Simplicity::NotSimple ? Status::Fail
                                                 : Status::Inconclusive,
            hs.certificate);
  } else if (id == "3.8") {
    rep.statement = "R (x) A is H-simple for simple R and H-simple A with a central simple quotient";
    auto R = in.r ? in.r : share(matrix_algebra<K>(2, A.field()));
    auto rw = wedderburn_data(*R);
    if (!rw->conclusive || !rw->radical.is_zero() || rw->blocks.size() != 1) {
      rep.refuse("R simple", "R is not a simple algebra");
      return rep;
    }
    rep.hypothesis("R is simple of dimension " + std::to_string(R->dim()));
    rep.hypothesis(detail::finiteness_line());
    if (!detail::require_h_simple(rep, ca, seed)) return rep;
    std::optional<size_t> central;
    auto qs = maximal_ideals(A);
    for (size_t i = 0; i < qs.size() && !central; ++i)
      if (center(quotient_algebra(A, qs[i]).algebra).dim() == 1) central = i;
    if (!central) {
      rep.refuse("central simple quotient", "no A/P is central simple");
      return rep;
    }
    rep.hypothesis("A/P is central simple for block " + std::to_string(*central));
    auto ra = tensor_with_algebra(R, ca);
    auto v = validate_comodule_algebra(ra);
    rep.expect("R (x) A is a comodule algebra", v.ok());
    auto hs = is_h_simple(ra, seed);
    rep.add("R (x) A is H-simple",
            hs.status == Simplicity::Simple ? Status::Pass
            : hs.status == Simplicity::NotSimple ? Status::Fail
                                                 : Status::Inconclusive,
            hs.certificate);
  } else if (id == "4.2") {
    rep.statement = "A is Frobenius; objects of M_A^H and _A M^H are projective with the freeness criterion";
    rep.hypothesis(detail::finiteness_line());
    if (!detail::require_h_simple(rep, ca, seed)) return rep;
    auto fr = is_frobenius(ca.algebra_ptr(), seed);
    rep.add("A is Frobenius", verdict_status(fr.status), fr.note);
    check_hopf_module_battery(rep, hopf_module_battery(in.ca, Side::Right, seed, in.modules), seed);
    check_hopf_module_battery(rep, hopf_module_battery(in.ca, Side::Left, seed, in.modules), seed);
  } else if (id == "5.2") {
    rep.statement = "a clean maximal ideal makes A H-simple and quasi-Frobenius, and semisimple when H is";
    rep.hypothesis("A is right Noetherian and A/P is Artinian: finite-dimensional");
    auto qs = maximal_ideals(A);
    auto p = detail::clean_maximal_ideal(ca, qs);
    if (!p) {
      rep.refuse("clean maximal ideal", "every maximal ideal contains a nonzero costable ideal");
      return rep;
    }
    rep.hypothesis("maximal ideal " + std::to_string(*p) + " contains no nonzero costable ideal");
    auto hs = is_h_simple(ca, seed);
    rep.add("A is H-simple",
            hs.status == Simplicity::Simple ? Status::Pass
            : hs.status == Simplicity::NotSimple ? Status::Fail
                                                 : Status::Inconclusive,
            hs.certificate);
    auto qf = is_quasi_frobenius(ca.algebra_ptr());
    rep.add("A is quasi-Frobenius", verdict_status(qf.status), qf.note);
    const auto& hrad = radical_of(ca.hopf().algebra());
    if (!hrad->conclusive) {
      rep.add("semisimplicity of H", Status::Inconclusive, hrad->note);
    } else if (hrad->ideal.is_zero()) {
      auto arad = radical_of(A);
      rep.add("H semisimple implies A semisimple",
              !arad->conclusive ? Status::Inconclusive : arad->ideal.is_zero() ? Status::Pass : Status::Fail,
              "dim rad A = " + std::to_string(arad->ideal.dim()));
    } else {
      rep.add("H semisimple implies A semisimple", Status::Pass, "not applicable: H is not semisimple");
    }
  } else if (id == "5.3") {
    rep.statement = "for semisimple H the intersection J of the maximal ideals is costable";
    auto hrad = radical_of(ca.hopf().algebra());
    if (!hrad->conclusive || !hrad->ideal.is_zero()) {
      rep.refuse("H semisimple", hrad->conclusive ? "H has a nonzero radical" : hrad->note);
      return rep;
    }
    rep.hypothesis("H is semisimple");
    rep.hypothesis("every A/P is Artinian: finite-dimensional");
    auto qs = maximal_ideals(A);
    Subspace<K> J = Subspace<K>::full(A.dim(), A.field()), meet = J;
    for (auto& q : qs) {
      J = J.intersect(q, A.field());
      meet = meet.intersect(largest_costable_inside(ca, q).ideal, A.field());
    }
    rep.expect("J is costable", is_costable(ca, J), "dim J = " + std::to_string(J.dim()));
    rep.expect("J equals the intersection of the largest costable ideals inside each P", J == meet);
  } else if (id == "5.4") {
    rep.statement = "(dim D)(dim A) divides (dim V)(dim W)(dim H) for simple W with D = End W";
    if (!detail::require_h_simple(rep, ca, seed)) return rep;
    auto wd = wedderburn_data(A);
    auto simples = simple_right_modules(ca.algebra_ptr());
    std::vector<Module<K>> vs{regular_module(ca.algebra_ptr(), Side::Right)};
    vs.insert(vs.end(), simples.begin(), simples.end());
    vs.insert(vs.end(), in.modules.begin(), in.modules.end());
    size_t dh = ca.hopf().dim();
    for (size_t v = 0; v < vs.size(); ++v)
      for (size_t w = 0; w < simples.size(); ++w) {
        size_t dd = wd->blocks[w].division_dim, dv = vs[v].dim(), dw = simples[w].dim();
        size_t lhs = dd * A.dim(), rhs = dv * dw * dh;
        rep.expect("divisibility V" + std::to_string(v) + " W" + std::to_string(w), rhs % lhs == 0,
                   "dim D=" + std::to_string(dd) + " dim A=" + std::to_string(A.dim()) + " dim V=" +
                       std::to_string(dv) + " dim W=" + std::to_string(dw) + " dim H=" + std::to_string(dh) + ": " +
                       std::to_string(lhs) + " | " + std::to_string(rhs));
      }
  } else {
    throw InputError("unknown comodule-algebra theorem id '" + id + "'");
  }
  return rep;
}

}  // namespace hopfkit
