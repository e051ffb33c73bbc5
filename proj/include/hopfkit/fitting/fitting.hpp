#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfkit/comodalg/theorems.hpp"
#include "hopfkit/report.hpp"

namespace hopfkit {

inline constexpr size_t kMaxMinorSize = 6;

// A^n -> M sending the i-th free generator to gens[i]. relations are A-module
// generators of the kernel, each in A^n with coordinate (i, j) at i * dim A + j.
template <class K>
struct Presentation {
  std::vector<Vec<K>> gens;
  Matrix<K> surjection;
  Subspace<K> kernel;
  std::vector<Vec<K>> relations;
};

template <class K>
struct FittingLedger {
  Module<K> module;
  Presentation<K> presentation;
  std::vector<Subspace<K>> ideals;  // ideals[i + 1] = Fitt_i for i = -1..n
  bool presentation_checked = false;  // recomputed from n + 1 generators and compared

  size_t n() const { return presentation.gens.size(); }
  Subspace<K> fitt(long i) const {
    size_t d = module.algebra().dim();
    if (i < -1) return Subspace<K>::zero(d);
    if (i >= long(n())) return Subspace<K>::full(d, module.field());
    return ideals[size_t(i + 1)];
  }
};

namespace detail {

inline std::vector<std::vector<size_t>> subsets(size_t n, size_t k) {
  std::vector<std::vector<size_t>> out;
  std::vector<size_t> cur;
  auto rec = [&](auto&& self, size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (size_t i = start; i + (k - cur.size()) <= n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

// Laplace expansion along the first row; entries live in the commutative algebra a.
template <class K>
Vec<K> det_over(const Algebra<K>& a, const std::vector<std::vector<Vec<K>>>& m) {
  size_t s = m.size();
  if (s == 0) return a.unit();
  if (s == 1) return m[0][0];
  Vec<K> out(a.dim());
  for (size_t c = 0; c < s; ++c) {
    if (is_zero_vec(m[0][c])) continue;
    std::vector<std::vector<Vec<K>>> minor;
    for (size_t r = 1; r < s; ++r) {
      std::vector<Vec<K>> row;
      for (size_t k = 0; k < s; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    Vec<K> term = a.multiply(m[0][c], det_over(a, minor));
    if (c % 2) {
      for (size_t t = 0; t < out.size(); ++t) out[t] -= term[t];
    } else {
      for (size_t t = 0; t < out.size(); ++t) out[t] += term[t];
    }
  }
  return out;
}

template <class K>
void require_commutative(const Module<K>& m) {
  if (!m.algebra().is_commutative()) throw InputError("Fitting ideals need a commutative algebra");
}

}  // namespace detail

// Fewest generators: max over blocks b of the rank of M e_b / M e_b rad over A / Q_b.
// Per block, greedy picks from M e_b; the i-th generator sums the i-th pick of every block.
template <class K>
std::vector<Vec<K>> minimal_generators(const Module<K>& m_in) {
  std::vector<Vec<K>> gens;
  if (m_in.dim() == 0) return gens;
  Module<K> m = m_in.as_right();
  const auto& A = m.algebra();
  auto top = module_top(m);
  auto wd = wedderburn_data(A);
  if (!wd->conclusive) {
    for (size_t j : top.mJ.nonpivots()) gens.push_back(unit_vec<K>(m.dim(), j, m.field()));
    return gens;
  }
  std::vector<std::vector<Vec<K>>> picks;
  for (auto& blk : wd->blocks) {
    auto lift = solve_affine(wd->projection, blk.central_idempotent);
    if (!lift) throw std::logic_error("minimal_generators: idempotent does not lift");
    Vec<K> e = *lift;
    // e <- 3e^2 - 2e^3 converges to an idempotent since the radical is nilpotent.
    for (Vec<K> e2 = A.multiply(e, e); e2 != e; e2 = A.multiply(e, e)) {
      Vec<K> e3 = A.multiply(e2, e);
      for (size_t t = 0; t < e.size(); ++t) e[t] = m.field().from_int(3) * e2[t] - m.field().from_int(2) * e3[t];
    }
    auto mb = image(m.action(e));
    auto cur = top.mJ;
    std::vector<Vec<K>> picked;
    for (auto& v : mb.basis_vectors()) {
      if (cur.contains(v)) continue;
      picked.push_back(v);
      cur = cur + submodule_closure(m, {v});
    }
    picks.push_back(std::move(picked));
  }
  size_t n = 0;
  for (auto& p : picks) n = std::max(n, p.size());
  for (size_t i = 0; i < n; ++i) {
    Vec<K> g(m.dim());
    for (auto& p : picks)
      if (i < p.size())
        for (size_t t = 0; t < g.size(); ++t) g[t] += p[i][t];
    gens.push_back(g);
  }
  return gens;
}

template <class K>
Presentation<K> present(const Module<K>& m, std::vector<Vec<K>> gens) {
  detail::require_commutative(m);
  Module<K> r = m.as_right();
  Presentation<K> p;
  p.gens = std::move(gens);
  p.surjection = basis_map(r, p.gens);
  if (rank(p.surjection) != m.dim()) throw InputError("present: the elements do not generate the module");
  p.kernel = linear_kernel(p.surjection, m.field());
  // Greedy A-generators of the kernel.
  auto fr = free_module(r.algebra_ptr(), Side::Right, p.gens.size());
  auto span = Subspace<K>::zero(fr.dim());
  for (auto& v : p.kernel.basis_vectors()) {
    if (span.contains(v)) continue;
    p.relations.push_back(v);
    span = submodule_closure(fr, p.relations);
  }
  return p;
}

// Ideal generated by the s x s minors of the n x (#relations) matrix over A, s = n - i.
template <class K>
Subspace<K> fitting_from_presentation(const Algebra<K>& a, const Presentation<K>& p, long i) {
  size_t n = p.gens.size(), d = a.dim();
  if (i < 0) return Subspace<K>::zero(d);
  if (size_t(i) >= n) return Subspace<K>::full(d, a.field());
  size_t s = n - size_t(i);
  if (s > kMaxMinorSize)
    throw InputError("fitting_ideal: minors of size " + std::to_string(s) + " exceed the cap of " +
                     std::to_string(kMaxMinorSize));
  size_t m = p.relations.size();
  if (m < s) return Subspace<K>::zero(d);
  auto entry = [&](size_t row, size_t col) {
    const auto& z = p.relations[col];
    return Vec<K>(z.begin() + row * d, z.begin() + (row + 1) * d);
  };
  std::vector<Vec<K>> dets;
  auto ideal = Subspace<K>::zero(d);
  auto rows = detail::subsets(n, s);
  auto cols = detail::subsets(m, s);
  for (auto& rs : rows)
    for (auto& cs : cols) {
      std::vector<std::vector<Vec<K>>> mat(s);
      for (size_t a_ = 0; a_ < s; ++a_)
        for (size_t b = 0; b < s; ++b) mat[a_].push_back(entry(rs[a_], cs[b]));
      auto v = detail::det_over(a, mat);
      if (is_zero_vec(v) || ideal.contains(v)) continue;
      dets.push_back(v);
      ideal = ideal_closure(a, dets);
      if (ideal.is_full()) return ideal;
    }
  return ideal;
}

template <class K>
FittingLedger<K> fitting_ledger(const Module<K>& m, const std::vector<Vec<K>>& gens) {
  detail::require_commutative(m);
  const auto& A = m.algebra();
  FittingLedger<K> led{m, present(m, gens), {}, false};
  size_t n = led.n();
  for (long i = -1; i <= long(n); ++i) {
    if (i >= 0 && n - size_t(i) > kMaxMinorSize) {
      led.ideals.push_back(Subspace<K>::zero(A.dim()));  // placeholder, filled below if reachable
      continue;
    }
    led.ideals.push_back(fitting_from_presentation(A, led.presentation, i));
  }
  if (n > kMaxMinorSize)
    throw InputError("fitting_ledger: " + std::to_string(n) + " generators need minors beyond the cap");
  if (n > 0 && n + 1 <= kMaxMinorSize) {
    auto g2 = led.presentation.gens;
    Vec<K> extra(m.dim());
    for (auto& g : g2)
      for (size_t t = 0; t < extra.size(); ++t) extra[t] += g[t];
    g2.push_back(extra);
    auto p2 = present(m, g2);
    for (long i = -1; i <= long(n); ++i)
      if (fitting_from_presentation(A, p2, i) != led.fitt(i))
        throw std::logic_error("Fitting ideal " + std::to_string(i) + " depends on the presentation");
    led.presentation_checked = true;
  }
  return led;
}

template <class K>
FittingLedger<K> fitting_ledger(const Module<K>& m) {
  detail::require_commutative(m);
  return fitting_ledger(m, minimal_generators(m));
}

template <class K>
Subspace<K> fitting_ideal(const Module<K>& m, long i) {
  detail::require_commutative(m);
  if (i < 0) return Subspace<K>::zero(m.algebra().dim());
  return fitting_from_presentation(m.algebra(), present(m, minimal_generators(m)), i);
}

// B (x)_A M = M / M I as a module over B = A / I.
template <class K>
Module<K> base_change(const Module<K>& m, const Subspace<K>& ideal, const AlgebraPtr<K>& b) {
  auto q = quotient_module(m, module_times(m, ideal));
  auto np = ideal.nonpivots();
  std::vector<Matrix<K>> act;
  for (size_t t = 0; t < np.size(); ++t) act.push_back(q.module.action_basis(np[t]));
  return Module<K>(b, m.side(), q.module.dim(), std::move(act));
}

template <class K>
struct FittingInputs {
  std::vector<Module<K>> modules;            // F1, F2
  std::vector<Subspace<K>> base_changes;     // F1: ideals I with B = A / I
  std::optional<HopfModule<K>> hopf_module;  // P1.1, C1.6
  size_t free_trials = 60;
};

inline const std::vector<std::string>& fitting_property_ids() {
  static const std::vector<std::string> ids = {"F1", "F2", "P1.1", "C1.6"};
  return ids;
}

namespace detail {

template <class K>
std::string ideal_dims(const FittingLedger<K>& led) {
  std::string s;
  for (long i = -1; i <= long(led.n()); ++i)
    s += (s.empty() ? "" : " ") + std::to_string(led.fitt(i).dim());
  return "dims Fitt_-1..Fitt_n: " + s;
}

// r with Fitt_{r-1} = 0 and Fitt_r = A, if any.
template <class K>
std::optional<size_t> constant_rank_from_fitting(const FittingLedger<K>& led) {
  for (size_t r = 0; r <= led.n(); ++r)
    if (led.fitt(long(r)).is_full() && led.fitt(long(r) - 1).is_zero()) return r;
  return std::nullopt;
}

template <class K>
bool hopf_hypotheses(TheoremReport& rep, const std::optional<HopfModule<K>>& hm) {
  if (!hm) {
    rep.refuse("inputs", "needs a Hopf module");
    return false;
  }
  const auto& ca = *hm->ca;
  if (!ca.hopf().algebra().is_commutative()) {
    rep.refuse("H commutative", "H = " + ca.hopf().name() + " is not commutative");
    return false;
  }
  if (!ca.algebra().is_commutative()) {
    rep.refuse("A commutative", "the comodule algebra is not commutative");
    return false;
  }
  if (hm->side() != Side::Right) {
    rep.refuse("right Hopf module", "expects an object of M_A^H");
    return false;
  }
  auto v = validate_hopf_module(*hm);
  if (!v.ok()) {
    rep.refuse("Hopf module axioms", v.violations.front().axiom);
    return false;
  }
  rep.hypothesis("H and A commutative, M satisfies the Hopf module axioms");
  return true;
}

}  // namespace detail

template <class K>
TheoremReport verify_fitting_property(const std::string& id, const FittingInputs<K>& in, uint64_t seed = 0) {
  TheoremReport rep;
  rep.id = id;
  rep.seed = seed;
  if (id == "F1") {
    rep.statement = "Fitt_i(B (x) M) = Fitt_i(M) B for quotient algebras B = A/I";
    if (in.modules.empty() || in.base_changes.empty()) {
      rep.refuse("inputs", "needs modules and base-change ideals");
      return rep;
    }
    for (size_t mi = 0; mi < in.modules.size(); ++mi) {
      const auto& m = in.modules[mi];
      auto led = fitting_ledger(m);
      for (size_t bi = 0; bi < in.base_changes.size(); ++bi) {
        auto qa = quotient_algebra(m.algebra(), in.base_changes[bi]);
        auto b = share(std::move(qa.algebra));
        auto bm = base_change(m, in.base_changes[bi], b);
        auto ledb = fitting_ledger(bm);
        long top = long(std::max(led.n(), ledb.n()));
        bool ok = true;
        std::string bad;
        for (long i = -1; i <= top && ok; ++i) {
          std::vector<Vec<K>> imgs;
          for (auto& v : led.fitt(i).basis_vectors()) imgs.push_back(qa.projection.apply(v));
          auto expect = imgs.empty() ? Subspace<K>::zero(b->dim()) : Subspace<K>::span(b->dim(), imgs);
          if (expect != ledb.fitt(i)) {
            ok = false;
            bad = "i = " + std::to_string(i) + ": dim " + std::to_string(ledb.fitt(i).dim()) + " vs " +
                  std::to_string(expect.dim());
          }
        }
        rep.expect("module " + std::to_string(mi) + ", B" + std::to_string(bi) + ": base change",
                   ok, ok ? detail::ideal_dims(ledb) : bad);
      }
    }
    return rep;
  }
  if (id == "F2") {
    rep.statement = "M projective of constant rank r iff Fitt_r = A and Fitt_{r-1} = 0";
    if (in.modules.empty()) {
      rep.refuse("inputs", "needs modules");
      return rep;
    }
    for (size_t mi = 0; mi < in.modules.size(); ++mi) {
      const auto& m = in.modules[mi];
      auto led = fitting_ledger(m);
      auto r = detail::constant_rank_from_fitting(led);
      // Over a finite-dimensional commutative algebra projective of constant rank means free.
      auto fr = is_free(m, in.free_trials, seed + mi);
      auto pr = is_projective(m);
      std::string name = "module " + std::to_string(mi);
      std::string det = detail::ideal_dims(led) + "; is_free " + verdict_name(fr.status) + ", is_projective " +
                        verdict_name(pr.status);
      if (fr.status == Verdict::Unknown || pr.status == Verdict::Unknown) {
        rep.add(name, Status::Inconclusive, det);
        continue;
      }
      bool agree = r ? (fr.status == Verdict::Yes && fr.rank == *r && pr.status == Verdict::Yes)
                     : fr.status == Verdict::No;
      rep.expect(name, agree, det + (r ? "; Fitting rank " + std::to_string(*r) : "; no Fitting rank"));
    }
    return rep;
  }
  if (id == "P1.1") {
    rep.statement = "every Fitting ideal of a Hopf module is costable";
    if (!detail::hopf_hypotheses(rep, in.hopf_module)) return rep;
    const auto& hm = *in.hopf_module;
    auto led = fitting_ledger(hm.module);
    for (long i = 0; i < long(led.n()); ++i)
      rep.expect("Fitt_" + std::to_string(i) + " costable", is_costable(*hm.ca, led.fitt(i)),
                 "dim " + std::to_string(led.fitt(i).dim()));
    if (led.n() == 0) rep.expect("zero module", true, "all Fitting ideals are A");
    return rep;
  }
  if (id == "C1.6") {
    rep.statement = "no proper nonzero costable ideals implies M projective";
    if (!detail::hopf_hypotheses(rep, in.hopf_module)) return rep;
    const auto& hm = *in.hopf_module;
    auto hs = is_h_simple(*hm.ca, seed);
    if (hs.status == Simplicity::Inconclusive) {
      rep.add("H-simplicity", Status::Inconclusive, hs.certificate);
      return rep;
    }
    if (hs.status != Simplicity::Simple) {
      rep.refuse("H-simplicity", "costable ideal of dimension " + std::to_string(hs.witness.dim()));
      return rep;
    }
    rep.hypothesis("A has no proper nonzero costable ideals: " + hs.certificate);
    auto led = fitting_ledger(hm.module);
    auto r = detail::constant_rank_from_fitting(led);
    rep.expect("Fitting ideals are 0 or A", r.has_value(), detail::ideal_dims(led));
    auto pr = is_projective(hm.module);
    rep.add("M projective", verdict_status(pr.status), pr.note);
    return rep;
  }
  throw InputError("unknown Fitting property id " + id);
}

}  // namespace hopfkit
