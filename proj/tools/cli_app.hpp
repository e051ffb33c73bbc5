#pragma once

// Command-line front end; kept in a header so the unit tests can run it in-process.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hopfkit/coideal.hpp"
#include "hopfkit/comodalg.hpp"
#include "hopfkit/fitting.hpp"
#include "hopfkit/hopf/ni89b.hpp"
#include "hopfkit/io/presentation.hpp"
#include "hopfkit/io/report_io.hpp"
#include "hopfkit/modalg.hpp"

namespace hopfkit::cli {

using io::json;
using io::ParseError;

// Raised when an input parses but fails its validator (exit code 2).
class ValidationFailure : public std::runtime_error {
 public:
  ValidationFailure(std::string what, io::ReportDoc doc) : std::runtime_error(std::move(what)), doc(std::move(doc)) {}
  io::ReportDoc doc;
};

struct Options {
  std::string command;
  std::vector<std::string> args;  // positional
  std::string theorem;
  std::string hopf, span, comodalg, modalg, coalgebra, algebra, hopf_module, seeds;
  std::vector<std::string> modules, ideals;
  long fitt_i = 0;
  bool has_i = false;
  uint64_t seed = 0;
  size_t trials = 0;  // 0: driver default
  size_t n = 2;
  std::string format = "json";
  std::string field = "Q";
  std::string output;
  std::vector<std::string> argv;  // echo, without the program name
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline bool is_builtin(const std::string& ref) { return ref.rfind("builtin:", 0) == 0; }

// Field of a file reference, or nullopt for builtins.
inline std::optional<io::FieldSpec> field_of_ref(const std::string& ref) {
  if (ref.empty() || is_builtin(ref)) return std::nullopt;
  auto text = read_file(ref);
  return io::presentation_field(io::parse_json(text));
}

template <class K>
io::Structure<K> load(const std::string& ref, const FieldOf<K>& F) {
  if (ref.empty()) throw ParseError(0, "missing input");
  if (is_builtin(ref)) {
    try {
      return io::resolve_builtin<K>(ref.substr(8), F);
    } catch (const InputError& e) {
      throw ParseError(0, e.what());
    }
  }
  auto text = read_file(ref);
  try {
    return io::parse_presentation<K>(text, F);
  } catch (const ParseError& e) {
    throw ParseError(e.line(), ref + ": " + e.reason());
  }
}

// Comma separated items; each is "[c0,c1,...]" or a combination like "2*g - x + 1/2*gx" of basis labels.
template <class K>
std::vector<Vec<K>> parse_vectors(const std::string& spec, const std::vector<std::string>& labels, const FieldOf<K>& F) {
  std::vector<std::string> items;
  std::string cur;
  int depth = 0;
  for (char c : spec) {
    if (c == '[') ++depth;
    if (c == ']') --depth;
    if ((c == ',' || c == ';') && depth == 0) {
      items.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  items.push_back(cur);
  size_t n = labels.size();
  std::vector<Vec<K>> out;
  for (auto item : items) {
    std::string s;
    for (char c : item)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) continue;
    Vec<K> v(n);
    if (s.front() == '[') {
      if (s.back() != ']') throw ParseError(0, "unterminated vector '" + item + "'");
      std::stringstream ss(s.substr(1, s.size() - 2));
      std::string x;
      size_t i = 0;
      while (std::getline(ss, x, ',')) {
        auto c = F.parse(x);
        if (!c || i >= n) throw ParseError(0, "bad vector '" + item + "'");
        v[i++] = *c;
      }
      if (i != n) throw ParseError(0, "vector '" + item + "' needs " + std::to_string(n) + " entries");
      out.push_back(v);
      continue;
    }
    size_t pos = 0;
    while (pos < s.size()) {
      K sign = F.one();
      if (s[pos] == '+' || s[pos] == '-') {
        if (s[pos] == '-') sign = F.from_int(-1);
        ++pos;
      }
      K coeff = F.one();
      auto star = s.find('*', pos);
      auto next_sign = s.find_first_of("+-", pos);
      if (star != std::string::npos && (next_sign == std::string::npos || star < next_sign)) {
        auto c = F.parse(s.substr(pos, star - pos));
        if (!c) throw ParseError(0, "bad coefficient in '" + item + "'");
        coeff = *c;
        pos = star + 1;
      }
      size_t best = n, best_len = 0;
      for (size_t i = 0; i < n; ++i)
        if (labels[i].size() > best_len && s.compare(pos, labels[i].size(), labels[i]) == 0) {
          best = i;
          best_len = labels[i].size();
        }
      if (best == n) throw ParseError(0, "unknown basis label at '" + s.substr(pos) + "'");
      v[best] += sign * coeff;
      pos += best_len;
    }
    out.push_back(v);
  }
  return out;
}

template <class K>
json vector_json(const FieldOf<K>& F, const Vec<K>& v) {
  return io::detail::dense_json(F, v);
}

template <class K>
json subspace_json(const Subspace<K>& s, const FieldOf<K>& F) {
  json out = json::array();
  for (auto& v : s.basis_vectors()) out.push_back(vector_json(F, v));
  return out;
}

template <class K>
void require_valid(const io::Structure<K>& s, const std::string& ref, io::ReportDoc doc) {
  auto val = io::validate_structure(s);
  if (val.ok()) return;
  TheoremReport rep{"validate", "input " + ref + " (" + s.kind + ")", {}, {}, {}, doc.seed};
  std::vector<std::string> w;
  for (size_t i = 0; i < val.violations.size() && i < 20; ++i) w.push_back(val.violations[i].to_string());
  rep.add(s.kind + " axioms", Status::Fail, std::to_string(val.violations.size()) + " violation(s)", w);
  doc.reports.push_back(rep);
  throw ValidationFailure(ref + " fails validation: " + val.violations.front().to_string(), doc);
}

template <class K>
const Module<K>& need_module(const io::Structure<K>& s, const std::string& ref) {
  if (!s.module) throw ParseError(0, ref + ": expected a module, found " + s.kind);
  return *s.module;
}

template <class K>
AlgebraPtr<K> need_algebra(const io::Structure<K>& s, const std::string& ref) {
  if (!s.algebra) throw ParseError(0, ref + ": expected an algebra, found " + s.kind);
  return s.algebra;
}

inline Status verdict_to_status(Verdict v) { return v == Verdict::Unknown ? Status::Inconclusive : Status::Pass; }

template <class K>
class Runner {
 public:
  Runner(const Options& o, const FieldOf<K>& F) : o_(o), F_(F) {
    doc_.command = o.argv;
    doc_.seed = o.seed;
    doc_.field = F.name();
  }

  io::ReportDoc run() {
    const auto& c = o_.command;
    if (c == "validate") validate();
    else if (c == "radical") radical();
    else if (c == "wedderburn") wedderburn();
    else if (c == "free" || c == "projective") module_query();
    else if (c == "frobenius") frobenius();
    else if (c == "qf") qf();
    else if (c == "hsimple") hsimple();
    else if (c == "costable-closure") costable();
    else if (c == "fitting") fitting();
    else if (c == "coideal") coideal();
    else if (c == "verify") verify();
    else if (c == "ni89b") ni89b();
    else if (c == "catalog") catalog();
    else throw ParseError(0, "unknown command " + c);
    return doc_;
  }

 private:
  const Options& o_;
  FieldOf<K> F_;
  io::ReportDoc doc_;

  std::string arg(size_t i) const {
    if (i >= o_.args.size()) throw ParseError(0, o_.command + ": missing input argument");
    return o_.args[i];
  }

  io::Structure<K> input(const std::string& ref) {
    auto s = load<K>(ref, F_);
    require_valid(s, ref, doc_);
    return s;
  }

  TheoremReport& report(std::string id, std::string statement) {
    doc_.reports.push_back(TheoremReport{std::move(id), std::move(statement), {}, {}, {}, o_.seed});
    return doc_.reports.back();
  }

  json witness_input(const io::Structure<K>& s) { return io::presentation_document(s, F_); }

  void validate() {
    auto ref = arg(0);
    auto s = load<K>(ref, F_);
    auto val = io::validate_structure(s, o_.seed);
    doc_.witnesses.push_back({{"kind", "validation"}, {"input", witness_input(s)}, {"ok", val.ok()}});
    doc_.results["kind"] = s.kind;
    if (!val.ok()) require_valid(s, ref, doc_);
    report("validate", "input " + ref + " (" + s.kind + ")").expect(s.kind + " axioms", true, "no violations");
  }

  void radical() {
    auto a = need_algebra(input(arg(0)), arg(0));
    auto r = radical_of(*a);
    auto& rep = report("radical", "Jacobson radical");
    if (!r->conclusive) {
      rep.add("radical", Status::Inconclusive, r->note);
      return;
    }
    rep.expect("radical", true, "dim J = " + std::to_string(r->ideal.dim()) + " of " + std::to_string(a->dim()));
    doc_.results["dim"] = r->ideal.dim();
    json basis = json::array();
    for (auto& v : r->ideal.basis_vectors()) basis.push_back(a->format_vector(v));
    doc_.results["basis"] = basis;
  }

  void wedderburn() {
    auto a = need_algebra(input(arg(0)), arg(0));
    auto wd = wedderburn_data(*a);
    auto& rep = report("wedderburn", "Wedderburn data of A/J");
    if (!wd->conclusive) {
      rep.add("wedderburn", Status::Inconclusive, wd->note);
      return;
    }
    json blocks = json::array();
    for (auto& b : wd->blocks)
      blocks.push_back({{"simple_dim", b.simple_dim}, {"multiplicity", b.multiplicity}, {"division_dim", b.division_dim},
                        {"block_dim", b.block_span.dim()}});
    doc_.results = {{"radical_dim", wd->radical.dim()}, {"blocks", blocks}};
    rep.expect("wedderburn", true,
               "dim J = " + std::to_string(wd->radical.dim()) + ", " + std::to_string(wd->blocks.size()) + " block(s)");
  }

  // "free M [over A]" and "projective M [over A]"
  void module_query() {
    auto ms = input(arg(0));
    Module<K> m = need_module(ms, arg(0));
    if (o_.args.size() >= 3 && o_.args[1] == "over") {
      auto a = need_algebra(input(o_.args[2]), o_.args[2]);
      if (!same_algebra_data(*a, m.algebra())) throw ParseError(0, arg(0) + " is not a module over " + o_.args[2]);
    } else if (o_.args.size() > 1) {
      throw ParseError(0, "usage: " + o_.command + " <module> [over <algebra>]");
    }
    if (o_.command == "free") {
      auto fr = is_free(m, o_.trials ? o_.trials : 60, o_.seed);
      auto& rep = report("free", "is M a free A-module");
      rep.add("is_free", verdict_to_status(fr.status),
              std::string("verdict ") + verdict_name(fr.status) +
                  (fr.status == Verdict::Yes ? ", rank " + std::to_string(fr.rank) : "") +
                  (fr.note.empty() ? "" : "; " + fr.note));
      doc_.results = {{"verdict", verdict_name(fr.status)}, {"rank", fr.rank}, {"stage", fr.stage}};
      if (fr.status == Verdict::Yes) {
        json basis = json::array();
        for (auto& b : fr.basis) basis.push_back(vector_json(F_, b));
        doc_.results["basis"] = basis;
        doc_.witnesses.push_back({{"kind", "free_basis"}, {"input", witness_input(ms)}, {"basis", basis}});
      }
    } else {
      auto pr = is_projective(m);
      auto& rep = report("projective", "is M a projective A-module");
      rep.add("is_projective", verdict_to_status(pr.status),
              std::string("verdict ") + verdict_name(pr.status) + (pr.note.empty() ? "" : "; " + pr.note));
      doc_.results = {{"verdict", verdict_name(pr.status)}, {"generators", pr.generators.size()}};
      if (pr.status == Verdict::Yes) {
        json gens = json::array();
        for (auto& g : pr.generators) gens.push_back(vector_json(F_, g));
        doc_.witnesses.push_back({{"kind", "splitting"},
                                  {"input", witness_input(ms)},
                                  {"generators", gens},
                                  {"splitting", io::detail::matrix_json(F_, pr.splitting)},
                                  {"rows", pr.splitting.rows()}});
      }
    }
  }

  void frobenius() {
    auto s = input(arg(0));
    auto a = need_algebra(s, arg(0));
    auto fr = is_frobenius(a, o_.seed);
    auto& rep = report("frobenius", "is A a Frobenius algebra");
    rep.add("is_frobenius", verdict_to_status(fr.status),
            std::string("verdict ") + verdict_name(fr.status) + (fr.note.empty() ? "" : "; " + fr.note));
    doc_.results = {{"verdict", verdict_name(fr.status)}};
    if (fr.status == Verdict::Yes) {
      io::Structure<K> alg;
      alg.kind = "algebra";
      alg.algebra = a;
      doc_.results["functional"] = vector_json(F_, fr.functional);
      doc_.witnesses.push_back(
          {{"kind", "frobenius_form"}, {"input", witness_input(alg)}, {"functional", vector_json(F_, fr.functional)}});
    }
  }

  void qf() {
    auto a = need_algebra(input(arg(0)), arg(0));
    auto r = is_quasi_frobenius(a);
    auto& rep = report("qf", "is A quasi-Frobenius");
    rep.add("is_quasi_frobenius", verdict_to_status(r.status),
            std::string("verdict ") + verdict_name(r.status) + (r.note.empty() ? "" : "; " + r.note));
    doc_.results = {{"verdict", verdict_name(r.status)},
                    {"right_self_injective", verdict_name(r.right_self_injective)},
                    {"left_self_injective", verdict_name(r.left_self_injective)}};
  }

  void record_simplicity(const SimplicityResult<K>& r) {
    auto& rep = report("hsimple", "does A have a proper nonzero H-(co)stable ideal");
    rep.add("H-simplicity", r.status == Simplicity::Inconclusive ? Status::Inconclusive : Status::Pass,
            std::string(simplicity_name(r.status)) + "; " + r.certificate);
    doc_.results = {{"verdict", simplicity_name(r.status)}};
    if (r.status == Simplicity::NotSimple) doc_.results["witness"] = subspace_json(r.witness, F_);
  }

  void hsimple() {
    auto s = input(arg(0));
    if (s.comodule_algebra) record_simplicity(is_h_simple(*s.comodule_algebra, o_.seed));
    else if (s.module_algebra) record_simplicity(is_h_simple(*s.module_algebra, o_.seed));
    else throw ParseError(0, arg(0) + ": expected a comodule or module algebra, found " + s.kind);
  }

  void costable() {
    auto s = input(arg(0));
    auto a = need_algebra(s, arg(0));
    auto seeds = parse_vectors<K>(o_.seeds, a->labels(), F_);
    if (s.comodule_algebra) {
      auto r = costable_closure(*s.comodule_algebra, seeds);
      auto& rep = report("costable-closure", "least costable ideal containing the seeds");
      rep.expect("closure is a costable ideal", r.costable && r.is_ideal, "dim " + std::to_string(r.ideal.dim()));
      doc_.results = {{"dim", r.ideal.dim()}, {"basis", subspace_json(r.ideal, F_)}};
    } else if (s.module_algebra) {
      auto r = stable_closure_and_K(*s.module_algebra, seeds);
      auto& rep = report("costable-closure", "least H-stable ideal containing the seeds");
      rep.expect("closure is an H-stable ideal", is_h_stable(*s.module_algebra, r.closure) &&
                                                     is_two_sided_ideal(*a, r.closure),
                 "dim " + std::to_string(r.closure.dim()));
      doc_.results = {{"dim", r.closure.dim()}, {"basis", subspace_json(r.closure, F_)}};
    } else {
      throw ParseError(0, arg(0) + ": expected a comodule or module algebra, found " + s.kind);
    }
  }

  void fitting() {
    auto s = input(arg(0));
    const auto& m = need_module(s, arg(0));
    auto& rep = report("fitting", "Fitting ideals of M");
    json ideals = json::array();
    if (o_.has_i) {
      auto f = fitting_ideal(m, o_.fitt_i);
      ideals.push_back({{"i", o_.fitt_i}, {"dim", f.dim()}, {"basis", subspace_json(f, F_)}});
      rep.expect("Fitt_" + std::to_string(o_.fitt_i), true, "dim " + std::to_string(f.dim()));
    } else {
      auto led = fitting_ledger(m);
      for (long i = -1; i <= long(led.n()); ++i) {
        const auto& f = led.fitt(i);
        ideals.push_back({{"i", i}, {"dim", f.dim()}, {"basis", subspace_json(f, F_)}});
      }
      rep.expect("presentation independence", led.presentation_checked,
                 std::to_string(led.n()) + " generators, " + std::to_string(led.presentation.relations.size()) +
                     " relations");
    }
    doc_.results = {{"ideals", ideals}};
  }

  std::optional<CoidealSubalgebra<K>> coideal_from(const std::string& href, const std::string& spec, TheoremReport* rep) {
    auto hs = input(href);
    if (!hs.hopf) throw ParseError(0, href + ": expected a Hopf algebra, found " + hs.kind);
    auto vs = parse_vectors<K>(spec, hs.hopf->labels(), F_);
    auto det = detect_right_coideal_subalgebra(hs.hopf, Subspace<K>::span(hs.hopf->dim(), vs), o_.seed);
    if (!det.accepted) {
      if (rep) rep->refuse("right coideal subalgebra", det.rejection);
      return std::nullopt;
    }
    return det.accepted;
  }

  void coideal() {
    auto& rep = report("coideal", "right coideal subalgebra and its quotients");
    auto cs = coideal_from(arg(0), o_.span, &rep);
    if (!cs) {
      doc_.results = {{"accepted", false}};
      return;
    }
    auto qr = coideal_quotient(*cs, Side::Right);
    auto ql = coideal_quotient(*cs, Side::Left);
    auto hr = regular_module(cs->hopf().algebra_ptr(), Side::Right);
    rep.expect("accepted", true, "dim A = " + std::to_string(cs->dim()));
    doc_.results = {{"accepted", true},
                    {"dim", cs->dim()},
                    {"dim_D", qr.d->dim()},
                    {"dim_D_prime", ql.d->dim()},
                    {"basis", subspace_json(cs->span, F_)}};
  }

  void ni89b() {
    auto& rep = report("ni89b", "X is right- but not left-invertible in Mat_3 of the convolution algebra");
    if (F_.characteristic() == 2) {
      rep.refuse("characteristic", "the construction needs characteristic != 2");
      return;
    }
    auto cert = ni89b_certificate<K>(F_);
    rep.hypothesis(std::to_string(cert.symbol_count) + " symbols, relation rank " + std::to_string(cert.relation_rank));
    rep.expect("relations consistent (1 not in the relation span)", cert.relations_consistent);
    rep.expect("Z != 0 (c23 is free)", cert.z_nonzero);
    json trace = json::array();
    for (auto& e : cert.entries) {
      std::string name = e.product + "[" + std::to_string(e.row) + "," + std::to_string(e.col) + "] = " + e.expected;
      rep.add(name, e.certified ? Status::Pass : Status::Fail, std::to_string(e.terms.size()) + " terms", e.trace);
      trace.push_back({{"entry", name}, {"certified", e.certified}, {"trace", e.trace}});
    }
    doc_.results = {{"conclusion", cert.conclusion}, {"entries", trace}};
  }

  void catalog() {
    auto& rep = report("catalog", "builtin Hopf algebras over " + F_.name());
    std::vector<std::string> names;
    for (std::string g : {"C2", "C3", "C4", "S3"}) names.push_back("group_algebra(" + g + ")");
    for (std::string g : {"C2", "C3", "C4", "S3"}) names.push_back("dual_group_algebra(" + g + ")");
    names.push_back("sweedler_h4");
    names.push_back("taft(3)");
    json items = json::array();
    for (auto& nm : names) {
      std::optional<HopfAlgebra<K>> h;
      try {
        h = builtin_hopf<K>(nm, F_);
      } catch (const InputError& e) {
        items.push_back({{"ref", "builtin:" + nm}, {"available", false}, {"reason", e.what()}});
        continue;
      }
      auto val = validate_hopf(*h);
      rep.expect(nm, val.ok(), "dim " + std::to_string(h->dim()));
      items.push_back({{"ref", "builtin:" + nm}, {"dim", h->dim()}, {"valid", val.ok()}});
    }
    doc_.results = {{"hopf", items},
                    {"other_refs",
                     {"builtin:<hopf>-regular (comodule algebra)", "builtin:<hopf>-adjoint (module algebra)",
                      "builtin:swap (module algebra)", "builtin:sweedler_h4-end (module algebra)",
                      "builtin:<hopf>-regular-module (module)"}}};
  }

  // ------------------------------------------------------------ verify

  void verify() {
    const auto& id = o_.theorem;
    auto in = [&](const std::vector<std::string>& ids) { return std::find(ids.begin(), ids.end(), id) != ids.end(); };
    if (in(comodalg_theorem_ids())) {
      ComodalgInputs<K> ci;
      auto s = input(o_.comodalg);
      if (!s.comodule_algebra) throw ParseError(0, "--comodalg: expected a comodule algebra, found " + s.kind);
      ci.ca = s.comodule_algebra;
      if (!o_.algebra.empty()) ci.r = need_algebra(input(o_.algebra), o_.algebra);
      for (auto& ref : o_.modules) ci.modules.push_back(need_module(input(ref), ref));
      doc_.reports.push_back(verify_comodalg_theorem(id, ci, o_.seed));
    } else if (in(coideal_theorem_ids())) {
      CoidealInputs<K> ci;
      if (o_.trials) ci.trials = o_.trials;
      TheoremReport refused{id, "", {}, {}, {}, o_.seed};
      auto cs = coideal_from(o_.hopf, o_.span, &refused);
      if (!cs) {
        doc_.reports.push_back(refused);
        return;
      }
      doc_.reports.push_back(verify_coideal_theorem(id, *cs, ci, o_.seed));
    } else if (in(modalg_theorem_ids())) {
      ModalgInputs<K> mi;
      if (!o_.modalg.empty()) {
        auto s = input(o_.modalg);
        if (!s.module_algebra) throw ParseError(0, "--modalg: expected a module algebra, found " + s.kind);
        mi.ma = s.module_algebra;
      }
      if (!o_.coalgebra.empty()) {
        auto s = input(o_.coalgebra);
        if (!s.coalgebra) throw ParseError(0, "--coalgebra: expected a coalgebra, found " + s.kind);
        mi.c = s.coalgebra;
      }
      if (!o_.algebra.empty()) mi.b = need_algebra(input(o_.algebra), o_.algebra);
      mi.n = o_.n;
      if (o_.trials) mi.trials = o_.trials;
      doc_.reports.push_back(verify_modalg_theorem(id, mi, o_.seed));
    } else if (in(fitting_property_ids())) {
      FittingInputs<K> fi;
      for (auto& ref : o_.modules) fi.modules.push_back(need_module(input(ref), ref));
      if (!o_.hopf_module.empty()) {
        auto s = input(o_.hopf_module);
        if (!s.hopf_module) throw ParseError(0, "--hopf-module: expected a hopf_module, found " + s.kind);
        fi.hopf_module = s.hopf_module;
      }
      if (!o_.ideals.empty()) {
        if (fi.modules.empty()) throw ParseError(0, "--ideal needs --module");
        const auto& A = fi.modules.front().algebra();
        for (auto& spec : o_.ideals) fi.base_changes.push_back(ideal_closure(A, parse_vectors<K>(spec, A.labels(), F_)));
      }
      if (o_.trials) fi.free_trials = o_.trials;
      doc_.reports.push_back(verify_fitting_property(id, fi, o_.seed));
    } else if (id == "7.localization") {
      auto& rep = report(id, "localization of module algebras at semiprime ideals");
      rep.add("open question", Status::Inconclusive, "no decision procedure; reported as open");
    } else {
      throw ParseError(0, "unknown theorem id " + id);
    }
  }
};

// ------------------------------------------------------------------ replay

namespace detail {

template <class K>
bool replay_witness(const json& w, const FieldOf<K>& F, std::string& detail) {
  auto text = w.at("input").dump();
  auto s = io::parse_presentation<K>(text, F);
  std::string kind = w.at("kind");
  auto vectors = [&](const json& arr, size_t n) {
    std::vector<Vec<K>> out;
    io::detail::Reader<K> rd(text, F);
    for (auto& v : arr) out.push_back(rd.dense(v, n, "witness"));
    return out;
  };
  if (kind == "validation") {
    bool ok = io::validate_structure(s).ok();
    detail = std::string("validator says ") + (ok ? "ok" : "violations");
    return ok == w.at("ok").get<bool>();
  }
  if (kind == "free_basis") {
    Module<K> m = s.module->as_right();
    auto basis = vectors(w.at("basis"), m.dim());
    auto bm = basis_map(m, basis);
    detail = std::to_string(basis.size()) + " basis elements";
    return bm.rows() == bm.cols() && is_invertible(bm);
  }
  if (kind == "splitting") {
    Module<K> m = s.module->as_right();
    auto gens = vectors(w.at("generators"), m.dim());
    size_t rows = w.at("rows");
    Matrix<K> sigma(rows, m.dim());
    io::detail::Reader<K> rd(text, F);
    rd.entries(w.at("splitting"), {rows, m.dim()}, "splitting", [&](auto& i, const K& c) { sigma(i[0], i[1]) += c; });
    auto pi = basis_map(m, gens);
    auto fr = free_module(m.algebra_ptr(), Side::Right, gens.size());
    detail = std::to_string(gens.size()) + " generators";
    return pi * sigma == Matrix<K>::identity(m.dim(), F) && is_module_map(m, fr, sigma);
  }
  if (kind == "frobenius_form") {
    const auto& A = *s.algebra;
    auto lam = vectors(json::array({w.at("functional")}), A.dim())[0];
    Matrix<K> gram(A.dim(), A.dim());
    for (size_t i = 0; i < A.dim(); ++i)
      for (size_t j = 0; j < A.dim(); ++j) {
        auto p = A.basis_product(i, j);
        for (size_t t = 0; t < A.dim(); ++t) gram(i, j) += lam[t] * p[t];
      }
    detail = "Gram matrix of lambda(xy)";
    return is_invertible(gram);
  }
  detail = "unknown witness kind " + kind;
  return false;
}

}  // namespace detail

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

inline io::ReportDoc replay(const std::string& path, const Options& o) {
  auto text = read_file(path);
  auto doc = io::parse_json(text);
  if (!doc.is_object() || !doc.contains("schema_version") || !doc.contains("command"))
    throw ParseError(0, path + ": not a json report");
  io::ReportDoc res;
  res.command = o.argv;
  res.seed = doc.value("seed", uint64_t(0));
  res.field = doc.value("field", std::string());
  TheoremReport rep{"replay", "re-run the recorded command and re-verify its witnesses", {}, {}, {}, res.seed};
  std::vector<std::string> cmd = doc.at("command").get<std::vector<std::string>>();
  // the recorded command may have written to a file; force stdout json
  std::vector<std::string> rerun;
  for (size_t i = 0; i < cmd.size(); ++i) {
    if (cmd[i] == "-o" || cmd[i] == "--output" || cmd[i] == "--format") {
      ++i;
      continue;
    }
    rerun.push_back(cmd[i]);
  }
  rerun.push_back("--format");
  rerun.push_back("json");
  std::ostringstream rout, rerr;
  run(rerun, rout, rerr);
  json again = rout.str().empty() ? json() : io::parse_json(rout.str());
  // the echo differs only by the forced output flags
  json a = doc, b = again;
  if (a.is_object()) a.erase("command");
  if (b.is_object()) b.erase("command");
  rep.expect("rerun reproduces the report", a == b, a == b ? "identical" : "reports differ");
  size_t i = 0;
  for (auto& w : doc.value("witnesses", json::array())) {
    std::string name = "witness " + std::to_string(i++) + " (" + w.value("kind", std::string("?")) + ")";
    std::string detail;
    bool ok = false;
    try {
      auto fs = io::presentation_field(w.at("input"));
      if (fs.p == 0) ok = detail::replay_witness<Rational>(w, RationalField(), detail);
      else ok = detail::replay_witness<GF>(w, GFField(fs.p, fs.k), detail);
    } catch (const std::exception& e) {
      detail = e.what();
    }
    rep.expect(name + " re-verifies", ok, detail);
  }
  res.reports.push_back(rep);
  return res;
}

inline void emit(const io::ReportDoc& doc, const Options& o, std::ostream& out) {
  std::string text = o.format == "markdown" ? io::render_markdown(doc) : io::render_json(doc);
  if (o.output.empty()) {
    out << text;
    return;
  }
  std::ofstream f(o.output, std::ios::binary);
  if (!f) throw ParseError(0, "cannot write " + o.output);
  f << text;
}

// Field for a command: the first file input decides, builtins follow --field.
inline io::FieldSpec choose_field(const Options& o) {
  std::vector<std::string> refs = o.args;
  for (auto* r : {&o.hopf, &o.comodalg, &o.modalg, &o.coalgebra, &o.algebra, &o.hopf_module}) refs.push_back(*r);
  refs.insert(refs.end(), o.modules.begin(), o.modules.end());
  std::optional<io::FieldSpec> found;
  for (auto& r : refs) {
    if (r == "over") continue;
    auto f = field_of_ref(r);
    if (!f) continue;
    if (found && found->name() != f->name()) throw ParseError(0, "inputs use different fields");
    found = f;
  }
  return found ? *found : io::parse_field_spec(o.field);
}

template <class K>
io::ReportDoc dispatch_field(const Options& o, const FieldOf<K>& F) {
  return Runner<K>(o, F).run();
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  o.argv = args;
  CLI::App app{"hopfkit: exact checks for finite-dimensional Hopf algebras and their (co)module algebras"};
  app.require_subcommand(1);
  app.add_option("--seed", o.seed, "random seed")->default_val(0);
  app.add_option("--trials", o.trials, "trial budget for randomized searches (0: default)");
  app.add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "markdown"}));
  app.add_option("--field", o.field, "field for builtin inputs: Q, F<p>, F<p>^<k>");
  app.add_option("-o,--output", o.output, "write the report here instead of stdout");
  app.fallthrough();

  auto positional = [&](CLI::App* sub, const char* what, bool required = true) {
    auto* opt = sub->add_option("inputs", o.args, what);
    if (required) opt->required();
  };
  positional(app.add_subcommand("validate", "run the validator for a presentation"), "file or builtin:NAME");
  positional(app.add_subcommand("radical", "Jacobson radical"), "algebra");
  positional(app.add_subcommand("wedderburn", "Wedderburn data of A/J"), "algebra");
  positional(app.add_subcommand("free", "decide freeness: free <module> [over <algebra>]"), "module [over algebra]");
  positional(app.add_subcommand("projective", "decide projectivity: projective <module> [over <algebra>]"),
             "module [over algebra]");
  positional(app.add_subcommand("frobenius", "is the algebra Frobenius"), "algebra");
  positional(app.add_subcommand("qf", "is the algebra quasi-Frobenius"), "algebra");
  positional(app.add_subcommand("hsimple", "H-simplicity of a comodule or module algebra"), "algebra");
  auto* cc = app.add_subcommand("costable-closure", "least costable (or H-stable) ideal containing seeds");
  positional(cc, "comodule or module algebra");
  cc->add_option("--seeds", o.seeds, "comma separated elements, e.g. \"x, g-1\"")->required();
  auto* fit = app.add_subcommand("fitting", "Fitting ideals of a module over a commutative algebra");
  positional(fit, "module");
  fit->add_option("--i", o.fitt_i, "only Fitt_i");
  auto* co = app.add_subcommand("coideal", "detect a right coideal subalgebra");
  positional(co, "hopf algebra");
  co->add_option("--span", o.span, "spanning elements, e.g. \"1,gx\"")->required();
  auto* ver = app.add_subcommand("verify", "run a theorem driver");
  ver->add_option("theorem", o.theorem, "theorem id, e.g. 3.5, 6.1ii, 7.6, F2")->required();
  ver->add_option("--hopf", o.hopf, "Hopf algebra (coideal drivers)");
  ver->add_option("--span", o.span, "coideal subalgebra span");
  ver->add_option("--comodalg", o.comodalg, "comodule algebra");
  ver->add_option("--modalg", o.modalg, "module algebra");
  ver->add_option("--coalgebra", o.coalgebra, "coalgebra C (7.1)");
  ver->add_option("--algebra", o.algebra, "algebra R (3.8) or B (7.1)");
  ver->add_option("--module", o.modules, "extra module (repeatable)");
  ver->add_option("--ideal", o.ideals, "base-change ideal generators for F1 (repeatable)");
  ver->add_option("--hopf-module", o.hopf_module, "Hopf module (P1.1, C1.6)");
  ver->add_option("--n", o.n, "matrix size for 7.1")->default_val(2);
  app.add_subcommand("ni89b", "certificate that X is right- but not left-invertible");
  app.add_subcommand("catalog", "list and validate builtin Hopf algebras");
  positional(app.add_subcommand("export", "write the canonical presentation of an input"), "file or builtin:NAME");
  positional(app.add_subcommand("replay", "re-run a json report and re-verify its witnesses"), "report.json");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  o.command = app.get_subcommands().front()->get_name();
  o.has_i = fit->count("--i") > 0;
  try {
    if (o.command == "export") {
      auto fs = choose_field(o);
      std::string text;
      if (fs.p == 0) text = io::serialize_presentation(load<Rational>(o.args.at(0), RationalField()), RationalField());
      else {
        GFField F(fs.p, fs.k);
        text = io::serialize_presentation(load<GF>(o.args.at(0), F), F);
      }
      if (o.output.empty()) out << text;
      else std::ofstream(o.output, std::ios::binary) << text;
      return 0;
    }
    io::ReportDoc doc;
    if (o.command == "replay") {
      doc = replay(o.args.at(0), o);
    } else {
      auto fs = choose_field(o);
      doc = fs.p == 0 ? dispatch_field<Rational>(o, RationalField()) : dispatch_field<GF>(o, GFField(fs.p, fs.k));
    }
    emit(doc, o, out);
    return io::exit_code(doc.status());
  } catch (const ValidationFailure& v) {
    err << "validation failed: " << v.what() << "\n";
    emit(v.doc, o, out);
    return 2;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  } catch (const InputError& e) {
    err << "input error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hopfkit::cli
