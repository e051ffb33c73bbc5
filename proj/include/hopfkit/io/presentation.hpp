#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfkit/coideal.hpp"
#include "hopfkit/comodalg.hpp"
#include "hopfkit/modalg.hpp"

namespace hopfkit::io {

using json = nlohmann::json;

inline constexpr int kFormatVersion = 1;

inline const std::vector<std::string>& presentation_kinds() {
  static const std::vector<std::string> kinds{"algebra",         "coalgebra", "hopf",       "comodule_algebra",
                                              "module_algebra",  "module",    "hopf_module", "coideal_subalgebra"};
  return kinds;
}

// Like dump(2), but arrays of scalars stay on one line so each sparse entry is one line.
inline void pretty_into(const json& v, std::string& out, int indent) {
  auto flat = [](const json& a) {
    for (auto& x : a)
      if (x.is_structured()) return false;
    return true;
  };
  std::string pad(size_t(indent + 2), ' ');
  if (v.is_object() && !v.empty()) {
    out += "{\n";
    size_t i = 0;
    for (auto it = v.begin(); it != v.end(); ++it, ++i) {
      out += pad + json(it.key()).dump() + ": ";
      pretty_into(it.value(), out, indent + 2);
      out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += std::string(size_t(indent), ' ') + "}";
  } else if (v.is_array() && !v.empty() && !flat(v)) {
    out += "[\n";
    for (size_t i = 0; i < v.size(); ++i) {
      out += pad;
      pretty_into(v[i], out, indent + 2);
      out += i + 1 < v.size() ? ",\n" : "\n";
    }
    out += std::string(size_t(indent), ' ') + "]";
  } else if (v.is_array()) {
    out += "[";
    for (size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + v[i].dump();
    out += "]";
  } else {
    out += v.dump();
  }
}

inline std::string pretty(const json& v) {
  std::string out;
  pretty_into(v, out, 0);
  return out + "\n";
}

// Syntax or structure error in a presentation; line is 1-based, 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(size_t line, std::string reason)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + reason : reason),
        line_(line),
        reason_(std::move(reason)) {}
  size_t line() const { return line_; }
  const std::string& reason() const { return reason_; }

 private:
  size_t line_;
  std::string reason_;
};

inline size_t line_at(const std::string& text, size_t byte) {
  size_t line = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i) line += text[i] == '\n';
  return line;
}

inline size_t line_of(const std::string& text, const std::string& needle) {
  auto pos = text.find(needle);
  return pos == std::string::npos ? 0 : line_at(text, pos);
}

struct FieldSpec {
  uint32_t p = 0;  // 0 for Q
  uint32_t k = 1;
  std::string name() const {
    if (p == 0) return "Q";
    return k == 1 ? "F" + std::to_string(p) : "F" + std::to_string(p) + "^" + std::to_string(k);
  }
};

// "Q", "F3", "GF(3)", "F2^2", "GF(2^2)"
inline FieldSpec parse_field_spec(std::string s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t == "Q" || t == "QQ") return {};
  std::string body;
  if (t.rfind("GF(", 0) == 0 && t.back() == ')') body = t.substr(3, t.size() - 4);
  else if (!t.empty() && t[0] == 'F') body = t.substr(1);
  else throw ParseError(0, "unknown field '" + s + "'");
  auto caret = body.find('^');
  std::string ps = body.substr(0, caret), ks = caret == std::string::npos ? "1" : body.substr(caret + 1);
  auto digits = [](const std::string& x) {
    return !x.empty() && x.size() < 8 && std::all_of(x.begin(), x.end(), ::isdigit);
  };
  if (!digits(ps) || !digits(ks)) throw ParseError(0, "unknown field '" + s + "'");
  FieldSpec f{static_cast<uint32_t>(std::stoul(ps)), static_cast<uint32_t>(std::stoul(ks))};
  if (f.p < 2 || f.k < 1) throw ParseError(0, "unknown field '" + s + "'");
  for (uint32_t d = 2; d * d <= f.p; ++d)
    if (f.p % d == 0) throw ParseError(0, "field characteristic " + ps + " is not prime");
  uint64_t q = 1;
  for (uint32_t i = 0; i < f.k; ++i) q *= f.p;
  if (q > GFContext::kMaxOrder) throw ParseError(0, "field " + f.name() + " is too large");
  return f;
}

// Everything a presentation can describe; the fields used depend on `kind`.
template <class K>
struct Structure {
  std::string kind;
  std::string name;
  AlgebraPtr<K> algebra;
  CoalgebraPtr<K> coalgebra;
  HopfPtr<K> hopf;
  ComoduleAlgebraPtr<K> comodule_algebra;
  ModuleAlgebraPtr<K> module_algebra;
  std::optional<Module<K>> module;
  std::optional<HopfModule<K>> hopf_module;
  std::optional<Subspace<K>> span;  // coideal_subalgebra, inside hopf
};

// Builtin references: catalog Hopf algebras, "<hopf>-regular" (regular coaction),
// "<hopf>-adjoint", "swap", "h4-end" (End of the 2-dim module) and "<hopf>-regular-module".
template <class K>
Structure<K> resolve_builtin(const std::string& ref, const FieldOf<K>& F) {
  Structure<K> s;
  s.name = "builtin:" + ref;
  auto ends = [&](const std::string& suf) {
    return ref.size() > suf.size() && ref.compare(ref.size() - suf.size(), suf.size(), suf) == 0;
  };
  auto head = [&](const std::string& suf) { return ref.substr(0, ref.size() - suf.size()); };
  if (ref == "swap") {
    s.kind = "module_algebra";
    s.module_algebra = share(swap_action<K>(F));
  } else if (ends("-regular-module")) {
    s.kind = "module";
    auto h = share(builtin_hopf<K>(head("-regular-module"), F));
    s.module = regular_module(h->algebra_ptr(), Side::Right);
  } else if (ends("-regular")) {
    s.kind = "comodule_algebra";
    s.comodule_algebra = share(regular_coaction(share(builtin_hopf<K>(head("-regular"), F))));
  } else if (ends("-adjoint")) {
    s.kind = "module_algebra";
    s.module_algebra = share(adjoint_action(share(builtin_hopf<K>(head("-adjoint"), F))));
  } else if (ends("-end")) {
    s.kind = "module_algebra";
    auto h = share(builtin_hopf<K>(head("-end"), F));
    s.module_algebra = share(endomorphism_action(h, sweedler_two_dim_module(h)));
  } else {
    s.kind = "hopf";
    s.hopf = share(builtin_hopf<K>(ref, F));
  }
  if (s.hopf) {
    s.algebra = s.hopf->algebra_ptr();
    s.coalgebra = s.hopf->coalgebra_ptr();
  }
  if (s.comodule_algebra) s.algebra = s.comodule_algebra->algebra_ptr(), s.hopf = s.comodule_algebra->hopf_ptr();
  if (s.module_algebra) s.algebra = s.module_algebra->algebra_ptr(), s.hopf = s.module_algebra->hopf_ptr();
  if (s.module) s.algebra = s.module->algebra_ptr();
  return s;
}

namespace detail {

template <class K>
class Reader {
 public:
  Reader(const std::string& text, const FieldOf<K>& F) : text_(text), F_(F) {}

  [[noreturn]] void fail(const std::string& reason, const std::string& near = {}) const {
    throw ParseError(near.empty() ? 0 : line_of(text_, near), reason);
  }

  const json& member(const json& obj, const char* key, const std::string& where) const {
    if (!obj.is_object() || !obj.contains(key)) fail(where + ": missing \"" + key + "\"");
    return obj.at(key);
  }

  K scalar(const json& v, const std::string& where) const {
    std::string s;
    if (v.is_string()) s = v.template get<std::string>();
    else if (v.is_array()) {
      s = "(";
      for (size_t i = 0; i < v.size(); ++i) {
        if (!v[i].is_number_integer()) fail(where + ": tuple entries must be integers");
        s += (i ? "," : "") + std::to_string(v[i].template get<long>());
      }
      s += ")";
    } else {
      fail(where + ": scalars are written as strings, found " + std::string(v.type_name()));
    }
    auto x = F_.parse(s);
    if (!x) fail(where + ": bad scalar \"" + s + "\" for field " + F_.name(), "\"" + s + "\"");
    return *x;
  }

  size_t index(const json& v, size_t bound, const std::string& where) const {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.template get<long>() >= 0))
      fail(where + ": expected a nonnegative index");
    size_t i = v.template get<size_t>();
    if (i >= bound) fail(where + ": index " + std::to_string(i) + " out of range (< " + std::to_string(bound) + ")");
    return i;
  }

  Vec<K> dense(const json& v, size_t n, const std::string& where) const {
    if (!v.is_array() || v.size() != n) fail(where + ": expected " + std::to_string(n) + " scalars");
    Vec<K> out;
    for (auto& x : v) out.push_back(scalar(x, where));
    return out;
  }

  std::vector<std::string> labels(const json& v, const std::string& where) const {
    if (!v.is_array() || v.empty()) fail(where + ": labels must be a nonempty array");
    std::vector<std::string> out;
    for (auto& x : v) {
      if (!x.is_string()) fail(where + ": labels must be strings");
      out.push_back(x.template get<std::string>());
    }
    return out;
  }

  // Sparse entries [i1, ..., ik, "c"] accumulated by `put`.
  template <class Put>
  void entries(const json& v, const std::vector<size_t>& bounds, const std::string& where, Put put) const {
    if (!v.is_array()) fail(where + ": expected an array of entries");
    for (auto& e : v) {
      if (!e.is_array() || e.size() != bounds.size() + 1) fail(where + ": entries have " + std::to_string(bounds.size() + 1) + " fields");
      std::vector<size_t> idx;
      for (size_t t = 0; t < bounds.size(); ++t) idx.push_back(index(e[t], bounds[t], where));
      put(idx, scalar(e[bounds.size()], where));
    }
  }

  std::vector<Matrix<K>> matrices(const json& v, size_t count, size_t rows, size_t cols, const std::string& where) const {
    std::vector<Matrix<K>> out(count, Matrix<K>(rows, cols));
    entries(v, {count, rows, cols}, where, [&](auto& i, const K& c) { out[i[0]](i[1], i[2]) += c; });
    return out;
  }

  AlgebraPtr<K> algebra(const json& o) const {
    auto lab = labels(member(o, "labels", "algebra"), "algebra");
    size_t n = lab.size();
    std::vector<Vec<K>> mult(n * n, Vec<K>(n));
    entries(member(o, "mult", "algebra"), {n, n, n}, "algebra.mult",
            [&](auto& i, const K& c) { mult[i[0] * n + i[1]][i[2]] += c; });
    auto unit = dense(member(o, "unit", "algebra"), n, "algebra.unit");
    return std::make_shared<const Algebra<K>>(F_, lab, std::move(mult), std::move(unit));
  }

  CoalgebraPtr<K> coalgebra(const json& o, const std::vector<std::string>* fallback = nullptr) const {
    std::vector<std::string> lab =
        o.contains("labels") || !fallback ? labels(member(o, "labels", "coalgebra"), "coalgebra") : *fallback;
    size_t n = lab.size();
    std::vector<Vec<K>> comult(n, Vec<K>(n * n));
    entries(member(o, "comult", "coalgebra"), {n, n, n}, "coalgebra.comult",
            [&](auto& i, const K& c) { comult[i[0]][i[1] * n + i[2]] += c; });
    auto counit = dense(member(o, "counit", "coalgebra"), n, "coalgebra.counit");
    return std::make_shared<const Coalgebra<K>>(F_, lab, std::move(comult), std::move(counit));
  }

  HopfPtr<K> hopf(const json& o) const {
    auto a = algebra(member(o, "algebra", "hopf"));
    auto c = coalgebra(member(o, "coalgebra", "hopf"), &a->labels());
    size_t n = a->dim();
    auto s = matrices(json::array({}), 1, n, n, "hopf.antipode")[0];
    entries(member(o, "antipode", "hopf"), {n, n}, "hopf.antipode", [&](auto& i, const K& x) { s(i[0], i[1]) += x; });
    std::optional<Matrix<K>> sinv;
    if (o.contains("antipode_inverse")) {
      Matrix<K> t(n, n);
      entries(o.at("antipode_inverse"), {n, n}, "hopf.antipode_inverse", [&](auto& i, const K& x) { t(i[0], i[1]) += x; });
      sinv = t;
    }
    std::string name = o.contains("name") && o.at("name").is_string() ? o.at("name").template get<std::string>() : "";
    return share(HopfAlgebra<K>(a, c, s, sinv, name));
  }

  Side side(const json& o, const std::string& where) const {
    auto v = member(o, "side", where);
    if (v == "right") return Side::Right;
    if (v == "left") return Side::Left;
    fail(where + ": side must be \"left\" or \"right\"");
  }

  size_t dim(const json& o, const std::string& where) const {
    auto v = member(o, "dim", where);
    if (!v.is_number_unsigned()) fail(where + ": dim must be a nonnegative integer");
    return v.template get<size_t>();
  }

  // A nested value: an inline object or a "builtin:" reference.
  Structure<K> nested(const json& v, const std::string& want) const {
    if (v.is_string()) {
      auto s = v.template get<std::string>();
      if (s.rfind("builtin:", 0) != 0) fail("expected an object or a builtin: reference, found \"" + s + "\"", s);
      try {
        return resolve_builtin<K>(s.substr(8), F_);
      } catch (const InputError& e) {
        fail(e.what(), s);
      }
    }
    if (!v.is_object()) fail("expected a nested " + want);
    std::string kind = v.contains("kind") && v.at("kind").is_string() ? v.at("kind").template get<std::string>() : want;
    return structure(v, kind);
  }

  AlgebraPtr<K> nested_algebra(const json& v) const {
    auto s = nested(v, "algebra");
    if (!s.algebra) fail("expected something with an underlying algebra, found " + s.kind);
    return s.algebra;
  }
  HopfPtr<K> nested_hopf(const json& v) const {
    auto s = nested(v, "hopf");
    if (!s.hopf) fail("expected a Hopf algebra, found " + s.kind);
    return s.hopf;
  }

  Structure<K> structure(const json& o, const std::string& kind) const {
    Structure<K> s;
    s.kind = kind;
    if (o.contains("name") && o.at("name").is_string()) s.name = o.at("name").template get<std::string>();
    if (kind == "algebra") {
      s.algebra = algebra(o);
    } else if (kind == "coalgebra") {
      s.coalgebra = coalgebra(o);
    } else if (kind == "hopf") {
      s.hopf = hopf(o);
      s.algebra = s.hopf->algebra_ptr();
      s.coalgebra = s.hopf->coalgebra_ptr();
    } else if (kind == "comodule_algebra" || kind == "module_algebra") {
      s.hopf = nested_hopf(member(o, "hopf", kind));
      s.algebra = nested_algebra(member(o, "algebra", kind));
      const char* key = kind == "comodule_algebra" ? "coaction" : "action";
      auto mats = matrices(member(o, key, kind), s.hopf->dim(), s.algebra->dim(), s.algebra->dim(), kind + "." + key);
      if (kind == "comodule_algebra") s.comodule_algebra = share(ComoduleAlgebra<K>(s.algebra, s.hopf, mats, s.name));
      else s.module_algebra = share(HModuleAlgebra<K>(s.algebra, s.hopf, mats, s.name));
    } else if (kind == "module") {
      s.algebra = nested_algebra(member(o, "algebra", kind));
      size_t d = dim(o, kind);
      s.module = Module<K>(s.algebra, side(o, kind), d, matrices(member(o, "action", kind), s.algebra->dim(), d, d, "module.action"));
    } else if (kind == "hopf_module") {
      auto ca = nested(member(o, "comodule_algebra", kind), "comodule_algebra");
      if (!ca.comodule_algebra) fail("hopf_module: expected a comodule algebra, found " + ca.kind);
      s.comodule_algebra = ca.comodule_algebra;
      s.algebra = ca.algebra;
      s.hopf = ca.hopf;
      size_t d = dim(o, kind);
      Module<K> m(s.algebra, side(o, kind), d, matrices(member(o, "action", kind), s.algebra->dim(), d, d, "hopf_module.action"));
      Comodule<K> co(s.hopf->coalgebra_ptr(), Side::Right, d,
                     matrices(member(o, "coaction", kind), s.hopf->dim(), d, d, "hopf_module.coaction"));
      s.hopf_module = HopfModule<K>{s.comodule_algebra, m, co, s.name};
    } else if (kind == "coideal_subalgebra") {
      s.hopf = nested_hopf(member(o, "hopf", kind));
      s.algebra = s.hopf->algebra_ptr();
      auto sp = member(o, "span", kind);
      if (!sp.is_array() || sp.empty()) fail("coideal_subalgebra.span must be a nonempty array of vectors");
      std::vector<Vec<K>> vs;
      for (auto& v : sp) vs.push_back(dense(v, s.hopf->dim(), "coideal_subalgebra.span"));
      s.span = Subspace<K>::span(s.hopf->dim(), vs);
    } else {
      fail("unknown kind \"" + kind + "\"", kind);
    }
    return s;
  }

 private:
  const std::string& text_;
  FieldOf<K> F_;
};

}  // namespace detail

inline json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(line_at(text, e.byte ? e.byte - 1 : 0), e.what());
  }
}

inline FieldSpec presentation_field(const json& doc) {
  if (!doc.is_object()) throw ParseError(1, "a presentation is a JSON object");
  if (!doc.contains("field") || !doc.at("field").is_string()) throw ParseError(0, "missing \"field\"");
  return parse_field_spec(doc.at("field").template get<std::string>());
}

template <class K>
Structure<K> parse_presentation(const std::string& text, const FieldOf<K>& F) {
  json doc = parse_json(text);
  if (!doc.is_object()) throw ParseError(1, "a presentation is a JSON object");
  if (!doc.contains("format_version") || doc.at("format_version") != kFormatVersion)
    throw ParseError(line_of(text, "format_version"), "unsupported or missing format_version (expected 1)");
  if (!doc.contains("kind") || !doc.at("kind").is_string()) throw ParseError(0, "missing \"kind\"");
  detail::Reader<K> rd(text, F);
  try {
    return rd.structure(doc, doc.at("kind").template get<std::string>());
  } catch (const InputError& e) {
    // constructors reject inconsistent sizes
    throw ParseError(0, e.what());
  } catch (const json::exception& e) {
    throw ParseError(0, e.what());
  }
}

// ---------------------------------------------------------------- writing

namespace detail {

template <class K>
json scalar_json(const FieldOf<K>& F, const K& x) {
  return F.format(x);
}

template <class K>
json dense_json(const FieldOf<K>& F, const Vec<K>& v) {
  json out = json::array();
  for (auto& x : v) out.push_back(scalar_json(F, x));
  return out;
}

template <class K>
json matrices_json(const FieldOf<K>& F, const std::vector<Matrix<K>>& ms) {
  json out = json::array();
  for (size_t l = 0; l < ms.size(); ++l)
    for (size_t r = 0; r < ms[l].rows(); ++r)
      for (size_t c = 0; c < ms[l].cols(); ++c)
        if (!ms[l](r, c).is_zero()) out.push_back({l, r, c, scalar_json(F, ms[l](r, c))});
  return out;
}

template <class K>
json matrix_json(const FieldOf<K>& F, const Matrix<K>& m) {
  json out = json::array();
  for (size_t r = 0; r < m.rows(); ++r)
    for (size_t c = 0; c < m.cols(); ++c)
      if (!m(r, c).is_zero()) out.push_back({r, c, scalar_json(F, m(r, c))});
  return out;
}

template <class K>
json algebra_json(const Algebra<K>& a) {
  const auto& F = a.field();
  size_t n = a.dim();
  json mult = json::array();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (auto& [k, c] : a.basis_product_sparse(i, j)) mult.push_back({i, j, k, scalar_json(F, c)});
  return {{"kind", "algebra"}, {"labels", a.labels()}, {"unit", dense_json(F, a.unit())}, {"mult", mult}};
}

template <class K>
json coalgebra_json(const Coalgebra<K>& c) {
  const auto& F = c.field();
  json comult = json::array();
  for (size_t l = 0; l < c.dim(); ++l)
    for (auto& [i, j, x] : c.triples(l)) comult.push_back({l, i, j, scalar_json(F, x)});
  return {{"kind", "coalgebra"}, {"labels", c.labels()}, {"counit", dense_json(F, c.counit())}, {"comult", comult}};
}

template <class K>
json hopf_json(const HopfAlgebra<K>& h) {
  json o = {{"kind", "hopf"},
            {"algebra", algebra_json(h.algebra())},
            {"coalgebra", coalgebra_json(h.coalgebra())},
            {"antipode", matrix_json(h.field(), h.antipode())}};
  if (h.antipode_inverse()) o["antipode_inverse"] = matrix_json(h.field(), *h.antipode_inverse());
  if (!h.name().empty()) o["name"] = h.name();
  return o;
}

template <class K>
json comodule_algebra_json(const ComoduleAlgebra<K>& ca) {
  return {{"kind", "comodule_algebra"},
          {"hopf", hopf_json(ca.hopf())},
          {"algebra", algebra_json(ca.algebra())},
          {"coaction", matrices_json(ca.field(), ca.coefficients())}};
}

}  // namespace detail

// Canonical form: inline everything, sparse entries in index order, scalars via the field's format.
template <class K>
json to_json(const Structure<K>& s) {
  using namespace detail;
  json o;
  if (s.kind == "algebra") o = algebra_json(*s.algebra);
  else if (s.kind == "coalgebra") o = coalgebra_json(*s.coalgebra);
  else if (s.kind == "hopf") o = hopf_json(*s.hopf);
  else if (s.kind == "comodule_algebra") o = comodule_algebra_json(*s.comodule_algebra);
  else if (s.kind == "module_algebra") {
    const auto& ma = *s.module_algebra;
    o = {{"kind", "module_algebra"},
         {"hopf", hopf_json(ma.hopf())},
         {"algebra", algebra_json(ma.algebra())},
         {"action", matrices_json(ma.field(), ma.actions())}};
  } else if (s.kind == "module") {
    const auto& m = *s.module;
    o = {{"kind", "module"},
         {"algebra", algebra_json(m.algebra())},
         {"side", m.side() == Side::Right ? "right" : "left"},
         {"dim", m.dim()},
         {"action", matrices_json(m.field(), m.actions())}};
  } else if (s.kind == "hopf_module") {
    const auto& m = *s.hopf_module;
    o = {{"kind", "hopf_module"},
         {"comodule_algebra", comodule_algebra_json(*m.ca)},
         {"side", m.side() == Side::Right ? "right" : "left"},
         {"dim", m.dim()},
         {"action", matrices_json(m.module.field(), m.module.actions())},
         {"coaction", matrices_json(m.module.field(), m.coaction.coefficients())}};
  } else if (s.kind == "coideal_subalgebra") {
    json span = json::array();
    for (auto& v : s.span->basis_vectors()) span.push_back(dense_json(s.hopf->field(), v));
    o = {{"kind", "coideal_subalgebra"}, {"hopf", hopf_json(*s.hopf)}, {"span", span}};
  } else {
    throw InputError("to_json: unknown kind " + s.kind);
  }
  return o;
}

template <class K>
json presentation_document(const Structure<K>& s, const FieldOf<K>& F) {
  json o = to_json(s);
  o["format_version"] = kFormatVersion;
  o["field"] = F.name();
  if (!s.name.empty()) o["name"] = s.name;
  return o;
}

template <class K>
std::string serialize_presentation(const Structure<K>& s, const FieldOf<K>& F) {
  return pretty(presentation_document(s, F));
}

template <class K>
ValidationReport validate_structure(const Structure<K>& s, uint64_t seed = 0) {
  ValidationReport rep;
  if (s.kind == "algebra") rep.merge(validate_algebra(*s.algebra));
  else if (s.kind == "coalgebra") rep.merge(validate_coalgebra(*s.coalgebra));
  else if (s.kind == "hopf") rep.merge(validate_hopf(*s.hopf));
  else if (s.kind == "comodule_algebra") rep.merge(validate_comodule_algebra(*s.comodule_algebra));
  else if (s.kind == "module_algebra") {
    rep.merge(validate_hopf(s.module_algebra->hopf()), "hopf");
    rep.merge(validate_algebra(s.module_algebra->algebra()), "algebra");
    if (rep.ok()) rep.merge(validate_module_algebra(*s.module_algebra));
  } else if (s.kind == "module") rep.merge(validate_module(*s.module));
  else if (s.kind == "hopf_module") {
    rep.merge(validate_comodule_algebra(*s.comodule_algebra), "comodule algebra");
    if (rep.ok()) rep.merge(validate_hopf_module(*s.hopf_module));
  } else if (s.kind == "coideal_subalgebra") {
    rep.merge(validate_hopf(*s.hopf), "hopf");
    if (rep.ok()) {
      auto det = detect_right_coideal_subalgebra(s.hopf, *s.span, seed);
      if (!det.accepted) rep.add("right coideal subalgebra", det.indices, det.rejection);
    }
  }
  return rep;
}

}  // namespace hopfkit::io
