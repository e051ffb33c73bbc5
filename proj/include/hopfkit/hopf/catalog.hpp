#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <functional>
#include <string>
#include <vector>

#include "hopfkit/hopf/hopf.hpp"

namespace hopfkit {

struct FiniteGroup {
  std::string name;
  std::vector<std::string> labels;      // element 0 is the identity
  std::vector<std::vector<size_t>> mul;  // mul[a][b] = index of ab
  size_t inverse(size_t a) const {
    for (size_t b = 0; b < labels.size(); ++b)
      if (mul[a][b] == 0) return b;
    throw std::logic_error("group element without inverse");
  }
};

inline FiniteGroup cyclic_group(size_t n) {
  FiniteGroup g{"C" + std::to_string(n), {}, {}};
  for (size_t i = 0; i < n; ++i) g.labels.push_back(i == 0 ? "1" : i == 1 ? "g" : "g" + std::to_string(i));
  g.mul.assign(n, std::vector<size_t>(n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) g.mul[a][b] = (a + b) % n;
  return g;
}

// S3 as permutations of {0,1,2}: r = (0 1 2), s = (0 1); elements r^i s^j.
inline FiniteGroup symmetric_group3() {
  using P = std::array<int, 3>;
  auto compose = [](const P& x, const P& y) { return P{x[y[0]], x[y[1]], x[y[2]]}; };  // x after y
  P e{0, 1, 2}, r{1, 2, 0}, s{1, 0, 2};
  std::vector<P> elems;
  std::vector<std::string> labels = {"1", "r", "r2", "s", "rs", "r2s"};
  P rp = e;
  for (int i = 0; i < 3; ++i) {
    elems.push_back(rp);
    rp = compose(r, rp);
  }
  for (int i = 0; i < 3; ++i) elems.push_back(compose(elems[i], s));
  FiniteGroup g{"S3", labels, {}};
  g.mul.assign(6, std::vector<size_t>(6));
  for (size_t a = 0; a < 6; ++a)
    for (size_t b = 0; b < 6; ++b) {
      P p = compose(elems[a], elems[b]);
      g.mul[a][b] = std::find(elems.begin(), elems.end(), p) - elems.begin();
    }
  return g;
}

inline FiniteGroup group_by_name(const std::string& name) {
  if (name == "C2") return cyclic_group(2);
  if (name == "C3") return cyclic_group(3);
  if (name == "C4") return cyclic_group(4);
  if (name == "S3") return symmetric_group3();
  throw InputError("unknown group '" + name + "' (expected C2, C3, C4 or S3)");
}

template <class K>
HopfAlgebra<K> group_algebra(const FiniteGroup& G, const FieldOf<K>& F) {
  size_t n = G.labels.size();
  std::vector<Vec<K>> mult;
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) mult.push_back(unit_vec<K>(n, G.mul[a][b], F));
  std::vector<Vec<K>> comult(n, Vec<K>(n * n));
  Matrix<K> s(n, n);
  for (size_t a = 0; a < n; ++a) {
    comult[a][a * n + a] = F.one();
    s(G.inverse(a), a) = F.one();
  }
  auto A = share(Algebra<K>(F, G.labels, mult, unit_vec<K>(n, 0, F)));
  auto C = share(Coalgebra<K>(F, G.labels, comult, Vec<K>(n, F.one())));
  return HopfAlgebra<K>(A, C, s, s, "group_algebra(" + G.name + ")");
}

// Functions on G: p_a p_b = delta_ab p_a, Delta p_g = sum_{ab=g} p_a (x) p_b, s(p_g) = p_{g^-1}.
template <class K>
HopfAlgebra<K> dual_group_algebra(const FiniteGroup& G, const FieldOf<K>& F) {
  size_t n = G.labels.size();
  std::vector<std::string> labels;
  for (auto& l : G.labels) labels.push_back("p_" + l);
  std::vector<Vec<K>> mult(n * n, Vec<K>(n));
  for (size_t a = 0; a < n; ++a) mult[a * n + a][a] = F.one();
  std::vector<Vec<K>> comult(n, Vec<K>(n * n));
  for (size_t a = 0; a < n; ++a)
    for (size_t b = 0; b < n; ++b) comult[G.mul[a][b]][a * n + b] = F.one();
  Matrix<K> s(n, n);
  for (size_t a = 0; a < n; ++a) s(G.inverse(a), a) = F.one();
  auto A = share(Algebra<K>(F, labels, mult, Vec<K>(n, F.one())));
  auto C = share(Coalgebra<K>(F, labels, comult, unit_vec<K>(n, 0, F)));
  return HopfAlgebra<K>(A, C, s, s, "dual_group_algebra(" + G.name + ")");
}

inline long smallest_prime_with_root(size_t n) {
  for (long p = 2;; ++p) {
    bool prime = p > 1;
    for (long d = 2; d * d <= p; ++d)
      if (p % d == 0) prime = false;
    if (prime && (p - 1) % static_cast<long>(n) == 0) return p;
  }
}

// Least element (by code order) of multiplicative order exactly n.
template <class K>
std::optional<K> least_primitive_root_of_unity(size_t n, const FieldOf<K>& F) {
  if constexpr (is_rational_v<K>) {
    if (n == 1) return F.one();
    if (n == 2) return F.from_int(-1);
    return std::nullopt;
  } else {
    for (uint64_t c = 1; c < F.order(); ++c) {
      K z = F.element(c), p = z;
      size_t ord = 1;
      while (!p.is_one() && ord <= n) {
        p = p * z;
        ++ord;
      }
      if (ord == n) return z;
    }
    return std::nullopt;
  }
}

// Taft algebra T_n: g^n = 1, x^n = 0, xg = zeta gx, Delta g = g(x)g, Delta x = x(x)1 + g(x)x.
// Basis g^i x^j at index j*n + i. Delta and s are computed on generators and extended.
template <class K>
HopfAlgebra<K> taft_algebra(size_t n, const FieldOf<K>& F) {
  if (n < 2) throw InputError("taft(n) needs n >= 2");
  auto zeta_opt = least_primitive_root_of_unity<K>(n, F);
  if (!zeta_opt)
    throw InputError("field " + F.name() + " has no primitive " + std::to_string(n) +
                     "-th root of unity; smallest valid prime field is F" + std::to_string(smallest_prime_with_root(n)));
  K zeta = *zeta_opt;
  size_t N = n * n;
  std::vector<K> zpow(n * n + 1);
  zpow[0] = F.one();
  for (size_t i = 1; i < zpow.size(); ++i) zpow[i] = zpow[i - 1] * zeta;
  std::vector<std::string> labels;
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) {
      std::string g = i == 0 ? "" : i == 1 ? "g" : "g" + std::to_string(i);
      std::string x = j == 0 ? "" : j == 1 ? "x" : "x" + std::to_string(j);
      labels.push_back(g.empty() && x.empty() ? "1" : g + x);
    }
  // (g^a x^b)(g^c x^d) = zeta^{bc} g^{a+c} x^{b+d}
  std::vector<Vec<K>> mult;
  for (size_t p = 0; p < N; ++p)
    for (size_t q = 0; q < N; ++q) {
      size_t a = p % n, b = p / n, c = q % n, d = q / n;
      Vec<K> v(N);
      if (b + d < n) v[(b + d) * n + (a + c) % n] = zpow[(b * c) % n];
      mult.push_back(v);
    }
  auto A = share(Algebra<K>(F, labels, mult, unit_vec<K>(N, 0, F)));
  Vec<K> g = unit_vec<K>(N, 1, F), x = unit_vec<K>(N, n, F), one = A->unit();
  Vec<K> dg = tensor_vec(g, g), dx = add_vec(tensor_vec(x, one), tensor_vec(g, x));
  Vec<K> ginv = A->power(g, n - 1);
  Vec<K> sg = ginv, sx = scale_vec(-F.one(), A->multiply(ginv, x));
  std::vector<Vec<K>> comult(N);
  Matrix<K> s(N, N);
  Vec<K> eps(N);
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < n; ++i) {
      Vec<K> d = tensor_vec(one, one), sv = one;
      for (size_t t = 0; t < i; ++t) d = tensor_multiply(*A, *A, d, dg);
      for (size_t t = 0; t < j; ++t) d = tensor_multiply(*A, *A, d, dx);
      for (size_t t = 0; t < j; ++t) sv = A->multiply(sv, sx);  // s(g^i x^j) = s(x)^j s(g)^i
      for (size_t t = 0; t < i; ++t) sv = A->multiply(sv, sg);
      comult[j * n + i] = d;
      s.set_col(j * n + i, sv);
      if (j == 0) eps[j * n + i] = F.one();
    }
  auto C = share(Coalgebra<K>(F, labels, comult, eps));
  auto sinv = inverse(s, F);
  std::string name = n == 2 ? "sweedler_h4" : "taft(" + std::to_string(n) + ")";
  HopfAlgebra<K> h(A, C, s, sinv, name);
  h.add_note("zeta = " + zeta.to_string() + " (least primitive " + std::to_string(n) + "-th root of unity)");
  return h;
}

template <class K>
HopfAlgebra<K> sweedler_h4(const FieldOf<K>& F) {
  return taft_algebra<K>(2, F);
}

// Catalog names: group_algebra(G), dual_group_algebra(G), sweedler_h4, taft(n); the
// forms group_algebra_C2, dual_group_algebra_S3, taft3, h4 are accepted too.
inline std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (std::string g : {"C2", "C3", "C4", "S3"}) out.push_back("group_algebra(" + g + ")");
  for (std::string g : {"C2", "C3", "C4", "S3"}) out.push_back("dual_group_algebra(" + g + ")");
  out.push_back("sweedler_h4");
  out.push_back("taft(n)");
  return out;
}

template <class K>
HopfAlgebra<K> builtin_hopf(std::string name, const FieldOf<K>& F) {
  std::string s;
  for (char c : name)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto strip = [&](const std::string& prefix) -> std::optional<std::string> {
    if (s.rfind(prefix + "(", 0) == 0 && s.back() == ')') return s.substr(prefix.size() + 1, s.size() - prefix.size() - 2);
    if (s.rfind(prefix + "_", 0) == 0) return s.substr(prefix.size() + 1);
    return std::nullopt;
  };
  if (auto g = strip("dual_group_algebra")) return dual_group_algebra<K>(group_by_name(*g), F);
  if (auto g = strip("group_algebra")) return group_algebra<K>(group_by_name(*g), F);
  if (s == "sweedler_h4" || s == "h4" || s == "H4") return sweedler_h4<K>(F);
  std::optional<std::string> arg = strip("taft");
  if (!arg && s.rfind("taft", 0) == 0) arg = s.substr(4);
  if (arg) {
    if (arg->empty() || !std::all_of(arg->begin(), arg->end(), ::isdigit)) throw InputError("taft needs an integer order");
    return taft_algebra<K>(std::stoul(*arg), F);
  }
  throw InputError("unknown builtin '" + name + "'");
}

}  // namespace hopfkit
