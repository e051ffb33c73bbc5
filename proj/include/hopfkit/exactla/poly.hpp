#pragma once

#include <optional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "hopfkit/exactla/field.hpp"

namespace hopfkit {

// Dense univariate polynomial, coefficients from low to high degree, no trailing zeros.
template <class K>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<K> c) : c_(std::move(c)) { trim(); }
  static Poly constant(const K& a) { return Poly(std::vector<K>{a}); }
  static Poly x_minus(const K& a, const FieldOf<K>& F) { return Poly(std::vector<K>{-a, F.one()}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const K& lead() const { return c_.back(); }
  K coeff(size_t i) const { return i < c_.size() ? c_[i] : K(); }
  const std::vector<K>& coeffs() const { return c_; }

  Poly monic() const {
    if (is_zero()) return *this;
    K inv = lead().inverse();
    std::vector<K> r(c_);
    for (auto& x : r) x = x * inv;
    return Poly(r);
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return Poly(r);
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    std::vector<K> r(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return Poly(r);
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<K> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return Poly(r);
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  // a = q b + r with deg r < deg b.
  static std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<K> r = a.c_;
    int db = b.degree();
    if (a.degree() < db) return {Poly(), a};
    std::vector<K> q(a.degree() - db + 1);
    K inv = b.lead().inverse();
    for (int d = a.degree(); d >= db; --d) {
      K c = r[d] * inv;
      q[d - db] = c;
      if (c.is_zero()) continue;
      for (int i = 0; i <= db; ++i) r[d - db + i] -= c * b.c_[i];
    }
    r.resize(db);
    return {Poly(q), Poly(r)};
  }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }

  Poly derivative(const FieldOf<K>& F) const {
    if (c_.size() <= 1) return Poly();
    std::vector<K> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = F.from_int(static_cast<long>(i)) * c_[i];
    return Poly(r);
  }

  K eval(const K& x) const {
    K acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      if (!s.empty()) s += " + ";
      s += "(" + c_[i].to_string() + ")";
      if (i > 0) s += i == 1 ? "x" : "x^" + std::to_string(i);
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<K> c_;
};

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

// Returns (g, u, v) with u a + v b = g monic.
template <class K>
std::tuple<Poly<K>, Poly<K>, Poly<K>> poly_xgcd(const Poly<K>& a, const Poly<K>& b, const FieldOf<K>& F) {
  Poly<K> r0 = a, r1 = b, s0 = Poly<K>::constant(F.one()), s1, t0, t1 = Poly<K>::constant(F.one());
  while (!r1.is_zero()) {
    auto [q, r] = Poly<K>::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    auto s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
    auto t = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  K inv = r0.lead().inverse();
  auto sc = Poly<K>::constant(inv);
  return {r0 * sc, s0 * sc, t0 * sc};
}

template <class K>
Poly<K> squarefree_part(const Poly<K>& f, const FieldOf<K>& F) {
  auto d = f.derivative(F);
  if (d.is_zero()) return f.monic();
  return (f / poly_gcd(f, d)).monic();
}

// Outcome of factoring a squarefree rational polynomial into monic factors.
struct RationalFactorization {
  std::vector<Poly<Rational>> irreducible;  // factors known to be irreducible
  std::vector<Poly<Rational>> unresolved;   // factors whose irreducibility is unknown (degree >= 5)
  bool complete() const { return unresolved.empty(); }
};

namespace detail {

// Divisors of |n| (n != 0) by trial division; nullopt if n is too large to factor quickly.
inline std::optional<std::vector<mpz_class>> divisors(mpz_class n) {
  if (n < 0) n = -n;
  std::vector<std::pair<mpz_class, int>> fac;
  mpz_class m = n;
  for (unsigned long p = 2; p < 200000 && m > 1; ++p) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      int e = 0;
      while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        m /= p;
        ++e;
      }
      fac.push_back({mpz_class(p), e});
    }
    if (mpz_class(p) * p > m) break;
  }
  if (m > 1) {
    if (mpz_probab_prime_p(m.get_mpz_t(), 30) == 0) return std::nullopt;
    fac.push_back({m, 1});
  }
  std::vector<mpz_class> ds{1};
  for (auto& [p, e] : fac) {
    size_t sz = ds.size();
    mpz_class pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
    }
  }
  return ds;
}

// Scale a rational polynomial to a primitive integer one.
inline std::vector<mpz_class> integer_primitive(const Poly<Rational>& f) {
  mpz_class l = 1;
  for (auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.value().get_den().get_mpz_t());
  std::vector<mpz_class> z;
  mpz_class g = 0;
  for (auto& c : f.coeffs()) {
    z.push_back(c.value().get_num() * (l / c.value().get_den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z.back().get_mpz_t());
  }
  if (g != 0)
    for (auto& x : z) x /= g;
  return z;
}

inline std::optional<Rational> find_rational_root(const Poly<Rational>& f, bool& gave_up) {
  if (f.coeff(0).is_zero()) return Rational(0);
  auto z = integer_primitive(f);
  auto dn = divisors(z.front());
  auto dd = divisors(z.back());
  if (!dn || !dd) {
    gave_up = true;
    return std::nullopt;
  }
  for (auto& p : *dn)
    for (auto& q : *dd)
      for (int s : {1, -1}) {
        Rational r(mpz_class(p * s), q);
        if (f.eval(r).is_zero()) return r;
      }
  return std::nullopt;
}

// Split a monic rational quartic without rational roots into two quadratics, if possible.
inline std::optional<std::pair<Poly<Rational>, Poly<Rational>>> split_quartic(const Poly<Rational>& f, bool& gave_up) {
  mpz_class D = 1;
  for (auto& c : f.coeffs()) mpz_lcm(D.get_mpz_t(), D.get_mpz_t(), c.value().get_den().get_mpz_t());
  // g(y) = D^4 f(y/D) is monic with integer coefficients.
  std::vector<mpz_class> g(5);
  mpz_class pw = 1;
  for (int i = 4; i >= 0; --i) {
    mpq_class v = f.coeff(i).value() * pw;
    g[i] = v.get_num();
    pw *= D;
  }
  auto ds = divisors(g[0]);
  if (!ds) {
    gave_up = true;
    return std::nullopt;
  }
  for (auto d : *ds)
    for (int s : {1, -1}) {
      mpz_class c = d * s, c2 = g[0] / c;
      std::vector<std::pair<mpz_class, mpz_class>> bs;
      if (c != c2) {
        mpz_class num = g[1] - g[3] * c, den = c2 - c;
        if (num % den != 0) continue;
        mpz_class b = num / den;
        bs.push_back({b, g[3] - b});
      } else {
        if (g[3] * c != g[1]) continue;
        mpz_class disc = g[3] * g[3] - 4 * (g[2] - 2 * c);
        if (disc < 0 || !mpz_perfect_square_p(disc.get_mpz_t())) continue;
        mpz_class r = sqrt(disc);
        if ((g[3] + r) % 2 != 0) continue;
        mpz_class b = (g[3] + r) / 2;
        bs.push_back({b, g[3] - b});
      }
      for (auto& [b, b2] : bs) {
        if (c + c2 + b * b2 != g[2]) continue;
        mpq_class Dq(D);
        Poly<Rational> p1({Rational(mpq_class(c / (Dq * Dq))), Rational(mpq_class(b / Dq)), Rational(1)});
        Poly<Rational> p2({Rational(mpq_class(c2 / (Dq * Dq))), Rational(mpq_class(b2 / Dq)), Rational(1)});
        if (p1 * p2 == f) return std::make_pair(p1, p2);
      }
    }
  return std::nullopt;
}

}  // namespace detail

// Factor a squarefree rational polynomial: rational roots, then quadratic
// splitting of quartics. Degree >= 5 remainders stay unresolved.
inline RationalFactorization factor_rational(const Poly<Rational>& f_in) {
  RationalFactorization out;
  Poly<Rational> f = f_in.monic();
  RationalField Q;
  bool gave_up = false;
  while (f.degree() >= 1) {
    auto r = detail::find_rational_root(f, gave_up);
    if (!r) break;
    auto lin = Poly<Rational>::x_minus(*r, Q);
    out.irreducible.push_back(lin);
    f = (f / lin).monic();
  }
  if (f.degree() <= 0) return out;
  if (gave_up) {
    out.unresolved.push_back(f);
    return out;
  }
  if (f.degree() <= 3) {
    out.irreducible.push_back(f);
    return out;
  }
  if (f.degree() == 4) {
    auto sp = detail::split_quartic(f, gave_up);
    if (sp) {
      out.irreducible.push_back(sp->first);
      out.irreducible.push_back(sp->second);
    } else if (gave_up) {
      out.unresolved.push_back(f);
    } else {
      out.irreducible.push_back(f);
    }
    return out;
  }
  out.unresolved.push_back(f);
  return out;
}

}  // namespace hopfkit
