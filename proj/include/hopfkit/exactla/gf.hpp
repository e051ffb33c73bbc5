#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

namespace hopfkit {

// Tables for F_{p^k}. An element is encoded as sum c_i p^i where c_i are the
// coefficients of its residue polynomial in x modulo `modulus`.
struct GFContext {
  uint32_t p = 0, k = 0, q = 0;
  std::vector<uint32_t> modulus;  // k+1 coefficients, low degree first, monic
  std::vector<uint32_t> exp_table;  // 2(q-1) entries
  std::vector<uint32_t> log_table;  // q entries; log_table[0] unused
  std::vector<uint32_t> neg_table;

  static constexpr uint32_t kMaxOrder = 1u << 20;

  uint32_t add(uint32_t a, uint32_t b) const {
    if (k == 1) {
      uint32_t s = a + b;
      return s >= p ? s - p : s;
    }
    if (p == 2) return a ^ b;
    uint32_t r = 0, w = 1;
    while (a || b) {
      uint32_t d = a % p + b % p;
      if (d >= p) d -= p;
      r += d * w;
      w *= p;
      a /= p;
      b /= p;
    }
    return r;
  }
  uint32_t neg(uint32_t a) const { return neg_table[a]; }
  uint32_t mul(uint32_t a, uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_table[log_table[a] + log_table[b]];
  }
  uint32_t inv(uint32_t a) const {
    if (a == 0) throw std::domain_error("division by zero in finite field");
    return exp_table[(q - 1 - log_table[a]) % (q - 1)];
  }

  std::vector<uint32_t> digits(uint32_t a) const {
    std::vector<uint32_t> d(k);
    for (uint32_t i = 0; i < k; ++i) {
      d[i] = a % p;
      a /= p;
    }
    return d;
  }
  uint32_t encode(const std::vector<uint32_t>& d) const {
    uint32_t r = 0;
    for (size_t i = d.size(); i-- > 0;) r = r * p + d[i] % p;
    return r;
  }

  // Interned contexts live for the whole process so element pointers stay valid.
  static const GFContext* get(uint32_t p, uint32_t k) { return get(p, k, {}); }
  static const GFContext* get(uint32_t p, uint32_t k, const std::vector<uint32_t>& modulus_in) {
    static std::mutex mu;
    static std::map<std::tuple<uint32_t, uint32_t, std::vector<uint32_t>>, std::unique_ptr<GFContext>> registry;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p, k, modulus_in);
    auto it = registry.find(key);
    if (it != registry.end()) return it->second.get();
    auto ctx = build(p, k, modulus_in);
    const GFContext* raw = ctx.get();
    registry.emplace(key, std::move(ctx));
    return raw;
  }

  static bool is_prime(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) return false;
    return true;
  }

 private:
  // Multiply residues (digit vectors) modulo the monic modulus.
  static std::vector<uint32_t> polymulmod(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b,
                                          const std::vector<uint32_t>& mod, uint32_t p) {
    size_t k = mod.size() - 1;
    std::vector<uint64_t> prod(2 * k, 0);
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + uint64_t(a[i]) * b[j]) % p;
    for (size_t d = 2 * k - 1; d >= k; --d) {
      uint64_t c = prod[d];
      if (c == 0) continue;
      prod[d] = 0;
      for (size_t t = 0; t < k; ++t) prod[d - k + t] = (prod[d - k + t] + (p - c) * mod[t]) % p;
    }
    std::vector<uint32_t> r(k);
    for (size_t i = 0; i < k; ++i) r[i] = static_cast<uint32_t>(prod[i]);
    return r;
  }

  static std::vector<uint64_t> prime_factors(uint64_t n) {
    std::vector<uint64_t> f;
    for (uint64_t d = 2; d * d <= n; ++d)
      if (n % d == 0) {
        f.push_back(d);
        while (n % d == 0) n /= d;
      }
    if (n > 1) f.push_back(n);
    return f;
  }

  // Order of g in (F_p[x]/mod)^*, or 0 if g^(q-1) != 1.
  static bool has_full_order(const std::vector<uint32_t>& g, const std::vector<uint32_t>& mod, uint32_t p,
                             uint64_t q) {
    size_t k = mod.size() - 1;
    std::vector<uint32_t> one(k, 0);
    one[0] = 1;
    auto power = [&](uint64_t e) {
      std::vector<uint32_t> r = one, b = g;
      while (e) {
        if (e & 1) r = polymulmod(r, b, mod, p);
        b = polymulmod(b, b, mod, p);
        e >>= 1;
      }
      return r;
    };
    if (power(q - 1) != one) return false;
    for (uint64_t r : prime_factors(q - 1))
      if (power((q - 1) / r) == one) return false;
    return true;
  }

  static std::unique_ptr<GFContext> build(uint32_t p, uint32_t k, std::vector<uint32_t> modulus) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw std::invalid_argument("extension degree must be positive");
    uint64_t q = 1;
    for (uint32_t i = 0; i < k; ++i) {
      q *= p;
      if (q > kMaxOrder) throw std::invalid_argument("field order exceeds supported size 2^20");
    }
    auto ctx = std::make_unique<GFContext>();
    ctx->p = p;
    ctx->k = k;
    ctx->q = static_cast<uint32_t>(q);
    std::vector<uint32_t> x(k, 0);
    if (k == 1) {
      x[0] = 0;
    } else {
      x[1] = 1;
    }
    std::vector<uint32_t> generator;
    if (modulus.empty()) {
      // Least primitive monic polynomial in lexicographic order of (c_{k-1},...,c_0).
      if (k == 1) {
        modulus = {0, 1};
        for (uint32_t g = 1; g < p || p == 2; ++g) {
          if (p == 2) { generator = {1}; break; }
          if (has_full_order({g}, {0, 1}, p, q)) { generator = {g}; break; }
        }
        modulus = {static_cast<uint32_t>((p - generator[0]) % p), 1};
      } else {
        bool found = false;
        for (uint64_t code = 0; code < q && !found; ++code) {
          std::vector<uint32_t> mod(k + 1, 0);
          uint64_t c = code;
          for (uint32_t i = 0; i < k; ++i) {
            mod[k - 1 - i] = c % p;
            c /= p;
          }
          mod[k] = 1;
          if (mod[0] == 0) continue;
          if (has_full_order(x, mod, p, q)) {
            modulus = mod;
            generator = x;
            found = true;
          }
        }
        if (!found) throw std::logic_error("no primitive polynomial found");
      }
    } else {
      if (modulus.size() != k + 1 || modulus[k] != 1) throw std::invalid_argument("modulus must be monic of degree k");
      for (auto& c : modulus)
        if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
      // Find any generator; a generator exists iff the quotient ring is a field.
      for (uint64_t code = 1; code < q; ++code) {
        std::vector<uint32_t> g(k);
        uint64_t c = code;
        for (uint32_t i = 0; i < k; ++i) {
          g[i] = c % p;
          c /= p;
        }
        if (has_full_order(g, modulus, p, q)) {
          generator = g;
          break;
        }
      }
      if (generator.empty()) throw std::invalid_argument("modulus is not irreducible");
    }
    ctx->modulus = modulus;
    // With k == 1 the modulus is x - g, so the residue of x is the generator itself.
    ctx->exp_table.assign(2 * (q - 1), 0);
    ctx->log_table.assign(q, 0);
    std::vector<uint32_t> cur(k, 0);
    cur[0] = 1;
    for (uint64_t i = 0; i < q - 1; ++i) {
      uint32_t e = ctx->encode(cur);
      ctx->exp_table[i] = e;
      ctx->exp_table[i + q - 1] = e;
      ctx->log_table[e] = static_cast<uint32_t>(i);
      cur = polymulmod(cur, generator, modulus, p);
    }
    ctx->neg_table.assign(q, 0);
    for (uint32_t a = 0; a < q; ++a) {
      auto d = ctx->digits(a);
      for (auto& c : d) c = (p - c) % p;
      ctx->neg_table[a] = ctx->encode(d);
    }
    return ctx;
  }
};

class GFField;

// Element of a finite field. A null context is allowed only for zero.
class GF {
 public:
  using Field = GFField;

  GF() = default;
  GF(const GFContext* ctx, uint32_t v) : ctx_(v == 0 ? nullptr : ctx), v_(v) {}

  const GFContext* context() const { return ctx_; }
  uint32_t code() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  GF inverse() const { return GF(ctx_, ctx_ ? ctx_->inv(v_) : ctx_inv_fail()); }

  friend GF operator+(const GF& a, const GF& b) {
    if (a.v_ == 0) return b;
    if (b.v_ == 0) return a;
    return GF(a.ctx_, a.ctx_->add(a.v_, b.v_));
  }
  friend GF operator-(const GF& a, const GF& b) {
    if (b.v_ == 0) return a;
    const GFContext* c = b.ctx_;
    if (a.v_ == 0) return GF(c, c->neg(b.v_));
    return GF(c, c->add(a.v_, c->neg(b.v_)));
  }
  friend GF operator*(const GF& a, const GF& b) {
    if (a.v_ == 0 || b.v_ == 0) return GF();
    return GF(a.ctx_, a.ctx_->mul(a.v_, b.v_));
  }
  friend GF operator/(const GF& a, const GF& b) {
    if (b.v_ == 0) throw std::domain_error("division by zero in finite field");
    if (a.v_ == 0) return GF();
    return GF(a.ctx_, a.ctx_->mul(a.v_, b.ctx_->inv(b.v_)));
  }
  GF operator-() const { return v_ == 0 ? GF() : GF(ctx_, ctx_->neg(v_)); }
  GF& operator+=(const GF& o) { return *this = *this + o; }
  GF& operator-=(const GF& o) { return *this = *this - o; }
  GF& operator*=(const GF& o) { return *this = *this * o; }
  friend bool operator==(const GF& a, const GF& b) { return a.v_ == b.v_; }
  friend bool operator!=(const GF& a, const GF& b) { return a.v_ != b.v_; }

  std::string to_string() const {
    if (!ctx_ || ctx_->k == 1) return std::to_string(v_);
    auto d = ctx_->digits(v_);
    std::string s = "(";
    for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
  }
  friend std::ostream& operator<<(std::ostream& os, const GF& g) { return os << g.to_string(); }

 private:
  static uint32_t ctx_inv_fail() { throw std::domain_error("division by zero in finite field"); }
  const GFContext* ctx_ = nullptr;
  uint32_t v_ = 0;
};

class GFField {
 public:
  using Scalar = GF;

  GFField() = default;
  explicit GFField(const GFContext* ctx) : ctx_(ctx) {}
  GFField(uint32_t p, uint32_t k) : ctx_(GFContext::get(p, k)) {}

  const GFContext* context() const { return ctx_; }
  GF zero() const { return {}; }
  GF one() const { return GF(ctx_, 1); }
  GF from_int(long n) const {
    long p = ctx_->p;
    long r = ((n % p) + p) % p;
    return GF(ctx_, static_cast<uint32_t>(r));
  }
  int characteristic() const { return static_cast<int>(ctx_->p); }
  bool is_finite() const { return true; }
  uint64_t order() const { return ctx_->q; }
  uint32_t degree() const { return ctx_->k; }
  std::string name() const {
    return ctx_->k == 1 ? "F" + std::to_string(ctx_->p) : "F" + std::to_string(ctx_->p) + "^" + std::to_string(ctx_->k);
  }
  GF element(uint64_t index) const { return GF(ctx_, static_cast<uint32_t>(index % ctx_->q)); }

  // Accepts "c" for prime fields and "(c0,...,c_{k-1})" in general.
  std::optional<GF> parse(std::string_view text) const {
    std::string s;
    for (char c : text)
      if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) return std::nullopt;
    std::vector<long> coeffs;
    auto parse_int = [](const std::string& t, long& out) {
      if (t.empty()) return false;
      size_t i = (t[0] == '-') ? 1 : 0;
      if (i >= t.size()) return false;
      for (size_t j = i; j < t.size(); ++j)
        if (!std::isdigit(static_cast<unsigned char>(t[j]))) return false;
      if (t.size() > 12) return false;
      out = std::stol(t);
      return true;
    };
    if (s.front() == '(') {
      if (s.back() != ')') return std::nullopt;
      std::stringstream ss(s.substr(1, s.size() - 2));
      std::string item;
      while (std::getline(ss, item, ',')) {
        long v;
        if (!parse_int(item, v)) return std::nullopt;
        coeffs.push_back(v);
      }
      if (coeffs.size() != ctx_->k) return std::nullopt;
    } else {
      long v;
      if (!parse_int(s, v)) return std::nullopt;
      if (ctx_->k != 1) return std::nullopt;
      coeffs.push_back(v);
    }
    std::vector<uint32_t> d;
    long p = ctx_->p;
    for (long c : coeffs) d.push_back(static_cast<uint32_t>(((c % p) + p) % p));
    return GF(ctx_, ctx_->encode(d));
  }
  std::string format(const GF& g) const {
    if (ctx_->k == 1) return std::to_string(g.code());
    auto d = ctx_->digits(g.code());
    std::string s = "(";
    for (size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
  }

  // Embedding into a larger field of the same characteristic: evaluate the
  // residue polynomial at a root of this field's modulus inside `big`.
  std::vector<GF> embedding_into(const GFField& big) const {
    const GFContext* B = big.ctx_;
    if (B->p != ctx_->p || B->k % ctx_->k != 0) throw std::invalid_argument("no embedding between these fields");
    auto eval_mod = [&](GF y) {
      GF acc;
      for (size_t i = ctx_->modulus.size(); i-- > 0;) acc = acc * y + big.from_int(ctx_->modulus[i]);
      return acc;
    };
    GF beta;
    bool found = false;
    for (uint32_t c = 0; c < B->q && !found; ++c) {
      GF y(B, c);
      if (eval_mod(y).is_zero()) {
        beta = y;
        found = true;
      }
    }
    if (!found) throw std::logic_error("modulus has no root in extension");
    std::vector<GF> map(ctx_->q);
    for (uint32_t a = 0; a < ctx_->q; ++a) {
      auto d = ctx_->digits(a);
      GF acc;
      for (size_t i = d.size(); i-- > 0;) acc = acc * beta + big.from_int(d[i]);
      map[a] = acc;
    }
    return map;
  }

  friend bool operator==(const GFField& a, const GFField& b) { return a.ctx_ == b.ctx_; }
  friend bool operator!=(const GFField& a, const GFField& b) { return a.ctx_ != b.ctx_; }

 private:
  const GFContext* ctx_ = nullptr;
};

}  // namespace hopfkit
