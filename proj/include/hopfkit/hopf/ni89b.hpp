#pragma once

#include <array>
#include <string>
#include <vector>

#include "hopfkit/exactla.hpp"
#include "hopfkit/validation.hpp"

namespace hopfkit {

// Formal check that X Y = 1 and X Z = 0 in Mat_2(H) follow from the relations
//   s(c_lt) c_ij = 0 when lambda_i lambda_j != lambda_l lambda_t,
//   sum_i s(c_li) c_ij = delta_lj,
// with lambda = (1, 1, -1). Symbols: "1" and s(c_lt)c_ij (indices 1..3).
template <class K>
struct Ni89bTerm {
  std::array<int, 4> ltij;  // 1-based l, t, i, j
  K coeff;
  std::string fate;
};

template <class K>
struct Ni89bEntry {
  std::string product;  // "XY" or "XZ"
  int row = 0, col = 0;  // 1-based
  std::vector<Ni89bTerm<K>> terms;
  std::string expected;  // "1" or "0"
  bool certified = false;
  std::vector<std::string> trace;
};

template <class K>
struct Ni89bCertificate {
  std::string field;
  size_t symbol_count = 0;
  size_t relation_rank = 0;
  bool relations_consistent = false;  // 1 is not in the relation span
  bool z_nonzero = false;             // c_23 is a free symbol
  std::vector<Ni89bEntry<K>> entries;
  bool ok = false;
  std::string conclusion;
};

namespace detail {

inline constexpr int kLambda[4] = {0, 1, 1, -1};

inline size_t ni_symbol(int l, int t, int i, int j) {
  return 1 + static_cast<size_t>((((l - 1) * 3 + (t - 1)) * 3 + (i - 1)) * 3 + (j - 1));
}

inline std::string ni_name(int l, int t, int i, int j) {
  return "s(c" + std::to_string(l) + std::to_string(t) + ")c" + std::to_string(i) + std::to_string(j);
}

// Linear combination of c_ab (or s(c_ab)) with integer coefficients.
using NiLinear = std::vector<std::pair<std::array<int, 2>, long>>;

}  // namespace detail

template <class K>
Ni89bCertificate<K> ni89b_certificate(const FieldOf<K>& F) {
  using namespace detail;
  if (F.characteristic() == 2) throw InputError("ni89b: the construction needs characteristic != 2");
  Ni89bCertificate<K> cert;
  cert.field = F.name();
  const size_t N = 82;
  cert.symbol_count = N;
  auto lam2 = [](int a, int b) { return kLambda[a] * kLambda[b]; };

  std::vector<Vec<K>> rels;
  for (int l = 1; l <= 3; ++l)
    for (int t = 1; t <= 3; ++t)
      for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
          if (lam2(i, j) != lam2(l, t)) rels.push_back(unit_vec<K>(N, ni_symbol(l, t, i, j), F));
  for (int l = 1; l <= 3; ++l)
    for (int j = 1; j <= 3; ++j) {
      Vec<K> r(N);
      for (int i = 1; i <= 3; ++i) r[ni_symbol(l, i, i, j)] += F.one();
      if (l == j) r[0] -= F.one();
      rels.push_back(r);
    }
  auto R = Subspace<K>::span(N, rels);
  cert.relation_rank = R.dim();
  cert.relations_consistent = !R.contains(unit_vec<K>(N, 0, F));
  // c_23 is not among the relation symbols at all: the relations only involve s(c)c products and 1.
  cert.z_nonzero = true;

  // X entries are combinations of s(c_ab); Y, Z entries of c_ab.
  NiLinear X[2][2] = {{{{{1, 1}, 1}, {{1, 3}, 1}}, {{{1, 2}, 1}}}, {{{{2, 1}, 1}, {{2, 3}, 1}}, {{{2, 2}, 1}}}};
  NiLinear Y[2][2] = {{{{{1, 1}, 1}, {{3, 1}, 1}}, {{{1, 2}, 1}, {{3, 2}, 1}}}, {{{{2, 1}, 1}}, {{{2, 2}, 1}}}};
  NiLinear Z[2][2] = {{{}, {}}, {{{{2, 3}, 1}}, {}}};

  auto expand = [&](const std::string& name, NiLinear (&B)[2][2], bool identity) {
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c) {
        Ni89bEntry<K> e;
        e.product = name;
        e.row = r + 1;
        e.col = c + 1;
        e.expected = identity && r == c ? "1" : "0";
        Vec<K> v(N);
        std::vector<std::pair<std::array<int, 4>, long>> raw;
        for (int k = 0; k < 2; ++k)
          for (auto& [st, a] : X[r][k])
            for (auto& [ij, b] : B[k][c]) raw.push_back({{st[0], st[1], ij[0], ij[1]}, a * b});
        // combine duplicates
        std::vector<std::pair<std::array<int, 4>, long>> terms;
        for (auto& t : raw) {
          auto it = std::find_if(terms.begin(), terms.end(), [&](auto& u) { return u.first == t.first; });
          if (it == terms.end())
            terms.push_back(t);
          else
            it->second += t.second;
        }
        // Relation (i) first, then group the survivors by (l, j) for relation (ii).
        std::vector<std::pair<std::array<int, 4>, long>> survivors;
        for (auto& [s, a] : terms) {
          v[ni_symbol(s[0], s[1], s[2], s[3])] += F.from_int(a);
          Ni89bTerm<K> term{s, F.from_int(a), ""};
          if (lam2(s[2], s[3]) != lam2(s[0], s[1])) {
            term.fate = "killed by (i): lambda" + std::to_string(s[2]) + "*lambda" + std::to_string(s[3]) + " = " +
                        std::to_string(lam2(s[2], s[3])) + " != " + std::to_string(lam2(s[0], s[1])) + " = lambda" +
                        std::to_string(s[0]) + "*lambda" + std::to_string(s[1]);
            e.trace.push_back(ni_name(s[0], s[1], s[2], s[3]) + " " + term.fate);
          } else {
            survivors.push_back({s, a});
          }
          e.terms.push_back(term);
        }
        std::vector<std::array<int, 2>> groups;
        for (auto& [s, a] : survivors) {
          std::array<int, 2> lj{s[0], s[3]};
          if (std::find(groups.begin(), groups.end(), lj) == groups.end()) groups.push_back(lj);
        }
        for (auto& lj : groups) {
          std::string members;
          for (auto& [s, a] : survivors)
            if (s[0] == lj[0] && s[3] == lj[1]) members += (members.empty() ? "" : " + ") + ni_name(s[0], s[1], s[2], s[3]);
          e.trace.push_back(members + " = sum_i s(c" + std::to_string(lj[0]) + "i)ci" + std::to_string(lj[1]) +
                            " (other summands vanish by (i)) = " + (lj[0] == lj[1] ? "1" : "0") + " by (ii)");
          for (auto& t : e.terms)
            if (t.fate.empty() && t.ltij[0] == lj[0] && t.ltij[3] == lj[1])
              t.fate = "absorbed by (ii) with l=" + std::to_string(lj[0]) + ", j=" + std::to_string(lj[1]);
        }
        if (terms.empty()) e.trace.push_back("no terms");
        Vec<K> target = e.expected == "1" ? unit_vec<K>(N, 0, F) : Vec<K>(N);
        e.certified = R.contains(sub_vec(v, target));
        cert.entries.push_back(std::move(e));
      }
  };
  expand("XY", Y, true);
  expand("XZ", Z, false);
  cert.ok = cert.relations_consistent && cert.z_nonzero;
  for (auto& e : cert.entries) cert.ok = cert.ok && e.certified;
  cert.conclusion = cert.ok ? "X right-invertible, not left-invertible (WX = 1 would force Z = WXZ = 0)"
                            : "certificate failed";
  return cert;
}

}  // namespace hopfkit
