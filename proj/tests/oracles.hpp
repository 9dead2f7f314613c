#pragma once

// Independent reference computations for the test suites. Plain int64/rational arithmetic and
// brute force only; nothing here calls into the library.

#include <gmpxx.h>

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

namespace oracle {

using i64 = std::int64_t;
using Mat3 = std::array<std::array<i64, 3>, 3>;

inline i64 det3(const Mat3& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

// Coefficients (c2, c1, c0) of t^3 + c2 t^2 + c1 t + c0 = det(t I - m).
inline std::array<i64, 3> char_poly3(const Mat3& m) {
  const i64 tr = m[0][0] + m[1][1] + m[2][2];
  const i64 minors = (m[0][0] * m[1][1] - m[0][1] * m[1][0]) + (m[0][0] * m[2][2] - m[0][2] * m[2][0]) +
                     (m[1][1] * m[2][2] - m[1][2] * m[2][1]);
  return {-tr, minors, -det3(m)};
}

inline i64 gcd(i64 a, i64 b) { return std::gcd(a < 0 ? -a : a, b < 0 ? -b : b); }

// Invariant factors of a 3x3 integer matrix from determinantal divisors d_i = gcd of i x i minors.
inline std::vector<i64> invariant_factors3(const Mat3& m) {
  i64 g1 = 0, g2 = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g1 = gcd(g1, m[i][j]);
  for (int r1 = 0; r1 < 3; ++r1)
    for (int r2 = r1 + 1; r2 < 3; ++r2)
      for (int c1 = 0; c1 < 3; ++c1)
        for (int c2 = c1 + 1; c2 < 3; ++c2) g2 = gcd(g2, m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]);
  const i64 g3 = det3(m) < 0 ? -det3(m) : det3(m);
  std::vector<i64> d{g1, g1 == 0 ? 0 : g2 / g1, g2 == 0 ? 0 : g3 / g2};
  return d;
}

// Finite quadratic module A = Q^{-1} Z^n / Z^n, elements as rational vectors reduced mod 1.
struct DiscriminantModule {
  using Vec = std::vector<mpq_class>;
  std::vector<std::vector<i64>> gram;
  std::vector<Vec> elements;  // elements[0] = 0
  std::map<Vec, std::size_t> index;

  static mpq_class frac_part(const mpq_class& x) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return x - fl;
  }
  static mpq_class mod2(const mpq_class& x) {
    mpq_class h = x / 2;
    return 2 * frac_part(h);
  }
  Vec reduce(Vec v) const {
    for (auto& x : v) x = frac_part(x);
    return v;
  }
  Vec add(const Vec& a, const Vec& b) const {
    Vec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return reduce(c);
  }
  mpq_class q(const Vec& v) const {
    mpq_class s = 0;
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) s += v[i] * gram[i][j] * v[j];
    return mod2(s);
  }
};

// Builds A(L) by closing the columns of Q^{-1} under addition.
inline DiscriminantModule discriminant_module(const std::vector<std::vector<i64>>& gram) {
  const std::size_t n = gram.size();
  // Rational inverse by Gauss-Jordan.
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = gram[i][j];
    a[i][n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (a[p][c] == 0) ++p;
    std::swap(a[p], a[c]);
    mpq_class inv = 1 / a[c][c];
    for (auto& x : a[c]) x *= inv;
    for (std::size_t r = 0; r < n; ++r)
      if (r != c && a[r][c] != 0) {
        mpq_class f = a[r][c];
        for (std::size_t j = 0; j < 2 * n; ++j) a[r][j] -= f * a[c][j];
      }
  }
  DiscriminantModule m;
  m.gram = gram;
  DiscriminantModule::Vec zero(n, 0);
  m.elements.push_back(zero);
  m.index[zero] = 0;
  std::vector<DiscriminantModule::Vec> cols;
  for (std::size_t j = 0; j < n; ++j) {
    DiscriminantModule::Vec v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = a[i][n + j];
    cols.push_back(m.reduce(v));
  }
  for (std::size_t head = 0; head < m.elements.size(); ++head)
    for (const auto& c : cols) {
      auto s = m.add(m.elements[head], c);
      if (!m.index.count(s)) {
        m.index[s] = m.elements.size();
        m.elements.push_back(s);
      }
    }
  return m;
}

// |O(q)| by brute force over images of a greedily chosen generating set, checking additivity,
// bijectivity and q on every element.
inline std::size_t orthogonal_group_order(const DiscriminantModule& m) {
  const std::size_t size = m.elements.size();
  // Greedy generators: each new one enlarges the generated subgroup.
  std::vector<std::size_t> gens;
  std::set<std::size_t> span{0};
  auto close = [&](std::set<std::size_t> s, std::size_t g) {
    std::vector<std::size_t> frontier(s.begin(), s.end());
    while (!frontier.empty()) {
      std::size_t x = frontier.back();
      frontier.pop_back();
      std::size_t y = m.index.at(m.add(m.elements[x], m.elements[g]));
      if (s.insert(y).second) frontier.push_back(y);
    }
    return s;
  };
  for (std::size_t e = 1; e < size && span.size() < size; ++e)
    if (!span.count(e)) {
      gens.push_back(e);
      for (auto g : gens) span = close(span, g);
    }
  std::size_t count = 0;
  std::vector<std::size_t> images(gens.size());
  std::function<void(std::size_t)> rec = [&](std::size_t j) {
    if (j == gens.size()) {
      std::vector<long> map(size, -1);
      map[0] = 0;
      std::vector<std::size_t> frontier{0};
      bool ok = true;
      while (!frontier.empty() && ok) {
        std::size_t x = frontier.back();
        frontier.pop_back();
        for (std::size_t g = 0; g < gens.size() && ok; ++g) {
          std::size_t y = m.index.at(m.add(m.elements[x], m.elements[gens[g]]));
          std::size_t fy = m.index.at(m.add(m.elements[static_cast<std::size_t>(map[x])], m.elements[images[g]]));
          if (map[y] == -1) {
            map[y] = static_cast<long>(fy);
            frontier.push_back(y);
          } else if (static_cast<std::size_t>(map[y]) != fy) {
            ok = false;
          }
        }
      }
      if (!ok) return;
      std::set<long> seen(map.begin(), map.end());
      if (seen.size() != size) return;
      for (std::size_t x = 0; x < size; ++x)
        if (m.q(m.elements[x]) != m.q(m.elements[static_cast<std::size_t>(map[x])])) return;
      ++count;
      return;
    }
    for (std::size_t e = 0; e < size; ++e) {
      if (m.q(m.elements[e]) != m.q(m.elements[gens[j]])) continue;
      images[j] = e;
      rec(j + 1);
    }
  };
  rec(0);
  return count;
}

// 2x2 integer matrix power, for finite-order adjudication.
using M2 = std::array<i64, 4>;
inline M2 mul2(const M2& x, const M2& y) {
  return {x[0] * y[0] + x[1] * y[2], x[0] * y[1] + x[1] * y[3], x[2] * y[0] + x[3] * y[2], x[2] * y[1] + x[3] * y[3]};
}
// Smallest k <= 12 with x^k = +-I, or 0.
inline int projective_order(const M2& x) {
  M2 p = x;
  for (int k = 1; k <= 12; ++k) {
    if (p[1] == 0 && p[2] == 0 && p[0] == p[3] && (p[0] == 1 || p[0] == -1)) return k;
    p = mul2(p, x);
  }
  return 0;
}

}  // namespace oracle
