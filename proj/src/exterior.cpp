#include "picard3/exterior.hpp"

#include <stdexcept>

namespace picard3 {

const std::array<std::array<int, 2>, 6>& w_basis_pairs() {
  static const std::array<std::array<int, 2>, 6> pairs{{{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}}};
  return pairs;
}

namespace {

// Sign of (i,j,k,l) as a permutation of (0,1,2,3); 0 on repeats.
int permutation_sign(std::array<int, 4> p) {
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (p[i] == p[j]) return 0;
      if (p[i] > p[j]) sign = -sign;
    }
  return sign;
}

const std::array<std::array<int, 6>, 6>& wedge_signs() {
  static const auto table = [] {
    std::array<std::array<int, 6>, 6> t{};
    const auto& pr = w_basis_pairs();
    for (int p = 0; p < 6; ++p)
      for (int q = 0; q < 6; ++q) t[p][q] = permutation_sign({pr[p][0], pr[p][1], pr[q][0], pr[q][1]});
    return t;
  }();
  return table;
}

std::array<Rat, 4> column4(const RatMatrix& m, std::size_t j) {
  return {m(0, j), m(1, j), m(2, j), m(3, j)};
}

WElement from_ints(std::initializer_list<Int> v) {
  WElement w;
  std::size_t i = 0;
  for (const auto& x : v) w[i++] = Rat(x);
  return w;
}

}  // namespace

Rat w_form(const WElement& w1, const WElement& w2) {
  const auto& sg = wedge_signs();
  Rat s(0);
  for (int p = 0; p < 6; ++p) {
    if (w1[p] == 0) continue;
    for (int q = 0; q < 6; ++q)
      if (sg[p][q] != 0) s += sg[p][q] * w1[p] * w2[q];
  }
  return s;
}

RatMatrix w_gram() {
  RatMatrix g(6, 6);
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) g(p, q) = wedge_signs()[p][q];
  return g;
}

WElement wedge(const std::array<Rat, 4>& x, const std::array<Rat, 4>& y) {
  WElement w;
  const auto& pr = w_basis_pairs();
  for (int p = 0; p < 6; ++p) {
    int c = pr[p][0], d = pr[p][1];
    w[p] = x[c] * y[d] - x[d] * y[c];
  }
  return w;
}

RatMatrix compound2(const RatMatrix& m) {
  if (m.rows() != 4 || m.cols() != 4) throw std::invalid_argument("compound2 needs a 4x4 matrix");
  RatMatrix c(6, 6);
  const auto& pr = w_basis_pairs();
  for (int q = 0; q < 6; ++q) {
    WElement col = wedge(column4(m, pr[q][0]), column4(m, pr[q][1]));
    for (int p = 0; p < 6; ++p) c(p, q) = col[p];
  }
  return c;
}

RatMatrix p_gram(const std::array<WElement, 3>& x, const std::array<WElement, 3>& y) {
  RatMatrix g(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) g(i, j) = w_form(x[i], y[j]);
  return g;
}

bool is_primitive(const std::array<WElement, 3>& rows) {
  RatMatrix m(3, 6);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 6; ++j) m(i, j) = rows[i][j];
  if (!is_integral(m)) return false;
  for (const auto& d : smith_normal_form(to_integral(m)).diagonal())
    if (d != 1) return false;
  return true;
}

PBasis p_bases(const GramParams& p) {
  if (p.degenerate()) throw std::invalid_argument("degenerate Gram parameters");
  const Int &a = p.a, &b = p.b, &c = p.c, &s = p.s, &t = p.t, &u = p.u;
  PBasis pb;
  pb.plus = {from_ints({a, u, 0, 1, 0, 0}), from_ints({0, b, s, 0, 1, 0}), from_ints({t, 0, c, 0, 0, 1})};
  pb.minus = {from_ints({a, 0, t, -1, 0, 0}), from_ints({u, b, 0, 0, -1, 0}), from_ints({0, s, c, 0, 0, -1})};
  const RatMatrix q = to_rational(p.gram());
  if (p_gram(pb.plus, pb.plus) != q) throw std::logic_error("Gram(w+) != Q_L");
  if (p_gram(pb.minus, pb.minus) != -q) throw std::logic_error("Gram(w-) != -Q_L");
  if (p_gram(pb.plus, pb.minus) != RatMatrix(3, 3)) throw std::logic_error("P+ and P- are not orthogonal");
  if (!is_primitive(pb.plus) || !is_primitive(pb.minus)) throw std::logic_error("P+- is not primitive");
  return pb;
}

PBasis p_bases_from_clifford(const CliffordAlgebra& alg) {
  const CliffordElement e = alg.element_E();
  std::array<std::array<Rat, 4>, 4> te;
  for (int i = 0; i < 4; ++i) te[i] = alg.tilde_e(i).x;
  PBasis pb;
  for (int i = 1; i <= 3; ++i) {
    int j = i % 3 + 1, k = j % 3 + 1;
    EvenCliffordElement ie = alg.to_even(alg.mul(CliffordElement::generator(i), e));
    WElement left = wedge({1, 0, 0, 0}, ie.x);
    WElement right = wedge(te[j], te[k]);
    for (int q = 0; q < 6; ++q) {
      pb.plus[i - 1][q] = left[q] + right[q];
      pb.minus[i - 1][q] = left[q] - right[q];
    }
  }
  return pb;
}

RatMatrix mu_matrix(const EvenCliffordElement& x, const EvenCliffordElement& y, const CliffordAlgebra& alg) {
  const CliffordElement xf = alg.from_even(x), yf = alg.from_even(y);
  RatMatrix m(4, 4);
  for (int j = 0; j < 4; ++j) {
    EvenCliffordElement ej;
    ej.x[j] = 1;
    EvenCliffordElement col = alg.to_even(alg.mul(alg.mul(xf, alg.from_even(ej)), yf));
    for (int i = 0; i < 4; ++i) m(i, j) = col.x[i];
  }
  return compound2(m);
}

namespace {

// Pair[p][q] = (e_a ^ e_b, F_c ^ F_d) as the 2x2 determinant of pairing_E values.
RatMatrix wedge_pairing(const CliffordAlgebra& alg) {
  std::array<std::array<Rat, 4>, 4> base;
  for (int i = 0; i < 4; ++i) {
    EvenCliffordElement ei;
    ei.x[i] = 1;
    CliffordElement e = alg.from_even(ei);
    for (int j = 0; j < 4; ++j) {
      OddCliffordElement fj;
      fj.x[j] = 1;
      base[i][j] = alg.pairing_E(e, CliffordAlgebra::from_odd(fj));
    }
  }
  const auto& pr = w_basis_pairs();
  RatMatrix m(6, 6);
  for (int p = 0; p < 6; ++p)
    for (int q = 0; q < 6; ++q) {
      int a = pr[p][0], b = pr[p][1], c = pr[q][0], d = pr[q][1];
      m(p, q) = base[a][c] * base[b][d] - base[a][d] * base[b][c];
    }
  return m;
}

}  // namespace

RatMatrix iota_matrix(const CliffordAlgebra& alg) {
  auto inv = inverse(wedge_pairing(alg));
  if (!inv) throw std::logic_error("pairing_E is degenerate on wedge^2");
  return *inv * w_gram();
}

RatMatrix mu_tilde(const OddCliffordElement& x, const CliffordAlgebra& alg) {
  const CliffordElement xf = CliffordAlgebra::from_odd(x);
  if (alg.norm(xf) == 0) throw std::domain_error("mu_tilde requires Nx != 0");
  RatMatrix gw_inv = *inverse(w_gram());
  return gw_inv * wedge_pairing(alg) * compound2(alg.right_odd_matrix(xf));
}

RatMatrix restrict_to(const RatMatrix& m, const std::array<WElement, 3>& basis) {
  RatMatrix b(6, 3);
  for (int i = 0; i < 3; ++i)
    for (int r = 0; r < 6; ++r) b(r, i) = basis[i][r];
  RatMatrix bt = b.transpose();
  auto normal_inv = inverse(bt * b);
  if (!normal_inv) throw std::invalid_argument("restriction basis is linearly dependent");
  RatMatrix image = m * b;
  RatMatrix coeffs = *normal_inv * bt * image;
  if (b * coeffs != image) throw std::domain_error("subspace is not invariant");
  return coeffs;
}

}  // namespace picard3
