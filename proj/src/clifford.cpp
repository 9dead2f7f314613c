#include "picard3/clifford.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace picard3 {

GramParams GramParams::from_gram(const IntMatrix& q) {
  if (q.rows() != 3 || q.cols() != 3) throw std::invalid_argument("Clifford algebra needs a rank-3 Gram matrix");
  if (!q.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
  for (std::size_t i = 0; i < 3; ++i)
    if (!mpz_even_p(q(i, i).get_mpz_t())) throw std::invalid_argument("lattice is not even");
  return GramParams{q(0, 0) / 2, q(1, 1) / 2, q(2, 2) / 2, q(1, 2), q(0, 2), q(0, 1)};
}

GramParams GramParams::family(const Int& k, const Int& l) { return GramParams{0, l, 0, 0, k, 0}; }

IntMatrix GramParams::gram() const { return IntMatrix{{2 * a, u, t}, {u, 2 * b, s}, {t, s, 2 * c}}; }

Int GramParams::disc() const { return 2 * (4 * a * b * c + s * t * u - a * s * s - b * t * t - c * u * u); }

Rat GramParams::d0() const { return frac(disc(), 8); }

namespace {


bool odd_degree(unsigned mask) { return __builtin_popcount(mask) % 2 == 1; }

std::vector<int> word_of(unsigned mask) {
  std::vector<int> w;
  for (int i = 0; i < 3; ++i)
    if (mask & (1u << i)) w.push_back(i + 1);
  return w;
}

// Rewrites a word into ascending normal form using E_i E_i = Q_ii/2 and E_i E_j = Q_ij - E_j E_i.
void reduce_word(const IntMatrix& q, std::vector<int> w, const Rat& coeff, CliffordElement& out) {
  if (coeff == 0) return;
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    int i = w[p], j = w[p + 1];
    if (i < j) continue;
    std::vector<int> shorter(w.begin(), w.begin() + p);
    shorter.insert(shorter.end(), w.begin() + p + 2, w.end());
    if (i == j) {
      reduce_word(q, shorter, coeff * frac(q(i - 1, i - 1), 2), out);
    } else {
      reduce_word(q, shorter, coeff * q(i - 1, j - 1), out);
      std::swap(w[p], w[p + 1]);
      reduce_word(q, w, -coeff, out);
    }
    return;
  }
  unsigned mask = 0;
  for (int i : w) mask |= 1u << (i - 1);
  out[mask] += coeff;
}

}  // namespace

CliffordElement CliffordElement::scalar(const Rat& x) {
  CliffordElement e;
  e[0] = x;
  return e;
}

CliffordElement CliffordElement::basis(unsigned mask) {
  if (mask > 7) throw std::invalid_argument("basis mask out of range");
  CliffordElement e;
  e[mask] = 1;
  return e;
}

CliffordElement CliffordElement::generator(int i) {
  if (i < 1 || i > 3) throw std::invalid_argument("generator index out of range");
  return basis(1u << (i - 1));
}

bool CliffordElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return c == 0; });
}

bool CliffordElement::is_even() const {
  for (unsigned m = 0; m < 8; ++m)
    if (odd_degree(m) && coeffs_[m] != 0) return false;
  return true;
}

bool CliffordElement::is_odd() const {
  for (unsigned m = 0; m < 8; ++m)
    if (!odd_degree(m) && coeffs_[m] != 0) return false;
  return true;
}

bool CliffordElement::is_scalar() const {
  for (unsigned m = 1; m < 8; ++m)
    if (coeffs_[m] != 0) return false;
  return true;
}

bool CliffordElement::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rat& c) { return picard3::is_integral(c); });
}

CliffordElement operator+(const CliffordElement& x, const CliffordElement& y) {
  CliffordElement z;
  for (unsigned m = 0; m < 8; ++m) z[m] = x[m] + y[m];
  return z;
}

CliffordElement operator-(const CliffordElement& x, const CliffordElement& y) {
  CliffordElement z;
  for (unsigned m = 0; m < 8; ++m) z[m] = x[m] - y[m];
  return z;
}

CliffordElement operator-(const CliffordElement& x) {
  CliffordElement z;
  for (unsigned m = 0; m < 8; ++m) z[m] = -x[m];
  return z;
}

CliffordElement operator*(const Rat& s, const CliffordElement& x) {
  CliffordElement z;
  for (unsigned m = 0; m < 8; ++m) z[m] = s * x[m];
  return z;
}

std::string subset_key(unsigned mask) {
  std::string k;
  for (int i = 0; i < 3; ++i)
    if (mask & (1u << i)) k.push_back(static_cast<char>('1' + i));
  return k;
}

unsigned subset_mask(const std::string& key) {
  unsigned mask = 0;
  char prev = '0';
  for (char ch : key) {
    if (ch < '1' || ch > '3' || ch <= prev) throw std::invalid_argument("invalid subset key: \"" + key + "\"");
    mask |= 1u << (ch - '1');
    prev = ch;
  }
  return mask;
}

bool EvenCliffordElement::is_integral() const {
  return std::all_of(x.begin(), x.end(), [](const Rat& c) { return picard3::is_integral(c); });
}

bool OddCliffordElement::is_integral() const {
  return std::all_of(x.begin(), x.end(), [](const Rat& c) { return picard3::is_integral(c); });
}

CliffordAlgebra::CliffordAlgebra(const GramParams& p) : p_(p) {
  if (p_.degenerate()) throw std::invalid_argument("degenerate Gram parameters");
  const IntMatrix q = p_.gram();
  for (unsigned m1 = 0; m1 < 8; ++m1) {
    for (unsigned m2 = 0; m2 < 8; ++m2) {
      std::vector<int> w = word_of(m1);
      std::vector<int> w2 = word_of(m2);
      w.insert(w.end(), w2.begin(), w2.end());
      reduce_word(q, w, Rat(1), table_[m1][m2]);
    }
    std::vector<int> w = word_of(m1);
    std::reverse(w.begin(), w.end());
    reduce_word(q, w, Rat(1), reversed_[m1]);
  }
  even_basis_[0] = CliffordElement::scalar(1);
  even_basis_[1] = word({2, 3});
  even_basis_[2] = word({3, 1});
  even_basis_[3] = word({1, 2});
}

Int CliffordAlgebra::form(int i, int j) const { return p_.gram()(i - 1, j - 1); }

CliffordElement CliffordAlgebra::mul(const CliffordElement& x, const CliffordElement& y) const {
  CliffordElement z;
  for (unsigned m1 = 0; m1 < 8; ++m1) {
    if (x[m1] == 0) continue;
    for (unsigned m2 = 0; m2 < 8; ++m2) {
      if (y[m2] == 0) continue;
      Rat c = x[m1] * y[m2];
      const CliffordElement& t = table_[m1][m2];
      for (unsigned m = 0; m < 8; ++m)
        if (t[m] != 0) z[m] += c * t[m];
    }
  }
  return z;
}

CliffordElement CliffordAlgebra::word(std::initializer_list<int> indices) const {
  CliffordElement out;
  std::vector<int> w(indices);
  for (int i : w)
    if (i < 1 || i > 3) throw std::invalid_argument("generator index out of range");
  reduce_word(p_.gram(), w, Rat(1), out);
  return out;
}

CliffordElement CliffordAlgebra::reversal(const CliffordElement& x) const {
  CliffordElement z;
  for (unsigned m = 0; m < 8; ++m)
    if (x[m] != 0) z = z + x[m] * reversed_[m];
  return z;
}

Rat CliffordAlgebra::trace(const CliffordElement& x) const {
  if (!x.is_even()) throw std::invalid_argument("trace is defined on the even part");
  CliffordElement t = x + reversal(x);
  if (!t.is_scalar()) throw std::logic_error("x + x* is not scalar");
  return t[0];
}

Rat CliffordAlgebra::norm(const CliffordElement& x) const {
  if (!x.is_even() && !x.is_odd()) throw std::invalid_argument("norm of a mixed-grade element");
  CliffordElement n = mul(x, reversal(x));
  if (!n.is_scalar()) throw std::logic_error("x x* is not scalar");
  return n[0];
}

CliffordElement CliffordAlgebra::from_even(const EvenCliffordElement& x) const {
  CliffordElement z;
  for (int i = 0; i < 4; ++i)
    if (x.x[i] != 0) z = z + x.x[i] * even_basis_[i];
  return z;
}

EvenCliffordElement CliffordAlgebra::to_even(const CliffordElement& z) const {
  if (!z.is_even()) throw std::invalid_argument("element has odd components");
  // z = x0 + x1 E2E3 + x2 (t - E1E3) + x3 E1E2
  EvenCliffordElement x;
  x.x[1] = z[0b110];
  x.x[2] = -z[0b101];
  x.x[3] = z[0b011];
  x.x[0] = z[0] - p_.t * x.x[2];
  return x;
}

CliffordElement CliffordAlgebra::from_odd(const OddCliffordElement& x) {
  CliffordElement z;
  z[0b111] = x.x[0];
  z[0b001] = x.x[1];
  z[0b010] = x.x[2];
  z[0b100] = x.x[3];
  return z;
}

OddCliffordElement CliffordAlgebra::to_odd(const CliffordElement& z) {
  if (!z.is_odd()) throw std::invalid_argument("element has even components");
  OddCliffordElement x;
  x.x[0] = z[0b111];
  x.x[1] = z[0b001];
  x.x[2] = z[0b010];
  x.x[3] = z[0b100];
  return x;
}

RatMatrix CliffordAlgebra::left_matrix(const EvenCliffordElement& x) const {
  CliffordElement xf = from_even(x);
  RatMatrix m(4, 4);
  for (int j = 0; j < 4; ++j) {
    EvenCliffordElement col = to_even(mul(xf, even_basis_[j]));
    for (int i = 0; i < 4; ++i) m(i, j) = col.x[i];
  }
  return m;
}

RatMatrix CliffordAlgebra::right_odd_matrix(const CliffordElement& y) const {
  if (!y.is_odd()) throw std::invalid_argument("right multiplier must be odd");
  RatMatrix m(4, 4);
  for (int j = 0; j < 4; ++j) {
    OddCliffordElement col = to_odd(mul(even_basis_[j], y));
    for (int i = 0; i < 4; ++i) m(i, j) = col.x[i];
  }
  return m;
}

CliffordElement CliffordAlgebra::element_E() const {
  CliffordElement e = CliffordElement::basis(0b111);
  e[0b001] = frac(-p_.s, 2);
  e[0b010] = frac(p_.t, 2);
  e[0b100] = frac(-p_.u, 2);
  return e;
}

EvenCliffordElement CliffordAlgebra::tilde_e(int i) const {
  if (i < 0 || i > 3) throw std::invalid_argument("tilde_e index out of range");
  EvenCliffordElement x;
  x.x[i] = 1;
  if (i == 0) return x;
  x.x[0] = -trace(even_basis_[i]) / 2;
  return x;
}

CliffordElement CliffordAlgebra::v_dot_E(const RatVector& v) const {
  if (v.size() != 3) throw std::invalid_argument("lattice vector must have 3 coordinates");
  CliffordElement x;
  for (int i = 0; i < 3; ++i) x[1u << i] = v[i];
  return mul(x, element_E());
}

Rat CliffordAlgebra::pairing_E(const CliffordElement& x, const CliffordElement& y) const {
  return mul(x, reversal(y))[0b111];
}

Rat CliffordAlgebra::form_B(const EvenCliffordElement& x, const EvenCliffordElement& y) const {
  return trace(mul(from_even(x), reversal(from_even(y)))) / 2;
}

RatMatrix CliffordAlgebra::odd_gram(OddBasis basis) const {
  std::array<CliffordElement, 4> f{CliffordElement::basis(0b111), CliffordElement::generator(1),
                                   CliffordElement::generator(2), CliffordElement::generator(3)};
  if (basis == OddBasis::dual) {
    f[0] = -CliffordElement::basis(0b111);
    f[0][0b010] = -p_.t;
  }
  RatMatrix g(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) g(i, j) = (norm(f[i] + f[j]) - norm(f[i]) - norm(f[j])) / 2;
  return g;
}

CliffordElement clifford_mul(const CliffordElement& x, const CliffordElement& y, const GramParams& p) {
  return CliffordAlgebra(p).mul(x, y);
}

std::array<IntMatrix, 3> phi_generators(const GramParams& p) {
  const Int &a = p.a, &b = p.b, &c = p.c, &s = p.s, &t = p.t, &u = p.u;
  IntMatrix m1{{0, -b * c, c * u, -s * u}, {1, s, 0, u}, {0, 0, 0, b}, {0, 0, -c, s}};
  IntMatrix m2{{0, -s * t, -a * c, a * s}, {0, t, 0, -a}, {1, s, t, 0}, {0, c, 0, 0}};
  IntMatrix m3{{0, b * t, -t * u, -a * b}, {0, 0, a, 0}, {0, -b, u, 0}, {1, 0, t, u}};
  return {m1, m2, m3};
}

RatMatrix phi_rep(const EvenCliffordElement& x, const GramParams& p) {
  auto gens = phi_generators(p);
  RatMatrix m = x.x[0] * RatMatrix::identity(4);
  for (int i = 0; i < 3; ++i) m = m + x.x[i + 1] * to_rational(gens[i]);
  return m;
}

RatMatrix gram_B(const GramParams& p) {
  const Int &a = p.a, &b = p.b, &c = p.c, &s = p.s, &t = p.t, &u = p.u;
  IntMatrix twice{{2, s, t, u},
                  {s, 2 * b * c, s * t - c * u, s * u - b * t},
                  {t, s * t - c * u, 2 * a * c, t * u - a * s},
                  {u, s * u - b * t, t * u - a * s, 2 * a * b}};
  return Rat(1, 2) * to_rational(twice);
}

CliffordElement element_E(const GramParams& p) { return CliffordAlgebra(p).element_E(); }

AlternatingE alternating_E(const CliffordAlgebra& alg) {
  AlternatingE out;
  const int perms[6][3] = {{1, 2, 3}, {2, 3, 1}, {3, 1, 2}, {1, 3, 2}, {3, 2, 1}, {2, 1, 3}};
  for (int k = 0; k < 6; ++k) {
    CliffordElement w = alg.word({perms[k][0], perms[k][1], perms[k][2]});
    out.E = k < 3 ? out.E + w : out.E - w;
  }
  out.E = Rat(1, 6) * out.E;
  // Complementary pairs (j, k) in cyclic order for each i.
  const int comp[3][2] = {{2, 3}, {3, 1}, {1, 2}};
  for (int i = 0; i < 3; ++i)
    out.hat_E[i] = Rat(1, 2) * (alg.word({comp[i][0], comp[i][1]}) - alg.word({comp[i][1], comp[i][0]}));
  out.consistent = true;
  for (int i = 1; i <= 3 && out.consistent; ++i) {
    CliffordElement lhs = alg.mul(CliffordElement::generator(i), out.E);
    CliffordElement rhs;
    for (int j = 1; j <= 3; ++j) rhs = rhs + frac(alg.form(i, j), 2) * out.hat_E[j - 1];
    out.consistent = lhs == rhs;
  }
  return out;
}

Int odd_norm_family(const Int& x1, const Int& x2, const Int& x3, const Int& x4, const Int& k, const Int& l) {
  return k * x1 * x3 + l * x2 * (x2 - k * x4);
}

}  // namespace picard3
