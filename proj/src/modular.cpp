#include "picard3/modular.hpp"

#include <set>
#include <stdexcept>

namespace picard3 {

ModularElement::ModularElement(const Mat2& m) : m_(m.normalized()) {
  if (m.det() != 1 && m.det() != -1) throw std::invalid_argument("modular element needs det +-1: " + to_string(m));
}

const char* kind_name(SubgroupKind kind) {
  switch (kind) {
    case SubgroupKind::Pi_n: return "Pi_n";
    case SubgroupKind::Gamma_n: return "Gamma_n";
    case SubgroupKind::B_kl_units: return "B_kl_units";
    case SubgroupKind::G_n: return "G_n";
    case SubgroupKind::Gamma0_k: return "Gamma0_k";
    case SubgroupKind::Gamma0_plus_l: return "Gamma0_plus_l";
  }
  return "?";
}

SubgroupKind parse_kind(const std::string& name) {
  for (auto k : {SubgroupKind::Pi_n, SubgroupKind::Gamma_n, SubgroupKind::B_kl_units, SubgroupKind::G_n,
                 SubgroupKind::Gamma0_k, SubgroupKind::Gamma0_plus_l})
    if (name == kind_name(k)) return k;
  throw std::invalid_argument("unknown subgroup kind: " + name);
}

void SubgroupSpec::validate() const {
  if (kind == SubgroupKind::B_kl_units) {
    if (n == 0 || l == 0) throw std::invalid_argument("B_kl_units needs nonzero k and l");
  } else if (kind == SubgroupKind::Gamma0_plus_l) {
    if (l < 1) throw std::invalid_argument("Gamma0_plus_l needs l >= 1");
  } else if (n < 1) {
    throw std::invalid_argument(std::string(kind_name(kind)) + " needs level >= 1");
  }
}

namespace {

bool congruent(std::int64_t x, std::int64_t y, std::int64_t n) { return mod_floor(x - y, n) == 0; }

bool is_pm_identity_mod(const Mat2& m, std::int64_t n) {
  if (!congruent(m.b, 0, n) || !congruent(m.c, 0, n) || !congruent(m.a, m.d, n)) return false;
  return congruent(m.a, 1, n) || congruent(m.a, -1, n);
}

}  // namespace

bool member(const ModularElement& x, const SubgroupSpec& spec) {
  spec.validate();
  const Mat2& m = x.matrix();
  switch (spec.kind) {
    case SubgroupKind::Pi_n: return is_pm_identity_mod(m, spec.n);
    case SubgroupKind::Gamma_n: return m.det() == 1 && is_pm_identity_mod(m, spec.n);
    case SubgroupKind::G_n:
      return congruent(m.b, 0, spec.n) && congruent(m.c, 0, spec.n) && congruent(m.a, m.d, spec.n);
    case SubgroupKind::Gamma0_k: return m.det() == 1 && congruent(m.c, 0, spec.n);
    case SubgroupKind::B_kl_units:
      return congruent(m.a, m.d, spec.n) && congruent(m.c, 0, spec.n) && congruent(m.b, 0, spec.l);
    case SubgroupKind::Gamma0_plus_l: return m.det() == 1 && congruent(m.c, 0, spec.l);
  }
  return false;
}

bool ScaledElement::valid(std::int64_t l) const {
  if (lp <= 0 || l % lp != 0) return false;
  return a0 * d0 * lp - b0 * c0 * (l / lp) == 1;
}

ScaledElement ScaledElement::times(const ScaledElement& o, std::int64_t l) const {
  if (!valid(l) || !o.valid(l)) throw std::invalid_argument("scaled element is not in Gamma0^+(l)");
  const Int m1(l / lp), m2(l / o.lp);
  // Unscaled matrices; the product carries the factor sqrt(lp * o.lp) = g sqrt(lpp).
  const Rat x11(a0), x12 = frac(b0, Int(lp)), x21(c0 * m1), x22(d0);
  const Rat y11(o.a0), y12 = frac(o.b0, Int(o.lp)), y21(o.c0 * m2), y22(o.d0);
  const std::int64_t g = gcd_i64(lp, o.lp);
  const std::int64_t lpp = (lp / g) * (o.lp / g);
  const Rat p11 = g * (x11 * y11 + x12 * y21), p12 = g * (x11 * y12 + x12 * y22);
  const Rat p21 = g * (x21 * y11 + x22 * y21), p22 = g * (x21 * y12 + x22 * y22);
  const Rat a = p11, b = p12 * lpp, c = p21 / (l / lpp), d = p22;
  for (const Rat* v : {&a, &b, &c, &d})
    if (!is_integral(*v)) throw std::logic_error("product left Gamma0^+(l)");
  ScaledElement r{lpp, a.get_num(), b.get_num(), c.get_num(), d.get_num()};
  const Int& first = r.a0 != 0 ? r.a0 : r.b0 != 0 ? r.b0 : r.c0 != 0 ? r.c0 : r.d0;
  if (first < 0) {
    r.a0 = -r.a0;
    r.b0 = -r.b0;
    r.c0 = -r.c0;
    r.d0 = -r.d0;
  }
  if (!r.valid(l)) throw std::logic_error("product violates Nr = 1");
  return r;
}

std::int64_t ScaledElement::radical() const {
  std::int64_t r = 1;
  for (auto p : prime_divisors(lp)) r *= p;
  return r;
}

bool member(const ScaledElement& x, const SubgroupSpec& spec) {
  if (spec.kind != SubgroupKind::Gamma0_plus_l) throw std::invalid_argument("scaled elements belong to Gamma0_plus_l");
  spec.validate();
  if (x.lp <= 0 || spec.l % x.lp != 0) throw std::invalid_argument("malformed scaled element: l' must divide l");
  return x.valid(spec.l);
}

ScaledElement atkin_lehner(std::int64_t lp, std::int64_t l) {
  if (lp <= 0 || l % lp != 0 || gcd_i64(lp, l / lp) != 1)
    throw std::invalid_argument("Atkin-Lehner needs l' || l");
  Int g, x, y;
  mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), Int(lp).get_mpz_t(), Int(l / lp).get_mpz_t());
  // x lp + y (l/lp) = 1
  return ScaledElement{lp, x, -y, 1, 1};
}

ScaledElement gamma0_element(const Mat2& m, std::int64_t l) {
  if (m.det() != 1 || m.c % l != 0) throw std::invalid_argument("matrix is not in Gamma0(l)");
  return ScaledElement{1, m.a, m.b, m.c / l, m.d};
}

std::int64_t index_gamma_n(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("level must be >= 1");
  if (n == 1) return 1;
  if (n == 2) return 6;
  std::int64_t v = n * n * n;
  for (auto p : prime_divisors(n)) v = v / (p * p) * (p * p - 1);
  return v / 2;
}

std::int64_t order_psl2_zn(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("level must be >= 1");
  std::int64_t count = 0;
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c)
        for (std::int64_t d = 0; d < n; ++d)
          if (mod_floor(a * d - b * c - 1, n) == 0) ++count;
  return n > 2 ? count / 2 : count;
}

std::int64_t delta_n(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n <= 2) return 1;
  std::int64_t count = 0;
  for (std::int64_t a = 1; a < n; ++a) {
    if (gcd_i64(a, n) != 1) continue;
    std::int64_t sq = a * a % n;
    if (sq == 1 || sq == n - 1) ++count;
  }
  return count / 2;
}

std::int64_t index_pi_G_n(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n == 1) return 1;
  std::int64_t v = n * n * n;
  for (auto p : prime_divisors(n)) v = v / (p * p) * (p * p - 1);
  return v / delta_n(n);
}

std::int64_t index_pi_G_n_count(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  auto unit_det = [n](std::int64_t det) {
    std::int64_t r = mod_floor(det, n);
    return r == mod_floor(1, n) || r == mod_floor(-1, n);
  };
  std::int64_t matrices = 0;
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c)
        for (std::int64_t d = 0; d < n; ++d)
          if (unit_det(a * d - b * c)) ++matrices;
  std::int64_t scalars = 0;
  for (std::int64_t lam = 0; lam < n; ++lam)
    if (unit_det(lam * lam)) ++scalars;
  return matrices / scalars;
}

TorsionInfo is_torsion(const ModularElement& x) {
  const Mat2& m = x.matrix();
  const std::int64_t tr = m.trace();
  if (m.det() == 1) {
    if (m.is_scalar_identity()) return {true, 1};
    if (tr == 0) return {true, 2};
    if (tr == 1 || tr == -1) return {true, 3};
    return {false, 0};
  }
  if (tr == 0) return {true, 2};
  return {false, 0};
}

std::vector<ModularElement> torsion_search(const SubgroupSpec& spec, std::int64_t bound) {
  spec.validate();
  if (spec.kind == SubgroupKind::Gamma0_plus_l) throw std::invalid_argument("torsion search over scaled elements is not supported");
  std::set<ModularElement> found;
  auto consider = [&](std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
    if (c < -bound || c > bound) return;
    ModularElement x(Mat2{a, b, c, d});
    TorsionInfo t = is_torsion(x);
    if (t.finite && t.order > 1 && member(x, spec)) found.insert(x);
  };
  // Finite order forces trace in {-1, 0, 1}.
  for (std::int64_t a = -bound; a <= bound; ++a)
    for (std::int64_t tr = -1; tr <= 1; ++tr) {
      const std::int64_t d = tr - a;
      if (d < -bound || d > bound) continue;
      for (std::int64_t det : {1, -1}) {
        if (det == -1 && tr != 0) continue;
        for (std::int64_t b = -bound; b <= bound; ++b) {
          if (b == 0) {
            if (a * d != det) continue;
            for (std::int64_t c = -bound; c <= bound; ++c) consider(a, 0, c, d);
          } else {
            const std::int64_t num = a * d - det;
            if (num % b == 0) consider(a, b, num / b, d);
          }
        }
      }
    }
  return {found.begin(), found.end()};
}

std::int64_t free_rank(std::int64_t index_in_pi) {
  if (index_in_pi <= 0 || index_in_pi % 12 != 0)
    throw std::invalid_argument("index " + std::to_string(index_in_pi) + " is not divisible by 12");
  return index_in_pi / 12 + 1;
}

bool qr_minus_one(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  for (std::int64_t x = 0; x < n; ++x)
    if (mod_floor(x * x + 1, n) == 0) return true;
  return false;
}

namespace {

struct PeriodicExpansion {
  std::vector<Int> convergent_p;
  std::vector<Int> convergent_q;
  std::size_t period = 0;
};

// Continued fraction of (P0 + sqrt(D)) / Q0 with Q0 > 0 and Q0 | D - P0^2. The expansion is
// periodic from index 1; convergents are recorded through the end of the first period.
PeriodicExpansion expand(const Int& D, Int P, Int Q) {
  const Int root = sqrt(D);
  PeriodicExpansion out;
  Int p2(0), p1(1), q2(1), q1(0);
  std::vector<std::pair<Int, Int>> states;
  for (std::size_t k = 0;; ++k) {
    for (std::size_t s = 1; s < states.size(); ++s)
      if (states[s].first == P && states[s].second == Q) {
        out.period = k - s;
        return out;
      }
    states.emplace_back(P, Q);
    Int a;
    mpz_fdiv_q(a.get_mpz_t(), Int(P + root).get_mpz_t(), Q.get_mpz_t());
    Int p = a * p1 + p2, q = a * q1 + q2;
    p2 = p1;
    p1 = p;
    q2 = q1;
    q1 = q;
    out.convergent_p.push_back(p);
    out.convergent_q.push_back(q);
    P = a * Q - P;
    Q = (D - P * P) / Q;
  }
}

}  // namespace

std::optional<std::pair<Int, Int>> negative_pell(std::int64_t D) {
  if (D <= 0) throw std::invalid_argument("negative Pell needs D > 0");
  const Int d(D);
  if (mpz_perfect_square_p(d.get_mpz_t())) throw std::invalid_argument("negative Pell needs non-square D");
  std::optional<std::pair<Int, Int>> witness;
  if (D % 4 == 1) {
    // Units (x + y sqrt D)/2 of norm -1 from the expansion of (1 + sqrt D)/2.
    PeriodicExpansion e = expand(d, 1, 2);
    if (e.period % 2 == 0) return std::nullopt;
    const Int& p = e.convergent_p[e.period - 1];
    const Int& q = e.convergent_q[e.period - 1];
    witness = std::make_pair(Int(2 * p - q), q);
  } else {
    // x, y are even; reduce to X^2 - D' Y^2 = -1.
    const std::int64_t dd = D % 4 == 0 ? D / 4 : D;
    PeriodicExpansion e = expand(Int(dd), 0, 1);
    if (e.period % 2 == 0) return std::nullopt;
    const Int& p = e.convergent_p[e.period - 1];
    const Int& q = e.convergent_q[e.period - 1];
    witness = D % 4 == 0 ? std::make_pair(Int(2 * p), q) : std::make_pair(Int(2 * p), Int(2 * q));
  }
  const Int& x = witness->first;
  const Int& y = witness->second;
  if (x * x - d * y * y != -4) throw std::logic_error("negative Pell witness failed verification");
  return witness;
}

bool in_G_n(const BigMat2& m, std::int64_t n) {
  const Int det = m[0] * m[3] - m[1] * m[2];
  if (det != 1 && det != -1) return false;
  const Int N(n);
  return mod_floor(m[1], N) == 0 && mod_floor(m[2], N) == 0 && mod_floor(Int(m[0] - m[3]), N) == 0;
}

bool in_Gamma_n(const BigMat2& m, std::int64_t n) {
  const Int det = m[0] * m[3] - m[1] * m[2];
  if (det != 1 || !in_G_n(m, n)) return false;
  const Int N(n);
  return mod_floor(Int(m[0] - 1), N) == 0 || mod_floor(Int(m[0] + 1), N) == 0;
}

bool is_prime_power(std::int64_t n) { return n >= 2 && prime_divisors(n).size() == 1; }

PrimePowerEntry prime_power_generators(std::int64_t n) {
  if (!is_prime_power(n)) throw std::invalid_argument(std::to_string(n) + " is not a prime power");
  const std::int64_t p = prime_divisors(n).front();
  std::int64_t e = 0;
  for (std::int64_t m = n; m > 1; m /= p) ++e;
  PrimePowerEntry entry;
  entry.n = n;
  const std::string level = std::to_string(n);
  if (n == 2) {
    entry.description = "Pi(2) = <Gamma(2), [[1,0],[0,-1]]>";
    entry.extra_generator = BigMat2{1, 0, 0, -1};
  } else if (n == 4) {
    entry.description = "Gamma(4)";
  } else if (p == 2) {
    const Int h = Int(1) << (e - 1);  // 2^{e-1}
    BigMat2 g{1 + h, 2 * h, Int(1) << (2 * e - 3), 1 - h + h * h};
    entry.extra_generator = g;
    entry.description = "<Gamma(" + level + "), " + "[[" + g[0].get_str() + "," + g[1].get_str() + "],[" +
                        g[2].get_str() + "," + g[3].get_str() + "]]>";
  } else if (p % 4 == 3) {
    entry.description = "Gamma(" + level + ")";
  } else {
    std::int64_t a = 1;
    while (mod_floor(a * a + 1, n) != 0) ++a;
    Int pe(n), big_a(a), pow_2pe, pow_2pe_m1;
    mpz_pow_ui(pow_2pe.get_mpz_t(), big_a.get_mpz_t(), static_cast<unsigned long>(2 * n));
    mpz_pow_ui(pow_2pe_m1.get_mpz_t(), big_a.get_mpz_t(), static_cast<unsigned long>(2 * n - 1));
    entry.extra_generator = BigMat2{big_a, pe, Int((pow_2pe + 1) / pe), pow_2pe_m1};
    entry.description = "<Gamma(" + level + "), [[a," + level + "],[(a^" + std::to_string(2 * n) + "+1)/" + level +
                        ",a^" + std::to_string(2 * n - 1) + "]]> with a = " + std::to_string(a);
  }
  return entry;
}

}  // namespace picard3
