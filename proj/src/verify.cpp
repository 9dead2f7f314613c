#include "picard3/verify.hpp"

#include "picard3/exterior.hpp"
#include "picard3/isometry.hpp"

#include <stdexcept>

namespace picard3 {

namespace {

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

class Recorder {
 public:
  explicit Recorder(std::string name) { result_.name = std::move(name); }
  void check(bool ok, const std::string& what) {
    ++result_.checks;
    if (ok) return;
    ++result_.failures;
    if (result_.messages.size() < 5) result_.messages.push_back(what);
  }
  SuiteResult take() { return std::move(result_); }

 private:
  SuiteResult result_;
};

std::string describe(const GramParams& p) {
  return "(a,b,c,s,t,u)=(" + p.a.get_str() + "," + p.b.get_str() + "," + p.c.get_str() + "," + p.s.get_str() + "," +
         p.t.get_str() + "," + p.u.get_str() + ")";
}

RatMatrix coords_of_generators(const std::array<CliffordElement, 3>& images) {
  RatMatrix m(3, 3);
  for (int i = 0; i < 3; ++i)
    for (int r = 0; r < 3; ++r) m(r, i) = images[i][1u << r];
  return m;
}

}  // namespace

GramParams random_gram_params(std::mt19937_64& rng, std::int64_t bound) {
  for (;;) {
    GramParams p{uniform(rng, -bound, bound), uniform(rng, -bound, bound), uniform(rng, -bound, bound),
                 uniform(rng, -bound, bound), uniform(rng, -bound, bound), uniform(rng, -bound, bound)};
    if (!p.degenerate()) return p;
  }
}

EvenCliffordElement random_even(std::mt19937_64& rng, std::int64_t bound) {
  EvenCliffordElement x;
  for (auto& c : x.x) c = Rat(uniform(rng, -bound, bound));
  return x;
}

OddCliffordElement random_odd(std::mt19937_64& rng, std::int64_t bound) {
  OddCliffordElement x;
  for (auto& c : x.x) c = Rat(uniform(rng, -bound, bound));
  return x;
}

SuiteResult verify_clifford(const VerifyOptions& options) {
  Recorder rec("clifford");
  std::mt19937_64 rng(options.seed);
  for (std::int64_t trial = 0; trial < options.trials; ++trial) {
    const GramParams p = random_gram_params(rng, options.gram_bound);
    const std::string tag = describe(p);
    const CliffordAlgebra alg(p);
    const CliffordElement e = alg.element_E();
    bool central = true;
    for (unsigned m = 0; m < 8; ++m) {
      CliffordElement b = CliffordElement::basis(m);
      central = central && alg.mul(e, b) == alg.mul(b, e);
    }
    rec.check(central, "E not central " + tag);
    rec.check(alg.reversal(e) == -e, "E* != -E " + tag);
    rec.check(alg.mul(e, e) == CliffordElement::scalar(-p.d0()), "E^2 != -D0 " + tag);
    const AlternatingE alt = alternating_E(alg);
    rec.check(alt.E == e && alt.consistent, "alternating E mismatch " + tag);
    const RatMatrix qb = gram_B(p);
    rec.check(determinant(qb) == p.d0() * p.d0(), "det Q_B != D0^2 " + tag);
    bool qb_ok = true;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        EvenCliffordElement x, y;
        x.x[i] = 1;
        y.x[j] = 1;
        qb_ok = qb_ok && alg.form_B(x, y) == qb(i, j);
      }
    rec.check(qb_ok, "Q_B != Tr(x y*)/2 " + tag);
    for (int pair = 0; pair < 10; ++pair) {
      const EvenCliffordElement x = random_even(rng, 5), y = random_even(rng, 5);
      const RatMatrix px = phi_rep(x, p), py = phi_rep(y, p);
      const EvenCliffordElement xy = alg.to_even(alg.mul(alg.from_even(x), alg.from_even(y)));
      rec.check(phi_rep(xy, p) == px * py, "Phi not multiplicative " + tag);
      rec.check(px == alg.left_matrix(x), "Phi differs from left multiplication " + tag);
      const Rat nr = alg.norm(alg.from_even(x));
      rec.check(nr * nr == determinant(px), "Nr^2 != det Phi " + tag);
      rec.check(alg.trace(alg.from_even(x)) == trace(px) / 2, "Tr != tr Phi / 2 " + tag);
      rec.check(alg.norm(alg.from_even(xy)) == nr * alg.norm(alg.from_even(y)), "Nr not multiplicative " + tag);
    }
    const RatMatrix odd = alg.odd_gram(OddBasis::standard);
    const Int &a = p.a, &b = p.b, &c = p.c, &s = p.s, &t = p.t, &u = p.u;
    const RatMatrix printed = Rat(1, 2) * to_rational(IntMatrix{{2 * a * b * c, a * s, s * u - b * t, c * u},
                                                                 {a * s, 2 * a, u, t},
                                                                 {s * u - b * t, u, 2 * b, s},
                                                                 {c * u, t, s, 2 * c}});
    rec.check(odd == printed, "odd Gram mismatch " + tag);
    rec.check(alg.odd_gram(OddBasis::dual) == p.d0() * *inverse(qb), "dual odd Gram != D0 Q_B^-1 " + tag);
  }
  return rec.take();
}

SuiteResult verify_exterior(const VerifyOptions& options) {
  Recorder rec("exterior");
  std::mt19937_64 rng(options.seed);
  for (std::int64_t trial = 0; trial < options.trials; ++trial) {
    const GramParams p = random_gram_params(rng, options.gram_bound);
    const std::string tag = describe(p);
    const CliffordAlgebra alg(p);
    PBasis pb;
    try {
      pb = p_bases(p);
      rec.check(true, "");
    } catch (const std::logic_error& e) {
      rec.check(false, std::string(e.what()) + " " + tag);
      continue;
    }
    const PBasis derived = p_bases_from_clifford(alg);
    rec.check(derived.plus == pb.plus && derived.minus == pb.minus, "P+- closed form differs from Clifford route " + tag);
    for (int draw = 0; draw < 5; ++draw) {
      const EvenCliffordElement x = random_even(rng, 4), y = random_even(rng, 4);
      const EvenCliffordElement one{{Rat(1), Rat(0), Rat(0), Rat(0)}};
      const Rat nx = alg.norm(alg.from_even(x)), ny = alg.norm(alg.from_even(y));
      const RatMatrix id3 = RatMatrix::identity(3);
      rec.check(restrict_to(mu_matrix(x, one, alg), pb.plus) == nx * id3, "mu(x,1)|P+ != Nr(x) " + tag);
      rec.check(restrict_to(mu_matrix(one, x, alg), pb.minus) == nx * id3, "mu(1,x)|P- != Nr(x) " + tag);
      const RatMatrix mxy = mu_matrix(x, y, alg);
      rec.check(mxy.transpose() * w_gram() * mxy == (nx * nx * ny * ny) * w_gram(), "mu scaling law " + tag);
      const EvenCliffordElement x2 = random_even(rng, 3), y2 = random_even(rng, 3);
      const EvenCliffordElement x12 = alg.to_even(alg.mul(alg.from_even(x), alg.from_even(x2)));
      const EvenCliffordElement y21 = alg.to_even(alg.mul(alg.from_even(y2), alg.from_even(y)));
      rec.check(mu_matrix(x12, y21, alg) == mxy * mu_matrix(x2, y2, alg), "mu functoriality " + tag);
      // mu(a, a^{-1}) restricted to P+ is conjugation by a, with a^{-1} = a* / Nr.
      if (nx != 0) {
        const CliffordElement xf = alg.from_even(x);
        const EvenCliffordElement x_inv = alg.to_even((1 / nx) * alg.reversal(xf));
        const RatMatrix conj = (1 / nx) * twisted_conjugation(xf, alg);
        rec.check(restrict_to(mu_matrix(x, x_inv, alg), pb.plus) == conj, "mu(a,a^-1)|P+ != g_a " + tag);
      }
      const OddCliffordElement z = random_odd(rng, 4);
      const CliffordElement zf = CliffordAlgebra::from_odd(z);
      const Rat nz = alg.norm(zf);
      if (nz == 0) continue;
      const RatMatrix mt = mu_tilde(z, alg);
      rec.check(restrict_to(mt, pb.minus) == (-nz) * id3, "mu~(x)|P- != -Nx " + tag);
      std::array<CliffordElement, 3> images;
      for (int i = 0; i < 3; ++i)
        images[i] = alg.mul(alg.mul(alg.reversal(zf), CliffordElement::generator(i + 1)), zf);
      rec.check(restrict_to(mt, pb.plus) == coords_of_generators(images), "mu~(x)|P+ != -Nx eta_x " + tag);
    }
  }
  return rec.take();
}

SuiteResult verify_roundtrip(const VerifyOptions& options) {
  Recorder rec("roundtrip");
  std::mt19937_64 rng(options.seed);
  const std::array<std::array<std::int64_t, 2>, 5> families{{{1, -1}, {2, -2}, {3, -3}, {2, 3}, {5, -7}}};
  for (const auto& [k, l] : families) {
    const CliffordAlgebra alg(GramParams::family(k, l));
    const Lattice lat = Lattice::family(k, l);
    const auto units = unit_search_even(k, l, 12);
    const std::string tag = "(k,l)=(" + std::to_string(k) + "," + std::to_string(l) + ")";
    for (std::int64_t trial = 0; trial < options.trials; ++trial) {
      const Mat2 alpha = units[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(units.size()) - 1))];
      const EvenCliffordElement x = family_even_element(alpha, k, l);
      const CliffordUnit unit = make_unit(alg.from_even(x), alg);
      const Isometry3 h = h_alpha(unit, alg);
      rec.check(h.in_kernel, "h_alpha outside the discriminant kernel " + to_string(alpha) + " " + tag);
      rec.check(h.det == 1, "det h_alpha != 1 " + tag);
      const CliffordLift lift = clifford_lift(h.matrix, alg);
      const EvenCliffordElement back = alg.to_even(lift.element);
      rec.check(primitive_representative({back.x.begin(), back.x.end()}) ==
                    primitive_representative({x.x.begin(), x.x.end()}),
                "lift(h_alpha) != +-alpha " + to_string(alpha) + " " + tag);
      rec.check(p_alpha_matrix(alpha, k, l).transpose() * lat.gram() * p_alpha_matrix(alpha, k, l) == lat.gram(),
                "P_alpha not an isometry " + tag);
    }
    for (const auto& v : v_set_search(k, l, 3)) {
      const CliffordUnit unit = make_unit(CliffordAlgebra::from_odd(v), alg);
      const Isometry3 h = h_alpha(unit, alg);
      rec.check(h.in_kernel && h.det == -1, "odd unit isometry check " + tag);
      const CliffordLift lift = clifford_lift(h.matrix, alg);
      const OddCliffordElement back = CliffordAlgebra::to_odd(lift.element);
      rec.check(primitive_representative({back.x.begin(), back.x.end()}) ==
                    primitive_representative({v.x.begin(), v.x.end()}),
                "lift of odd unit differs " + tag);
    }
  }
  return rec.take();
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"clifford", "exterior", "roundtrip"};
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& options) {
  if (options.trials < 1 || options.gram_bound < 1) throw std::invalid_argument("trials and gram bound must be positive");
  if (name == "clifford") return verify_clifford(options);
  if (name == "exterior") return verify_exterior(options);
  if (name == "roundtrip") return verify_roundtrip(options);
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace picard3
