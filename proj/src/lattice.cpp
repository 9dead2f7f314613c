#include "picard3/lattice.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace picard3 {

Lattice::Lattice(IntMatrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_square() || gram_.rows() == 0) throw std::invalid_argument("Gram matrix must be square and nonempty");
  if (!gram_.is_symmetric()) throw std::invalid_argument("Gram matrix must be symmetric");
  for (std::size_t i = 0; i < gram_.rows(); ++i)
    if (!mpz_even_p(gram_(i, i).get_mpz_t())) throw std::invalid_argument("lattice is not even");
  if (determinant(gram_) == 0) throw std::invalid_argument("lattice is degenerate");
}

Lattice Lattice::family(const Int& k, const Int& l) {
  if (k == 0 || l == 0) throw std::invalid_argument("family parameters k, l must be nonzero");
  return Lattice(IntMatrix{{0, 0, k}, {0, 2 * l, 0}, {k, 0, 0}});
}

Lattice Lattice::m_n(const Int& n) {
  if (n <= 0) throw std::invalid_argument("M_n requires n >= 1");
  return family(n, -n);
}

bool Lattice::is_isometry(const IntMatrix& g) const {
  if (g.rows() != rank() || g.cols() != rank()) return false;
  return g.transpose() * gram_ * g == gram_;
}

Int disc(const Lattice& lat) { return determinant(lat.gram()); }

Diagonalization diagonalize(const RatMatrix& q) {
  const std::size_t n = q.rows();
  RatMatrix a = q;
  RatMatrix t = RatMatrix::identity(n);
  auto swap_index = [&](std::size_t i, std::size_t j) {
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(t(r, i), t(r, j));
  };
  // basis_i += f * basis_j
  auto add_basis = [&](std::size_t i, std::size_t j, const Rat& f) {
    for (std::size_t c = 0; c < n; ++c) a(i, c) += f * a(j, c);
    for (std::size_t r = 0; r < n; ++r) a(r, i) += f * a(r, j);
    for (std::size_t r = 0; r < n; ++r) t(r, i) += f * t(r, j);
  };
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        swap_index(k, j);
      } else {
        j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) continue;  // row k vanishes: degenerate direction
        add_basis(k, j, Rat(1));
      }
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a(k, j) == 0) continue;
      Rat f = -a(k, j) / a(k, k);
      add_basis(j, k, f);
    }
  }
  Diagonalization out;
  for (std::size_t i = 0; i < n; ++i) out.diag.push_back(a(i, i));
  out.transform = t;
  return out;
}

Signature signature(const Lattice& lat) {
  Signature s;
  for (const auto& d : diagonalize(to_rational(lat.gram())).diag) {
    if (d > 0) ++s.plus;
    if (d < 0) ++s.minus;
  }
  return s;
}

DiscriminantGroup::DiscriminantGroup(const Lattice& lat) : gram_(lat.gram()) {
  const std::size_t n = lat.rank();
  SmithForm snf = smith_normal_form(lat.gram());
  IntMatrix v_inv = to_integral(*inverse(to_rational(snf.V)));
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (snf.D(i, i) > 1) keep.push_back(i);
  lifts_ = RatMatrix(n, keep.size());
  coord_rows_ = IntMatrix(keep.size(), n);
  for (std::size_t g = 0; g < keep.size(); ++g) {
    std::size_t i = keep[g];
    factors_.push_back(snf.D(i, i));
    for (std::size_t r = 0; r < n; ++r) lifts_(r, g) = frac(snf.V(r, i), snf.D(i, i));
    for (std::size_t c = 0; c < n; ++c) coord_rows_(g, c) = v_inv(i, c);
  }
}

Int DiscriminantGroup::order() const {
  Int o(1);
  for (const auto& d : factors_) o *= d;
  return o;
}

std::vector<Int> DiscriminantGroup::coordinates(const RatVector& x) const {
  if (x.size() != gram_.rows()) throw std::invalid_argument("vector has the wrong rank");
  if (!is_integral(to_rational(gram_) * RatMatrix::from_rows({x}).transpose()))
    throw std::invalid_argument("vector is not in the dual lattice");
  std::vector<Int> c(factors_.size());
  for (std::size_t g = 0; g < factors_.size(); ++g) {
    Rat y(0);
    for (std::size_t j = 0; j < x.size(); ++j) y += coord_rows_(g, j) * x[j];
    y *= factors_[g];
    c[g] = mod_floor(y.get_num(), factors_[g]);
  }
  return c;
}

DiscriminantGroup discriminant_group(const Lattice& lat) { return DiscriminantGroup(lat); }

namespace {

Rat reduce_mod(const Rat& x, const Int& m) {
  // x - m * floor(x / m)
  Rat y = x / m;
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), y.get_num_mpz_t(), y.get_den_mpz_t());
  return x - m * Rat(fl);
}

}  // namespace

FiniteQuadraticForm discriminant_form(const Lattice& lat) {
  DiscriminantGroup group(lat);
  const RatMatrix& lifts = group.generator_lifts();
  RatMatrix gram = lifts.transpose() * to_rational(lat.gram()) * lifts;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j) gram(i, j) = reduce_mod(gram(i, j), Int(i == j ? 2 : 1));
  return FiniteQuadraticForm{std::move(group), std::move(gram)};
}

Rat FiniteQuadraticForm::q(const std::vector<Int>& x) const {
  Rat s(0);
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += x[i] * x[i] * q_values(i, i);
    for (std::size_t j = i + 1; j < x.size(); ++j) s += 2 * x[i] * x[j] * q_values(i, j);
  }
  return reduce_mod(s, Int(2));
}

Rat FiniteQuadraticForm::b(const std::vector<Int>& x, const std::vector<Int>& y) const {
  Rat s(0);
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) s += x[i] * y[j] * q_values(i, j);
  return reduce_mod(s, Int(1));
}

namespace {

// Enumeration of A(L) in mixed radix with the form scaled to integers: q*S mod 2S, b*S mod S.
struct ScaledForm {
  std::vector<std::int64_t> d;
  std::vector<std::vector<std::int64_t>> bs;
  std::int64_t scale = 1;
  std::vector<std::vector<std::int64_t>> elements;
  std::vector<std::int64_t> order;
  std::vector<std::int64_t> qs;

  std::int64_t b(const std::vector<std::int64_t>& x, const std::vector<std::int64_t>& y) const {
    std::int64_t s = 0;
    for (std::size_t i = 0; i < d.size(); ++i)
      for (std::size_t j = 0; j < d.size(); ++j) s = (s + x[i] * y[j] % scale * bs[i][j]) % scale;
    return mod_floor(s, scale);
  }
  std::int64_t q(const std::vector<std::int64_t>& x) const {
    const std::int64_t m = 2 * scale;
    std::int64_t s = 0;
    for (std::size_t i = 0; i < d.size(); ++i) {
      s = (s + x[i] * x[i] % m * bs[i][i]) % m;
      for (std::size_t j = i + 1; j < d.size(); ++j) s = (s + 2 * (x[i] * x[j] % m) * bs[i][j]) % m;
    }
    return mod_floor(s, m);
  }
};

ScaledForm scale_form(const FiniteQuadraticForm& form, std::int64_t count) {
  ScaledForm sf;
  const std::size_t m = form.group.num_generators();
  for (const auto& d : form.group.invariant_factors()) sf.d.push_back(to_i64(d));
  Int lcm(1);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), form.q_values(i, j).get_den_mpz_t());
  sf.scale = to_i64(lcm);
  sf.bs.assign(m, std::vector<std::int64_t>(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) sf.bs[i][j] = to_i64(Int(form.q_values(i, j) * lcm));
  std::vector<std::int64_t> x(m, 0);
  for (std::int64_t idx = 0; idx < count; ++idx) {
    std::int64_t rest = idx;
    std::int64_t ord = 1;
    for (std::size_t i = m; i-- > 0;) {
      x[i] = rest % sf.d[i];
      rest /= sf.d[i];
      std::int64_t oi = sf.d[i] / gcd_i64(x[i], sf.d[i]);
      ord = std::lcm(ord, oi);
    }
    sf.elements.push_back(x);
    sf.order.push_back(ord);
    sf.qs.push_back(sf.q(x));
  }
  return sf;
}

}  // namespace

std::vector<IntMatrix> form_orthogonal_group(const FiniteQuadraticForm& form, std::int64_t cap) {
  const Int order = form.group.order();
  if (order > cap) throw std::length_error("discriminant group order " + order.get_str() + " exceeds cap");
  const std::size_t m = form.group.num_generators();
  const std::int64_t count = to_i64(order);
  ScaledForm sf = scale_form(form, count);

  std::vector<std::vector<std::int64_t>> gens(m, std::vector<std::int64_t>(m, 0));
  for (std::size_t i = 0; i < m; ++i) gens[i][i] = 1;

  std::vector<IntMatrix> result;
  std::vector<std::size_t> image(m);
  // Images of generators must match orders, q-values and pairwise b-values.
  auto extend = [&](auto&& self, std::size_t j) -> void {
    if (j == m) {
      IntMatrix g(m, m);
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t r = 0; r < m; ++r) g(r, c) = sf.elements[image[c]][r];
      result.push_back(std::move(g));
      return;
    }
    const std::int64_t want_q = sf.q(gens[j]);
    for (std::int64_t e = 0; e < count; ++e) {
      if (sf.order[e] != sf.d[j] || sf.qs[e] != want_q) continue;
      bool ok = true;
      for (std::size_t i = 0; i < j && ok; ++i)
        ok = sf.b(sf.elements[e], sf.elements[image[i]]) == sf.b(gens[j], gens[i]);
      if (!ok) continue;
      image[j] = static_cast<std::size_t>(e);
      self(self, j + 1);
    }
  };
  extend(extend, 0);
  return result;
}

bool in_discriminant_kernel(const IntMatrix& g, const Lattice& lat) {
  if (!lat.is_isometry(g)) throw std::invalid_argument("matrix is not an isometry of the lattice");
  RatMatrix q_inv = *inverse(to_rational(lat.gram()));
  RatMatrix diff = to_rational(g - IntMatrix::identity(lat.rank()));
  return is_integral(diff * q_inv);
}

namespace {

// Sign of the distinguished one-dimensional eigenspace: +1 for (1,n), -1 for (n,1) with n >= 2.
int cone_sign(const Signature& s) {
  if (s.plus == 1) return 1;
  if (s.minus == 1) return -1;
  throw std::domain_error("positive cone test needs signature (1,n) or (n,1)");
}

}  // namespace

IntVector positive_vector(const Lattice& lat) {
  Diagonalization dz = diagonalize(to_rational(lat.gram()));
  Signature s;
  for (const auto& d : dz.diag) {
    if (d > 0) ++s.plus;
    if (d < 0) ++s.minus;
  }
  const int sign = cone_sign(s);
  for (std::size_t i = 0; i < dz.diag.size(); ++i)
    if (sgn(dz.diag[i]) == sign) return primitive_representative(dz.transform.column(i));
  throw std::logic_error("no vector in the distinguished cone");
}

bool preserves_positive_cone(const IntMatrix& g, const Lattice& lat) {
  if (!lat.is_isometry(g)) throw std::invalid_argument("matrix is not an isometry of the lattice");
  const int sign = cone_sign(signature(lat));
  IntVector v = positive_vector(lat);
  IntVector gv = g * v;
  return sgn(lat.pair(gv, v)) == sign;
}

bool represents(const Int& k, const Int& l, int eps) {
  if (k == 0 || l == 0) throw std::invalid_argument("represents: k and l must be nonzero");
  if (eps != 1 && eps != -1) throw std::invalid_argument("represents: eps must be +1 or -1");
  Int g;
  mpz_gcd(g.get_mpz_t(), k.get_mpz_t(), l.get_mpz_t());
  if (g != 1) return false;
  const std::int64_t m = to_i64(Int(abs(k)));
  const std::int64_t target = to_i64(mod_floor(Int(eps * l), Int(m)));
  for (std::int64_t x = 0; x < m; ++x)
    if ((x * x) % m == target) return true;
  return false;
}

}  // namespace picard3
