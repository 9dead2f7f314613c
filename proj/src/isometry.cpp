#include "picard3/isometry.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace picard3 {

const char* grade_name(Grade g) { return g == Grade::even ? "even" : "odd"; }

CliffordUnit make_unit(const CliffordElement& x, const CliffordAlgebra& alg) {
  CliffordUnit unit;
  unit.element = x;
  if (x.is_even()) {
    unit.grade = Grade::even;
    if (!alg.to_even(x).is_integral()) throw std::invalid_argument("unit must be integral in the e-basis");
  } else if (x.is_odd()) {
    unit.grade = Grade::odd;
    if (!CliffordAlgebra::to_odd(x).is_integral()) throw std::invalid_argument("unit must be integral");
  } else {
    throw std::invalid_argument("unit must have pure grade");
  }
  Rat n = alg.norm(x);
  if (n != 1 && n != -1) throw std::invalid_argument("not a unit: N = " + n.get_str());
  unit.norm = n == 1 ? 1 : -1;
  return unit;
}

Isometry3 Isometry3::make(const IntMatrix& g, const Lattice& lat) {
  if (!lat.is_isometry(g)) throw std::invalid_argument("matrix is not an isometry of the lattice");
  Isometry3 iso;
  iso.matrix = g;
  iso.det = determinant(g) == 1 ? 1 : -1;
  iso.in_kernel = in_discriminant_kernel(g, lat);
  try {
    iso.preserves_cone = preserves_positive_cone(g, lat);
  } catch (const std::domain_error&) {
    iso.preserves_cone.reset();
  }
  return iso;
}

RatMatrix twisted_conjugation(const CliffordElement& alpha, const CliffordAlgebra& alg) {
  const CliffordElement alpha_rev = alg.reversal(alpha);
  RatMatrix m(3, 3);
  for (int i = 0; i < 3; ++i) {
    CliffordElement y = alg.mul(alg.mul(alpha, CliffordElement::generator(i + 1)), alpha_rev);
    for (unsigned mask : {0u, 3u, 5u, 6u, 7u})
      if (y[mask] != 0) throw std::logic_error("alpha v alpha* left the lattice span");
    for (int r = 0; r < 3; ++r) m(r, i) = y[1u << r];
  }
  return m;
}

Isometry3 h_alpha(const CliffordUnit& alpha, const CliffordAlgebra& alg) {
  Rat scale = Rat(alpha.epsilon()) / alpha.norm;
  IntMatrix g = to_integral(scale * twisted_conjugation(alpha.element, alg));
  return Isometry3::make(g, Lattice(alg.params().gram()));
}

Isometry3 phi_alpha(const CliffordUnit& alpha, const CliffordAlgebra& alg) {
  IntMatrix g = to_integral(twisted_conjugation(alpha.element, alg));
  return Isometry3::make(g, Lattice(alg.params().gram()));
}

CliffordLift clifford_lift(const IntMatrix& g, const CliffordAlgebra& alg) {
  Lattice lat(alg.params().gram());
  if (!lat.is_isometry(g)) throw std::invalid_argument("matrix is not an isometry of the lattice");
  const int eps = determinant(g) == 1 ? 1 : -1;
  std::array<CliffordElement, 4> basis;
  for (int j = 0; j < 4; ++j) {
    if (eps == 1) {
      EvenCliffordElement e;
      e.x[j] = 1;
      basis[j] = alg.from_even(e);
    } else {
      OddCliffordElement o;
      o.x[j] = 1;
      basis[j] = CliffordAlgebra::from_odd(o);
    }
  }
  // Row block i: coordinates of f_j E_i - eps g(E_i) f_j.
  RatMatrix system(24, 4);
  for (int i = 0; i < 3; ++i) {
    CliffordElement gi;
    for (int r = 0; r < 3; ++r) gi[1u << r] = Rat(eps * g(r, i));
    for (int j = 0; j < 4; ++j) {
      CliffordElement eq = alg.mul(basis[j], CliffordElement::generator(i + 1)) - alg.mul(gi, basis[j]);
      for (unsigned m = 0; m < 8; ++m) system(8 * i + m, j) = eq[m];
    }
  }
  RatMatrix kernel = kernel_basis(system);
  if (kernel.cols() != 1)
    throw std::domain_error("Clifford lift solution space has dimension " + std::to_string(kernel.cols()));
  IntVector coords = primitive_representative(kernel.column(0));
  CliffordLift lift;
  lift.grade = eps == 1 ? Grade::even : Grade::odd;
  for (int j = 0; j < 4; ++j) lift.element = lift.element + Rat(coords[j]) * basis[j];
  lift.norm = alg.norm(lift.element).get_num();
  return lift;
}

Int spinor_norm(const IntMatrix& g, const CliffordAlgebra& alg) {
  return squarefree_part(Rat(clifford_lift(g, alg).norm));
}

bool in_order_B(const Mat2& alpha, std::int64_t k, std::int64_t l) {
  return (alpha.a - alpha.d) % k == 0 && alpha.c % k == 0 && alpha.b % l == 0;
}

IntMatrix p_alpha_matrix(const Mat2& alpha, std::int64_t k, std::int64_t l) {
  if (k == 0 || l == 0) throw std::invalid_argument("family parameters k, l must be nonzero");
  if (!in_order_B(alpha, k, l)) throw std::invalid_argument("matrix " + to_string(alpha) + " is not in B_{k,l}");
  if (alpha.det() != 1 && alpha.det() != -1) throw std::invalid_argument("det must be +-1");
  const Int a(alpha.a), b(alpha.b), c(alpha.c), d(alpha.d), K(k), L(l);
  // b = 0 mod l and c = 0 mod k make the scaled entries exact.
  return IntMatrix{{a * a, 2 * a * b, -K * (b / L) * b},
                   {a * c, a * d + b * c, -K * (b / L) * d},
                   {-L * (c / K) * c, -2 * L * (c / K) * d, d * d}};
}

EvenCliffordElement family_even_element(const Mat2& alpha, std::int64_t k, std::int64_t l) {
  EvenCliffordElement x;
  x.x[0] = Rat(alpha.d);
  x.x[1] = frac(Int(alpha.b), Int(l));
  x.x[2] = frac(Int(alpha.a - alpha.d), Int(k));
  x.x[3] = frac(Int(alpha.c), Int(k));
  return x;
}

Mat2 family_matrix(const EvenCliffordElement& x, std::int64_t k, std::int64_t l) {
  auto entry = [](const Rat& q) {
    if (!is_integral(q)) throw std::invalid_argument("element does not correspond to an integer matrix");
    return to_i64(q.get_num());
  };
  std::int64_t d = entry(x.x[0]);
  return Mat2{entry(x.x[2] * k) + d, entry(x.x[1] * l), entry(x.x[3] * k), d};
}

std::vector<Mat2> unit_search_even(std::int64_t k, std::int64_t l, std::int64_t bound) {
  if (k == 0 || l == 0) throw std::invalid_argument("family parameters k, l must be nonzero");
  const std::int64_t K = k < 0 ? -k : k, L = l < 0 ? -l : l;
  std::set<Mat2> found{Mat2{}};
  for (std::int64_t a = -bound; a <= bound; ++a) {
    // d = a mod k
    std::int64_t d0 = a - K * ((a + bound) / K);
    for (std::int64_t d = d0; d <= bound; d += K) {
      if (d < -bound) continue;
      for (std::int64_t c = -(bound / K) * K; c <= bound; c += K) {
        for (std::int64_t det : {1, -1}) {
          // a d - b c = det
          if (c == 0) {
            if (a * d != det) continue;
            for (std::int64_t b = -(bound / L) * L; b <= bound; b += L) found.insert(Mat2{a, b, c, d}.normalized());
          } else {
            std::int64_t num = a * d - det;
            if (num % c != 0) continue;
            std::int64_t b = num / c;
            if (b < -bound || b > bound || b % L != 0) continue;
            found.insert(Mat2{a, b, c, d}.normalized());
          }
        }
      }
    }
  }
  return {found.begin(), found.end()};
}

std::vector<OddCliffordElement> v_set_search(std::int64_t k, std::int64_t l, std::int64_t bound) {
  if (k == 0 || l == 0) throw std::invalid_argument("family parameters k, l must be nonzero");
  std::set<std::array<std::int64_t, 4>> found;  // (x4, x1, x2, x3)
  auto add = [&](std::int64_t x1, std::int64_t x2, std::int64_t x3, std::int64_t x4) {
    std::array<std::int64_t, 4> v{x4, x1, x2, x3};
    auto first = std::find_if(v.begin(), v.end(), [](std::int64_t z) { return z != 0; });
    if (first != v.end() && *first < 0)
      for (auto& z : v) z = -z;
    found.insert(v);
  };
  for (std::int64_t x1 = -bound; x1 <= bound; ++x1)
    for (std::int64_t x3 = -bound; x3 <= bound; ++x3) {
      const std::int64_t kx = k * x1 * x3;
      for (std::int64_t x2 = -bound; x2 <= bound; ++x2) {
        // k x1 x3 + l x2^2 - l k x2 x4 = target
        const std::int64_t r = kx + l * x2 * x2;
        for (std::int64_t target : {1, -1}) {
          if (x2 == 0) {
            if (kx == target)
              for (std::int64_t x4 = -bound; x4 <= bound; ++x4) add(x1, 0, x3, x4);
            continue;
          }
          const std::int64_t coef = l * k * x2;
          if ((r - target) % coef != 0) continue;
          const std::int64_t x4 = (r - target) / coef;
          if (x4 >= -bound && x4 <= bound) add(x1, x2, x3, x4);
        }
      }
    }
  std::vector<OddCliffordElement> out;
  for (const auto& v : found) {
    OddCliffordElement x;
    for (int i = 0; i < 4; ++i) x.x[i] = Rat(v[i]);
    out.push_back(x);
  }
  return out;
}

}  // namespace picard3
