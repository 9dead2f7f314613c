#include <doctest.h>

#include "picard3/isometry.hpp"

#include <random>
#include <set>

using namespace picard3;

namespace {

struct Family {
  std::int64_t k, l;
};
const std::vector<Family> kFamilies{{1, -1}, {2, -2}, {3, -3}, {2, 3}, {5, -7}, {1, 1}};

CliffordUnit even_unit_of(const Mat2& a, std::int64_t k, std::int64_t l, const CliffordAlgebra& alg) {
  return make_unit(alg.from_even(family_even_element(a, k, l)), alg);
}

IntMatrix diag3(long x, long y, long z) {
  return IntMatrix{{Int(x), Int(0), Int(0)}, {Int(0), Int(y), Int(0)}, {Int(0), Int(0), Int(z)}};
}

// Columns (E3, -E2, E1).
const IntMatrix kT{{Int(0), Int(0), Int(1)}, {Int(0), Int(-1), Int(0)}, {Int(1), Int(0), Int(0)}};

// Brute force: every det +-1 matrix with entries in [-bound, bound] lying in B_{k,l}, mod +-1.
std::set<Mat2> brute_units(std::int64_t k, std::int64_t l, std::int64_t bound) {
  std::set<Mat2> out;
  for (std::int64_t a = -bound; a <= bound; ++a)
    for (std::int64_t b = -bound; b <= bound; ++b)
      for (std::int64_t c = -bound; c <= bound; ++c)
        for (std::int64_t d = -bound; d <= bound; ++d) {
          Mat2 m{a, b, c, d};
          if ((m.det() == 1 || m.det() == -1) && (a - d) % k == 0 && c % k == 0 && b % l == 0)
            out.insert(m.normalized());
        }
  return out;
}

}  // namespace

TEST_CASE("unit search agrees with brute force") {
  for (auto [k, l] : std::vector<Family>{{1, 1}, {2, 2}, {2, -2}, {3, -3}, {2, 3}, {5, -7}, {1, -1}})
    for (std::int64_t bound : {1, 3, 6}) {
      auto units = unit_search_even(k, l, bound);
      std::set<Mat2> expected = brute_units(k, l, bound);
      expected.insert(Mat2{});
      CHECK(std::set<Mat2>(units.begin(), units.end()) == expected);
      CHECK(std::is_sorted(units.begin(), units.end()));
    }
  // All of PGL_2(Z) with entries in {-1,0,1}: 40 matrices, 20 classes mod +-1.
  CHECK(unit_search_even(1, 1, 1).size() == brute_units(1, 1, 1).size());
  CHECK(unit_search_even(1, 1, 1).size() == 20);
  auto b3 = unit_search_even(2, 2, 3);
  std::set<Mat2> s3(b3.begin(), b3.end());
  CHECK(s3.count(Mat2{1, 0, 2, 1}));
  CHECK(s3.count(Mat2{1, 2, 0, 1}));
  CHECK_FALSE(s3.count(Mat2{1, 2, 2, 1}));
  CHECK(unit_search_even(4, -3, 0) == std::vector<Mat2>{Mat2{}});
}

TEST_CASE("family element conversion") {
  for (auto [k, l] : kFamilies)
    for (const Mat2& a : unit_search_even(k, l, 8)) {
      EvenCliffordElement x = family_even_element(a, k, l);
      CHECK(x.is_integral());
      CHECK(family_matrix(x, k, l) == a);
      CliffordAlgebra alg(GramParams::family(k, l));
      CHECK(alg.norm(alg.from_even(x)) == a.det());
    }
}

TEST_CASE("P_alpha examples and isometry law") {
  CHECK(p_alpha_matrix(Mat2{}, 3, -5) == IntMatrix::identity(3));
  for (auto [k, l] : kFamilies) {
    IntMatrix expected{{Int(1), Int(0), Int(0)}, {Int(k), Int(1), Int(0)}, {Int(-l * k), Int(-2 * l), Int(1)}};
    CHECK(p_alpha_matrix(Mat2{1, 0, k, 1}, k, l) == expected);
    Lattice lat = Lattice::family(k, l);
    CliffordAlgebra alg(GramParams::family(k, l));
    for (const Mat2& a : unit_search_even(k, l, 10)) {
      IntMatrix p = p_alpha_matrix(a, k, l);
      CHECK(p.transpose() * lat.gram() * p == lat.gram());
      // Same map through the algebra: P_alpha = T^{-1} phi_alpha T.
      IntMatrix phi = phi_alpha(even_unit_of(a, k, l, alg), alg).matrix;
      CHECK(kT * phi * kT == p);  // T is an involution
    }
  }
  CHECK_THROWS_AS(p_alpha_matrix(Mat2{1, 1, 0, 1}, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(p_alpha_matrix(Mat2{3, 0, 0, 1}, 2, 3), std::invalid_argument);
  CHECK(in_order_B(Mat2{3, 6, 4, 1}, 2, 3));
  CHECK_FALSE(in_order_B(Mat2{3, 5, 4, 1}, 2, 3));
}

TEST_CASE("P_alpha is a homomorphism") {
  for (auto [k, l] : kFamilies) {
    auto units = unit_search_even(k, l, 5);
    for (std::size_t i = 0; i < units.size(); i += 3)
      for (std::size_t j = 0; j < units.size(); j += 5) {
        Mat2 ab = units[i] * units[j];
        CHECK(p_alpha_matrix(ab, k, l) == p_alpha_matrix(units[i], k, l) * p_alpha_matrix(units[j], k, l));
      }
  }
}

TEST_CASE("h_alpha and phi_alpha") {
  CliffordAlgebra w(GramParams::family(2, -2));
  CliffordUnit one = make_unit(CliffordElement::scalar(1), w);
  CHECK(h_alpha(one, w).matrix == IntMatrix::identity(3));
  CHECK(phi_alpha(one, w).matrix == IntMatrix::identity(3));

  // alpha = E2 with b = 1: N = 1, odd, reflection-type isometry of determinant -1.
  GramParams p{0, 1, 0, 2, 2, 2};
  CliffordAlgebra alg(p);
  Lattice lat(p.gram());
  CliffordUnit e2 = make_unit(CliffordElement::generator(2), alg);
  CHECK(e2.grade == Grade::odd);
  CHECK(e2.norm == 1);
  Isometry3 h = h_alpha(e2, alg);
  CHECK(h.det == -1);
  CHECK(h.matrix.transpose() * lat.gram() * h.matrix == lat.gram());
  CHECK(h.matrix * h.matrix == IntMatrix::identity(3));

  CHECK_THROWS_AS(make_unit(CliffordElement::scalar(2), alg), std::invalid_argument);
  CHECK_THROWS_AS(make_unit(CliffordElement::scalar(1) + CliffordElement::generator(1), alg), std::invalid_argument);

  for (auto [k, l] : kFamilies) {
    CliffordAlgebra fa(GramParams::family(k, l));
    Lattice fl = Lattice::family(k, l);
    auto units = unit_search_even(k, l, 12);
    std::vector<CliffordUnit> all;
    for (const Mat2& a : units) all.push_back(even_unit_of(a, k, l, fa));
    for (const auto& v : v_set_search(k, l, 3)) all.push_back(make_unit(CliffordAlgebra::from_odd(v), fa));
    for (const auto& u : all) {
      Isometry3 hu = h_alpha(u, fa), pu = phi_alpha(u, fa);
      CHECK(hu.det == u.epsilon());
      CHECK(pu.det == u.norm);
      CHECK(hu.in_kernel);
      CHECK(pu.matrix == Int(u.epsilon() * u.norm) * hu.matrix);
      if (l < 0) {
        REQUIRE(pu.preserves_cone.has_value());
        CHECK(*pu.preserves_cone);
      }
    }
    // h is a homomorphism on even units.
    for (std::size_t i = 0; i + 1 < all.size() && i < 40; i += 2) {
      const auto& x = all[i];
      const auto& y = all[i + 1];
      CliffordUnit xy = make_unit(fa.mul(x.element, y.element), fa);
      CHECK(h_alpha(xy, fa).matrix == h_alpha(x, fa).matrix * h_alpha(y, fa).matrix);
      CHECK(phi_alpha(xy, fa).matrix == phi_alpha(x, fa).matrix * phi_alpha(y, fa).matrix);
    }
    (void)fl;
  }
}

TEST_CASE("kernel membership of P_alpha") {
  // The integrality test on U(1)+<2> for alpha = [[1,1],[0,1]] evaluated by hand:
  // P = [[1,2,-1],[0,1,-1],[0,0,1]], Q^{-1} = [[0,0,1],[0,1/2,0],[1,0,0]],
  // (P - I) Q^{-1} = [[-1,1,0],[-1,0,0],[0,0,0]] is integral.
  Lattice lat = Lattice::family(1, 1);
  IntMatrix p = p_alpha_matrix(Mat2{1, 1, 0, 1}, 1, 1);
  CHECK(p == IntMatrix{{Int(1), Int(2), Int(-1)}, {Int(0), Int(1), Int(-1)}, {Int(0), Int(0), Int(1)}});
  CHECK(in_discriminant_kernel(p, lat));
  // (g - I) Q^{-1} integral is inherited by powers; det(alpha) P_alpha is in the kernel.
  for (auto [k, l] : kFamilies) {
    Lattice fl = Lattice::family(k, l);
    for (const Mat2& a : unit_search_even(k, l, 4)) {
      IntMatrix g = Int(a.det()) * p_alpha_matrix(a, k, l);
      CHECK(in_discriminant_kernel(g, fl));
      IntMatrix power = g;
      for (int e = 2; e <= 4; ++e) {
        power = power * g;
        CHECK(in_discriminant_kernel(power, fl));
      }
    }
  }
}

TEST_CASE("cone preservation is a homomorphism to +-1") {
  Lattice lat = Lattice::family(5, -7);
  auto units = unit_search_even(5, -7, 10);
  std::vector<IntMatrix> gs;
  for (std::size_t i = 0; i < units.size() && gs.size() < 12; i += 7) {
    IntMatrix g = p_alpha_matrix(units[i], 5, -7);
    gs.push_back(g);
    gs.push_back(-g);
  }
  for (const auto& g : gs)
    for (const auto& h : gs)
      CHECK(preserves_positive_cone(g * h, lat) == (preserves_positive_cone(g, lat) == preserves_positive_cone(h, lat)));
}

TEST_CASE("Clifford lift") {
  CliffordAlgebra w(GramParams::family(2, -2));
  CliffordLift id = clifford_lift(IntMatrix::identity(3), w);
  CHECK(id.element == CliffordElement::scalar(1));
  CHECK(id.norm == 1);
  CHECK(id.grade == Grade::even);

  std::mt19937_64 rng(9);
  for (auto [k, l] : kFamilies) {
    CliffordAlgebra alg(GramParams::family(k, l));
    auto units = unit_search_even(k, l, 20);
    for (int r = 0; r < 200; ++r) {
      const Mat2& a = units[std::uniform_int_distribution<std::size_t>(0, units.size() - 1)(rng)];
      CliffordUnit u = even_unit_of(a, k, l, alg);
      CliffordLift lift = clifford_lift(h_alpha(u, alg).matrix, alg);
      CHECK((lift.element == u.element || lift.element == -u.element));
      CHECK(lift.norm == u.norm);
    }
    for (const auto& v : v_set_search(k, l, 2)) {
      CliffordElement x = CliffordAlgebra::from_odd(v);
      CliffordLift lift = clifford_lift(h_alpha(make_unit(x, alg), alg).matrix, alg);
      CHECK(lift.grade == Grade::odd);
      CHECK((lift.element == x || lift.element == -x));
    }
  }

  // -I on U(2)+<-4> lies outside the discriminant kernel; its lift is the central element, N = D0 = 2.
  CliffordLift minus = clifford_lift(-IntMatrix::identity(3), CliffordAlgebra(GramParams{0, 0, 0, 2, 2, 2}));
  CHECK(minus.grade == Grade::odd);
  CHECK(minus.norm == 2);
  CHECK_FALSE(in_discriminant_kernel(-IntMatrix::identity(3), Lattice(GramParams{0, 0, 0, 2, 2, 2}.gram())));

  // Swapping the U-generators of U(k)+<2l> for k >= 2.
  IntMatrix swap{{Int(0), Int(0), Int(1)}, {Int(0), Int(1), Int(0)}, {Int(1), Int(0), Int(0)}};
  CliffordAlgebra f3(GramParams::family(3, -1));
  CliffordLift ls = clifford_lift(swap, f3);
  CHECK(abs(ls.norm) != 1);
  CHECK_FALSE(in_discriminant_kernel(swap, Lattice::family(3, -1)));

  CHECK_THROWS_AS(clifford_lift(diag3(2, 1, 1), w), std::invalid_argument);
}

TEST_CASE("spinor norm") {
  CliffordAlgebra w(GramParams::family(2, -2));
  CHECK(spinor_norm(IntMatrix::identity(3), w) == 1);
  // Reflection in r = E3 on diag(2,2,-6): r^2 = -3.
  CliffordAlgebra d(GramParams{1, 1, -3, 0, 0, 0});
  CHECK(spinor_norm(diag3(1, 1, -1), d) == -3);
  CHECK(spinor_norm(diag3(-1, 1, 1), d) == 1);
  CHECK(spinor_norm(diag3(-1, 1, -1), d) == -3);
  // Even units: theta = Nr(alpha) = det alpha.
  for (auto [k, l] : kFamilies) {
    CliffordAlgebra alg(GramParams::family(k, l));
    auto units = unit_search_even(k, l, 8);
    for (const Mat2& a : units) {
      IntMatrix g = h_alpha(even_unit_of(a, k, l, alg), alg).matrix;
      CHECK(spinor_norm(g, alg) == a.det());
    }
    // Multiplicativity on products.
    for (std::size_t i = 0; i + 1 < units.size(); i += 4) {
      IntMatrix g = p_alpha_matrix(units[i], k, l), h = p_alpha_matrix(units[i + 1], k, l);
      Int lhs = spinor_norm(g * h, alg);
      Int rhs = squarefree_part(Rat(spinor_norm(g, alg) * spinor_norm(h, alg)));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("V-set search") {
  for (std::int64_t n = 2; n <= 6; ++n) CHECK(v_set_search(n, -n, 6).empty());
  auto v = v_set_search(1, -1, 1);
  OddCliffordElement target{{Rat(0), Rat(1), Rat(0), Rat(1)}};  // x4 = 0, (x1,x2,x3) = (1,0,1)
  CHECK(std::find(v.begin(), v.end(), target) != v.end());
  CHECK_FALSE(v_set_search(5, 1, 3).empty());
  // Every hit is a unit, normalised with its first nonzero of (x4,x1,x2,x3) positive.
  for (auto [k, l] : kFamilies) {
    CliffordAlgebra alg(GramParams::family(k, l));
    for (const auto& x : v_set_search(k, l, 3)) {
      Rat nx = alg.norm(CliffordAlgebra::from_odd(x));
      CHECK((nx == 1 || nx == -1));
      auto first = std::find_if(x.x.begin(), x.x.end(), [](const Rat& q) { return q != 0; });
      REQUIRE(first != x.x.end());
      CHECK(*first > 0);
    }
  }
}
