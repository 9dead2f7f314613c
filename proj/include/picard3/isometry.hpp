#pragma once

#include "picard3/clifford.hpp"
#include "picard3/lattice.hpp"
#include "picard3/mat2.hpp"

#include <optional>
#include <vector>

namespace picard3 {

enum class Grade { even, odd };

const char* grade_name(Grade g);

// Integral element of pure grade with N = +-1.
struct CliffordUnit {
  CliffordElement element;
  Grade grade = Grade::even;
  int norm = 1;
  int epsilon() const { return grade == Grade::even ? 1 : -1; }
};

// Throws std::invalid_argument unless x is integral in the e-basis (even) or the standard odd basis,
// of pure grade, with N(x) = +-1.
CliffordUnit make_unit(const CliffordElement& x, const CliffordAlgebra& alg);

// 3x3 isometry with flags cached against the lattice it was built for.
struct Isometry3 {
  IntMatrix matrix;
  int det = 1;
  bool in_kernel = false;
  // Empty when the lattice signature is not (1,n) or (n,1).
  std::optional<bool> preserves_cone;

  // Throws std::invalid_argument unless g^t Q g = Q.
  static Isometry3 make(const IntMatrix& g, const Lattice& lat);
};

// Matrix of v -> alpha v alpha* on (E1,E2,E3). Throws std::logic_error if the image leaves L (x) Q.
RatMatrix twisted_conjugation(const CliffordElement& alpha, const CliffordAlgebra& alg);

// v -> eps alpha v alpha^{-1}.
Isometry3 h_alpha(const CliffordUnit& alpha, const CliffordAlgebra& alg);
// v -> alpha v alpha*; equals eps N(alpha) h_alpha.
Isometry3 phi_alpha(const CliffordUnit& alpha, const CliffordAlgebra& alg);

struct CliffordLift {
  CliffordElement element;  // primitive integral representative, sign fixed
  Grade grade = Grade::even;
  Int norm;
};

// Solves alpha E_i = det(g) g(E_i) alpha. Throws std::invalid_argument if g is not an isometry and
// std::domain_error if the solution space is not one-dimensional.
CliffordLift clifford_lift(const IntMatrix& g, const CliffordAlgebra& alg);

// Squarefree representative of N(lift) modulo squares.
Int spinor_norm(const IntMatrix& g, const CliffordAlgebra& alg);

// a-d = c = 0 mod k, b = 0 mod l.
bool in_order_B(const Mat2& alpha, std::int64_t k, std::int64_t l);

// Throws std::invalid_argument unless alpha lies in B_{k,l} with det +-1.
IntMatrix p_alpha_matrix(const Mat2& alpha, std::int64_t k, std::int64_t l);

// alpha = [[a,b],[c,d]] -> x0 = d, x1 = b/l, x2 = (a-d)/k, x3 = c/k.
EvenCliffordElement family_even_element(const Mat2& alpha, std::int64_t k, std::int64_t l);
// Inverse of family_even_element.
Mat2 family_matrix(const EvenCliffordElement& x, std::int64_t k, std::int64_t l);

// Units of B_{k,l} with entries bounded by bound, one representative per {+-alpha} (first nonzero
// entry positive), sorted. The identity class is always present.
std::vector<Mat2> unit_search_even(std::int64_t k, std::int64_t l, std::int64_t bound);

// Odd units x4 E123 + x1 E1 + x2 E2 + x3 E3 of Cl(U(k)+<2l>) with |x_i| <= bound, mod +-1, sorted.
std::vector<OddCliffordElement> v_set_search(std::int64_t k, std::int64_t l, std::int64_t bound);

}  // namespace picard3
