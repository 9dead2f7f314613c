#pragma once

#include "picard3/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace picard3 {

// Even non-degenerate integral lattice, identified with its Gram matrix.
class Lattice {
 public:
  // Throws std::invalid_argument unless gram is square, symmetric, even and non-degenerate.
  explicit Lattice(IntMatrix gram);

  // U(k) + <2l>, Gram [[0,0,k],[0,2l,0],[k,0,0]].
  static Lattice family(const Int& k, const Int& l);
  // M_n = U(n) + <-2n>.
  static Lattice m_n(const Int& n);

  const IntMatrix& gram() const { return gram_; }
  std::size_t rank() const { return gram_.rows(); }
  Int pair(const IntVector& x, const IntVector& y) const { return dot(x, gram_, y); }
  bool is_isometry(const IntMatrix& g) const;

 private:
  IntMatrix gram_;
};

Int disc(const Lattice& lat);

struct Signature {
  int plus = 0;
  int minus = 0;
  friend bool operator==(const Signature&, const Signature&) = default;
};
Signature signature(const Lattice& lat);

// Congruence-diagonalisation T^t Q T = diag(d) over Q.
struct Diagonalization {
  std::vector<Rat> diag;
  RatMatrix transform;
};
Diagonalization diagonalize(const RatMatrix& q);

// L^v / L with invariant factors d_1 | ... | d_m (all > 1).
class DiscriminantGroup {
 public:
  explicit DiscriminantGroup(const Lattice& lat);

  const std::vector<Int>& invariant_factors() const { return factors_; }
  // Column i is a lift in L (x) Q of the i-th generator.
  const RatMatrix& generator_lifts() const { return lifts_; }
  std::size_t num_generators() const { return factors_.size(); }
  Int order() const;
  // Coordinates of x in L^v modulo L, reduced into [0, d_i). Throws std::invalid_argument if x is not in L^v.
  std::vector<Int> coordinates(const RatVector& x) const;

 private:
  std::vector<Int> factors_;
  RatMatrix lifts_;
  // Rows of V^{-1} selecting the nontrivial factors.
  IntMatrix coord_rows_;
  IntMatrix gram_;
};

DiscriminantGroup discriminant_group(const Lattice& lat);

struct FiniteQuadraticForm {
  DiscriminantGroup group;
  // Diagonal reduced into [0,2), off-diagonal into [0,1).
  RatMatrix q_values;

  // q(x) mod 2 for x given in generator coordinates.
  Rat q(const std::vector<Int>& x) const;
  // b(x,y) mod 1.
  Rat b(const std::vector<Int>& x, const std::vector<Int>& y) const;
};

FiniteQuadraticForm discriminant_form(const Lattice& lat);

// Column j of each result holds the coordinates of the image of generator j.
// Throws std::length_error if |A(L)| exceeds cap.
std::vector<IntMatrix> form_orthogonal_group(const FiniteQuadraticForm& q, std::int64_t cap = 1000);

// (g - I) Q^{-1} integral. Throws std::invalid_argument if g is not an isometry.
bool in_discriminant_kernel(const IntMatrix& g, const Lattice& lat);

// Supports signatures (1,n) and (n,1); throws std::domain_error otherwise.
bool preserves_positive_cone(const IntMatrix& g, const Lattice& lat);
// Some integral v with <v,v> of the sign of the one-dimensional eigenspace.
IntVector positive_vector(const Lattice& lat);

// gcd(k,l) = 1 and eps*l is a square mod |k|.
bool represents(const Int& k, const Int& l, int eps);

}  // namespace picard3
