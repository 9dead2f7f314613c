#pragma once

#include "picard3/lattice.hpp"
#include "picard3/matrix.hpp"

#include <array>
#include <string>

namespace picard3 {

// Q_L = [[2a,u,t],[u,2b,s],[t,s,2c]].
struct GramParams {
  Int a, b, c, s, t, u;

  // Throws std::invalid_argument for non-3x3, asymmetric or odd input.
  static GramParams from_gram(const IntMatrix& q);
  static GramParams family(const Int& k, const Int& l);
  IntMatrix gram() const;
  Int disc() const;  // 2(4abc + stu - as^2 - bt^2 - cu^2)
  Rat d0() const;    // disc / 8
  bool degenerate() const { return disc() == 0; }
};

// Coefficients indexed by bitmask S (bit i <-> E_{i+1}); basis E_S is the ascending product.
class CliffordElement {
 public:
  CliffordElement() { coeffs_.fill(Rat(0)); }
  static CliffordElement scalar(const Rat& x);
  static CliffordElement basis(unsigned mask);
  static CliffordElement generator(int i);  // E_i, i in 1..3

  const Rat& operator[](unsigned mask) const { return coeffs_[mask]; }
  Rat& operator[](unsigned mask) { return coeffs_[mask]; }

  bool is_zero() const;
  bool is_even() const;  // odd-degree coefficients vanish
  bool is_odd() const;
  bool is_scalar() const;
  bool is_integral() const;

  friend bool operator==(const CliffordElement&, const CliffordElement&) = default;
  friend CliffordElement operator+(const CliffordElement& x, const CliffordElement& y);
  friend CliffordElement operator-(const CliffordElement& x, const CliffordElement& y);
  friend CliffordElement operator-(const CliffordElement& x);
  friend CliffordElement operator*(const Rat& s, const CliffordElement& x);

 private:
  std::array<Rat, 8> coeffs_;
};

// Subset key used in serialisation: "", "1", "12", "123", ...
std::string subset_key(unsigned mask);
// Throws std::invalid_argument for keys that are not ascending subsets of {1,2,3}.
unsigned subset_mask(const std::string& key);

// Coordinates in (e0,e1,e2,e3) = (1, E2E3, E3E1, E1E2).
struct EvenCliffordElement {
  std::array<Rat, 4> x{Rat(0), Rat(0), Rat(0), Rat(0)};
  bool is_integral() const;
  friend bool operator==(const EvenCliffordElement&, const EvenCliffordElement&) = default;
};

// Coordinates in (E1E2E3, E1, E2, E3): x[0] = x4, x[1..3] = x1..x3.
struct OddCliffordElement {
  std::array<Rat, 4> x{Rat(0), Rat(0), Rat(0), Rat(0)};
  bool is_integral() const;
  friend bool operator==(const OddCliffordElement&, const OddCliffordElement&) = default;
};

enum class OddBasis { standard, dual };

class CliffordAlgebra {
 public:
  // Throws std::invalid_argument for degenerate params.
  explicit CliffordAlgebra(const GramParams& p);

  const GramParams& params() const { return p_; }
  // <E_i, E_j> for i, j in 1..3.
  Int form(int i, int j) const;

  CliffordElement mul(const CliffordElement& x, const CliffordElement& y) const;
  // Reduced product E_{w_1} ... E_{w_k}.
  CliffordElement word(std::initializer_list<int> indices) const;
  CliffordElement reversal(const CliffordElement& x) const;
  // x + x*; for even x this is a scalar.
  Rat trace(const CliffordElement& x) const;
  // x x*; throws std::invalid_argument for mixed grade and std::logic_error if not scalar.
  Rat norm(const CliffordElement& x) const;

  CliffordElement from_even(const EvenCliffordElement& x) const;
  // Throws std::invalid_argument if x has odd components.
  EvenCliffordElement to_even(const CliffordElement& x) const;
  static CliffordElement from_odd(const OddCliffordElement& x);
  static OddCliffordElement to_odd(const CliffordElement& x);

  // 4x4 matrix of left multiplication on (e0..e3): x e_j = sum_i e_i M_ij.
  RatMatrix left_matrix(const EvenCliffordElement& x) const;
  // Matrix of h -> h y from (e0..e3) to (E123,E1,E2,E3), y odd.
  RatMatrix right_odd_matrix(const CliffordElement& y) const;

  // E = E1E2E3 + (-s E1 + t E2 - u E3)/2.
  CliffordElement element_E() const;
  // Tr(e_i) e0 subtracted by half: e_i - Tr(e_i)/2.
  EvenCliffordElement tilde_e(int i) const;
  // v E for v = sum v_i E_i.
  CliffordElement v_dot_E(const RatVector& v) const;
  // Coefficient of E1E2E3 in x y*.
  Rat pairing_E(const CliffordElement& x, const CliffordElement& y) const;
  // <x,y>_B = Tr(x y*)/2.
  Rat form_B(const EvenCliffordElement& x, const EvenCliffordElement& y) const;
  // Polarised norm on the chosen odd basis.
  RatMatrix odd_gram(OddBasis basis) const;

 private:
  GramParams p_;
  std::array<std::array<CliffordElement, 8>, 8> table_;
  std::array<CliffordElement, 8> reversed_;
  std::array<CliffordElement, 4> even_basis_;
};

CliffordElement clifford_mul(const CliffordElement& x, const CliffordElement& y, const GramParams& p);

// Phi(x) = x0 I + x1 M1 + x2 M2 + x3 M3 using the closed-form M_i.
RatMatrix phi_rep(const EvenCliffordElement& x, const GramParams& p);
std::array<IntMatrix, 3> phi_generators(const GramParams& p);

// Gram matrix of (e0..e3) under <,>_B, closed form; det = D0^2.
RatMatrix gram_B(const GramParams& p);

CliffordElement element_E(const GramParams& p);

struct AlternatingE {
  CliffordElement E;
  // hat_E[j] = alternating sum over the complement of j; satisfies E_i E = sum_j <E_i,E_j>_0 hat_E[j].
  std::array<CliffordElement, 3> hat_E;
  bool consistent = false;
};
AlternatingE alternating_E(const CliffordAlgebra& alg);

// k x1 x3 + l x2 (x2 - k x4).
Int odd_norm_family(const Int& x1, const Int& x2, const Int& x3, const Int& x4, const Int& k, const Int& l);

}  // namespace picard3
