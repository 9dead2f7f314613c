#pragma once

#include "picard3/clifford.hpp"

#include <array>

namespace picard3 {

// Coordinates in (e01, e02, e03, e23, e31, e12) with e_ij = e_i ^ e_j.
using WElement = std::array<Rat, 6>;

// Index pairs of the W basis, in order.
const std::array<std::array<int, 2>, 6>& w_basis_pairs();

// (w1 ^ w2) / (e0 ^ e1 ^ e2 ^ e3).
Rat w_form(const WElement& w1, const WElement& w2);
RatMatrix w_gram();

// Second compound of a 4x4 matrix in the W basis.
RatMatrix compound2(const RatMatrix& m);
WElement wedge(const std::array<Rat, 4>& x, const std::array<Rat, 4>& y);

struct PBasis {
  std::array<WElement, 3> plus;
  std::array<WElement, 3> minus;
};

// Closed-form w_i^+- ; checks primitivity, orthogonality and Gram = +-Q_L (std::logic_error on failure).
PBasis p_bases(const GramParams& p);
// w_i^+- = e0 ^ (E_i E) +- (tilde e_j ^ tilde e_k), (i,j,k) cyclic.
PBasis p_bases_from_clifford(const CliffordAlgebra& alg);

// Gram blocks of a PBasis under w_form.
RatMatrix p_gram(const std::array<WElement, 3>& x, const std::array<WElement, 3>& y);
// Invariant factors of the 3x6 coordinate stack are all 1.
bool is_primitive(const std::array<WElement, 3>& rows);

// Matrix of h1 ^ h2 -> x h1 y ^ x h2 y.
RatMatrix mu_matrix(const EvenCliffordElement& x, const EvenCliffordElement& y, const CliffordAlgebra& alg);

// Duality W -> wedge^2 Cl^-: <u, w>_W = (u, iota(w)) with the determinant pairing induced by pairing_E.
RatMatrix iota_matrix(const CliffordAlgebra& alg);
// Matrix of h1 ^ h2 -> iota^{-1}(h1 x ^ h2 x). Throws std::domain_error if Nx = 0.
RatMatrix mu_tilde(const OddCliffordElement& x, const CliffordAlgebra& alg);

// Matrix of M restricted to span(basis), expressed in that basis; throws std::domain_error if not invariant.
RatMatrix restrict_to(const RatMatrix& m, const std::array<WElement, 3>& basis);

}  // namespace picard3
