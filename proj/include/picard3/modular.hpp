#pragma once

#include "picard3/arith.hpp"
#include "picard3/mat2.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace picard3 {

// Element of PGL_2(Z): stored with first nonzero entry positive.
class ModularElement {
 public:
  // Throws std::invalid_argument unless det = +-1.
  explicit ModularElement(const Mat2& m);
  ModularElement() = default;

  const Mat2& matrix() const { return m_; }
  std::int64_t det() const { return m_.det(); }
  ModularElement operator*(const ModularElement& o) const { return ModularElement(m_ * o.m_); }
  ModularElement inverse() const { return ModularElement(m_.inverse()); }

  friend bool operator==(const ModularElement&, const ModularElement&) = default;
  friend auto operator<=>(const ModularElement&, const ModularElement&) = default;

 private:
  Mat2 m_;
};

enum class SubgroupKind { Pi_n, Gamma_n, B_kl_units, G_n, Gamma0_k, Gamma0_plus_l };

const char* kind_name(SubgroupKind kind);
// Throws std::invalid_argument on unknown names.
SubgroupKind parse_kind(const std::string& name);

struct SubgroupSpec {
  SubgroupKind kind = SubgroupKind::G_n;
  std::int64_t n = 1;  // level for Pi_n, Gamma_n, G_n, Gamma0_k; k for B_kl_units
  std::int64_t l = 1;  // second parameter of B_kl_units; level of Gamma0_plus_l

  static SubgroupSpec pi(std::int64_t n) { return {SubgroupKind::Pi_n, n, 1}; }
  static SubgroupSpec gamma(std::int64_t n) { return {SubgroupKind::Gamma_n, n, 1}; }
  static SubgroupSpec g(std::int64_t n) { return {SubgroupKind::G_n, n, 1}; }
  static SubgroupSpec gamma0(std::int64_t k) { return {SubgroupKind::Gamma0_k, k, 1}; }
  static SubgroupSpec b_units(std::int64_t k, std::int64_t l) { return {SubgroupKind::B_kl_units, k, l}; }
  static SubgroupSpec gamma0_plus(std::int64_t l) { return {SubgroupKind::Gamma0_plus_l, 1, l}; }
  void validate() const;
};

// sqrt(lp) [[a0, b0/lp], [c0 (l/lp), d0]] in PSL_2(R).
struct ScaledElement {
  std::int64_t lp = 1;
  Int a0{1}, b0{0}, c0{0}, d0{1};

  // Checks lp > 0, lp | l and a0 d0 lp - b0 c0 (l/lp) = 1.
  bool valid(std::int64_t l) const;
  // Product in Gamma0^+(l); both inputs must be valid. Result has first nonzero of (a0,b0,c0,d0) positive.
  ScaledElement times(const ScaledElement& o, std::int64_t l) const;
  std::int64_t radical() const;

  friend bool operator==(const ScaledElement&, const ScaledElement&) = default;
};

bool member(const ModularElement& x, const SubgroupSpec& spec);
// Only for Gamma0_plus_l. Throws std::invalid_argument if lp does not divide l or lp <= 0.
bool member(const ScaledElement& x, const SubgroupSpec& spec);

// Atkin-Lehner element for lp || l.
ScaledElement atkin_lehner(std::int64_t lp, std::int64_t l);
// Embeds [[a, b], [c l, d]] with det 1.
ScaledElement gamma0_element(const Mat2& m, std::int64_t l);

// [Gamma : Gamma(n)] = |PSL_2(Z/n)|.
std::int64_t index_gamma_n(std::int64_t n);
// Exhaustive count of SL_2(Z/n), divided by |{+-I}|.
std::int64_t order_psl2_zn(std::int64_t n);
std::int64_t delta_n(std::int64_t n);
std::int64_t index_pi_G_n(std::int64_t n);
// [Pi : G_n] as #{A mod n : det A = +-1} / #{lambda : lambda^2 = +-1}.
std::int64_t index_pi_G_n_count(std::int64_t n);

struct TorsionInfo {
  bool finite = false;
  int order = 0;  // 0 when infinite
};
TorsionInfo is_torsion(const ModularElement& x);

// Nontrivial finite-order elements of the subgroup with |entries| <= bound, sorted.
std::vector<ModularElement> torsion_search(const SubgroupSpec& spec, std::int64_t bound);

// index/12 + 1 for a torsion-free subgroup of index `index` in Pi; throws std::invalid_argument unless 12 | index.
std::int64_t free_rank(std::int64_t index_in_pi);

bool qr_minus_one(std::int64_t n);

// Some (x, y) with x^2 - D y^2 = -4, or nullopt. Throws std::invalid_argument for D <= 0 or square D.
std::optional<std::pair<Int, Int>> negative_pell(std::int64_t D);

using BigMat2 = std::array<Int, 4>;  // a, b, c, d

// a = d, b = c = 0 mod n with det = +-1.
bool in_G_n(const BigMat2& m, std::int64_t n);
bool in_Gamma_n(const BigMat2& m, std::int64_t n);

struct PrimePowerEntry {
  std::int64_t n = 0;
  std::string description;
  // Extra generator over Gamma(n), absent when G_n = Gamma(n).
  std::optional<BigMat2> extra_generator;
};

// Throws std::invalid_argument unless n >= 2 is a prime power.
PrimePowerEntry prime_power_generators(std::int64_t n);
bool is_prime_power(std::int64_t n);

}  // namespace picard3
