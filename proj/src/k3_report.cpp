#include "picard3/k3_report.hpp"

#include <algorithm>
#include <tuple>
#include <stdexcept>

namespace picard3 {

SalemDatum salem_poly(const Mat2& alpha) {
  const std::int64_t nr = alpha.det();
  if (nr != 1 && nr != -1) throw std::invalid_argument("Salem data needs det +-1: " + to_string(alpha));
  SalemDatum s;
  s.alpha = alpha.normalized();
  s.nr = nr;
  s.trace = s.alpha.trace();
  s.A = s.trace * s.trace - 2 * nr;
  s.char_poly = {-nr, 1 + s.A * nr, -(s.A + nr)};
  s.is_salem = s.A > 2;
  s.symplectic = nr == 1;
  return s;
}

bool symplectic_split(const Mat2& alpha) { return alpha.det() == 1; }

SampleAutomorphism make_sample(const Mat2& alpha, std::int64_t k, std::int64_t l, const CliffordAlgebra& alg,
                               const Lattice& lat) {
  SampleAutomorphism s;
  s.alpha = alpha.normalized();
  s.p_alpha = p_alpha_matrix(s.alpha, k, l);
  s.salem = salem_poly(s.alpha);
  s.isometry = lat.is_isometry(s.p_alpha);
  if (!s.isometry) return s;
  // h_alpha = Nr(alpha) phi_alpha on the even part.
  s.in_kernel = in_discriminant_kernel(Int(s.alpha.det()) * s.p_alpha, lat);
  s.preserves_cone = preserves_positive_cone(s.p_alpha, lat);
  const EvenCliffordElement x = family_even_element(s.alpha, k, l);
  const CliffordUnit unit = make_unit(alg.from_even(x), alg);
  const CliffordLift lift = clifford_lift(h_alpha(unit, alg).matrix, alg);
  const EvenCliffordElement back = alg.to_even(lift.element);
  s.lift_roundtrip = lift.grade == Grade::even &&
                     primitive_representative({back.x.begin(), back.x.end()}) ==
                         primitive_representative({x.x.begin(), x.x.end()});
  return s;
}

CongruenceData congruence_data(std::int64_t n, std::int64_t torsion_bound) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (torsion_bound < 1) throw std::invalid_argument("bound must be positive");
  CongruenceData c;
  c.n = n;
  c.index_in_pi = index_pi_G_n(n);
  c.delta = delta_n(n);
  c.torsion_bound = torsion_bound;
  c.torsion_found = torsion_search(SubgroupSpec::g(n), torsion_bound);
  if (c.torsion_found.empty() && c.index_in_pi % 12 == 0) c.free_rank = free_rank(c.index_in_pi);
  if (is_prime_power(n)) c.prime_power_model = prime_power_generators(n).description;
  return c;
}

AutReport analyze_picard(std::int64_t k, std::int64_t l, const ReportOptions& options) {
  if (k == 0 || l == 0) throw std::invalid_argument("family parameters k, l must be nonzero");
  if (options.search_bound < 1 || options.form_cap < 1) throw std::invalid_argument("bounds must be positive");
  AutReport r;
  r.k = k;
  r.l = l;
  r.options = options;
  if (k > 0 && l == -k) r.n = k;
  const Lattice lat = Lattice::family(k, l);
  const CliffordAlgebra alg(GramParams::family(k, l));
  r.disc = disc(lat);
  r.sig = signature(lat);
  r.signature_ok = r.sig == Signature{1, 2};
  r.root_free = !represents(k, l, -1);
  r.hypotheses_met = r.signature_ok && r.root_free;
  r.v_coset_present = represents(k, l, 1) || represents(k, l, -1);
  const auto v_set = v_set_search(k, l, options.search_bound);
  r.v_search_count = static_cast<std::int64_t>(v_set.size());
  if (!r.v_coset_present && !v_set.empty()) throw std::logic_error("odd unit found although L0 represents neither +1 nor -1");
  if (!v_set.empty()) r.v_sample = v_set.front();
  r.group_model = r.v_coset_present ? "(B_{k,l}^x + V) / {+-1}" : "B_{k,l}^x / {+-1}";
  // Even units of det -1 need -1 to be a square mod k; odd units of norm +1 need l to be a square mod k.
  r.antisymplectic_exists = qr_minus_one(k < 0 ? -k : k) || represents(k, l, 1);
  r.m = r.antisymplectic_exists ? 2 : 1;

  if (r.n) r.congruence = congruence_data(*r.n, options.search_bound);

  if (r.signature_ok) {
    auto units = unit_search_even(k, l, options.search_bound);
    units.erase(std::remove(units.begin(), units.end(), Mat2{}), units.end());
    // Salem elements first, smallest A first; ties broken by the matrix order.
    auto key = [](const Mat2& u) {
      const std::int64_t a = u.trace() * u.trace() - 2 * u.det();
      return std::make_tuple(a <= 2, a, u);
    };
    std::sort(units.begin(), units.end(), [&](const Mat2& x, const Mat2& y) { return key(x) < key(y); });
    std::vector<Mat2> chosen;
    for (const auto& u : units)
      if (static_cast<std::int64_t>(chosen.size()) + 1 < options.sample_count) chosen.push_back(u);
    auto pick = std::find_if(units.begin(), units.end(), [&](const Mat2& u) {
      return std::find(chosen.begin(), chosen.end(), u) == chosen.end() &&
             (u.det() == -1 || std::none_of(units.begin(), units.end(), [&](const Mat2& v) {
                return v.det() == -1 && std::find(chosen.begin(), chosen.end(), v) == chosen.end();
              }));
    });
    if (pick != units.end() && static_cast<std::int64_t>(chosen.size()) < options.sample_count) chosen.push_back(*pick);
    for (const auto& u : chosen) r.samples.push_back(make_sample(u, k, l, alg, lat));
  }
  return r;
}

WehlerTable wehler_trace_classes(std::int64_t n_max, std::int64_t search_bound) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
  WehlerTable t;
  t.search_bound = search_bound;
  for (const auto& u : unit_search_even(2, 2, search_bound)) {
    ++t.units_checked;
    const std::int64_t residue = mod_floor(u.trace(), 4);
    const bool ok = u.det() == 1 ? residue == 2 : residue == 0;
    if (!ok) t.trace_law_holds = false;
  }
  for (std::int64_t n = 1; n <= n_max; ++n)
    t.rows.push_back({n, salem_poly({1, 2, 2 * n, 4 * n + 1}), salem_poly({1, 2, 2 * n, 4 * n - 1})});
  return t;
}

}  // namespace picard3
