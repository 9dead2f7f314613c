#pragma once

#include "picard3/clifford.hpp"
#include "picard3/isometry.hpp"
#include "picard3/lattice.hpp"
#include "picard3/mat2.hpp"
#include "picard3/modular.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace picard3 {

// (t - Nr)(t^2 - A t + 1) with A = Tr^2 - 2 Nr.
struct SalemDatum {
  Mat2 alpha;
  std::int64_t nr = 1;
  std::int64_t trace = 2;
  std::int64_t A = 2;
  // t^3 + c[2] t^2 + c[1] t + c[0]
  std::array<std::int64_t, 3> char_poly{};
  bool is_salem = false;
  bool symplectic = true;
};

// Throws std::invalid_argument unless det = +-1.
SalemDatum salem_poly(const Mat2& alpha);

// det alpha = 1.
bool symplectic_split(const Mat2& alpha);

struct SampleAutomorphism {
  Mat2 alpha;
  IntMatrix p_alpha;
  SalemDatum salem;
  bool isometry = false;
  bool in_kernel = false;
  bool preserves_cone = false;
  bool lift_roundtrip = false;
  bool all_checks() const { return isometry && in_kernel && preserves_cone && lift_roundtrip; }
};

struct CongruenceData {
  std::int64_t n = 0;
  std::int64_t index_in_pi = 0;
  std::int64_t delta = 0;
  std::int64_t torsion_bound = 0;
  std::vector<ModularElement> torsion_found;
  std::optional<std::int64_t> free_rank;  // only when the bounded search found no torsion
  std::optional<std::string> prime_power_model;
};

// G_n data: index in Pi, delta_n, bounded torsion search and, when no torsion is found, the free rank.
CongruenceData congruence_data(std::int64_t n, std::int64_t torsion_bound);

struct ReportOptions {
  std::int64_t search_bound = 20;
  std::int64_t form_cap = 1000;
  std::int64_t sample_count = 4;
};

struct AutReport {
  std::int64_t k = 0, l = 0;
  std::optional<std::int64_t> n;  // set when (k,l) = (n,-n)
  ReportOptions options;
  Int disc;
  Signature sig;
  bool signature_ok = false;
  bool root_free = false;
  bool hypotheses_met = false;
  bool v_coset_present = false;
  std::int64_t v_search_count = 0;  // solutions with |x_i| <= search_bound
  std::string group_model;
  bool antisymplectic_exists = false;
  int m = 1;
  std::optional<CongruenceData> congruence;
  std::vector<SampleAutomorphism> samples;
  std::optional<OddCliffordElement> v_sample;
};

// Throws std::invalid_argument for k = 0 or l = 0.
AutReport analyze_picard(std::int64_t k, std::int64_t l, const ReportOptions& options = {});

// Checks every sample of the family; used by analyze_picard.
SampleAutomorphism make_sample(const Mat2& alpha, std::int64_t k, std::int64_t l, const CliffordAlgebra& alg,
                               const Lattice& lat);

struct WehlerRow {
  std::int64_t n = 0;
  SalemDatum symplectic;      // [[1,2],[2n,4n+1]]
  SalemDatum antisymplectic;  // [[1,2],[2n,4n-1]]
};

struct WehlerTable {
  std::int64_t search_bound = 0;
  std::int64_t units_checked = 0;
  bool trace_law_holds = true;
  std::vector<WehlerRow> rows;
};

// Mod-4 trace law on searched units of Pi(2) and the A-value table for 1 <= n <= n_max.
WehlerTable wehler_trace_classes(std::int64_t n_max, std::int64_t search_bound = 10);

}  // namespace picard3
