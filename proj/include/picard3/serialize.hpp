#pragma once

#include "picard3/clifford.hpp"
#include "picard3/isometry.hpp"
#include "picard3/k3_report.hpp"
#include "picard3/lattice.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace picard3 {

using json = nlohmann::json;

inline constexpr const char* kSchema = "picard3-aut/1";

struct LatticeSpec {
  Lattice lattice;
  std::optional<std::int64_t> k, l;  // set for family input
};

// Accepts {"gram": ...}, {"family":"U(k)+<2l>","k":K,"l":L} and {"family":"M_n","n":N}.
// Throws std::invalid_argument on malformed input.
LatticeSpec parse_lattice(const json& j);
json to_json(const Lattice& lat);

json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const json& j);

json to_json(const CliffordElement& x);
CliffordElement clifford_from_json(const json& j);

json to_json(const CliffordUnit& u);
// Requires "grade" to match the element.
CliffordUnit unit_from_json(const json& j, const CliffordAlgebra& alg);

json isometry_to_json(const IntMatrix& g);
IntMatrix isometry_from_json(const json& j);

json to_json(const Mat2& m);
json to_json(const SalemDatum& s);
json to_json(const AutReport& r);
json to_json(const CongruenceData& c);

std::string render_text(const SalemDatum& s);
std::string render_text(const AutReport& r);
std::string render_text(const CongruenceData& c);

}  // namespace picard3
