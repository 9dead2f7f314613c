#include "picard3/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace picard3 {

namespace {

Int int_from_json(const json& j) {
  if (j.is_number_integer()) return Int(j.get<std::int64_t>());
  if (j.is_string()) {
    Rat q = parse_rational(j.get<std::string>());
    if (!is_integral(q)) throw std::invalid_argument("expected an integer, got " + j.dump());
    return q.get_num();
  }
  throw std::invalid_argument("expected an integer, got " + j.dump());
}

std::int64_t i64_from_json(const json& j, const char* field) {
  if (!j.contains(field)) throw std::invalid_argument(std::string("missing field \"") + field + "\"");
  return to_i64(int_from_json(j.at(field)));
}

// Integers that fit in 64 bits stay JSON numbers; larger ones become strings.
json int_to_json(const Int& x) {
  if (x.fits_slong_p()) return json(static_cast<std::int64_t>(x.get_si()));
  return json(x.get_str());
}

}  // namespace

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

IntMatrix int_matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  std::vector<std::vector<Int>> rows;
  for (const auto& r : j) {
    if (!r.is_array()) throw std::invalid_argument("matrix rows must be arrays");
    std::vector<Int> row;
    for (const auto& x : r) row.push_back(int_from_json(x));
    if (!rows.empty() && row.size() != rows.front().size()) throw std::invalid_argument("ragged matrix");
    rows.push_back(std::move(row));
  }
  return IntMatrix::from_rows(rows);
}

LatticeSpec parse_lattice(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("lattice must be a JSON object");
  if (j.contains("gram")) return LatticeSpec{Lattice(int_matrix_from_json(j.at("gram"))), std::nullopt, std::nullopt};
  if (!j.contains("family")) throw std::invalid_argument("lattice needs \"gram\" or \"family\"");
  const std::string family = j.at("family").get<std::string>();
  std::int64_t k, l;
  if (family == "U(k)+<2l>") {
    k = i64_from_json(j, "k");
    l = i64_from_json(j, "l");
  } else if (family == "M_n") {
    k = i64_from_json(j, "n");
    if (k < 1) throw std::invalid_argument("M_n needs n >= 1");
    l = -k;
  } else {
    throw std::invalid_argument("unknown lattice family: " + family);
  }
  return LatticeSpec{Lattice::family(k, l), k, l};
}

json to_json(const Lattice& lat) { return json{{"gram", to_json(lat.gram())}}; }

json to_json(const CliffordElement& x) {
  json coeffs = json::object();
  for (unsigned m = 0; m < 8; ++m)
    if (x[m] != 0) coeffs[subset_key(m)] = x[m].get_str();
  return json{{"coeffs", coeffs}};
}

CliffordElement clifford_from_json(const json& j) {
  if (!j.is_object() || !j.contains("coeffs") || !j.at("coeffs").is_object())
    throw std::invalid_argument("Clifford element needs a \"coeffs\" object");
  CliffordElement x;
  for (const auto& [key, value] : j.at("coeffs").items()) {
    Rat q = value.is_string() ? parse_rational(value.get<std::string>()) : Rat(int_from_json(value));
    x[subset_mask(key)] = q;
  }
  return x;
}

json to_json(const CliffordUnit& u) {
  json j = to_json(u.element);
  j["grade"] = grade_name(u.grade);
  return j;
}

CliffordUnit unit_from_json(const json& j, const CliffordAlgebra& alg) {
  CliffordUnit u = make_unit(clifford_from_json(j), alg);
  if (!j.contains("grade")) throw std::invalid_argument("unit needs a \"grade\"");
  const std::string grade = j.at("grade").get<std::string>();
  if (grade != grade_name(u.grade)) throw std::invalid_argument("grade \"" + grade + "\" does not match the element");
  return u;
}

json isometry_to_json(const IntMatrix& g) { return json{{"g", to_json(g)}}; }

IntMatrix isometry_from_json(const json& j) {
  if (!j.is_object() || !j.contains("g")) throw std::invalid_argument("isometry needs \"g\"");
  return int_matrix_from_json(j.at("g"));
}

json to_json(const Mat2& m) { return json::array({json::array({m.a, m.b}), json::array({m.c, m.d})}); }

json to_json(const SalemDatum& s) {
  return json{{"alpha", to_json(s.alpha)},
              {"nr", s.nr},
              {"trace", s.trace},
              {"A", s.A},
              {"factorization", "(t - " + std::to_string(s.nr) + ")(t^2 - " + std::to_string(s.A) + " t + 1)"},
              {"char_poly", json::array({1, s.char_poly[2], s.char_poly[1], s.char_poly[0]})},
              {"is_salem", s.is_salem},
              {"symplectic", s.symplectic},
              {"lambda_plus_inverse", s.A < 0 ? -s.A : s.A}};
}

json to_json(const CongruenceData& c) {
  json found = json::array();
  for (const auto& x : c.torsion_found) found.push_back(to_json(x.matrix()));
  json j{{"subgroup", {{"kind", "G_n"}, {"n", c.n}}},
         {"index_in_Pi", c.index_in_pi},
         {"delta_n", c.delta},
         {"torsion_bounded_search",
          {{"bound", c.torsion_bound},
           {"found", found},
           {"status", c.torsion_found.empty() ? "no torsion found (bounded evidence)" : "torsion exhibited"}}},
         {"free_rank", c.free_rank ? json(*c.free_rank) : json(nullptr)}};
  if (c.prime_power_model) j["prime_power_model"] = *c.prime_power_model;
  return j;
}

json to_json(const AutReport& r) {
  json samples = json::array();
  for (const auto& s : r.samples)
    samples.push_back({{"alpha", to_json(s.alpha)},
                       {"p_alpha", to_json(s.p_alpha)},
                       {"salem", to_json(s.salem)},
                       {"checks",
                        {{"isometry", s.isometry},
                         {"discriminant_kernel", s.in_kernel},
                         {"positive_cone", s.preserves_cone},
                         {"lift_roundtrip", s.lift_roundtrip}}}});
  json j{{"schema", kSchema},
         {"lattice", {{"family", "U(k)+<2l>"}, {"k", r.k}, {"l", r.l}}},
         {"bounds", {{"search", r.options.search_bound}, {"cap", r.options.form_cap}}},
         {"disc", int_to_json(r.disc)},
         {"signature", json::array({r.sig.plus, r.sig.minus})},
         {"signature_ok", r.signature_ok},
         {"root_free", r.root_free},
         {"hypotheses_met", r.hypotheses_met},
         {"group_model", r.group_model},
         {"v_coset_present", r.v_coset_present},
         {"v_search", {{"bound", r.options.search_bound}, {"count", r.v_search_count}}},
         {"antisymplectic_exists", r.antisymplectic_exists},
         {"m", r.m},
         {"samples", samples}};
  if (r.n) j["n"] = *r.n;
  if (r.congruence) j["congruence"] = to_json(*r.congruence);
  if (r.v_sample) {
    j["v_sample"] = to_json(CliffordAlgebra::from_odd(*r.v_sample));
    j["v_sample"]["grade"] = "odd";
  }
  return j;
}

namespace {

std::string signed_term(std::int64_t c, const char* suffix) {
  return (c < 0 ? "- " + std::to_string(-c) : "+ " + std::to_string(c)) + suffix;
}

}  // namespace

std::string render_text(const SalemDatum& s) {
  std::ostringstream os;
  os << "alpha = " << to_string(s.alpha) << "\n"
     << "Nr = " << s.nr << ", Tr = " << s.trace << ", A = " << s.A << "\n"
     << "factorization: (t - " << s.nr << ")(t^2 - " << s.A << " t + 1)\n"
     << "char poly: t^3 " << signed_term(s.char_poly[2], " t^2 ") << signed_term(s.char_poly[1], " t ")
     << signed_term(s.char_poly[0], "") << "\n"
     << "salem: " << (s.is_salem ? "yes" : "no") << "\n"
     << "symplectic: " << (s.symplectic ? "yes" : "no") << "\n";
  return os.str();
}

std::string render_text(const CongruenceData& c) {
  std::ostringstream os;
  os << "subgroup: G_" << c.n << "\n"
     << "index in Pi: " << c.index_in_pi << "\n"
     << "delta_n: " << c.delta << "\n"
     << "torsion: "
     << (c.torsion_found.empty() ? "none found (bounded evidence, bound " + std::to_string(c.torsion_bound) + ")"
                                 : std::to_string(c.torsion_found.size()) + " elements with |entries| <= " +
                                       std::to_string(c.torsion_bound) + ", e.g. " +
                                       to_string(c.torsion_found.front().matrix()))
     << "\n";
  if (c.free_rank) os << "free rank: " << *c.free_rank << "\n";
  if (c.prime_power_model) os << "model: " << *c.prime_power_model << "\n";
  return os.str();
}

std::string render_text(const AutReport& r) {
  std::ostringstream os;
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  os << "lattice: U(" << r.k << ") + <" << 2 * r.l << ">";
  if (r.n) os << "  (M_" << *r.n << ")";
  os << "\n"
     << "bounds: search " << r.options.search_bound << ", cap " << r.options.form_cap << "\n"
     << "disc: " << r.disc.get_str() << "\n"
     << "signature: (" << r.sig.plus << "," << r.sig.minus << ")\n"
     << "root free: " << yes(r.root_free) << "\n"
     << "hypotheses met: " << yes(r.hypotheses_met) << "\n"
     << "group model: " << r.group_model << "\n"
     << "V-coset present: " << yes(r.v_coset_present) << " (" << r.v_search_count << " odd units with |x_i| <= "
     << r.options.search_bound << ")\n"
     << "antisymplectic exists: " << yes(r.antisymplectic_exists) << "\n"
     << "m: " << r.m << "\n";
  if (r.congruence) os << render_text(*r.congruence);
  for (const auto& s : r.samples)
    os << "sample " << to_string(s.alpha) << ": A = " << s.salem.A << ", salem " << yes(s.salem.is_salem)
       << ", symplectic " << yes(s.salem.symplectic) << ", checks " << (s.all_checks() ? "pass" : "FAIL") << "\n";
  return os.str();
}

}  // namespace picard3
