#pragma once

#include "ffdesign/contrast.hpp"
#include "ffdesign/fraction.hpp"
#include "ffdesign/indicator.hpp"
#include "ffdesign/symmetry.hpp"

#include <nlohmann/json_fwd.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace ffd::io {

// Space spec: a comma list of level counts ("2,2,3") or a JSON object
// {"factors": [[-1,1],[-1,1],[-1,0,1]]} (levels as numbers or "p/q" strings).
DesignSpace parse_space_spec(const std::string& spec);
nlohmann::json space_to_json(const DesignSpace& space);
DesignSpace space_from_json(const nlohmann::json& j);

// Design table: UTF-8 CSV, one header row of factor names, one row per run,
// values parsed as exact rationals.
std::vector<std::vector<Rational>> read_design_csv(std::istream& in);
std::string design_csv(const DesignSpace& space, const Fraction& f);

// Indicator JSON: {"space": ..., "theta": [{"exponents": [...], "value": "p/q"}, ...]}.
nlohmann::json indicator_to_json(const DesignSpace& space, const Poly& p);
// Reads the theta coefficient map; exponents outside L are rejected.
Poly indicator_from_json(const DesignSpace& space, const nlohmann::json& j);
nlohmann::json parse_json_document(std::istream& in);

// ContrastRep JSON: {"constant": s, "terms": [{"J": [...], "itilde": [...],
// "value": "p/q"}, ...]} with terms in row order, zero terms omitted.
nlohmann::json contrast_to_json(const ContrastMatrix& cm, const ContrastRep& rep);

// Classification JSON: {"total": N, "orbits": [{"size": k, "representative":
// [[levels...], ...], "theta": ..., "mu": ...}]}.
nlohmann::json classification_to_json(const DesignSpace& space, const ContrastMatrix& cm,
                                      const std::vector<Orbit>& orbits);

// "1/4 - 1/4*x1 + ... " with variables x1..xn in exponent order.
std::string poly_to_string(const DesignSpace& space, const Poly& p);
// "6 + 2*z{2(1)} + z{12(11)} - z{23(12)} + z{123(111)}".
std::string contrast_rep_to_string(const ContrastMatrix& cm, const ContrastRep& rep);

} // namespace ffd::io
