#pragma once

#include <string>
#include <variant>

#include <json.hpp>

#include "classify.hpp"
#include "jets.hpp"
#include "pencils.hpp"

namespace jetgeom {

using Json = nlohmann::ordered_json;

// File formats (all coefficients are exact "p/q" strings):
//   variety: {"vars": N+1, "gens": [[["1/1",[1,0,0,1]], ...], ...], "label"?}
//            where each generator is a list of [coeff, exponent-list] terms;
//            a single generator may also be given as a flat term list.
//   chart:   {"n": n, "c": c, "order": K, "jets": [[[coeff, exps], ...], ...]}
//   pencil:  {"n": n, "A": [[coeff, ...], ...], "B": ...}

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, int nvars);

Json spec_to_json(const VarietySpec& spec);
VarietySpec spec_from_json(const Json& j);

Json chart_to_json(const Chart& chart);
Chart chart_from_json(const Json& j);

Json matrix_to_json(const RatMat& m);
RatMat matrix_from_json(const Json& j);

using InputObject = std::variant<VarietySpec, Chart>;
InputObject parse_input_text(const std::string& text);
InputObject parse_input_file(const std::string& path);
QuadricPencil parse_pencil_file(const std::string& path);

RatVec parse_point(const std::string& csv);

void write_text_file(const std::string& path, const std::string& text);

}  // namespace jetgeom
