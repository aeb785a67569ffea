#pragma once
#include "json.hpp"
#include "rca/scalars/param_poly.hpp"

namespace rca {

using json = nlohmann::ordered_json;

inline json rational_to_json(const Rational& q) { return to_string(q); }
inline Rational rational_from_json(const json& j) { return parse_rational(j.get<std::string>()); }

json cyclotomic_to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const json& j);
json param_poly_to_json(const ParamPoly& p);

}  // namespace rca
