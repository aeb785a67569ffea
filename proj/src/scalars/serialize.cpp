#include "rca/scalars/serialize.hpp"

namespace rca {

json cyclotomic_to_json(const Cyclotomic& x) {
    json terms = json::array();
    for (const auto& [e, q] : x.terms()) terms.push_back(json::array({e, to_string(q)}));
    return json{{"order", x.order()}, {"terms", terms}};
}

Cyclotomic cyclotomic_from_json(const json& j) {
    int n = j.at("order").get<int>();
    std::vector<std::pair<long, Rational>> t;
    for (const auto& term : j.at("terms")) t.emplace_back(term.at(0).get<long>(), parse_rational(term.at(1).get<std::string>()));
    return Cyclotomic::from_terms(n, t);
}

json param_poly_to_json(const ParamPoly& p) {
    json terms = json::array();
    for (const auto& [e, a] : p.terms()) {
        json exps = p.arity() == 2 ? json::array({e.first, e.second}) : json::array({e.first});
        terms.push_back(json{{"exp", exps}, {"coeff", cyclotomic_to_json(a)}});
    }
    return json{{"arity", p.arity()}, {"terms", terms}};
}

}  // namespace rca
