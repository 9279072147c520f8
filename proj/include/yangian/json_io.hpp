#pragma once

#include "yangian/linalg.hpp"
#include "yangian/matrix.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace yangian {

// Wire formats used by the CLI report writer.
//   CycNum:    {"n": N, "coeffs": ["p/q", ...]}          (power basis w^0..w^{phi-1})
//   ParamPoly: {"terms": [{"a": da, "b": db, "c": <CycNum>}]}
//   Matrix:    {"rows": r, "cols": c, "entries": [...]}
//   Vector:    {"basis": "tensor"|"bell", "n": N, "coeffs": [...]}

inline nlohmann::json to_json(const CycNum& x) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(rat_str(c));
    return {{"n", x.order()}, {"coeffs", coeffs}};
}

inline CycNum cycnum_from_json(const nlohmann::json& j) {
    int n = j.at("n").get<int>();
    std::vector<Rational> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.push_back(rat_parse(s.get<std::string>()));
    return CycNum(n, std::move(coeffs));
}

inline nlohmann::json to_json(const BiPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [key, c] : p.terms())
        terms.push_back({{"a", key.first}, {"b", key.second}, {"c", to_json(c)}});
    return {{"terms", terms}};
}

inline BiPoly parampoly_from_json(const nlohmann::json& j, int order) {
    BiPoly p(order);
    for (const auto& t : j.at("terms"))
        p.add_term(t.at("a").get<int>(), t.at("b").get<int>(), cycnum_from_json(t.at("c")));
    return p;
}

template <class S>
nlohmann::json to_json(const Matrix<S>& m) {
    nlohmann::json entries = nlohmann::json::array();
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) entries.push_back(to_json(m.at(i, j)));
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

inline nlohmann::json vector_to_json(const std::vector<BiPoly>& coeffs, int n, const std::string& basis) {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : coeffs) cs.push_back(to_json(c));
    return {{"basis", basis}, {"n", n}, {"coeffs", cs}};
}

inline nlohmann::json vector_to_json(const std::vector<CycNum>& coeffs, int n, const std::string& basis) {
    nlohmann::json cs = nlohmann::json::array();
    for (const auto& c : coeffs) cs.push_back(to_json(c));
    return {{"basis", basis}, {"n", n}, {"coeffs", cs}};
}

}  // namespace yangian
