#pragma once

// JSON wire formats: series as {"order": N, "coefficients": ["p/q", ...]}
// (ascending exponent), polynomials as arrays of "p/q" strings ascending
// by power of l. Round-trips are exact.

#include <json.hpp>

#include "segrehilb/polynomial.hpp"
#include "segrehilb/rational.hpp"
#include "segrehilb/report.hpp"
#include "segrehilb/series.hpp"

namespace segrehilb {

inline nlohmann::json series_to_json(const TruncatedSeries& s) {
    nlohmann::json j;
    j["order"] = s.order();
    j["coefficients"] = nlohmann::json::array();
    for (const auto& c : s.coeffs()) j["coefficients"].push_back(c.str());
    return j;
}

inline TruncatedSeries series_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j.at("coefficients")) coeffs.push_back(Rational::parse(c.get<std::string>()));
    TruncatedSeries s(std::move(coeffs));
    if (j.contains("order") && j["order"].get<int>() != s.order())
        throw std::invalid_argument("series JSON: order does not match coefficient count");
    return s;
}

inline nlohmann::json polynomial_to_json(const PolynomialInL& p) {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& c : p.coeffs()) j.push_back(c.str());
    return j;
}

inline PolynomialInL polynomial_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    for (const auto& c : j) coeffs.push_back(Rational::parse(c.get<std::string>()));
    return PolynomialInL(std::move(coeffs));
}

inline nlohmann::json report_to_json(const CheckReport& r) {
    nlohmann::json j;
    j["check"] = r.name;
    j["params"] = nlohmann::json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["order"] = r.order;
    j["match"] = r.match;
    if (!r.match) {
        j["witness"] = {{"index", r.mismatch_index}, {"lhs", r.lhs_value}, {"rhs", r.rhs_value}};
    }
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

}  // namespace segrehilb
