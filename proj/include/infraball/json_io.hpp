#pragma once

#include <string>

#include <json.hpp>

#include "infraball/qpoly.hpp"

namespace infraball {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Schema: {"terms":[{"exp":[a,b,c],"coeff":[q0,q1,q2,q3]}]}
// Canonical output: terms ascending lexicographically by exp, rationals in
// lowest terms with positive denominator, zero terms omitted.
inline nlohmann::ordered_json qp_to_json(const QPolynomial& f) {
    std::map<Monomial, std::array<Rational, 4>> rows;
    for (int i = 0; i < 4; ++i)
        for (const auto& [m, c] : f.component(i).terms())
            rows[m][static_cast<std::size_t>(i)] = c;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, coeffs] : rows) {
        nlohmann::ordered_json t;
        t["exp"] = {m.exp[0], m.exp[1], m.exp[2]};
        t["coeff"] = {to_string(coeffs[0]), to_string(coeffs[1]), to_string(coeffs[2]),
                      to_string(coeffs[3])};
        terms.push_back(std::move(t));
    }
    nlohmann::ordered_json j;
    j["terms"] = std::move(terms);
    return j;
}

inline std::string qp_serialize(const QPolynomial& f) { return qp_to_json(f).dump(); }

inline QPolynomial qp_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        throw ParseError("polynomial JSON must be an object with a \"terms\" array");
    std::array<ScalarPoly, 4> comps;
    std::size_t idx = 0;
    for (const auto& t : j["terms"]) {
        const std::string where = "terms[" + std::to_string(idx) + "]";
        if (!t.is_object() || !t.contains("exp") || !t.contains("coeff"))
            throw ParseError(where + ": term must carry \"exp\" and \"coeff\"");
        const auto& e = t["exp"];
        if (!e.is_array() || e.size() != 3)
            throw ParseError(where + ".exp: expected 3 entries");
        Monomial m;
        for (std::size_t i = 0; i < 3; ++i) {
            if (!e[i].is_number_integer())
                throw ParseError(where + ".exp[" + std::to_string(i) + "]: expected an integer");
            long long v = e[i].get<long long>();
            if (v < 0)
                throw ParseError(where + ".exp[" + std::to_string(i) + "]: negative exponent");
            m.exp[i] = static_cast<std::uint32_t>(v);
        }
        const auto& c = t["coeff"];
        if (!c.is_array() || c.size() != 4)
            throw ParseError(where + ".coeff: expected 4 entries");
        for (std::size_t i = 0; i < 4; ++i) {
            if (!c[i].is_string())
                throw ParseError(where + ".coeff[" + std::to_string(i) + "]: expected a string");
            Rational r;
            try {
                r = rational_from_string(c[i].get<std::string>());
            } catch (const RationalFormatError& ex) {
                throw ParseError(where + ".coeff[" + std::to_string(i) + "]: " + ex.what());
            }
            comps[i].add_term(m, r);
        }
        ++idx;
    }
    return {std::move(comps[0]), std::move(comps[1]), std::move(comps[2]), std::move(comps[3])};
}

inline QPolynomial qp_parse(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw ParseError(std::string("JSON syntax error at byte ") + std::to_string(ex.byte) +
                         ": " + ex.what());
    }
    return qp_from_json(j);
}

}  // namespace infraball
