#pragma once

#include <map>

#include <json.hpp>

#include "infraball/basis.hpp"

namespace infraball {

// Finite expansion in the orthogonal basis; zero coefficients are not stored.
struct Expansion {
    int max_degree = 0;
    std::map<BasisId, Rational> coefficients;
};

// Coefficients via orthogonality, degree by degree: a = <f_n, B>/|B|^2 on the
// homogeneous part f_n.  Within each degree the Gram matrix is diagonal, so
// this is the exact orthogonal projection onto the degree-n span.
inline Expansion project(const QPolynomial& f, int max_degree) {
    if (!f.is_reduced())
        throw std::invalid_argument("project: input must be reduced (zero e3 component)");
    if (max_degree < 0) throw std::invalid_argument("project: max_degree must be >= 0");
    Expansion e;
    e.max_degree = max_degree;
    for (int n = 0; n <= max_degree; ++n) {
        const QPolynomial fn = f.homogeneous_part(static_cast<std::uint32_t>(n));
        if (fn.is_zero()) continue;
        for (const BasisId& id : enumerate_basis(n)) {
            const QPolynomial b = basis_element(id);
            const Rational a = inner_product(fn, b) / norm_squared(b);
            if (a != 0) e.coefficients.emplace(id, a);
        }
    }
    return e;
}

inline QPolynomial reconstruct(const Expansion& e) {
    QPolynomial f;
    for (const auto& [id, a] : e.coefficients) f += a * basis_element(id);
    return f;
}

// |f - reconstruct(e)|^2; zero exactly when f equals its expansion.
inline PiRational residual_norm2(const QPolynomial& f, const Expansion& e) {
    return norm_squared(f - reconstruct(e));
}

inline nlohmann::ordered_json expansion_to_json(const Expansion& e) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
    for (const auto& [id, a] : e.coefficients) coeffs[to_string(id)] = to_string(a);
    nlohmann::ordered_json j;
    j["max_degree"] = e.max_degree;
    j["coefficients"] = std::move(coeffs);
    return j;
}

inline Expansion expansion_from_json(const nlohmann::json& j) {
    Expansion e;
    e.max_degree = j.at("max_degree").get<int>();
    for (const auto& [key, val] : j.at("coefficients").items()) {
        const Rational a = rational_from_string(val.get<std::string>());
        if (a != 0) e.coefficients.emplace(basis_id_from_string(key), a);
    }
    return e;
}

}  // namespace infraball
