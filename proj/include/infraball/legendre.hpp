#pragma once

#include <vector>

#include "infraball/scalar_poly.hpp"

namespace infraball {

// Ascending coefficient list of the Legendre polynomial P_n(t) via the
// three-term recurrence (n+1) P_{n+1} = (2n+1) t P_n - n P_{n-1}.
inline std::vector<Rational> legendre_coeffs(int n) {
    std::vector<Rational> pm1{Rational(1)};  // P_0
    if (n == 0) return pm1;
    std::vector<Rational> p{Rational(0), Rational(1)};  // P_1
    for (int k = 1; k < n; ++k) {
        std::vector<Rational> next(static_cast<std::size_t>(k) + 2, Rational(0));
        for (std::size_t i = 0; i < p.size(); ++i) next[i + 1] += Rational(2 * k + 1) * p[i];
        for (std::size_t i = 0; i < pm1.size(); ++i) next[i] -= Rational(k) * pm1[i];
        for (auto& c : next) c /= Rational(k + 1);
        pm1 = std::move(p);
        p = std::move(next);
    }
    return p;
}

// C_{n,m}(t) = d^m/dt^m P_n(t); the associated Legendre function in the
// Hobson convention without the Condon-Shortley phase is
// P_n^m(t) = (1-t^2)^{m/2} C_{n,m}(t), so P_1^1(t) = +sqrt(1-t^2).
inline std::vector<Rational> legendre_derivative_coeffs(int n, int m) {
    if (n < 0 || m > n) return {};
    std::vector<Rational> c = legendre_coeffs(n);
    for (int k = 0; k < m; ++k) {
        std::vector<Rational> d;
        for (std::size_t i = 1; i < c.size(); ++i) d.push_back(Rational(i) * c[i]);
        c = std::move(d);
    }
    return c;
}

// Zonal polynomial Q_{n,m} = rho^{n-m} C_{n,m}(x0/rho), a polynomial in x0
// and rho^2 since C_{n,m} has parity n-m.  Zero for m > n or n < 0.
inline ScalarPoly zonal(int n, int m) {
    ScalarPoly out;
    if (n < 0 || m > n) return out;
    const std::vector<Rational> c = legendre_derivative_coeffs(n, m);
    const ScalarPoly rho2 = ScalarPoly::variable(0) * ScalarPoly::variable(0) +
                            ScalarPoly::variable(1) * ScalarPoly::variable(1) +
                            ScalarPoly::variable(2) * ScalarPoly::variable(2);
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        const int pow2 = (n - m - static_cast<int>(k));
        // parity of C_{n,m} guarantees pow2 is even and non-negative
        ScalarPoly term = ScalarPoly::monomial(
            Monomial{static_cast<std::uint32_t>(k), 0, 0}, c[k]);
        for (int j = 0; j < pow2 / 2; ++j) term *= rho2;
        out += term;
    }
    return out;
}

// Re((x1 + i x2)^m) and Im((x1 + i x2)^m).
inline ScalarPoly re_power(int m) {
    ScalarPoly out;
    Integer binom(1);
    for (int k = 0; k <= m; ++k) {
        if (k % 2 == 0) {
            Rational c(binom);
            if (k % 4 == 2) c = -c;
            out.add_term(Monomial{0, static_cast<std::uint32_t>(m - k),
                                  static_cast<std::uint32_t>(k)}, c);
        }
        binom = binom * (m - k) / (k + 1);
    }
    return out;
}

inline ScalarPoly im_power(int m) {
    ScalarPoly out;
    Integer binom(1);
    for (int k = 0; k <= m; ++k) {
        if (k % 2 == 1) {
            Rational c(binom);
            if (k % 4 == 3) c = -c;
            out.add_term(Monomial{0, static_cast<std::uint32_t>(m - k),
                                  static_cast<std::uint32_t>(k)}, c);
        }
        binom = binom * (m - k) / (k + 1);
    }
    return out;
}

}  // namespace infraball
