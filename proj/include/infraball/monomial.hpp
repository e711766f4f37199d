#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <stdexcept>

namespace infraball {

// x0^a x1^b x2^c
struct Monomial {
    std::array<std::uint32_t, 3> exp{0, 0, 0};

    Monomial() = default;
    Monomial(std::uint32_t a, std::uint32_t b, std::uint32_t c) : exp{a, b, c} {}

    std::uint32_t total_degree() const { return exp[0] + exp[1] + exp[2]; }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.exp[0] + b.exp[0], a.exp[1] + b.exp[1], a.exp[2] + b.exp[2]};
}

}  // namespace infraball
