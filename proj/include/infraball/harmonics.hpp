#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "infraball/legendre.hpp"
#include "infraball/qpoly.hpp"

namespace infraball {

enum class Parity : char { plus = '+', minus = '-' };

inline char to_char(Parity p) { return static_cast<char>(p); }
inline Parity parity_from_char(char c) {
    if (c == '+') return Parity::plus;
    if (c == '-') return Parity::minus;
    throw std::invalid_argument(std::string("bad parity character: ") + c);
}
inline Parity opposite(Parity p) { return p == Parity::plus ? Parity::minus : Parity::plus; }

// Index of a solid spherical harmonic U^{+/-}_{n,m}.  m = -1 denotes the
// substitution-rule element; (parity -, m = 0) denotes the zero function.
struct HarmonicId {
    int n = 0;
    int m = 0;
    Parity parity = Parity::plus;
};

inline void validate(const HarmonicId& id) {
    if (id.n < 0) throw std::invalid_argument("harmonic degree must be >= 0");
    if (id.m < -1 || id.m > id.n)
        throw std::invalid_argument("harmonic order out of range for degree " +
                                    std::to_string(id.n) + ": " + std::to_string(id.m));
}

// Exact rational multiple of pi; the value type of all ball inner products.
struct PiRational {
    Rational coeff{0};

    PiRational() = default;
    explicit PiRational(Rational c) : coeff(std::move(c)) {}

    bool is_zero() const { return coeff == 0; }
    friend PiRational operator+(const PiRational& a, const PiRational& b) {
        return PiRational(a.coeff + b.coeff);
    }
    friend PiRational operator-(const PiRational& a, const PiRational& b) {
        return PiRational(a.coeff - b.coeff);
    }
    PiRational& operator+=(const PiRational& o) {
        coeff += o.coeff;
        return *this;
    }
    friend PiRational operator*(const Rational& c, const PiRational& a) {
        return PiRational(c * a.coeff);
    }
    // ratio of two pi-multiples is a plain rational
    friend Rational operator/(const PiRational& a, const PiRational& b) {
        if (b.coeff == 0) throw std::domain_error("division by zero PiRational");
        return a.coeff / b.coeff;
    }
    friend bool operator==(const PiRational&, const PiRational&) = default;
};

inline std::string to_string(const PiRational& v) { return to_string(v.coeff) + "*pi"; }

inline nlohmann::ordered_json pi_to_json(const PiRational& v) {
    nlohmann::ordered_json j;
    j["pi_coeff"] = to_string(v.coeff);
    return j;
}

// U^+_{n,m} = rho^n P_n^m(cos theta) cos(m phi),
// U^-_{n,m} = rho^n P_n^m(cos theta) sin(m phi)
// built entirely in Cartesian form: zonal(n,m) * {Re,Im}((x1+i x2)^m).
// U^-_{n,0} = 0 and U^{+/-}_{n,-1} = -/+ (1/(n(n+1))) U^{+/-}_{n,1}.
inline QPolynomial solid_harmonic(const HarmonicId& id) {
    validate(id);
    if (id.m == -1) {
        if (id.n == 0) return QPolynomial();  // coefficient rules only reach this with factor 0
        Rational scale = rat(1, static_cast<long>(id.n) * (id.n + 1));
        if (id.parity == Parity::plus) scale = -scale;
        return scale * solid_harmonic({id.n, 1, id.parity});
    }
    if (id.parity == Parity::minus && id.m == 0) return QPolynomial();
    const ScalarPoly angular = id.parity == Parity::plus ? re_power(id.m) : im_power(id.m);
    return QPolynomial(zonal(id.n, id.m) * angular);
}

// Moment of the unit ball: zero when any exponent is odd, otherwise
// 4 pi / (a+b+c+3) * (a-1)!!(b-1)!!(c-1)!! / (a+b+c+1)!!.
inline PiRational ball_monomial_integral(const Monomial& mono) {
    const long a = mono.exp[0], b = mono.exp[1], c = mono.exp[2];
    if (a % 2 || b % 2 || c % 2) return PiRational();
    const long total = a + b + c;
    Rational value = rat(4, total + 3);
    value *= Rational(double_factorial(a - 1) * double_factorial(b - 1) *
                      double_factorial(c - 1));
    value /= Rational(double_factorial(total + 1));
    return PiRational(value);
}

inline PiRational integrate_ball(const ScalarPoly& p) {
    PiRational total;
    for (const auto& [m, c] : p.terms()) total += c * ball_monomial_integral(m);
    return total;
}

// <f,g> = integral over the unit ball of sum_i f_i g_i, all four components.
inline PiRational inner_product(const QPolynomial& f, const QPolynomial& g) {
    PiRational total;
    for (int i = 0; i < 4; ++i) total += integrate_ball(f.component(i) * g.component(i));
    return total;
}

inline PiRational norm_squared(const QPolynomial& f) { return inner_product(f, f); }

// Closed form for <rho^{2k} U_id, rho^{2k'} U_id'>:
//   2 (1 + delta_{0,m}) pi / ((2(k+k') + n + n' + 3)(2n+1)) * (n+m)!/(n-m)!
// when n=n', m=m' and the parities agree; zero otherwise.
inline PiRational harmonic_inner_closed_form(int k, int kp, const HarmonicId& a,
                                             const HarmonicId& b) {
    if (k < 0 || kp < 0) throw std::invalid_argument("negative radial power");
    validate(a);
    validate(b);
    if (a.m == -1 || b.m == -1)
        throw std::invalid_argument("closed form requires m >= 0; substitute U_{n,-1} first");
    if (a.parity != b.parity || a.n != b.n || a.m != b.m) return PiRational();
    if (a.parity == Parity::minus && a.m == 0) return PiRational();  // zero function
    Rational v = rat(2 * (a.m == 0 ? 2 : 1),
                     static_cast<long>(2 * (k + kp) + a.n + b.n + 3) * (2 * a.n + 1));
    v *= Rational(factorial(static_cast<unsigned long>(a.n + a.m)));
    v /= Rational(factorial(static_cast<unsigned long>(a.n - a.m)));
    return PiRational(v);
}

}  // namespace infraball
