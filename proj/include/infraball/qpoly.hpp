#pragma once

#include <array>
#include <optional>

#include "infraball/scalar_poly.hpp"

namespace infraball {

// Quaternion with rational entries; the value type of evaluation.
struct QRational {
    std::array<Rational, 4> c{Rational(0), Rational(0), Rational(0), Rational(0)};
    friend bool operator==(const QRational&, const QRational&) = default;
};

// e1*e2 = e3, e2*e3 = e1, e3*e1 = e2, ei^2 = -1
inline QRational qmul(const QRational& a, const QRational& b) {
    QRational r;
    r.c[0] = a.c[0] * b.c[0] - a.c[1] * b.c[1] - a.c[2] * b.c[2] - a.c[3] * b.c[3];
    r.c[1] = a.c[0] * b.c[1] + a.c[1] * b.c[0] + a.c[2] * b.c[3] - a.c[3] * b.c[2];
    r.c[2] = a.c[0] * b.c[2] - a.c[1] * b.c[3] + a.c[2] * b.c[0] + a.c[3] * b.c[1];
    r.c[3] = a.c[0] * b.c[3] + a.c[1] * b.c[2] - a.c[2] * b.c[1] + a.c[3] * b.c[0];
    return r;
}

// Quaternion-valued polynomial f = f0 + f1 e1 + f2 e2 + f3 e3.  The e3
// component is always stored, also for reduced values, so that operators
// claiming to preserve R^3 can be checked rather than assumed.
class QPolynomial {
  public:
    QPolynomial() = default;
    explicit QPolynomial(ScalarPoly scalar) { comp_[0] = std::move(scalar); }
    QPolynomial(ScalarPoly c0, ScalarPoly c1, ScalarPoly c2, ScalarPoly c3)
        : comp_{std::move(c0), std::move(c1), std::move(c2), std::move(c3)} {}

    static QPolynomial unit(int i) {
        QPolynomial q;
        q.comp_[static_cast<std::size_t>(i)] = ScalarPoly(Rational(1));
        return q;
    }
    static QPolynomial constant(const Rational& c) { return QPolynomial(ScalarPoly(c)); }
    // the coordinate x_i as a scalar polynomial
    static QPolynomial coordinate(int axis) { return QPolynomial(ScalarPoly::variable(axis)); }
    // x = x0 + x1 e1 + x2 e2
    static QPolynomial x() {
        return {ScalarPoly::variable(0), ScalarPoly::variable(1), ScalarPoly::variable(2),
                ScalarPoly()};
    }
    // |x|^2
    static ScalarPoly rho2() {
        ScalarPoly r;
        for (int i = 0; i < 3; ++i)
            r += ScalarPoly::variable(i) * ScalarPoly::variable(i);
        return r;
    }

    const ScalarPoly& component(int i) const { return comp_[static_cast<std::size_t>(i)]; }
    const ScalarPoly& scalar_part() const { return comp_[0]; }

    bool is_zero() const {
        for (const auto& c : comp_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_reduced() const { return comp_[3].is_zero(); }
    bool is_scalar_valued() const {
        return comp_[1].is_zero() && comp_[2].is_zero() && comp_[3].is_zero();
    }

    std::optional<std::uint32_t> degree() const {
        std::optional<std::uint32_t> d;
        for (const auto& c : comp_) {
            auto dc = c.degree();
            if (dc && (!d || *dc > *d)) d = dc;
        }
        return d;
    }
    bool is_homogeneous(std::uint32_t n) const {
        for (const auto& c : comp_)
            if (!c.is_homogeneous(n)) return false;
        return true;
    }

    // homogeneous part of total degree n
    QPolynomial homogeneous_part(std::uint32_t n) const {
        QPolynomial r;
        for (int i = 0; i < 4; ++i)
            for (const auto& [m, c] : comp_[static_cast<std::size_t>(i)].terms())
                if (m.total_degree() == n) r.comp_[static_cast<std::size_t>(i)].add_term(m, c);
        return r;
    }

    QPolynomial& operator+=(const QPolynomial& o) {
        for (int i = 0; i < 4; ++i) comp_[i] += o.comp_[i];
        return *this;
    }
    QPolynomial& operator-=(const QPolynomial& o) {
        for (int i = 0; i < 4; ++i) comp_[i] -= o.comp_[i];
        return *this;
    }
    friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
    friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
    friend QPolynomial operator-(const QPolynomial& a) {
        return {-a.comp_[0], -a.comp_[1], -a.comp_[2], -a.comp_[3]};
    }
    friend QPolynomial operator*(const Rational& c, const QPolynomial& a) {
        return {c * a.comp_[0], c * a.comp_[1], c * a.comp_[2], c * a.comp_[3]};
    }
    friend QPolynomial operator*(const ScalarPoly& s, const QPolynomial& a) {
        return {s * a.comp_[0], s * a.comp_[1], s * a.comp_[2], s * a.comp_[3]};
    }

    friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

  private:
    std::array<ScalarPoly, 4> comp_;
};

// Noncommutative quaternion product lifted to polynomial coefficients.
inline QPolynomial qp_mul(const QPolynomial& a, const QPolynomial& b) {
    const ScalarPoly &a0 = a.component(0), &a1 = a.component(1), &a2 = a.component(2),
                     &a3 = a.component(3);
    const ScalarPoly &b0 = b.component(0), &b1 = b.component(1), &b2 = b.component(2),
                     &b3 = b.component(3);
    return {a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0};
}

inline QPolynomial qp_conjugate(const QPolynomial& f) {
    return {f.component(0), -f.component(1), -f.component(2), -f.component(3)};
}

// x-bar = x0 - x1 e1 - x2 e2
inline QPolynomial x_bar() { return qp_conjugate(QPolynomial::x()); }

inline QPolynomial qp_partial(const QPolynomial& f, int axis) {
    return {f.component(0).partial(axis), f.component(1).partial(axis),
            f.component(2).partial(axis), f.component(3).partial(axis)};
}

inline QRational qp_eval(const QPolynomial& f, const std::array<Rational, 3>& p) {
    QRational r;
    for (int i = 0; i < 4; ++i) r.c[static_cast<std::size_t>(i)] = f.component(i).eval(p);
    return r;
}

}  // namespace infraball
