#pragma once

#include <map>
#include <optional>
#include <utility>

#include "infraball/monomial.hpp"
#include "infraball/rational.hpp"

namespace infraball {

// Real-valued polynomial in x0,x1,x2 with exact rational coefficients.
// Canonical form is maintained eagerly: no zero coefficients are stored,
// so structural equality of the term maps is polynomial equality.
class ScalarPoly {
  public:
    using TermMap = std::map<Monomial, Rational>;

    ScalarPoly() = default;
    explicit ScalarPoly(const Rational& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }
    static ScalarPoly monomial(const Monomial& m, const Rational& c) {
        ScalarPoly p;
        if (c != 0) p.terms_[m] = c;
        return p;
    }
    // x_i
    static ScalarPoly variable(int axis) {
        Monomial m;
        m.exp[static_cast<std::size_t>(axis)] = 1;
        return monomial(m, Rational(1));
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Degree of the zero polynomial is "none".
    std::optional<std::uint32_t> degree() const {
        if (terms_.empty()) return std::nullopt;
        std::uint32_t d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.total_degree());
        return d;
    }

    bool is_homogeneous(std::uint32_t n) const {
        for (const auto& [m, c] : terms_)
            if (m.total_degree() != n) return false;
        return true;
    }

    Rational coeff(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    ScalarPoly& operator+=(const ScalarPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    ScalarPoly& operator-=(const ScalarPoly& o) {
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend ScalarPoly operator+(ScalarPoly a, const ScalarPoly& b) { return a += b; }
    friend ScalarPoly operator-(ScalarPoly a, const ScalarPoly& b) { return a -= b; }
    friend ScalarPoly operator-(const ScalarPoly& a) {
        ScalarPoly r;
        for (const auto& [m, c] : a.terms_) r.terms_.emplace(m, -c);
        return r;
    }

    friend ScalarPoly operator*(const ScalarPoly& a, const ScalarPoly& b) {
        ScalarPoly r;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
        return r;
    }
    friend ScalarPoly operator*(const Rational& c, const ScalarPoly& a) {
        ScalarPoly r;
        if (c == 0) return r;
        for (const auto& [m, k] : a.terms_) r.terms_.emplace(m, c * k);
        return r;
    }
    ScalarPoly& operator*=(const Rational& c) { return *this = c * *this; }
    ScalarPoly& operator*=(const ScalarPoly& o) { return *this = *this * o; }

    ScalarPoly partial(int axis) const {
        auto ax = static_cast<std::size_t>(axis);
        ScalarPoly r;
        for (const auto& [m, c] : terms_) {
            if (m.exp[ax] == 0) continue;
            Monomial d = m;
            d.exp[ax] -= 1;
            r.add_term(d, c * static_cast<long>(m.exp[ax]));
        }
        return r;
    }

    Rational eval(const std::array<Rational, 3>& p) const {
        Rational total(0);
        for (const auto& [m, c] : terms_) {
            Rational v = c;
            for (std::size_t i = 0; i < 3; ++i)
                for (std::uint32_t k = 0; k < m.exp[i]; ++k) v *= p[i];
            total += v;
        }
        return total;
    }

    friend bool operator==(const ScalarPoly&, const ScalarPoly&) = default;

  private:
    TermMap terms_;
};

}  // namespace infraball
