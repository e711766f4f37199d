#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "infraball/qpoly.hpp"

namespace infraball {

namespace detail {

// Table ordering: total degree ascending, then by (exp2, exp1, exp0).
inline bool table_order(const Monomial& a, const Monomial& b) {
    if (a.total_degree() != b.total_degree()) return a.total_degree() < b.total_degree();
    return std::tuple(a.exp[2], a.exp[1], a.exp[0]) < std::tuple(b.exp[2], b.exp[1], b.exp[0]);
}

inline std::string render_monomial(const Monomial& m) {
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (m.exp[static_cast<std::size_t>(i)] == 0) continue;
        if (!s.empty()) s += " ";
        s += "x" + std::to_string(i);
        if (m.exp[static_cast<std::size_t>(i)] > 1)
            s += "^" + std::to_string(m.exp[static_cast<std::size_t>(i)]);
    }
    return s;
}

struct RenderedTerm {
    bool negative;
    std::string body;  // magnitude and monomial, no sign
};

inline std::vector<RenderedTerm> render_terms(const ScalarPoly& p) {
    std::vector<std::pair<Monomial, Rational>> terms(p.terms().begin(), p.terms().end());
    std::sort(terms.begin(), terms.end(),
              [](const auto& a, const auto& b) { return table_order(a.first, b.first); });
    std::vector<RenderedTerm> out;
    for (const auto& [m, c] : terms) {
        RenderedTerm t;
        t.negative = c < 0;
        const Rational mag = t.negative ? Rational(-c) : c;
        const std::string mono = render_monomial(m);
        if (mono.empty())
            t.body = to_string(mag);
        else if (mag == 1)
            t.body = mono;
        else
            t.body = to_string(mag) + " " + mono;
        out.push_back(std::move(t));
    }
    return out;
}

inline void append_terms(std::string& s, const std::vector<RenderedTerm>& ts) {
    for (const auto& t : ts) {
        if (s.empty())
            s += (t.negative ? "-" : "") + t.body;
        else
            s += (t.negative ? " - " : " + ") + t.body;
    }
}

}  // namespace detail

// Paper-table style: scalar terms first, then each unit component, with a
// multi-term component parenthesized, e.g.
//   "8 x0^2 + 6 x1^2 + 6 x2^2 - 2 x0 x1 e1 - 2 x0 x2 e2".
inline std::string render_text(const QPolynomial& f) {
    std::string s;
    detail::append_terms(s, detail::render_terms(f.component(0)));
    for (int i = 1; i < 4; ++i) {
        const auto ts = detail::render_terms(f.component(i));
        if (ts.empty()) continue;
        const std::string unit = "e" + std::to_string(i);
        if (ts.size() == 1) {
            std::string one;
            detail::append_terms(one, ts);
            if (s.empty())
                s += one + " " + unit;
            else
                s += (ts[0].negative ? " - " : " + ") + ts[0].body + " " + unit;
        } else {
            std::string inner;
            detail::append_terms(inner, ts);
            s += (s.empty() ? "( " : " + ( ") + inner + " ) " + unit;
        }
    }
    return s.empty() ? "0" : s;
}

}  // namespace infraball
