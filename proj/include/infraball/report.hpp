#pragma once

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "infraball/basis.hpp"
#include "infraball/table_data.hpp"
#include "infraball/text_render.hpp"

namespace infraball {

enum class DiscrepancyStatus { match, mismatch, out_of_range, unparseable };

inline const char* to_string(DiscrepancyStatus s) {
    switch (s) {
        case DiscrepancyStatus::match: return "match";
        case DiscrepancyStatus::mismatch: return "mismatch";
        case DiscrepancyStatus::out_of_range: return "out_of_range";
        default: return "unparseable";
    }
}

struct DiscrepancyEntry {
    std::string formula_name;
    std::string indices;
    std::string paper_value;
    std::string computed_value;
    DiscrepancyStatus status;
    std::string note;
};

struct DiscrepancyReport {
    std::vector<DiscrepancyEntry> entries;

    std::size_t count(DiscrepancyStatus s) const {
        std::size_t k = 0;
        for (const auto& e : entries)
            if (e.status == s) ++k;
        return k;
    }
    std::vector<DiscrepancyEntry> with_name(const std::string& name) const {
        std::vector<DiscrepancyEntry> out;
        for (const auto& e : entries)
            if (e.formula_name == name) out.push_back(e);
        return out;
    }
};

// ---- closed forms from the reference theorem ----

namespace closed_form {

inline Rational fact_ratio(int a, int b) {  // a!/b!
    return Rational(factorial(static_cast<unsigned long>(a))) /
           Rational(factorial(static_cast<unsigned long>(b)));
}

inline PiRational norm_x(int n, int m) {
    if (m == 0) return PiRational(rat(4 * (n + 1), 2 * n + 3));
    return PiRational(rat(2 * (n + 1), 2 * n + 3) * fact_ratio(n + 1 + m, n + 1 - m));
}

inline PiRational norm_y_m0(int n) {
    const long a = 2L * n - 3, b = 2L * n + 1, c = 2L * n + 3;
    Integer big = Integer(a) * (3 * n + 1) +
                  Integer(b) * b * b * n * (n - 1) * (3 * n - 4);
    return PiRational(rat(8 * n, a * b * c) * Rational(big));
}

inline PiRational norm_y(int n, int m) {
    const Integer t1 = Integer(2 * n + 1) * (2 * n + 1) * (2 * n + 1) * (n * n - m * m) * (n - 1);
    const Integer t2 = Integer(2) * (n - 2 * m * m) * (n - 2 * m * m);
    const Integer t3 = Integer(n + m) * (n - m + 1) * (n - m + 1) * (2 * m - 1) * (2 * m - 1);
    const Integer t4 = Integer(n - m) * (n + m + 1) * (n + m + 1) * (2 * m + 1) * (2 * m + 1);
    Rational v = rat(4, static_cast<long>(2 * n - 1) * (2 * n - 1) * (2 * n + 1) * (2 * n + 3));
    return PiRational(v * fact_ratio(n + m, n - m) * Rational(t1 + t2 + t3 + t4));
}

inline PiRational norm_zu_m0(int n) {
    return PiRational(rat(4L * n * (n + 1), static_cast<long>(2 * n + 1) * (2 * n + 3)));
}

inline PiRational norm_zu(int n, int m) {
    const Integer q = Integer(2 * n + 1) * (2 * n + 1);
    const Integer t1 = Integer(2 * m - 1) * (2 * m - 1) * (8 * m + q);
    const Integer t2 = Integer(2 * m + 1) * (2 * m + 1) * (8 * m - q);
    const Integer t3 =
        Integer(n - 1) * (2 * n + 1) * (2 * n + 3) * (2 * n + 3) * (n * n - m * m);
    Rational v = rat(1, static_cast<long>(2 * n - 1) * (2 * n - 1) * (2 * n + 1) * (2 * n + 3));
    return PiRational(v * fact_ratio(n + m, n - m) * Rational(t1 - t2 + t3));
}

inline PiRational inner_x_zu(int n, int m) {
    return PiRational(rat(-2, static_cast<long>(2 * n + 1) * (2 * n + 3)) *
                      fact_ratio(n + m + 1, n - m));
}

inline PiRational inner_y_zu(int n, int m) {
    const Integer t1 = Integer(2 * n - 3) * (4 * (n - 1) * m * m + n);
    const Integer t2 = Integer(2 * n + 1) * (2 * n + 1) * (n * n - m * m) *
                       ((n - 1) * (n - 1) + m * (m - 1));
    Rational v = rat(4, static_cast<long>(2 * n - 3) * (2 * n - 1) * (2 * n - 1) * (2 * n + 1));
    return PiRational(v * fact_ratio(n + m, n - m) * Rational(t1 + t2));
}

}  // namespace closed_form

namespace detail {

enum class Relation { equal, negated, vector_flip, negated_vector_flip, proportional, other };

inline QPolynomial vflip(const QPolynomial& f) {
    return {f.component(0), -f.component(1), -f.component(2), -f.component(3)};
}

// Scale s with a = s * b, if one exists.
inline std::optional<Rational> proportionality(const QPolynomial& a, const QPolynomial& b) {
    std::optional<Rational> s;
    for (int k = 0; k < 4; ++k) {
        const auto& ta = a.component(k).terms();
        const auto& tb = b.component(k).terms();
        if (ta.size() != tb.size()) return std::nullopt;
        auto ia = ta.begin();
        auto ib = tb.begin();
        for (; ia != ta.end(); ++ia, ++ib) {
            if (ia->first != ib->first) return std::nullopt;
            const Rational r = ia->second / ib->second;
            if (!s)
                s = r;
            else if (*s != r)
                return std::nullopt;
        }
    }
    return s;
}

inline std::pair<Relation, std::string> classify_relation(const QPolynomial& observed,
                                                          const QPolynomial& reference) {
    if (observed == reference) return {Relation::equal, "equal"};
    if (observed == -reference) return {Relation::negated, "negated"};
    if (observed == vflip(reference)) return {Relation::vector_flip, "vector part negated"};
    if (observed == -vflip(reference))
        return {Relation::negated_vector_flip, "negated with vector part negated"};
    if (auto s = proportionality(observed, reference))
        return {Relation::proportional, "proportional, scale " + to_string(*s)};
    return {Relation::other, "no scalar or component-sign relation"};
}

// Split off degree-0 constants from a golden row polynomial (the known
// anomalies inside the type-2 tables).
inline std::pair<QPolynomial, std::optional<Rational>> strip_constant_terms(
    const QPolynomial& f) {
    std::array<ScalarPoly, 4> comps;
    std::optional<Rational> stray;
    for (int k = 0; k < 4; ++k) {
        for (const auto& [mono, c] : f.component(k).terms()) {
            if (mono.total_degree() == 0 && !f.is_homogeneous(0)) {
                stray = c;
                continue;
            }
            comps[static_cast<std::size_t>(k)].add_term(mono, c);
        }
    }
    return {{comps[0], comps[1], comps[2], comps[3]}, stray};
}

}  // namespace detail

// Compares every printed closed form, expansion, constant and golden table
// row against the exactly computed ground truth, plus the cross-degree
// orthogonality asserted by the expansion theorem.
inline DiscrepancyReport verify_paper_formulas(int max_n) {
    if (max_n < 2) throw std::invalid_argument("verify_paper_formulas: max_n must be >= 2");
    DiscrepancyReport rep;
    auto add = [&](std::string name, std::string idx, std::string paper, std::string computed,
                   DiscrepancyStatus st, std::string note = "") {
        rep.entries.push_back({std::move(name), std::move(idx), std::move(paper),
                               std::move(computed), st, std::move(note)});
    };
    auto idx_nm = [](int n, int m) { return "n=" + std::to_string(n) + ",m=" + std::to_string(m); };
    auto cmp_pi = [&](std::string name, std::string idx, const PiRational& paper,
                      const PiRational& computed, std::string note = "") {
        add(std::move(name), std::move(idx), to_string(paper), to_string(computed),
            paper == computed ? DiscrepancyStatus::match : DiscrepancyStatus::mismatch,
            std::move(note));
    };

    // norms and inner products of the basic polynomials
    for (int n = 0; n <= max_n; ++n) {
        for (int m = 0; m <= n + 1; ++m) {
            PiRational comp = norm_squared(x_element(n, m, Parity::plus));
            if (m >= 1) {
                const PiRational comp_minus = norm_squared(x_element(n, m, Parity::minus));
                if (comp_minus != comp) {
                    cmp_pi("norm_X", idx_nm(n, m), closed_form::norm_x(n, m), comp_minus,
                           "parities disagree");
                    continue;
                }
            }
            cmp_pi("norm_X", idx_nm(n, m), closed_form::norm_x(n, m), comp);
        }
    }
    for (int n = 2; n <= max_n; ++n) {
        cmp_pi("norm_Y_m0", idx_nm(n, 0), closed_form::norm_y_m0(n),
               norm_squared(y_element(n, 0, Parity::plus)));
        for (int m = 1; m <= n - 1; ++m)
            cmp_pi("norm_Y", idx_nm(n, m), closed_form::norm_y(n, m),
                   norm_squared(y_element(n, m, Parity::plus)));
        cmp_pi("norm_Zu_m0", idx_nm(n, 0), closed_form::norm_zu_m0(n),
               norm_squared(zu_element(n, 0, Parity::plus)));
        for (int m = 1; m <= n; ++m)
            cmp_pi("norm_Zu", idx_nm(n, m), closed_form::norm_zu(n, m),
                   norm_squared(zu_element(n, m, Parity::plus)));
        for (int m = 1; m <= n; ++m)
            cmp_pi("inner_X_Zu", idx_nm(n, m), closed_form::inner_x_zu(n, m),
                   inner_product(x_element(n, m, Parity::plus), zu_element(n, m, Parity::plus)));
        for (int m = 1; m <= n - 1; ++m)
            cmp_pi("inner_Y_Zu", idx_nm(n, m), closed_form::inner_y_zu(n, m),
                   inner_product(y_element(n, m, Parity::plus), zu_element(n, m, Parity::plus)));
        // <X_{n,n}, Y_{n,n}> = 0 is asserted, but Y_{n,n} is outside the
        // declared index range of the Y family.
        add("inner_X_Y_edge", idx_nm(n, n), "0*pi", "",
            DiscrepancyStatus::out_of_range, "Y_{n,n} has no definition (m <= n-1)");
        cmp_pi("inner_X_Zu_m0", idx_nm(n, 0), PiRational(),
               inner_product(x_element(n, 0, Parity::plus), zu_element(n, 0, Parity::plus)));
        for (int m = 0; m <= n - 1; ++m)
            for (Parity p : {Parity::plus, Parity::minus}) {
                if (m == 0 && p == Parity::minus) continue;
                cmp_pi("inner_Y_Zu_m0",
                       idx_nm(n, m) + "," + std::string(1, to_char(p)), PiRational(),
                       inner_product(y_element(n, m, p), zu_element(n, 0, Parity::plus)));
            }
    }

    // orthogonalization constants
    for (int n = 2; n <= max_n; ++n) {
        for (int m = 1; m <= n; ++m) {
            const OrthoConstants c = detail::gram_schmidt_constants(n, m, Parity::plus);
            const Rational af = alpha_closed_form(n, m);
            add("alpha", idx_nm(n, m), to_string(af), to_string(c.alpha),
                c.alpha == af ? DiscrepancyStatus::match : DiscrepancyStatus::mismatch);
            if (c.beta)
                add("beta", idx_nm(n, m), "unparseable", to_string(*c.beta),
                    DiscrepancyStatus::unparseable,
                    "printed closed form has unbalanced parentheses; value from Gram-Schmidt");
        }
    }

    // Appell property under the first-order companion operator
    for (int n = 1; n <= max_n; ++n)
        for (int m = 0; m <= n + 1; ++m)
            for (Parity p : {Parity::plus, Parity::minus}) {
                if (m == 0 && p == Parity::minus) continue;
                const QPolynomial x = x_element(n, m, p);
                const QPolynomial expect =
                    m <= n ? Rational(2 * (n + m + 1)) * x_element(n - 1, m, p) : QPolynomial();
                const bool ok = cr_left(x, true) == expect && cr_right(x, true) == expect;
                add("appell", idx_nm(n, m) + "," + std::string(1, to_char(p)),
                    m <= n ? "2(n+m+1) X_{n-1,m}" : "0", ok ? "as stated" : "deviates",
                    ok ? DiscrepancyStatus::match : DiscrepancyStatus::mismatch);
            }

    // component expansions vs constructed elements
    for (int n = 2; n <= max_n; ++n)
        for (Family fam : {Family::X, Family::Y, Family::Zu}) {
            const int m_max = fam == Family::X ? n + 1 : (fam == Family::Y ? n - 1 : n);
            for (int m = 0; m <= m_max; ++m)
                for (Parity p : {Parity::plus, Parity::minus}) {
                    BasisId id{n, fam, p, m};
                    if (!is_valid(id)) continue;
                    const QPolynomial expansion = components_expansion(id);
                    const Rational k(fam != Family::X && m >= 1 ? 2 * n - 1 : 1);
                    const QPolynomial reference = k * basis_element(id);
                    auto [rel, note] = detail::classify_relation(expansion, reference);
                    add("components_" + to_string(fam), to_string(id),
                        "expansion = " + (k == 1 ? std::string("element")
                                                 : "(2n-1) * element"),
                        note,
                        rel == detail::Relation::equal ? DiscrepancyStatus::match
                                                       : DiscrepancyStatus::mismatch);
                }
        }

    // golden table rows
    for (const auto& row : golden_table_rows()) {
        if (row.id.n > max_n) continue;
        const QPolynomial printed = golden_row_polynomial(row);
        if (row.id.family == Family::Y) {
            const QPolynomial el = basis_element(row.id);
            add("table_Y", to_string(row.id), render_text(printed), render_text(el),
                printed == el ? DiscrepancyStatus::match : DiscrepancyStatus::mismatch);
            continue;
        }
        auto [stripped, stray] = detail::strip_constant_terms(printed);
        const QPolynomial zu = basis_element(row.id);
        const QPolynomial z = basis_element({row.id.n, Family::Z, row.id.parity, row.id.m});
        std::string note;
        DiscrepancyStatus st = DiscrepancyStatus::mismatch;
        if (auto s = detail::proportionality(stripped, zu)) {
            note = "equals provisional element, scale " + to_string(*s);
            st = DiscrepancyStatus::match;
        } else if (auto sz = detail::proportionality(stripped, z)) {
            note = "equals orthogonalized Z element, scale " + to_string(*sz);
            st = DiscrepancyStatus::match;
        }
        add("table_Zu", to_string(row.id), render_text(printed), render_text(stripped), st, note);
        if (stray) {
            const Rational af = alpha_closed_form(row.id.n, std::max(row.id.m, 1));
            add("table_stray_constant", to_string(row.id), to_string(*stray), to_string(af),
                *stray == af ? DiscrepancyStatus::match : DiscrepancyStatus::mismatch,
                "stray degree-0 constant in the printed row vs alpha_{n,m}");
        }
    }

    // cross-degree orthogonality asserted by the expansion theorem
    for (int d = 0; d <= max_n; ++d)
        for (int dp = d + 1; dp <= max_n; ++dp) {
            std::vector<QPolynomial> lo, hi;
            std::vector<BasisId> lo_ids = enumerate_basis(d), hi_ids = enumerate_basis(dp);
            for (const auto& id : lo_ids) lo.push_back(basis_element(id));
            for (const auto& id : hi_ids) hi.push_back(basis_element(id));
            std::size_t nonzero = 0;
            std::string example;
            for (std::size_t i = 0; i < lo.size(); ++i)
                for (std::size_t j = 0; j < hi.size(); ++j) {
                    const PiRational v = inner_product(lo[i], hi[j]);
                    if (!v.is_zero()) {
                        if (nonzero == 0)
                            example = "<" + to_string(lo_ids[i]) + ", " + to_string(hi_ids[j]) +
                                      "> = " + to_string(v);
                        ++nonzero;
                    }
                }
            add("orthogonal_basis_cross_degree",
                "degrees " + std::to_string(d) + "," + std::to_string(dp), "all products 0*pi",
                nonzero == 0 ? "all products 0*pi"
                             : std::to_string(nonzero) + " nonzero products, e.g. " + example,
                nonzero == 0 ? DiscrepancyStatus::match : DiscrepancyStatus::mismatch);
        }

    return rep;
}

inline nlohmann::ordered_json report_to_json(const DiscrepancyReport& rep) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& e : rep.entries) {
        nlohmann::ordered_json j;
        j["formula_name"] = e.formula_name;
        j["indices"] = e.indices;
        j["paper_value"] = e.paper_value;
        j["computed_value"] = e.computed_value;
        j["status"] = to_string(e.status);
        if (!e.note.empty()) j["note"] = e.note;
        arr.push_back(std::move(j));
    }
    return arr;
}

inline std::string report_to_text(const DiscrepancyReport& rep) {
    std::ostringstream os;
    os << "formula comparison report: " << rep.entries.size() << " entries, "
       << rep.count(DiscrepancyStatus::match) << " match, "
       << rep.count(DiscrepancyStatus::mismatch) << " mismatch, "
       << rep.count(DiscrepancyStatus::out_of_range) << " out_of_range, "
       << rep.count(DiscrepancyStatus::unparseable) << " unparseable\n";
    for (const auto& e : rep.entries) {
        os << "  [" << to_string(e.status) << "] " << e.formula_name << " (" << e.indices << ")";
        if (!e.paper_value.empty()) os << " stated: " << e.paper_value;
        if (!e.computed_value.empty()) os << " computed: " << e.computed_value;
        if (!e.note.empty()) os << "  -- " << e.note;
        os << "\n";
    }
    return os.str();
}

}  // namespace infraball
