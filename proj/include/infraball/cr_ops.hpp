#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "infraball/qpoly.hpp"

namespace infraball {

enum class Side { left, right, sandwich };

struct OperatorSpec {
    bool conjugated = false;  // false: dbar = d0 + e1 d1 + e2 d2 ; true: d = d0 - e1 d1 - e2 d2
    Side side = Side::left;
};

// One-sided application.  Left places units left of the differentiated
// component, right places them on the right; the vector part changes sign
// when the operator is conjugated.
inline QPolynomial apply_cr(const OperatorSpec& spec, const QPolynomial& f) {
    if (spec.side == Side::sandwich)
        throw std::invalid_argument("apply_cr: use sandwich() for the two-sided operator");
    const Rational s = spec.conjugated ? Rational(-1) : Rational(1);
    QPolynomial r = qp_partial(f, 0);
    for (int i = 1; i <= 2; ++i) {
        QPolynomial di = qp_partial(f, i);
        QPolynomial ei = QPolynomial::unit(i);
        r += s * (spec.side == Side::left ? qp_mul(ei, di) : qp_mul(di, ei));
    }
    return r;
}

inline QPolynomial cr_left(const QPolynomial& f, bool conjugated = false) {
    return apply_cr({conjugated, Side::left}, f);
}
inline QPolynomial cr_right(const QPolynomial& f, bool conjugated = false) {
    return apply_cr({conjugated, Side::right}, f);
}

// vec-partial (pure vector operator e1 d1 + e2 d2), both sides.
inline QPolynomial vec_partial_left(const QPolynomial& f) {
    return qp_mul(QPolynomial::unit(1), qp_partial(f, 1)) +
           qp_mul(QPolynomial::unit(2), qp_partial(f, 2));
}
inline QPolynomial vec_partial_right(const QPolynomial& f) {
    return qp_mul(qp_partial(f, 1), QPolynomial::unit(1)) +
           qp_mul(qp_partial(f, 2), QPolynomial::unit(2));
}

// Two-sided operator; composition of the one-sided applications.  Order
// independence (left-then-right vs right-then-left) is a tested invariant.
inline QPolynomial sandwich(bool conjugated, const QPolynomial& f) {
    return cr_right(cr_left(f, conjugated), conjugated);
}

inline QPolynomial laplacian(const QPolynomial& f, int iterations = 1) {
    QPolynomial r = f;
    for (int k = 0; k < iterations; ++k) {
        QPolynomial next;
        for (int i = 0; i < 3; ++i) next += qp_partial(qp_partial(r, i), i);
        r = next;
    }
    return r;
}

struct ClassFlags {
    bool harmonic = false;
    bool biharmonic = false;
    bool monogenic = false;
    bool antimonogenic = false;
    bool inframonogenic = false;
    bool antiinframonogenic = false;
    bool reduced = false;
};

// Every flag is an exact annihilation test; biharmonicity goes through
// Delta^2 directly.
inline ClassFlags classify(const QPolynomial& f) {
    ClassFlags c;
    c.harmonic = laplacian(f).is_zero();
    c.biharmonic = laplacian(f, 2).is_zero();
    c.monogenic = cr_left(f, false).is_zero();
    c.antimonogenic = cr_left(f, true).is_zero();
    c.inframonogenic = sandwich(false, f).is_zero();
    c.antiinframonogenic = sandwich(true, f).is_zero();
    c.reduced = f.is_reduced();
    return c;
}

enum class IdentityStatus { pass, fail, not_applicable };

struct IdentityResult {
    std::string identity;
    IdentityStatus status;
};

inline const char* to_string(IdentityStatus s) {
    switch (s) {
        case IdentityStatus::pass: return "pass";
        case IdentityStatus::fail: return "fail";
        default: return "n/a";
    }
}

namespace detail {

inline QPolynomial e3_times(const QPolynomial& f) { return qp_mul(QPolynomial::unit(3), f); }
inline QPolynomial vec_part(const QPolynomial& f) {
    return {ScalarPoly(), f.component(1), f.component(2), f.component(3)};
}
inline ScalarPoly d(const QPolynomial& f, int i, int comp) { return f.component(comp).partial(i); }
inline ScalarPoly d2(const ScalarPoly& p, int i, int j) { return p.partial(i).partial(j); }

}  // namespace detail

// Identity harness over a pair of polynomials.  Identities that require a
// monogenic f (or a reduced f) report n/a when the hypothesis fails.
inline std::vector<IdentityResult> check_identities(const QPolynomial& f, const QPolynomial& g) {
    using detail::e3_times;
    using detail::vec_part;
    namespace dt = detail;
    std::vector<IdentityResult> out;
    auto push = [&](const std::string& name, bool ok) {
        out.push_back({name, ok ? IdentityStatus::pass : IdentityStatus::fail});
    };
    auto push_na = [&](const std::string& name) {
        out.push_back({name, IdentityStatus::not_applicable});
    };

    const QPolynomial fg = qp_mul(f, g);
    const ScalarPoly f1 = f.component(1), f2 = f.component(2);
    const ScalarPoly g1 = g.component(1), g2 = g.component(2);

    // e3 ( f1 (d2 g) - f2 (d1 g) ) and its right-handed mirror
    const QPolynomial cross_l =
        e3_times(f1 * qp_partial(g, 2) - f2 * qp_partial(g, 1));
    const QPolynomial cross_r =
        qp_mul(g1 * qp_partial(f, 2) - g2 * qp_partial(f, 1), QPolynomial::unit(3));

    push("leibniz_d_left", cr_left(fg, true) ==
                               qp_mul(cr_left(f, true), g) + qp_mul(f, cr_left(g, true)) +
                                   Rational(2) * cross_l);
    push("leibniz_d_right", cr_right(fg, true) ==
                                qp_mul(f, cr_right(g, true)) + qp_mul(cr_right(f, true), g) -
                                    Rational(2) * cross_r);
    push("leibniz_dbar_left", cr_left(fg, false) ==
                                  qp_mul(cr_left(f, false), g) + qp_mul(f, cr_left(g, false)) -
                                      Rational(2) * cross_l);
    push("leibniz_dbar_right", cr_right(fg, false) ==
                                   qp_mul(f, cr_right(g, false)) + qp_mul(cr_right(f, false), g) +
                                       Rational(2) * cross_r);

    // vec-partial anticommutator: vd vf + vf vd = -2 (d1 f1 + d2 f2)
    {
        const QPolynomial vf = vec_part(f);
        QPolynomial lhs = vec_partial_left(vf) + vec_partial_right(vf);
        QPolynomial rhs = Rational(-2) * QPolynomial(dt::d(f, 1, 1) + dt::d(f, 2, 2));
        push("bilateral_vec_anticommutator", lhs == rhs);
    }
    // vd f0 vd = -(d1^2 + d2^2) f0
    {
        const QPolynomial f0(f.component(0));
        QPolynomial lhs = vec_partial_right(vec_partial_left(f0));
        QPolynomial rhs(-(f.component(0).partial(1).partial(1) +
                          f.component(0).partial(2).partial(2)));
        push("bilateral_vec_scalar", lhs == rhs);
    }
    // vd vf vd componentwise expansion
    {
        const QPolynomial vf = vec_part(f);
        QPolynomial lhs = vec_partial_right(vec_partial_left(vf));
        ScalarPoly e1 = -dt::d2(f1, 1, 1) + dt::d2(f1, 2, 2) - Rational(2) * dt::d2(f2, 1, 2);
        ScalarPoly e2 = Rational(-2) * dt::d2(f1, 1, 2) + dt::d2(f2, 1, 1) - dt::d2(f2, 2, 2);
        push("bilateral_vec_vec", lhs == QPolynomial(ScalarPoly(), e1, e2, ScalarPoly()));
    }
    // full two-sided expansion through scalar/vector split
    {
        const QPolynomial f0(f.component(0));
        const QPolynomial vf = vec_part(f);
        QPolynomial lhs = sandwich(false, f);
        QPolynomial rhs = laplacian(f0) - Rational(2) * QPolynomial(f.component(0).partial(1).partial(1) +
                                                                    f.component(0).partial(2).partial(2));
        // (d0^2 + vd^2) f0 = Delta f0 - 2 (d1^2+d2^2) f0 ; plus the mixed 2 d0 vd f0
        rhs += Rational(2) * vec_partial_left(qp_partial(f0, 0));
        rhs += qp_partial(qp_partial(vf, 0), 0);
        rhs += qp_partial(vec_partial_left(vf) + vec_partial_right(vf), 0);
        rhs += vec_partial_right(vec_partial_left(vf));
        push("bilateral_full", lhs == rhs);
    }
    // single-component two-sided expansions
    {
        const ScalarPoly& f0 = f.component(0);
        QPolynomial lhs = sandwich(false, QPolynomial(f0));
        QPolynomial rhs(dt::d2(f0, 0, 0) - dt::d2(f0, 1, 1) - dt::d2(f0, 2, 2),
                        Rational(2) * dt::d2(f0, 0, 1), Rational(2) * dt::d2(f0, 0, 2),
                        ScalarPoly());
        push("bilateral_scalar_component", lhs == rhs);

        QPolynomial lhs1 = sandwich(false, QPolynomial(ScalarPoly(), f1, ScalarPoly(), ScalarPoly()));
        QPolynomial rhs1(Rational(-2) * dt::d2(f1, 0, 1),
                         dt::d2(f1, 0, 0) - dt::d2(f1, 1, 1) + dt::d2(f1, 2, 2),
                         Rational(-2) * dt::d2(f1, 1, 2), ScalarPoly());
        push("bilateral_e1_component", lhs1 == rhs1);

        QPolynomial lhs2 = sandwich(false, QPolynomial(ScalarPoly(), ScalarPoly(), f2, ScalarPoly()));
        QPolynomial rhs2(Rational(-2) * dt::d2(f2, 0, 2), Rational(-2) * dt::d2(f2, 1, 2),
                         dt::d2(f2, 0, 0) + dt::d2(f2, 1, 1) - dt::d2(f2, 2, 2), ScalarPoly());
        push("bilateral_e2_component", lhs2 == rhs2);

        const QPolynomial vf = vec_part(f);
        QPolynomial lhsv = sandwich(false, vf);
        QPolynomial rhsv(Rational(-2) * (dt::d2(f1, 0, 1) + dt::d2(f2, 0, 2)),
                         dt::d2(f1, 0, 0) - dt::d2(f1, 1, 1) + dt::d2(f1, 2, 2) -
                             Rational(2) * dt::d2(f2, 1, 2),
                         dt::d2(f2, 0, 0) + dt::d2(f2, 1, 1) - dt::d2(f2, 2, 2) -
                             Rational(2) * dt::d2(f1, 1, 2),
                         ScalarPoly());
        push("bilateral_vec_component", lhsv == rhsv);
    }
    // anticommutators with dbar resp. d
    {
        QPolynomial lhs = cr_left(f, false) + cr_right(f, false);
        QPolynomial rhs(Rational(2) * (dt::d(f, 0, 0) - dt::d(f, 1, 1) - dt::d(f, 2, 2)),
                        Rational(2) * (dt::d(f, 0, 1) + dt::d(f, 1, 0)),
                        Rational(2) * (dt::d(f, 0, 2) + dt::d(f, 2, 0)), ScalarPoly());
        push("anticommutator_dbar", lhs == rhs);
        QPolynomial lhsc = cr_left(f, true) + cr_right(f, true);
        QPolynomial rhsc(Rational(2) * (dt::d(f, 0, 0) + dt::d(f, 1, 1) + dt::d(f, 2, 2)),
                         Rational(2) * (dt::d(f, 0, 1) - dt::d(f, 1, 0)),
                         Rational(2) * (dt::d(f, 0, 2) - dt::d(f, 2, 0)), ScalarPoly());
        push("anticommutator_d", lhsc == rhsc);
    }
    // R^3 preservation of both sandwiches
    if (f.is_reduced())
        push("r3_preservation", sandwich(false, f).is_reduced() && sandwich(true, f).is_reduced());
    else
        push_na("r3_preservation");
    // factorization d(dbar f) = Delta f and dbar(d f) = Delta f
    push("factorization_d_dbar", cr_left(cr_left(f, false), true) == laplacian(f) &&
                                     cr_left(cr_left(f, true), false) == laplacian(f));
    // left/right monogenicity equivalence for reduced f: -e3 (dbar f) e3 = conj(f dbar)
    if (f.is_reduced()) {
        QPolynomial lhs = -qp_mul(e3_times(cr_left(f, false)), QPolynomial::unit(3));
        push("monogenic_left_right_equivalence", lhs == qp_conjugate(cr_right(f, false)));
    } else {
        push_na("monogenic_left_right_equivalence");
    }

    const bool mono = cr_left(f, false).is_zero();
    if (mono) {
        QPolynomial lhs = cr_left(f, true) + cr_right(f, true);
        push("monogenic_4d0", lhs == Rational(4) * qp_partial(f, 0));
        const QPolynomial xb = x_bar();
        QPolynomial s1 = sandwich(false, qp_mul(xb, f) + qp_mul(f, xb));
        push("simplecases_xbar", s1 == Rational(4) * cr_left(QPolynomial(f.component(0)), false));
        QPolynomial s2 = sandwich(false, QPolynomial::rho2() * f);
        push("simplecases_rho2", s2 == Rational(-2) * qp_conjugate(f));
    } else {
        push_na("monogenic_4d0");
        push_na("simplecases_xbar");
        push_na("simplecases_rho2");
    }
    return out;
}

inline nlohmann::ordered_json identities_to_json(const std::vector<IdentityResult>& rs) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rs) {
        nlohmann::ordered_json j;
        j["identity"] = r.identity;
        j["status"] = to_string(r.status);
        arr.push_back(std::move(j));
    }
    return arr;
}

}  // namespace infraball
