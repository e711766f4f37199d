#pragma once

#include <optional>
#include <string>
#include <vector>

#include "infraball/cr_ops.hpp"
#include "infraball/harmonics.hpp"
#include "infraball/linalg.hpp"

namespace infraball {

enum class Family { X, Y, Zu, Z };

inline std::string to_string(Family f) {
    switch (f) {
        case Family::X: return "X";
        case Family::Y: return "Y";
        case Family::Zu: return "Zu";
        default: return "Z";
    }
}
inline Family family_from_string(const std::string& s) {
    if (s == "X") return Family::X;
    if (s == "Y") return Family::Y;
    if (s == "Zu") return Family::Zu;
    if (s == "Z") return Family::Z;
    throw std::invalid_argument("bad family: " + s);
}

// Index of a basis element.  Valid ranges:
//   X:  n >= 0, 0 <= m <= n+1 ('+'), 1 <= m <= n+1 ('-')
//   Y:  n >= 1, 0 <= m <= n-1 ('+'), 1 <= m <= n-1 ('-')
//   Zu/Z: n >= 1, 0 <= m <= n ('+'), 1 <= m <= n ('-'); m = 0 only with '+'
struct BasisId {
    int n = 0;
    Family family = Family::X;
    Parity parity = Parity::plus;
    int m = 0;

    friend bool operator==(const BasisId&, const BasisId&) = default;
    friend bool operator<(const BasisId& a, const BasisId& b) {
        auto key = [](const BasisId& i) {
            return std::tuple(i.n, static_cast<int>(i.family), i.m,
                              i.parity == Parity::plus ? 0 : 1);
        };
        return key(a) < key(b);
    }
};

inline bool is_valid(const BasisId& id) {
    if (id.n < 0) return false;
    const int lo = id.parity == Parity::plus ? 0 : 1;
    switch (id.family) {
        case Family::X: return id.m >= lo && id.m <= id.n + 1;
        case Family::Y: return id.n >= 1 && id.m >= lo && id.m <= id.n - 1;
        case Family::Zu:
        case Family::Z: return id.n >= 1 && id.m >= lo && id.m <= id.n;
    }
    return false;
}

inline void validate(const BasisId& id) {
    if (!is_valid(id))
        throw std::invalid_argument("invalid basis index " + std::to_string(id.n) + ":" +
                                    to_string(id.family) + ":" + to_char(id.parity) + ":" +
                                    std::to_string(id.m));
}

inline std::string to_string(const BasisId& id) {
    return std::to_string(id.n) + ":" + to_string(id.family) + ":" + to_char(id.parity) + ":" +
           std::to_string(id.m);
}

inline BasisId basis_id_from_string(const std::string& s) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == ':') {
            parts.push_back(s.substr(start, i - start));
            start = i + 1;
        }
    }
    if (parts.size() != 4) throw std::invalid_argument("bad basis id: " + s);
    BasisId id;
    try {
        id.n = std::stoi(parts[0]);
        id.m = std::stoi(parts[3]);
    } catch (const std::exception&) {
        throw std::invalid_argument("bad basis id: " + s);
    }
    id.family = family_from_string(parts[1]);
    if (parts[2].size() != 1) throw std::invalid_argument("bad basis id: " + s);
    id.parity = parity_from_char(parts[2][0]);
    validate(id);
    return id;
}

namespace detail {

// Elements of order m carry a (-1)^m factor relative to the raw derivative
// construction; this is the normalization under which the degree-0 block
// comes out as e0, e1, e2 and the tabulated golden data is reproduced.
inline Rational order_sign(int m) { return Rational(m % 2 == 0 ? 1 : -1); }

// U with the out-of-range and m = -1 substitution rules applied.
inline QPolynomial harmonic_sub(int n, int m, Parity p) {
    if (n < 0 || m > n) return QPolynomial();
    return solid_harmonic({n, m, p});
}

}  // namespace detail

// Monogenic generators: X_{n,m} = (-1)^m d U_{n+1,m} with d = d0 - e1 d1 - e2 d2.
inline QPolynomial x_element(int n, int m, Parity parity) {
    if (n < 0) return QPolynomial();
    return detail::order_sign(m) * cr_left(solid_harmonic({n + 1, m, parity}), true);
}

inline QPolynomial y_element(int n, int m, Parity parity) {
    const QPolynomial xb = x_bar();
    const QPolynomial a = x_element(n - 1, m, parity);
    QPolynomial r = qp_mul(xb, a) + qp_mul(a, xb);
    r += Rational(2 * (n + m)) * (QPolynomial::rho2() * x_element(n - 2, m, parity));
    return r;
}

// Provisional type-2 elements.  The m = 0 element is the contragenic
// normalization U^-_{n,1} e1 - U^+_{n,1} e2.
inline QPolynomial zu_element(int n, int m, Parity parity) {
    if (m == 0)
        return qp_mul(solid_harmonic({n, 1, Parity::minus}), QPolynomial::unit(1)) -
               qp_mul(solid_harmonic({n, 1, Parity::plus}), QPolynomial::unit(2));
    const QPolynomial xb = x_bar();
    const QPolynomial a = x_element(n - 1, m, parity);
    QPolynomial r = qp_mul(xb, a) + qp_mul(a, xb);
    r -= detail::order_sign(m) * solid_harmonic({n, m, parity});
    r += Rational(n + m) * (QPolynomial::rho2() * x_element(n - 2, m, parity));
    return r;
}

struct OrthoConstants {
    Rational alpha;
    std::optional<Rational> beta;  // present for 1 <= m <= n-1
};

inline Rational alpha_closed_form(int n, int m) {
    return rat(n - m + 1, static_cast<long>(n + 1) * (2 * n + 1));
}

namespace detail {

// Exact Gram-Schmidt of Zu_{n,m} against span{X_{n,m}, Y_{n,m}} via the
// normal equations.  For m = n there is no Y and the solve is 1x1.
inline OrthoConstants gram_schmidt_constants(int n, int m, Parity parity) {
    const QPolynomial xe = x_element(n, m, parity);
    const QPolynomial zu = zu_element(n, m, parity);
    const PiRational gxx = norm_squared(xe);
    const PiRational bx = inner_product(zu, xe);
    if (m <= n - 1) {
        const QPolynomial ye = y_element(n, m, parity);
        const PiRational gyy = norm_squared(ye);
        const PiRational gxy = inner_product(xe, ye);
        const PiRational by = inner_product(zu, ye);
        const Rational det = gxx.coeff * gyy.coeff - gxy.coeff * gxy.coeff;
        OrthoConstants c;
        c.alpha = (-bx.coeff * gyy.coeff + by.coeff * gxy.coeff) / det;
        c.beta = (-by.coeff * gxx.coeff + bx.coeff * gxy.coeff) / det;
        return c;
    }
    return {-(bx / gxx), std::nullopt};
}

}  // namespace detail

// alpha = -<Zu,X>/|X|^2 and beta = -<Zu,Y>/|Y|^2, computed by exact
// Gram-Schmidt.  alpha is additionally required to match the closed form
// (n-m+1)/((n+1)(2n+1)); a disagreement would be a construction bug.
inline OrthoConstants ortho_constants(int n, int m) {
    if (n < 1 || m < 1 || m > n)
        throw std::invalid_argument("ortho_constants: need 1 <= m <= n");
    OrthoConstants c = detail::gram_schmidt_constants(n, m, Parity::plus);
    if (c.alpha != alpha_closed_form(n, m))
        throw std::logic_error("Gram-Schmidt alpha deviates from the closed form at n=" +
                               std::to_string(n) + ", m=" + std::to_string(m));
    return c;
}

inline QPolynomial z_element(int n, int m, Parity parity) {
    if (m == 0) return zu_element(n, 0, parity);
    const OrthoConstants c = detail::gram_schmidt_constants(n, m, parity);
    QPolynomial r = zu_element(n, m, parity) + c.alpha * x_element(n, m, parity);
    if (c.beta) r += *c.beta * y_element(n, m, parity);
    return r;
}

// Constructs a basis element and enforces the hard postcondition: reduced,
// homogeneous of degree n, annihilated by the two-sided operator.
inline QPolynomial basis_element(const BasisId& id) {
    validate(id);
    QPolynomial el;
    switch (id.family) {
        case Family::X: el = x_element(id.n, id.m, id.parity); break;
        case Family::Y: el = y_element(id.n, id.m, id.parity); break;
        case Family::Zu: el = zu_element(id.n, id.m, id.parity); break;
        case Family::Z: el = z_element(id.n, id.m, id.parity); break;
    }
    if (!el.is_reduced() || el.is_zero() ||
        !el.is_homogeneous(static_cast<std::uint32_t>(id.n)) ||
        !sandwich(false, el).is_zero())
        throw std::logic_error("constructed element violates its postcondition: " +
                               to_string(id));
    return el;
}

// Deterministic order: X block, then Y, then Z; m ascending, '+' before '-'.
inline std::vector<BasisId> enumerate_basis(int n) {
    if (n < 0) throw std::invalid_argument("degree must be >= 0");
    std::vector<BasisId> ids;
    auto add_family = [&](Family f, int m_max) {
        for (int m = 0; m <= m_max; ++m)
            for (Parity p : {Parity::plus, Parity::minus}) {
                BasisId id{n, f, p, m};
                if (is_valid(id)) ids.push_back(id);
            }
    };
    add_family(Family::X, n + 1);
    add_family(Family::Y, n - 1);
    add_family(Family::Z, n);
    return ids;
}

struct GramMatrix {
    std::vector<BasisId> ids;
    std::vector<std::vector<PiRational>> entries;
};

inline GramMatrix gram(const std::vector<BasisId>& ids) {
    GramMatrix g;
    g.ids = ids;
    std::vector<QPolynomial> els;
    els.reserve(ids.size());
    for (const auto& id : ids) els.push_back(basis_element(id));
    g.entries.assign(ids.size(), std::vector<PiRational>(ids.size()));
    for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = i; j < els.size(); ++j) {
            PiRational v = inner_product(els[i], els[j]);
            g.entries[i][j] = v;
            g.entries[j][i] = v;
        }
    return g;
}

inline bool is_diagonal_positive(const GramMatrix& g) {
    for (std::size_t i = 0; i < g.entries.size(); ++i)
        for (std::size_t j = 0; j < g.entries.size(); ++j) {
            if (i == j && !(g.entries[i][j].coeff > 0)) return false;
            if (i != j && !g.entries[i][j].is_zero()) return false;
        }
    return true;
}

// ---- coefficient-space picture of the two-sided operator ----

inline std::vector<Monomial> degree_monomials(int n) {
    std::vector<Monomial> out;
    if (n < 0) return out;
    for (int a = n; a >= 0; --a)
        for (int b = n - a; b >= 0; --b)
            out.push_back(Monomial{static_cast<std::uint32_t>(a), static_cast<std::uint32_t>(b),
                                   static_cast<std::uint32_t>(n - a - b)});
    return out;
}

// Stacked coefficient vector of a reduced homogeneous polynomial: blocks
// e0, e1, e2 over the degree-n monomials.
inline std::vector<Rational> coefficient_vector(const QPolynomial& f, int n) {
    const auto monos = degree_monomials(n);
    std::vector<Rational> v;
    v.reserve(3 * monos.size());
    for (int k = 0; k < 3; ++k)
        for (const auto& m : monos) v.push_back(f.component(k).coeff(m));
    return v;
}

// Matrix of the two-sided operator from degree-n reduced coefficient space
// (3 (n+1)(n+2)/2 columns) to degree-(n-2) space.
inline RationalMatrix sandwich_matrix(int n) {
    const auto cols_monos = degree_monomials(n);
    const auto rows_monos = degree_monomials(n - 2);
    RationalMatrix mat(3 * rows_monos.size(), 3 * cols_monos.size());
    std::size_t col = 0;
    for (int k = 0; k < 3; ++k) {
        for (const auto& mono : cols_monos) {
            QPolynomial basis_vec =
                ScalarPoly::monomial(mono, Rational(1)) * QPolynomial::unit(k);
            const QPolynomial image = sandwich(false, basis_vec);
            std::size_t row = 0;
            for (int kk = 0; kk < 3; ++kk)
                for (const auto& rm : rows_monos) mat.at(row++, col) = image.component(kk).coeff(rm);
            ++col;
        }
    }
    return mat;
}

// dim of the degree-n inframonogenic space as the exact nullity of the
// two-sided operator's coefficient matrix.
inline int infr_dimension(int n) {
    if (n < 0) throw std::invalid_argument("degree must be >= 0");
    return static_cast<int>(sandwich_matrix(n).nullity());
}

// ---- literal evaluation of the component expansions ----

// The expansions return the right-hand sides exactly as printed: the type-0
// formula yields the element itself, the type-1/2 formulas yield (2n-1)
// times the element (the m = 0 type-2 row has no prefactor).
inline QPolynomial components_expansion(const BasisId& id) {
    validate(id);
    if (id.family == Family::Z)
        throw std::invalid_argument("components_expansion: families X, Y, Zu only");
    if (id.family != Family::X && id.n < 2)
        throw std::invalid_argument("components_expansion: need n >= 2 for types 1 and 2");
    const int n = id.n, m = id.m;
    const Parity p = id.parity;
    const Parity op = opposite(p);
    const Rational sg(p == Parity::plus ? 1 : -1);
    const ScalarPoly rho2 = QPolynomial::rho2();
    auto Us = [](int nn, int mm, Parity pp) { return detail::harmonic_sub(nn, mm, pp); };
    const QPolynomial e1 = QPolynomial::unit(1), e2 = QPolynomial::unit(2);

    if (id.family == Family::X) {
        QPolynomial r = Rational(n + m + 1) * Us(n, m, p);
        QPolynomial b1 = Rational((n + m) * (n + m + 1)) * Us(n, m - 1, p) - Us(n, m + 1, p);
        QPolynomial b2 = Rational((n + m) * (n + m + 1)) * Us(n, m - 1, op) + Us(n, m + 1, op);
        r += rat(1, 2) * qp_mul(b1, e1);
        r -= sg * (rat(1, 2) * qp_mul(b2, e2));
        return r;
    }
    if (id.family == Family::Y) {
        QPolynomial r = Rational(2 * (n - 2 * m * m)) * Us(n, m, p) +
                        Rational(2 * (2 * n + 1) * (n + m) * (n - 1 + m)) *
                            (rho2 * Us(n - 2, m, p));
        QPolynomial b1 = Rational((n + m) * (n - m + 1) * (2 * m - 1)) * Us(n, m - 1, p) +
                         Rational((2 * n + 1) * (n + m) * (n + m - 1) * (n + m - 2)) *
                             (rho2 * Us(n - 2, m - 1, p)) +
                         Rational(2 * m + 1) * Us(n, m + 1, p) -
                         Rational((2 * n + 1) * (n + m)) * (rho2 * Us(n - 2, m + 1, p));
        QPolynomial b2 = Rational((n + m) * (n - m + 1) * (2 * m - 1)) * Us(n, m - 1, op) +
                         Rational((2 * n + 1) * (n + m) * (n + m - 1) * (n + m - 2)) *
                             (rho2 * Us(n - 2, m - 1, op)) -
                         Rational(2 * m + 1) * Us(n, m + 1, op) -
                         sg * (Rational((2 * n + 1) * (n + m)) * (rho2 * Us(n - 2, m + 1, op)));
        r += qp_mul(b1, e1);
        r -= sg * qp_mul(b2, e2);
        return r;
    }
    // Zu
    if (m == 0)
        return qp_mul(Us(n, 1, Parity::minus), e1) - qp_mul(Us(n, 1, Parity::plus), e2);
    QPolynomial r = Rational(-(2 * m - 1) * (2 * m + 1)) * Us(n, m, p) +
                    Rational((2 * n + 3) * (n + m) * (n + m - 1)) * (rho2 * Us(n - 2, m, p));
    QPolynomial b1 = Rational((n + m) * (n - m + 1) * (2 * m - 1)) * Us(n, m - 1, p) +
                     rat(static_cast<long>(2 * n + 3) * (n + m) * (n + m - 1) * (n + m - 2), 2) *
                         (rho2 * Us(n - 2, m - 1, p)) +
                     Rational(2 * m + 1) * Us(n, m + 1, p) -
                     rat(static_cast<long>(2 * n + 3) * (n + m), 2) * (rho2 * Us(n - 2, m + 1, p));
    QPolynomial b2 = Rational((n + m) * (n - m + 1) * (2 * m - 1)) * Us(n, m - 1, op) +
                     rat(static_cast<long>(2 * n + 3) * (n + m) * (n + m - 1) * (n + m - 2), 2) *
                         (rho2 * Us(n - 2, m - 1, op)) -
                     Rational(2 * m + 1) * Us(n, m + 1, op) -
                     sg * (rat(static_cast<long>(2 * n + 3) * (n + m), 2) * (rho2 * Us(n - 2, m + 1, op)));
    r += qp_mul(b1, e1);
    r -= sg * qp_mul(b2, e2);
    return r;
}

}  // namespace infraball
