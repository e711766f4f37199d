#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace infraball;
using namespace infraball::testing;

TEST_CASE("quaternion multiplication table") {
    const QPolynomial e1 = QPolynomial::unit(1), e2 = QPolynomial::unit(2),
                      e3 = QPolynomial::unit(3);
    CHECK(qp_mul(e1, e2) == e3);
    CHECK(qp_mul(e2, e3) == e1);
    CHECK(qp_mul(e3, e1) == e2);
    CHECK(qp_mul(e2, e1) == -e3);
    CHECK(qp_mul(e1, e1) == QPolynomial::constant(rat(-1)));
    CHECK(qp_mul(e2, e2) == QPolynomial::constant(rat(-1)));
    CHECK(qp_mul(e3, e3) == QPolynomial::constant(rat(-1)));
}

TEST_CASE("polynomial products") {
    const QPolynomial x1e1 = ScalarPoly::variable(1) * QPolynomial::unit(1);
    CHECK(qp_mul(x1e1, x1e1) == QPolynomial(sp_mono(0, 2, 0, -1)));

    // (x0 + x2 e2) (x1 e1) = x0 x1 e1 - x1 x2 e3
    const QPolynomial lhs = qp_mul(
        make_qp(sp_mono(1, 0, 0, 1), ScalarPoly(), sp_mono(0, 0, 1, 1)),
        ScalarPoly::variable(1) * QPolynomial::unit(1));
    CHECK(lhs == make_qp(ScalarPoly(), sp_mono(1, 1, 0, 1), ScalarPoly(), sp_mono(0, 1, 1, -1)));
}

TEST_CASE("conjugation") {
    const QPolynomial f = make_qp(sp_mono(1, 0, 0, 1), sp_mono(0, 1, 0, 1), ScalarPoly());
    CHECK(qp_conjugate(f) == make_qp(sp_mono(1, 0, 0, 1), sp_mono(0, 1, 0, -1), ScalarPoly()));
    CHECK(qp_conjugate(QPolynomial::unit(3)) == -QPolynomial::unit(3));
    // anti-automorphism on units: conj(e1 e2) = conj(e2) conj(e1)
    const QPolynomial e1 = QPolynomial::unit(1), e2 = QPolynomial::unit(2);
    CHECK(qp_conjugate(qp_mul(e1, e2)) == qp_mul(qp_conjugate(e2), qp_conjugate(e1)));
}

TEST_CASE("partial derivatives") {
    const QPolynomial f = sp_mono(0, 2, 0, 1) * QPolynomial::unit(2);
    CHECK(qp_partial(f, 1) == sp_mono(0, 1, 0, 2) * QPolynomial::unit(2));
    CHECK(qp_partial(QPolynomial(sp_mono(1, 1, 0, 1)), 0) == QPolynomial(sp_mono(0, 1, 0, 1)));
    CHECK(qp_partial(QPolynomial(sp_mono(2, 0, 0, 1)), 2).is_zero());
}

TEST_CASE("evaluation") {
    const QPolynomial f =
        QPolynomial(sp_mono(2, 0, 0, 1)) + ScalarPoly::variable(1) * QPolynomial::unit(1);
    const QRational v = qp_eval(f, {rat(1), rat(2), rat(3)});
    CHECK(v.c[0] == rat(1));
    CHECK(v.c[1] == rat(2));
    CHECK(v.c[2] == rat(0));

    const QPolynomial c = QPolynomial::constant(rat(-7, 3)) + rat(1, 2) * QPolynomial::unit(3);
    const QRational w = qp_eval(c, {rat(5), rat(-1), rat(9, 7)});
    CHECK(w.c[0] == rat(-7, 3));
    CHECK(w.c[3] == rat(1, 2));
}

TEST_CASE("degree handling") {
    CHECK(!QPolynomial().degree().has_value());
    CHECK(QPolynomial::constant(rat(3)).degree() == 0u);
    const QPolynomial f = make_qp(sp_mono(1, 2, 0, 1), ScalarPoly(), sp_mono(0, 0, 5, 1));
    CHECK(f.degree() == 5u);
    CHECK(!f.is_homogeneous(5));
    CHECK(QPolynomial(sp_mono(2, 1, 1, 4)).is_homogeneous(4));
}

TEST_CASE("multiplication is associative and distributive") {
    PolyGen gen(20240601);
    for (int trial = 0; trial < 60; ++trial) {
        const QPolynomial a = gen.qpoly(3), b = gen.qpoly(3), c = gen.qpoly(3);
        CHECK(qp_mul(qp_mul(a, b), c) == qp_mul(a, qp_mul(b, c)));
        CHECK(qp_mul(a, b + c) == qp_mul(a, b) + qp_mul(a, c));
        CHECK(qp_mul(a + b, c) == qp_mul(a, c) + qp_mul(b, c));
    }
}

TEST_CASE("conjugation properties on random pairs") {
    PolyGen gen(77);
    for (int trial = 0; trial < 60; ++trial) {
        const QPolynomial a = gen.qpoly(3), b = gen.qpoly(3);
        CHECK(qp_conjugate(qp_conjugate(a)) == a);
        CHECK(qp_conjugate(qp_mul(a, b)) == qp_mul(qp_conjugate(b), qp_conjugate(a)));
    }
}

TEST_CASE("partials commute") {
    PolyGen gen(5150);
    for (int trial = 0; trial < 30; ++trial) {
        const QPolynomial a = gen.qpoly(4);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                CHECK(qp_partial(qp_partial(a, i), j) == qp_partial(qp_partial(a, j), i));
    }
}

TEST_CASE("reduced values: sums and conjugates stay reduced, products need not") {
    PolyGen gen(31337);
    bool product_left_r3 = true;
    for (int trial = 0; trial < 40; ++trial) {
        const QPolynomial a = gen.qpoly(3, /*reduced=*/true), b = gen.qpoly(3, true);
        CHECK((a + b).is_reduced());
        CHECK(qp_conjugate(a).is_reduced());
        if (!qp_mul(a, b).is_reduced()) product_left_r3 = false;
    }
    // e1 e2 = e3 already leaves R^3
    CHECK(!qp_mul(QPolynomial::unit(1), QPolynomial::unit(2)).is_reduced());
    CHECK(!product_left_r3);
}

TEST_CASE("evaluation is a ring homomorphism") {
    PolyGen gen(424242);
    for (int trial = 0; trial < 40; ++trial) {
        const QPolynomial a = gen.qpoly(3), b = gen.qpoly(3);
        const std::array<Rational, 3> p{gen.rational(), gen.rational(), gen.rational()};
        const QRational va = qp_eval(a, p), vb = qp_eval(b, p);
        CHECK(qp_eval(a + b, p).c == QRational{va.c[0] + vb.c[0], va.c[1] + vb.c[1],
                                               va.c[2] + vb.c[2], va.c[3] + vb.c[3]}
                                         .c);
        CHECK(qp_eval(qp_mul(a, b), p) == qmul(va, vb));
        const Rational lam = gen.rational();
        CHECK(qp_eval(lam * a, p).c[2] == lam * va.c[2]);
    }
    // spot check from the contract: eval(f g, p) = eval(f,p) eval(g,p)
    const QPolynomial f = QPolynomial::coordinate(0) + QPolynomial::unit(1);
    const QPolynomial g = ScalarPoly::variable(2) * QPolynomial::unit(2);
    const std::array<Rational, 3> p{rat(1), rat(1), rat(2)};
    CHECK(qp_eval(qp_mul(f, g), p) == qmul(qp_eval(f, p), qp_eval(g, p)));
}
