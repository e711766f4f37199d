#pragma once

#include <random>

#include "infraball.hpp"

namespace infraball::testing {

// Deterministic generator of random rational polynomials for property tests.
class PolyGen {
  public:
    explicit PolyGen(std::uint64_t seed) : rng_(seed) {}

    Rational rational(int max_abs_num = 6, int max_den = 4) {
        std::uniform_int_distribution<int> num(-max_abs_num, max_abs_num);
        std::uniform_int_distribution<int> den(1, max_den);
        return rat(num(rng_), den(rng_));
    }

    ScalarPoly scalar(int max_degree, double keep = 0.35) {
        ScalarPoly p;
        std::uniform_real_distribution<double> coin(0.0, 1.0);
        for (int a = 0; a <= max_degree; ++a)
            for (int b = 0; a + b <= max_degree; ++b)
                for (int c = 0; a + b + c <= max_degree; ++c)
                    if (coin(rng_) < keep)
                        p.add_term(Monomial{static_cast<std::uint32_t>(a),
                                            static_cast<std::uint32_t>(b),
                                            static_cast<std::uint32_t>(c)},
                                   rational());
        return p;
    }

    QPolynomial qpoly(int max_degree, bool reduced = false) {
        return {scalar(max_degree), scalar(max_degree), scalar(max_degree),
                reduced ? ScalarPoly() : scalar(max_degree)};
    }

    // harmonic polynomial in (x1, x2): a combination of Re/Im((x1+i x2)^k)
    ScalarPoly planar_harmonic(int max_degree) {
        ScalarPoly h;
        for (int k = 0; k <= max_degree; ++k) {
            h += rational() * re_power(k);
            if (k >= 1) h += rational() * im_power(k);
        }
        return h;
    }

    int integer(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(rng_);
    }

  private:
    std::mt19937_64 rng_;
};

inline QPolynomial make_qp(ScalarPoly c0, ScalarPoly c1, ScalarPoly c2,
                           ScalarPoly c3 = ScalarPoly()) {
    return {std::move(c0), std::move(c1), std::move(c2), std::move(c3)};
}

inline ScalarPoly sp_mono(std::uint32_t a, std::uint32_t b, std::uint32_t c, const Rational& k) {
    return ScalarPoly::monomial(Monomial{a, b, c}, k);
}

inline ScalarPoly sp_mono(std::uint32_t a, std::uint32_t b, std::uint32_t c, long num,
                          long den = 1) {
    return sp_mono(a, b, c, rat(num, den));
}

}  // namespace infraball::testing
