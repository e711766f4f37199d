#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace infraball {

// Exact rational coefficient type.  mpq_class keeps the canonical form
// (positive denominator, reduced fraction) after canonicalize(); every
// constructor below returns a canonicalized value.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

struct RationalFormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Accepts "p" or "p/q" with optional leading '-'.  Rejects empty strings,
// junk characters and zero denominators.
inline Rational rational_from_string(const std::string& s) {
    if (s.empty()) throw RationalFormatError("empty rational literal");
    std::size_t slash = s.find('/');
    auto check_int = [&](const std::string& part, bool allow_sign) {
        if (part.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (part[0] == '-' || part[0] == '+')) i = 1;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    if (slash == std::string::npos) {
        if (!check_int(s, true))
            throw RationalFormatError("bad rational literal: " + s);
    } else {
        std::string num = s.substr(0, slash), den = s.substr(slash + 1);
        if (!check_int(num, true) || !check_int(den, false))
            throw RationalFormatError("bad rational literal: " + s);
        if (Integer(den) == 0)
            throw RationalFormatError("zero denominator in rational literal: " + s);
    }
    Rational r(s);
    r.canonicalize();
    return r;
}

// Canonical "p" / "p/q" rendering, q > 0, lowest terms.
inline std::string to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Integer factorial(unsigned long n) {
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

// (n)!! with the usual (-1)!! = 0!! = 1 convention.
inline Integer double_factorial(long n) {
    if (n <= 0) return Integer(1);
    Integer f;
    mpz_2fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

}  // namespace infraball
