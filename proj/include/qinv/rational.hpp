#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "qinv/common.hpp"

namespace qinv {

// Exact arbitrary-precision arithmetic. cpp_rational keeps values reduced to
// lowest terms with a positive denominator, which is the invariant every file
// format and certificate in this library relies on.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer numerator_of(const Rational& r) { return boost::multiprecision::numerator(r); }
inline Integer denominator_of(const Rational& r) { return boost::multiprecision::denominator(r); }

// Rendered as "p/q", or just "p" when q = 1.
inline std::string format_rational(const Rational& r) {
    const Integer num = numerator_of(r);
    const Integer den = denominator_of(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        const Integer num(s.substr(0, slash));
        const Integer den(s.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + s + "'");
        return Rational(num, den);
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad rational '" + s + "'");
    }
}

}  // namespace qinv
