#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <sstream>
#include <string>

namespace ipd {

// Exact arbitrary-precision rational. All polynomial coefficients and
// specialization values in the library are of this type; nothing is ever
// rounded.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_integral(const Rational& r) {
    return boost::multiprecision::denominator(r) == 1;
}

// 2^k for k of either sign.
inline Rational pow2(long k) {
    Rational r = 1;
    for (long i = 0; i < k; ++i) r *= 2;
    for (long i = 0; i > k; --i) r /= 2;
    return r;
}

inline Rational rational_pow(const Rational& base, unsigned long e) {
    Rational r = 1;
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
}

inline Integer factorial(unsigned long n) {
    Integer f = 1;
    for (unsigned long i = 2; i <= n; ++i) f *= i;
    return f;
}

// "p" when integral, "p/q" otherwise.
inline std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

}  // namespace ipd
