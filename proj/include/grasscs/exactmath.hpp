#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <cmath>
#include <stdexcept>

namespace grasscs {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::rational<BigInt>;

inline BigInt factorial_big(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative argument");
    BigInt r = 1;
    for (long k = 2; k <= n; ++k) r *= k;
    return r;
}

/// Binomial coefficient with the zero-outside-range convention.
inline BigInt binom_big(long n, long k) {
    if (k < 0 || k > n || n < 0) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;
    }
    return r;
}

inline double to_double(const BigInt& v) { return v.convert_to<double>(); }

inline double to_double(const Rational& r) {
    return r.numerator().convert_to<double>() / r.denominator().convert_to<double>();
}

inline double binom(long n, long k) { return to_double(binom_big(n, k)); }

/// sqrt of an exact nonnegative rational, evaluated in double at the end.
inline double sqrt_rational(const Rational& r) {
    if (r < 0) throw std::domain_error("sqrt_rational: negative radicand");
    return std::sqrt(to_double(r));
}

}  // namespace grasscs
