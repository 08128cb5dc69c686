#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace tightmaps {

namespace mp = boost::multiprecision;

// Expression templates off: generic code below uses `auto` freely.
using Integer = mp::number<mp::cpp_int_backend<>, mp::et_off>;
using Rational = mp::number<mp::rational_adaptor<mp::cpp_int_backend<>>, mp::et_off>;

inline Integer numerator_of(const Rational& x) { return mp::numerator(x); }
inline Integer denominator_of(const Rational& x) { return mp::denominator(x); }

inline bool is_integer(const Rational& x) { return denominator_of(x) == 1; }

inline Integer to_integer(const Rational& x) {
    if (!is_integer(x)) throw std::domain_error("value is not an integer: " + x.str());
    return numerator_of(x);
}

inline std::string to_string(const Integer& x) { return x.str(); }

// "p" or "p/q"
inline std::string to_string(const Rational& x) {
    if (is_integer(x)) return numerator_of(x).str();
    return numerator_of(x).str() + "/" + denominator_of(x).str();
}

inline Integer factorial(long long n) {
    if (n < 0) throw std::invalid_argument("factorial of a negative number");
    Integer r = 1;
    for (long long i = 2; i <= n; ++i) r *= i;
    return r;
}

// Falling-factorial binomial, extended to negative upper index.
inline Rational binom_int(const Integer& a, long long k) {
    if (k < 0) return Rational(0);
    if (a >= 0 && Integer(k) > a) return Rational(0);
    Integer num = 1;
    for (long long i = 0; i < k; ++i) num *= (a - i);
    return Rational(num / factorial(k));
}

inline Rational binom_int(long long a, long long k) { return binom_int(Integer(a), k); }

inline bool is_zero(const Rational& x) { return x == 0; }

inline Rational ring_inverse(const Rational& x) {
    if (x == 0) throw std::domain_error("division by zero");
    return Rational(1) / x;
}

}  // namespace tightmaps
