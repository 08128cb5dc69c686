#pragma once

#include "tightmaps/algebra/multipoly.hpp"
#include "tightmaps/algebra/scalar.hpp"
#include "tightmaps/algebra/series.hpp"

#include <stdexcept>

namespace tightmaps {

// (1/k!^2) prod_{i=1..k} (m^2 - (b+i)^2)
template <Ring R>
R p_univ(const R& b, long long k, const R& m) {
    if (k < 0) throw std::invalid_argument("p_univ: negative k");
    R r(1);
    for (long long i = 1; i <= k; ++i) {
        R s = b + R(i);
        r *= (m * m - s * s);
    }
    Integer f = factorial(k);
    return r * R(ring_inverse(Rational(f * f)));
}

// (1/k!^2) prod_{i=0..k-1} (m^2 - (b-i)^2)
template <Ring R>
R q_univ(const R& b, long long k, const R& m) {
    if (k < 0) throw std::invalid_argument("q_univ: negative k");
    R r(1);
    for (long long i = 0; i < k; ++i) {
        R s = b - R(i);
        r *= (m * m - s * s);
    }
    Integer f = factorial(k);
    return r * R(ring_inverse(Rational(f * f)));
}

// (1/(l!(l+1)!)) prod_{i=1..l} (b-i+1)(b-i)
template <Ring R>
R r_poly(const R& b, long long l) {
    if (l < 1) throw std::invalid_argument("r_poly: l must be at least 1");
    R r(1);
    for (long long i = 1; i <= l; ++i) r *= (b - R(i - 1)) * (b - R(i));
    return r * R(ring_inverse(Rational(factorial(l) * factorial(l + 1))));
}

inline Rational p_univ(long long b, long long k, long long m) { return p_univ(Rational(b), k, Rational(m)); }
inline Rational q_univ(long long b, long long k, long long m) { return q_univ(Rational(b), k, Rational(m)); }
inline Rational r_poly(long long b, long long l) { return r_poly(Rational(b), l); }

// h(u) = u + sum_{l>=1} (-1)^l r_l(b) u^{l+1}; works for symbolic b
template <class R>
TruncSeries<R> h_series_generic(const R& b, std::size_t order) {
    TruncSeries<R> h(order);
    if (order >= 1) h.set(1, R(1));
    for (std::size_t l = 1; l + 1 <= order; ++l) {
        R c = r_poly(b, static_cast<long long>(l));
        h.set(l + 1, (l % 2 == 1) ? R(-c) : c);
    }
    return h;
}

// sum_{j=1..b} ((-1)^{j-1}/b) binom(b,j) binom(b,j-1) u^j
inline RationalSeries h_series(long long b, std::size_t order) {
    if (b < 1) throw std::invalid_argument("h_series: b must be at least 1");
    RationalSeries h(order);
    for (long long j = 1; j <= b && static_cast<std::size_t>(j) <= order; ++j) {
        Rational c = binom_int(b, j) * binom_int(b, j - 1) / Rational(b);
        h.set(static_cast<std::size_t>(j), (j % 2 == 1) ? c : Rational(-c));
    }
    return h;
}

// U_0 with z = h_b(U_0(z))
template <class R>
TruncSeries<R> u0_series_generic(const R& b, std::size_t order) {
    return h_series_generic(b, order).reversion();
}

inline RationalSeries u0_series(long long b, std::size_t order) { return h_series(b, order).reversion(); }

}  // namespace tightmaps
