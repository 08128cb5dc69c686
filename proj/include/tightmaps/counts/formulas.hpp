#pragma once

#include "tightmaps/algebra/multipoly.hpp"
#include "tightmaps/algebra/scalar.hpp"
#include "tightmaps/algebra/series.hpp"
#include "tightmaps/counts/alpha.hpp"
#include "tightmaps/counts/univariate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace tightmaps {

struct RangeError : std::domain_error {
    using std::domain_error::domain_error;
};

struct FaceSpec {
    long long b = 1;
    std::vector<long long> half_degrees;

    std::size_t n() const { return half_degrees.size(); }
    long long total_half_degree() const {
        long long s = 0;
        for (auto m : half_degrees) s += m;
        return s;
    }
};

namespace detail {

// sum over k_1..k_n >= 0 with k_1+..+k_n <= max_total of prod coef(i, k_i) * weight(total)
template <class R, class Coef, class Weight>
R k_vector_sum(std::size_t n, long long max_total, Coef&& coef, Weight&& weight) {
    if (max_total < 0) return R(0);
    const auto K = static_cast<std::size_t>(max_total);
    std::vector<R> dist(K + 1, R(0));
    dist[0] = R(1);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<R> next(K + 1, R(0));
        for (std::size_t t = 0; t <= K; ++t) {
            if (is_zero(dist[t])) continue;
            for (std::size_t k = 0; t + k <= K; ++k) {
                R c = coef(i, static_cast<long long>(k));
                if (is_zero(c)) continue;
                next[t + k] += dist[t] * c;
            }
        }
        dist = std::move(next);
    }
    R total(0);
    for (std::size_t t = 0; t <= K; ++t) {
        if (is_zero(dist[t])) continue;
        total += dist[t] * weight(static_cast<long long>(t));
    }
    return total;
}

template <class R>
std::vector<R> alpha_row(const R& b, long long n) {
    std::vector<R> row;
    for (long long k = 0; k <= n; ++k) row.push_back(alpha_polysum(b, k, n));
    return row;
}

inline std::vector<Rational> to_rationals(const std::vector<long long>& v) {
    return std::vector<Rational>(v.begin(), v.end());
}

inline void require(bool ok, const std::string& msg) {
    if (!ok) throw RangeError(msg);
}

}  // namespace detail

// (n-1)! sum prod q_{k_i}(m_i) alpha_{k+sum k_i, n-1}
template <class R>
R f_count_generic(const R& b, long long k, const std::vector<R>& ms) {
    const auto n = static_cast<long long>(ms.size());
    if (n < 1) throw std::invalid_argument("f_count: need at least one face");
    if (k < 0) throw std::invalid_argument("f_count: negative k");
    if (k > n - 1) return R(0);
    auto row = detail::alpha_row(b, n - 1);
    R s = detail::k_vector_sum<R>(
        ms.size(), n - 1 - k, [&](std::size_t i, long long ki) { return q_univ(b, ki, ms[i]); },
        [&](long long t) { return row[static_cast<std::size_t>(k + t)]; });
    return R(factorial(n - 1)) * s;
}

inline Rational f_count(long long b, long long k, const std::vector<long long>& ms) {
    detail::require(b >= 1, "f_count: b must be at least 1");
    detail::require(k >= 0, "f_count: k must be non-negative");
    detail::require(!ms.empty(), "f_count: need at least one face");
    for (auto m : ms) detail::require(m >= b, "f_count: half-degree below b is outside the formula range");
    return f_count_generic(Rational(b), k, detail::to_rationals(ms));
}

// sum_{k1+k2=k} p_{k1}(m1) q_{k2}(m2)
template <class R>
R two_face_count_generic(const R& c, long long k, const R& m1, const R& m2) {
    if (k < 0) throw std::invalid_argument("two_face_count: negative k");
    R s(0);
    for (long long k1 = 0; k1 <= k; ++k1) s += p_univ(c, k1, m1) * q_univ(c, k - k1, m2);
    return s;
}

inline Rational two_face_count(long long c, long long k, long long m1, long long m2) {
    detail::require(c >= 0 && k >= 0, "two_face_count: c and k must be non-negative");
    return two_face_count_generic(Rational(c), k, Rational(m1), Rational(m2));
}

// Fixed cycle length 2d, literal two-line expression (both delta terms).
template <class R>
R fixed_cycle_count_raw_generic(const R& d, long long k, const R& m1, const R& m2, bool m1_is_d, bool m2_is_d) {
    R s(0);
    for (long long k1 = 1; k1 <= k; ++k1) {
        long long k2 = k + 1 - k1;
        R w = R(2) * d * R(Rational(k1 + k2) / Rational(k1 * k2));
        s += w * p_univ(d, k1 - 1, m1) * q_univ(R(d - R(1)), k2 - 1, m2);
    }
    if (m2_is_d) s += p_univ(d, k, m1);
    if (m1_is_d) s += q_univ(R(d - R(1)), k, m2);
    return s;
}

inline Rational fixed_cycle_count_raw(long long d, long long k, long long m1, long long m2) {
    detail::require(d >= 1 && k >= 0, "fixed_cycle_count: need d >= 1 and k >= 0");
    return fixed_cycle_count_raw_generic(Rational(d), k, Rational(m1), Rational(m2), m1 == d, m2 == d);
}

// Combinatorial reading: zero unless d <= min(m1, m2); the p^{(d)}(m1) factors only
// inside their range m1 >= d+1.
inline Rational fixed_cycle_count(long long d, long long k, long long m1, long long m2) {
    detail::require(d >= 1 && k >= 0, "fixed_cycle_count: need d >= 1 and k >= 0");
    if (d > std::min(m1, m2)) return 0;
    Rational D(d), M1(m1), M2(m2);
    Rational s = 0;
    if (m1 > d) {
        for (long long k1 = 1; k1 <= k; ++k1) {
            long long k2 = k + 1 - k1;
            s += Rational(2 * d) * (Rational(k1 + k2) / Rational(k1 * k2)) * p_univ(D, k1 - 1, M1) * q_univ(D - 1, k2 - 1, M2);
        }
        if (m2 == d) s += p_univ(D, k, M1);
    }
    if (m1 == d) s += q_univ(D - 1, k, M2);
    return s;
}

// (n-3)! sum p_{k1}(m1) prod_{i>=2} q_{k_i}(m_i) alpha_{sum k_i, n-3}; m1 carries the p factor
template <class R>
R n_count_formula(const R& b, const std::vector<R>& ms) {
    const auto n = static_cast<long long>(ms.size());
    if (n < 3) throw RangeError("n_count: outside theorem range (need n >= 3)");
    auto row = detail::alpha_row(b, n - 3);
    R s = detail::k_vector_sum<R>(
        ms.size(), n - 3,
        [&](std::size_t i, long long ki) { return i == 0 ? p_univ(b, ki, ms[0]) : q_univ(b, ki, ms[i]); },
        [&](long long t) { return row[static_cast<std::size_t>(t)]; });
    return R(factorial(n - 3)) * s;
}

// all faces of degree 2b
template <class R>
R angulation_count_generic(const R& b, long long n) {
    if (n < 3) throw RangeError("angulation count: outside theorem range (need n >= 3)");
    R s(0);
    for (long long k = 0; k <= n - 3; ++k) {
        R term = binom_poly(R(R(2) * b + R(k)), k) * alpha_polysum(b, k, n - 3);
        s += (k % 2 == 0) ? term : R(-term);
    }
    s = R(factorial(n - 3)) * s;
    if (n >= 4) {
        R extra = R(Rational(factorial(n - 1)) / 2);
        s += (n % 2 == 0) ? extra : R(-extra);
    }
    return s;
}

inline Rational angulation_count(long long b, long long n) {
    detail::require(b >= 1, "angulation count: b must be at least 1");
    return angulation_count_generic(Rational(b), n);
}

inline Rational n_count(const FaceSpec& spec) {
    const long long b = spec.b;
    detail::require(b >= 1, "n_count: b must be at least 1");
    detail::require(spec.n() >= 3, "n_count: outside theorem range (need n >= 3)");
    for (auto m : spec.half_degrees) detail::require(m >= b, "n_count: outside theorem range (half-degree below b)");
    std::vector<long long> ms = spec.half_degrees;
    auto it = std::max_element(ms.begin(), ms.end());
    if (*it == b) return angulation_count(b, static_cast<long long>(ms.size()));
    std::iter_swap(ms.begin(), it);
    return n_count_formula(Rational(b), detail::to_rationals(ms));
}

inline Rational n_count(long long b, const std::vector<long long>& ms) { return n_count(FaceSpec{b, ms}); }

// b and m_1..m_n symbolic
inline MultiPoly n_count_symbolic(std::size_t n) {
    std::vector<MultiPoly> ms;
    for (std::size_t i = 1; i <= n; ++i) ms.push_back(MultiPoly::m(i));
    return n_count_formula(MultiPoly::b(), ms);
}

// (n-3)! sum two_face(c,k,m1,m2) prod_{i>=3} q_{k_i}(m_i) alpha_{k+sum, n-3}
template <class R>
R n_essential_generic(const R& b, const R& c, const std::vector<R>& ms) {
    const auto n = static_cast<long long>(ms.size());
    if (n < 3) throw RangeError("n_essential: need n >= 3");
    auto row = detail::alpha_row(b, n - 3);
    R s = detail::k_vector_sum<R>(
        ms.size() - 1, n - 3,
        [&](std::size_t i, long long ki) {
            return i == 0 ? two_face_count_generic(c, ki, ms[0], ms[1]) : q_univ(b, ki, ms[i + 1]);
        },
        [&](long long t) { return row[static_cast<std::size_t>(t)]; });
    return R(factorial(n - 3)) * s;
}

inline Rational n_essential(long long b, long long c, const std::vector<long long>& ms) {
    detail::require(b >= 1 && c >= 1, "n_essential: b and c must be at least 1");
    detail::require(ms.size() >= 3, "n_essential: need n >= 3");
    detail::require(ms[0] >= c + 1 && ms[1] >= c + 1, "n_essential: need m1, m2 >= c+1");
    for (std::size_t i = 2; i < ms.size(); ++i) detail::require(ms[i] >= b, "n_essential: need m_i >= b for i >= 3");
    return n_essential_generic(Rational(b), Rational(c), detail::to_rationals(ms));
}

// (n-3)! sum_k binom(2b-1,k) alpha_{k,n-3}
inline Rational beta_count(long long b, long long n) {
    detail::require(b >= 1, "beta_count: b must be at least 1");
    detail::require(n >= 3, "beta_count: need n >= 3");
    Rational s = 0;
    for (long long k = 0; k <= n - 3; ++k) s += binom_int(2 * b - 1, k) * alpha(b, k, n - 3);
    return Rational(factorial(n - 3)) * s;
}

// N_b(z) = 2 - (1+U_0)^{-2b} + 2bz - b(2z+z^2)/(1+z)^2
inline RationalSeries angulation_series(long long b, std::size_t order) {
    detail::require(b >= 1, "angulation_series: b must be at least 1");
    RationalSeries u0 = u0_series(b, order);
    RationalSeries one = RationalSeries::constant(1, order);
    RationalSeries z = RationalSeries::variable(order);
    RationalSeries n = RationalSeries::constant(2, order) - (one + u0).pow(-2 * b) + Rational(2 * b) * z;
    RationalSeries w = (Rational(2) * z + z * z) * (one + z).pow(-2);
    return n - Rational(b) * w;
}

// (n-2)!/(2b) [z^{n-2}] N_b(z)
inline Rational angulation_count_from_series(long long b, long long n, const RationalSeries& nb) {
    detail::require(n >= 3, "angulation count: need n >= 3");
    return Rational(factorial(n - 2)) * nb.coefficient(static_cast<std::size_t>(n - 2)) / Rational(2 * b);
}

}  // namespace tightmaps
