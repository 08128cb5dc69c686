#pragma once

#include "tightmaps/algebra/multipoly.hpp"
#include "tightmaps/algebra/scalar.hpp"
#include "tightmaps/algebra/series.hpp"
#include "tightmaps/counts/formulas.hpp"
#include "tightmaps/counts/univariate.hpp"

#include <stdexcept>
#include <vector>

namespace tightmaps {

// S = sum_k p_{k1}(m1) prod_{i>=2} q_{k_i}(m_i) U_0^{1+K} / (1+K), K = sum k_i
template <class R>
TruncSeries<R> budd_sum_form(long long b, const std::vector<R>& ms, std::size_t order) {
    if (ms.empty()) throw std::invalid_argument("budd: need at least one face");
    const R B(b);
    TruncSeries<R> u0 = u0_series_generic(B, order);
    TruncSeries<R> s(order);
    TruncSeries<R> power = u0;  // U_0^{K+1}
    for (std::size_t K = 0; K + 1 <= order; ++K) {
        R c = detail::k_vector_sum<R>(
            ms.size(), static_cast<long long>(K),
            [&](std::size_t i, long long ki) { return i == 0 ? p_univ(B, ki, ms[0]) : q_univ(B, ki, ms[i]); },
            [&](long long t) { return t == static_cast<long long>(K) ? R(1) : R(0); });
        if (!is_zero(c)) s = s + (c * R(ring_inverse(Rational(static_cast<long long>(K + 1))))) * power;
        power = power * u0;
    }
    return s;
}

// S = int_0^{U_0(z)} dr (1+r)^{-(2b+1)} prod_i I(b, m_i; r), I(b,m;r) = sum_k q_k(m) r^k
template <class R>
TruncSeries<R> budd_integral_form(long long b, const std::vector<R>& ms, std::size_t order) {
    if (order < 1) throw std::invalid_argument("budd: order must be at least 1");
    const R B(b);
    const std::size_t inner = order - 1;
    TruncSeries<R> one_plus_r = TruncSeries<R>::constant(R(1), inner) + TruncSeries<R>::variable(inner);
    TruncSeries<R> g = one_plus_r.pow(-(2 * b + 1));
    for (const R& m : ms) {
        TruncSeries<R> I(inner);
        for (std::size_t k = 0; k <= inner; ++k) I.set(k, q_univ(B, static_cast<long long>(k), m));
        g = g * I;
    }
    return g.integral().compose(u0_series_generic(B, order));
}

template <class R>
TruncSeries<R> budd_identity_residual(long long b, const std::vector<R>& ms, std::size_t order) {
    if (b < 1) throw std::invalid_argument("budd: b must be at least 1");
    if (order + 2 < ms.size()) throw std::invalid_argument("budd: order must be at least n-2");
    return budd_sum_form(b, ms, order) - budd_integral_form(b, ms, order);
}

inline RationalSeries budd_identity_residual(long long b, const std::vector<long long>& ms, std::size_t order) {
    return budd_identity_residual(b, detail::to_rationals(ms), order);
}

// (n-2)! [z^{n-2}] S, which should reproduce n_count
inline Rational n_count_from_budd(long long b, const std::vector<long long>& ms) {
    const std::size_t n = ms.size();
    if (n < 3) throw RangeError("need n >= 3");
    auto s = budd_integral_form(b, detail::to_rationals(ms), n - 2);
    return Rational(factorial(static_cast<long long>(n - 2))) * s[n - 2];
}

template <class R>
using Matrix = std::vector<std::vector<R>>;

// q_k = sum_i binom(2c+1, i) p_{k-i}
template <class R>
Matrix<R> qktopkc_matrix(const R& c, std::size_t K) {
    Matrix<R> t(K + 1, std::vector<R>(K + 1, R(0)));
    for (std::size_t k = 0; k <= K; ++k)
        for (std::size_t i = 0; i <= k; ++i)
            t[k][k - i] = binom_poly(R(R(2) * c + R(1)), static_cast<long long>(i));
    return t;
}

// p_k = sum_j (-1)^j binom(2b+j, j) q_{k-j}
template <class R>
Matrix<R> pktoqkc_matrix(const R& b, std::size_t K) {
    Matrix<R> t(K + 1, std::vector<R>(K + 1, R(0)));
    for (std::size_t k = 0; k <= K; ++k)
        for (std::size_t j = 0; j <= k; ++j) {
            R v = binom_poly(R(R(2) * b + R(static_cast<long long>(j))), static_cast<long long>(j));
            t[k][k - j] = (j % 2 == 0) ? v : R(-v);
        }
    return t;
}

template <class R>
Matrix<R> matrix_product(const Matrix<R>& a, const Matrix<R>& b) {
    const std::size_t n = a.size();
    Matrix<R> c(n, std::vector<R>(b.empty() ? 0 : b[0].size(), R(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < b.size(); ++k) {
            if (is_zero(a[i][k])) continue;
            for (std::size_t j = 0; j < b[k].size(); ++j) c[i][j] += a[i][k] * b[k][j];
        }
    return c;
}

template <class R>
std::vector<R> apply_matrix(const Matrix<R>& a, const std::vector<R>& v) {
    std::vector<R> out(a.size(), R(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size() && j < a[i].size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

}  // namespace tightmaps
