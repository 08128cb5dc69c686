#pragma once

#include "tightmaps/algebra/multipoly.hpp"
#include "tightmaps/algebra/scalar.hpp"
#include "tightmaps/algebra/series.hpp"
#include "tightmaps/counts/univariate.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace tightmaps {

enum class AlphaMethod { Lagrange, PolySum, Recurrence };

inline std::string to_string(AlphaMethod m) {
    switch (m) {
        case AlphaMethod::Lagrange: return "lagrange";
        case AlphaMethod::PolySum: return "polysum";
        case AlphaMethod::Recurrence: return "recurrence";
    }
    return "?";
}

namespace detail {
inline void check_alpha_args(long long k, long long n) {
    if (k < 0 || n < 0) throw std::invalid_argument("alpha: k and n must be non-negative");
}
}  // namespace detail

// sum_s (-1)^{n-k+s} binom(n+s,n) sum_{l_1+..+l_s=n-k, l_i>=1} prod r_{l_i}(b)
template <Ring R>
R alpha_polysum(const R& b, long long k, long long n) {
    detail::check_alpha_args(k, n);
    if (k > n) return R(0);
    const long long d = n - k;
    std::vector<R> r(static_cast<std::size_t>(d) + 1, R(0));
    for (long long l = 1; l <= d; ++l) r[l] = r_poly(b, l);
    // comp[j] = sum over compositions of j into the current number of parts
    std::vector<R> comp(static_cast<std::size_t>(d) + 1, R(0));
    comp[0] = R(1);
    R total(0);
    for (long long s = 0; s <= d; ++s) {
        if (s > 0) {
            std::vector<R> next(comp.size(), R(0));
            for (long long j = 1; j <= d; ++j)
                for (long long l = 1; l <= j; ++l) {
                    if (is_zero(comp[j - l]) || is_zero(r[l])) continue;
                    next[j] += r[l] * comp[j - l];
                }
            comp = std::move(next);
        }
        if (is_zero(comp[d])) continue;
        R term = R(binom_int(n + s, n)) * comp[d];
        total += ((d + s) % 2 == 0) ? term : R(-term);
    }
    return total;
}

inline MultiPoly alpha_symbolic(long long k, long long n) { return alpha_polysum(MultiPoly::b(), k, n); }

// [u^{n-k}] (u / h_b(u))^{n+1}
inline Rational alpha_lagrange(long long b, long long k, long long n) {
    detail::check_alpha_args(k, n);
    if (b < 0) throw std::invalid_argument("alpha: negative b");
    if (k > n) return 0;
    if (b == 0) return k == n ? 1 : 0;
    const auto d = static_cast<std::size_t>(n - k);
    RationalSeries h = h_series(b, d + 1);
    RationalSeries g(d);
    for (std::size_t i = 0; i <= d; ++i) g.set(i, h[i + 1]);
    return g.pow(-(n + 1))[d];
}

// Simplified b-arrow trees of excess p with n attaching points, for all p < b and n <= max_n.
class ArrowTreeTable {
public:
    ArrowTreeTable(long long b, long long max_n) : b_(b), max_n_(max_n) {
        if (b < 2) throw std::invalid_argument("arrow trees need b >= 2");
        if (max_n < 1) throw std::invalid_argument("arrow trees need max_n >= 1");
        build();
    }

    long long b() const { return b_; }
    long long max_n() const { return max_n_; }

    const Integer& count(long long p, long long n) const {
        if (p < 0 || p >= b_) throw std::invalid_argument("excess p out of range [0, b-1]");
        if (n < 1 || n > max_n_) throw std::invalid_argument("n out of table range");
        return u_[p][n];
    }

private:
    // U_{p,n} = sum_{q>=2} sum_{n_i} sum_{s=p+1..b} sum_{p_i} prod U_{p_i,n_i}
    void build() {
        const auto B = static_cast<std::size_t>(b_);
        const auto N = static_cast<std::size_t>(max_n_);
        u_.assign(B, std::vector<Integer>(N + 1, 0));
        for (std::size_t p = 0; p < B; ++p) u_[p][1] = 1;
        for (std::size_t n = 2; n <= N; ++n) {
            // prev[s][t]: ordered products of q-1 factors with excess sum s and size sum t
            std::vector<std::vector<Integer>> single(B + 1, std::vector<Integer>(n + 1, 0));
            for (std::size_t p = 1; p < B; ++p)
                for (std::size_t t = 1; t < n; ++t) single[p][t] = u_[p][t];
            std::vector<std::vector<Integer>> prev = single;
            std::vector<Integer> by_s(B + 1, 0);  // sum over q>=2 of sequences totalling (s, n)
            for (std::size_t q = 2; q <= n; ++q) {
                std::vector<std::vector<Integer>> cur(B + 1, std::vector<Integer>(n + 1, 0));
                for (std::size_t s = 2; s <= B; ++s)
                    for (std::size_t t = 2; t <= n; ++t) {
                        Integer acc = 0;
                        for (std::size_t p1 = 1; p1 < s && p1 < B; ++p1)
                            for (std::size_t t1 = 1; t1 < t; ++t1) {
                                if (single[p1][t1] == 0 || prev[s - p1][t - t1] == 0) continue;
                                acc += single[p1][t1] * prev[s - p1][t - t1];
                            }
                        cur[s][t] = acc;
                    }
                for (std::size_t s = 2; s <= B; ++s) by_s[s] += cur[s][n];
                prev = std::move(cur);
            }
            for (std::size_t p = 0; p < B; ++p) {
                Integer acc = 0;
                for (std::size_t s = p + 1; s <= B; ++s) acc += by_s[s];
                u_[p][n] = acc;
            }
        }
    }

    long long b_;
    long long max_n_;
    std::vector<std::vector<Integer>> u_;
};

inline Integer u_count(long long b, long long p, long long n) {
    if (b < 2) throw std::invalid_argument("u_count: b must be at least 2");
    if (p < 0 || p > b - 1) throw std::invalid_argument("u_count: p out of range [0, b-1]");
    if (n < 1) throw std::invalid_argument("u_count: n must be at least 1");
    return ArrowTreeTable(b, n).count(p, n);
}

// sum_{n_1+..+n_{k+1}=n+1} n_1 prod U_{0,n_i}
inline Rational alpha_recurrence(long long b, long long k, long long n, const ArrowTreeTable& table) {
    detail::check_alpha_args(k, n);
    if (k > n) return 0;
    if (table.b() != b || table.max_n() < n + 1) throw std::invalid_argument("arrow tree table too small");
    const long long total = n + 1;
    // w[t]: compositions of t into j parts weighted by prod U_{0,.}; start with j = k trailing parts
    std::vector<Integer> w(static_cast<std::size_t>(total) + 1, 0);
    w[0] = 1;
    for (long long j = 0; j < k; ++j) {
        std::vector<Integer> next(w.size(), 0);
        for (long long t = 1; t <= total; ++t)
            for (long long a = 1; a <= t; ++a)
                if (w[t - a] != 0) next[t] += table.count(0, a) * w[t - a];
        w = std::move(next);
    }
    Integer acc = 0;
    for (long long n1 = 1; n1 <= total; ++n1) acc += Integer(n1) * table.count(0, n1) * w[total - n1];
    return Rational(acc);
}

inline Rational alpha_recurrence(long long b, long long k, long long n) {
    detail::check_alpha_args(k, n);
    if (b < 0) throw std::invalid_argument("alpha: negative b");
    if (b <= 1) return k == n ? 1 : 0;
    if (k > n) return 0;
    return alpha_recurrence(b, k, n, ArrowTreeTable(b, n + 1));
}

// b = 0, 1 follow the delta convention; the polynomial expansion agrees there (asserted).
inline Rational alpha(long long b, long long k, long long n, AlphaMethod method = AlphaMethod::PolySum) {
    detail::check_alpha_args(k, n);
    if (b < 0) throw std::invalid_argument("alpha: negative b");
    if (b <= 1) {
        Rational delta = k == n ? 1 : 0;
        if (method == AlphaMethod::PolySum && alpha_polysum(Rational(b), k, n) != delta)
            throw std::logic_error("alpha: polynomial expansion disagrees with delta convention");
        return delta;
    }
    switch (method) {
        case AlphaMethod::Lagrange: return alpha_lagrange(b, k, n);
        case AlphaMethod::PolySum: return alpha_polysum(Rational(b), k, n);
        case AlphaMethod::Recurrence: return alpha_recurrence(b, k, n);
    }
    throw std::invalid_argument("alpha: unknown method");
}

}  // namespace tightmaps
