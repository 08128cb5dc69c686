#pragma once

#include "tightmaps/algebra/multipoly.hpp"
#include "tightmaps/algebra/scalar.hpp"

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace tightmaps {

// Dense power series sum_{i<=N} c_i x^i; everything beyond N is unknown.
template <class R>
class TruncSeries {
public:
    explicit TruncSeries(std::size_t order = 0) : c_(order + 1, R(0)) {}
    TruncSeries(std::vector<R> coeffs, std::size_t order) : c_(std::move(coeffs)) {
        c_.resize(order + 1, R(0));
    }

    static TruncSeries constant(const R& c, std::size_t order) {
        TruncSeries s(order);
        s.c_[0] = c;
        return s;
    }
    static TruncSeries variable(std::size_t order) {
        TruncSeries s(order);
        if (order >= 1) s.c_[1] = R(1);
        return s;
    }

    std::size_t order() const { return c_.size() - 1; }
    const std::vector<R>& coefficients() const { return c_; }
    const R& operator[](std::size_t i) const { return c_.at(i); }
    R coefficient(std::size_t i) const {
        if (i > order()) throw std::out_of_range("coefficient beyond truncation order");
        return c_[i];
    }
    void set(std::size_t i, R v) { c_.at(i) = std::move(v); }

    TruncSeries truncated(std::size_t order) const {
        if (order > this->order()) throw std::invalid_argument("cannot raise truncation order");
        return TruncSeries(std::vector<R>(c_.begin(), c_.begin() + static_cast<long>(order) + 1), order);
    }

    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const R& x) { return tightmaps::is_zero(x); });
    }

    TruncSeries operator-() const {
        TruncSeries r = *this;
        for (auto& x : r.c_) x = -x;
        return r;
    }
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        std::size_t n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        std::size_t n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (std::size_t i = 0; i <= n; ++i) {
            if (tightmaps::is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend TruncSeries operator*(const R& k, const TruncSeries& a) {
        TruncSeries r = a;
        for (auto& x : r.c_) x = k * x;
        return r;
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

    TruncSeries inverse() const {
        R inv0 = ring_inverse(c_[0]);
        TruncSeries r(order());
        r.c_[0] = inv0;
        for (std::size_t n = 1; n <= order(); ++n) {
            R acc(0);
            for (std::size_t i = 1; i <= n; ++i) acc += c_[i] * r.c_[n - i];
            r.c_[n] = -(acc * inv0);
        }
        return r;
    }

    TruncSeries pow(long long e) const {
        if (e < 0) return inverse().pow(-e);
        TruncSeries r = constant(R(1), order()), base = *this;
        while (e) {
            if (e & 1) r = r * base;
            e >>= 1;
            if (e) base = base * base;
        }
        return r;
    }

    // this(inner(x)); inner must have zero constant term
    TruncSeries compose(const TruncSeries& inner) const {
        if (!tightmaps::is_zero(inner.c_[0]))
            throw std::domain_error("compose: inner series has nonzero constant term");
        std::size_t n = std::min(order(), inner.order());
        TruncSeries in = inner.truncated(n);
        TruncSeries r = constant(c_[n], n);
        for (std::size_t i = n; i-- > 0;) {
            r = r * in;
            r.c_[0] += c_[i];
        }
        return r;
    }

    // t with this(t(z)) = z, solved one coefficient at a time
    TruncSeries reversion() const {
        if (!tightmaps::is_zero(c_[0]))
            throw std::domain_error("reversion: constant term must vanish");
        if (order() < 1) throw std::domain_error("reversion: order must be at least 1");
        R inv1 = ring_inverse(c_[1]);
        TruncSeries t(order());
        t.c_[1] = inv1;
        for (std::size_t n = 2; n <= order(); ++n) {
            TruncSeries probe = compose(t.truncated(n)).truncated(n);
            t.c_[n] = -(probe.c_[n] * inv1);
        }
        return t;
    }

    TruncSeries derivative() const {
        if (order() < 1) throw std::domain_error("derivative needs order >= 1");
        TruncSeries r(order() - 1);
        for (std::size_t i = 1; i <= order(); ++i) r.c_[i - 1] = R(static_cast<long long>(i)) * c_[i];
        return r;
    }

    // zero constant term; order grows by one
    TruncSeries integral() const {
        TruncSeries r(order() + 1);
        for (std::size_t i = 0; i <= order(); ++i)
            r.c_[i + 1] = c_[i] * ring_inverse(R(static_cast<long long>(i + 1)));
        return r;
    }

    std::string to_string() const {
        std::string s;
        for (std::size_t i = 0; i <= order(); ++i) {
            if (i) s += ", ";
            s += tightmaps::to_string(c_[i]);
        }
        return "[" + s + "]";
    }

private:
    std::vector<R> c_;
};

using RationalSeries = TruncSeries<Rational>;
using PolySeries = TruncSeries<MultiPoly>;

template <class R>
TruncSeries<R> series_mul(const TruncSeries<R>& a, const TruncSeries<R>& b) { return a * b; }
template <class R>
TruncSeries<R> series_pow(const TruncSeries<R>& a, long long e) { return a.pow(e); }
template <class R>
TruncSeries<R> series_inverse(const TruncSeries<R>& a) { return a.inverse(); }
template <class R>
TruncSeries<R> series_reversion(const TruncSeries<R>& a) { return a.reversion(); }

}  // namespace tightmaps
