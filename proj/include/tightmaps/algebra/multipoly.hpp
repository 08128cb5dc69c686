#pragma once

#include "tightmaps/algebra/scalar.hpp"

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <vector>

namespace tightmaps {

// Sparse polynomial over Rational. Variable 0 is b, variable i >= 1 is m_i.
class MultiPoly {
public:
    using Exponents = std::vector<unsigned>;  // trailing zeros trimmed
    using Terms = std::map<Exponents, Rational>;

    MultiPoly() = default;
    template <std::integral T>
    MultiPoly(T c) : MultiPoly(Rational(static_cast<long long>(c))) {}
    MultiPoly(const Integer& c) : MultiPoly(Rational(c)) {}
    MultiPoly(const Rational& c) {
        if (c != 0) terms_.emplace(Exponents{}, c);
    }

    static MultiPoly variable(std::size_t index) {
        Exponents e(index + 1, 0);
        e[index] = 1;
        MultiPoly p;
        p.terms_.emplace(std::move(e), Rational(1));
        return p;
    }
    static MultiPoly b() { return variable(0); }
    static MultiPoly m(std::size_t i) {
        if (i == 0) throw std::invalid_argument("face variables are numbered from 1");
        return variable(i);
    }
    static std::string variable_name(std::size_t index) {
        return index == 0 ? std::string("b") : "m" + std::to_string(index);
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }
    Rational constant_term() const {
        auto it = terms_.find(Exponents{});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // -1 for the zero polynomial
    int total_degree() const {
        int d = -1;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (unsigned x : e) s += static_cast<int>(x);
            d = std::max(d, s);
        }
        return d;
    }
    int degree(std::size_t var) const {
        int d = terms_.empty() ? -1 : 0;
        for (const auto& [e, c] : terms_)
            if (var < e.size()) d = std::max(d, static_cast<int>(e[var]));
        return d;
    }
    std::size_t num_variables() const {
        std::size_t n = 0;
        for (const auto& [e, c] : terms_) n = std::max(n, e.size());
        return n;
    }

    Rational evaluate(std::span<const Rational> values) const {
        Rational total = 0;
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (i >= values.size())
                    throw std::invalid_argument("no value for variable " + variable_name(i));
                for (unsigned j = 0; j < e[i]; ++j) t *= values[i];
            }
            total += t;
        }
        return total;
    }

    MultiPoly substitute(std::size_t var, const MultiPoly& value) const {
        MultiPoly out;
        std::vector<MultiPoly> powers{MultiPoly(1)};
        for (const auto& [e, c] : terms_) {
            unsigned k = var < e.size() ? e[var] : 0;
            while (powers.size() <= k) powers.push_back(powers.back() * value);
            Exponents rest = e;
            if (var < rest.size()) rest[var] = 0;
            trim(rest);
            MultiPoly mono;
            mono.terms_.emplace(std::move(rest), c);
            out += mono * powers[k];
        }
        return out;
    }

    // variable i is renamed to perm[i]; variables beyond perm.size() are kept
    MultiPoly rename_variables(std::span<const std::size_t> perm) const {
        MultiPoly out;
        for (const auto& [e, c] : terms_) {
            Exponents f;
            for (std::size_t i = 0; i < e.size(); ++i) {
                std::size_t j = i < perm.size() ? perm[i] : i;
                if (f.size() <= j) f.resize(j + 1, 0);
                f[j] += e[i];
            }
            trim(f);
            out.add_term(std::move(f), c);
        }
        return out;
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly r(1), base = *this;
        while (e) {
            if (e & 1u) r *= base;
            e >>= 1u;
            if (e) base *= base;
        }
        return r;
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    MultiPoly& operator+=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    MultiPoly& operator-=(const MultiPoly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    MultiPoly& operator*=(const MultiPoly& o) {
        *this = *this * o;
        return *this;
    }
    MultiPoly& operator/=(const Rational& c) {
        if (c == 0) throw std::domain_error("division by zero");
        for (auto& [e, v] : terms_) v /= c;
        return *this;
    }

    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        MultiPoly r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                Exponents e(std::max(ea.size(), eb.size()), 0);
                for (std::size_t i = 0; i < ea.size(); ++i) e[i] += ea[i];
                for (std::size_t i = 0; i < eb.size(); ++i) e[i] += eb[i];
                r.add_term(std::move(e), ca * cb);
            }
        return r;
    }
    friend MultiPoly operator/(MultiPoly a, const Rational& c) { return a /= c; }
    friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

    // Terms in decreasing total degree, then decreasing lexicographic exponents.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::vector<std::pair<Exponents, Rational>> v(terms_.begin(), terms_.end());
        auto deg = [](const Exponents& e) {
            unsigned s = 0;
            for (unsigned x : e) s += x;
            return s;
        };
        std::stable_sort(v.begin(), v.end(), [&](const auto& x, const auto& y) {
            if (deg(x.first) != deg(y.first)) return deg(x.first) > deg(y.first);
            return x.first > y.first;
        });
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : v) {
            Rational a = c < 0 ? Rational(-c) : c;
            if (first) {
                if (c < 0) os << "-";
            } else {
                os << (c < 0 ? " - " : " + ");
            }
            first = false;
            bool mono = !e.empty();
            if (!mono || a != 1) {
                os << tightmaps::to_string(a);
                if (mono) os << "*";
            }
            bool sep = false;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (sep) os << "*";
                os << variable_name(i);
                if (e[i] > 1) os << "^" << e[i];
                sep = true;
            }
        }
        return os.str();
    }

private:
    static void trim(Exponents& e) {
        while (!e.empty() && e.back() == 0) e.pop_back();
    }
    void add_term(Exponents e, const Rational& c) {
        if (c == 0) return;
        trim(e);
        auto [it, inserted] = terms_.try_emplace(std::move(e), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    Terms terms_;
};

inline bool is_zero(const MultiPoly& p) { return p.is_zero(); }

inline MultiPoly ring_inverse(const MultiPoly& p) {
    if (!p.is_constant() || p.is_zero())
        throw std::domain_error("polynomial is not an invertible constant: " + p.to_string());
    return MultiPoly(Rational(1) / p.constant_term());
}

inline std::string to_string(const MultiPoly& p) { return p.to_string(); }

// coefficient rings accepted by the generic formulas
template <class R>
concept Ring = std::same_as<R, Rational> || std::same_as<R, MultiPoly>;

// x(x-1)...(x-k+1)/k!
inline MultiPoly binom_poly(const MultiPoly& x, long long k) {
    if (k < 0) throw std::invalid_argument("binom_poly: negative k");
    MultiPoly r(1);
    for (long long i = 0; i < k; ++i) r *= (x - MultiPoly(i));
    return r / Rational(factorial(k));
}

inline Rational binom_poly(const Rational& x, long long k) {
    if (k < 0) throw std::invalid_argument("binom_poly: negative k");
    Rational r = 1;
    for (long long i = 0; i < k; ++i) r *= (x - i);
    return r / Rational(factorial(k));
}

}  // namespace tightmaps
