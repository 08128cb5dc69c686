#pragma once

#include "tightmaps/counts/alpha.hpp"
#include "tightmaps/counts/budd.hpp"
#include "tightmaps/counts/formulas.hpp"
#include "tightmaps/counts/univariate.hpp"
#include "tightmaps/maps/canonical.hpp"
#include "tightmaps/maps/enumerate.hpp"
#include "tightmaps/maps/predicates.hpp"
#include "tightmaps/maps/two_face.hpp"
#include "tightmaps/trees/arrow_trees.hpp"
#include "tightmaps/trees/closure.hpp"
#include "tightmaps/trees/decorated.hpp"
#include "tightmaps/trees/slice.hpp"
#include "tightmaps/trees/words.hpp"

#include <chrono>
#include <cstdint>
#include <functional>
#include <future>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace tightmaps {

struct VerifyLimits {
    int max_edges = 8;          // exhaustive map oracle
    int max_tree_vertices = 3;  // blossoming vertices per closed tree
    int max_tree_half_sum = 6;
    std::size_t order = 6;      // series truncation
};

struct SuiteReport {
    std::string scope;
    std::uint64_t checks = 0;
    std::uint64_t failures = 0;
    std::string first_failure{};  // smallest failing instance, with a replayable witness when there is one
    double seconds = 0;
    bool passed() const { return failures == 0; }
};

namespace detail {

class Checker {
public:
    explicit Checker(SuiteReport& r) : r_(r) {}

    // instances are visited smallest first, so the first failure is the one reported
    bool check(bool ok, const std::function<std::string()>& describe) {
        ++r_.checks;
        if (!ok && r_.failures++ == 0) r_.first_failure = describe();
        return ok;
    }

    template <class A, class B>
    bool equal(const A& got, const B& want, const std::string& instance, const std::string& witness = {}) {
        return check(got == want, [&] {
            std::ostringstream os;
            os << instance << ": expected " << want << ", got " << got;
            if (!witness.empty()) os << "\nwitness:\n" << witness;
            return os.str();
        });
    }

private:
    SuiteReport& r_;
};

inline std::string join(const std::vector<long long>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return "[" + s + "]";
}

// nonincreasing lists with parts >= lo, total exactly `sum`
inline void partitions(long long sum, long long lo, long long hi, std::vector<long long>& cur,
                       std::vector<std::vector<long long>>& out) {
    if (sum == 0) {
        out.push_back(cur);
        return;
    }
    for (long long p = std::min(sum, hi); p >= lo; --p) {
        cur.push_back(p);
        partitions(sum - p, lo, p, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<long long>> partitions(long long sum, long long lo) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    partitions(sum, lo, sum, cur, out);
    return out;
}

// ordered lists with parts >= lo, total at most max_sum, length 1..max_len
inline std::vector<std::vector<long long>> compositions_up_to(long long max_sum, long long lo, std::size_t max_len) {
    std::vector<std::vector<long long>> out;
    std::vector<long long> cur;
    std::function<void(long long)> rec = [&](long long left) {
        if (!cur.empty()) out.push_back(cur);
        if (cur.size() == max_len) return;
        for (long long p = lo; p <= left; ++p) {
            cur.push_back(p);
            rec(left - p);
            cur.pop_back();
        }
    };
    rec(max_sum);
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        long long sa = 0, sb = 0;
        for (auto x : a) sa += x;
        for (auto x : b) sb += x;
        return sa < sb;
    });
    return out;
}

inline std::string series_text(const RationalSeries& s) { return s.to_string(); }

}  // namespace detail

// alpha: three methods, conventions at b = 0, 1, vanishing, degrees, closed-form specials
inline SuiteReport verify_alpha(const VerifyLimits& = {}) {
    SuiteReport r{"alpha"};
    detail::Checker ck(r);
    for (long long b = 2; b <= 6; ++b)
        for (long long n = 0; n <= 8; ++n) {
            ArrowTreeTable table(b, n + 1);
            for (long long k = 0; k <= n; ++k) {
                const std::string inst = "alpha(b=" + std::to_string(b) + ",k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")";
                Rational ps = alpha(b, k, n, AlphaMethod::PolySum);
                ck.equal(to_string(alpha(b, k, n, AlphaMethod::Lagrange)), to_string(ps), inst + " Lagrange vs PolySum");
                ck.equal(to_string(alpha_recurrence(b, k, n, table)), to_string(ps), inst + " Recurrence vs PolySum");
            }
            ck.equal(to_string(alpha(b, n + 1, n)), std::string("0"), "alpha(b=" + std::to_string(b) + ",k=n+1,n=" + std::to_string(n) + ")");
        }
    for (long long b = 0; b <= 1; ++b)
        for (long long n = 0; n <= 8; ++n)
            for (long long k = 0; k <= n; ++k) {
                const std::string want = k == n ? "1" : "0";
                const std::string inst = "alpha(b=" + std::to_string(b) + ",k=" + std::to_string(k) + ",n=" + std::to_string(n) + ")";
                ck.equal(to_string(alpha(b, k, n, AlphaMethod::PolySum)), want, inst + " PolySum");
                ck.equal(to_string(alpha(b, k, n, AlphaMethod::Lagrange)), want, inst + " Lagrange");
            }
    const MultiPoly B = MultiPoly::b();
    const MultiPoly one(1);
    for (long long n = 0; n <= 8; ++n) {
        const std::string ns = std::to_string(n);
        const Rational N(n);
        ck.equal(alpha_symbolic(n, n).to_string(), one.to_string(), "alpha_{n,n}, n=" + ns);
        for (long long k = 0; k <= n; ++k)
            ck.equal(alpha_symbolic(k, n).degree(0), static_cast<int>(2 * (n - k)),
                     "degree in b of alpha_{" + std::to_string(k) + "," + ns + "}");
        if (n >= 1) {
            MultiPoly want = MultiPoly((N + 1) / 2) * B * (B - one);
            ck.equal(alpha_symbolic(n - 1, n).to_string(), want.to_string(), "alpha_{n-1,n}, n=" + ns);
        }
        if (n >= 2) {
            MultiPoly want = MultiPoly((N + 1) / 6) * (MultiPoly((3 * N + 4) / 4) * B + one) * B * (B - one).pow(2);
            ck.equal(alpha_symbolic(n - 2, n).to_string(), want.to_string(), "alpha_{n-2,n}, n=" + ns);
        }
        if (n >= 3) {
            MultiPoly inner = MultiPoly((3 * N * N + 9 * N + 7) / 12) * B.pow(3) - MultiPoly((3 * N * N - 3 * N - 11) / 12) * B.pow(2) -
                              MultiPoly((3 * N + 2) / 3) * B - one;
            MultiPoly want = MultiPoly((N + 1) / 12) * inner * B * (B - one).pow(2);
            ck.equal(alpha_symbolic(n - 3, n).to_string(), want.to_string(), "alpha_{n-3,n}, n=" + ns);
        }
    }
    // forgetting the distinguished attaching point of a single arrow tree
    for (long long b = 2; b <= 5; ++b)
        for (long long n = 1; n <= 7; ++n)
            ck.equal(to_string(Rational(u_count(b, 0, n)) * n), to_string(alpha(b, 0, n - 1)),
                     "n*u_count(b=" + std::to_string(b) + ",0,n=" + std::to_string(n) + ") vs alpha_{0,n-1}");
    return r;
}

// blossoming A/L/T words against q, M/D/U words against p
inline SuiteReport verify_words(const VerifyLimits& = {}) {
    SuiteReport r{"words"};
    detail::Checker ck(r);
    for (long long b = 0; b <= 3; ++b)
        for (long long m = std::max<long long>(b, 1); m <= 7; ++m)
            for (long long k = 0; k <= m + b; ++k)
                ck.equal(std::to_string(enumerate_blossom_words(b, m, k)), to_string(q_univ(b, k, m)),
                         "blossom words (b=" + std::to_string(b) + ",m=" + std::to_string(m) + ",k=" + std::to_string(k) + ")");
    for (long long c = 0; c <= 3; ++c)
        for (long long m = c + 1; m <= 7; ++m)
            for (long long k = 0; k <= m; ++k)
                ck.equal(std::to_string(enumerate_mdu_words(c, m, k)), to_string(p_univ(c, k, m)),
                         "MDU words (c=" + std::to_string(c) + ",m=" + std::to_string(m) + ",k=" + std::to_string(k) + ")");
    return r;
}

inline SuiteReport verify_arrowtrees(const VerifyLimits& = {}) {
    SuiteReport r{"arrowtrees"};
    detail::Checker ck(r);
    ck.equal(std::to_string(enumerate_arrow_trees(3, 2, 2)), std::string("2"), "U^(3)_{2,2}");
    ck.equal(std::to_string(enumerate_arrow_trees(3, 2, 1)), std::string("1"), "U^(3)_{2,1}");
    for (long long b = 2; b <= 4; ++b) {
        ArrowTreeGenerator gen(b);
        for (long long p = 0; p <= b - 1; ++p)
            for (long long n = 1; n <= 5; ++n) {
                const auto& trees = gen.trees(p, n);
                ck.equal(std::to_string(trees.size()), u_count(b, p, n).str(),
                         "arrow trees (b=" + std::to_string(b) + ",p=" + std::to_string(p) + ",n=" + std::to_string(n) + ")",
                         trees.empty() ? "" : trees.front());
            }
    }
    return r;
}

// decorated-tree tuples against F, closure into slices, charge, bijection counts
inline SuiteReport verify_trees(const VerifyLimits& lim = {}) {
    SuiteReport r{"trees"};
    detail::Checker ck(r);
    for (long long b = 1; b <= 2; ++b)
        for (const auto& ms : detail::compositions_up_to(lim.max_tree_half_sum, b, static_cast<std::size_t>(lim.max_tree_vertices)))
            for (long long k = 0; k <= 2; ++k)
                ck.equal(std::to_string(enumerate_decorated_tuples(b, k, ms, lim.max_tree_half_sum)), to_string(f_count(b, k, ms)),
                         "decorated tuples (b=" + std::to_string(b) + ",k=" + std::to_string(k) + ",m=" + detail::join(ms) + ")");

    for (long long b = 1; b <= 2; ++b)
        for (const auto& ms : detail::compositions_up_to(lim.max_tree_half_sum, b, static_cast<std::size_t>(lim.max_tree_vertices))) {
            const std::string inst = "closure (b=" + std::to_string(b) + ",m=" + detail::join(ms) + ")";
            DecoratedTreeGenerator gen(b, ms);
            const auto& trees = gen.trees(gen.full_mask());
            std::set<CanonicalCode> codes;
            for (const auto& text : trees) {
                DecoratedTree t = parse_tree(text, b);
                for (int v = 0; v < t.size(); ++v)
                    if (t.nodes[v].kind == NodeKind::Edge)
                        ck.equal(charge(t, v), expected_charge(t, v), inst + " charge at node " + std::to_string(v), text);
                Closure c = close_tree(t);
                SliceCheck sc = validate_slice(c.slice, b);
                ck.check(sc.ok && !sc.empty, [&] { return inst + ": closure is not a 0-slice (" + sc.reason + ")\nwitness:\n" + text + "\n" + serialize_map(c.slice); });
                bool degrees_ok = true;
                for (std::size_t i = 0; i < ms.size(); ++i) {
                    int f = c.slice.face_with_label(static_cast<int>(i) + 1);
                    degrees_ok = degrees_ok && f >= 0 && c.slice.face_degree(f) == 2 * ms[i];
                }
                ck.check(degrees_ok, [&] { return inst + ": inner face degrees differ from the tree\nwitness:\n" + text; });
                codes.insert(canonical_code(c.slice));
            }
            ck.equal(codes.size(), trees.size(), inst + " distinct closures vs trees");
            ck.equal(std::to_string(trees.size()), to_string(f_count(b, 0, ms)), inst + " trees vs F_0");
            std::vector<long long> full{b + 1, b};
            full.insert(full.end(), ms.begin(), ms.end());
            ck.equal(std::to_string(codes.size()), to_string(n_count(b, full)), inst + " closures vs N(b+1,b,m..)");
            long long total = 0;
            for (auto m : ms) total += m;
            if (2 * total <= lim.max_edges)
                ck.equal(count_slices_by_maps(b, ms, lim.max_edges), codes.size(), inst + " slices by map enumeration vs closures");
        }
    return r;
}

// Theorem count against exhaustive tight irreducible maps
inline SuiteReport verify_maps(const VerifyLimits& lim = {}) {
    SuiteReport r{"maps"};
    detail::Checker ck(r);
    EnumOptions opt;
    opt.max_edges = lim.max_edges;
    for (long long sum = 3; sum <= lim.max_edges; ++sum)
        for (const auto& ms : detail::partitions(sum, 1)) {
            if (ms.size() < 3) continue;
            const long long smallest = ms.back();
            if (smallest > 2) continue;  // only b = 1, 2
            auto maps = enumerate_maps(ms, opt);
            for (long long b = 1; b <= std::min<long long>(2, smallest); ++b) {
                std::string witness;
                std::uint64_t got = 0;
                for (const auto& m : maps)
                    if (is_tight(m) && is_irreducible(m, b)) {
                        if (!got) witness = serialize_map(m);
                        ++got;
                    }
                if (witness.empty() && !maps.empty()) witness = serialize_map(maps.front());
                ck.equal(std::to_string(got), to_string(n_count(b, ms)), "maps (b=" + std::to_string(b) + ",m=" + detail::join(ms) + ")", witness);
            }
        }
    return r;
}

// two-face maps per cycle length, aggregate, and the summation identity
inline SuiteReport verify_twoface(const VerifyLimits& = {}) {
    SuiteReport r{"twoface"};
    detail::Checker ck(r);
    for (long long m1 = 1; m1 <= 4; ++m1)
        for (long long m2 = 1; m2 <= 4; ++m2)
            for (long long k = 0; k <= 2; ++k) {
                const std::string inst = "(m1=" + std::to_string(m1) + ",m2=" + std::to_string(m2) + ",k=" + std::to_string(k) + ")";
                auto table = enumerate_two_face_marked(m1, m2, k);
                for (auto [d, cnt] : table)
                    ck.equal(std::to_string(cnt), to_string(fixed_cycle_count(d, k, m1, m2)), "two-face d=" + std::to_string(d) + " " + inst);
                for (long long c = 0; c + 1 <= std::min(m1, m2); ++c) {
                    std::uint64_t total = 0;
                    for (auto [d, cnt] : table)
                        if (d >= c + 1) total += cnt;
                    ck.equal(std::to_string(total), to_string(two_face_count(c, k, m1, m2)), "two-face c=" + std::to_string(c) + " " + inst);
                }
            }
    for (long long c = 0; c <= 3; ++c)
        for (long long k = 0; k <= 4; ++k)
            for (long long m1 = c + 1; m1 <= 8; ++m1)
                for (long long m2 = c + 1; m2 <= 8; ++m2) {
                    Rational s = 0;
                    for (long long d = c + 1; d <= std::max(m1, m2); ++d) s += fixed_cycle_count(d, k, m1, m2);
                    ck.equal(to_string(s), to_string(two_face_count(c, k, m1, m2)),
                             "sum over cycle lengths (c=" + std::to_string(c) + ",k=" + std::to_string(k) + ",m1=" + std::to_string(m1) +
                                 ",m2=" + std::to_string(m2) + ")");
                }
    return r;
}

// integral form vs sum form, and the triangular p/q transforms
inline SuiteReport verify_budd(const VerifyLimits& lim = {}) {
    SuiteReport r{"budd"};
    detail::Checker ck(r);
    const std::size_t order = std::max<std::size_t>(lim.order, 2);
    for (long long b = 1; b <= 3; ++b)
        for (const auto& ms : detail::compositions_up_to(16, 1, 4)) {
            bool in_range = true;
            for (auto m : ms) in_range = in_range && m <= 4;
            if (!in_range || order + 2 < ms.size()) continue;
            auto res = budd_identity_residual(b, ms, order);
            ck.check(res.is_zero(), [&] {
                return "budd residual (b=" + std::to_string(b) + ",m=" + detail::join(ms) + "): " + detail::series_text(res);
            });
            if (ms.size() >= 3 && ms.front() >= b + 1) {
                bool all_ge_b = true;
                for (auto m : ms) all_ge_b = all_ge_b && m >= b;
                if (all_ge_b)
                    ck.equal(to_string(n_count_from_budd(b, ms)), to_string(n_count(b, ms)),
                             "coefficient of the integral form (b=" + std::to_string(b) + ",m=" + detail::join(ms) + ")");
            }
        }
    const std::size_t K = 6;
    const MultiPoly B = MultiPoly::b();
    auto prod = matrix_product(qktopkc_matrix(B, K), pktoqkc_matrix(B, K));
    for (std::size_t i = 0; i <= K; ++i)
        for (std::size_t j = 0; j <= K; ++j)
            ck.equal(prod[i][j].to_string(), MultiPoly(i == j ? 1 : 0).to_string(),
                     "transform product entry (" + std::to_string(i) + "," + std::to_string(j) + ")");
    for (long long b = 0; b <= 3; ++b)
        for (long long m = b + 1; m <= 6; ++m) {
            std::vector<Rational> p, q;
            for (std::size_t k = 0; k <= K; ++k) {
                p.push_back(p_univ(b, static_cast<long long>(k), m));
                q.push_back(q_univ(b, static_cast<long long>(k), m));
            }
            auto q2 = apply_matrix(qktopkc_matrix(Rational(b), K), p);
            auto p2 = apply_matrix(pktoqkc_matrix(Rational(b), K), q);
            ck.check(q2 == q && p2 == p, [&] { return "p/q transforms (b=" + std::to_string(b) + ",m=" + std::to_string(m) + ")"; });
        }
    return r;
}

// angulations: formula vs maps, beta vs maps, series identities
inline SuiteReport verify_angulations(const VerifyLimits& lim = {}) {
    SuiteReport r{"angulations"};
    detail::Checker ck(r);
    EnumOptions opt;
    opt.max_edges = lim.max_edges;
    for (long long b = 1; b <= 2; ++b)
        for (long long n = 3; n * b <= lim.max_edges && n <= 6; ++n) {
            std::vector<long long> ms(static_cast<std::size_t>(n), b);
            std::uint64_t irreducible = 0, beta = 0;
            std::string witness;
            for (const auto& m : enumerate_maps(ms, opt)) {
                if (is_irreducible(m, b)) {
                    if (!irreducible) witness = serialize_map(m);
                    ++irreducible;
                }
                if (is_essentially_irreducible(m, b, 1, 2) && separating_girth(m, 1, 2) == 2 * b) ++beta;
            }
            const std::string inst = "(b=" + std::to_string(b) + ",n=" + std::to_string(n) + ")";
            ck.equal(std::to_string(irreducible), to_string(angulation_count(b, n)), "irreducible angulations " + inst, witness);
            ck.equal(std::to_string(beta), to_string(beta_count(b, n)), "separating girth 2b angulations " + inst);
        }
    const std::size_t order = std::max<std::size_t>(lim.order, 1);
    for (long long b = 1; b <= 4; ++b) {
        const std::string bs = "b=" + std::to_string(b);
        // sum beta_n z^{n-3}/(n-3)! = U_0' (1+U_0)^{2b-1}
        RationalSeries u0 = u0_series(b, order + 1);
        RationalSeries one = RationalSeries::constant(1, order);
        RationalSeries lhs = u0.derivative() * (one + u0.truncated(order)).pow(2 * b - 1);
        for (std::size_t j = 0; j <= order; ++j)
            ck.equal(to_string(beta_count(b, static_cast<long long>(j) + 3) / Rational(factorial(static_cast<long long>(j)))),
                     to_string(lhs[j]), "beta generating function " + bs + " coefficient " + std::to_string(j));
        // (1+U_0)^{2b} = 1 / (1 - (N_b - 1 - 2bz) - b(2z+z^2)/(1+z)^2)
        RationalSeries nb = angulation_series(b, order);
        RationalSeries z = RationalSeries::variable(order);
        RationalSeries w = (Rational(2) * z + z * z) * (one + z).pow(-2);
        RationalSeries rhs = (one - (nb - one - Rational(2 * b) * z) - Rational(b) * w).inverse();
        ck.check(rhs == (one + u0_series(b, order)).pow(2 * b), [&] { return "annular identity " + bs + ": " + rhs.to_string(); });
        for (long long n = 3; n <= static_cast<long long>(order) + 2; ++n)
            ck.equal(to_string(angulation_count_from_series(b, n, nb)), to_string(angulation_count(b, n)),
                     "angulation series coefficient " + bs + ",n=" + std::to_string(n));
    }
    return r;
}

inline const std::vector<std::string>& verify_scopes() {
    static const std::vector<std::string> s{"alpha", "words", "arrowtrees", "trees", "maps", "twoface", "budd", "angulations"};
    return s;
}

inline SuiteReport run_suite(const std::string& scope, const VerifyLimits& lim) {
    static const std::map<std::string, SuiteReport (*)(const VerifyLimits&)> table{
        {"alpha", verify_alpha},   {"words", verify_words},     {"arrowtrees", verify_arrowtrees},
        {"trees", verify_trees},   {"maps", verify_maps},       {"twoface", verify_twoface},
        {"budd", verify_budd},     {"angulations", verify_angulations}};
    auto it = table.find(scope);
    if (it == table.end()) throw std::invalid_argument("unknown verification scope '" + scope + "'");
    const auto start = std::chrono::steady_clock::now();
    SuiteReport rep;
    try {
        rep = it->second(lim);
    } catch (const std::exception& e) {
        rep.scope = scope;
        ++rep.failures;
        rep.first_failure = std::string("exception: ") + e.what();
    }
    rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rep;
}

// "all" or a single scope; suites run concurrently when jobs > 1, reports keep the fixed order
inline std::vector<SuiteReport> run_verify(const std::string& scope, const VerifyLimits& lim, unsigned jobs = 1) {
    std::vector<std::string> scopes = scope == "all" ? verify_scopes() : std::vector<std::string>{scope};
    for (const auto& s : scopes) {
        const auto& known = verify_scopes();
        if (std::find(known.begin(), known.end(), s) == known.end())
            throw std::invalid_argument("unknown verification scope '" + s + "'");
    }
    std::vector<SuiteReport> out;
    if (jobs <= 1) {
        for (const auto& s : scopes) out.push_back(run_suite(s, lim));
        return out;
    }
    std::vector<std::future<SuiteReport>> futures;
    for (const auto& s : scopes) futures.push_back(std::async(std::launch::async, run_suite, s, lim));
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

}  // namespace tightmaps
