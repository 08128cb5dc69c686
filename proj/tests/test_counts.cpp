#include "tightmaps/counts/alpha.hpp"
#include "tightmaps/counts/budd.hpp"
#include "tightmaps/counts/formulas.hpp"
#include "tightmaps/counts/univariate.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace tightmaps;

namespace {

Rational R(long long x) { return Rational(x); }

Rational catalan(long long n) { return binom_int(2 * n, n) / Rational(n + 1); }

std::vector<MultiPoly> symbols(std::size_t n) {
    std::vector<MultiPoly> v;
    for (std::size_t i = 1; i <= n; ++i) v.push_back(MultiPoly::m(i));
    return v;
}

}  // namespace

// ---- univariate polynomials ----

TEST(Univariate, PMatchesBinomialForm) {
    EXPECT_EQ(p_univ(2, 0, 5), R(1));
    EXPECT_EQ(p_univ(2, 1, 4), R(16 - 9));
    for (long long b = 0; b <= 4; ++b) {
        EXPECT_EQ(p_univ(b, 1, b + 1), R(0));
        for (long long m = b + 1; m <= 9; ++m)
            for (long long k = 0; k <= 6; ++k)
                EXPECT_EQ(p_univ(b, k, m), binom_int(m - b - 1, k) * binom_int(m + b + k, k)) << b << k << m;
    }
}

TEST(Univariate, QMatchesBinomialForm) {
    EXPECT_EQ(q_univ(1, 1, 2), R(4 - 1));
    EXPECT_EQ(q_univ(2, 1, 2), R(0));
    EXPECT_EQ(q_univ(0, 2, 3), R(9 * 8) / 4);
    for (long long b = 0; b <= 4; ++b)
        for (long long m = b; m <= 9; ++m)
            for (long long k = 0; k <= 6; ++k) {
                EXPECT_EQ(q_univ(b, k, m), binom_int(m + b, k) * binom_int(m - b - 1 + k, k)) << b << k << m;
                if (m == b) {
                    EXPECT_EQ(q_univ(b, k, m), R(k == 0));
                }
            }
}

TEST(Univariate, RPolynomialValues) {
    EXPECT_EQ(r_poly(2, 1), R(1));
    EXPECT_EQ(r_poly(1, 1), R(0));
    // (1/3) binom(3,3) binom(3,2) = 1
    EXPECT_EQ(r_poly(3, 2), binom_int(3, 3) * binom_int(3, 2) / 3);
    for (long long l = 1; l <= 5; ++l) {
        EXPECT_EQ(r_poly(0, l), R(0));
        EXPECT_EQ(r_poly(1, l), R(0));
        // degree 2l in b
        EXPECT_EQ(r_poly(MultiPoly::b(), l).degree(0), static_cast<int>(2 * l));
    }
    EXPECT_THROW(r_poly(2, 0), std::invalid_argument);
}

TEST(Univariate, HSeriesBothFormsAgree) {
    EXPECT_EQ(h_series(1, 4).to_string(), "[0, 1, 0, 0, 0]");
    EXPECT_EQ(h_series(2, 4).to_string(), "[0, 1, -1, 0, 0]");
    for (long long b = 1; b <= 6; ++b) {
        EXPECT_EQ(h_series(b, 8)[1], R(1));
        EXPECT_EQ(h_series(b, 8), h_series_generic(Rational(b), 8)) << b;
    }
    EXPECT_THROW(h_series(0, 3), std::invalid_argument);
}

TEST(Univariate, U0IsCatalanForBEqualTwo) {
    auto u0 = u0_series(2, 8);
    for (std::size_t n = 1; n <= 8; ++n) EXPECT_EQ(u0[n], catalan(static_cast<long long>(n) - 1));
}

// ---- alpha ----

TEST(Alpha, Examples) {
    for (long long b = 0; b <= 5; ++b)
        for (long long n = 0; n <= 5; ++n) EXPECT_EQ(alpha(b, n, n), R(1));
    EXPECT_EQ(alpha(2, 0, 1), R(2));
    EXPECT_EQ(alpha(2, 0, 2), 3 * catalan(2));
    EXPECT_THROW(alpha(2, -1, 2), std::invalid_argument);
    EXPECT_THROW(alpha(2, 0, -1), std::invalid_argument);
}

TEST(Alpha, ThreeMethodsAgree) {
    for (long long b = 2; b <= 6; ++b)
        for (long long n = 0; n <= 8; ++n)
            for (long long k = 0; k <= n + 1; ++k) {
                Rational ps = alpha(b, k, n, AlphaMethod::PolySum);
                EXPECT_EQ(alpha(b, k, n, AlphaMethod::Lagrange), ps) << b << " " << k << " " << n;
                EXPECT_EQ(alpha(b, k, n, AlphaMethod::Recurrence), ps) << b << " " << k << " " << n;
                if (k > n) {
                    EXPECT_EQ(ps, R(0));
                }
            }
}

TEST(Alpha, SmallBIsKroneckerDelta) {
    for (long long b = 0; b <= 1; ++b)
        for (long long n = 0; n <= 8; ++n)
            for (long long k = 0; k <= n; ++k) {
                EXPECT_EQ(alpha(b, k, n, AlphaMethod::PolySum), R(k == n));
                EXPECT_EQ(alpha(b, k, n, AlphaMethod::Lagrange), R(k == n));
            }
}

TEST(Alpha, SymbolicDegreeAndEvaluation) {
    for (long long n = 0; n <= 6; ++n)
        for (long long k = 0; k <= n; ++k) {
            MultiPoly a = alpha_symbolic(k, n);
            EXPECT_EQ(a.degree(0), static_cast<int>(2 * (n - k)));
            for (long long b = 0; b <= 5; ++b) {
                std::vector<Rational> at{R(b)};
                EXPECT_EQ(a.evaluate(at), alpha(b, k, n));
            }
        }
}

TEST(Alpha, NMinusThreeSpecialAtBThree) {
    // closed form for alpha_{n-3,n} at b = 3, n = 3
    Rational b = 3, N = 3;
    Rational inner = (3 * N * N + 9 * N + 7) / 12 * b * b * b - (3 * N * N - 3 * N - 11) / 12 * b * b - (3 * N + 2) / 3 * b - 1;
    Rational want = (N + 1) / 12 * inner * b * (b - 1) * (b - 1);
    for (auto m : {AlphaMethod::Lagrange, AlphaMethod::PolySum, AlphaMethod::Recurrence}) EXPECT_EQ(alpha(3, 0, 3, m), want);
}

TEST(ArrowTrees, UCountValues) {
    EXPECT_EQ(u_count(3, 2, 2), Integer(2));
    EXPECT_EQ(u_count(3, 2, 1), Integer(1));
    const long long b = 3, p = 0;
    EXPECT_EQ(Rational(u_count(b, p, 2)), Rational(b * (b - 1) / 2 - p * (p - 1) / 2));
    for (long long bb = 2; bb <= 5; ++bb)
        for (long long pp = 0; pp < bb; ++pp) EXPECT_EQ(u_count(bb, pp, 1), Integer(1));
    EXPECT_THROW(u_count(3, 3, 1), std::invalid_argument);
}

TEST(ArrowTrees, SingleTreeForgetsAttachingPoint) {
    for (long long b = 2; b <= 5; ++b)
        for (long long n = 1; n <= 7; ++n) EXPECT_EQ(Rational(u_count(b, 0, n)), alpha(b, 0, n - 1) / n) << b << " " << n;
}

// ---- F, two-face, fixed cycle ----

TEST(Formulas, FCountExamples) {
    EXPECT_EQ(f_count(1, 0, {1}), R(1));
    EXPECT_EQ(f_count(2, 0, {2, 2}), alpha(2, 0, 1));
    EXPECT_EQ(f_count(2, 0, {2, 2}), R(2));
    for (long long k = 2; k <= 5; ++k) EXPECT_EQ(f_count(2, k, {2, 2}), R(0));
    EXPECT_THROW(f_count(2, 0, {1, 2}), RangeError);
}

TEST(Formulas, TwoFaceCountExamples) {
    for (long long c = 0; c <= 3; ++c)
        for (long long m1 = 1; m1 <= 5; ++m1)
            for (long long m2 = 1; m2 <= 5; ++m2) EXPECT_EQ(two_face_count(c, 0, m1, m2), R(1));
    for (long long b = 0; b <= 3; ++b)
        for (long long k = 0; k <= 4; ++k)
            for (long long m2 = b + 1; m2 <= 6; ++m2) EXPECT_EQ(two_face_count(b, k, b + 1, m2), q_univ(b, k, m2));
    EXPECT_EQ(two_face_count(0, 1, 1, 1), R(1));
}

TEST(Formulas, TwoFaceCountSymmetricSymbolically) {
    MultiPoly c = MultiPoly::b(), m1 = MultiPoly::m(1), m2 = MultiPoly::m(2);
    for (long long k = 0; k <= 4; ++k) EXPECT_EQ(two_face_count_generic(c, k, m1, m2), two_face_count_generic(c, k, m2, m1)) << k;
}

TEST(Formulas, FixedCycleCountSumsToTwoFaceCount) {
    for (long long c = 0; c <= 3; ++c)
        for (long long k = 0; k <= 4; ++k)
            for (long long m1 = c + 1; m1 <= 8; ++m1)
                for (long long m2 = c + 1; m2 <= 8; ++m2) {
                    Rational s = 0;
                    for (long long d = c + 1; d <= std::max(m1, m2); ++d) s += fixed_cycle_count(d, k, m1, m2);
                    EXPECT_EQ(s, two_face_count(c, k, m1, m2)) << c << k << m1 << m2;
                }
}

TEST(Formulas, FixedCycleRawFormulaOutsideRange) {
    // at m1 = m2 = d = 1 the printed expression gives 2; the only such map is a single loop
    EXPECT_EQ(fixed_cycle_count_raw(1, 0, 1, 1), R(2));
    EXPECT_EQ(fixed_cycle_count(1, 0, 1, 1), R(1));
    EXPECT_EQ(fixed_cycle_count(1, 0, 1, 1), two_face_count(0, 0, 1, 1));
    // inside the range the two agree, including the delta_{m2,d} term
    for (long long d = 1; d <= 4; ++d)
        for (long long k = 0; k <= 3; ++k)
            for (long long m1 = d + 1; m1 <= 6; ++m1) {
                EXPECT_EQ(fixed_cycle_count(d, k, m1, d), fixed_cycle_count_raw(d, k, m1, d));
                for (long long m2 = d; m2 <= 6; ++m2) EXPECT_EQ(fixed_cycle_count(d, k, m1, m2), fixed_cycle_count_raw(d, k, m1, m2));
            }
}

// ---- the theorem ----

TEST(NCount, Examples) {
    EXPECT_EQ(n_count(2, {3, 2, 2}), R(1));
    EXPECT_EQ(n_count(2, {2, 2, 2, 2}), R(0));
    EXPECT_EQ(n_count(1, {2, 1, 1}), R(1));
    // hexagon dissections: (2(n-3))!/(n-3)!
    for (long long n = 3; n <= 7; ++n) {
        std::vector<long long> ms(static_cast<std::size_t>(n), 2);
        ms[0] = 3;
        EXPECT_EQ(n_count(2, ms), Rational(factorial(2 * (n - 3))) / Rational(factorial(n - 3))) << n;
    }
    EXPECT_EQ(n_count(2, {3, 2, 2, 2, 2}), R(12));
}

TEST(NCount, RangeErrors) {
    EXPECT_THROW(n_count(2, {3, 3}), RangeError);
    EXPECT_THROW(n_count(2, {3, 2, 1}), RangeError);
    EXPECT_THROW(n_count(0, {3, 2, 2}), RangeError);
    try {
        n_count(2, {3, 3});
    } catch (const RangeError& e) {
        EXPECT_NE(std::string(e.what()).find("outside theorem range"), std::string::npos);
    }
}

TEST(NCount, SymmetricUnderPermutations) {
    std::vector<long long> ms{4, 3, 2, 2, 5};
    Rational want = n_count(2, ms);
    std::sort(ms.begin(), ms.end());
    do EXPECT_EQ(n_count(2, ms), want);
    while (std::next_permutation(ms.begin(), ms.end()));
}

TEST(NCount, SymbolicMatchesNumeric) {
    for (std::size_t n = 3; n <= 5; ++n) {
        MultiPoly p = n_count_symbolic(n);
        for (long long b = 1; b <= 3; ++b) {
            std::vector<long long> ms(n, b);
            ms[0] = b + 2;
            if (n > 3) ms[1] = b + 1;
            std::vector<Rational> at{R(b)};
            for (auto m : ms) at.push_back(R(m));
            EXPECT_EQ(p.evaluate(at), n_count(b, ms));
        }
    }
}

TEST(NCount, SymbolicDegreeSymmetryParity) {
    for (std::size_t n = 3; n <= 4; ++n) {
        MultiPoly p = n_count_symbolic(n);
        EXPECT_EQ(p.total_degree(), static_cast<int>(2 * n - 6));
        std::vector<std::size_t> perm(n + 1);
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin() + 1, perm.end())) EXPECT_EQ(p.rename_variables(perm), p);
        for (std::size_t i = 1; i <= n; ++i) EXPECT_EQ(p.substitute(i, -MultiPoly::m(i)), p);
    }
}

TEST(NCount, SliceIdentity) {
    for (long long b = 1; b <= 3; ++b)
        for (std::vector<long long> ms : {std::vector<long long>{b}, {b + 1}, {b, b}, {b + 2, b}, {b, b + 1, b}, {b + 1, b + 1}}) {
            std::vector<long long> full{b + 1, b};
            full.insert(full.end(), ms.begin(), ms.end());
            EXPECT_EQ(n_count(b, full), f_count(b, 0, ms));
        }
}

TEST(NCount, EssentialEqualsPlainWhenCIsB) {
    for (long long b = 1; b <= 3; ++b)
        for (std::vector<long long> ms : {std::vector<long long>{b + 1, b + 1, b}, {b + 2, b + 1, b, b}, {b + 1, b + 3, b + 1}})
            EXPECT_EQ(n_essential(b, b, ms), n_count(b, ms));
    EXPECT_THROW(n_essential(1, 2, {2, 2, 1}), RangeError);
    // c = b - 1 with all faces 2b gives beta
    for (long long b = 2; b <= 3; ++b)
        for (long long n = 3; n <= 6; ++n) EXPECT_EQ(n_essential(b, b - 1, std::vector<long long>(static_cast<std::size_t>(n), b)), beta_count(b, n));
}

// ---- angulations ----

TEST(Angulations, Examples) {
    EXPECT_EQ(beta_count(2, 3), R(1));
    EXPECT_EQ(angulation_count(2, 3), R(1));
    EXPECT_EQ(angulation_count(2, 4), R(0));
    EXPECT_EQ(n_count(2, {2, 2, 2}), angulation_count(2, 3));
}

TEST(Angulations, SeriesReproducesFormula) {
    for (long long b = 1; b <= 4; ++b) {
        auto nb = angulation_series(b, 8);
        for (long long n = 3; n <= 10; ++n) EXPECT_EQ(angulation_count_from_series(b, n, nb), angulation_count(b, n)) << b << " " << n;
    }
}

// ---- the integral form ----

TEST(Budd, ResidualVanishes) {
    EXPECT_TRUE(budd_identity_residual(1, {1, 1, 1}, 4).is_zero());
    EXPECT_TRUE(budd_identity_residual(2, {2, 3}, 6).is_zero());
    for (long long b = 1; b <= 3; ++b) EXPECT_TRUE(budd_identity_residual(b, {b + 1, b, b + 2, b}, 8).is_zero());
}

TEST(Budd, ResidualVanishesSymbolically) {
    // m_i symbolic, b fixed
    for (long long b = 1; b <= 2; ++b) EXPECT_TRUE(budd_identity_residual(b, symbols(3), 5).is_zero());
}

TEST(Budd, CoefficientGivesNCount) {
    EXPECT_EQ(n_count_from_budd(2, {3, 2, 2, 2}), n_count(2, {3, 2, 2, 2}));
    EXPECT_EQ(n_count_from_budd(1, {3, 1, 2}), n_count(1, {3, 1, 2}));
}

TEST(Budd, TransformsAreInverse) {
    const std::size_t K = 6;
    MultiPoly b = MultiPoly::b();
    auto prod = matrix_product(pktoqkc_matrix(b, K), qktopkc_matrix(b, K));
    for (std::size_t i = 0; i <= K; ++i)
        for (std::size_t j = 0; j <= K; ++j) EXPECT_EQ(prod[i][j], MultiPoly(i == j ? 1 : 0));
    // q_k = sum_i binom(2b+1, i) p_{k-i}
    for (long long bb = 0; bb <= 3; ++bb)
        for (long long m = bb + 1; m <= 6; ++m) {
            std::vector<Rational> p;
            for (std::size_t k = 0; k <= K; ++k) p.push_back(p_univ(bb, static_cast<long long>(k), m));
            auto q = apply_matrix(qktopkc_matrix(Rational(bb), K), p);
            for (std::size_t k = 0; k <= K; ++k) EXPECT_EQ(q[k], q_univ(bb, static_cast<long long>(k), m));
        }
}
