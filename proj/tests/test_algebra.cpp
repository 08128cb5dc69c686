#include "tightmaps/algebra/multipoly.hpp"
#include "tightmaps/algebra/scalar.hpp"
#include "tightmaps/algebra/series.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace tightmaps;

namespace {

// naive Pascal triangle, for comparison with the falling-factorial binomial
Rational pascal(long long a, long long k) {
    std::vector<std::vector<long long>> t(static_cast<std::size_t>(a + 1));
    for (long long i = 0; i <= a; ++i) {
        t[i].assign(static_cast<std::size_t>(i + 1), 1);
        for (long long j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return k < 0 || k > a ? Rational(0) : Rational(t[a][k]);
}

}  // namespace

TEST(Scalar, RationalsStayExactAndPrintReduced) {
    Rational x = Rational(1) / 3 + Rational(1) / 6;
    EXPECT_EQ(to_string(x), "1/2");
    EXPECT_EQ(to_string(Rational(-4) / 2), "-2");
    EXPECT_TRUE(is_integer(Rational(10) / 5));
    EXPECT_THROW(to_integer(Rational(1) / 2), std::domain_error);
    EXPECT_THROW(ring_inverse(Rational(0)), std::domain_error);
}

TEST(Scalar, FactorialIsExactBeyondMachineWords) {
    EXPECT_EQ(to_string(factorial(0)), "1");
    EXPECT_EQ(to_string(factorial(25)), "15511210043330985984000000");
    EXPECT_THROW(factorial(-1), std::invalid_argument);
}

TEST(Scalar, BinomialMatchesPascalAndExtendsToNegativeTop) {
    for (long long a = 0; a <= 12; ++a)
        for (long long k = -1; k <= 14; ++k) EXPECT_EQ(binom_int(a, k), pascal(a, k)) << a << " " << k;
    // binom(-a, k) = (-1)^k binom(a+k-1, k)
    for (long long a = 1; a <= 6; ++a)
        for (long long k = 0; k <= 6; ++k) {
            Rational want = pascal(a + k - 1, k) * (k % 2 ? -1 : 1);
            EXPECT_EQ(binom_int(-a, k), want);
        }
}

TEST(MultiPoly, ArithmeticAndPrinting) {
    MultiPoly b = MultiPoly::b(), m1 = MultiPoly::m(1);
    MultiPoly p = (b + MultiPoly(1)) * (b - MultiPoly(1));
    EXPECT_EQ(p.to_string(), "b^2 - 1");
    EXPECT_EQ((m1 * b * MultiPoly(Rational(1) / 2)).to_string(), "1/2*b*m1");
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((p - p).to_string(), "0");
    EXPECT_EQ(p.total_degree(), 2);
    EXPECT_EQ(MultiPoly().total_degree(), -1);
    EXPECT_EQ((b.pow(3) * m1).degree(0), 3);
    EXPECT_THROW(MultiPoly::m(0), std::invalid_argument);
}

TEST(MultiPoly, EvaluateSubstituteRename) {
    MultiPoly b = MultiPoly::b(), m1 = MultiPoly::m(1), m2 = MultiPoly::m(2);
    MultiPoly p = b * m1 * m1 - m2 + MultiPoly(3);
    std::vector<Rational> at{2, 3, 5};
    EXPECT_EQ(p.evaluate(at), Rational(2 * 9 - 5 + 3));
    EXPECT_EQ(p.substitute(1, -m1), p);  // even in m1
    std::vector<std::size_t> swap{0, 2, 1};
    EXPECT_EQ(p.rename_variables(swap).to_string(), (b * m2 * m2 - m1 + MultiPoly(3)).to_string());
}

TEST(MultiPoly, RingLawsOnRandomPolynomials) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coef(-3, 3), expo(0, 2);
    auto random_poly = [&] {
        MultiPoly p;
        for (int t = 0; t < 4; ++t) {
            MultiPoly mono(coef(rng));
            for (std::size_t v = 0; v < 3; ++v) mono *= MultiPoly::variable(v).pow(static_cast<unsigned>(expo(rng)));
            p += mono;
        }
        return p;
    };
    for (int trial = 0; trial < 50; ++trial) {
        MultiPoly x = random_poly(), y = random_poly(), z = random_poly();
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * y, y * x);
        std::vector<Rational> pt{2, -1, 3};
        EXPECT_EQ((x * y).evaluate(pt), x.evaluate(pt) * y.evaluate(pt));
    }
}

TEST(MultiPoly, BinomPolyAgreesWithIntegerBinomial) {
    MultiPoly x = MultiPoly::b();
    for (long long k = 0; k <= 6; ++k)
        for (long long a = -3; a <= 8; ++a) {
            std::vector<Rational> at{Rational(a)};
            EXPECT_EQ(binom_poly(x, k).evaluate(at), binom_int(a, k));
            EXPECT_EQ(binom_poly(Rational(a), k), binom_int(a, k));
        }
}

TEST(Series, MultiplicationInverseAndPower) {
    const std::size_t N = 8;
    RationalSeries one = RationalSeries::constant(1, N), z = RationalSeries::variable(N);
    RationalSeries geo = (one - z).inverse();
    for (std::size_t i = 0; i <= N; ++i) EXPECT_EQ(geo[i], Rational(1));
    EXPECT_EQ(geo * (one - z), one);
    // (1+z)^-3 coefficients are binom(-3, i)
    RationalSeries p = (one + z).pow(-3);
    for (std::size_t i = 0; i <= N; ++i) EXPECT_EQ(p[i], binom_int(-3, static_cast<long long>(i)));
    EXPECT_THROW(z.inverse(), std::domain_error);
}

TEST(Series, ReversionOfUMinusUSquaredGivesCatalan) {
    const std::size_t N = 10;
    RationalSeries u = RationalSeries::variable(N);
    RationalSeries h = u - u * u;
    RationalSeries r = h.reversion();
    // Catalan numbers from the recurrence C_{n+1} = sum C_i C_{n-i}
    std::vector<Rational> cat{1};
    for (std::size_t n = 0; n + 1 < N; ++n) {
        Rational s = 0;
        for (std::size_t i = 0; i <= n; ++i) s += cat[i] * cat[n - i];
        cat.push_back(s);
    }
    for (std::size_t n = 1; n <= N; ++n) EXPECT_EQ(r[n], cat[n - 1]) << n;
    EXPECT_EQ(h.compose(r), u);
    EXPECT_EQ(r.compose(h), u);
}

TEST(Series, DerivativeAndIntegralAreInverse) {
    const std::size_t N = 6;
    RationalSeries one = RationalSeries::constant(1, N), z = RationalSeries::variable(N);
    RationalSeries f = (one - Rational(2) * z).inverse();
    RationalSeries g = f.integral().derivative();
    EXPECT_EQ(g, f);
    EXPECT_EQ(f.integral()[0], Rational(0));
}

TEST(Series, WorksOverPolynomials) {
    const std::size_t N = 5;
    PolySeries one = PolySeries::constant(MultiPoly(1), N);
    PolySeries z = PolySeries::variable(N);
    MultiPoly b = MultiPoly::b();
    PolySeries s = (one - b * z).inverse();
    for (std::size_t i = 0; i <= N; ++i) EXPECT_EQ(s[i], b.pow(static_cast<unsigned>(i)));
}
