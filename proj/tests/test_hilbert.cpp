#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"

using namespace bgb;

namespace {

// HS_{a,b} = dim R_{a,b} - dim I_{a,b}, every entry by naive rank.
BiSeries oracle_hs(const PolySystem& F, int nx, int ny, int T1, int T2) {
    std::vector<oracle::Poly> OF;
    for (auto& f : F.polys) OF.push_back(oracle::from(f));
    BiSeries r(T1, T2);
    for (int a = 0; a <= T1; ++a)
        for (int b = 0; b <= T2; ++b)
            r.c[a][b] = oracle::binom(a + nx, a) * oracle::binom(b + ny, b) - oracle::ideal_dim(OF, nx, ny, a, b, 65521);
    return r;
}

// Monomials of degree d in x_0..x_nx divisible by some degree-(ny+1) monomial in x_0..x_a,
// i.e. those whose exponents on x_0..x_a sum to at least ny+1.
oracle::i64 brute_g(int nx, int ny, int i, int d) {
    int a = i - ny - 2;
    if (a < 0) return 0;
    std::vector<int> v(nx + 1);
    for (int k = 0; k <= nx; ++k) v[k] = k;
    oracle::i64 n = 0;
    for (auto& e : oracle::monomials(nx + 1, v, d)) {
        int s = 0;
        for (int k = 0; k <= a; ++k) s += e[k];
        n += s >= ny + 1;
    }
    return n;
}

// Cost ratio recomputed from the recurrence series in long double.
long double ratio_from_recurrence(int nx, int ny, int m, int D) {
    BiSeries H = hs_recurrence(nx, ny, m, D, D);
    long double tot = static_cast<long double>(oracle::binom(D + nx + ny + 1, D));
    long double h = 0;
    for (int a = 0; a <= D; ++a) h += H.at(a, D - a);
    long double num = (tot - h) * (tot - h) * tot, den = 0;
    for (int d1 = 1; d1 < D; ++d1) {
        long double dim = static_cast<long double>(oracle::binom(d1 + nx, d1) * oracle::binom(D - d1 + ny, D - d1));
        long double r = dim - H.at(d1, D - d1);
        den += r * r * dim;
    }
    return num / den;
}

}  // namespace

TEST(Hilbert, ThreeWaysAgreeOnFullGrid) {
    for (int nx = 1; nx <= 4; ++nx)
        for (int ny = 1; ny <= 4; ++ny)
            for (int m = 0; m <= nx + ny; ++m) {
                auto c = hs_closed_form(nx, ny, m, 6, 6);
                EXPECT_EQ(c, hs_recurrence(nx, ny, m, 6, 6)) << nx << ny << m;
                if (nx + ny <= 5) {
                    EXPECT_EQ(c, hs_direct(random_bilinear(nx, ny, m, 1), 6, 6)) << nx << ny << m;
                }
            }
}

TEST(Hilbert, MatchesNaiveMacaulayRanks) {
    for (auto [nx, ny, m] : std::vector<std::tuple<int, int, int>>{{1, 1, 2}, {1, 2, 3}, {2, 2, 3}, {2, 2, 4}, {1, 3, 4}}) {
        auto F = random_bilinear(nx, ny, m, 12);
        auto want = oracle_hs(F, nx, ny, 4, 4);
        EXPECT_EQ(hs_closed_form(nx, ny, m, 4, 4), want) << nx << ny << m;
        EXPECT_EQ(hs_direct_macaulay(F, 4, 4), want) << nx << ny << m;
    }
}

TEST(Hilbert, ZeroIdealAndSymmetry) {
    EXPECT_EQ(hs_closed_form(2, 3, 0, 5, 5), hs_zero_ideal(2, 3, 5, 5));
    for (int nx = 1; nx <= 4; ++nx)
        for (int ny = 1; ny <= 4; ++ny)
            for (int m = 0; m <= nx + ny; ++m) {
                auto a = hs_closed_form(nx, ny, m, 6, 6), b = hs_closed_form(ny, nx, m, 6, 6);
                for (int i = 0; i <= 6; ++i)
                    for (int j = 0; j <= 6; ++j) EXPECT_EQ(a.at(i, j), b.at(j, i));
                // each new generator can only shrink the quotient
                if (m > 0) {
                    EXPECT_TRUE(hs_closed_form(nx, ny, m - 1, 6, 6).dominates(a));
                }
                for (int i = 0; i <= 6; ++i)
                    for (int j = 0; j <= 6; ++j) EXPECT_GE(a.at(i, j), 0);
            }
}

TEST(Hilbert, MaximalSystemCountsBiprojectivePoints) {
    // m = nx+ny cuts out binom(nx+ny, nx) points of P^nx x P^ny; the bi-series settles there.
    for (auto [nx, ny] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}, {2, 3}, {3, 3}}) {
        auto H = hs_closed_form(nx, ny, nx + ny, 7, 7);
        for (int a = nx + 1; a <= 7; ++a)
            for (int b = ny + 1; b <= 7; ++b) EXPECT_EQ(H.at(a, b), oracle::binom(nx + ny, nx)) << nx << ny << " " << a << "," << b;
    }
}

TEST(Hilbert, GSeriesMatchesBruteForce) {
    for (int nx = 1; nx <= 4; ++nx)
        for (int ny = 1; ny <= 4; ++ny)
            for (int i = 2; i <= nx + ny + 1; ++i) {
                if (i - ny - 2 > nx) continue;
                auto g = g_combinatorial(nx, ny, i, 8);
                for (int d = 0; d <= 8; ++d) EXPECT_EQ(g[d], brute_g(nx, ny, i, d)) << nx << ny << i << " d=" << d;
            }
}

TEST(Hilbert, PrintedGSeriesBoundaryConvention) {
    // The closed form agrees with the count except at i = ny+1, where binom(-1, 0) decides.
    for (int nx = 1; nx <= 4; ++nx)
        for (int ny = 1; ny <= 4; ++ny)
            for (int i = 2; i <= nx + ny + 1; ++i) {
                if (i - ny - 2 > nx) continue;
                auto g = g_combinatorial(nx, ny, i, 8);
                auto zero_conv = g_printed(nx, ny, i, 8, false);
                auto one_conv = g_printed(nx, ny, i, 8, true);
                EXPECT_EQ(one_conv, g) << nx << ny << i;
                if (i == ny + 1) {
                    EXPECT_NE(zero_conv, g) << nx << ny << i;
                } else {
                    EXPECT_EQ(zero_conv, g) << nx << ny << i;
                }
            }
    auto rep = g_series(2, 2, 3, 6);
    EXPECT_FALSE(rep.agrees);
    EXPECT_FALSE(rep.note.empty());
    EXPECT_TRUE(g_series(2, 2, 4, 6).agrees);
}

TEST(Hilbert, UnivariateSpecialisation) {
    auto H = hs_closed_form(2, 2, 4, 6, 6);
    auto u = univariate_hs(H);
    ASSERT_EQ(u.size(), 7u);
    // degree-d quotient dimension of the same ideal viewed as singly graded
    auto F = random_bilinear(2, 2, 4, 3);
    std::vector<oracle::Poly> OF;
    for (auto& f : F.polys) OF.push_back(oracle::from(f));
    for (int d = 0; d <= 6; ++d) EXPECT_EQ(u[d], oracle::binom(d + 5, 5) - oracle::ideal_dim_total(OF, 6, d, 65521)) << d;
}

TEST(Hilbert, CostModelMatchesIndependentRecomputation) {
    struct Row {
        int nx, ny, m, D;
        double expect;
    };
    // DERIVED from the displayed cost expressions (recomputed below from the recurrence series).
    for (auto r : std::vector<Row>{{3, 4, 7, 6, 22.09}, {3, 4, 7, 7, 29.06}, {4, 4, 8, 7, 29.03}, {5, 4, 9, 7, 27.63}, {5, 5, 10, 6, 20.94}}) {
        auto F = speedup_factor(r.nx, r.ny, r.m, r.D);
        long double ind = ratio_from_recurrence(r.nx, r.ny, r.m, r.D);
        EXPECT_NEAR(F.value(), static_cast<double>(ind), 1e-9);
        EXPECT_NEAR(F.value(), r.expect, 0.005);
        EXPECT_EQ(F.rounded(), static_cast<std::uint64_t>(std::llround(static_cast<double>(ind))));
    }
}

TEST(Hilbert, CostModelParts) {
    auto c = cost_model(2, 2, 4, 5);
    EXPECT_EQ(c.cols_hom, static_cast<std::uint64_t>(oracle::binom(10, 5)));
    auto H = hs_recurrence(2, 2, 4, 5, 5);
    std::int64_t h = 0;
    for (int a = 0; a <= 5; ++a) h += H.at(a, 5 - a);
    EXPECT_EQ(c.rank_hom, static_cast<std::uint64_t>(oracle::binom(10, 5) - h));
    EXPECT_EQ(u128_to_string(c.t_hom), std::to_string(static_cast<unsigned long long>(c.rank_hom * c.rank_hom * c.cols_hom)));
    EXPECT_THROW(cost_model(2, 2, 5, 5), std::invalid_argument);
    EXPECT_THROW(cost_model(2, 2, 4, 1), std::invalid_argument);
}

TEST(Hilbert, RationalHelpers) {
    auto r = make_rational(84, 36);
    EXPECT_EQ(r.num, 7u);
    EXPECT_EQ(r.den, 3u);
    EXPECT_EQ(r.rounded(), 2u);
    EXPECT_EQ(r.to_string(), "7/3");
    EXPECT_EQ(make_rational(5, 2).rounded(), 3u);  // halves round up
    unsigned __int128 big = static_cast<unsigned __int128>(UINT64_MAX) * 10;
    EXPECT_EQ(u128_to_string(big), "184467440737095516150");
}
