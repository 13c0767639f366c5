#include <gtest/gtest.h>

#include <cstdlib>
#include <random>

#include "oracles.hpp"

using namespace bgb;

TEST(Field, ArithmeticMatchesNaiveModular) {
    for (std::uint32_t p : {3u, 101u, 65521u, 2147483647u}) {
        PrimeField F(p);
        std::mt19937_64 g(p);
        for (int k = 0; k < 2000; ++k) {
            Scalar a = static_cast<Scalar>(g() % p), b = static_cast<Scalar>(g() % p);
            EXPECT_EQ(F.add(a, b), oracle::mod(static_cast<oracle::i64>(a) + b, p));
            EXPECT_EQ(F.sub(a, b), oracle::mod(static_cast<oracle::i64>(a) - b, p));
            EXPECT_EQ(F.mul(a, b), static_cast<Scalar>((static_cast<unsigned __int128>(a) * b) % p));
            EXPECT_EQ(F.neg(a), oracle::mod(-static_cast<oracle::i64>(a), p));
            if (a) {
                EXPECT_EQ(F.inv(a), oracle::inverse(a, p));
            }
        }
    }
}

TEST(Field, InverseExhaustiveSmallPrime) {
    PrimeField F(101);
    for (Scalar a = 1; a < 101; ++a) {
        int hits = 0;
        for (Scalar b = 1; b < 101; ++b)
            if (a * b % 101 == 1) {
                EXPECT_EQ(F.inv(a), b);
                ++hits;
            }
        EXPECT_EQ(hits, 1);
    }
    EXPECT_THROW(F.inv(0), std::domain_error);
}

TEST(Field, PowAndFermat) {
    PrimeField F(65521);
    std::mt19937_64 g(7);
    for (int k = 0; k < 200; ++k) {
        Scalar a = static_cast<Scalar>(1 + g() % 65520);
        std::uint64_t e = g() % 50;
        EXPECT_EQ(F.pow(a, e), oracle::powmod(a, static_cast<oracle::i64>(e), 65521));
        EXPECT_EQ(F.pow(a, 65520), 1u);
    }
}

TEST(Field, RejectsBadCharacteristic) {
    EXPECT_THROW(PrimeField(2), std::invalid_argument);
    EXPECT_THROW(PrimeField(65520), std::invalid_argument);
    EXPECT_THROW(PrimeField(9), std::invalid_argument);
    EXPECT_THROW(PrimeField(1u << 31), std::invalid_argument);
    for (std::uint64_t n = 0; n < 3000; ++n) EXPECT_EQ(is_prime(n), oracle::trial_prime(n)) << n;
}

TEST(Field, SignedRepresentative) {
    PrimeField F(7);
    EXPECT_EQ(F.signed_value(3), 3);
    EXPECT_EQ(F.signed_value(4), -3);
    EXPECT_EQ(F.signed_value(6), -1);
}

TEST(Field, EnvironmentDefault) {
    unsetenv("BGB_PRIME");
    EXPECT_EQ(default_prime_from_env(), kDefaultPrime);
    setenv("BGB_PRIME", "32003", 1);
    EXPECT_EQ(default_prime_from_env(), 32003u);
    setenv("BGB_PRIME", "12ab", 1);
    EXPECT_THROW(default_prime_from_env(), std::invalid_argument);
    unsetenv("BGB_PRIME");
}

// ---------------------------------------------------------------- monomials

namespace {
Monomial random_monomial(const VariableLayout& L, std::mt19937_64& g, int maxe) {
    std::vector<int> e(L.nvars());
    for (auto& v : e) v = static_cast<int>(g() % (maxe + 1));
    return Monomial::from_exponents(L, e);
}
}  // namespace

TEST(Monomial, GrevlexMatchesTextbookDefinition) {
    auto L = VariableLayout::bihomogeneous(2, 3);
    std::mt19937_64 g(1);
    for (int k = 0; k < 5000; ++k) {
        Monomial a = random_monomial(L, g, 2), b = random_monomial(L, g, 2);
        EXPECT_EQ(grevlex_cmp(a, b), oracle::grevlex(oracle::exps(a), oracle::exps(b)));
    }
}

TEST(Monomial, GrevlexVariableOrderAndExamples) {
    auto L = VariableLayout::bihomogeneous(2, 2);
    // x0 > x1 > x2 > y0 > y1 > y2
    for (int v = 0; v + 1 < L.nvars(); ++v)
        EXPECT_GT(grevlex_cmp(Monomial::variable(L, v), Monomial::variable(L, v + 1)), 0);
    auto x = [&](int j) { return Monomial::variable(L, L.x_index(j)); };
    auto y = [&](int j) { return Monomial::variable(L, L.y_index(j)); };
    // x1^2 > x0*x2 in grevlex (the classic difference from lex)
    EXPECT_GT(grevlex_cmp(x(1) * x(1), x(0) * x(2)), 0);
    EXPECT_GT(grevlex_cmp(x(0) * y(2), x(1) * y(2)), 0);
    EXPECT_GT(grevlex_cmp(x(2) * y(1), x(0) * y(2)), 0);
}

TEST(Monomial, OrderIsMultiplicativeAndTotal) {
    auto L = VariableLayout::bihomogeneous(3, 2);
    std::mt19937_64 g(2);
    for (OrderKind o : {OrderKind::Grevlex, OrderKind::EliminateX, OrderKind::EliminateY}) {
        for (int k = 0; k < 2000; ++k) {
            Monomial a = random_monomial(L, g, 2), b = random_monomial(L, g, 2), c = random_monomial(L, g, 2);
            int ab = monomial_cmp(o, a, b);
            EXPECT_EQ(ab, -monomial_cmp(o, b, a));
            EXPECT_EQ(ab == 0, a == b);
            EXPECT_EQ(monomial_cmp(o, a * c, b * c), ab);
            if (monomial_cmp(o, a, b) > 0 && monomial_cmp(o, b, c) > 0) {
                EXPECT_GT(monomial_cmp(o, a, c), 0);
            }
            EXPECT_GE(monomial_cmp(o, a * c, a), 0);
        }
    }
}

TEST(Monomial, BlockOrdersEliminate) {
    auto L = VariableLayout::affine(2, 2);
    std::mt19937_64 g(3);
    for (int k = 0; k < 2000; ++k) {
        Monomial a = random_monomial(L, g, 3), b = random_monomial(L, g, 3);
        // any monomial with positive x-degree beats a pure-y one under x >> y
        if (a.degree_x() > 0 && b.degree_x() == 0) {
            EXPECT_GT(monomial_cmp(OrderKind::EliminateX, a, b), 0);
        }
        if (a.degree_y() > 0 && b.degree_y() == 0) {
            EXPECT_GT(monomial_cmp(OrderKind::EliminateY, a, b), 0);
        }
    }
}

TEST(Monomial, DivisibilityLcmQuotient) {
    auto L = VariableLayout::bihomogeneous(2, 2);
    std::mt19937_64 g(4);
    for (int k = 0; k < 2000; ++k) {
        Monomial a = random_monomial(L, g, 3), b = random_monomial(L, g, 3);
        auto ea = oracle::exps(a), eb = oracle::exps(b);
        bool div = true;
        for (std::size_t v = 0; v < ea.size(); ++v) div = div && ea[v] <= eb[v];
        EXPECT_EQ(a.divides(b), div);
        Monomial l = a.lcm(b);
        for (int v = 0; v < L.nvars(); ++v) EXPECT_EQ(l[v], std::max(a[v], b[v]));
        EXPECT_TRUE(a.divides(l));
        EXPECT_TRUE(b.divides(l));
        EXPECT_EQ(a.quotient_of(l) * a, l);
        bool cop = true;
        for (int v = 0; v < L.nvars(); ++v) cop = cop && !(a[v] && b[v]);
        EXPECT_EQ(a.coprime(b), cop);
        EXPECT_EQ(a.degree(), a.degree_x() + a.degree_y());
    }
}

TEST(Monomial, LastVariable) {
    auto L = VariableLayout::bihomogeneous(2, 2);
    EXPECT_EQ(Monomial(L).last_var(), -1);
    EXPECT_EQ((Monomial::variable(L, 0) * Monomial::variable(L, 4)).last_var(), 4);
    EXPECT_EQ(Monomial::variable(L, 2).last_var(), 2);
}

TEST(Monomial, LayoutMismatchRejected) {
    Monomial a(VariableLayout::bihomogeneous(1, 1)), b(VariableLayout::bihomogeneous(2, 1));
    EXPECT_THROW(a * b, std::invalid_argument);
    EXPECT_THROW(grevlex_cmp(a, b), std::invalid_argument);
}

TEST(Monomial, EnumerationCounts) {
    for (int nx = 1; nx <= 3; ++nx)
        for (int ny = 1; ny <= 3; ++ny) {
            auto L = VariableLayout::bihomogeneous(nx, ny);
            for (int d = 0; d <= 4; ++d) {
                auto all = enumerate_monomials(L, Block::All, 0, d);
                EXPECT_EQ(static_cast<oracle::i64>(all.size()), oracle::binom(d + nx + ny + 1, d));
                for (std::size_t k = 1; k < all.size(); ++k) EXPECT_GT(grevlex_cmp(all[k - 1], all[k]), 0);
                for (int j = 0; j <= nx; ++j)
                    EXPECT_EQ(static_cast<oracle::i64>(enumerate_monomials(L, Block::X, j, d).size()), oracle::binom(d + j, d));
                for (int a = 0; a <= d; ++a) {
                    auto bd = enumerate_bidegree(L, a, d - a);
                    EXPECT_EQ(static_cast<oracle::i64>(bd.size()), oracle::binom(a + nx, a) * oracle::binom(d - a + ny, d - a));
                    for (auto& m : bd) EXPECT_EQ(m.bidegree(), std::make_pair(a, d - a));
                }
            }
            EXPECT_TRUE(enumerate_monomials(L, Block::X, -1, 2).empty());
        }
}

TEST(Monomial, PrefixEnumerationUsesOnlyPrefix) {
    auto L = VariableLayout::bihomogeneous(3, 2);
    for (auto& m : enumerate_monomials(L, Block::Y, 1, 3)) {
        EXPECT_EQ(m.degree_x(), 0);
        EXPECT_EQ(m[L.y_index(2)], 0);
    }
    EXPECT_THROW(enumerate_monomials(L, Block::Y, 3, 1), std::invalid_argument);
}

TEST(Rng, DeterministicAndStreamsDiffer) {
    Rng a(5), b(5), c(5, 1), d(6);
    bool diff_c = false, diff_d = false;
    for (int k = 0; k < 16; ++k) {
        auto va = a.next();
        EXPECT_EQ(va, b.next());
        diff_c |= va != c.next();
        diff_d |= va != d.next();
    }
    EXPECT_TRUE(diff_c);
    EXPECT_TRUE(diff_d);
    Rng e(9);
    for (int k = 0; k < 1000; ++k) EXPECT_LT(e.below(7), 7u);
}
