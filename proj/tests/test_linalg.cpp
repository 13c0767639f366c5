#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"

using namespace bgb;

namespace {
DenseMatrix random_matrix(int r, int c, std::uint32_t p, std::mt19937_64& g, int rank_cap = -1) {
    // rank_cap >= 0: product of r x k and k x c random factors
    DenseMatrix M(r, c);
    if (rank_cap < 0) {
        for (auto& v : M.a) v = static_cast<Scalar>(g() % p);
        return M;
    }
    PrimeField F(p);
    DenseMatrix A(r, rank_cap), B(rank_cap, c);
    for (auto& v : A.a) v = static_cast<Scalar>(g() % p);
    for (auto& v : B.a) v = static_cast<Scalar>(g() % p);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) {
            Scalar s = 0;
            for (int k = 0; k < rank_cap; ++k) s = F.add(s, F.mul(A.at(i, k), B.at(k, j)));
            M.at(i, j) = s;
        }
    return M;
}

std::vector<std::vector<oracle::i64>> rows_of(const DenseMatrix& M, int upto = -1) {
    std::vector<std::vector<oracle::i64>> out;
    for (int i = 0; i < (upto < 0 ? M.rows : upto); ++i) out.emplace_back(M.row(i), M.row(i) + M.cols);
    return out;
}
}  // namespace

TEST(Linalg, RankAgreesWithOracle) {
    std::mt19937_64 g(1);
    for (std::uint32_t p : {7u, 65521u, 2147483647u})
        for (int k = 0; k < 40; ++k) {
            int r = 1 + static_cast<int>(g() % 12), c = 1 + static_cast<int>(g() % 12);
            int cap = static_cast<int>(g() % 6);
            auto M = random_matrix(r, c, p, g, cap);
            EXPECT_EQ(rank(PrimeField(p), M), oracle::rank(rows_of(M), p));
        }
}

TEST(Linalg, IncrementalEchelonZeroRowsAreDependentPrefixes) {
    std::mt19937_64 g(2);
    PrimeField F(65521);
    for (int k = 0; k < 40; ++k) {
        int r = 10, c = 9;
        auto M = random_matrix(r, c, 65521, g, 5);
        IncrementalEchelon E(F, c);
        int prev = 0;
        for (int i = 0; i < r; ++i) {
            std::vector<Scalar> row(M.row(i), M.row(i) + c);
            int lead = E.insert(row);
            int rk = oracle::rank(rows_of(M, i + 1), 65521);
            EXPECT_EQ(lead < 0, rk == prev) << "row " << i;
            if (lead >= 0) {
                // the reduced row keeps the row space and has no entries left of its pivot
                for (int j = 0; j < lead; ++j) EXPECT_EQ(row[j], 0u);
                EXPECT_EQ(E.pivot_row(lead), E.rank() - 1);
            } else {
                for (auto v : row) EXPECT_EQ(v, 0u);
            }
            prev = rk;
        }
        EXPECT_EQ(E.rank(), prev);
    }
}

TEST(Linalg, OpsCountDenseNoSkip) {
    // Each existing pivot in column c costs (ncols - c) multiply-adds for every inserted row,
    // and normalizing a new pivot row with lead l costs (ncols - l).
    PrimeField F(65521);
    int n = 6;
    IncrementalEchelon E(F, n);
    std::uint64_t expect = 0;
    for (int i = 0; i < 4; ++i) {
        std::vector<Scalar> row(n, 0);
        row[i] = 1;
        row[n - 1] = 3;
        for (int j = 0; j < i; ++j) expect += static_cast<std::uint64_t>(n - j);
        expect += static_cast<std::uint64_t>(n - i);
        E.insert(row);
    }
    EXPECT_EQ(E.ops(), expect);
}

TEST(Linalg, LargePrimeNoOverflow) {
    std::uint32_t p = 2147483647u;
    PrimeField F(p);
    std::mt19937_64 g(3);
    auto M = random_matrix(60, 40, p, g, 30);
    IncrementalEchelon E(F, 40);
    for (int i = 0; i < 60; ++i) {
        std::vector<Scalar> row(M.row(i), M.row(i) + 40);
        E.insert(row);
    }
    EXPECT_EQ(E.rank(), 30);
    EXPECT_EQ(E.rank(), oracle::rank(rows_of(M), p));
}

TEST(Linalg, RightKernelProperties) {
    std::mt19937_64 g(4);
    PrimeField F(65521);
    for (int k = 0; k < 30; ++k) {
        int r = 1 + static_cast<int>(g() % 8), c = 1 + static_cast<int>(g() % 10);
        auto M = random_matrix(r, c, 65521, g, static_cast<int>(g() % 5));
        auto ker = right_kernel(F, M);
        int rk = oracle::rank(rows_of(M), 65521);
        EXPECT_EQ(static_cast<int>(ker.size()), c - rk);  // rank-nullity
        for (auto& v : ker)
            for (int i = 0; i < r; ++i) {
                oracle::i64 s = 0;
                for (int j = 0; j < c; ++j) s = (s + static_cast<oracle::i64>(M.at(i, j)) * v[j]) % 65521;
                EXPECT_EQ(s, 0);
            }
        if (!ker.empty()) {
            DenseMatrix K(static_cast<int>(ker.size()), c);
            for (std::size_t i = 0; i < ker.size(); ++i) std::copy(ker[i].begin(), ker[i].end(), K.row(static_cast<int>(i)));
            EXPECT_EQ(oracle::rank(rows_of(K), 65521), static_cast<int>(ker.size()));
        }
    }
}

TEST(Linalg, RowSpanAndRref) {
    std::mt19937_64 g(5);
    PrimeField F(65521);
    auto M = random_matrix(5, 8, 65521, g, 3);
    auto R = reduced_row_echelon(F, M);
    EXPECT_EQ(R.rows, 3);
    for (int i = 0; i < M.rows; ++i) EXPECT_TRUE(in_row_span(F, R, std::vector<Scalar>(M.row(i), M.row(i) + 8)));
    std::vector<Scalar> e(8, 0);
    e[7] = 1;
    auto ext = rows_of(M);
    ext.push_back(std::vector<oracle::i64>(e.begin(), e.end()));
    EXPECT_EQ(in_row_span(F, M, e), oracle::rank(ext, 65521) == oracle::rank(rows_of(M), 65521));
    auto T = transpose(M);
    EXPECT_EQ(rank(F, T), rank(F, M));
}

TEST(Macaulay, MatrixAndEchelonOfSignedRows) {
    auto F = random_bilinear(2, 2, 3, 7);
    std::vector<Polynomial> rows;
    auto L = F.layout();
    // all degree-3 multiples x_k f_i plus a duplicate to force a zero row
    for (auto& f : F.polys)
        for (int k = 0; k < L.nvars(); ++k) rows.push_back(f.mul_term(Monomial::variable(L, k)));
    rows.push_back(rows.front().scaled(5));
    auto M = macaulay_matrix(rows, 3, F.ring);
    EXPECT_EQ(M.m.rows, static_cast<int>(rows.size()));
    EXPECT_EQ(M.columns.size(), enumerate_monomials(L, Block::All, 0, 3).size());
    for (std::size_t k = 1; k < M.columns.size(); ++k) EXPECT_GT(grevlex_cmp(M.columns[k - 1], M.columns[k]), 0);
    auto E = row_echelon(F.ring->field, M);
    int rk = oracle::rank(rows_of(M.m), 65521);
    EXPECT_EQ(static_cast<int>(E.pivots.size()), rk);
    EXPECT_EQ(static_cast<int>(E.zero_rows.size()), M.m.rows - rk);
    EXPECT_EQ(E.zero_rows.back().index, static_cast<int>(rows.size()));
    EXPECT_THROW(macaulay_matrix({rows.front()}, 2, F.ring), std::invalid_argument);
}
