#pragma once

#include <cstdint>
#include <limits>
#include <utility>
#include <vector>

#include "field.hpp"

namespace bgb {

struct DenseMatrix {
    int rows = 0, cols = 0;
    std::vector<Scalar> a;

    DenseMatrix() = default;
    DenseMatrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}

    Scalar& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
    Scalar at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
    Scalar* row(int i) { return a.data() + static_cast<std::size_t>(i) * cols; }
    const Scalar* row(int i) const { return a.data() + static_cast<std::size_t>(i) * cols; }
    bool row_is_zero(int i) const {
        for (int j = 0; j < cols; ++j)
            if (at(i, j)) return false;
        return true;
    }
};

// Echelon form built one row at a time, never permuting rows: an incoming row is reduced by
// every stored pivot row in increasing pivot-column order (dense elimination, including zero
// multipliers), then made monic.  ops() counts multiply-accumulates plus normalization products.
class IncrementalEchelon {
public:
    IncrementalEchelon(const PrimeField& F, int ncols) : F_(F), ncols_(ncols), pivot_of_col_(ncols, -1) {
        std::uint64_t pm1 = F.characteristic() - 1;
        std::uint64_t room = std::numeric_limits<std::uint64_t>::max() - pm1;
        max_adds_ = room / (pm1 * pm1);
        if (max_adds_ < 1) max_adds_ = 1;
        acc_.resize(ncols);
    }

    int ncols() const { return ncols_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    std::uint64_t ops() const { return ops_; }
    int pivot_row(int col) const { return pivot_of_col_[col]; }
    const std::vector<Scalar>& stored_row(int k) const { return rows_[k]; }
    int stored_pivot(int k) const { return pivcol_[k]; }

    // Returns the pivot column of the reduced row, or -1 if it reduced to zero.
    // On return `row` holds the reduced (monic) row or zeros.
    int insert(std::vector<Scalar>& row) {
        const std::uint64_t p = F_.characteristic();
        for (int j = 0; j < ncols_; ++j) acc_[j] = row[j];
        std::uint64_t adds = 0;
        for (int c = 0; c < ncols_; ++c) {
            int k = pivot_of_col_[c];
            if (k < 0) continue;
            if (adds >= max_adds_) {
                for (int j = c; j < ncols_; ++j) acc_[j] %= p;
                adds = 0;
            }
            std::uint64_t m = acc_[c] % p;
            std::uint64_t neg = m ? p - m : 0;
            const Scalar* pr = rows_[k].data();
            std::uint64_t* ac = acc_.data();
            for (int j = c; j < ncols_; ++j) ac[j] += neg * pr[j];
            ++adds;
            ops_ += static_cast<std::uint64_t>(ncols_ - c);
        }
        int lead = -1;
        for (int j = 0; j < ncols_; ++j) {
            row[j] = static_cast<Scalar>(acc_[j] % p);
            if (lead < 0 && row[j]) lead = j;
        }
        if (lead < 0) return -1;
        Scalar inv = F_.inv(row[lead]);
        for (int j = lead; j < ncols_; ++j) row[j] = F_.mul(row[j], inv);
        ops_ += static_cast<std::uint64_t>(ncols_ - lead);
        pivot_of_col_[lead] = static_cast<int>(rows_.size());
        rows_.push_back(row);
        pivcol_.push_back(lead);
        return lead;
    }

private:
    PrimeField F_;
    int ncols_;
    std::vector<int> pivot_of_col_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<int> pivcol_;
    std::vector<std::uint64_t> acc_;
    std::uint64_t max_adds_;
    std::uint64_t ops_ = 0;
};

// Classic Gauss-Jordan with row swaps; used for ranks, kernels and solving, and as an
// independent oracle for the no-permutation kernel.  Returns pivot columns.
inline std::vector<int> gauss_jordan(const PrimeField& F, DenseMatrix& M, bool reduce_above = true) {
    std::vector<int> piv;
    int r = 0;
    for (int c = 0; c < M.cols && r < M.rows; ++c) {
        int sel = -1;
        for (int i = r; i < M.rows; ++i)
            if (M.at(i, c)) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        if (sel != r)
            for (int j = 0; j < M.cols; ++j) std::swap(M.at(sel, j), M.at(r, j));
        Scalar inv = F.inv(M.at(r, c));
        for (int j = c; j < M.cols; ++j) M.at(r, j) = F.mul(M.at(r, j), inv);
        for (int i = reduce_above ? 0 : r + 1; i < M.rows; ++i) {
            if (i == r || !M.at(i, c)) continue;
            Scalar f = F.neg(M.at(i, c));
            Scalar* dst = M.row(i);
            const Scalar* src = M.row(r);
            for (int j = c; j < M.cols; ++j)
                if (src[j]) dst[j] = F.add(dst[j], F.mul(f, src[j]));
        }
        piv.push_back(c);
        ++r;
    }
    return piv;
}

inline int rank(const PrimeField& F, DenseMatrix M) { return static_cast<int>(gauss_jordan(F, M, false).size()); }

inline DenseMatrix reduced_row_echelon(const PrimeField& F, DenseMatrix M) {
    auto piv = gauss_jordan(F, M, true);
    DenseMatrix R(static_cast<int>(piv.size()), M.cols);
    for (int i = 0; i < R.rows; ++i)
        for (int j = 0; j < M.cols; ++j) R.at(i, j) = M.at(i, j);
    return R;
}

// Basis of {v : M v = 0}, one vector per free column.
inline std::vector<std::vector<Scalar>> right_kernel(const PrimeField& F, DenseMatrix M) {
    auto piv = gauss_jordan(F, M, true);
    std::vector<char> is_piv(M.cols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<std::vector<Scalar>> out;
    for (int f = 0; f < M.cols; ++f) {
        if (is_piv[f]) continue;
        std::vector<Scalar> v(M.cols, 0);
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = F.neg(M.at(static_cast<int>(r), f));
        out.push_back(std::move(v));
    }
    return out;
}

inline DenseMatrix transpose(const DenseMatrix& M) {
    DenseMatrix T(M.cols, M.rows);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) T.at(j, i) = M.at(i, j);
    return T;
}

// Is v in the row span of M?
inline bool in_row_span(const PrimeField& F, const DenseMatrix& M, const std::vector<Scalar>& v) {
    DenseMatrix A(M.rows + 1, M.cols);
    for (int i = 0; i < M.rows; ++i)
        for (int j = 0; j < M.cols; ++j) A.at(i, j) = M.at(i, j);
    for (int j = 0; j < M.cols; ++j) A.at(M.rows, j) = v[j];
    return rank(F, A) == rank(F, M);
}

}  // namespace bgb
