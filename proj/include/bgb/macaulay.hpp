#pragma once

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "linalg.hpp"
#include "polynomial.hpp"

namespace bgb {

// Row label (t, f_index); ordered by index, then by t in grevlex.
struct Signature {
    int index = 0;
    Monomial t;

    bool operator==(const Signature& o) const { return index == o.index && t == o.t; }
    bool operator<(const Signature& o) const {
        if (index != o.index) return index < o.index;
        return grevlex_cmp(t, o.t) < 0;
    }
    std::string to_string(const VariableLayout& L) const {
        return "(" + t.to_string(L) + ", f" + std::to_string(index) + ")";
    }
};

struct SignedMacaulayMatrix {
    int degree = 0;
    std::vector<Monomial> columns;  // strictly descending grevlex
    std::vector<Signature> sigs;
    DenseMatrix m;
};

struct EchelonResult {
    SignedMacaulayMatrix matrix;
    std::vector<Signature> zero_rows;
    std::map<int, int> pivots;  // column -> row
    std::uint64_t ops = 0;
};

inline std::unordered_map<Monomial, int, MonomialHash> column_index(const std::vector<Monomial>& cols) {
    std::unordered_map<Monomial, int, MonomialHash> idx;
    for (std::size_t k = 0; k < cols.size(); ++k) idx.emplace(cols[k], static_cast<int>(k));
    return idx;
}

// Dense row of p over the given columns; throws if p has a monomial outside them.
inline std::vector<Scalar> to_dense_row(const Polynomial& p, const std::unordered_map<Monomial, int, MonomialHash>& idx, int ncols) {
    std::vector<Scalar> row(ncols, 0);
    for (auto& t : p.terms()) {
        auto it = idx.find(t.m);
        if (it == idx.end()) throw std::invalid_argument("polynomial has a monomial outside the column set");
        row[it->second] = t.c;
    }
    return row;
}

inline Polynomial from_dense_row(const RingPtr& r, const std::vector<Monomial>& cols, const Scalar* row) {
    std::vector<Term> ts;
    for (std::size_t k = 0; k < cols.size(); ++k)
        if (row[k]) ts.push_back({cols[k], row[k]});
    return Polynomial(r, std::move(ts));
}

// One row per polynomial, signature (1, k) with k the 1-based input position.
inline SignedMacaulayMatrix macaulay_matrix(const std::vector<Polynomial>& S, int d, const RingPtr& r) {
    SignedMacaulayMatrix M;
    M.degree = d;
    M.columns = enumerate_monomials(r->layout, Block::All, 0, d);
    auto idx = column_index(M.columns);
    M.m = DenseMatrix(static_cast<int>(S.size()), static_cast<int>(M.columns.size()));
    for (std::size_t k = 0; k < S.size(); ++k) {
        const Polynomial& p = S[k];
        for (auto& t : p.terms())
            if (t.m.degree() != d) throw std::invalid_argument("macaulay_matrix: polynomial not homogeneous of degree " + std::to_string(d));
        auto row = to_dense_row(p, idx, M.m.cols);
        std::copy(row.begin(), row.end(), M.m.row(static_cast<int>(k)));
        M.sigs.push_back({static_cast<int>(k) + 1, Monomial(r->layout)});
    }
    return M;
}

// No-permutation echelon: row k is reduced only by rows before it.
inline EchelonResult row_echelon(const PrimeField& F, const SignedMacaulayMatrix& M) {
    EchelonResult R;
    R.matrix = M;
    IncrementalEchelon E(F, M.m.cols);
    std::vector<Scalar> row(M.m.cols);
    for (int i = 0; i < M.m.rows; ++i) {
        std::copy(M.m.row(i), M.m.row(i) + M.m.cols, row.begin());
        int lead = E.insert(row);
        std::copy(row.begin(), row.end(), R.matrix.m.row(i));
        if (lead < 0) R.zero_rows.push_back(M.sigs[i]);
        else R.pivots[lead] = i;
    }
    R.ops = E.ops();
    return R;
}

inline std::vector<Polynomial> matrix_rows(const RingPtr& r, const SignedMacaulayMatrix& M, bool drop_zero = true) {
    std::vector<Polynomial> out;
    for (int i = 0; i < M.m.rows; ++i) {
        auto p = from_dense_row(r, M.columns, M.m.row(i));
        if (!drop_zero || !p.is_zero()) out.push_back(std::move(p));
    }
    return out;
}

// Header "d n_rows n_cols", one column monomial per line, then "row col value" triples.
inline std::string dump_matrix(const SignedMacaulayMatrix& M, const VariableLayout& L) {
    std::ostringstream o;
    o << M.degree << ' ' << M.m.rows << ' ' << M.m.cols << '\n';
    for (auto& c : M.columns) o << c.to_string(L) << '\n';
    for (int i = 0; i < M.m.rows; ++i)
        for (int j = 0; j < M.m.cols; ++j)
            if (M.m.at(i, j)) o << i << ' ' << j << ' ' << M.m.at(i, j) << '\n';
    return o.str();
}

}  // namespace bgb
