#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "macaulay.hpp"
#include "system.hpp"

namespace bgb {

// All k-subsets of {0..n-1} in lexicographic order.
inline std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    while (true) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

// Determinants of the submatrices (row subset R, first |R| columns), memoized on the row
// bitmask so that all maximal minors share their sub-minors.  Laplace expansion along the
// last of the used columns.
class MinorEngine {
public:
    explicit MinorEngine(const PolyMatrix& M) : M_(M) {
        if (M.rows > 63) throw std::invalid_argument("matrix too tall for minor engine");
    }

    Polynomial minor(std::uint64_t mask) {
        int k = __builtin_popcountll(mask);
        if (k == 0) return Polynomial::constant(M_.ring, 1);
        auto it = memo_.find(mask);
        if (it != memo_.end()) return it->second;
        Polynomial acc(M_.ring);
        int col = k - 1;
        int pos = 0;
        for (int r = 0; r < M_.rows; ++r) {
            if (!(mask >> r & 1)) continue;
            const Polynomial& a = M_.at(r, col);
            if (!a.is_zero()) {
                Polynomial sub = minor(mask & ~(1ull << r));
                if (!sub.is_zero()) {
                    Polynomial term = a * sub;
                    acc = ((pos + col) % 2 == 0) ? acc + term : acc - term;
                }
            }
            ++pos;
        }
        memo_.emplace(mask, acc);
        return acc;
    }

    Polynomial minor_of_rows(const std::vector<int>& rows) {
        std::uint64_t mask = 0;
        for (int r : rows) mask |= 1ull << r;
        return minor(mask);
    }

private:
    const PolyMatrix& M_;
    std::unordered_map<std::uint64_t, Polynomial> memo_;
};

inline Polynomial det_poly(const PolyMatrix& M) {
    if (M.rows != M.cols) throw std::invalid_argument("det_poly: matrix not square");
    MinorEngine E(M);
    return E.minor(M.rows == 64 ? ~0ull : ((1ull << M.rows) - 1));
}

// One determinant per c-subset of rows, subsets in lexicographic order.
inline std::vector<Polynomial> maximal_minors(const PolyMatrix& M) {
    if (M.rows < M.cols) throw std::invalid_argument("maximal_minors: fewer rows than columns");
    MinorEngine E(M);
    std::vector<Polynomial> out;
    for (auto& s : combinations(M.rows, M.cols)) out.push_back(E.minor_of_rows(s));
    return out;
}

// Row echelon of the degree-q Macaulay matrix of S, zero rows dropped.
inline std::vector<Polynomial> reduce_set(const std::vector<Polynomial>& S, int q, const RingPtr& r, std::uint64_t* ops = nullptr) {
    std::vector<Polynomial> nz;
    for (auto& p : S)
        if (!p.is_zero()) nz.push_back(p);
    auto M = macaulay_matrix(nz, q, r);
    auto E = row_echelon(r->field, M);
    if (ops) *ops += E.ops;
    return matrix_rows(r, E.matrix);
}

inline std::vector<Polynomial> minors_gb(const PolyMatrix& M, std::uint64_t* ops = nullptr) {
    return reduce_set(maximal_minors(M), M.cols, M.ring, ops);
}

// Monomials of degree q in the first (n+1) variables of `vars`.
inline std::vector<Monomial> monomials_prefix(const VariableLayout& L, const std::vector<int>& vars, int n, int q) {
    if (n < 0) return {};
    std::vector<int> v(vars.begin(), vars.begin() + std::min<std::size_t>(vars.size(), static_cast<std::size_t>(n + 1)));
    return monomials_in_vars(L, v, q);
}

// The explicit lower-band matrix: entry (i, j) (1-based) is v_{i-j} when 0 <= i-j <= p-q.
inline PolyMatrix witness_matrix(const RingPtr& r, const std::vector<int>& vars, int p, int q) {
    if (p < q || static_cast<int>(vars.size()) < p - q + 1) throw std::invalid_argument("witness_matrix: shape");
    PolyMatrix M(r, p, q);
    for (int i = 1; i <= p; ++i)
        for (int j = 1; j <= q; ++j) {
            int k = i - j;
            if (k >= 0 && k <= p - q) M.at(i - 1, j - 1) = Polynomial::variable(r, vars[k]);
        }
    return M;
}

// Random l x c matrix of homogeneous linear forms in `vars`.
inline PolyMatrix random_linear_matrix(const RingPtr& r, const std::vector<int>& vars, int l, int c, std::uint64_t seed) {
    Rng rng(seed, 0x3a7);
    PolyMatrix M(r, l, c);
    for (auto& e : M.e) {
        std::vector<Term> ts;
        for (int v : vars) ts.push_back({Monomial::variable(r->layout, v), static_cast<Scalar>(rng.below(r->field.characteristic()))});
        e = Polynomial(r, std::move(ts));
    }
    return M;
}

// Extension patterns: l x (l-c-1) 0/1 matrices with one 1 per column and strictly increasing
// row positions; represented by those row positions.
inline std::vector<std::vector<int>> extension_patterns(int l, int c) {
    return combinations(l, l - c - 1);
}

// v_k = (-1)^{k+1} minor([M | T], k), k = 1..l, minor deleting row k.
inline std::vector<Polynomial> kernel_vector(const PolyMatrix& M, const std::vector<int>& T) {
    int l = M.rows, c = M.cols;
    if (l < c + 1) throw std::invalid_argument("kernel_vector: need l >= c + 1");
    if (static_cast<int>(T.size()) != l - c - 1) throw std::invalid_argument("kernel_vector: pattern has wrong column count");
    for (std::size_t a = 0; a < T.size(); ++a) {
        if (T[a] < 0 || T[a] >= l) throw std::invalid_argument("kernel_vector: pattern row out of range");
        if (a && T[a] <= T[a - 1]) throw std::invalid_argument("kernel_vector: pattern rows must increase");
    }
    PolyMatrix MT(M.ring, l, l - 1);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < c; ++j) MT.at(i, j) = M.at(i, j);
    for (std::size_t a = 0; a < T.size(); ++a) MT.at(T[a], c + static_cast<int>(a)) = Polynomial::constant(M.ring, 1);
    MinorEngine E(MT);
    std::uint64_t all = (1ull << l) - 1;
    std::vector<Polynomial> v;
    for (int k = 0; k < l; ++k) {
        Polynomial m = E.minor(all & ~(1ull << k));
        v.push_back(k % 2 == 0 ? m : -m);
    }
    return v;
}

struct KernelDegreeSlice {
    int degree;
    int kernel_dim;
    int span_dim;
};

struct KernelConjectureReport {
    bool holds_up_to_bound = false;
    int bound = 0;
    std::vector<KernelDegreeSlice> slices;
    std::string note;
};

namespace detail {
// Variables occurring in some entry of M, ascending.
inline std::vector<int> matrix_support(const PolyMatrix& M) {
    std::uint32_t mask = 0;
    for (auto& e : M.e)
        for (auto& t : e.terms()) mask |= t.m.support_mask();
    std::vector<int> vs;
    for (int v = 0; v < M.ring->layout.nvars(); ++v)
        if (mask >> v & 1) vs.push_back(v);
    return vs;
}
}  // namespace detail

// For each degree e <= bound: dimension of {v in (R_e)^l : v M = 0} against the span of all
// u * kernel_vector(M, T) with deg u = e - deg(v_T).  Entries of M must be linear forms.
inline KernelConjectureReport check_kernel_conjecture(const PolyMatrix& M, int bound) {
    const PrimeField& F = M.ring->field;
    const VariableLayout& L = M.ring->layout;
    int l = M.rows, c = M.cols;
    KernelConjectureReport rep;
    rep.bound = bound;
    if (l <= c) throw std::invalid_argument("check_kernel_conjecture: need l > c");
    auto vars = detail::matrix_support(M);

    std::vector<std::vector<Polynomial>> gens;
    for (auto& T : extension_patterns(l, c)) gens.push_back(kernel_vector(M, T));

    bool ok = true;
    for (int e = 0; e <= bound; ++e) {
        auto me = monomials_in_vars(L, vars, e);
        auto me1 = monomials_in_vars(L, vars, e + 1);
        auto ie = column_index(me);
        auto ie1 = column_index(me1);
        int nu = l * static_cast<int>(me.size());
        // Equations: for each column j and monomial w of degree e+1, sum_r sum_u coeff = 0.
        DenseMatrix A(c * static_cast<int>(me1.size()), nu);
        for (int r = 0; r < l; ++r)
            for (std::size_t ui = 0; ui < me.size(); ++ui)
                for (int j = 0; j < c; ++j)
                    for (auto& t : M.at(r, j).terms()) {
                        int w = ie1.at(me[ui] * t.m);
                        Scalar& cell = A.at(j * static_cast<int>(me1.size()) + w, r * static_cast<int>(me.size()) + static_cast<int>(ui));
                        cell = F.add(cell, t.c);
                    }
        int kdim = static_cast<int>(right_kernel(F, A).size());

        std::vector<std::vector<Scalar>> span;
        for (auto& g : gens) {
            int dg = -1;
            for (auto& p : g)
                if (!p.is_zero()) dg = p.degree();
            if (dg < 0 || dg > e) continue;
            for (auto& u : monomials_in_vars(L, vars, e - dg)) {
                std::vector<Scalar> vec(nu, 0);
                for (int r = 0; r < l; ++r)
                    for (auto& t : g[r].terms()) {
                        auto it = ie.find(u * t.m);
                        if (it == ie.end()) throw std::logic_error("kernel vector not homogeneous");
                        vec[r * me.size() + it->second] = t.c;
                    }
                span.push_back(std::move(vec));
            }
        }
        DenseMatrix S(static_cast<int>(span.size()), nu);
        for (std::size_t k = 0; k < span.size(); ++k) std::copy(span[k].begin(), span[k].end(), S.row(static_cast<int>(k)));
        int sdim = S.rows ? rank(F, S) : 0;
        rep.slices.push_back({e, kdim, sdim});
        if (sdim != kdim) ok = false;
    }
    rep.holds_up_to_bound = ok;
    if (bound < c) {
        rep.holds_up_to_bound = false;
        rep.note = "degree bound " + std::to_string(bound) + " is below the minor degree " + std::to_string(c) +
                   "; the extension vectors never enter the checked range";
    }
    return rep;
}

}  // namespace bgb
