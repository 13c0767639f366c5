#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "buchberger.hpp"
#include "f5.hpp"
#include "macaulay.hpp"
#include "system.hpp"

namespace bgb {

// Truncated bivariate series: c[a][b] is the coefficient of t1^a t2^b, 0 <= a <= T1, 0 <= b <= T2.
struct BiSeries {
    int T1 = 0, T2 = 0;
    std::vector<std::vector<std::int64_t>> c;

    BiSeries() = default;
    BiSeries(int t1, int t2) : T1(t1), T2(t2), c(t1 + 1, std::vector<std::int64_t>(t2 + 1, 0)) {}

    std::int64_t at(int a, int b) const { return (a < 0 || b < 0 || a > T1 || b > T2) ? 0 : c[a][b]; }
    bool operator==(const BiSeries& o) const { return T1 == o.T1 && T2 == o.T2 && c == o.c; }
    bool operator!=(const BiSeries& o) const { return !(*this == o); }

    BiSeries operator*(const BiSeries& o) const {
        BiSeries r(T1, T2);
        for (int a = 0; a <= T1; ++a)
            for (int b = 0; b <= T2; ++b) {
                if (!c[a][b]) continue;
                for (int a2 = 0; a + a2 <= T1; ++a2)
                    for (int b2 = 0; b + b2 <= T2; ++b2) r.c[a + a2][b + b2] += c[a][b] * o.at(a2, b2);
            }
        return r;
    }
    BiSeries operator+(const BiSeries& o) const {
        BiSeries r = *this;
        for (int a = 0; a <= T1; ++a)
            for (int b = 0; b <= T2; ++b) r.c[a][b] += o.at(a, b);
        return r;
    }
    BiSeries operator-(const BiSeries& o) const {
        BiSeries r = *this;
        for (int a = 0; a <= T1; ++a)
            for (int b = 0; b <= T2; ++b) r.c[a][b] -= o.at(a, b);
        return r;
    }
    // Coefficientwise >= on the common window.
    bool dominates(const BiSeries& o) const {
        for (int a = 0; a <= T1; ++a)
            for (int b = 0; b <= T2; ++b)
                if (c[a][b] < o.at(a, b)) return false;
        return true;
    }
};

// Univariate truncated series, coefficient k of t^k.
using Series = std::vector<std::int64_t>;

inline std::int64_t sbinom(std::int64_t n, std::int64_t k) {
    // zero outside 0 <= k <= n
    return static_cast<std::int64_t>(binomial(n, k));
}

// 1/(1-t)^{e} truncated at T (e >= 0).
inline Series inv_one_minus_pow(int e, int T) {
    Series s(T + 1);
    for (int k = 0; k <= T; ++k) s[k] = e == 0 ? (k == 0) : sbinom(k + e - 1, e - 1);
    return s;
}

inline BiSeries hs_zero_ideal(int nx, int ny, int T1, int T2) {
    BiSeries r(T1, T2);
    for (int a = 0; a <= T1; ++a)
        for (int b = 0; b <= T2; ++b) r.c[a][b] = sbinom(a + nx, a) * sbinom(b + ny, b);
    return r;
}

// Generating series of the monomials of k[x_0..x_nx] that are multiples of some monomial of degree
// n_y+1 in x_0..x_{i-n_y-2} (direct count).  Swap (nx, ny) for the y-side.
inline Series g_combinatorial(int nx, int ny, int i, int T) {
    Series s(T + 1, 0);
    int a = i - ny - 2;  // last usable index
    if (a < 0) return s;
    if (a > nx) throw std::invalid_argument("g series: generator index beyond block");
    int rest = nx - a;  // variables x_{a+1}..x_nx
    for (int d = 0; d <= T; ++d) {
        std::int64_t tot = 0;
        for (int j = ny + 1; j <= d; ++j) {
            std::int64_t head = sbinom(a + j, j);
            std::int64_t tail = rest == 0 ? (d == j ? 1 : 0) : sbinom(d - j + rest - 1, d - j);
            tot += head * tail;
        }
        s[d] = tot;
    }
    return s;
}

// The printed closed form: 0 if i <= n_y, else
//   1/(1-t)^{nx+1} - sum_{j=1}^{ny+1} binom(i-1-j, ny+1-j) t^{ny+1-j} / (1-t)^{nx+ny-i+2}.
// `negative_top_is_one` selects binom(-1, 0) = 1 instead of the zero convention.
inline Series g_printed(int nx, int ny, int i, int T, bool negative_top_is_one = false) {
    Series s(T + 1, 0);
    if (i <= ny) return s;
    int e = nx + ny - i + 2;
    if (e < 0) throw std::invalid_argument("g series: exponent negative");
    auto head = inv_one_minus_pow(nx + 1, T);
    auto den = inv_one_minus_pow(e, T);
    for (int k = 0; k <= T; ++k) s[k] = head[k];
    for (int j = 1; j <= ny + 1; ++j) {
        std::int64_t top = i - 1 - j, bot = ny + 1 - j;
        std::int64_t b = sbinom(top, bot);
        if (negative_top_is_one && top < 0 && bot == 0) b = 1;
        if (!b) continue;
        int sh = ny + 1 - j;
        for (int k = sh; k <= T; ++k) s[k] -= b * den[k - sh];
    }
    return s;
}

struct GSeriesReport {
    Series gx, gy;                  // combinatorial (authoritative)
    Series gx_printed, gy_printed;  // printed closed form, zero-binomial convention
    bool agrees = true;             // printed == combinatorial on both sides
    std::string note;
};

inline GSeriesReport g_series(int nx, int ny, int i, int T) {
    if (i < 2) throw std::invalid_argument("g_series needs i >= 2");
    GSeriesReport r;
    r.gx = g_combinatorial(nx, ny, i, T);
    r.gy = g_combinatorial(ny, nx, i, T);
    r.gx_printed = g_printed(nx, ny, i, T);
    r.gy_printed = g_printed(ny, nx, i, T);
    if (r.gx != r.gx_printed) {
        r.agrees = false;
        r.note += "x-side closed form differs from the direct count at i=" + std::to_string(i) + ". ";
    }
    if (r.gy != r.gy_printed) {
        r.agrees = false;
        r.note += "y-side closed form differs from the direct count at i=" + std::to_string(i) + ". ";
    }
    return r;
}

// HS_{I_i} = (1 - t1 t2) HS_{I_{i-1}} + t1 t2 (g_x^{(i-1)}(t1) + g_y^{(i-1)}(t2)), from the zero ideal.
inline BiSeries hs_recurrence(int nx, int ny, int m, int T1, int T2) {
    if (m > nx + ny) throw std::invalid_argument("hs_recurrence needs m <= n_x + n_y");
    BiSeries H = hs_zero_ideal(nx, ny, T1, T2);
    int T = std::max(T1, T2);
    for (int i = 1; i <= m; ++i) {
        Series gx(T + 1, 0), gy(T + 1, 0);
        if (i >= 2) {
            gx = g_combinatorial(nx, ny, i, T);
            gy = g_combinatorial(ny, nx, i, T);
        }
        BiSeries N(T1, T2);
        for (int a = 0; a <= T1; ++a)
            for (int b = 0; b <= T2; ++b) {
                std::int64_t v = H.c[a][b];
                if (a > 0 && b > 0) {
                    v -= H.c[a - 1][b - 1];
                    if (b - 1 == 0) v += gx[a - 1];
                    if (a - 1 == 0) v += gy[b - 1];
                }
                N.c[a][b] = v;
            }
        H = std::move(N);
    }
    return H;
}

namespace detail {
inline BiSeries poly1(int T1, int T2, std::initializer_list<std::tuple<int, int, std::int64_t>> terms) {
    BiSeries s(T1, T2);
    for (auto& [a, b, v] : terms)
        if (a <= T1 && b <= T2) s.c[a][b] += v;
    return s;
}
inline BiSeries power(const BiSeries& base, int e) {
    BiSeries r = poly1(base.T1, base.T2, {{0, 0, 1}});
    for (int k = 0; k < e; ++k) r = r * base;
    return r;
}
}  // namespace detail

// The numerator N_m(t1, t2) of the closed form, truncated.
inline BiSeries closed_form_numerator(int nx, int ny, int m, int T1, int T2) {
    using detail::poly1;
    using detail::power;
    BiSeries one_m_t1t2 = poly1(T1, T2, {{0, 0, 1}, {1, 1, -1}});
    BiSeries one_m_t1 = poly1(T1, T2, {{0, 0, 1}, {1, 0, -1}});
    BiSeries one_m_t2 = poly1(T1, T2, {{0, 0, 1}, {0, 1, -1}});
    BiSeries t1t2 = poly1(T1, T2, {{1, 1, 1}});
    BiSeries N = power(one_m_t1t2, m);
    for (int l = 1; l <= m - (ny + 1); ++l) {
        BiSeries inner(T1, T2);
        for (int k = 1; k <= ny + 1; ++k)
            if (ny + 1 - k <= T1) inner.c[ny + 1 - k][0] += sbinom(l + ny - k, ny + 1 - k);
        BiSeries bracket = poly1(T1, T2, {{0, 0, 1}}) - power(one_m_t1, l) * inner;
        N = N + power(one_m_t1t2, m - (ny + 1) - l) * t1t2 * power(one_m_t2, ny + 1) * bracket;
    }
    for (int l = 1; l <= m - (nx + 1); ++l) {
        BiSeries inner(T1, T2);
        for (int k = 1; k <= nx + 1; ++k)
            if (nx + 1 - k <= T2) inner.c[0][nx + 1 - k] += sbinom(l + nx - k, nx + 1 - k);
        BiSeries bracket = poly1(T1, T2, {{0, 0, 1}}) - power(one_m_t2, l) * inner;
        N = N + power(one_m_t1t2, m - (nx + 1) - l) * t1t2 * power(one_m_t1, nx + 1) * bracket;
    }
    return N;
}

inline BiSeries hs_closed_form(int nx, int ny, int m, int T1, int T2) {
    if (m > nx + ny) throw std::invalid_argument("hs_closed_form needs m <= n_x + n_y");
    return closed_form_numerator(nx, ny, m, T1, T2) * hs_zero_ideal(nx, ny, T1, T2);
}

// dim R_{a,b} - #(leading monomials of bidegree (a,b)) from a Groebner basis truncated at (T1, T2).
inline BiSeries hs_from_leading_monomials(const VariableLayout& L, const std::vector<Monomial>& lms, int T1, int T2) {
    BiSeries r(T1, T2);
    std::unordered_set<Monomial, MonomialHash> gens(lms.begin(), lms.end());
    std::vector<std::vector<std::unordered_set<Monomial, MonomialHash>>> inlm(T1 + 1, std::vector<std::unordered_set<Monomial, MonomialHash>>(T2 + 1));
    for (int s = 0; s <= T1 + T2; ++s)
        for (int a = std::max(0, s - T2); a <= std::min(s, T1); ++a) {
            int b = s - a;
            auto mons = enumerate_bidegree(L, a, b);
            std::int64_t standard = 0;
            for (auto& m : mons) {
                bool hit = gens.count(m) > 0;
                for (int v = 0; v < L.nvars() && !hit; ++v) {
                    if (!m[v]) continue;
                    Monomial q = m;
                    q.set(v, m[v] - 1);
                    int qa = q.degree_x(), qb = q.degree_y();
                    if (inlm[qa][qb].count(q)) hit = true;
                }
                if (hit) inlm[a][b].insert(m);
                else ++standard;
            }
            r.c[a][b] = standard;
        }
    return r;
}

// Hilbert bi-series of <F> on the window, from a bidegree-truncated Groebner basis.
inline BiSeries hs_direct(const PolySystem& F, int T1, int T2) {
    if (F.flavor != Flavor::HomogeneousBilinear && F.flavor != Flavor::Bihomogeneous)
        throw std::invalid_argument("hs_direct needs a bihomogeneous system");
    BuchbergerOptions o;
    o.bidegree_bound = {T1, T2};
    std::vector<Monomial> lms;
    if (F.size() > 0) lms = buchberger(F.polys, F.ring, o).leading_monomials();
    return hs_from_leading_monomials(F.layout(), lms, T1, T2);
}

// Literal definition: dim R_{a,b} - rank of the Macaulay matrix of all u * f_i with u of
// bidegree (a-1, b-1).  Dense; only for small windows.
inline BiSeries hs_direct_macaulay(const PolySystem& F, int T1, int T2) {
    if (F.flavor != Flavor::HomogeneousBilinear) throw std::invalid_argument("hs_direct_macaulay needs a bilinear system");
    const VariableLayout& L = F.layout();
    BiSeries r(T1, T2);
    for (int a = 0; a <= T1; ++a)
        for (int b = 0; b <= T2; ++b) {
            auto cols = enumerate_bidegree(L, a, b);
            std::int64_t dim = static_cast<std::int64_t>(cols.size());
            if (a == 0 || b == 0 || F.size() == 0) {
                r.c[a][b] = dim;
                continue;
            }
            auto idx = column_index(cols);
            auto us = enumerate_bidegree(L, a - 1, b - 1);
            DenseMatrix M(static_cast<int>(us.size() * F.polys.size()), static_cast<int>(cols.size()));
            int row = 0;
            for (auto& f : F.polys)
                for (auto& u : us) {
                    for (auto& t : f.terms()) M.at(row, idx.at(t.m * u)) = t.c;
                    ++row;
                }
            r.c[a][b] = dim - rank(F.ring->field, M);
        }
    return r;
}

// Coefficient of t^d is the sum over a+b=d; valid up to min(T1, T2).
inline Series univariate_hs(const BiSeries& b) {
    int T = std::min(b.T1, b.T2);
    Series s(T + 1, 0);
    for (int d = 0; d <= T; ++d)
        for (int a = 0; a <= d; ++a) s[d] += b.c[a][d - a];
    return s;
}

struct Rational {
    std::uint64_t num = 0, den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    std::uint64_t rounded() const { return (2 * num + den) / (2 * den); }
    std::string to_string() const { return std::to_string(num) + "/" + std::to_string(den); }
};

inline Rational make_rational(unsigned __int128 n, unsigned __int128 d) {
    auto g = [](unsigned __int128 a, unsigned __int128 b) {
        while (b) {
            auto t = a % b;
            a = b;
            b = t;
        }
        return a;
    };
    auto q = g(n, d);
    if (q == 0) q = 1;
    n /= q;
    d /= q;
    if (n > UINT64_MAX || d > UINT64_MAX) throw std::overflow_error("rational out of range");
    return {static_cast<std::uint64_t>(n), static_cast<std::uint64_t>(d)};
}

struct CostModel {
    unsigned __int128 t_hom = 0;       // (dim R_D - [t^D]HS(t,t))^2 dim R_D
    unsigned __int128 t_multihom = 0;  // sum over 1 <= d1 <= D-1 of (dim R_{d1,d2} - HS_{d1,d2})^2 dim R_{d1,d2}
    Rational ratio;
    std::uint64_t rank_hom = 0, cols_hom = 0;
};

inline std::string u128_to_string(unsigned __int128 v) {
    if (v == 0) return "0";
    std::string s;
    while (v) {
        s.insert(s.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return s;
}

// Both displayed cost expressions with C_1 = C_2 = 1, using the closed-form bi-series.
inline CostModel cost_model(int nx, int ny, int m, int D) {
    if (m > nx + ny) throw std::invalid_argument("cost_model needs m <= n_x + n_y");
    if (D < 2) throw std::invalid_argument("cost_model needs D >= 2");
    BiSeries H = hs_closed_form(nx, ny, m, D, D);
    std::int64_t hD = 0;
    for (int a = 0; a <= D; ++a) hD += H.c[a][D - a];
    CostModel c;
    std::uint64_t tot = binomial(D + nx + ny + 1, D);
    std::uint64_t r = tot - static_cast<std::uint64_t>(hD);
    c.rank_hom = r;
    c.cols_hom = tot;
    c.t_hom = static_cast<unsigned __int128>(r) * r * tot;
    for (int d1 = 1; d1 <= D - 1; ++d1) {
        int d2 = D - d1;
        std::uint64_t dim = binomial(d1 + nx, d1) * binomial(d2 + ny, d2);
        std::uint64_t rb = dim - static_cast<std::uint64_t>(H.c[d1][d2]);
        c.t_multihom += static_cast<unsigned __int128>(rb) * rb * dim;
    }
    c.ratio = make_rational(c.t_hom, c.t_multihom);
    return c;
}

inline Rational speedup_factor(int nx, int ny, int m, int D) { return cost_model(nx, ny, m, D).ratio; }

// Degree bound for Matrix F5 on a generic bilinear system: the largest degree observed in the
// reduced grevlex basis never exceeded min(m+1, max(n_x,n_y)+2), with equality when n_x = n_y.
// Empirical; callers that need a complete basis
// should certify it with is_groebner_basis.
inline int suggest_degree_bound(int nx, int ny, int m) {
    if (m <= 0) return 2;
    return std::max(2, std::min(m + 1, std::max(nx, ny) + 2));
}

}  // namespace bgb
