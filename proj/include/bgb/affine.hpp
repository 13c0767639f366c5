#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "buchberger.hpp"
#include "f5.hpp"
#include "hilbert.hpp"
#include "minors.hpp"
#include "system.hpp"

namespace bgb {

inline bool is_zero_dimensional(const std::vector<Monomial>& lms, int nvars) {
    for (int v = 0; v < nvars; ++v) {
        bool pure = false;
        for (auto& m : lms)
            if (m[v] == m.degree() && m.degree() > 0) {
                pure = true;
                break;
            }
        if (!pure) return false;
    }
    return true;
}

// Smallest d with every degree-d monomial in LM(I).
inline int degree_of_regularity(const GroebnerBasis& G, const VariableLayout& L) {
    auto lms = G.leading_monomials();
    if (!is_zero_dimensional(lms, L.nvars())) throw std::invalid_argument("degree_of_regularity: ideal is not zero-dimensional");
    auto vars = block_vars(L, Block::All);
    for (int d = 0;; ++d)
        if (all_monomials_in_lm(lms, monomials_in_vars(L, vars, d))) return d;
}

// Number of standard monomials.
inline std::uint64_t quotient_dimension(const GroebnerBasis& G, const VariableLayout& L) {
    int dreg = degree_of_regularity(G, L);
    auto lms = G.leading_monomials();
    auto vars = block_vars(L, Block::All);
    std::uint64_t n = 0;
    for (int d = 0; d < dreg; ++d)
        for (auto& m : monomials_in_vars(L, vars, d))
            if (!divisible_by_any(lms, m)) ++n;
    return n;
}

struct RegularityStatistic {
    int multiplier_degree = 0;
    std::vector<std::int64_t> observed_per_index;  // extra kernel dimension for f_i, i = 1..m
    std::int64_t total = 0;
};

// For each i: dim {u in R_{<=e} : u f_i in I_{i-1}} minus the number of monomials of degree <= e in
// LM(I_{i-1}).  The second term is what the classical criterion accounts for; any excess is a
// reduction to zero it cannot see.  Zero everywhere iff f_1..f_m is regular up to degree e.
inline RegularityStatistic affine_regularity_statistic(const PolySystem& F, int e) {
    const RingPtr& R = F.ring;
    const PrimeField& K = R->field;
    auto vars = block_vars(F.layout(), Block::All);
    auto us = monomials_up_to(F.layout(), vars, e);
    RegularityStatistic st;
    st.multiplier_degree = e;
    for (int i = 1; i <= F.size(); ++i) {
        std::vector<Polynomial> prev(F.polys.begin(), F.polys.begin() + (i - 1));
        GroebnerBasis G;
        G.ring = R;
        if (!prev.empty()) G = buchberger(prev, R);
        auto lms = G.leading_monomials();
        std::vector<Polynomial> images;
        std::unordered_map<Monomial, int, MonomialHash> colidx;
        for (auto& u : us) {
            Polynomial img = normal_form(F.polys[i - 1].mul_term(u), G);
            for (auto& t : img.terms()) colidx.emplace(t.m, static_cast<int>(colidx.size()));
            images.push_back(std::move(img));
        }
        DenseMatrix M(static_cast<int>(us.size()), static_cast<int>(colidx.size()));
        for (std::size_t r = 0; r < images.size(); ++r)
            for (auto& t : images[r].terms()) M.at(static_cast<int>(r), colidx.at(t.m)) = t.c;
        std::int64_t kernel = static_cast<std::int64_t>(us.size()) - (M.cols ? rank(K, M) : 0);
        std::int64_t trivial = 0;
        for (auto& u : us)
            if (divisible_by_any(lms, u)) ++trivial;
        st.observed_per_index.push_back(kernel - trivial);
        st.total += kernel - trivial;
    }
    return st;
}

struct AffineReport {
    int d_reg_observed = -1;
    int d_reg_bound = 0;
    std::int64_t quotient_dim = -1;
    std::uint64_t bezout = 0;
    bool zero_dimensional = false;
    bool regular_sequence_observed = false;
    std::int64_t observed_rtz = 0;
};

inline AffineReport analyze_affine(const PolySystem& F) {
    if (F.flavor != Flavor::AffineBilinear) throw std::invalid_argument("analyze_affine needs an affine bilinear system");
    const VariableLayout& L = F.layout();
    AffineReport r;
    r.d_reg_bound = std::min(L.nx + 1, L.ny + 1);
    r.bezout = binomial(L.nx + L.ny, L.nx);
    GroebnerBasis G = buchberger(F.polys, F.ring);
    r.zero_dimensional = is_zero_dimensional(G.leading_monomials(), L.nvars());
    if (r.zero_dimensional) {
        r.d_reg_observed = degree_of_regularity(G, L);
        r.quotient_dim = static_cast<std::int64_t>(quotient_dimension(G, L));
    }
    auto st = affine_regularity_statistic(F, r.d_reg_bound);
    r.observed_rtz = st.total;
    r.regular_sequence_observed = st.total == 0;
    return r;
}

struct EliminationReport {
    bool equal = false;              // <minors> == elimination ideal
    bool minors_in_ideal = false;    // G1 subset of <F>
    bool elimination_in_minors = false;
    bool block_order_agrees = false;  // linear-algebra elimination matches the block-order basis
    bool lm_shape_ok = false;         // degree-(k+1) leading monomials are all monomials of that degree
    int elimination_degree = 0;
    std::size_t g1_size = 0, g2_size = 0;
    std::string note;
};

// Polynomials in the kept block of degree <= e lying in <F>: kernel of u -> NF(u) mod G.
inline std::vector<Polynomial> elimination_by_linear_algebra(const GroebnerBasis& G, const VariableLayout& L, Block keep, int e) {
    const RingPtr& R = G.ring;
    auto us = monomials_up_to(L, block_vars(L, keep), e);
    std::unordered_map<Monomial, int, MonomialHash> colidx;
    std::vector<Polynomial> imgs;
    for (auto& u : us) {
        auto img = normal_form(Polynomial::monomial(R, u), G);
        for (auto& t : img.terms()) colidx.emplace(t.m, static_cast<int>(colidx.size()));
        imgs.push_back(std::move(img));
    }
    // kernel of the map coefficient-vector(u) -> image: right kernel of the transpose
    DenseMatrix A(static_cast<int>(colidx.size()), static_cast<int>(us.size()));
    for (std::size_t k = 0; k < imgs.size(); ++k)
        for (auto& t : imgs[k].terms()) A.at(colidx.at(t.m), static_cast<int>(k)) = t.c;
    std::vector<Polynomial> out;
    std::vector<std::vector<Scalar>> ker;
    if (A.rows == 0) {
        for (std::size_t k = 0; k < us.size(); ++k) {
            std::vector<Scalar> v(us.size(), 0);
            v[k] = 1;
            ker.push_back(v);
        }
    } else {
        ker = right_kernel(R->field, A);
    }
    for (auto& v : ker) {
        std::vector<Term> ts;
        for (std::size_t k = 0; k < us.size(); ++k)
            if (v[k]) ts.push_back({us[k], v[k]});
        out.emplace_back(R, std::move(ts));
    }
    return out;
}

// keep = X: <MaxMinors(theta(jac_y F^h))> against <F> cap k[x]; keep = Y symmetric.
inline EliminationReport elimination_by_minors_check(const PolySystem& F, Block keep) {
    if (F.flavor != Flavor::AffineBilinear) throw std::invalid_argument("elimination check needs an affine bilinear system");
    const VariableLayout& L = F.layout();
    if (F.size() != L.nx + L.ny) throw std::invalid_argument("elimination check needs a square system (m = n_x + n_y)");
    if (keep == Block::All) throw std::invalid_argument("keep must be a single block");
    EliminationReport rep;
    PolySystem H = bihomogenize(F);
    PolyMatrix J = keep == Block::X ? jacobian_y(H) : jacobian_x(H);
    PolyMatrix Ja = dehomogenize(J);
    // Ja lives in a fresh affine ring; move entries into F's ring (same layout and prime).
    for (auto& e : Ja.e) e = e.in_ring(F.ring);
    Ja.ring = F.ring;
    auto minors = maximal_minors(Ja);
    std::vector<Polynomial> nz;
    for (auto& p : minors)
        if (!p.is_zero()) nz.push_back(p);
    GroebnerBasis G1;
    G1.ring = F.ring;
    if (!nz.empty()) G1 = buchberger(nz, F.ring);
    rep.g1_size = G1.polys.size();

    GroebnerBasis GI = buchberger(F.polys, F.ring);
    rep.minors_in_ideal = true;
    for (auto& g : G1.polys)
        if (!normal_form(g, GI).is_zero()) rep.minors_in_ideal = false;

    // Block order with the eliminated block first: basis elements free of it generate the elimination ideal.
    OrderKind ok = keep == Block::X ? OrderKind::EliminateY : OrderKind::EliminateX;
    RingPtr Rb = make_ring(L, F.ring->field.characteristic(), ok);
    std::vector<Polynomial> Fb;
    for (auto& f : F.polys) Fb.push_back(f.in_ring(Rb));
    GroebnerBasis GB = buchberger(Fb, Rb);
    std::vector<Polynomial> G2;
    int emax = 0;
    for (auto& g : GB.polys)
        if (g.uses_only(keep)) {
            G2.push_back(g.in_ring(F.ring));
            emax = std::max(emax, g.degree());
        }
    rep.g2_size = G2.size();
    rep.elimination_degree = emax;
    rep.elimination_in_minors = true;
    for (auto& g : G2)
        if (!normal_form(g, G1).is_zero()) rep.elimination_in_minors = false;

    // Independent route: degree-bounded linear algebra over the grevlex basis.
    auto la = elimination_by_linear_algebra(GI, L, keep, emax);
    bool agree = true;
    GroebnerBasis G2g;
    G2g.ring = F.ring;
    if (!G2.empty()) G2g = buchberger(G2, F.ring);
    for (auto& p : la)
        if (!normal_form(p, G2g).is_zero()) agree = false;
    // every block-order element must be a combination of the kernel elements of degree <= emax
    if (!la.empty()) {
        GroebnerBasis Gla = buchberger(la, F.ring);
        for (auto& g : G2)
            if (!normal_form(g, Gla).is_zero()) agree = false;
    } else if (!G2.empty()) {
        agree = false;
    }
    rep.block_order_agrees = agree;

    int k = keep == Block::X ? L.ny : L.nx;  // minors have degree k+1
    auto expect = monomials_in_vars(L, block_vars(L, keep), k + 1);
    std::vector<Monomial> lm_deg;
    for (auto& g : G1.polys)
        if (g.degree() == k + 1) lm_deg.push_back(g.lm());
    rep.lm_shape_ok = all_monomials_in_lm(lm_deg, expect) && lm_deg.size() == expect.size();
    rep.equal = rep.minors_in_ideal && rep.elimination_in_minors;
    if (!rep.equal) rep.note = "ideal equality failed; input likely non-generic";
    return rep;
}

struct ShapeLemmaReport {
    bool found = false;  // every x_j - g_j(y) recovered and verified
    std::vector<Polynomial> g;  // g_j in the y-block
    std::vector<bool> verified;
    std::int64_t quotient_dim = -1;
    int max_g_degree = -1;
    std::string note;
};

// Under a block order x >> y the normal form of x_j is a polynomial g_j in y exactly when the
// quotient has a pure-y monomial basis; x_j - g_j is then checked against the grevlex basis.
inline ShapeLemmaReport shape_lemma_check(const PolySystem& F) {
    if (F.flavor != Flavor::AffineBilinear) throw std::invalid_argument("shape lemma check needs an affine bilinear system");
    const VariableLayout& L = F.layout();
    if (F.size() != L.nx + L.ny) throw std::invalid_argument("shape lemma check needs m = n_x + n_y");
    ShapeLemmaReport rep;
    RingPtr Rb = make_ring(L, F.ring->field.characteristic(), OrderKind::EliminateX);
    std::vector<Polynomial> Fb;
    for (auto& f : F.polys) Fb.push_back(f.in_ring(Rb));
    GroebnerBasis GB = buchberger(Fb, Rb);
    GroebnerBasis GI = buchberger(F.polys, F.ring);
    if (!is_zero_dimensional(GI.leading_monomials(), L.nvars())) {
        rep.note = "ideal is not zero-dimensional";
        return rep;
    }
    rep.quotient_dim = static_cast<std::int64_t>(quotient_dimension(GI, L));
    bool all = true;
    for (int j = 0; j < L.x_count(); ++j) {
        Polynomial nf = normal_form(Polynomial::variable(Rb, L.x_index(j)), GB);
        bool pure_y = nf.uses_only(Block::Y);
        Polynomial g = nf.in_ring(F.ring);
        bool ok = pure_y && normal_form(Polynomial::variable(F.ring, L.x_index(j)) - g, GI).is_zero();
        rep.g.push_back(g);
        rep.verified.push_back(ok);
        rep.max_g_degree = std::max(rep.max_g_degree, g.degree());
        if (!ok) all = false;
    }
    rep.found = all;
    if (!all) rep.note = "some x_j does not reduce into the y-block; input likely non-generic";
    return rep;
}

struct ComplexityReport {
    int d = 0;  // min(n_x+1, n_y+1)
    std::uint64_t base = 0;           // binom(n_x+n_y+d, d)
    std::uint64_t macaulay_base = 0;  // binom(n+m+1, m+1) with n = m = n_x+n_y
    double omega = 0;
    std::string value;           // exact when omega is an integer
    std::string macaulay_value;  // same for the generic bound
    double log10_value = 0, log10_macaulay = 0;
};

inline std::string pow_exact(std::uint64_t b, int e) {
    unsigned __int128 v = 1;
    for (int k = 0; k < e; ++k) {
        if (v > (~static_cast<unsigned __int128>(0)) / (b ? b : 1)) throw std::overflow_error("complexity value too large");
        v *= b;
    }
    return u128_to_string(v);
}

inline ComplexityReport complexity_report(int nx, int ny, double omega) {
    if (omega < 2 || omega > 3) throw std::invalid_argument("omega must lie in [2, 3]");
    ComplexityReport r;
    r.d = std::min(nx + 1, ny + 1);
    r.omega = omega;
    r.base = binomial(nx + ny + r.d, r.d);
    int n = nx + ny, m = nx + ny;
    r.macaulay_base = binomial(n + m + 1, m + 1);
    r.log10_value = omega * std::log10(static_cast<double>(r.base));
    r.log10_macaulay = omega * std::log10(static_cast<double>(r.macaulay_base));
    if (omega == std::floor(omega)) {
        r.value = pow_exact(r.base, static_cast<int>(omega));
        r.macaulay_value = pow_exact(r.macaulay_base, static_cast<int>(omega));
    } else {
        r.value = std::to_string(std::pow(10.0, r.log10_value));
        r.macaulay_value = std::to_string(std::pow(10.0, r.log10_macaulay));
    }
    return r;
}

}  // namespace bgb
