#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "polynomial.hpp"

namespace bgb {

struct GroebnerBasis {
    RingPtr ring;
    std::vector<Polynomial> polys;
    int degree_bound = -1;  // -1: complete basis
    bool reduced = false;

    std::vector<Monomial> leading_monomials() const { return bgb::leading_monomials(polys); }
};

namespace detail {

struct Divisors {
    std::vector<Monomial> lms;
    std::vector<std::uint32_t> masks;
    std::vector<const Polynomial*> polys;

    void add(const Polynomial& p) {
        lms.push_back(p.lm());
        masks.push_back(p.lm().support_mask());
        polys.push_back(&p);
    }
    const Polynomial* find(const Monomial& m) const {
        std::uint32_t mm = m.support_mask();
        for (std::size_t k = 0; k < lms.size(); ++k)
            if ((masks[k] & ~mm) == 0 && lms[k].divides(m)) return polys[k];
        return nullptr;
    }
};

// tail[start..] := tail[start..] + c * m * g, written into out.
inline void merge_multiple(const RingPtr& R, const std::vector<Term>& a, std::size_t start, const Polynomial& g,
                           const Monomial& m, Scalar c, std::vector<Term>& out) {
    const PrimeField& F = R->field;
    out.clear();
    out.reserve(a.size() - start + g.size());
    std::size_t i = start, j = 0;
    const auto& gt = g.terms();
    Monomial gm;
    std::size_t gm_at = static_cast<std::size_t>(-1);
    while (i < a.size() || j < gt.size()) {
        if (j == gt.size()) {
            out.push_back(a[i++]);
            continue;
        }
        if (gm_at != j) {
            gm = gt[j].m * m;
            gm_at = j;
        }
        int s = i == a.size() ? -1 : R->cmp(a[i].m, gm);
        if (s > 0) {
            out.push_back(a[i++]);
        } else if (s < 0) {
            out.push_back({gm, F.mul(gt[j++].c, c)});
        } else {
            Scalar v = F.add(a[i].c, F.mul(gt[j].c, c));
            if (v) out.push_back({gm, v});
            ++i;
            ++j;
        }
    }
}

// Full reduction of f by the divisor set; remainder is not made monic.
inline Polynomial reduce_full(const Polynomial& f, const Divisors& D, bool tail = true) {
    const RingPtr& R = f.ring();
    const PrimeField& F = R->field;
    std::vector<Term> cur = f.terms(), next, rem;
    std::size_t start = 0;
    while (start < cur.size()) {
        const Term& lt = cur[start];
        const Polynomial* g = D.find(lt.m);
        if (!g) {
            rem.push_back(lt);
            ++start;
            if (!tail) {
                rem.insert(rem.end(), cur.begin() + static_cast<std::ptrdiff_t>(start), cur.end());
                break;
            }
            continue;
        }
        Scalar c = F.neg(F.div(lt.c, g->lc()));
        merge_multiple(R, cur, start, *g, g->lm().quotient_of(lt.m), c, next);
        std::swap(cur, next);
        start = 0;
    }
    return Polynomial(R, std::move(rem));
}

}  // namespace detail

// Remainder of f modulo G (all terms reduced, coefficients not normalized).
inline Polynomial normal_form(const Polynomial& f, const std::vector<Polynomial>& G) {
    detail::Divisors D;
    for (auto& g : G)
        if (!g.is_zero()) D.add(g);
    return detail::reduce_full(f, D);
}
inline Polynomial normal_form(const Polynomial& f, const GroebnerBasis& G) { return normal_form(f, G.polys); }

// Minimal, tail-reduced, monic basis sorted by descending leading monomial.
inline std::vector<Polynomial> interreduce(std::vector<Polynomial> G) {
    G.erase(std::remove_if(G.begin(), G.end(), [](const Polynomial& p) { return p.is_zero(); }), G.end());
    if (G.empty()) return G;
    const RingPtr R = G.front().ring();
    std::sort(G.begin(), G.end(), [&](const Polynomial& a, const Polynomial& b) { return R->cmp(a.lm(), b.lm()) < 0; });
    std::vector<Polynomial> minimal;
    for (auto& g : G) {
        bool red = false;
        for (auto& h : minimal)
            if (h.lm().divides(g.lm())) {
                red = true;
                break;
            }
        if (!red) minimal.push_back(g.monic());
    }
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        detail::Divisors D;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != k) D.add(minimal[j]);
        const auto& t = minimal[k].terms();
        Polynomial tailp(R, std::vector<Term>(t.begin() + 1, t.end()));
        Polynomial nt = detail::reduce_full(tailp, D);
        std::vector<Term> ts{t.front()};
        ts.insert(ts.end(), nt.terms().begin(), nt.terms().end());
        out.emplace_back(R, std::move(ts));
    }
    std::sort(out.begin(), out.end(), [&](const Polynomial& a, const Polynomial& b) { return R->cmp(a.lm(), b.lm()) > 0; });
    return out;
}

struct BuchbergerOptions {
    int degree_bound = -1;                      // drop pairs whose lcm degree exceeds this
    std::pair<int, int> bidegree_bound{-1, -1};  // drop pairs whose lcm bidegree exceeds this (bihomogeneous input)
};

struct BuchbergerStats {
    std::uint64_t pairs_reduced = 0;
    std::uint64_t zero_reductions = 0;
    std::uint64_t pairs_truncated = 0;
};

// Reduced Groebner basis for the ring's term order; normal selection strategy with the
// Gebauer-Moeller pair criteria.
inline GroebnerBasis buchberger(const std::vector<Polynomial>& input, const RingPtr& R, const BuchbergerOptions& opt = {},
                                BuchbergerStats* stats = nullptr) {
    struct Pair {
        int i, j;
        Monomial lcm;
    };
    std::vector<Polynomial> polys;
    std::vector<char> active;
    std::vector<Pair> B;
    BuchbergerStats st;

    auto beyond = [&](const Monomial& m) {
        if (opt.degree_bound >= 0 && m.degree() > opt.degree_bound) return true;
        if (opt.bidegree_bound.first >= 0 && (m.degree_x() > opt.bidegree_bound.first || m.degree_y() > opt.bidegree_bound.second))
            return true;
        return false;
    };

    auto update = [&](int h) {
        const Monomial& lh = polys[h].lm();
        std::vector<int> G;
        for (int k = 0; k < h; ++k)
            if (active[k]) G.push_back(k);
        std::vector<Pair> C;
        for (int g : G) C.push_back({g, h, lh.lcm(polys[g].lm())});
        std::vector<Pair> D;
        for (std::size_t a = 0; a < C.size(); ++a) {
            const Pair& p = C[a];
            bool keep = lh.coprime(polys[p.i].lm());
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < C.size() && keep; ++b)
                    if (C[b].lcm.divides(p.lcm)) keep = false;
                for (auto& q : D)
                    if (keep && q.lcm.divides(p.lcm)) keep = false;
            }
            if (keep) D.push_back(p);
        }
        std::vector<Pair> nb;
        for (auto& p : B) {
            bool drop = lh.divides(p.lcm) && !(lh.lcm(polys[p.i].lm()) == p.lcm) && !(lh.lcm(polys[p.j].lm()) == p.lcm);
            if (!drop) nb.push_back(p);
        }
        for (auto& p : D)
            if (!lh.coprime(polys[p.i].lm())) nb.push_back(p);
        B = std::move(nb);
        for (int g : G)
            if (lh.divides(polys[g].lm())) active[g] = 0;
        active[h] = 1;
    };

    auto divisors = [&]() {
        detail::Divisors D;
        for (std::size_t k = 0; k < polys.size(); ++k)
            if (active[k]) D.add(polys[k]);
        return D;
    };

    // Seed: reduce inputs against each other in ascending order.
    std::vector<Polynomial> in;
    for (auto& p : input) {
        if (!(*p.ring() == *R)) throw std::invalid_argument("buchberger: input over a different ring");
        if (!p.is_zero()) in.push_back(p);
    }
    std::sort(in.begin(), in.end(), [&](const Polynomial& a, const Polynomial& b) {
        if (a.lm().degree() != b.lm().degree()) return a.lm().degree() < b.lm().degree();
        return R->cmp(a.lm(), b.lm()) < 0;
    });
    polys.reserve(in.size() * 4 + 16);
    for (auto& p : in) {
        auto D = divisors();
        Polynomial r = detail::reduce_full(p, D);
        if (r.is_zero()) continue;
        polys.push_back(r.monic());
        active.push_back(0);
        update(static_cast<int>(polys.size()) - 1);
    }

    while (!B.empty()) {
        auto sel = std::min_element(B.begin(), B.end(), [&](const Pair& a, const Pair& b) {
            if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
            return R->cmp(a.lcm, b.lcm) < 0;
        });
        Pair p = *sel;
        B.erase(sel);
        if (beyond(p.lcm)) {
            ++st.pairs_truncated;
            continue;
        }
        const Polynomial& f = polys[p.i];
        const Polynomial& g = polys[p.j];
        Polynomial s = f.mul_term(f.lm().quotient_of(p.lcm)).add_multiple(g, g.lm().quotient_of(p.lcm), R->field.neg(1));
        ++st.pairs_reduced;
        auto D = divisors();
        Polynomial r = detail::reduce_full(s, D);
        if (r.is_zero()) {
            ++st.zero_reductions;
            continue;
        }
        polys.push_back(r.monic());
        active.push_back(0);
        update(static_cast<int>(polys.size()) - 1);
    }

    std::vector<Polynomial> G;
    for (std::size_t k = 0; k < polys.size(); ++k)
        if (active[k]) G.push_back(polys[k]);
    GroebnerBasis out;
    out.ring = R;
    out.polys = interreduce(std::move(G));
    out.reduced = true;
    out.degree_bound = opt.degree_bound;
    if (stats) *stats = st;
    return out;
}

inline GroebnerBasis buchberger(const std::vector<Polynomial>& input, const BuchbergerOptions& opt = {}, BuchbergerStats* stats = nullptr) {
    if (input.empty()) throw std::invalid_argument("buchberger: empty input needs an explicit ring");
    return buchberger(input, input.front().ring(), opt, stats);
}

// Buchberger's criterion: every S-polynomial of a non-coprime pair reduces to zero modulo G.
inline bool is_groebner_basis(const std::vector<Polynomial>& G) {
    std::vector<const Polynomial*> g;
    for (auto& p : G)
        if (!p.is_zero()) g.push_back(&p);
    if (g.empty()) return true;
    const RingPtr& R = g.front()->ring();
    detail::Divisors D;
    for (auto* p : g) D.add(*p);
    for (std::size_t a = 0; a < g.size(); ++a)
        for (std::size_t b = a + 1; b < g.size(); ++b) {
            const Monomial& la = g[a]->lm();
            const Monomial& lb = g[b]->lm();
            if (la.coprime(lb)) continue;
            Monomial l = la.lcm(lb);
            Polynomial s = g[a]->mul_term(la.quotient_of(l)).scaled(g[b]->lc())
                               .add_multiple(*g[b], lb.quotient_of(l), R->field.neg(g[a]->lc()));
            if (!detail::reduce_full(s, D).is_zero()) return false;
        }
    return true;
}

// Is every monomial of the given degree in the variable list divisible by some LM?
inline bool all_monomials_in_lm(const std::vector<Monomial>& lms, const std::vector<Monomial>& mons) {
    for (auto& m : mons) {
        bool hit = false;
        for (auto& l : lms)
            if (l.divides(m)) {
                hit = true;
                break;
            }
        if (!hit) return false;
    }
    return true;
}

inline bool divisible_by_any(const std::vector<Monomial>& lms, const Monomial& m) {
    for (auto& l : lms)
        if (l.divides(m)) return true;
    return false;
}

}  // namespace bgb
