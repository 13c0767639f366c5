#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "polynomial.hpp"
#include "random.hpp"

namespace bgb {

enum class Flavor { HomogeneousBilinear, Bihomogeneous, AffineBilinear, AffineGeneral };

inline const char* flavor_name(Flavor f) {
    switch (f) {
        case Flavor::HomogeneousBilinear: return "homogeneous-bilinear";
        case Flavor::Bihomogeneous: return "bihomogeneous";
        case Flavor::AffineBilinear: return "affine-bilinear";
        case Flavor::AffineGeneral: return "affine-general";
    }
    return "?";
}

// Most specific flavor matching the polynomials.
inline Flavor classify(const RingPtr& r, const std::vector<Polynomial>& ps) {
    if (r->layout.homogeneous) {
        bool bih = true, bil = true;
        for (auto& p : ps) {
            if (p.is_zero()) continue;
            if (!p.is_bihomogeneous()) bih = bil = false;
            else if (p.bidegree() != std::make_pair(1, 1)) bil = false;
        }
        if (bil) return Flavor::HomogeneousBilinear;
        if (bih) return Flavor::Bihomogeneous;
        return Flavor::AffineGeneral;
    }
    for (auto& p : ps)
        if (!p.is_affine_bilinear()) return Flavor::AffineGeneral;
    return Flavor::AffineBilinear;
}

struct PolySystem {
    RingPtr ring;
    std::vector<Polynomial> polys;
    Flavor flavor = Flavor::AffineGeneral;

    PolySystem() = default;
    PolySystem(RingPtr r, std::vector<Polynomial> ps) : ring(std::move(r)), polys(std::move(ps)) {
        for (auto& p : polys)
            if (!(*p.ring() == *ring)) throw std::invalid_argument("system polynomials over different rings");
        flavor = classify(ring, polys);
    }

    const VariableLayout& layout() const { return ring->layout; }
    int size() const { return static_cast<int>(polys.size()); }
    PolySystem prefix(int i) const { return PolySystem(ring, std::vector<Polynomial>(polys.begin(), polys.begin() + i)); }
    bool is_homogeneous() const {
        if (!ring->layout.homogeneous) return false;
        for (auto& p : polys)
            if (!p.is_homogeneous()) return false;
        return true;
    }
};

// Dense grid of polynomials; entries expected of degree <= 1.
struct PolyMatrix {
    RingPtr ring;
    int rows = 0, cols = 0;
    std::vector<Polynomial> e;

    PolyMatrix() = default;
    PolyMatrix(RingPtr r, int nr, int nc) : ring(r), rows(nr), cols(nc), e(static_cast<std::size_t>(nr) * nc, Polynomial(r)) {}

    Polynomial& at(int i, int j) { return e[static_cast<std::size_t>(i) * cols + j]; }
    const Polynomial& at(int i, int j) const { return e[static_cast<std::size_t>(i) * cols + j]; }

    PolyMatrix select_rows(const std::vector<int>& rs) const {
        PolyMatrix m(ring, static_cast<int>(rs.size()), cols);
        for (std::size_t a = 0; a < rs.size(); ++a)
            for (int j = 0; j < cols; ++j) m.at(static_cast<int>(a), j) = at(rs[a], j);
        return m;
    }
    bool entries_degree_at_most_one() const {
        for (auto& p : e)
            if (p.degree() > 1) return false;
        return true;
    }
    std::string to_string() const {
        std::string s;
        for (int i = 0; i < rows; ++i) {
            s += "[";
            for (int j = 0; j < cols; ++j) s += (j ? ", " : "") + at(i, j).to_string();
            s += "]\n";
        }
        return s;
    }
};

// Rows f_i, columns d f_i / d v for v in the given block.
inline PolyMatrix jacobian(const PolySystem& F, Block b) {
    auto vars = block_vars(F.layout(), b);
    PolyMatrix J(F.ring, F.size(), static_cast<int>(vars.size()));
    for (int i = 0; i < F.size(); ++i)
        for (std::size_t j = 0; j < vars.size(); ++j) J.at(i, static_cast<int>(j)) = F.polys[i].derivative(vars[j]);
    return J;
}
inline PolyMatrix jacobian_x(const PolySystem& F) { return jacobian(F, Block::X); }
inline PolyMatrix jacobian_y(const PolySystem& F) { return jacobian(F, Block::Y); }

// Affine ring of the same block sizes: x_nx and y_ny are dropped.
inline RingPtr affine_ring_of(const RingPtr& r) {
    return make_ring(VariableLayout::affine(r->layout.nx, r->layout.ny), r->field.characteristic());
}
inline RingPtr homogeneous_ring_of(const RingPtr& r) {
    return make_ring(VariableLayout::bihomogeneous(r->layout.nx, r->layout.ny), r->field.characteristic());
}

// Sets x_nx = y_ny = 1.
inline Polynomial dehomogenize(const Polynomial& f, const RingPtr& affine) {
    const VariableLayout& L = f.layout();
    std::vector<int> map(L.nvars());
    for (int j = 0; j < L.x_count(); ++j) map[L.x_index(j)] = j == L.nx ? -1 : affine->layout.x_index(j);
    for (int j = 0; j < L.y_count(); ++j) map[L.y_index(j)] = j == L.ny ? -1 : affine->layout.y_index(j);
    return f.remap(affine, map);
}

inline PolySystem dehomogenize(const PolySystem& F) {
    if (F.flavor != Flavor::HomogeneousBilinear) throw std::invalid_argument("dehomogenize expects a homogeneous bilinear system");
    auto A = affine_ring_of(F.ring);
    std::vector<Polynomial> out;
    for (auto& f : F.polys) out.push_back(dehomogenize(f, A));
    return PolySystem(A, std::move(out));
}

inline PolyMatrix dehomogenize(const PolyMatrix& M) {
    auto A = affine_ring_of(M.ring);
    PolyMatrix R(A, M.rows, M.cols);
    for (std::size_t k = 0; k < M.e.size(); ++k) R.e[k] = dehomogenize(M.e[k], A);
    return R;
}

// Homogenize each block separately to bidegree (dx, dy).
inline Polynomial bihomogenize(const Polynomial& f, const RingPtr& hom, int dx, int dy) {
    const VariableLayout& A = f.layout();
    const VariableLayout& H = hom->layout;
    std::vector<Term> out;
    for (auto& t : f.terms()) {
        Monomial m(H);
        for (int j = 0; j < A.x_count(); ++j) m.set(H.x_index(j), t.m[A.x_index(j)]);
        for (int j = 0; j < A.y_count(); ++j) m.set(H.y_index(j), t.m[A.y_index(j)]);
        if (t.m.degree_x() > dx || t.m.degree_y() > dy) throw std::invalid_argument("bihomogenize: target bidegree too small");
        m.set(H.x_index(H.nx), dx - t.m.degree_x());
        m.set(H.y_index(H.ny), dy - t.m.degree_y());
        out.push_back({m, t.c});
    }
    return Polynomial(hom, std::move(out));
}

inline PolySystem bihomogenize(const PolySystem& F) {
    if (F.flavor != Flavor::AffineBilinear) throw std::invalid_argument("bihomogenize expects an affine bilinear system");
    auto H = homogeneous_ring_of(F.ring);
    std::vector<Polynomial> out;
    for (auto& f : F.polys) out.push_back(bihomogenize(f, H, 1, 1));
    return PolySystem(H, std::move(out));
}

// One independent uniform coefficient in [0, p) per monomial of bidegree (d1, d2).
inline PolySystem random_system(const RingPtr& r, int m, int d1, int d2, std::uint64_t seed) {
    if (m < 0) throw std::invalid_argument("m must be nonnegative");
    auto mons = enumerate_bidegree(r->layout, d1, d2);
    Rng rng(seed, 0x5e5e);
    std::vector<Polynomial> ps;
    for (int i = 0; i < m; ++i) {
        std::vector<Term> ts;
        for (auto& mo : mons) ts.push_back({mo, static_cast<Scalar>(rng.below(r->field.characteristic()))});
        ps.emplace_back(r, std::move(ts));
    }
    return PolySystem(r, std::move(ps));
}

inline PolySystem random_bilinear(int nx, int ny, int m, std::uint64_t seed, std::uint32_t p = kDefaultPrime) {
    return random_system(make_ring(VariableLayout::bihomogeneous(nx, ny), p), m, 1, 1, seed);
}

// Random affine bilinear system in x_0..x_{nx-1}, y_0..y_{ny-1}: uniform coefficient on every
// monomial of x-degree <= 1 and y-degree <= 1.
inline PolySystem random_affine_bilinear(int nx, int ny, int m, std::uint64_t seed, std::uint32_t p = kDefaultPrime) {
    auto H = random_bilinear(nx, ny, m, seed, p);
    std::vector<Polynomial> ps;
    auto A = affine_ring_of(H.ring);
    for (auto& f : H.polys) ps.push_back(dehomogenize(f, A));
    return PolySystem(A, std::move(ps));
}

}  // namespace bgb
