#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bgb {

inline constexpr int kMaxVars = 32;

// Two variable blocks, x first then y.  In the homogeneous setting the blocks
// are x_0..x_nx and y_0..y_ny; in the affine setting x_0..x_{nx-1}, y_0..y_{ny-1}.
struct VariableLayout {
    int nx = 0;
    int ny = 0;
    bool homogeneous = true;

    static VariableLayout bihomogeneous(int nx, int ny) { return {nx, ny, true}; }
    static VariableLayout affine(int nx, int ny) { return {nx, ny, false}; }

    int x_count() const { return homogeneous ? nx + 1 : nx; }
    int y_count() const { return homogeneous ? ny + 1 : ny; }
    int nvars() const { return x_count() + y_count(); }
    int x_index(int j) const { return j; }
    int y_index(int j) const { return x_count() + j; }
    bool is_x(int v) const { return v < x_count(); }

    std::string var_name(int v) const {
        return is_x(v) ? "x" + std::to_string(v) : "y" + std::to_string(v - x_count());
    }

    void validate() const {
        if (nx < 0 || ny < 0) throw std::invalid_argument("block sizes must be nonnegative");
        if (nvars() > kMaxVars) throw std::invalid_argument("too many variables");
        if (nvars() == 0) throw std::invalid_argument("empty variable layout");
    }

    bool operator==(const VariableLayout& o) const {
        return nx == o.nx && ny == o.ny && homogeneous == o.homogeneous;
    }
};

// Exponent vector with cached total degree and x-block degree.
class Monomial {
public:
    Monomial() = default;
    Monomial(int nvars, int nxvars) : nvars_(static_cast<std::uint8_t>(nvars)), nxv_(static_cast<std::uint8_t>(nxvars)) {
        if (nvars < 0 || nvars > kMaxVars || nxvars < 0 || nxvars > nvars)
            throw std::invalid_argument("bad monomial shape");
        e_.fill(0);
    }
    explicit Monomial(const VariableLayout& L) : Monomial(L.nvars(), L.x_count()) {}

    static Monomial from_exponents(const VariableLayout& L, const std::vector<int>& ex) {
        if (static_cast<int>(ex.size()) != L.nvars()) throw std::invalid_argument("exponent vector length mismatch");
        Monomial m(L);
        for (int v = 0; v < L.nvars(); ++v) m.set(v, ex[v]);
        return m;
    }
    static Monomial variable(const VariableLayout& L, int v) {
        Monomial m(L);
        m.set(v, 1);
        return m;
    }

    int nvars() const { return nvars_; }
    int x_vars() const { return nxv_; }
    int operator[](int v) const { return e_[v]; }
    int degree() const { return deg_; }
    int degree_x() const { return degx_; }
    int degree_y() const { return deg_ - degx_; }
    std::pair<int, int> bidegree() const { return {degx_, deg_ - degx_}; }

    void set(int v, int e) {
        if (e < 0 || e > 255) throw std::out_of_range("exponent out of range");
        int d = e - e_[v];
        e_[v] = static_cast<std::uint8_t>(e);
        deg_ = static_cast<std::uint16_t>(deg_ + d);
        if (v < nxv_) degx_ = static_cast<std::uint16_t>(degx_ + d);
    }

    // Largest variable index present, -1 for the constant monomial.
    int last_var() const {
        for (int v = nvars_ - 1; v >= 0; --v)
            if (e_[v]) return v;
        return -1;
    }

    bool compatible(const Monomial& o) const { return nvars_ == o.nvars_ && nxv_ == o.nxv_; }
    void check_compatible(const Monomial& o) const {
        if (!compatible(o)) throw std::invalid_argument("monomials over different variable layouts");
    }

    Monomial operator*(const Monomial& o) const {
        check_compatible(o);
        Monomial r = *this;
        for (int v = 0; v < nvars_; ++v) {
            int s = e_[v] + o.e_[v];
            if (s > 255) throw std::overflow_error("exponent overflow");
            r.e_[v] = static_cast<std::uint8_t>(s);
        }
        r.deg_ = static_cast<std::uint16_t>(deg_ + o.deg_);
        r.degx_ = static_cast<std::uint16_t>(degx_ + o.degx_);
        return r;
    }
    Monomial times_var(int v) const {
        Monomial r = *this;
        r.set(v, e_[v] + 1);
        return r;
    }
    bool divides(const Monomial& o) const {
        if (deg_ > o.deg_) return false;
        for (int v = 0; v < nvars_; ++v)
            if (e_[v] > o.e_[v]) return false;
        return true;
    }
    // o / this; requires divides(o).
    Monomial quotient_of(const Monomial& o) const {
        Monomial r = o;
        for (int v = 0; v < nvars_; ++v) r.e_[v] = static_cast<std::uint8_t>(o.e_[v] - e_[v]);
        r.deg_ = static_cast<std::uint16_t>(o.deg_ - deg_);
        r.degx_ = static_cast<std::uint16_t>(o.degx_ - degx_);
        return r;
    }
    Monomial lcm(const Monomial& o) const {
        Monomial r(nvars_, nxv_);
        for (int v = 0; v < nvars_; ++v) r.set(v, std::max(e_[v], o.e_[v]));
        return r;
    }
    bool coprime(const Monomial& o) const {
        for (int v = 0; v < nvars_; ++v)
            if (e_[v] && o.e_[v]) return false;
        return true;
    }
    // Bit v set iff exponent of v is nonzero; cheap divisibility pre-filter.
    std::uint32_t support_mask() const {
        std::uint32_t m = 0;
        for (int v = 0; v < nvars_; ++v)
            if (e_[v]) m |= 1u << v;
        return m;
    }

    bool operator==(const Monomial& o) const {
        return nvars_ == o.nvars_ && nxv_ == o.nxv_ && e_ == o.e_;
    }

    std::size_t hash() const {
        std::uint64_t h = 1469598103934665603ull;
        for (int v = 0; v < nvars_; ++v) {
            h ^= e_[v];
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }

    std::string to_string(const VariableLayout& L) const {
        if (deg_ == 0) return "1";
        std::string s;
        for (int v = 0; v < nvars_; ++v) {
            if (!e_[v]) continue;
            if (!s.empty()) s += '*';
            s += L.var_name(v);
            if (e_[v] > 1) s += "^" + std::to_string(e_[v]);
        }
        return s;
    }

private:
    std::array<std::uint8_t, kMaxVars> e_{};
    std::uint8_t nvars_ = 0;
    std::uint8_t nxv_ = 0;
    std::uint16_t deg_ = 0;
    std::uint16_t degx_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

// Grevlex over the first n variables only: degree, then reverse lex.
inline int grevlex_cmp_range(const Monomial& a, const Monomial& b, int lo, int hi) {
    int da = 0, db = 0;
    for (int v = lo; v < hi; ++v) {
        da += a[v];
        db += b[v];
    }
    if (da != db) return da < db ? -1 : 1;
    for (int v = hi - 1; v >= lo; --v)
        if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
    return 0;
}

// Total grevlex with x_0 > ... > x_nx > y_0 > ... > y_ny.  Returns -1, 0, 1.
inline int grevlex_cmp(const Monomial& a, const Monomial& b) {
    a.check_compatible(b);
    if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
    for (int v = a.nvars() - 1; v >= 0; --v)
        if (a[v] != b[v]) return a[v] > b[v] ? -1 : 1;
    return 0;
}

// Grevlex, plus two block-elimination refinements used by the Buchberger oracle.
enum class OrderKind { Grevlex, EliminateX, EliminateY };

inline const char* order_name(OrderKind k) {
    switch (k) {
        case OrderKind::Grevlex: return "grevlex";
        case OrderKind::EliminateX: return "block(x>>y)";
        case OrderKind::EliminateY: return "block(y>>x)";
    }
    return "?";
}

inline int monomial_cmp(OrderKind k, const Monomial& a, const Monomial& b) {
    if (k == OrderKind::Grevlex) return grevlex_cmp(a, b);
    a.check_compatible(b);
    int nx = a.x_vars(), n = a.nvars();
    if (k == OrderKind::EliminateX) {
        int c = grevlex_cmp_range(a, b, 0, nx);
        return c ? c : grevlex_cmp_range(a, b, nx, n);
    }
    int c = grevlex_cmp_range(a, b, nx, n);
    return c ? c : grevlex_cmp_range(a, b, 0, nx);
}

enum class Block { X, Y, All };

namespace detail {
inline void enum_rec(std::vector<int>& vars, std::size_t pos, int left, Monomial& cur, std::vector<Monomial>& out) {
    if (pos + 1 == vars.size()) {
        cur.set(vars[pos], left);
        out.push_back(cur);
        cur.set(vars[pos], 0);
        return;
    }
    for (int e = left; e >= 0; --e) {
        cur.set(vars[pos], e);
        enum_rec(vars, pos + 1, left - e, cur, out);
    }
    cur.set(vars[pos], 0);
}
}  // namespace detail

inline void sort_descending(std::vector<Monomial>& ms, OrderKind k = OrderKind::Grevlex) {
    std::sort(ms.begin(), ms.end(), [k](const Monomial& a, const Monomial& b) { return monomial_cmp(k, a, b) > 0; });
}

// Monomials of degree d in an explicit variable list, descending grevlex.
inline std::vector<Monomial> monomials_in_vars(const VariableLayout& L, std::vector<int> vars, int d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    if (vars.empty()) {
        if (d == 0) out.emplace_back(L);
        return out;
    }
    Monomial cur(L);
    detail::enum_rec(vars, 0, d, cur, out);
    sort_descending(out);
    return out;
}

// Monomials^x_n(d) / Monomials^y_n(d): block variables with local index <= max_index.
// Block::All ignores max_index and returns every degree-d monomial.
inline std::vector<Monomial> enumerate_monomials(const VariableLayout& L, Block block, int max_index, int d) {
    std::vector<int> vars;
    if (block == Block::All) {
        for (int v = 0; v < L.nvars(); ++v) vars.push_back(v);
    } else {
        if (max_index < 0) return {};
        int cnt = block == Block::X ? L.x_count() : L.y_count();
        if (max_index >= cnt) throw std::invalid_argument("max_index beyond block");
        for (int j = 0; j <= max_index; ++j) vars.push_back(block == Block::X ? L.x_index(j) : L.y_index(j));
    }
    return monomials_in_vars(L, vars, d);
}

// Monomials of bidegree (d1, d2), descending grevlex.
inline std::vector<Monomial> enumerate_bidegree(const VariableLayout& L, int d1, int d2) {
    auto xs = enumerate_monomials(L, Block::X, L.x_count() - 1, d1);
    auto ys = enumerate_monomials(L, Block::Y, L.y_count() - 1, d2);
    std::vector<Monomial> out;
    out.reserve(xs.size() * ys.size());
    for (auto& a : xs)
        for (auto& b : ys) out.push_back(a * b);
    sort_descending(out);
    return out;
}

// All monomials of degree <= d, descending.
inline std::vector<Monomial> monomials_up_to(const VariableLayout& L, std::vector<int> vars, int d) {
    std::vector<Monomial> out;
    for (int e = d; e >= 0; --e) {
        auto part = monomials_in_vars(L, vars, e);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

inline std::vector<int> block_vars(const VariableLayout& L, Block b) {
    std::vector<int> v;
    if (b != Block::Y)
        for (int j = 0; j < L.x_count(); ++j) v.push_back(L.x_index(j));
    if (b != Block::X)
        for (int j = 0; j < L.y_count(); ++j) v.push_back(L.y_index(j));
    return v;
}

}  // namespace bgb
