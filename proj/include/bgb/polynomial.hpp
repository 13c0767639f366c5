#pragma once

#include <algorithm>
#include <cctype>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "field.hpp"
#include "monomial.hpp"

namespace bgb {

struct PolyRing {
    PrimeField field;
    VariableLayout layout;
    OrderKind order = OrderKind::Grevlex;

    PolyRing(PrimeField f, VariableLayout L, OrderKind o = OrderKind::Grevlex) : field(f), layout(L), order(o) {
        layout.validate();
    }
    int cmp(const Monomial& a, const Monomial& b) const { return monomial_cmp(order, a, b); }
    bool operator==(const PolyRing& o) const { return field == o.field && layout == o.layout && order == o.order; }
};

using RingPtr = std::shared_ptr<const PolyRing>;

inline RingPtr make_ring(const VariableLayout& L, std::uint32_t p = kDefaultPrime, OrderKind o = OrderKind::Grevlex) {
    return std::make_shared<const PolyRing>(PrimeField(p), L, o);
}

struct Term {
    Monomial m;
    Scalar c;
};

// Sparse polynomial; terms strictly descending in the ring order, coefficients nonzero.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(RingPtr r) : ring_(std::move(r)) {}

    // Takes terms in any order; sorts and merges duplicates.
    Polynomial(RingPtr r, std::vector<Term> terms) : ring_(std::move(r)), t_(std::move(terms)) { normalize(); }

    static Polynomial constant(RingPtr r, Scalar c) {
        Polynomial p(r);
        c = r->field.reduce(c);
        if (c) p.t_.push_back({Monomial(r->layout), c});
        return p;
    }
    static Polynomial monomial(RingPtr r, const Monomial& m, Scalar c = 1) {
        Polynomial p(r);
        if (c % r->field.characteristic()) p.t_.push_back({m, c % r->field.characteristic()});
        return p;
    }
    static Polynomial variable(RingPtr r, int v) { return monomial(r, Monomial::variable(r->layout, v)); }

    const RingPtr& ring() const { return ring_; }
    const PrimeField& field() const { return ring_->field; }
    const VariableLayout& layout() const { return ring_->layout; }
    const std::vector<Term>& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }
    bool is_zero() const { return t_.empty(); }
    const Term& lead() const {
        if (t_.empty()) throw std::logic_error("leading term of zero polynomial");
        return t_.front();
    }
    const Monomial& lm() const { return lead().m; }
    Scalar lc() const { return lead().c; }

    int degree() const {
        int d = -1;
        for (auto& t : t_) d = std::max(d, t.m.degree());
        return d;
    }
    bool is_homogeneous() const {
        for (auto& t : t_)
            if (t.m.degree() != t_.front().m.degree()) return false;
        return true;
    }
    bool is_bihomogeneous() const {
        for (auto& t : t_)
            if (t.m.bidegree() != t_.front().m.bidegree()) return false;
        return true;
    }
    std::pair<int, int> bidegree() const {
        if (t_.empty() || !is_bihomogeneous()) throw std::logic_error("polynomial has no single bidegree");
        return t_.front().m.bidegree();
    }
    bool is_bilinear() const { return !t_.empty() && is_bihomogeneous() && bidegree() == std::make_pair(1, 1); }
    // Every term has x-degree <= 1 and y-degree <= 1.
    bool is_affine_bilinear() const {
        for (auto& t : t_)
            if (t.m.degree_x() > 1 || t.m.degree_y() > 1) return false;
        return true;
    }
    bool uses_only(Block b) const {
        for (auto& t : t_) {
            if (b == Block::X && t.m.degree_y()) return false;
            if (b == Block::Y && t.m.degree_x()) return false;
        }
        return true;
    }

    Scalar coefficient(const Monomial& m) const {
        for (auto& t : t_)
            if (t.m == m) return t.c;
        return 0;
    }

    Polynomial operator+(const Polynomial& o) const { return combine(o, 1); }
    Polynomial operator-(const Polynomial& o) const { return combine(o, field().neg(1)); }
    Polynomial operator-() const { return scaled(field().neg(1)); }
    bool operator==(const Polynomial& o) const {
        if (t_.size() != o.t_.size()) return false;
        for (std::size_t k = 0; k < t_.size(); ++k)
            if (!(t_[k].m == o.t_[k].m) || t_[k].c != o.t_[k].c) return false;
        return true;
    }
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    Polynomial scaled(Scalar c) const {
        Polynomial r(ring_);
        c %= field().characteristic();
        if (!c) return r;
        r.t_.reserve(t_.size());
        for (auto& t : t_) r.t_.push_back({t.m, field().mul(t.c, c)});
        return r;
    }
    Polynomial monic() const { return is_zero() ? *this : scaled(field().inv(lc())); }

    // Multiplication by c * m preserves order (monomial orders are multiplicative).
    Polynomial mul_term(const Monomial& m, Scalar c = 1) const {
        Polynomial r(ring_);
        c %= field().characteristic();
        if (!c) return r;
        r.t_.reserve(t_.size());
        for (auto& t : t_) r.t_.push_back({t.m * m, field().mul(t.c, c)});
        return r;
    }

    Polynomial operator*(const Polynomial& o) const {
        check_ring(o);
        Polynomial acc(ring_);
        for (auto& t : o.t_) acc = acc + mul_term(t.m, t.c);
        return acc;
    }

    // this + c * m * g, merged in one pass.
    Polynomial add_multiple(const Polynomial& g, const Monomial& m, Scalar c) const {
        check_ring(g);
        Polynomial r(ring_);
        r.t_.reserve(t_.size() + g.t_.size());
        std::size_t a = 0, b = 0;
        const PrimeField& F = field();
        Monomial gm;
        std::size_t gm_at = static_cast<std::size_t>(-1);
        while (a < t_.size() || b < g.t_.size()) {
            if (b == g.t_.size()) {
                r.t_.push_back(t_[a++]);
                continue;
            }
            if (gm_at != b) {
                gm = g.t_[b].m * m;
                gm_at = b;
            }
            int s = a == t_.size() ? -1 : ring_->cmp(t_[a].m, gm);
            if (s > 0) {
                r.t_.push_back(t_[a++]);
            } else if (s < 0) {
                r.t_.push_back({gm, F.mul(g.t_[b++].c, c)});
            } else {
                Scalar v = F.add(t_[a].c, F.mul(g.t_[b].c, c));
                if (v) r.t_.push_back({gm, v});
                ++a;
                ++b;
            }
        }
        return r;
    }

    Polynomial derivative(int v) const {
        std::vector<Term> out;
        for (auto& t : t_) {
            int e = t.m[v];
            if (!e) continue;
            Scalar c = field().mul(t.c, field().reduce(e));
            if (!c) continue;
            Monomial m = t.m;
            m.set(v, e - 1);
            out.push_back({m, c});
        }
        return Polynomial(ring_, std::move(out));
    }

    Scalar evaluate(const std::vector<Scalar>& point) const {
        const PrimeField& F = field();
        Scalar s = 0;
        for (auto& t : t_) {
            Scalar v = t.c;
            for (int k = 0; k < t.m.nvars(); ++k)
                if (t.m[k]) v = F.mul(v, F.pow(point[k], t.m[k]));
            s = F.add(s, v);
        }
        return s;
    }

    // Rebuild in another ring using a variable map (old index -> new index, or -1 to set the variable to 1).
    Polynomial remap(RingPtr target, const std::vector<int>& varmap) const {
        std::vector<Term> out;
        out.reserve(t_.size());
        for (auto& t : t_) {
            Monomial m(target->layout);
            for (int v = 0; v < t.m.nvars(); ++v) {
                if (!t.m[v]) continue;
                if (varmap[v] < 0) continue;
                m.set(varmap[v], m[varmap[v]] + t.m[v]);
            }
            out.push_back({m, t.c});
        }
        return Polynomial(std::move(target), std::move(out));
    }
    // Same variables, different term order (or prime-compatible ring).
    Polynomial in_ring(RingPtr target) const {
        if (!(target->layout == layout())) throw std::invalid_argument("in_ring: layout mismatch");
        return Polynomial(std::move(target), t_);
    }

    std::string to_string() const {
        if (t_.empty()) return "0";
        std::string s;
        bool first = true;
        for (auto& t : t_) {
            std::int64_t c = field().signed_value(t.c);
            bool neg = c < 0;
            std::uint64_t a = neg ? static_cast<std::uint64_t>(-c) : static_cast<std::uint64_t>(c);
            if (neg) s += '-';
            else if (!first) s += '+';
            first = false;
            bool constant = t.m.degree() == 0;
            if (a != 1 || constant) {
                s += std::to_string(a);
                if (!constant) s += '*';
            }
            if (!constant) s += t.m.to_string(layout());
        }
        return s;
    }

    void check_ring(const Polynomial& o) const {
        if (!ring_ || !o.ring_ || !(*ring_ == *o.ring_)) throw std::invalid_argument("polynomials over different rings");
    }

private:
    void normalize() {
        const PrimeField& F = field();
        for (auto& t : t_) t.c %= F.characteristic();
        std::sort(t_.begin(), t_.end(), [this](const Term& a, const Term& b) { return ring_->cmp(a.m, b.m) > 0; });
        std::vector<Term> out;
        out.reserve(t_.size());
        for (auto& t : t_) {
            if (!out.empty() && out.back().m == t.m) {
                out.back().c = F.add(out.back().c, t.c);
            } else {
                if (!out.empty() && out.back().c == 0) out.pop_back();
                out.push_back(t);
            }
        }
        if (!out.empty() && out.back().c == 0) out.pop_back();
        t_ = std::move(out);
    }

    Polynomial combine(const Polynomial& o, Scalar c) const { return add_multiple(o, Monomial(layout()), c); }

    RingPtr ring_;
    std::vector<Term> t_;
};

inline std::vector<Monomial> leading_monomials(const std::vector<Polynomial>& ps) {
    std::vector<Monomial> out;
    for (auto& p : ps)
        if (!p.is_zero()) out.push_back(p.lm());
    return out;
}

// ---------------------------------------------------------------- text format

struct ParseError : std::runtime_error {
    int line, column;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("parse error at line " + std::to_string(l) + ", column " + std::to_string(c) + ": " + msg),
          line(l),
          column(c) {}
};

namespace detail {
class PolyParser {
public:
    PolyParser(RingPtr r, const std::string& s, int line) : r_(std::move(r)), s_(s), line_(line) {}

    Polynomial parse() {
        std::vector<Term> terms;
        skip();
        if (pos_ == s_.size()) fail("empty polynomial");
        bool first = true;
        while (true) {
            skip();
            if (pos_ == s_.size()) break;
            bool neg = false;
            if (peek() == '+' || peek() == '-') {
                neg = peek() == '-';
                ++pos_;
                skip();
            } else if (!first) {
                fail("expected '+' or '-'");
            }
            terms.push_back(term(neg));
            first = false;
        }
        return Polynomial(r_, std::move(terms));
    }

private:
    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
    void skip() {
        while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t' || s_[pos_] == '\r')) ++pos_;
    }
    [[noreturn]] void fail(const std::string& m) const { throw ParseError(line_, static_cast<int>(pos_) + 1, m); }

    std::uint64_t number() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
            if (v > (1ull << 62)) fail("integer too large");
            ++pos_;
        }
        return v;
    }

    Term term(bool neg) {
        const PrimeField& F = r_->field;
        Scalar c = 1;
        Monomial m(r_->layout);
        bool any = false;
        while (true) {
            skip();
            char ch = peek();
            if (std::isdigit(static_cast<unsigned char>(ch))) {
                c = F.mul(c, F.reduce(static_cast<std::int64_t>(number() % F.characteristic())));
            } else if (ch == 'x' || ch == 'y') {
                std::size_t at = pos_;
                ++pos_;
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected variable index");
                std::uint64_t idx = number();
                int cnt = ch == 'x' ? r_->layout.x_count() : r_->layout.y_count();
                if (idx >= static_cast<std::uint64_t>(cnt)) {
                    pos_ = at;
                    fail(std::string("variable ") + ch + std::to_string(idx) + " not in layout");
                }
                int v = ch == 'x' ? r_->layout.x_index(static_cast<int>(idx)) : r_->layout.y_index(static_cast<int>(idx));
                std::uint64_t e = 1;
                skip();
                if (peek() == '^') {
                    ++pos_;
                    skip();
                    e = number();
                }
                if (m[v] + e > 255) fail("exponent too large");
                m.set(v, m[v] + static_cast<int>(e));
            } else {
                if (!any) fail("expected coefficient or variable");
                break;
            }
            any = true;
            skip();
            if (peek() == '*') {
                ++pos_;
                continue;
            }
            char nx = peek();
            if (!(std::isdigit(static_cast<unsigned char>(nx)) || nx == 'x' || nx == 'y')) break;
        }
        if (neg) c = F.neg(c);
        return {m, c};
    }

    RingPtr r_;
    const std::string& s_;
    int line_;
    std::size_t pos_ = 0;
};
}  // namespace detail

inline Polynomial parse_polynomial(const RingPtr& r, const std::string& s, int line = 1) {
    return detail::PolyParser(r, s, line).parse();
}

// One polynomial per line; blank lines and lines starting with '#' are skipped.
inline std::vector<Polynomial> parse_polynomials(const RingPtr& r, const std::string& text) {
    std::vector<Polynomial> out;
    std::istringstream in(text);
    std::string line;
    int ln = 0;
    while (std::getline(in, line)) {
        ++ln;
        std::size_t k = line.find_first_not_of(" \t\r");
        if (k == std::string::npos || line[k] == '#') continue;
        out.push_back(parse_polynomial(r, line, ln));
    }
    return out;
}

inline std::string format_polynomials(const std::vector<Polynomial>& ps) {
    std::string s;
    for (auto& p : ps) s += p.to_string() + "\n";
    return s;
}

}  // namespace bgb
