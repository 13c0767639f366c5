#pragma once

#include <algorithm>
#include <climits>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <mutex>
#include <thread>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "buchberger.hpp"
#include "macaulay.hpp"
#include "minors.hpp"
#include "system.hpp"

namespace bgb {

enum class CriterionMode { Classical, Extended };
enum class EngineKind { Homogeneous, Multihomogeneous };

inline const char* mode_name(CriterionMode m) { return m == CriterionMode::Classical ? "classical" : "extended"; }
inline const char* engine_name(EngineKind e) { return e == EngineKind::Homogeneous ? "hom" : "multihom"; }

// Leading monomials of reduced minor sets, keyed by generator index (1-based).
struct CriterionTable {
    std::map<int, std::vector<Monomial>> x_side, y_side;
    // The reduced minors themselves, for soundness checks: (i, h) with h * f_i in I_{i-1}.
    std::vector<std::pair<int, Polynomial>> witnesses;
    std::uint64_t ops = 0;

    bool contains(int i, const Monomial& t) const {
        for (const auto* side : {&x_side, &y_side}) {
            auto it = side->find(i);
            if (it == side->end()) continue;
            for (auto& m : it->second)
                if (m == t) return true;
        }
        return false;
    }
    std::size_t total_entries() const {
        std::size_t n = 0;
        for (auto& [i, v] : x_side) n += v.size();
        for (auto& [i, v] : y_side) n += v.size();
        return n;
    }
};

// x-side entry i: LMs of reduce_set(MaxMinors(jac_y(F_{i-1})), n_y+1), i > n_y+1 (x-monomials).
// y-side entry i: LMs of reduce_set(MaxMinors(jac_x(F_{i-1})), n_x+1), i > n_x+1 (y-monomials).
inline CriterionTable bl_criterion_table(const PolySystem& F) {
    if (F.flavor != Flavor::HomogeneousBilinear) throw std::invalid_argument("criterion table needs a homogeneous bilinear system");
    const VariableLayout& L = F.layout();
    int m = F.size();
    if (m > L.nx + L.ny) throw std::invalid_argument("criterion table needs m <= n_x + n_y");
    CriterionTable T;
    PolyMatrix Jx = jacobian_x(F), Jy = jacobian_y(F);
    for (int i = 2; i <= m; ++i) {
        std::vector<int> prev;
        for (int r = 0; r < i - 1; ++r) prev.push_back(r);
        if (i > L.ny + 1) {
            auto hs = reduce_set(maximal_minors(Jy.select_rows(prev)), L.ny + 1, F.ring, &T.ops);
            for (auto& h : hs) {
                T.x_side[i].push_back(h.lm());
                T.witnesses.push_back({i, h});
            }
        }
        if (i > L.nx + 1) {
            auto hs = reduce_set(maximal_minors(Jx.select_rows(prev)), L.nx + 1, F.ring, &T.ops);
            for (auto& h : hs) {
                T.y_side[i].push_back(h.lm());
                T.witnesses.push_back({i, h});
            }
        }
    }
    return T;
}

inline std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::int64_t j = 1; j <= k; ++j) r = r * static_cast<std::uint64_t>(n - k + j) / static_cast<std::uint64_t>(j);
    return r;
}

// Sum over i of |Monomials^x_{i-n_y-2}(n_y+1)| + |Monomials^y_{i-n_x-2}(n_x+1)|.
inline std::uint64_t predicted_rtz_count(int nx, int ny, int m) {
    std::uint64_t s = 0;
    for (int i = ny + 2; i <= m; ++i) s += binomial(i - ny - 2 + ny + 1, ny + 1);
    for (int i = nx + 2; i <= m; ++i) s += binomial(i - nx - 2 + nx + 1, nx + 1);
    return s;
}

struct RtzRecord {
    Signature sig;
    int degree;
};

struct BlockShape {
    int degree, d1, d2, index;  // d1 = -1 for a whole-degree block
    int rows, cols, rank_after, zero_rows;
    std::uint64_t ops;
};

struct F5Stats {
    std::vector<RtzRecord> reductions_to_zero;
    std::uint64_t rows_skipped_classical = 0;
    std::uint64_t rows_skipped_extended = 0;
    std::uint64_t rows_built = 0;
    std::uint64_t field_ops = 0;
    std::uint64_t criterion_ops = 0;
    std::uint64_t postprocess_ops = 0;  // back-substitution for the reduced basis, not part of field_ops
    std::vector<BlockShape> shapes;
    // skipped / zero-row counts per (i, d)
    std::map<std::pair<int, int>, std::pair<std::uint64_t, std::uint64_t>> per_index_degree;
};

struct F5Options {
    int D = 0;
    CriterionMode mode = CriterionMode::Classical;
    EngineKind engine = EngineKind::Homogeneous;
    int threads = 1;
};

struct F5Result {
    GroebnerBasis gb;
    F5Stats stats;
    // For each degree d <= D: leading monomial -> smallest generator index whose rows reach it.
    std::vector<std::unordered_map<Monomial, int, MonomialHash>> lm_owner;
    CriterionTable table;
    // Rows whose leading monomial is not x_k times the parent's (plus the generator rows).
    std::vector<Polynomial> collected;
};

namespace detail {

class F5Run {
public:
    F5Run(const PolySystem& F, const F5Options& o) : F_(F), opt_(o), L_(F.layout()), n_(L_.nvars()) {}

    F5Result run() {
        validate();
        if (opt_.mode == CriterionMode::Extended) res_.table = bl_criterion_table(F_);
        res_.stats.criterion_ops = res_.table.ops;
        build_monomials();
        res_.lm_owner.resize(opt_.D + 1);
        owner_.resize(opt_.D + 1);
        levels_.resize(opt_.D + 1);
        for (int d = 0; d <= opt_.D; ++d) owner_[d].assign(mons_[d].size(), INT_MAX);
        for (int d = 0; d <= opt_.D; ++d) {
            setup_level(d);
            for (int i = 1; i <= F_.size(); ++i) step(d, i);
            for (std::size_t g = 0; g < mons_[d].size(); ++g)
                if (owner_[d][g] != INT_MAX) res_.lm_owner[d].emplace(mons_[d][g], owner_[d][g]);
            finalize_degree(d);
            if (d >= 1) levels_[d - 1].blocks.clear();  // no longer needed
        }
        res_.gb.ring = F_.ring;
        std::sort(reduced_.begin(), reduced_.end(), [](const Polynomial& a, const Polynomial& b) { return grevlex_cmp(a.lm(), b.lm()) > 0; });
        res_.gb.polys = std::move(reduced_);
        res_.gb.degree_bound = opt_.D;
        res_.gb.reduced = true;
        res_.collected = std::move(collected_);
        return std::move(res_);
    }

private:
    struct Row {
        int index;      // generator index i
        int sig_deg;    // degree of the signature monomial
        int sig_idx;    // its position in mons_[sig_deg]
        int block;
        int stored;     // row number inside the block echelon, -1 for zero rows
        int lead_global;
    };
    struct BlockData {
        std::vector<int> cols;  // global monomial indices, descending
        IncrementalEchelon ech;
        BlockData(const PrimeField& F, std::vector<int> c) : cols(std::move(c)), ech(F, static_cast<int>(cols.size())) {}
    };
    struct Level {
        std::vector<int> block_of;  // global index -> block
        std::vector<int> local_of;  // global index -> local column
        std::vector<BlockData> blocks;
        std::vector<Row> rows;
    };

    void validate() {
        if (!F_.is_homogeneous()) throw std::invalid_argument("matrix_f5 needs homogeneous polynomials");
        for (auto& f : F_.polys)
            if (f.is_zero()) throw std::invalid_argument("matrix_f5: zero generator");
        for (int i = 1; i < F_.size(); ++i)
            if (F_.polys[i].degree() < F_.polys[i - 1].degree()) throw std::invalid_argument("matrix_f5: degrees must be nondecreasing");
        if (opt_.engine == EngineKind::Multihomogeneous)
            for (auto& f : F_.polys)
                if (!f.is_bihomogeneous()) throw std::invalid_argument("multihomogeneous engine needs bihomogeneous polynomials");
        if (opt_.mode == CriterionMode::Extended && F_.flavor != Flavor::HomogeneousBilinear)
            throw std::invalid_argument("extended criterion needs a bilinear system");
        if (!F_.polys.empty() && opt_.D < F_.polys.front().degree()) throw std::invalid_argument("D below the smallest generator degree");
    }

    void build_monomials() {
        mons_.resize(opt_.D + 1);
        idx_.resize(opt_.D + 1);
        for (int d = 0; d <= opt_.D; ++d) {
            mons_[d] = enumerate_monomials(L_, Block::All, 0, d);
            idx_[d] = column_index(mons_[d]);
        }
        mul_.resize(opt_.D);
        for (int d = 0; d < opt_.D; ++d) {
            mul_[d].resize(mons_[d].size() * n_);
            for (std::size_t g = 0; g < mons_[d].size(); ++g)
                for (int v = 0; v < n_; ++v) mul_[d][g * n_ + v] = idx_[d + 1].at(mons_[d][g].times_var(v));
        }
    }

    int block_key(const Monomial& m) const { return opt_.engine == EngineKind::Homogeneous ? 0 : m.degree_x(); }

    void setup_level(int d) {
        Level& lv = levels_[d];
        std::size_t N = mons_[d].size();
        lv.block_of.assign(N, 0);
        lv.local_of.assign(N, 0);
        int nb = opt_.engine == EngineKind::Homogeneous ? 1 : d + 1;
        std::vector<std::vector<int>> cols(nb);
        for (std::size_t g = 0; g < N; ++g) {
            int b = block_key(mons_[d][g]);
            lv.block_of[g] = b;
            lv.local_of[g] = static_cast<int>(cols[b].size());
            cols[b].push_back(static_cast<int>(g));
        }
        lv.blocks.clear();
        lv.blocks.reserve(nb);
        for (int b = 0; b < nb; ++b) lv.blocks.emplace_back(F_.ring->field, std::move(cols[b]));
    }

    struct Pending {
        Row row;
        std::vector<Scalar> data;
        int expected_lead;  // global index of x_k * LM(parent), -1 for (1, f_i)
    };

    void step(int d, int i) {
        const Polynomial& f = F_.polys[i - 1];
        int di = f.degree();
        if (d < di) return;
        Level& lv = levels_[d];
        std::vector<Pending> pend;
        if (d == di) {
            Pending p;
            p.row = {i, 0, 0, 0, -1, -1};
            int b = block_key(f.lm());
            p.row.block = b;
            p.data.assign(lv.blocks[b].cols.size(), 0);
            for (auto& t : f.terms()) {
                int g = idx_[d].at(t.m);
                if (lv.block_of[g] != b) throw std::logic_error("generator spans several blocks");
                p.data[lv.local_of[g]] = t.c;
            }
            p.expected_lead = -1;
            pend.push_back(std::move(p));
        } else {
            Level& pv = levels_[d - 1];
            for (const Row& par : pv.rows) {
                if (par.index != i || par.stored < 0) continue;
                const Monomial& e = mons_[par.sig_deg][par.sig_idx];
                int lam = std::max(e.last_var(), 0);
                const BlockData& pb = pv.blocks[par.block];
                const std::vector<Scalar>& pdata = pb.ech.stored_row(par.stored);
                for (int k = lam; k < n_; ++k) {
                    int tidx = mul_[par.sig_deg][static_cast<std::size_t>(par.sig_idx) * n_ + k];
                    int tdeg = par.sig_deg + 1;
                    const Monomial& t = mons_[tdeg][tidx];
                    auto& cnt = res_.stats.per_index_degree[{i, d}];
                    if (i > 1 && owner_[tdeg][tidx] <= i - 1) {
                        ++res_.stats.rows_skipped_classical;
                        ++cnt.first;
                        continue;
                    }
                    if (opt_.mode == CriterionMode::Extended && res_.table.contains(i, t)) {
                        ++res_.stats.rows_skipped_extended;
                        ++cnt.first;
                        continue;
                    }
                    Pending p;
                    p.row = {i, tdeg, tidx, -1, -1, -1};
                    int lead_new = mul_[d - 1][static_cast<std::size_t>(par.lead_global) * n_ + k];
                    int b = lv.block_of[lead_new];
                    p.row.block = b;
                    p.data.assign(lv.blocks[b].cols.size(), 0);
                    for (std::size_t j = 0; j < pdata.size(); ++j) {
                        if (!pdata[j]) continue;
                        int g = mul_[d - 1][static_cast<std::size_t>(pb.cols[j]) * n_ + k];
                        p.data[lv.local_of[g]] = pdata[j];
                    }
                    p.expected_lead = lead_new;
                    pend.push_back(std::move(p));
                }
            }
            // signature order within index i: ascending grevlex in t
            std::sort(pend.begin(), pend.end(), [&](const Pending& a, const Pending& b) {
                return grevlex_cmp(mons_[a.row.sig_deg][a.row.sig_idx], mons_[b.row.sig_deg][b.row.sig_idx]) < 0;
            });
        }
        res_.stats.rows_built += pend.size();

        // Echelonize per block; blocks are independent.
        std::map<int, std::vector<std::size_t>> by_block;
        for (std::size_t k = 0; k < pend.size(); ++k) by_block[pend[k].row.block].push_back(k);
        std::vector<int> bids;
        for (auto& [b, v] : by_block) bids.push_back(b);
        std::vector<int> leads(pend.size(), -1);
        std::vector<std::uint64_t> ops_before(bids.size());
        for (std::size_t q = 0; q < bids.size(); ++q) ops_before[q] = lv.blocks[bids[q]].ech.ops();
        auto work = [&](std::size_t q) {
            BlockData& B = lv.blocks[bids[q]];
            for (std::size_t k : by_block[bids[q]]) leads[k] = B.ech.insert(pend[k].data);
        };
        int nt = std::max(1, opt_.threads);
        if (nt == 1 || bids.size() < 2) {
            for (std::size_t q = 0; q < bids.size(); ++q) work(q);
        } else {
            std::vector<std::thread> pool;
            std::size_t next = 0;
            std::mutex mu;
            for (int t = 0; t < nt; ++t)
                pool.emplace_back([&]() {
                    while (true) {
                        std::size_t q;
                        {
                            std::lock_guard<std::mutex> lk(mu);
                            if (next >= bids.size()) return;
                            q = next++;
                        }
                        work(q);
                    }
                });
            for (auto& th : pool) th.join();
        }
        for (std::size_t q = 0; q < bids.size(); ++q) {
            BlockData& B = lv.blocks[bids[q]];
            std::uint64_t ops = B.ech.ops() - ops_before[q];
            res_.stats.field_ops += ops;
            int zeros = 0;
            for (std::size_t k : by_block[bids[q]])
                if (leads[k] < 0) ++zeros;
            int d1 = opt_.engine == EngineKind::Homogeneous ? -1 : bids[q];
            res_.stats.shapes.push_back({d, d1, d1 < 0 ? -1 : d - d1, i, static_cast<int>(by_block[bids[q]].size()),
                                         static_cast<int>(B.cols.size()), B.ech.rank(), zeros, ops});
        }

        for (std::size_t k = 0; k < pend.size(); ++k) {
            Pending& p = pend[k];
            BlockData& B = lv.blocks[p.row.block];
            if (leads[k] < 0) {
                Signature s{i, mons_[p.row.sig_deg][p.row.sig_idx]};
                res_.stats.reductions_to_zero.push_back({s, d});
                ++res_.stats.per_index_degree[{i, d}].second;
                p.row.stored = -1;
                lv.rows.push_back(p.row);
                continue;
            }
            p.row.stored = B.ech.pivot_row(leads[k]);
            p.row.lead_global = B.cols[leads[k]];
            int& own = owner_[d][p.row.lead_global];
            own = std::min(own, i);
            if (p.row.lead_global != p.expected_lead) collected_.push_back(from_block_row(d, B, p.row.stored));
            lv.rows.push_back(p.row);
        }
    }

    // Reduced basis elements of degree d: echelon rows whose leading monomial is a minimal
    // generator of LM(I), with every other pivot column cleared (one row of the reduced echelon form).
    void finalize_degree(int d) {
        Level& lv = levels_[d];
        const PrimeField& Fd = F_.ring->field;
        const std::uint64_t p = Fd.characteristic();
        for (auto& B : lv.blocks) {
            int nc = static_cast<int>(B.cols.size());
            for (int k = 0; k < B.ech.rank(); ++k) {
                int lead = B.ech.stored_pivot(k);
                const Monomial& m = mons_[d][B.cols[lead]];
                bool minimal = true;
                if (d >= 1)
                    for (int v = 0; v < n_ && minimal; ++v) {
                        if (!m[v]) continue;
                        Monomial q = m;
                        q.set(v, m[v] - 1);
                        if (owner_[d - 1][idx_[d - 1].at(q)] != INT_MAX) minimal = false;
                    }
                if (!minimal) continue;
                const auto& src = B.ech.stored_row(k);
                std::vector<std::uint64_t> acc(src.begin(), src.end());
                for (int c = lead + 1; c < nc; ++c) {
                    int r = B.ech.pivot_row(c);
                    std::uint64_t a = acc[c] % p;
                    if (r < 0 || a == 0) continue;
                    const auto& pr = B.ech.stored_row(r);
                    std::uint64_t neg = p - a;
                    for (int j = c; j < nc; ++j) acc[j] = (acc[j] + neg * pr[j]) % p;
                    res_.stats.postprocess_ops += static_cast<std::uint64_t>(nc - c);
                }
                std::vector<Term> ts;
                for (int j = 0; j < nc; ++j)
                    if (acc[j] % p) ts.push_back({mons_[d][B.cols[j]], static_cast<Scalar>(acc[j] % p)});
                reduced_.emplace_back(F_.ring, std::move(ts));
            }
        }
    }

    Polynomial from_block_row(int d, const BlockData& B, int stored) const {
        const auto& r = B.ech.stored_row(stored);
        std::vector<Term> ts;
        for (std::size_t j = 0; j < r.size(); ++j)
            if (r[j]) ts.push_back({mons_[d][B.cols[j]], r[j]});
        return Polynomial(F_.ring, std::move(ts));
    }

    const PolySystem& F_;
    F5Options opt_;
    VariableLayout L_;
    int n_;
    F5Result res_;
    std::vector<std::vector<Monomial>> mons_;
    std::vector<std::unordered_map<Monomial, int, MonomialHash>> idx_;
    std::vector<std::vector<int>> mul_;
    std::vector<std::vector<int>> owner_;
    std::vector<Level> levels_;
    std::vector<Polynomial> collected_;
    std::vector<Polynomial> reduced_;
};

}  // namespace detail

inline F5Result matrix_f5(const PolySystem& F, int D, CriterionMode mode, EngineKind engine = EngineKind::Homogeneous, int threads = 1) {
    F5Options o;
    o.D = D;
    o.mode = mode;
    o.engine = engine;
    o.threads = threads;
    return detail::F5Run(F, o).run();
}

inline F5Result multihomogeneous_matrix_f5(const PolySystem& F, int D, CriterionMode mode, int threads = 1) {
    return matrix_f5(F, D, mode, EngineKind::Multihomogeneous, threads);
}

// Classical criterion as a standalone predicate: t is the LM of a nonzero row of the echelon.
inline bool classical_criterion(const Signature& sig, const EchelonResult& prev) {
    if (sig.index <= 1) return false;
    for (auto& [col, row] : prev.pivots)
        if (prev.matrix.columns[col] == sig.t) return true;
    return false;
}

inline bool extended_criterion(const Signature& sig, const EchelonResult& prev, const CriterionTable& table) {
    return classical_criterion(sig, prev) || table.contains(sig.index, sig.t);
}

enum class SetRelation { Equal, Subset, Superset, Incomparable };

inline const char* relation_name(SetRelation r) {
    switch (r) {
        case SetRelation::Equal: return "equal";
        case SetRelation::Subset: return "subset";
        case SetRelation::Superset: return "superset";
        case SetRelation::Incomparable: return "incomparable";
    }
    return "?";
}

struct BiregularityReport {
    bool passes = true;
    // per generator index i: observed zero-row signature monomials vs the predicted set
    std::map<int, SetRelation> relation;
    std::map<int, std::pair<std::size_t, std::size_t>> counts;  // (observed, predicted)
};

// Classical Matrix F5 up to D; for each i compares the observed zero-row signature monomials
// with Monomials^x_{i-n_y-2}(n_y+1) and Monomials^y_{i-n_x-2}(n_x+1), restricted to degree
// <= D-2 and to monomials outside LM(I_{i-1}).
inline BiregularityReport check_biregularity(const PolySystem& F, int D) {
    if (F.flavor != Flavor::HomogeneousBilinear) throw std::invalid_argument("check_biregularity needs a bilinear system");
    const VariableLayout& L = F.layout();
    auto res = matrix_f5(F, D, CriterionMode::Classical, EngineKind::Multihomogeneous);
    BiregularityReport rep;
    for (int i = 1; i <= F.size(); ++i) {
        std::set<std::vector<int>> obs, pred;
        auto key = [&](const Monomial& m) {
            std::vector<int> k(L.nvars());
            for (int v = 0; v < L.nvars(); ++v) k[v] = m[v];
            return k;
        };
        for (auto& r : res.stats.reductions_to_zero)
            if (r.sig.index == i) obs.insert(key(r.sig.t));
        std::vector<Monomial> cand;
        if (i >= L.ny + 2) {
            auto xs = enumerate_monomials(L, Block::X, i - L.ny - 2, L.ny + 1);
            cand.insert(cand.end(), xs.begin(), xs.end());
        }
        if (i >= L.nx + 2) {
            auto ys = enumerate_monomials(L, Block::Y, i - L.nx - 2, L.nx + 1);
            cand.insert(cand.end(), ys.begin(), ys.end());
        }
        for (auto& t : cand) {
            if (t.degree() > D - 2) continue;
            auto it = res.lm_owner[t.degree()].find(t);
            if (it != res.lm_owner[t.degree()].end() && it->second <= i - 1) continue;
            pred.insert(key(t));
        }
        bool sub = std::includes(pred.begin(), pred.end(), obs.begin(), obs.end());
        bool sup = std::includes(obs.begin(), obs.end(), pred.begin(), pred.end());
        SetRelation rel = sub && sup ? SetRelation::Equal : sub ? SetRelation::Subset : sup ? SetRelation::Superset : SetRelation::Incomparable;
        rep.relation[i] = rel;
        rep.counts[i] = {obs.size(), pred.size()};
        if (rel != SetRelation::Equal) rep.passes = false;
    }
    return rep;
}

}  // namespace bgb
