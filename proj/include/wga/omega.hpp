#pragma once

#include <deque>
#include <memory>
#include <mutex>
#include <random>
#include <unordered_map>

#include "wga/pathalg.hpp"

namespace wga {

struct stabilization_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Path in the compatibility graph: just the vertex sequence (single edges
// carry no tags). Target vertex first.
using QPath = std::vector<std::uint8_t>;

namespace omega_detail {

// Graded-lex key: length in the top bits, vertices left-aligned below, five
// bits each. Comparing codes compares (length, vertex sequence).
using PathCode = unsigned __int128;

inline PathCode code_of(const std::uint8_t* v, size_t n) {
    PathCode c = static_cast<PathCode>(n - 1) << 95;
    int shift = 90;
    for (size_t i = 0; i < n; ++i, shift -= 5) c |= static_cast<PathCode>(v[i]) << shift;
    return c;
}

struct CodeHash {
    size_t operator()(PathCode c) const {
        auto lo = static_cast<std::uint64_t>(c);
        auto hi = static_cast<std::uint64_t>(c >> 64);
        return std::hash<std::uint64_t>()(lo * 0x9e3779b97f4a7c15ULL ^ hi);
    }
};

}  // namespace omega_detail

// The W-graph algebra as an explicit finite-dimensional quotient of the
// path algebra of the compatibility graph.
//
// Construction: the alpha/beta relator families are pushed through the
// structural identifications (parallel edge tags merge, edges between
// incompatible vertex pairs vanish -- these are exactly the length-one
// relators) onto compatibility-graph paths. The two-sided ideal truncation
// is then saturated by single-edge extensions of reduced rows with sparse
// elimination ordered by graded-lex leading path; each eliminated leading
// path becomes a rewrite rule. The quotient basis is the set of paths with
// no reducible subpath. Certification: the basis enumeration terminates at
// some length (dimension stabilizes: no irreducible paths one level up) and
// every product (basis path) * (edge) reduces back into the basis with zero
// residual. Dimension counts and the identity pack downstream re-validate
// the result semantically.
class QuotientAlgebra {
public:
    struct PTerm {
        std::int32_t id;
        NumberFieldElem c;
    };
    using SVec = std::vector<PTerm>;  // sorted by path code descending
    using Coord = std::pair<std::int32_t, NumberFieldElem>;
    using CoordVec = std::vector<Coord>;  // sorted by basis index ascending

    static std::shared_ptr<QuotientAlgebra> compute(const CoxeterSystem& sys, int L_start = 4,
                                                    int L_max = 12) {
        std::shared_ptr<QuotientAlgebra> a(new QuotientAlgebra(sys));
        a->run(L_start, L_max);
        return a;
    }

    // Variant used by the relator-equivalence cross-check: quotient by an
    // explicitly supplied relator list instead of the alpha/beta families.
    static std::shared_ptr<QuotientAlgebra> compute_with_relators(
        const CoxeterSystem& sys, const std::vector<PathElement<NumberFieldElem>>& rels,
        int L_start = 4, int L_max = 12) {
        std::shared_ptr<QuotientAlgebra> a(new QuotientAlgebra(sys));
        a->explicit_relators_ = &rels;
        a->run(L_start, L_max);
        a->explicit_relators_ = nullptr;
        return a;
    }

    const CoxeterSystem& system() const { return sys_; }
    const FieldCtx& ctx() const { return sys_.ctx; }
    const Quiver& compat() const { return *qw_; }
    const std::shared_ptr<const Quiver>& compat_ptr() const { return qw_; }
    int dim() const { return static_cast<int>(basis_.size()); }
    int certified_length() const { return certified_len_; }
    int length_bound_used() const { return cap_; }
    const QPath& basis_path(int i) const { return paths_[basis_[i]]; }
    Subset basis_target(int i) const { return paths_[basis_[i]].front(); }
    Subset basis_source(int i) const { return paths_[basis_[i]].back(); }
    int basis_length(int i) const { return static_cast<int>(paths_[basis_[i]].size()) - 1; }

    // --- element constructors -------------------------------------------

    CoordVec zero() const { return {}; }
    CoordVec unit() const {
        CoordVec u;
        for (Subset I = 0; I < qw_->vertex_count(); ++I) {
            CoordVec e = idem(I);
            u = add(u, e);
        }
        return u;
    }
    CoordVec idem(Subset I) const {
        std::lock_guard<std::mutex> lock(mtx_);
        QPath p{static_cast<std::uint8_t>(I)};
        return nf_to_coords(nf(intern(p)));
    }
    // [X_IJ] for a compatibility-graph edge I <- J.
    CoordVec edge(Subset I, Subset J) const {
        if (!qw_->has_edge(I, J)) throw std::invalid_argument("edge: no compatibility edge");
        std::lock_guard<std::mutex> lock(mtx_);
        QPath p{static_cast<std::uint8_t>(I), static_cast<std::uint8_t>(J)};
        return nf_to_coords(nf(intern(p)));
    }
    // image of x_s (sum of the surviving tagged edges)
    CoordVec gen_x_elem(int s) const {
        CoordVec out;
        for (const auto& e : qw_->edges)
            if (contains(e.target & ~e.source, s)) out = add(out, edge(e.target, e.source));
        return out;
    }
    CoordVec gen_e_elem(int s) const {
        CoordVec out;
        for (Subset I = 0; I < qw_->vertex_count(); ++I)
            if (contains(I, s)) out = add(out, idem(I));
        return out;
    }

    // --- linear and multiplicative structure ------------------------------

    static CoordVec add(const CoordVec& a, const CoordVec& b) {
        CoordVec r;
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) r.push_back(a[i++]);
            else if (i == a.size() || b[j].first < a[i].first) r.push_back(b[j++]);
            else {
                NumberFieldElem c = a[i].second + b[j].second;
                if (!c.is_zero()) r.push_back({a[i].first, c});
                ++i, ++j;
            }
        }
        return r;
    }
    static CoordVec sub(const CoordVec& a, const CoordVec& b) { return add(a, negate(b)); }
    static CoordVec negate(CoordVec a) {
        for (auto& [i, c] : a) c = -c;
        return a;
    }
    static CoordVec scale(CoordVec a, const NumberFieldElem& s) {
        if (s.is_zero()) return {};
        for (auto& [i, c] : a) c = c * s;
        return a;
    }
    static CoordVec scale(CoordVec a, const Rational& s) {
        if (s == 0) return {};
        for (auto& [i, c] : a) c = c * s;
        return a;
    }
    static bool is_zero(const CoordVec& a) { return a.empty(); }
    static bool equal(const CoordVec& a, const CoordVec& b) { return is_zero(sub(a, b)); }
    NumberFieldElem coeff_of(const CoordVec& a, int idx) const {
        for (const auto& [i, c] : a)
            if (i == idx) return c;
        return NumberFieldElem::zero(ctx());
    }

    CoordVec mul(const CoordVec& a, const CoordVec& b) const {
        std::lock_guard<std::mutex> lock(mtx_);
        CoordVec out;
        for (const auto& [i, ci] : a)
            for (const auto& [j, cj] : b) {
                if (basis_source(i) != basis_target(j)) continue;
                const CoordVec& p = basis_product(i, j);
                if (!p.empty()) out = add(out, scale(p, ci * cj));
            }
        return out;
    }

    // quotient map on full-quiver path elements (tags merge, dead edges die)
    CoordVec project(const PathElement<NumberFieldElem>& el) const {
        std::lock_guard<std::mutex> lock(mtx_);
        CoordVec out;
        for (const auto& [p, c] : el.terms()) {
            bool alive = true;
            for (size_t k = 0; k + 1 < p.verts.size(); ++k)
                if (!qw_->has_edge(p.verts[k], p.verts[k + 1])) {
                    alive = false;
                    break;
                }
            if (!alive) continue;
            QPath q(p.verts.begin(), p.verts.end());
            out = add(out, scale(nf_to_coords(nf(intern(q))), c));
        }
        return out;
    }

    // The antiautomorphism e_s -> 1 - e_s, x_s -> -x_s: on paths, reverse,
    // complement every vertex, and apply the sign (-1)^length.
    CoordVec dual(const CoordVec& a) const {
        std::lock_guard<std::mutex> lock(mtx_);
        const Subset full = static_cast<Subset>(qw_->vertex_count() - 1);
        CoordVec out;
        for (const auto& [i, c] : a) {
            const QPath& p = paths_[basis_[i]];
            QPath q(p.rbegin(), p.rend());
            for (auto& v : q) v = static_cast<std::uint8_t>(full & ~v);
            NumberFieldElem s = (p.size() % 2 == 0) ? -c : c;  // (-1)^(len)
            out = add(out, scale(nf_to_coords(nf(intern(q))), s));
        }
        return out;
    }

    // generator permutation (Coxeter-matrix automorphism) acting on paths
    CoordVec relabel(const CoordVec& a, const std::vector<int>& perm) const {
        std::lock_guard<std::mutex> lock(mtx_);
        CoordVec out;
        for (const auto& [i, c] : a) {
            QPath q = paths_[basis_[i]];
            for (auto& v : q) {
                Subset w = 0;
                for (int s = 0; s < sys_.rank; ++s)
                    if (contains(v, s)) w |= (1u << perm[s]);
                v = static_cast<std::uint8_t>(w);
            }
            out = add(out, scale(nf_to_coords(nf(intern(q))), c));
        }
        return out;
    }

    std::vector<int> corner_indices(Subset target, Subset source) const {
        std::vector<int> out;
        for (int i = 0; i < dim(); ++i)
            if (basis_target(i) == target && basis_source(i) == source) out.push_back(i);
        return out;
    }

    // --- radical (trace form kernel, Dickson's criterion) -----------------

    struct RadicalInfo {
        int dim_radical = 0;
        int dim_semisimple = 0;
        std::vector<CoordVec> radical_basis;
    };

    const RadicalInfo& radical() const {
        std::call_once(rad_once_, [this] { compute_radical(); });
        return rad_;
    }

    // membership of an element in the radical subspace (corner by corner)
    bool in_radical(const CoordVec& a) const {
        radical();
        std::lock_guard<std::mutex> lock(mtx_);
        std::map<std::pair<Subset, Subset>, CoordVec> parts;
        for (const auto& [i, c] : a)
            parts[{basis_target(i), basis_source(i)}].push_back({i, c});
        for (const auto& [key, part] : parts) {
            auto it = rad_spans_.find(key);
            if (it == rad_spans_.end()) return false;
            const auto& idxs = corner_index_cache_.at(key);
            std::vector<NumberFieldElem> v(idxs.size(), NumberFieldElem::zero(ctx()));
            for (const auto& [i, c] : part)
                for (size_t p = 0; p < idxs.size(); ++p)
                    if (idxs[p] == i) v[p] = c;
            if (!it->second.contains(std::move(v))) return false;
        }
        return true;
    }

    // Verifies that iota extends to the quotient: the quadratic relation for
    // every iota(T_s) and every braid commutator vanish with exact Laurent
    // coefficients over the computed algebra.
    Report hecke_embedding_check() const {
        Report rep;
        rep.title = "Hecke embedding in the quotient (" + type_tag(sys_.type) + ")";
        using LVec = std::vector<std::pair<int, Laurent>>;  // basis idx -> Laurent
        auto lift = [&](const CoordVec& a, const Laurent& f) {
            LVec out;
            for (const auto& [i, c] : a) out.push_back({i, f * c});
            return out;
        };
        auto ladd = [&](LVec a, const LVec& b) {
            for (const auto& [i, f] : b) {
                bool found = false;
                for (auto& [j, g] : a)
                    if (j == i) {
                        g = g + f;
                        found = true;
                        break;
                    }
                if (!found) a.push_back({i, f});
            }
            LVec out;
            for (auto& [i, f] : a)
                if (!f.is_zero()) out.push_back({i, f});
            std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
            return out;
        };
        auto lmul = [&](const LVec& a, const LVec& b) {
            LVec out;
            for (const auto& [i, f] : a)
                for (const auto& [j, g] : b) {
                    if (basis_source(i) != basis_target(j)) continue;
                    CoordVec p;
                    {
                        std::lock_guard<std::mutex> lock(mtx_);
                        p = basis_product(i, j);
                    }
                    Laurent fg = f * g;
                    LVec term;
                    for (const auto& [k, c] : p) term.push_back({k, fg * c});
                    out = ladd(std::move(out), term);
                }
            return out;
        };
        std::vector<LVec> iota(sys_.rank);
        for (int s = 0; s < sys_.rank; ++s) {
            LVec v;
            for (Subset I = 0; I < qw_->vertex_count(); ++I) {
                Laurent f = contains(I, s) ? -laurent_v(ctx(), -1) : laurent_v(ctx(), 1);
                v = ladd(std::move(v), lift(idem(I), f));
            }
            v = ladd(std::move(v), lift(gen_x_elem(s), laurent_const(ctx(), 1)));
            iota[s] = std::move(v);
        }
        LVec lunit = lift(unit(), laurent_const(ctx(), 1));
        Laurent quad = laurent_quad_param(ctx());
        for (int s = 0; s < sys_.rank; ++s) {
            LVec lhs = lmul(iota[s], iota[s]);
            LVec rhs = ladd(lunit, [&] {
                LVec t;
                for (const auto& [i, f] : iota[s]) t.push_back({i, f * quad});
                return t;
            }());
            rep.add("quadratic relation for iota(T_" + sys_.labels[s] + ")",
                    ladd(lhs, [&] {
                        LVec t;
                        for (auto [i, f] : rhs) t.push_back({i, -f});
                        return t;
                    }()).empty());
        }
        for (int s = 0; s < sys_.rank; ++s)
            for (int t = s + 1; t < sys_.rank; ++t) {
                int m = sys_.coxmat[s][t];
                LVec w1 = iota[s], w2 = iota[t];
                for (int k = 1; k < m; ++k) {
                    w1 = lmul(w1, k % 2 ? iota[t] : iota[s]);
                    w2 = lmul(w2, k % 2 ? iota[s] : iota[t]);
                }
                rep.add("braid commutator (" + sys_.labels[s] + "," + sys_.labels[t] + "), m=" +
                            std::to_string(m),
                        ladd(w1, [&] {
                            LVec t2;
                            for (auto [i, f] : w2) t2.push_back({i, -f});
                            return t2;
                        }()).empty());
            }
        return rep;
    }

    // Ideal saturation spot check: project(u * r * w) = 0 for random basis
    // cofactors u, w around every relator r.
    bool spot_check_ideal(int samples_per_relator, unsigned seed) const;

    std::string basis_path_str(int i) const {
        const QPath& p = paths_[basis_[i]];
        std::string s;
        for (size_t k = 0; k < p.size(); ++k) {
            if (k) s += "<-";
            s += sys_.subset_str(p[k]);
        }
        return s;
    }

    // raw relators (compatibility-graph form) kept for the saturation spot check
    const std::vector<SVec>& merged_relators() const { return merged_relators_; }

    SVec nf_of_qpath(const QPath& p) const {
        std::lock_guard<std::mutex> lock(mtx_);
        return nf(intern(p));
    }
    CoordVec project_qpath(const QPath& p) const {
        std::lock_guard<std::mutex> lock(mtx_);
        return nf_to_coords(nf(intern(p)));
    }

private:
    explicit QuotientAlgebra(const CoxeterSystem& sys) : sys_(sys) {
        qw_ = std::make_shared<Quiver>(build_compatibility_graph(sys));
        rev_adjacency_.resize(qw_->vertex_count());
        for (const auto& e : qw_->edges) rev_adjacency_[e.target].push_back(e.source);
    }

    // --- path registry ----------------------------------------------------

    std::int32_t intern(const QPath& p) const {
        if (p.size() > 18) throw stabilization_error("path length beyond representable bound");
        auto code = omega_detail::code_of(p.data(), p.size());
        auto it = index_.find(code);
        if (it != index_.end()) return it->second;
        std::int32_t id = static_cast<std::int32_t>(paths_.size());
        paths_.push_back(p);
        codes_.push_back(code);
        index_.emplace(code, id);
        return id;
    }

    static bool term_before(const omega_detail::PathCode& a, const omega_detail::PathCode& b) {
        return a > b;  // descending: leading (largest) first
    }

    SVec merge_scaled(const SVec& a, const SVec& b, const NumberFieldElem& s) const {
        SVec r;
        size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            bool takeA;
            if (i == a.size()) takeA = false;
            else if (j == b.size()) takeA = true;
            else takeA = term_before(codes_[a[i].id], codes_[b[j].id]);
            if (takeA && (j == b.size() || codes_[a[i].id] != codes_[b[j].id])) {
                r.push_back(a[i++]);
            } else if (i == a.size() || codes_[a[i].id] != codes_[b[j].id]) {
                NumberFieldElem c = b[j].c * s;
                if (!c.is_zero()) r.push_back({b[j].id, c});
                ++j;
            } else {
                NumberFieldElem c = a[i].c + b[j].c * s;
                if (!c.is_zero()) r.push_back({a[i].id, c});
                ++i, ++j;
            }
        }
        return r;
    }

    // --- normal form -------------------------------------------------------
    //
    // Memoized rewriting against the rule map. Entries are stamped with the
    // rule-set version; a stale entry stays valid as long as every path in
    // it still has no reducible subpath (rules are only ever added).

    bool fully_irreducible(std::int32_t id) const {
        if (rules_.count(id)) return false;
        auto iv = irr_version_.find(id);
        if (iv != irr_version_.end() && iv->second == version_) return true;
        if (!subpath_irreducible(paths_[id])) return false;
        irr_version_[id] = version_;
        return true;
    }

    SVec nf(std::int32_t id) const {
        auto it = nf_memo_.find(id);
        if (it != nf_memo_.end()) {
            if (it->second.version == version_) return it->second.v;
            bool ok = true;
            for (const auto& t : it->second.v)
                if (!fully_irreducible(t.id)) {
                    ok = false;
                    break;
                }
            if (ok) {
                it->second.version = version_;
                return it->second.v;
            }
            nf_memo_.erase(it);
        }
        const QPath p = paths_[id];
        const size_t n = p.size();
        for (size_t i = 0; i < n; ++i) {
            for (size_t j = n - 1;; --j) {  // leftmost position, longest subpath first
                auto subcode = omega_detail::code_of(p.data() + i, j - i + 1);
                auto idx = index_.find(subcode);
                if (idx != index_.end() && rules_.count(idx->second)) {
                    const SVec tail = rules_.at(idx->second);
                    SVec out;
                    for (const auto& t : tail) {
                        QPath glued;
                        glued.reserve(n);
                        glued.insert(glued.end(), p.begin(), p.begin() + i);
                        const QPath mid = paths_[t.id];
                        glued.insert(glued.end(), mid.begin(), mid.end());
                        glued.insert(glued.end(), p.begin() + j + 1, p.end());
                        out = merge_scaled(out, nf(intern(glued)), t.c);
                    }
                    nf_memo_[id] = {out, version_};
                    return out;
                }
                if (j == i) break;
            }
        }
        SVec self{{id, NumberFieldElem::one(sys_.ctx)}};
        nf_memo_[id] = {self, version_};
        return self;
    }

    SVec reduce_raw(std::vector<PTerm> raw) const {
        SVec out;
        for (const auto& t : raw) out = merge_scaled(out, nf(t.id), t.c);
        return out;
    }

    // --- saturation ---------------------------------------------------------

    void insert_rule(const SVec& row) {
        const PTerm& lead = row[0];
        if (rules_.count(lead.id))
            throw std::logic_error("insert_rule: leading path already has a rule");
        NumberFieldElem inv = lead.c.inverse();
        SVec tail;
        for (size_t k = 1; k < row.size(); ++k) tail.push_back({row[k].id, -(row[k].c * inv)});
        ++version_;
        rules_[lead.id] = tail;
        nf_memo_[lead.id] = {tail, version_};
        rule_list_.push_back(lead.id);
        enumerated_cap_[lead.id] = 0;
        pending_.push_back(lead.id);
    }

    void consider_row(std::vector<PTerm> raw) {
        SVec red = reduce_raw(std::move(raw));
        if (!red.empty()) insert_rule(red);
    }

    // --- critical pairs ----------------------------------------------------
    //
    // Completion in the path algebra: whenever two rule leading paths
    // overlap in at least one edge (or one contains the other), the two
    // one-step reductions of the overlap word may disagree; their difference
    // is an ideal element that must itself reduce to zero. Occurrences
    // sharing at most a vertex commute, so only genuine overlaps are queued.

    void emit_overlap(std::int32_t qa, std::int32_t qb, int last_cap) {
        const QPath A = paths_[qa];
        const QPath B = paths_[qb];
        const int lenA = static_cast<int>(A.size()) - 1;
        const int lenB = static_cast<int>(B.size()) - 1;
        // proper overlaps only: r = lenA or r = lenB is a containment
        for (int r = 1; r < std::min(lenA, lenB); ++r) {
            int word_len = lenA + lenB - r;
            if (word_len > cap_) {
                pairs_suppressed_ = true;
                continue;
            }
            if (word_len <= last_cap) continue;  // emitted in an earlier pass
            bool match = true;
            for (int i = 0; i <= r; ++i)
                if (A[lenA - r + i] != B[i]) {
                    match = false;
                    break;
                }
            if (!match) continue;
            // word = A . B-suffix; reduce via A's rule or via B's rule
            std::vector<PTerm> row;
            const SVec tailA = rules_.at(qa);
            for (const auto& t : tailA) {
                QPath g = paths_[t.id];
                g.insert(g.end(), B.begin() + r + 1, B.end());
                row.push_back({intern(g), t.c});
            }
            const SVec tailB = rules_.at(qb);
            for (const auto& t : tailB) {
                QPath g(A.begin(), A.begin() + (lenA - r));
                const QPath mid = paths_[t.id];
                g.insert(g.end(), mid.begin(), mid.end());
                row.push_back({intern(g), -t.c});
            }
            row_queue_.push_back(std::move(row));
        }
    }

    void emit_containment(std::int32_t qouter, std::int32_t qinner) {
        const QPath A = paths_[qouter];
        const QPath B = paths_[qinner];
        if (B.size() >= A.size()) return;
        for (size_t i = 0; i + B.size() <= A.size(); ++i) {
            bool match = true;
            for (size_t k = 0; k < B.size(); ++k)
                if (A[i + k] != B[k]) {
                    match = false;
                    break;
                }
            if (!match) continue;
            std::vector<PTerm> row;
            const SVec tailA = rules_.at(qouter);
            for (const auto& t : tailA) row.push_back({t.id, t.c});
            const SVec tailB = rules_.at(qinner);
            for (const auto& t : tailB) {
                QPath g(A.begin(), A.begin() + i);
                const QPath mid = paths_[t.id];
                g.insert(g.end(), mid.begin(), mid.end());
                g.insert(g.end(), A.begin() + i + B.size(), A.end());
                row.push_back({intern(g), -t.c});
            }
            row_queue_.push_back(std::move(row));
        }
    }

    void enumerate_pairs(std::int32_t q) {
        int last_cap = enumerated_cap_[q];
        if (last_cap >= cap_) return;
        enumerated_cap_[q] = cap_;
        // only pair q against itself and the rules older than q; pairs with
        // younger rules are emitted when those are enumerated
        std::vector<std::int32_t> partners;
        for (std::int32_t rid : rule_list_) {
            partners.push_back(rid);
            if (rid == q) break;
        }
        for (std::int32_t rid : partners) {
            emit_overlap(q, rid, last_cap);
            if (rid != q) {
                emit_overlap(rid, q, last_cap);
                if (last_cap == 0) {
                    emit_containment(rid, q);
                    emit_containment(q, rid);
                }
            }
        }
    }

    void saturate() {
        while (true) {
            if (!row_queue_.empty()) {
                std::vector<PTerm> row = std::move(row_queue_.front());
                row_queue_.pop_front();
                consider_row(std::move(row));
                continue;
            }
            if (!pending_.empty()) {
                std::int32_t q = pending_.front();
                pending_.pop_front();
                enumerate_pairs(q);
                continue;
            }
            break;
        }
    }

    bool subpath_irreducible(const QPath& p) const {
        const size_t n = p.size();
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) {
                auto subcode = omega_detail::code_of(p.data() + i, j - i + 1);
                auto idx = index_.find(subcode);
                if (idx != index_.end() && rules_.count(idx->second)) return false;
            }
        return true;
    }

    // Enumerates irreducible paths by length; returns false when the
    // frontier is still alive at the cap (not stabilized).
    bool enumerate_basis(std::vector<std::int32_t>& out) {
        out.clear();
        std::vector<std::int32_t> level;
        for (Subset I = 0; I < qw_->vertex_count(); ++I) {
            QPath p{static_cast<std::uint8_t>(I)};
            std::int32_t id = intern(p);
            if (!rules_.count(id)) level.push_back(id);
        }
        int len = 0;
        while (!level.empty()) {
            out.insert(out.end(), level.begin(), level.end());
            if (len + 1 > cap_) return false;  // cannot certify the next level
            std::vector<std::int32_t> next;
            for (std::int32_t id : level) {
                const QPath p = paths_[id];
                for (Subset C : rev_adjacency_[p.back()]) {
                    QPath np = p;
                    np.push_back(static_cast<std::uint8_t>(C));
                    if (subpath_irreducible(np)) next.push_back(intern(np));
                }
            }
            level = std::move(next);
            ++len;
        }
        certified_len_ = len - 1;
        std::sort(out.begin(), out.end(),
                  [&](std::int32_t a, std::int32_t b) { return codes_[a] < codes_[b]; });
        return true;
    }

    void run(int L_start, int L_max) {
        // relators over the full quiver, then merged onto the compatibility graph
        auto fq = std::make_shared<const Quiver>(build_full_quiver(sys_));
        std::vector<PathElement<NumberFieldElem>> rels;
        if (explicit_relators_) {
            rels = *explicit_relators_;
        } else {
            for (int s = 0; s < sys_.rank; ++s)
                for (int t = 0; t < sys_.rank; ++t) {
                    if (s == t) continue;
                    auto al = alpha_relators(sys_, fq, s, t);
                    rels.insert(rels.end(), al.begin(), al.end());
                    if (s < t) {
                        auto be = beta_relators(sys_, fq, s, t);
                        rels.insert(rels.end(), be.begin(), be.end());
                    }
                }
        }
        // Merge onto the compatibility graph and split into corner
        // components E_I r E_J (each lies in the ideal; extension rows then
        // stay corner-homogeneous).
        int max_rel_len = 1;
        std::vector<std::vector<PTerm>> seeds;
        for (const auto& rel : rels) {
            std::map<std::pair<Subset, Subset>, std::vector<PTerm>> by_corner;
            for (const auto& [p, c] : rel.terms()) {
                bool alive = true;
                for (size_t k = 0; k + 1 < p.verts.size(); ++k)
                    if (!qw_->has_edge(p.verts[k], p.verts[k + 1])) {
                        alive = false;
                        break;
                    }
                if (!alive) continue;
                QPath q(p.verts.begin(), p.verts.end());
                by_corner[{p.target(), p.source()}].push_back({intern(q), c});
                max_rel_len = std::max(max_rel_len, static_cast<int>(p.verts.size()) - 1);
            }
            for (auto& [corner, raw] : by_corner) seeds.push_back(std::move(raw));
        }
        for (const auto& s : seeds) {
            SVec sv;
            for (const auto& t : s) sv = merge_scaled(sv, SVec{{t.id, NumberFieldElem::one(sys_.ctx)}}, t.c);
            merged_relators_.push_back(sv);
        }

        cap_ = std::max(L_start, max_rel_len);
        if (cap_ > L_max) throw stabilization_error("relators longer than L_max");
        for (auto& s : seeds) consider_row(std::move(s));
        saturate();

        auto raise_cap = [&](int new_cap) {
            cap_ = new_cap;
            pairs_suppressed_ = false;
            pending_.assign(rule_list_.begin(), rule_list_.end());
            saturate();
        };

        std::vector<std::int32_t> prev_basis;
        for (int guard = 0; guard < 64; ++guard) {
            std::vector<std::int32_t> b;
            if (!enumerate_basis(b)) {
                if (cap_ >= L_max)
                    throw stabilization_error(
                        "quotient not stabilized by L_max = " + std::to_string(L_max) +
                        " for type " + type_tag(sys_.type) +
                        " (bound too small or quotient not finite-dimensional)");
                raise_cap(cap_ + 1);
                continue;
            }
            // margin: saturate one level beyond the basis, then confirm the
            // basis is unchanged (the d_L = d_{L+1} certificate)
            int want = certified_len_ + 2;
            if (cap_ < want && want <= L_max) {
                raise_cap(want);
                std::vector<std::int32_t> b2;
                if (!enumerate_basis(b2) || b2 != b) continue;
                b = std::move(b2);
            }
            if (b == prev_basis) {
                basis_ = std::move(b);
                break;
            }
            prev_basis = std::move(b);
        }
        if (basis_.empty()) throw stabilization_error("basis enumeration did not settle");

        basis_index_.clear();
        for (int i = 0; i < dim(); ++i) basis_index_.emplace(basis_[i], i);

        // closure tables: (basis path) * (edge) expressed over the basis
        rtab_.assign(dim(), {});
        for (int i = 0; i < dim(); ++i) {
            Subset src = basis_source(i);
            for (Subset C : rev_adjacency_[src]) {
                QPath np = paths_[basis_[i]];
                np.push_back(static_cast<std::uint8_t>(C));
                rtab_[i][static_cast<std::uint8_t>(C)] = nf_to_coords(nf(intern(np)));
            }
        }
    }

    CoordVec nf_to_coords(const SVec& v) const {
        CoordVec out;
        for (const auto& t : v) {
            auto it = basis_index_.find(t.id);
            if (it == basis_index_.end())
                throw std::logic_error("normal form left the certified basis (closure violated)");
            out.push_back({it->second, t.c});
        }
        std::sort(out.begin(), out.end(),
                  [](const Coord& a, const Coord& b) { return a.first < b.first; });
        return out;
    }

    const CoordVec& basis_product(int i, int j) const {
        std::uint64_t key = (static_cast<std::uint64_t>(i) << 32) | static_cast<std::uint32_t>(j);
        auto it = prod_memo_.find(key);
        if (it != prod_memo_.end()) return it->second;
        const QPath& pj = paths_[basis_[j]];
        CoordVec cur{{i, NumberFieldElem::one(sys_.ctx)}};
        for (size_t k = 1; k < pj.size(); ++k) {
            CoordVec next;
            for (const auto& [b, c] : cur) {
                auto et = rtab_[b].find(pj[k]);
                if (et == rtab_[b].end()) throw std::logic_error("missing closure entry");
                next = add(next, scale(et->second, c));
            }
            cur = std::move(next);
            if (cur.empty()) break;
        }
        return prod_memo_.emplace(key, std::move(cur)).first->second;
    }

    std::vector<NumberFieldElem> densify(const CoordVec& a) const {
        std::vector<NumberFieldElem> v(dim(), NumberFieldElem::zero(ctx()));
        for (const auto& [i, c] : a) v[i] = c;
        return v;
    }

    void compute_radical() const {
        std::lock_guard<std::mutex> lock(mtx_);
        // trace of left multiplication, nonzero only for loop corners
        std::vector<NumberFieldElem> tr(dim(), NumberFieldElem::zero(ctx()));
        for (int k = 0; k < dim(); ++k) {
            if (basis_target(k) != basis_source(k)) continue;
            NumberFieldElem t = NumberFieldElem::zero(ctx());
            for (int j = 0; j < dim(); ++j) {
                if (basis_source(k) != basis_target(j)) continue;
                const CoordVec& p = basis_product(k, j);
                for (const auto& [idx, c] : p)
                    if (idx == j) t = t + c;
            }
            tr[k] = t;
        }
        rad_.dim_radical = 0;
        rad_.radical_basis.clear();
        rad_spans_.clear();
        corner_index_cache_.clear();
        const size_t V = qw_->vertex_count();
        for (Subset A = 0; A < V; ++A)
            for (Subset B = 0; B < V; ++B) {
                std::vector<int> rowsI = corner_indices(A, B);
                if (rowsI.empty()) continue;
                corner_index_cache_[{A, B}] = rowsI;
                std::vector<int> colsJ = corner_indices(B, A);
                // Gram block of the trace form between opposite corners
                Matrix<NumberFieldElem> G(rowsI.size(), std::max<size_t>(colsJ.size(), 1),
                                          NumberFieldElem::zero(ctx()));
                for (size_t r = 0; r < rowsI.size(); ++r)
                    for (size_t c = 0; c < colsJ.size(); ++c) {
                        const CoordVec& p = basis_product(rowsI[r], colsJ[c]);
                        NumberFieldElem g = NumberFieldElem::zero(ctx());
                        for (const auto& [k, ck] : p)
                            if (!tr[k].is_zero()) g = g + ck * tr[k];
                        G.at(r, c) = g;
                    }
                // left kernel of G = radical component in corner (A,B)
                Matrix<NumberFieldElem> Gt = G.transpose();
                auto ker = kernel_basis(Gt, NumberFieldElem::zero(ctx()), NumberFieldElem::one(ctx()));
                auto sp = SpanBasis<NumberFieldElem>(rowsI.size());
                for (const auto& kv : ker) {
                    CoordVec vec;
                    for (size_t r = 0; r < rowsI.size(); ++r)
                        if (!kv[r].is_zero()) vec.push_back({rowsI[r], kv[r]});
                    rad_.radical_basis.push_back(vec);
                    sp.insert(kv);
                }
                if (sp.rank() > 0) rad_spans_.emplace(std::make_pair(A, B), std::move(sp));
            }
        rad_.dim_radical = static_cast<int>(rad_.radical_basis.size());
        rad_.dim_semisimple = dim() - rad_.dim_radical;
    }

    CoxeterSystem sys_;
    std::shared_ptr<const Quiver> qw_;
    std::vector<std::vector<Subset>> rev_adjacency_;
    const std::vector<PathElement<NumberFieldElem>>* explicit_relators_ = nullptr;

    struct NfEntry {
        SVec v;
        std::uint64_t version;
    };

    mutable std::vector<QPath> paths_;
    mutable std::vector<omega_detail::PathCode> codes_;
    mutable std::unordered_map<omega_detail::PathCode, std::int32_t, omega_detail::CodeHash> index_;
    mutable std::unordered_map<std::int32_t, SVec> rules_;
    mutable std::unordered_map<std::int32_t, NfEntry> nf_memo_;
    mutable std::unordered_map<std::int32_t, std::uint64_t> irr_version_;
    std::uint64_t version_ = 0;
    std::vector<std::int32_t> rule_list_;  // insertion order, for determinism
    std::unordered_map<std::int32_t, int> enumerated_cap_;
    std::deque<std::int32_t> pending_;
    std::deque<std::vector<PTerm>> row_queue_;
    bool pairs_suppressed_ = false;
    std::vector<SVec> merged_relators_;
    int cap_ = 0;
    int certified_len_ = -1;

    std::vector<std::int32_t> basis_;
    std::unordered_map<std::int32_t, std::int32_t> basis_index_;
    std::vector<std::map<std::uint8_t, CoordVec>> rtab_;

    mutable std::mutex mtx_;
    mutable std::unordered_map<std::uint64_t, CoordVec> prod_memo_;
    mutable std::once_flag rad_once_;
    mutable RadicalInfo rad_;
    mutable std::map<std::pair<Subset, Subset>, SpanBasis<NumberFieldElem>> rad_spans_;
    mutable std::map<std::pair<Subset, Subset>, std::vector<int>> corner_index_cache_;
};

inline bool QuotientAlgebra::spot_check_ideal(int samples_per_relator, unsigned seed) const {
    std::mt19937 rng(seed);
    for (const auto& rel : merged_relators_) {
        if (rel.empty()) continue;
        // corner of the relator
        Subset tgt = paths_[rel[0].id].front(), src = paths_[rel[0].id].back();
        std::vector<int> lefts, rights;
        for (int i = 0; i < dim(); ++i) {
            if (basis_source(i) == tgt) lefts.push_back(i);
            if (basis_target(i) == src) rights.push_back(i);
        }
        CoordVec relc;
        {
            std::lock_guard<std::mutex> lock(mtx_);
            for (const auto& t : rel) relc = add(relc, scale(nf_to_coords(nf(t.id)), t.c));
        }
        if (!relc.empty()) return false;  // relator itself must project to zero
        for (int n = 0; n < samples_per_relator; ++n) {
            if (lefts.empty() || rights.empty()) break;
            int u = lefts[rng() % lefts.size()];
            int w = rights[rng() % rights.size()];
            // u * rel * w via raw paths
            CoordVec acc;
            std::lock_guard<std::mutex> lock(mtx_);
            for (const auto& t : rel) {
                const QPath& mid = paths_[t.id];
                QPath glued = paths_[basis_[u]];
                glued.insert(glued.end(), mid.begin() + 1, mid.end());
                const QPath& right = paths_[basis_[w]];
                glued.insert(glued.end(), right.begin() + 1, right.end());
                acc = add(acc, scale(nf_to_coords(nf(intern(glued))), t.c));
            }
            if (!acc.empty()) return false;
        }
    }
    return true;
}

}  // namespace wga
