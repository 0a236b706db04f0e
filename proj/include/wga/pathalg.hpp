#pragma once

#include "wga/quiver.hpp"

namespace wga {

// Path in the full quiver: vertex sequence v0 <- v1 <- ... <- vk together
// with the generator tag of every edge. Length-0 paths are the vertex
// idempotents E_I.
struct FullPath {
    std::vector<std::uint8_t> verts;
    std::vector<std::uint8_t> tags;

    size_t length() const { return tags.size(); }
    Subset target() const { return verts.front(); }
    Subset source() const { return verts.back(); }

    friend bool operator<(const FullPath& a, const FullPath& b) {
        if (a.tags.size() != b.tags.size()) return a.tags.size() < b.tags.size();
        if (a.verts != b.verts) return a.verts < b.verts;
        return a.tags < b.tags;
    }
    friend bool operator==(const FullPath& a, const FullPath& b) {
        return a.verts == b.verts && a.tags == b.tags;
    }
};

// Finite linear combination of full-quiver paths. The coefficient ring C
// needs +, -, *, is_zero; no zero coefficients are stored.
template <class C>
class PathElement {
public:
    PathElement() = default;
    explicit PathElement(std::shared_ptr<const Quiver> q) : q_(std::move(q)) {}

    const std::shared_ptr<const Quiver>& quiver() const { return q_; }
    const std::map<FullPath, C>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    size_t max_length() const {
        size_t n = 0;
        for (const auto& [p, c] : t_) n = std::max(n, p.length());
        return n;
    }

    void add_term(const FullPath& p, const C& c) {
        auto it = t_.find(p);
        if (it == t_.end()) {
            if (!c.is_zero()) t_.emplace(p, c);
        } else {
            it->second = it->second + c;
            if (it->second.is_zero()) t_.erase(it);
        }
    }

    friend PathElement operator+(const PathElement& a, const PathElement& b) {
        a.check(b);
        PathElement r(a);
        for (const auto& [p, c] : b.t_) r.add_term(p, c);
        return r;
    }
    friend PathElement operator-(const PathElement& a, const PathElement& b) {
        a.check(b);
        PathElement r(a);
        for (const auto& [p, c] : b.t_) r.add_term(p, -c);
        return r;
    }
    PathElement operator-() const {
        PathElement r(q_);
        for (const auto& [p, c] : t_) r.t_.emplace(p, -c);
        return r;
    }
    friend PathElement operator*(const PathElement& a, const C& s) {
        PathElement r(a.q_);
        for (const auto& [p, c] : a.t_) {
            C x = c * s;
            if (!x.is_zero()) r.t_.emplace(p, x);
        }
        return r;
    }
    // Concatenation product: paths compose when the left factor's source
    // matches the right factor's target (E_I E_J = delta_IJ E_I built in).
    friend PathElement operator*(const PathElement& a, const PathElement& b) {
        a.check(b);
        PathElement r(a.q_ ? a.q_ : b.q_);
        for (const auto& [p, c] : a.t_)
            for (const auto& [q, d] : b.t_) {
                if (p.source() != q.target()) continue;
                FullPath pq;
                pq.verts = p.verts;
                pq.verts.insert(pq.verts.end(), q.verts.begin() + 1, q.verts.end());
                pq.tags = p.tags;
                pq.tags.insert(pq.tags.end(), q.tags.begin(), q.tags.end());
                r.add_term(pq, c * d);
            }
        return r;
    }
    friend bool operator==(const PathElement& a, const PathElement& b) {
        a.check(b);
        return a.t_ == b.t_;
    }

    std::string str(const CoxeterSystem& sys) const {
        if (t_.empty()) return "0";
        std::string s;
        for (const auto& [p, c] : t_) {
            if (!s.empty()) s += " + ";
            s += "(" + c.str() + ")*[";
            for (size_t i = 0; i < p.verts.size(); ++i) {
                if (i) s += "<-";
                s += sys.subset_str(p.verts[i]);
            }
            s += "]";
        }
        return s;
    }

private:
    void check(const PathElement& o) const {
        if (q_ && o.q_ && q_.get() != o.q_.get())
            throw context_mismatch_error("path elements over different quivers");
    }
    std::shared_ptr<const Quiver> q_;
    std::map<FullPath, C> t_;
};

// --- element constructors ---------------------------------------------------

template <class C>
PathElement<C> vertex_idem(const std::shared_ptr<const Quiver>& q, Subset I, const C& one) {
    PathElement<C> e(q);
    FullPath p;
    p.verts = {static_cast<std::uint8_t>(I)};
    e.add_term(p, one);
    return e;
}

template <class C>
PathElement<C> unit(const std::shared_ptr<const Quiver>& q, const C& one) {
    PathElement<C> e(q);
    for (Subset I = 0; I < q->vertex_count(); ++I) {
        FullPath p;
        p.verts = {static_cast<std::uint8_t>(I)};
        e.add_term(p, one);
    }
    return e;
}

// X^s_IJ = E_I x_s E_J; defined only for s in I\J.
template <class C>
PathElement<C> edge_elem(const std::shared_ptr<const Quiver>& q, Subset I, Subset J, int s,
                         const C& one) {
    if (!contains(I & ~J, s)) throw std::invalid_argument("edge_elem: need s in I\\J");
    PathElement<C> e(q);
    FullPath p;
    p.verts = {static_cast<std::uint8_t>(I), static_cast<std::uint8_t>(J)};
    p.tags = {static_cast<std::uint8_t>(s)};
    e.add_term(p, one);
    return e;
}

// e_s = sum of E_I over I containing s.
template <class C>
PathElement<C> gen_e(const std::shared_ptr<const Quiver>& q, int s, const C& one) {
    PathElement<C> e(q);
    for (Subset I = 0; I < q->vertex_count(); ++I)
        if (contains(I, s)) {
            FullPath p;
            p.verts = {static_cast<std::uint8_t>(I)};
            e.add_term(p, one);
        }
    return e;
}

// x_s = sum of X^s_IJ over all I, J with s in I\J.
template <class C>
PathElement<C> gen_x(const std::shared_ptr<const Quiver>& q, int s, const C& one) {
    PathElement<C> e(q);
    for (Subset I = 0; I < q->vertex_count(); ++I) {
        if (!contains(I, s)) continue;
        for (Subset J = 0; J < q->vertex_count(); ++J) {
            if (contains(J, s)) continue;
            FullPath p;
            p.verts = {static_cast<std::uint8_t>(I), static_cast<std::uint8_t>(J)};
            p.tags = {static_cast<std::uint8_t>(s)};
            e.add_term(p, one);
        }
    }
    return e;
}

// P^r_IJ(s, t) = E_I x_s x_t x_s ... E_J (r alternating factors).
template <class C>
PathElement<C> p_element(const std::shared_ptr<const Quiver>& q, Subset I, Subset J, int s, int t,
                         int r, const C& one) {
    if (r < 0) throw std::invalid_argument("p_element: r must be >= 0");
    PathElement<C> acc = vertex_idem(q, I, one);
    for (int i = 0; i < r; ++i) acc = acc * gen_x(q, i % 2 == 0 ? s : t, one);
    return acc * vertex_idem(q, J, one);
}

// --- relator families --------------------------------------------------------
//
// The kernel of the quotient onto the W-graph algebra is generated, per
// ordered bonded pair (s, t), by
//   (alpha)  sum_j a_j P^j_IJ(s, t)  with tau_{m-1} = sum_j a_j T^j, over the
//            (I, J) membership pattern picked by the parity of m = m_st:
//            both I and J contain s but not t when m is odd, and s in I\J,
//            t in J\I when m is even (these are the patterns for which the
//            sum has nonzero terms, since tau_{m-1} has fixed parity), and
//   (beta)   P^i_IJ(s, t) - P^i_IJ(t, s), i = 1..m, whenever s, t both lie
//            in I\J.
// Enumeration order: (I, J) ascending as bitmask pairs, then i ascending.

inline std::vector<PathElement<NumberFieldElem>> alpha_relators(
    const CoxeterSystem& sys, const std::shared_ptr<const Quiver>& q, int s, int t) {
    if (s == t) throw std::invalid_argument("alpha_relators: s != t required");
    const NumberFieldElem one = NumberFieldElem::one(sys.ctx);
    const int m = sys.coxmat[s][t];
    const IntPoly tau = tau_poly(m - 1);
    std::vector<PathElement<NumberFieldElem>> out;
    for (Subset I = 0; I < q->vertex_count(); ++I) {
        if (!contains(I, s) || contains(I, t)) continue;
        for (Subset J = 0; J < q->vertex_count(); ++J) {
            bool pattern = (m % 2 == 1) ? (contains(J, s) && !contains(J, t))
                                        : (!contains(J, s) && contains(J, t));
            if (!pattern) continue;
            PathElement<NumberFieldElem> rel(q);
            for (int j = 0; j <= m - 1; ++j) {
                if (tau.coeff(j) == 0) continue;
                rel = rel + p_element(q, I, J, s, t, j, one) * (one * Rational(tau.coeff(j)));
            }
            out.push_back(std::move(rel));
        }
    }
    return out;
}

inline std::vector<PathElement<NumberFieldElem>> beta_relators(
    const CoxeterSystem& sys, const std::shared_ptr<const Quiver>& q, int s, int t) {
    if (s == t) throw std::invalid_argument("beta_relators: s != t required");
    const NumberFieldElem one = NumberFieldElem::one(sys.ctx);
    const int m = sys.coxmat[s][t];
    std::vector<PathElement<NumberFieldElem>> out;
    for (Subset I = 0; I < q->vertex_count(); ++I) {
        if (!contains(I, s) || !contains(I, t)) continue;
        for (Subset J = 0; J < q->vertex_count(); ++J) {
            if (contains(J, s) || contains(J, t)) continue;
            for (int i = 1; i <= m; ++i)
                out.push_back(p_element(q, I, J, s, t, i, one) -
                              p_element(q, I, J, t, s, i, one));
        }
    }
    return out;
}

// iota(T_s) = -v^-1 e_s + v(1 - e_s) + x_s, with Laurent coefficients.
inline PathElement<Laurent> iota_T(const CoxeterSystem& sys,
                                   const std::shared_ptr<const Quiver>& q, int s) {
    const Laurent one = laurent_const(sys.ctx, 1);
    PathElement<Laurent> e = gen_e(q, s, one);
    PathElement<Laurent> rest = unit(q, one) - e;
    return e * (-laurent_v(sys.ctx, -1)) + rest * laurent_v(sys.ctx, 1) + gen_x(q, s, one);
}

// Coefficient-wise expansion of Delta_{m_st}(iota(T_s), iota(T_t)): one path
// element per v-exponent. This is the defining relator family; the
// alpha/beta lists above must cut out the same ideal.
inline std::vector<PathElement<NumberFieldElem>> braid_defining_relators(
    const CoxeterSystem& sys, const std::shared_ptr<const Quiver>& q, int s, int t) {
    const Laurent lone = laurent_const(sys.ctx, 1);
    const int m = sys.coxmat[s][t];
    PathElement<Laurent> a = iota_T(sys, q, s), b = iota_T(sys, q, t);
    PathElement<Laurent> w1 = a, w2 = b;
    for (int i = 1; i < m; ++i) {
        w1 = w1 * (i % 2 ? b : a);
        w2 = w2 * (i % 2 ? a : b);
    }
    PathElement<Laurent> delta = w1 - w2;
    std::map<int, PathElement<NumberFieldElem>> per_exp;
    for (const auto& [p, c] : delta.terms())
        for (const auto& [k, coeff] : c.terms()) {
            auto it = per_exp.find(k);
            if (it == per_exp.end()) it = per_exp.emplace(k, PathElement<NumberFieldElem>(q)).first;
            it->second.add_term(p, coeff);
        }
    std::vector<PathElement<NumberFieldElem>> out;
    for (auto& [k, rel] : per_exp)
        if (!rel.is_zero()) out.push_back(std::move(rel));
    return out;
}

}  // namespace wga
