#pragma once

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "wga/laurent.hpp"
#include "wga/matrix.hpp"
#include "wga/report.hpp"

namespace wga {

enum class CoxType { A1xN, I2, A3, A4, B3, B4, D4, F4, H3, Custom };

inline std::string type_tag(CoxType t) {
    switch (t) {
        case CoxType::A1xN: return "A1xN";
        case CoxType::I2: return "I2";
        case CoxType::A3: return "A3";
        case CoxType::A4: return "A4";
        case CoxType::B3: return "B3";
        case CoxType::B4: return "B4";
        case CoxType::D4: return "D4";
        case CoxType::F4: return "F4";
        case CoxType::H3: return "H3";
        case CoxType::Custom: return "custom";
    }
    return "?";
}

inline CoxType parse_type_tag(const std::string& s) {
    for (CoxType t : {CoxType::A1xN, CoxType::I2, CoxType::A3, CoxType::A4, CoxType::B3,
                      CoxType::B4, CoxType::D4, CoxType::F4, CoxType::H3})
        if (type_tag(t) == s) return t;
    throw std::invalid_argument("unknown Coxeter type tag: " + s);
}

struct CoxeterSystem {
    CoxType type = CoxType::Custom;
    int param = 0;  // m for I2, n for A1xN
    int rank = 0;
    std::vector<std::string> labels;       // generator names, index order
    std::vector<std::vector<int>> coxmat;  // m_st, with m_ss = 1
    FieldCtx ctx;                          // Q(2cos(pi/M)), M = lcm of bonded bond orders

    int m_between(int s, int t) const { return coxmat[s][t]; }
    bool bonded(int s, int t) const { return s != t && coxmat[s][t] >= 3; }

    std::string subset_str(Subset I) const {
        if (I == 0) return "e";
        std::string out;
        for (int i = 0; i < rank; ++i)
            if (contains(I, i)) out += labels[i];
        return out;
    }
};

namespace detail {
inline long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }
}  // namespace detail

// The coefficient field Q(2cos(pi/M)) with M the lcm of the bond orders
// m_st >= 3. Bonds of order 2 contribute only rational constants, so they do
// not enlarge the field; with no bonds at all the field is Q (realized as
// the degenerate index M = 3, whose generator 2cos(pi/3) = 1 is rational).
inline int field_index_for(const std::vector<std::vector<int>>& coxmat) {
    long M = 1;
    for (size_t s = 0; s < coxmat.size(); ++s)
        for (size_t t = s + 1; t < coxmat.size(); ++t)
            if (coxmat[s][t] >= 3) M = detail::lcm_long(M, coxmat[s][t]);
    if (M < 3) M = 3;
    return static_cast<int>(M);
}

inline CoxeterSystem make_system(CoxType type, int param, std::vector<std::string> labels,
                                 std::vector<std::vector<int>> coxmat) {
    CoxeterSystem sys;
    sys.type = type;
    sys.param = param;
    sys.rank = static_cast<int>(labels.size());
    sys.labels = std::move(labels);
    sys.coxmat = std::move(coxmat);
    for (int s = 0; s < sys.rank; ++s) {
        if (sys.coxmat[s][s] != 1) throw std::invalid_argument("coxeter matrix: m_ss must be 1");
        for (int t = 0; t < sys.rank; ++t) {
            if (sys.coxmat[s][t] != sys.coxmat[t][s])
                throw std::invalid_argument("coxeter matrix: not symmetric");
            if (s != t && sys.coxmat[s][t] < 2)
                throw std::invalid_argument("coxeter matrix: m_st must be >= 2 off-diagonal");
        }
    }
    sys.ctx = field_context(field_index_for(sys.coxmat));
    return sys;
}

inline std::vector<std::vector<int>> chain_matrix(const std::vector<int>& bonds) {
    int n = static_cast<int>(bonds.size()) + 1;
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 2));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    for (int i = 0; i + 1 < n; ++i) m[i][i + 1] = m[i + 1][i] = bonds[i];
    return m;
}

// param: m for I2 (>= 3), n for A1xN (>= 1); ignored otherwise.
inline CoxeterSystem build_system(CoxType type, int param = 0) {
    switch (type) {
        case CoxType::A1xN: {
            if (param < 1) throw std::invalid_argument("A1xN needs n >= 1");
            std::vector<std::string> lab;
            for (int i = 1; i <= param; ++i) lab.push_back(std::to_string(i));
            std::vector<std::vector<int>> m(param, std::vector<int>(param, 2));
            for (int i = 0; i < param; ++i) m[i][i] = 1;
            return make_system(type, param, std::move(lab), std::move(m));
        }
        case CoxType::I2: {
            if (param < 3) throw std::invalid_argument("I2 needs m >= 3");
            return make_system(type, param, {"1", "2"}, chain_matrix({param}));
        }
        case CoxType::A3:
            return make_system(type, 0, {"1", "2", "3"}, chain_matrix({3, 3}));
        case CoxType::A4:
            return make_system(type, 0, {"1", "2", "3", "4"}, chain_matrix({3, 3, 3}));
        case CoxType::B3:
            // labels {0,1,2} with the 4-bond on {0,1}
            return make_system(type, 0, {"0", "1", "2"}, chain_matrix({4, 3}));
        case CoxType::B4:
            return make_system(type, 0, {"0", "1", "2", "3"}, chain_matrix({4, 3, 3}));
        case CoxType::F4:
            return make_system(type, 0, {"0", "1", "2", "3"}, chain_matrix({3, 4, 3}));
        case CoxType::H3:
            return make_system(type, 0, {"0", "1", "2"}, chain_matrix({5, 3}));
        case CoxType::D4: {
            // generator 2 is the branch node, matching the figure labels
            std::vector<std::vector<int>> m(4, std::vector<int>(4, 2));
            for (int i = 0; i < 4; ++i) m[i][i] = 1;
            for (int leaf : {0, 1, 3}) m[leaf][2] = m[2][leaf] = 3;
            return make_system(type, 0, {"0", "1", "2", "3"}, std::move(m));
        }
        case CoxType::Custom:
            throw std::invalid_argument("build_system: custom systems use make_system directly");
    }
    throw std::invalid_argument("build_system: unknown type");
}

// |W| by breadth-first closure of the geometric reflection representation:
// sigma_s(alpha_t) = alpha_t + 2cos(pi/m_st) alpha_s, sigma_s(alpha_s) =
// -alpha_s, with exact entries in the system's number field.
inline long group_order(const CoxeterSystem& sys, long cap = 2000000) {
    const int n = sys.rank;
    const auto& ctx = sys.ctx;
    const NumberFieldElem zero = NumberFieldElem::zero(ctx);
    const NumberFieldElem one = NumberFieldElem::one(ctx);
    std::vector<Matrix<NumberFieldElem>> gens;
    for (int s = 0; s < n; ++s) {
        Matrix<NumberFieldElem> g = Matrix<NumberFieldElem>::identity(n, zero, one);
        for (int t = 0; t < n; ++t) {
            if (t == s) {
                g.at(s, s) = -one;
            } else if (sys.coxmat[s][t] >= 3) {
                g.at(s, t) = two_cos(ctx, ctx->m / sys.coxmat[s][t]);
            }
        }
        gens.push_back(std::move(g));
    }
    auto key = [n](const Matrix<NumberFieldElem>& m) {
        std::string k;
        for (size_t i = 0; i < m.rows(); ++i)
            for (size_t j = 0; j < m.cols(); ++j) {
                for (const auto& c : m.at(i, j).coeffs()) k += to_string(c) + ",";
                k += ";";
            }
        return k;
    };
    std::unordered_set<std::string> seen;
    std::vector<Matrix<NumberFieldElem>> frontier{Matrix<NumberFieldElem>::identity(n, zero, one)};
    seen.insert(key(frontier[0]));
    while (!frontier.empty()) {
        std::vector<Matrix<NumberFieldElem>> next;
        for (const auto& w : frontier)
            for (const auto& g : gens) {
                Matrix<NumberFieldElem> p = w * g;
                if (seen.insert(key(p)).second) next.push_back(std::move(p));
                if (static_cast<long>(seen.size()) > cap)
                    throw std::runtime_error("group_order: enumeration cap exceeded");
            }
        frontier = std::move(next);
    }
    return static_cast<long>(seen.size());
}

// ---------------------------------------------------------------------------
// Irreducible character data: labels, degrees and the partial order used by
// the downward-edge check. Degrees are fixed small tables; every table is
// cross-checked against sum d^2 = |W| in the test suite.

struct IrrData {
    std::vector<std::string> labels;
    std::vector<int> degrees;
    // covering pairs (lo, hi) meaning lo < hi in the partial order
    std::vector<std::pair<std::string, std::string>> covers;

    int degree_of(const std::string& l) const {
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == l) return degrees[i];
        throw std::invalid_argument("unknown character label: " + l);
    }
    // reflexive-transitive closure of the covers: is a <= b?
    bool leq(const std::string& a, const std::string& b) const {
        if (a == b) return true;
        std::vector<std::string> stack{a};
        std::unordered_set<std::string> seen{a};
        while (!stack.empty()) {
            std::string cur = stack.back();
            stack.pop_back();
            for (const auto& [lo, hi] : covers)
                if (lo == cur && seen.insert(hi).second) {
                    if (hi == b) return true;
                    stack.push_back(hi);
                }
        }
        return false;
    }
};

namespace detail {
// partitions of n in reverse-lexicographic (dominance-compatible) order
inline void partitions_rec(int n, int maxpart, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, maxpart); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}
inline std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}
inline std::string partition_str(const std::vector<int>& p) {
    std::string s = "(";
    for (size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
    return s + ")";
}
// lambda dominated by mu (both partitions of the same n)
inline bool dominated(const std::vector<int>& lam, const std::vector<int>& mu) {
    int a = 0, b = 0;
    size_t k = std::max(lam.size(), mu.size());
    for (size_t i = 0; i < k; ++i) {
        a += i < lam.size() ? lam[i] : 0;
        b += i < mu.size() ? mu[i] : 0;
        if (a > b) return false;
    }
    return true;
}
// hook length formula
inline int symmetric_group_degree(const std::vector<int>& p) {
    int n = std::accumulate(p.begin(), p.end(), 0);
    long fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    long hooks = 1;
    for (size_t i = 0; i < p.size(); ++i)
        for (int j = 0; j < p[i]; ++j) {
            int arm = p[i] - j - 1;
            int leg = 0;
            for (size_t r = i + 1; r < p.size(); ++r)
                if (p[r] > j) ++leg;
            hooks *= arm + leg + 1;
        }
    return static_cast<int>(fact / hooks);
}
}  // namespace detail

inline IrrData irr_data(const CoxeterSystem& sys) {
    IrrData irr;
    switch (sys.type) {
        case CoxType::A1xN: {
            // characters <-> subsets I (generators acting by -1); the order is
            // reverse inclusion: lambda <= mu iff I_lambda contains I_mu.
            int n = sys.rank;
            for (Subset I = 0; I < (1u << n); ++I) {
                irr.labels.push_back(sys.subset_str(I));
                irr.degrees.push_back(1);
            }
            for (Subset I = 0; I < (1u << n); ++I)
                for (int s = 0; s < n; ++s)
                    if (!contains(I, s))
                        irr.covers.push_back({sys.subset_str(I | (1u << s)), sys.subset_str(I)});
            return irr;
        }
        case CoxType::I2: {
            int m = sys.param;
            irr.labels.push_back("sgn");
            irr.degrees.push_back(1);
            int two_dim = (m % 2 == 0) ? (m - 2) / 2 : (m - 1) / 2;
            for (int a = 1; a <= two_dim; ++a) {
                irr.labels.push_back("lambda" + std::to_string(a));
                irr.degrees.push_back(2);
            }
            if (m % 2 == 0) {
                irr.labels.push_back("eps1");
                irr.degrees.push_back(1);
                irr.labels.push_back("eps2");
                irr.degrees.push_back(1);
            }
            irr.labels.push_back("1");
            irr.degrees.push_back(1);
            // sgn below everything, "1" above everything, the rest incomparable
            for (const auto& l : irr.labels) {
                if (l != "sgn") irr.covers.push_back({"sgn", l});
                if (l != "1") irr.covers.push_back({l, "1"});
            }
            return irr;
        }
        case CoxType::A3:
        case CoxType::A4: {
            int n = sys.rank + 1;
            auto parts = detail::partitions(n);
            for (const auto& p : parts) {
                irr.labels.push_back(detail::partition_str(p));
                irr.degrees.push_back(detail::symmetric_group_degree(p));
            }
            for (const auto& p : parts)
                for (const auto& q : parts)
                    if (p != q && detail::dominated(p, q))
                        irr.covers.push_back({detail::partition_str(p), detail::partition_str(q)});
            return irr;
        }
        case CoxType::B3: {
            // bipartitions (lambda,mu) of 3; heights follow the refined
            // compatibility graph, trivial lowest and sign highest; lambda <=
            // mu in the order iff lambda sits strictly higher than mu. The
            // two middle degree-3 characters are drawn centered at the same
            // level, but the support relation of the computed algebra orders
            // them: (1,1)|(1) lies strictly below (1)|(2).
            struct Row {
                const char* label;
                int degree;
                int height;
            };
            const Row rows[] = {
                {"(3)|()", 1, 0},   {"()|(3)", 1, 1},    {"(2,1)|()", 2, 1}, {"(2)|(1)", 3, 2},
                {"(1)|(2)", 3, 4},  {"(1,1)|(1)", 3, 5}, {"(1)|(1,1)", 3, 6}, {"()|(2,1)", 2, 7},
                {"(1,1,1)|()", 1, 7}, {"()|(1,1,1)", 1, 8},
            };
            for (const auto& r : rows) {
                irr.labels.push_back(r.label);
                irr.degrees.push_back(r.degree);
            }
            for (const auto& a : rows)
                for (const auto& b : rows)
                    if (a.height > b.height)
                        irr.covers.push_back({a.label, b.label});
            return irr;
        }
        default:
            throw std::invalid_argument("irr_data: unsupported type " + type_tag(sys.type));
    }
}

// m-th braid commutator Delta_m(x, y) = xyx... - yxy... (m factors each).
template <class T>
Matrix<T> braid_commutator(const Matrix<T>& x, const Matrix<T>& y, int m) {
    if (x.rows() != y.rows() || x.cols() != y.cols())
        throw std::invalid_argument("braid_commutator: dimension mismatch");
    if (m < 0) throw std::invalid_argument("braid_commutator: m must be >= 0");
    Matrix<T> a = x, b = y;  // alternating products, left-to-right
    if (m == 0) return x - x;
    for (int i = 1; i < m; ++i) {
        a = a * (i % 2 ? y : x);
        b = b * (i % 2 ? x : y);
    }
    return a - b;
}

inline std::string first_nonzero_entry(const Matrix<Laurent>& m) {
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero())
                return "entry (" + std::to_string(i) + "," + std::to_string(j) +
                       ") = " + m.at(i, j).str();
    return "";
}

// Checks the defining Hecke relations for a candidate matrix assignment
// s -> T_s: the quadratic relation T_s^2 = 1 + (v - v^-1) T_s and every
// braid relation Delta_{m_st}(T_s, T_t) = 0.
inline Report check_hecke_rep(const CoxeterSystem& sys,
                              const std::vector<Matrix<Laurent>>& mats) {
    Report rep;
    rep.title = "hecke relations (" + type_tag(sys.type) + ")";
    if (static_cast<int>(mats.size()) != sys.rank)
        throw std::invalid_argument("check_hecke_rep: one matrix per generator required");
    size_t n = mats[0].rows();
    for (const auto& m : mats)
        if (m.rows() != n || m.cols() != n)
            throw std::invalid_argument("check_hecke_rep: matrices must share one dimension");
    const Laurent lzero;
    const Laurent lone = laurent_const(sys.ctx, 1);
    Matrix<Laurent> id = Matrix<Laurent>::identity(n, lzero, lone);
    Laurent quad = laurent_quad_param(sys.ctx);
    for (int s = 0; s < sys.rank; ++s) {
        Matrix<Laurent> lhs = mats[s] * mats[s] - id - mats[s] * quad;
        rep.add("quadratic relation for T_" + sys.labels[s], lhs.is_zero(),
                lhs.is_zero() ? "" : first_nonzero_entry(lhs));
    }
    for (int s = 0; s < sys.rank; ++s)
        for (int t = s + 1; t < sys.rank; ++t) {
            Matrix<Laurent> d = braid_commutator(mats[s], mats[t], sys.coxmat[s][t]);
            rep.add("braid relation (" + sys.labels[s] + "," + sys.labels[t] + "), m=" +
                        std::to_string(sys.coxmat[s][t]),
                    d.is_zero(), d.is_zero() ? "" : first_nonzero_entry(d));
        }
    return rep;
}

// For x, y satisfying the quadratic relation q^2 = 1 + zeta q, checks
// Delta_{r+1}(x, y) = (-1)^r tau_r(x + y - zeta) (x - y) for 0 <= r <= r_max.
inline Report verify_braid_factorization(const Matrix<Laurent>& x, const Matrix<Laurent>& y,
                                         const Laurent& zeta, int r_max, const FieldCtx& ctx) {
    Report rep;
    rep.title = "braid commutator factorization";
    const size_t n = x.rows();
    const Laurent lzero;
    const Laurent lone = laurent_const(ctx, 1);
    Matrix<Laurent> id = Matrix<Laurent>::identity(n, lzero, lone);
    for (const auto* m : {&x, &y}) {
        Matrix<Laurent> q = (*m) * (*m) - id - (*m) * zeta;
        if (!q.is_zero()) {
            rep.add_error("quadratic precondition", first_nonzero_entry(q));
            return rep;
        }
    }
    Matrix<Laurent> arg = x + y - id * zeta;
    auto from_int = [&](const mpz_class& c) { return id * laurent_const(ctx, Rational(c)); };
    for (int r = 0; r <= r_max; ++r) {
        Matrix<Laurent> lhs = braid_commutator(x, y, r + 1);
        Matrix<Laurent> rhs = tau_poly(r).evaluate(arg, from_int) * (x - y);
        if (r % 2 == 1) rhs = -rhs;
        rep.add("r = " + std::to_string(r), lhs == rhs);
    }
    return rep;
}

}  // namespace wga
