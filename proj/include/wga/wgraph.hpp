#pragma once

#include "wga/matrix.hpp"
#include "wga/pathalg.hpp"

namespace wga {

// Combinatorial W-graph datum: vertices, their label subsets I(x), and one
// weight matrix per generator. Weight entry (x, y) is the coefficient with
// which y feeds into x.
struct WGraph {
    std::vector<std::string> vertex_names;
    std::vector<Subset> labels;
    std::vector<Matrix<NumberFieldElem>> weights;  // indexed by generator

    size_t size() const { return labels.size(); }
};

// Module over the W-graph algebra, given by the projector images of the E_I
// and the images of the x_s.
struct OmegaModule {
    CoxeterSystem sys;
    int dim = 0;
    std::vector<Matrix<NumberFieldElem>> e_proj;  // indexed by subset bitmask
    std::vector<Matrix<NumberFieldElem>> x_mat;   // indexed by generator
};

inline WGraph make_wgraph(const CoxeterSystem& sys, std::vector<Subset> labels,
                          std::vector<Matrix<NumberFieldElem>> weights,
                          std::vector<std::string> names = {}) {
    WGraph g;
    g.labels = std::move(labels);
    g.weights = std::move(weights);
    if (static_cast<int>(g.weights.size()) != sys.rank)
        throw std::invalid_argument("make_wgraph: one weight matrix per generator");
    for (const auto& m : g.weights)
        if (m.rows() != g.labels.size() || m.cols() != g.labels.size())
            throw std::invalid_argument("make_wgraph: weight matrix size mismatch");
    if (names.empty())
        for (size_t i = 0; i < g.labels.size(); ++i) g.vertex_names.push_back("x" + std::to_string(i));
    else g.vertex_names = std::move(names);
    return g;
}

// The matrices omega(T_s): -v^-1 on diagonal positions with s in I(x), v on
// the others, weight entries elsewhere.
inline std::vector<Matrix<Laurent>> wgraph_hecke_matrices(const CoxeterSystem& sys,
                                                          const WGraph& g) {
    const size_t n = g.size();
    std::vector<Matrix<Laurent>> out;
    for (int s = 0; s < sys.rank; ++s) {
        Matrix<Laurent> m(n, n, Laurent());
        for (size_t x = 0; x < n; ++x)
            m.at(x, x) = contains(g.labels[x], s) ? -laurent_v(sys.ctx, -1) : laurent_v(sys.ctx, 1);
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < n; ++y) {
                if (x == y) continue;
                const NumberFieldElem& w = g.weights[s].at(x, y);
                if (!w.is_zero()) m.at(x, y) = Laurent::from_const(w);
            }
        out.push_back(std::move(m));
    }
    return out;
}

// Condition 1, the weight-agreement property (warning only), and the braid
// relations: the quadratic relation holds automatically for matrices of the
// omega(T_s) shape, so the braid commutators are the only non-trivial part.
inline Report validate_wgraph(const CoxeterSystem& sys, const WGraph& g) {
    Report rep;
    rep.title = "W-graph validation (" + type_tag(sys.type) + ", " + std::to_string(g.size()) +
                " vertices)";
    if (static_cast<int>(g.weights.size()) != sys.rank)
        throw std::invalid_argument("validate_wgraph: weight matrix count mismatch");
    for (const auto& m : g.weights)
        if (m.rows() != g.size() || m.cols() != g.size())
            throw std::invalid_argument("validate_wgraph: weight matrix size mismatch");
    bool cond1 = true;
    std::string offender;
    for (int s = 0; s < sys.rank && cond1; ++s)
        for (size_t x = 0; x < g.size() && cond1; ++x)
            for (size_t y = 0; y < g.size(); ++y) {
                if (g.weights[s].at(x, y).is_zero()) continue;
                if (!contains(g.labels[x] & ~g.labels[y], s)) {
                    cond1 = false;
                    offender = "(x=" + g.vertex_names[x] + ", y=" + g.vertex_names[y] +
                               ", s=" + sys.labels[s] + ")";
                    break;
                }
            }
    rep.add("condition 1: weights supported on s in I(x)\\I(y)", cond1, offender);
    if (!cond1) return rep;

    // weight agreement across tags (a theorem for quotient-derived graphs,
    // only a warning for hand-entered data)
    bool agree = true;
    for (size_t x = 0; x < g.size() && agree; ++x)
        for (size_t y = 0; y < g.size() && agree; ++y) {
            NumberFieldElem seen = NumberFieldElem::zero(sys.ctx);
            bool have = false;
            for (int s = 0; s < sys.rank; ++s) {
                if (!contains(g.labels[x] & ~g.labels[y], s)) continue;
                const NumberFieldElem& w = g.weights[s].at(x, y);
                if (w.is_zero()) continue;
                if (have && !(w == seen)) {
                    agree = false;
                    break;
                }
                seen = w;
                have = true;
            }
        }
    rep.items.push_back({"weight agreement across tags", true, agree ? "ok" : "warn",
                         agree ? "" : "edge weights differ across tags (permitted, collapses in the quotient)"});

    auto mats = wgraph_hecke_matrices(sys, g);
    for (int s = 0; s < sys.rank; ++s)
        for (int t = s + 1; t < sys.rank; ++t) {
            Matrix<Laurent> d = braid_commutator(mats[s], mats[t], sys.coxmat[s][t]);
            rep.add("braid relation (" + sys.labels[s] + "," + sys.labels[t] + ")", d.is_zero(),
                    d.is_zero() ? "" : first_nonzero_entry(d));
        }
    return rep;
}

// Evaluate a path element as a matrix in a module: a path contributes
// E_{v0} x E_{v1} x ... with the module's matrices.
inline Matrix<NumberFieldElem> evaluate_in_module(const OmegaModule& mod,
                                                  const PathElement<NumberFieldElem>& el) {
    const NumberFieldElem zero = NumberFieldElem::zero(mod.sys.ctx);
    Matrix<NumberFieldElem> acc(mod.dim, mod.dim, zero);
    for (const auto& [p, c] : el.terms()) {
        Matrix<NumberFieldElem> cur = mod.e_proj[p.verts[0]];
        for (size_t k = 0; k < p.tags.size(); ++k)
            cur = cur * mod.x_mat[p.tags[k]] * mod.e_proj[p.verts[k + 1]];
        acc = acc + cur * c;
    }
    return acc;
}

// All alpha/beta relator images must vanish in a genuine module.
inline Report module_relator_check(const OmegaModule& mod) {
    Report rep;
    rep.title = "relator images in module";
    auto fq = std::make_shared<const Quiver>(build_full_quiver(mod.sys));
    for (int s = 0; s < mod.sys.rank; ++s)
        for (int t = 0; t < mod.sys.rank; ++t) {
            if (s == t) continue;
            auto al = alpha_relators(mod.sys, fq, s, t);
            bool ok = true;
            for (const auto& r : al)
                if (!evaluate_in_module(mod, r).is_zero()) {
                    ok = false;
                    break;
                }
            rep.add("alpha relators (" + mod.sys.labels[s] + "," + mod.sys.labels[t] + ")", ok);
            if (s < t) {
                auto be = beta_relators(mod.sys, fq, s, t);
                bool okb = true;
                for (const auto& r : be)
                    if (!evaluate_in_module(mod, r).is_zero()) {
                        okb = false;
                        break;
                    }
                rep.add("beta relators {" + mod.sys.labels[s] + "," + mod.sys.labels[t] + "}", okb);
            }
        }
    return rep;
}

inline OmegaModule wgraph_to_module(const CoxeterSystem& sys, const WGraph& g) {
    Report val = validate_wgraph(sys, g);
    if (!val.all_pass()) throw std::invalid_argument("wgraph_to_module: graph does not validate");
    OmegaModule mod;
    mod.sys = sys;
    mod.dim = static_cast<int>(g.size());
    const NumberFieldElem zero = NumberFieldElem::zero(sys.ctx);
    const NumberFieldElem one = NumberFieldElem::one(sys.ctx);
    mod.e_proj.assign(size_t(1) << sys.rank, Matrix<NumberFieldElem>(mod.dim, mod.dim, zero));
    for (int x = 0; x < mod.dim; ++x) mod.e_proj[g.labels[x]].at(x, x) = one;
    mod.x_mat = g.weights;
    return mod;
}

// Choose a basis of each projector image (default: the pivot columns of the
// column-reduced E_J) and read the W-graph back off the module.
inline WGraph module_to_wgraph(const OmegaModule& mod) {
    const NumberFieldElem zero = NumberFieldElem::zero(mod.sys.ctx);
    const NumberFieldElem one = NumberFieldElem::one(mod.sys.ctx);
    // gather basis columns per subset
    std::vector<std::vector<std::vector<NumberFieldElem>>> cols(mod.e_proj.size());
    int total = 0;
    for (size_t I = 0; I < mod.e_proj.size(); ++I) {
        Matrix<NumberFieldElem> m = mod.e_proj[I].transpose();  // rows = columns of E_I
        std::vector<size_t> piv;
        size_t rank = row_echelon(m, &piv);
        for (size_t r = 0; r < rank; ++r) {
            std::vector<NumberFieldElem> v(mod.dim, zero);
            for (int j = 0; j < mod.dim; ++j) v[j] = m.at(r, j);
            cols[I].push_back(std::move(v));
        }
        total += static_cast<int>(rank);
    }
    if (total != mod.dim)
        throw std::invalid_argument("module_to_wgraph: projector images do not span");
    // change of basis P: columns are the chosen vectors, grouped by subset
    Matrix<NumberFieldElem> P(mod.dim, mod.dim, zero);
    std::vector<Subset> labels;
    int c = 0;
    for (size_t I = 0; I < cols.size(); ++I)
        for (const auto& v : cols[I]) {
            for (int r = 0; r < mod.dim; ++r) P.at(r, c) = v[r];
            labels.push_back(static_cast<Subset>(I));
            ++c;
        }
    // invert P by echelon on [P | id]
    Matrix<NumberFieldElem> aug(mod.dim, 2 * mod.dim, zero);
    for (int i = 0; i < mod.dim; ++i) {
        for (int j = 0; j < mod.dim; ++j) aug.at(i, j) = P.at(i, j);
        aug.at(i, mod.dim + i) = one;
    }
    if (row_echelon(aug) != static_cast<size_t>(mod.dim))
        throw std::invalid_argument("module_to_wgraph: basis choice is singular");
    Matrix<NumberFieldElem> Pinv(mod.dim, mod.dim, zero);
    for (int i = 0; i < mod.dim; ++i)
        for (int j = 0; j < mod.dim; ++j) Pinv.at(i, j) = aug.at(i, mod.dim + j);
    std::vector<Matrix<NumberFieldElem>> weights;
    for (int s = 0; s < mod.sys.rank; ++s) weights.push_back(Pinv * mod.x_mat[s] * P);
    return make_wgraph(mod.sys, std::move(labels), std::move(weights));
}

// Antiautomorphism e_s -> 1 - e_s, x_s -> -x_s realized on modules by
// transposing and complementing labels.
inline OmegaModule apply_duality(const OmegaModule& mod) {
    OmegaModule out;
    out.sys = mod.sys;
    out.dim = mod.dim;
    const Subset full = static_cast<Subset>((size_t(1) << mod.sys.rank) - 1);
    out.e_proj.assign(mod.e_proj.size(), Matrix<NumberFieldElem>(mod.dim, mod.dim,
                                                                 NumberFieldElem::zero(mod.sys.ctx)));
    for (size_t I = 0; I < mod.e_proj.size(); ++I)
        out.e_proj[full & ~static_cast<Subset>(I)] = mod.e_proj[I].transpose();
    for (const auto& m : mod.x_mat) out.x_mat.push_back(-m.transpose());
    return out;
}

inline WGraph apply_duality(const CoxeterSystem& sys, const WGraph& g) {
    const Subset full = static_cast<Subset>((size_t(1) << sys.rank) - 1);
    WGraph out;
    out.vertex_names = g.vertex_names;
    for (Subset l : g.labels) out.labels.push_back(full & ~l);
    for (const auto& m : g.weights) out.weights.push_back(-m.transpose());
    return out;
}

inline void check_automorphism(const CoxeterSystem& sys, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != sys.rank)
        throw std::invalid_argument("graph automorphism: wrong size");
    for (int s = 0; s < sys.rank; ++s)
        for (int t = 0; t < sys.rank; ++t)
            if (sys.coxmat[s][t] != sys.coxmat[perm[s]][perm[t]])
                throw std::invalid_argument("graph automorphism: does not preserve the Coxeter matrix");
}

inline Subset apply_perm(Subset I, const std::vector<int>& perm) {
    Subset out = 0;
    for (size_t s = 0; s < perm.size(); ++s)
        if (contains(I, static_cast<int>(s))) out |= (1u << perm[s]);
    return out;
}

inline WGraph apply_graph_automorphism(const CoxeterSystem& sys, const std::vector<int>& perm,
                                       const WGraph& g) {
    check_automorphism(sys, perm);
    WGraph out;
    out.vertex_names = g.vertex_names;
    for (Subset l : g.labels) out.labels.push_back(apply_perm(l, perm));
    out.weights.resize(sys.rank, Matrix<NumberFieldElem>(g.size(), g.size(),
                                                         NumberFieldElem::zero(sys.ctx)));
    for (int s = 0; s < sys.rank; ++s) out.weights[perm[s]] = g.weights[s];
    return out;
}

inline OmegaModule apply_graph_automorphism(const CoxeterSystem& sys, const std::vector<int>& perm,
                                            const OmegaModule& mod) {
    check_automorphism(sys, perm);
    OmegaModule out;
    out.sys = mod.sys;
    out.dim = mod.dim;
    out.e_proj.assign(mod.e_proj.size(),
                      Matrix<NumberFieldElem>(mod.dim, mod.dim, NumberFieldElem::zero(sys.ctx)));
    for (size_t I = 0; I < mod.e_proj.size(); ++I)
        out.e_proj[apply_perm(static_cast<Subset>(I), perm)] = mod.e_proj[I];
    out.x_mat.resize(sys.rank, Matrix<NumberFieldElem>(mod.dim, mod.dim, NumberFieldElem::zero(sys.ctx)));
    for (int s = 0; s < sys.rank; ++s) out.x_mat[perm[s]] = mod.x_mat[s];
    return out;
}

inline OmegaModule direct_sum(const OmegaModule& a, const OmegaModule& b) {
    if (a.sys.ctx->m != b.sys.ctx->m || a.sys.rank != b.sys.rank)
        throw std::invalid_argument("direct_sum: incompatible modules");
    OmegaModule out;
    out.sys = a.sys;
    out.dim = a.dim + b.dim;
    const NumberFieldElem zero = NumberFieldElem::zero(a.sys.ctx);
    auto block = [&](const Matrix<NumberFieldElem>& x, const Matrix<NumberFieldElem>& y) {
        Matrix<NumberFieldElem> m(out.dim, out.dim, zero);
        for (int i = 0; i < a.dim; ++i)
            for (int j = 0; j < a.dim; ++j) m.at(i, j) = x.at(i, j);
        for (int i = 0; i < b.dim; ++i)
            for (int j = 0; j < b.dim; ++j) m.at(a.dim + i, a.dim + j) = y.at(i, j);
        return m;
    };
    for (size_t I = 0; I < a.e_proj.size(); ++I)
        out.e_proj.push_back(block(a.e_proj[I], b.e_proj[I]));
    for (int s = 0; s < a.sys.rank; ++s) out.x_mat.push_back(block(a.x_mat[s], b.x_mat[s]));
    return out;
}

// --- standard fixtures -------------------------------------------------------

// one vertex labelled with the empty set: the trivial representation
inline WGraph wgraph_trivial(const CoxeterSystem& sys) {
    return make_wgraph(sys, {Subset(0)},
                       std::vector<Matrix<NumberFieldElem>>(
                           sys.rank, Matrix<NumberFieldElem>(1, 1, NumberFieldElem::zero(sys.ctx))));
}

// one vertex labelled with all of S: the sign representation
inline WGraph wgraph_sign(const CoxeterSystem& sys) {
    return make_wgraph(sys, {static_cast<Subset>((size_t(1) << sys.rank) - 1)},
                       std::vector<Matrix<NumberFieldElem>>(
                           sys.rank, Matrix<NumberFieldElem>(1, 1, NumberFieldElem::zero(sys.ctx))));
}

// Two-vertex graph for I2(m): labels {1}, {2}, weights 1 and sigma_a. Valid
// exactly for a = 1..floor((m-1)/2); realizes the two-dimensional character
// lambda_a.
inline WGraph wgraph_dihedral(const CoxeterSystem& sys, int a) {
    if (sys.type != CoxType::I2) throw std::invalid_argument("wgraph_dihedral: I2 systems only");
    const NumberFieldElem zero = NumberFieldElem::zero(sys.ctx);
    Matrix<NumberFieldElem> m1(2, 2, zero), m2(2, 2, zero);
    m1.at(0, 1) = NumberFieldElem::one(sys.ctx);
    m2.at(1, 0) = sigma_in(sys.ctx, a, sys.param);
    return make_wgraph(sys, {Subset(1), Subset(2)}, {m1, m2});
}

}  // namespace wga
