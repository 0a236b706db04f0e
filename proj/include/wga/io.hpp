#pragma once

#include <fstream>

#include "json.hpp"
#include "wga/decomp.hpp"

namespace wga {

// insertion-ordered JSON keeps every emitted report byte-deterministic
using Json = nlohmann::ordered_json;

inline Json report_to_json(const Report& rep) {
    Json j;
    j["title"] = rep.title;
    j["all_pass"] = rep.all_pass();
    Json items = Json::array();
    for (const auto& it : rep.items) {
        Json e;
        e["name"] = it.name;
        e["status"] = it.status;
        if (!it.detail.empty()) e["detail"] = it.detail;
        items.push_back(e);
    }
    j["items"] = items;
    return j;
}

inline Json field_elem_to_json(const NumberFieldElem& x) {
    Json j;
    j["m"] = x.ctx()->m;
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs()) coeffs.push_back(to_string(c));
    j["coeffs"] = coeffs;
    return j;
}

inline NumberFieldElem field_elem_from_json(const Json& j) {
    FieldCtx ctx = field_context(j.at("m").get<int>());
    std::vector<Rational> coeffs;
    for (const auto& s : j.at("coeffs")) coeffs.push_back(rational_from_string(s.get<std::string>()));
    return NumberFieldElem(ctx, std::move(coeffs));
}

inline Json subset_to_json(const CoxeterSystem& sys, Subset I) {
    Json arr = Json::array();
    for (int s = 0; s < sys.rank; ++s)
        if (contains(I, s)) arr.push_back(sys.labels[s]);
    return arr;
}

inline Json system_to_json(const CoxeterSystem& sys) {
    Json j;
    j["schema"] = 1;
    j["type"] = type_tag(sys.type);
    if (sys.type == CoxType::I2) j["m"] = sys.param;
    if (sys.type == CoxType::A1xN) j["n"] = sys.param;
    j["generators"] = sys.labels;
    j["coxeter_matrix"] = sys.coxmat;
    j["field_index"] = sys.ctx->m;
    return j;
}

inline Json irr_to_json(const IrrData& irr) {
    Json j;
    j["labels"] = irr.labels;
    j["degrees"] = irr.degrees;
    Json covers = Json::array();
    for (const auto& [lo, hi] : irr.covers) covers.push_back(Json::array({lo, hi}));
    j["order"] = covers;
    return j;
}

inline Json quiver_to_json(const Quiver& q, const CoxeterSystem& sys) {
    Json j;
    j["schema"] = 1;
    j["type"] = type_tag(sys.type);
    j["full"] = q.full;
    Json verts = Json::array();
    for (Subset I = 0; I < q.vertex_count(); ++I) verts.push_back(sys.subset_str(I));
    j["vertices"] = verts;
    Json edges = Json::array();
    for (const auto& e : q.edges) {
        Json je;
        je["target"] = sys.subset_str(e.target);
        je["source"] = sys.subset_str(e.source);
        je["kind"] = e.inclusion ? "inclusion" : "transversal";
        if (e.tag >= 0) je["tag"] = sys.labels[e.tag];
        edges.push_back(je);
    }
    j["edges"] = edges;
    return j;
}

// --- W-graph files -----------------------------------------------------------
//
// {"schema":1, "type":..., "vertices":[...], "labels":{v:[s,...]},
//  "weights":{s:[[entry,...],...]}} with entries "p/q" for rational weights
// and coefficient-vector arrays otherwise.

inline Json wgraph_to_json(const CoxeterSystem& sys, const WGraph& g) {
    Json j;
    j["schema"] = 1;
    j["type"] = type_tag(sys.type);
    if (sys.type == CoxType::I2) j["m"] = sys.param;
    if (sys.type == CoxType::A1xN) j["n"] = sys.param;
    j["vertices"] = g.vertex_names;
    Json labels = Json::object();
    for (size_t x = 0; x < g.size(); ++x) labels[g.vertex_names[x]] = subset_to_json(sys, g.labels[x]);
    j["labels"] = labels;
    Json weights = Json::object();
    for (int s = 0; s < sys.rank; ++s) {
        Json mat = Json::array();
        for (size_t x = 0; x < g.size(); ++x) {
            Json row = Json::array();
            for (size_t y = 0; y < g.size(); ++y) {
                const NumberFieldElem& w = g.weights[s].at(x, y);
                if (w.is_rational()) row.push_back(to_string(w.rational_value()));
                else {
                    Json coeffs = Json::array();
                    for (const auto& c : w.coeffs()) coeffs.push_back(to_string(c));
                    row.push_back(coeffs);
                }
            }
            mat.push_back(row);
        }
        weights[sys.labels[s]] = mat;
    }
    j["weights"] = weights;
    return j;
}

inline WGraph wgraph_from_json(const CoxeterSystem& sys, const Json& j) {
    std::vector<std::string> names;
    for (const auto& v : j.at("vertices")) names.push_back(v.get<std::string>());
    auto gen_index = [&](const std::string& l) {
        for (int s = 0; s < sys.rank; ++s)
            if (sys.labels[s] == l) return s;
        throw std::invalid_argument("wgraph file: unknown generator label " + l);
    };
    std::vector<Subset> labels;
    for (const auto& name : names) {
        Subset I = 0;
        for (const auto& l : j.at("labels").at(name)) I |= 1u << gen_index(l.get<std::string>());
        labels.push_back(I);
    }
    const size_t n = names.size();
    std::vector<Matrix<NumberFieldElem>> weights;
    for (int s = 0; s < sys.rank; ++s) {
        Matrix<NumberFieldElem> m(n, n, NumberFieldElem::zero(sys.ctx));
        const Json& mat = j.at("weights").at(sys.labels[s]);
        for (size_t x = 0; x < n; ++x)
            for (size_t y = 0; y < n; ++y) {
                const Json& cell = mat.at(x).at(y);
                if (cell.is_string()) {
                    m.at(x, y) = NumberFieldElem(sys.ctx, rational_from_string(cell.get<std::string>()));
                } else {
                    std::vector<Rational> coeffs;
                    for (const auto& c : cell) coeffs.push_back(rational_from_string(c.get<std::string>()));
                    coeffs.resize(sys.ctx->deg, Rational(0));
                    m.at(x, y) = NumberFieldElem(sys.ctx, std::move(coeffs));
                }
            }
        weights.push_back(std::move(m));
    }
    return make_wgraph(sys, std::move(labels), std::move(weights), std::move(names));
}

// --- quotient bundle ----------------------------------------------------------

inline Json quotient_to_json(const QuotientAlgebra& alg) {
    const CoxeterSystem& sys = alg.system();
    Json j;
    j["schema"] = 1;
    j["type"] = type_tag(sys.type);
    if (sys.param) j["param"] = sys.param;
    Json field;
    field["m"] = sys.ctx->m;
    Json mp = Json::array();
    for (const auto& c : sys.ctx->minpoly.coeffs()) mp.push_back(c.get_str());
    field["minpoly"] = mp;
    j["field"] = field;
    j["dim"] = alg.dim();
    j["certified_length"] = alg.certified_length();
    j["length_bound"] = alg.length_bound_used();
    j["radical_dim"] = alg.radical().dim_radical;
    j["semisimple_dim"] = alg.radical().dim_semisimple;
    Json basis = Json::array();
    for (int i = 0; i < alg.dim(); ++i) {
        Json p = Json::array();
        for (auto v : alg.basis_path(i)) p.push_back(sys.subset_str(v));
        basis.push_back(p);
    }
    j["basis"] = basis;
    Json sc = Json::array();
    for (int i = 0; i < alg.dim(); ++i) {
        QuotientAlgebra::CoordVec bi{{i, NumberFieldElem::one(sys.ctx)}};
        for (int jdx = 0; jdx < alg.dim(); ++jdx) {
            if (alg.basis_source(i) != alg.basis_target(jdx)) continue;
            QuotientAlgebra::CoordVec p =
                alg.mul(bi, {{jdx, NumberFieldElem::one(sys.ctx)}});
            for (const auto& [k, c] : p) {
                Json coeffs = Json::array();
                for (const auto& r : c.coeffs()) coeffs.push_back(to_string(r));
                sc.push_back(Json::array({i, jdx, k, coeffs}));
            }
        }
    }
    j["structure_constants"] = sc;
    return j;
}

// --- refined compatibility graph ---------------------------------------------

inline std::string refined_graph_to_dot(const QuotientAlgebra& alg, const IdempotentFamily& fam) {
    using QA = QuotientAlgebra;
    const CoxeterSystem& sys = alg.system();
    std::ostringstream os;
    os << "digraph refined {\n  rankdir=BT;\n";
    int cluster = 0;
    for (const auto& la : fam.labels) {
        os << "  subgraph cluster_" << cluster << " {\n";
        os << "    label=\"" << la << "\";\n";
        std::vector<Subset> verts;
        for (const auto& [I, e] : fam.FI.at(la)) verts.push_back(I);
        for (Subset I : verts)
            os << "    c" << cluster << "_v" << I << " [label=\"" << dot_vertex_label(sys, I)
               << "\"];\n";
        for (size_t a = 0; a < verts.size(); ++a)
            for (size_t b = a + 1; b < verts.size(); ++b) {
                Subset I = verts[a], J = verts[b];
                if (!alg.compat().has_edge(I, J) || !alg.compat().has_edge(J, I)) continue;
                Elem w1 = alg.mul(alg.mul(fam.FI.at(la).at(I), alg.edge(I, J)), fam.FI.at(la).at(J));
                Elem w2 = alg.mul(alg.mul(fam.FI.at(la).at(J), alg.edge(J, I)), fam.FI.at(la).at(I));
                if (!QA::is_zero(w1) && !QA::is_zero(w2))
                    os << "    c" << cluster << "_v" << I << " -> c" << cluster << "_v" << J
                       << " [style=bold, dir=none];\n";
            }
        os << "  }\n";
        ++cluster;
    }
    os << "}\n";
    return os.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace wga
