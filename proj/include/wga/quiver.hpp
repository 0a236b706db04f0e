#pragma once

#include <sstream>

#include "wga/coxeter.hpp"

namespace wga {

// Quiver on the power set of the generator set. Two flavours share the
// type: the full quiver has |I\J| edges I<-J, one per generator tag in I\J;
// the compatibility graph has at most a single untagged edge per ordered
// pair (tag = -1), present iff I\J is nonempty and every element of I\J is
// bonded to every element of J\I.
struct QuiverEdge {
    Subset target = 0;  // I in an edge I <- J
    Subset source = 0;  // J
    int tag = -1;       // generator index for the full quiver, -1 otherwise
    bool inclusion = false;
};

struct Quiver {
    int rank = 0;
    bool full = false;
    std::vector<QuiverEdge> edges;
    // adjacency[source] = list of targets, ascending (compatibility graph)
    std::vector<std::vector<Subset>> adjacency;

    size_t vertex_count() const { return size_t(1) << rank; }
    bool has_edge(Subset target, Subset source) const {
        for (Subset t : adjacency[source])
            if (t == target) return true;
        return false;
    }
};

inline bool compatibility_edge(const CoxeterSystem& sys, Subset I, Subset J) {
    Subset IJ = I & ~J, JI = J & ~I;
    if (IJ == 0) return false;
    for (int s = 0; s < sys.rank; ++s) {
        if (!contains(IJ, s)) continue;
        for (int t = 0; t < sys.rank; ++t)
            if (contains(JI, t) && sys.coxmat[s][t] == 2) return false;
    }
    return true;
}

inline Quiver build_full_quiver(const CoxeterSystem& sys) {
    if (sys.rank > 5) throw std::invalid_argument("build_full_quiver: rank > 5 unsupported");
    Quiver q;
    q.rank = sys.rank;
    q.full = true;
    q.adjacency.resize(q.vertex_count());
    for (Subset I = 0; I < q.vertex_count(); ++I)
        for (Subset J = 0; J < q.vertex_count(); ++J) {
            Subset IJ = I & ~J;
            if (IJ == 0) continue;
            for (int s = 0; s < sys.rank; ++s)
                if (contains(IJ, s)) q.edges.push_back({I, J, s, (J & ~I) == 0});
            q.adjacency[J].push_back(I);
        }
    return q;
}

inline Quiver build_compatibility_graph(const CoxeterSystem& sys) {
    if (sys.rank > 5) throw std::invalid_argument("build_compatibility_graph: rank > 5 unsupported");
    Quiver q;
    q.rank = sys.rank;
    q.full = false;
    q.adjacency.resize(q.vertex_count());
    for (Subset I = 0; I < q.vertex_count(); ++I)
        for (Subset J = 0; J < q.vertex_count(); ++J) {
            if (!compatibility_edge(sys, I, J)) continue;
            q.edges.push_back({I, J, -1, (J & ~I) == 0});
            q.adjacency[J].push_back(I);
        }
    return q;
}

inline std::vector<std::pair<Subset, Subset>> transversal_pairs(const Quiver& q) {
    std::vector<std::pair<Subset, Subset>> out;
    for (const auto& e : q.edges)
        if (!e.inclusion && e.source < e.target) out.push_back({e.source, e.target});
    return out;
}

inline std::string dot_vertex_label(const CoxeterSystem& sys, Subset I) {
    return I == 0 ? "∅" : sys.subset_str(I);
}

// Figure convention: transversal pairs as one bold undirected edge,
// inclusion edges as thin dashed arrows.
inline std::string quiver_to_dot(const Quiver& q, const CoxeterSystem& sys,
                                 const std::string& name = "Q") {
    std::ostringstream os;
    os << "digraph " << name << " {\n";
    os << "  rankdir=BT;\n";
    for (Subset I = 0; I < q.vertex_count(); ++I)
        os << "  v" << I << " [label=\"" << dot_vertex_label(sys, I) << "\"];\n";
    for (const auto& e : q.edges) {
        if (!e.inclusion && e.source > e.target) continue;  // draw each pair once
        os << "  v" << e.source << " -> v" << e.target;
        std::string attrs;
        if (e.inclusion) attrs = "style=dashed";
        else attrs = "style=bold, dir=none";
        if (e.tag >= 0) attrs += ", label=\"" + sys.labels[e.tag] + "\"";
        os << " [" << attrs << "];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace wga
