#include "coxrep/cover.hpp"

#include <sstream>

namespace coxrep {

CoveredGraph CoveredGraph::build(const CoxeterGraph& g, int s1, int s2, int depth) {
    if (g.label(s1, s2) == 2) {
        throw Error(ErrorCode::NotAnEdge,
                    "{" + g.name(s1) + "," + g.name(s2) + "} is not an edge");
    }
    if (depth < 2) throw Error(ErrorCode::TooShallow, "depth must be >= 2");

    CoveredGraph cov;
    cov.base_ = g;
    cov.root_ = s1;
    cov.mate_ = s2;
    cov.depth_ = depth;

    cov.verts_.push_back(CoverVertex{{s1}});
    cov.parent_.push_back(-1);
    cov.children_.push_back({});
    // breadth-first by construction: children in neighbor order
    for (int id = 0; id < static_cast<int>(cov.verts_.size()); ++id) {
        const CoverVertex v = cov.verts_[id];
        if (v.depth() >= depth) continue;
        int at = v.project();
        int prev = v.depth() == 0 ? -1 : v.path[v.path.size() - 2];
        for (int w : g.neighbors(at)) {
            if (w == prev) continue; // non-backtracking
            CoverVertex child;
            child.path = v.path;
            child.path.push_back(w);
            cov.verts_.push_back(child);
            cov.parent_.push_back(id);
            cov.children_.push_back({});
            cov.children_[id].push_back(static_cast<int>(cov.verts_.size()) - 1);
        }
    }
    for (int id = 0; id < cov.vertex_count(); ++id) {
        if (cov.verts_[id].depth() == 1 && cov.verts_[id].project() == s2) {
            cov.s2_prime_ = id;
            break;
        }
    }
    return cov;
}

int CoveredGraph::neighbor_in_fiber(int id, int s) const {
    const CoverVertex& v = verts_[id];
    if (!base_.adjacent(v.project(), s)) {
        throw Error(ErrorCode::NotAnEdge, "base vertices are not adjacent");
    }
    int p = parent_[id];
    if (p >= 0 && verts_[p].project() == s) return p;
    for (int c : children_[id]) {
        if (verts_[c].project() == s) return c;
    }
    return -1; // outside the truncation
}

int CoveredGraph::distance(int a, int b) const {
    const auto& pa = verts_[a].path;
    const auto& pb = verts_[b].path;
    size_t lcp = 0;
    while (lcp < pa.size() && lcp < pb.size() && pa[lcp] == pb[lcp]) ++lcp;
    return static_cast<int>(pa.size() + pb.size() - 2 * lcp);
}

int CoveredGraph::partition_class(int id) const {
    int d1 = distance(id, s1_prime());
    int d2 = distance(id, s2_prime());
    return d1 < d2 ? 1 : 2;
}

std::string CoveredGraph::vertex_name(int id) const {
    std::ostringstream os;
    const auto& path = verts_[id].path;
    for (size_t i = 0; i < path.size(); ++i) {
        if (i) os << ".";
        os << base_.name(path[i]);
    }
    return os.str();
}

} // namespace coxrep
