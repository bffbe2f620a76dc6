#ifndef COXREP_COVER_HPP
#define COXREP_COVER_HPP

#include <string>
#include <vector>

#include "coxrep/graph.hpp"

namespace coxrep {

// Vertex of the universal covering, named by the non-backtracking path
// from the root that reaches it.
struct CoverVertex {
    std::vector<int> path; // base-graph vertices, path[0] = root

    int depth() const { return static_cast<int>(path.size()) - 1; }
    int project() const { return path.back(); }
};

// Truncated universal covering p : G' -> G, realized as all non-backtracking
// paths from s1 of length <= D.  It is a tree; vertex 0 is s1' = (s1) and
// the distinguished lifted edge is {(s1), (s1, s2)}.
class CoveredGraph {
public:
    static CoveredGraph build(const CoxeterGraph& g, int s1, int s2, int depth);

    const CoxeterGraph& base() const { return base_; }
    int root() const { return root_; }
    int mate() const { return mate_; }
    int truncation_depth() const { return depth_; }

    int vertex_count() const { return static_cast<int>(verts_.size()); }
    const CoverVertex& vertex(int id) const { return verts_[id]; }
    int parent(int id) const { return parent_[id]; }
    const std::vector<int>& children(int id) const { return children_[id]; }

    int s1_prime() const { return 0; }
    int s2_prime() const { return s2_prime_; }

    // The unique neighbor of `id` projecting to base vertex s, or -1 when it
    // falls outside the truncation.  Throws NotAnEdge if s is not adjacent
    // to the projection of `id`.
    int neighbor_in_fiber(int id, int s) const;

    // Tree distance via longest common prefix of the two paths.
    int distance(int a, int b) const;

    // 1 if strictly closer to s1', 2 if strictly closer to s2'.
    int partition_class(int id) const;

    std::string vertex_name(int id) const; // base names joined with '.'

private:
    CoxeterGraph base_;
    int root_ = -1;
    int mate_ = -1;
    int depth_ = 0;
    int s2_prime_ = -1;
    std::vector<CoverVertex> verts_;
    std::vector<int> parent_;
    std::vector<std::vector<int>> children_;
};

} // namespace coxrep

#endif
