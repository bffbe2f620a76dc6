#ifndef COXREP_GRAPH_HPP
#define COXREP_GRAPH_HPP

#include <map>
#include <set>
#include <string>
#include <vector>

#include "coxrep/errors.hpp"
#include "coxrep/scalar.hpp"

namespace coxrep {

struct Edge {
    int u = -1;
    int v = -1;
    int label = 0; // >= 3, or kInfinity

    bool touches(int a, int b) const {
        return (u == a && v == b) || (u == b && v == a);
    }
};

// Finite connected labeled simple graph (S, E, m_st).  Label 2 means "no
// edge" and is never stored.  Vertex order is first-appearance order from
// the input file; all tie-breaking downstream uses this order.
class CoxeterGraph {
public:
    static CoxeterGraph parse(const std::string& text);
    std::string serialize() const;

    int vertex_count() const { return static_cast<int>(names_.size()); }
    const std::string& name(int v) const { return names_[v]; }
    int vertex(const std::string& name) const; // throws UnknownVertex
    bool has_vertex(const std::string& name) const;

    const std::vector<Edge>& edges() const { return edges_; }
    // Neighbors in increasing vertex order.
    const std::vector<int>& neighbors(int v) const;
    // m_st: edge label, 2 if not adjacent (s != t). Throws on s == t.
    int label(int s, int t) const;
    bool adjacent(int s, int t) const { return label_or_two(s, t) >= 3 || label_or_two(s, t) == kInfinity; }

    int cycle_rank() const;
    int max_finite_label() const; // 3 if none
    std::set<int> finite_labels() const;

    // Every oo label becomes m0; pullback along W ->> W_1 is report metadata.
    CoxeterGraph with_infinite_labels_replaced(int m0) const;

private:
    int label_or_two(int s, int t) const;
    void add_vertex(const std::string& name);
    void add_edge(int u, int v, int label);
    void finalize(); // builds adjacency, checks connectivity

    std::vector<std::string> names_;
    std::map<std::string, int> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::map<std::pair<int, int>, int> labels_;
};

struct SpanningTree {
    int root = -1;
    std::vector<int> parent;      // parent[root] = -1
    std::vector<int> depth;
    std::vector<Edge> tree_edges;     // in BFS discovery order
    std::vector<Edge> non_tree_edges; // in declaration order

    bool has_tree_edge(int a, int b) const;
};

// Deterministic BFS tree from root, neighbors explored in vertex order.
SpanningTree spanning_tree(const CoxeterGraph& g, int root);

// Unique simple path in the tree from a to b (inclusive).
std::vector<int> tree_path(const SpanningTree& t, int a, int b);

// Free generator c_e of pi_1(G, s0): the closed path p_e . c'_e . p_e^{-1}
// through the non-tree edge e, which is crossed tail -> head.
struct ClosedPathGenerator {
    Edge non_tree_edge;
    int tail = -1;
    int head = -1;
    std::vector<int> path; // starts and ends at s0
};

std::vector<ClosedPathGenerator> fundamental_generators(const CoxeterGraph& g,
                                                        const SpanningTree& t,
                                                        int s0);

enum class CaseTag { Tree, OneCircuitAllThrees, OneCircuitWithBigLabel, TwoCircuits };

const char* case_tag_name(CaseTag tag);
CaseTag classify_case(const CoxeterGraph& g);

} // namespace coxrep

#endif
