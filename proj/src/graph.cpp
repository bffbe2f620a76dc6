#include "coxrep/graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace coxrep {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    return tokens;
}

} // namespace

CoxeterGraph CoxeterGraph::parse(const std::string& text) {
    CoxeterGraph g;
    bool saw_vertices = false;
    struct PendingEdge { std::string a, b; int label; int line; };
    std::vector<PendingEdge> pending;

    std::istringstream is(text);
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto tokens = tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "vertices:") {
            if (saw_vertices) {
                throw Error(ErrorCode::SyntaxError,
                            "line " + std::to_string(lineno) + ": duplicate vertices line");
            }
            if (tokens.size() < 2) {
                throw Error(ErrorCode::SyntaxError,
                            "line " + std::to_string(lineno) + ": empty vertices line");
            }
            for (size_t i = 1; i < tokens.size(); ++i) g.add_vertex(tokens[i]);
            saw_vertices = true;
        } else if (tokens[0] == "edge") {
            if (tokens.size() != 4) {
                throw Error(ErrorCode::SyntaxError,
                            "line " + std::to_string(lineno) + ": expected 'edge a b label'");
            }
            int label;
            if (tokens[3] == "inf") {
                label = kInfinity;
            } else {
                try {
                    size_t pos = 0;
                    label = std::stoi(tokens[3], &pos);
                    if (pos != tokens[3].size()) throw std::invalid_argument("trailing");
                } catch (const std::exception&) {
                    throw Error(ErrorCode::SyntaxError,
                                "line " + std::to_string(lineno) + ": bad label '" + tokens[3] + "'");
                }
                if (label < 3) {
                    throw Error(ErrorCode::BadLabel,
                                "line " + std::to_string(lineno) + ": label " + tokens[3] +
                                    " (labels are >= 3 or inf; 2 means no edge)");
                }
            }
            pending.push_back({tokens[1], tokens[2], label, lineno});
        } else {
            throw Error(ErrorCode::SyntaxError,
                        "line " + std::to_string(lineno) + ": unrecognized line");
        }
    }
    if (!saw_vertices) throw Error(ErrorCode::SyntaxError, "missing vertices line");
    for (const auto& e : pending) {
        g.add_edge(g.vertex(e.a), g.vertex(e.b), e.label);
    }
    g.finalize();
    return g;
}

std::string CoxeterGraph::serialize() const {
    std::ostringstream os;
    os << "vertices:";
    for (const auto& n : names_) os << " " << n;
    os << "\n";
    for (const auto& e : edges_) {
        os << "edge " << names_[e.u] << " " << names_[e.v] << " ";
        if (e.label == kInfinity) {
            os << "inf";
        } else {
            os << e.label;
        }
        os << "\n";
    }
    return os.str();
}

void CoxeterGraph::add_vertex(const std::string& name) {
    if (index_.count(name)) {
        throw Error(ErrorCode::SyntaxError, "duplicate vertex '" + name + "'");
    }
    index_[name] = static_cast<int>(names_.size());
    names_.push_back(name);
}

void CoxeterGraph::add_edge(int u, int v, int label) {
    if (u == v) throw Error(ErrorCode::LoopEdge, "loop at '" + names_[u] + "'");
    auto key = std::minmax(u, v);
    if (labels_.count({key.first, key.second})) {
        throw Error(ErrorCode::DuplicateEdge,
                    "edge {" + names_[u] + "," + names_[v] + "} listed twice");
    }
    labels_[{key.first, key.second}] = label;
    edges_.push_back(Edge{u, v, label});
}

void CoxeterGraph::finalize() {
    adj_.assign(names_.size(), {});
    for (const auto& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
    // connectivity
    if (names_.empty()) throw Error(ErrorCode::SyntaxError, "no vertices");
    std::vector<bool> seen(names_.size(), false);
    std::deque<int> queue{0};
    seen[0] = true;
    int reached = 1;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : adj_[v]) {
            if (!seen[w]) {
                seen[w] = true;
                ++reached;
                queue.push_back(w);
            }
        }
    }
    if (reached != vertex_count()) {
        throw Error(ErrorCode::Disconnected, "graph is not connected");
    }
}

int CoxeterGraph::vertex(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) throw Error(ErrorCode::UnknownVertex, "'" + name + "'");
    return it->second;
}

bool CoxeterGraph::has_vertex(const std::string& name) const {
    return index_.count(name) > 0;
}

const std::vector<int>& CoxeterGraph::neighbors(int v) const {
    if (v < 0 || v >= vertex_count()) throw Error(ErrorCode::UnknownVertex, std::to_string(v));
    return adj_[v];
}

int CoxeterGraph::label_or_two(int s, int t) const {
    auto key = std::minmax(s, t);
    auto it = labels_.find({key.first, key.second});
    return it == labels_.end() ? 2 : it->second;
}

int CoxeterGraph::label(int s, int t) const {
    if (s < 0 || s >= vertex_count() || t < 0 || t >= vertex_count() || s == t) {
        throw Error(ErrorCode::UnknownVertex, "bad vertex pair");
    }
    return label_or_two(s, t);
}

int CoxeterGraph::cycle_rank() const {
    return static_cast<int>(edges_.size()) - vertex_count() + 1;
}

int CoxeterGraph::max_finite_label() const {
    int m = 3;
    for (const auto& e : edges_) {
        if (e.label != kInfinity) m = std::max(m, e.label);
    }
    return m;
}

std::set<int> CoxeterGraph::finite_labels() const {
    std::set<int> labels;
    for (const auto& e : edges_) {
        if (e.label != kInfinity) labels.insert(e.label);
    }
    return labels;
}

CoxeterGraph CoxeterGraph::with_infinite_labels_replaced(int m0) const {
    if (m0 < 3) throw Error(ErrorCode::BadLabel, "replacement label must be >= 3");
    CoxeterGraph g = *this;
    for (auto& e : g.edges_) {
        if (e.label == kInfinity) e.label = m0;
    }
    for (auto& [key, label] : g.labels_) {
        if (label == kInfinity) label = m0;
    }
    return g;
}

bool SpanningTree::has_tree_edge(int a, int b) const {
    for (const auto& e : tree_edges) {
        if (e.touches(a, b)) return true;
    }
    return false;
}

SpanningTree spanning_tree(const CoxeterGraph& g, int root) {
    if (root < 0 || root >= g.vertex_count()) {
        throw Error(ErrorCode::UnknownVertex, std::to_string(root));
    }
    SpanningTree t;
    t.root = root;
    t.parent.assign(g.vertex_count(), -1);
    t.depth.assign(g.vertex_count(), -1);
    t.depth[root] = 0;
    std::deque<int> queue{root};
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int w : g.neighbors(v)) {
            if (t.depth[w] >= 0) continue;
            t.depth[w] = t.depth[v] + 1;
            t.parent[w] = v;
            t.tree_edges.push_back(Edge{v, w, g.label(v, w)});
            queue.push_back(w);
        }
    }
    for (const auto& e : g.edges()) {
        if (!t.has_tree_edge(e.u, e.v)) t.non_tree_edges.push_back(e);
    }
    return t;
}

std::vector<int> tree_path(const SpanningTree& t, int a, int b) {
    int n = static_cast<int>(t.parent.size());
    if (a < 0 || a >= n || b < 0 || b >= n || t.depth[a] < 0 || t.depth[b] < 0) {
        throw Error(ErrorCode::UnknownVertex, "vertex not in tree");
    }
    std::vector<int> up, down;
    int x = a, y = b;
    while (t.depth[x] > t.depth[y]) { up.push_back(x); x = t.parent[x]; }
    while (t.depth[y] > t.depth[x]) { down.push_back(y); y = t.parent[y]; }
    while (x != y) {
        up.push_back(x);
        down.push_back(y);
        x = t.parent[x];
        y = t.parent[y];
    }
    up.push_back(x);
    up.insert(up.end(), down.rbegin(), down.rend());
    return up;
}

std::vector<ClosedPathGenerator> fundamental_generators(const CoxeterGraph& g,
                                                        const SpanningTree& t,
                                                        int s0) {
    if (s0 < 0 || s0 >= g.vertex_count()) {
        throw Error(ErrorCode::UnknownVertex, std::to_string(s0));
    }
    // validate t against g
    if (static_cast<int>(t.tree_edges.size()) != g.vertex_count() - 1 ||
        static_cast<int>(t.parent.size()) != g.vertex_count()) {
        throw Error(ErrorCode::NotSpanningTree, "tree does not span the graph");
    }
    for (const auto& e : t.tree_edges) {
        if (g.label(e.u, e.v) < 3 && g.label(e.u, e.v) != kInfinity) {
            throw Error(ErrorCode::NotSpanningTree, "tree edge missing from graph");
        }
    }

    std::vector<ClosedPathGenerator> gens;
    for (const auto& e : t.non_tree_edges) {
        // circuit c'_e = tree path u..v plus the edge {v,u}
        std::vector<int> circ = tree_path(t, e.u, e.v);
        // attachment vertex: first vertex of the tree path s0 -> u on the circuit
        std::vector<int> approach = tree_path(t, s0, e.u);
        std::set<int> on_circuit(circ.begin(), circ.end());
        int attach = -1;
        size_t attach_pos_in_approach = 0;
        for (size_t i = 0; i < approach.size(); ++i) {
            if (on_circuit.count(approach[i])) { attach = approach[i]; attach_pos_in_approach = i; break; }
        }
        size_t ai = std::find(circ.begin(), circ.end(), attach) - circ.begin();
        size_t k = circ.size() - 1; // circ = [u = v_0, ..., v_k = v]
        // cross e from the endpoint farther from the attachment to the closer
        // one; on a tie, cross from the endpoint earlier in vertex order
        size_t du = ai;       // distance from attach to u along the circuit path
        size_t dv = k - ai;   // distance from attach to v
        bool cross_u_to_v;
        if (du != dv) {
            // u closer (du < dv): cross v -> u; u farther: cross u -> v
            cross_u_to_v = du > dv;
        } else {
            cross_u_to_v = e.u < e.v;
        }
        ClosedPathGenerator gen;
        gen.non_tree_edge = e;
        std::vector<int> loop;
        if (cross_u_to_v) {
            // attach -> ... -> v_0 = u, cross to v_k = v, -> ... -> attach
            for (size_t i = ai + 1; i-- > 0;) loop.push_back(circ[i]);
            for (size_t i = k + 1; i-- > ai;) loop.push_back(circ[i]);
            gen.tail = e.u;
            gen.head = e.v;
        } else {
            for (size_t i = ai; i <= k; ++i) loop.push_back(circ[i]);
            for (size_t i = 0; i <= ai; ++i) loop.push_back(circ[i]);
            gen.tail = e.v;
            gen.head = e.u;
        }
        // conjugate to the basepoint: p_e . loop . p_e^{-1}
        std::vector<int> path(approach.begin(), approach.begin() + attach_pos_in_approach);
        path.insert(path.end(), loop.begin(), loop.end());
        for (size_t i = attach_pos_in_approach + 1; i-- > 1;) path.push_back(approach[i - 1]);
        gen.path = std::move(path);
        gens.push_back(std::move(gen));
    }
    return gens;
}

const char* case_tag_name(CaseTag tag) {
    switch (tag) {
        case CaseTag::Tree: return "Tree";
        case CaseTag::OneCircuitAllThrees: return "OneCircuitAllThrees";
        case CaseTag::OneCircuitWithBigLabel: return "OneCircuitWithBigLabel";
        case CaseTag::TwoCircuits: return "TwoCircuits";
    }
    return "?";
}

CaseTag classify_case(const CoxeterGraph& g) {
    int rank = g.cycle_rank();
    if (rank >= 2) return CaseTag::TwoCircuits;
    if (rank == 0) return CaseTag::Tree;
    bool big = false;
    for (const auto& e : g.edges()) {
        if (e.label == kInfinity || e.label >= 4) big = true;
    }
    return big ? CaseTag::OneCircuitWithBigLabel : CaseTag::OneCircuitAllThrees;
}

} // namespace coxrep
