#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "coxrep/verify.hpp"

using namespace coxrep;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::SyntaxError, "cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string label_str(int m) { return m == kInfinity ? "inf" : std::to_string(m); }

// buffer wide enough for the longest relation word and one monodromy loop
int default_buffer(const CoxeterGraph& g) {
    int b = 2 * g.max_finite_label();
    SpanningTree t = spanning_tree(g, 0);
    for (const auto& c : fundamental_generators(g, t, 0)) {
        b = std::max(b, 2 * g.max_finite_label() +
                            static_cast<int>(c.path.size()) - 1);
    }
    return b;
}

int edge_index_by_names(const CoxeterGraph& g, const std::vector<std::string>& pair) {
    int u = g.vertex(pair[0]);
    int v = g.vertex(pair[1]);
    for (size_t i = 0; i < g.edges().size(); ++i) {
        if (g.edges()[i].touches(u, v)) return static_cast<int>(i);
    }
    throw Error(ErrorCode::NotAnEdge, "no edge {" + pair[0] + "," + pair[1] + "}");
}

int run_analyze(const std::string& file) {
    CoxeterGraph g = CoxeterGraph::parse(slurp(file));
    std::cout << "vertices (" << g.vertex_count() << "):";
    for (int v = 0; v < g.vertex_count(); ++v) std::cout << " " << g.name(v);
    std::cout << "\nedges (" << g.edges().size() << "):\n";
    for (const auto& e : g.edges()) {
        std::cout << "  " << g.name(e.u) << " -- " << g.name(e.v) << "  m = "
                  << label_str(e.label) << "\n";
    }
    std::cout << "cycle rank: " << g.cycle_rank() << "\n";
    std::cout << "case: " << case_tag_name(classify_case(g)) << "\n";
    SpanningTree t = spanning_tree(g, 0);
    std::cout << "spanning tree (root " << g.name(0) << "):";
    for (const auto& e : t.tree_edges) {
        std::cout << " {" << g.name(e.u) << "," << g.name(e.v) << "}";
    }
    std::cout << "\n";
    auto gens = fundamental_generators(g, t, 0);
    for (size_t i = 0; i < gens.size(); ++i) {
        std::cout << "generator c" << i + 1 << ": crosses " << g.name(gens[i].tail)
                  << " -> " << g.name(gens[i].head) << ", path";
        for (int v : gens[i].path) std::cout << " " << g.name(v);
        std::cout << "\n";
    }
    return 0;
}

int run_cover(const std::string& file, const std::vector<std::string>& edge, int depth) {
    CoxeterGraph g = CoxeterGraph::parse(slurp(file));
    CoveredGraph cov =
        CoveredGraph::build(g, g.vertex(edge[0]), g.vertex(edge[1]), depth);
    for (int id = 0; id < cov.vertex_count(); ++id) {
        std::cout << cov.vertex_name(id) << "\t" << cov.vertex(id).depth() << "\t"
                  << g.name(cov.vertex(id).project()) << "\n";
    }
    return 0;
}

int run_verify(const std::string& file, const std::string& family, int window,
               int depth, int buffer_opt, const std::vector<std::string>& edge1,
               const std::vector<std::string>& edge2,
               const std::vector<std::string>& special, const std::string& json_out,
               bool inject_fault) {
    CoxeterGraph g = CoxeterGraph::parse(slurp(file));
    SuiteConfig config;
    config.graph_name = file;

    std::optional<RepWindow> rep;
    if (family == "pi1") {
        bool has_inf = false;
        for (const auto& e : g.edges()) has_inf |= e.label == kInfinity;
        if (has_inf) {
            g = g.with_infinite_labels_replaced(3);
            config.infinite_labels_replaced = true;
        }
        int buffer = buffer_opt > 0 ? buffer_opt : default_buffer(g);
        SpanningTree t = spanning_tree(g, 0);
        auto gens = fundamental_generators(g, t, 0);
        if (gens.size() < 2) {
            throw Error(ErrorCode::CaseMismatch, "need at least two circuits");
        }
        auto pick = [&](const std::vector<std::string>& names, size_t fallback) {
            if (names.empty()) {
                return OrientedSpecialEdge{gens[fallback].tail, gens[fallback].head};
            }
            int u = g.vertex(names[0]), v = g.vertex(names[1]);
            for (const auto& c : gens) {
                if (c.non_tree_edge.touches(u, v)) return OrientedSpecialEdge{c.tail, c.head};
            }
            throw Error(ErrorCode::NotAnEdge,
                        "{" + names[0] + "," + names[1] + "} is not a non-tree edge");
        };
        auto ctx = ScalarContext::make(g.finite_labels());
        rep = build_pi1_rep(g, t, 0, pick(edge1, 0), pick(edge2, 1), window, buffer, ctx);
    } else if (family == "cover") {
        int buffer = buffer_opt > 0 ? buffer_opt : default_buffer(g);
        int s1 = -1, s2 = -1;
        if (!special.empty()) {
            const Edge& e = g.edges()[edge_index_by_names(g, special)];
            s1 = g.vertex(special[0]);
            s2 = g.vertex(special[1]);
            if (e.label == kInfinity || e.label < 4) {
                throw Error(ErrorCode::CaseMismatch,
                            "distinguished edge must carry a finite label >= 4");
            }
        } else {
            for (const auto& e : g.edges()) {
                if (e.label != kInfinity && e.label >= 4) {
                    s1 = e.u;
                    s2 = e.v;
                    break;
                }
            }
            if (s1 < 0) {
                throw Error(ErrorCode::CaseMismatch,
                            "no edge with a finite label >= 4");
            }
        }
        CoveredGraph cov = CoveredGraph::build(g, s1, s2, depth + buffer);
        auto ctx = ScalarContext::make(g.finite_labels());
        rep = build_cover_rep(g, cov, depth, buffer, ctx);
    } else if (family == "pgl") {
        bool shape_ok = g.vertex_count() == 3 && g.edges().size() == 2 &&
                        g.label(0, 1) == 3 && g.label(1, 2) == kInfinity;
        if (!shape_ok) {
            throw Error(ErrorCode::CaseMismatch,
                        "this family needs the 3-vertex path with labels 3 and inf");
        }
        int buffer = buffer_opt > 0 ? buffer_opt : default_buffer(g);
        auto ctx = ScalarContext::make({3});
        rep = build_pgl_rep(window, buffer, ctx);
    } else {
        throw Error(ErrorCode::CaseMismatch, "unknown family " + family);
    }

    if (inject_fault) {
        BasisIndex idx = rep->core_indices().front();
        rep->corrupt_entry(rep->generators().front(), idx, SparseVector());
    }

    auto reports = run_suite(*rep, config);
    bool any_fail = false;
    for (const auto& r : reports) {
        any_fail |= r.failed();
        std::cout << "[" << status_name(r.status) << "] " << r.name;
        if (!r.details.empty()) std::cout << " -- " << r.details;
        std::cout << "\n";
        if (!r.counterexample.empty()) {
            std::cout << "    counterexample: " << r.counterexample << "\n";
        }
    }
    if (!json_out.empty()) {
        std::ofstream out(json_out);
        out << suite_json(*rep, config, reports).dump(2) << "\n";
    }
    return any_fail ? 1 : 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of window-truncated Coxeter group actions"};
    app.require_subcommand(1);

    std::string file, family = "pi1", json_out;
    int window = 6, depth = 10, buffer = 0, cover_depth = 4;
    std::vector<std::string> edge1, edge2, special, edge;
    bool inject_fault = false;

    auto* analyze = app.add_subcommand("analyze", "graph structure report");
    analyze->add_option("file", file)->required();

    auto* verify = app.add_subcommand("verify", "build a family and run the check suite");
    verify->add_option("file", file)->required();
    verify->add_option("--family", family, "pi1 | cover | pgl")->required();
    verify->add_option("--window", window, "pi1/pgl core half-width");
    verify->add_option("--depth", depth, "cover core depth");
    verify->add_option("--buffer", buffer, "buffer width (default: auto)");
    verify->add_option("--edge1", edge1, "first special edge (pi1)")->expected(2);
    verify->add_option("--edge2", edge2, "second special edge (pi1)")->expected(2);
    verify->add_option("--special", special, "distinguished edge (cover)")->expected(2);
    verify->add_option("--json", json_out, "write a machine-readable report");
    verify->add_flag("--inject-fault", inject_fault)->group(""); // test hook

    auto* cover = app.add_subcommand("cover", "dump the truncated covering tree");
    cover->add_option("file", file)->required();
    cover->add_option("--edge", edge, "distinguished edge")->required()->expected(2);
    cover->add_option("--depth", cover_depth, "truncation depth");

    try {
        app.parse(argc, argv);
        if (analyze->parsed()) return run_analyze(file);
        if (cover->parsed()) return run_cover(file, edge, cover_depth);
        return run_verify(file, family, window, depth, buffer, edge1, edge2, special,
                          json_out, inject_fault);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const Error& e) {
        std::cerr << "error [" << error_code_name(e.code()) << "]: " << e.what() << "\n";
        return 2;
    }
}
