#include <algorithm>
#include <set>

#include <doctest.h>

#include "coxrep/cover.hpp"
#include "util.hpp"

using namespace coxrep;

namespace {

// independent oracle: enumerate non-backtracking paths by depth-first search
void enumerate_paths(const CoxeterGraph& g, std::vector<int>& path, int depth,
                     std::vector<std::vector<int>>& out) {
    out.push_back(path);
    if (static_cast<int>(path.size()) - 1 >= depth) return;
    int at = path.back();
    int prev = path.size() >= 2 ? path[path.size() - 2] : -1;
    for (int w : g.neighbors(at)) {
        if (w == prev) continue;
        path.push_back(w);
        enumerate_paths(g, path, depth, out);
        path.pop_back();
    }
}

} // namespace

TEST_CASE("triangle cover at depth 2, golden") {
    CoxeterGraph g = CoxeterGraph::parse(fixture("triangle_433.graph"));
    CoveredGraph cov = CoveredGraph::build(g, g.vertex("a"), g.vertex("b"), 2);
    REQUIRE(cov.vertex_count() == 5);
    CHECK(cov.vertex_name(0) == "a");
    CHECK(cov.vertex_name(1) == "a.b");
    CHECK(cov.vertex_name(2) == "a.c");
    CHECK(cov.vertex_name(3) == "a.b.c");
    CHECK(cov.vertex_name(4) == "a.c.b");
    CHECK(cov.s1_prime() == 0);
    CHECK(cov.s2_prime() == 1);
    CHECK(cov.vertex(3).depth() == 2);
    CHECK(cov.vertex(3).project() == g.vertex("c"));
}

TEST_CASE("single edge cover stays a single lifted edge") {
    CoxeterGraph g = CoxeterGraph::parse(fixture("single_edge_m6.graph"));
    CoveredGraph cov = CoveredGraph::build(g, 0, 1, 5);
    CHECK(cov.vertex_count() == 2);
    CHECK(cov.truncation_depth() == 5);
    CHECK(cov.neighbor_in_fiber(0, 1) == 1);
    CHECK(cov.neighbor_in_fiber(1, 0) == 0);
}

TEST_CASE("cover vertices match the brute-force path enumeration") {
    for (const char* name : {"triangle_533.graph", "rank2_disjoint.graph"}) {
        CoxeterGraph g = CoxeterGraph::parse(fixture(name));
        int s1 = g.edges()[0].u, s2 = g.edges()[0].v;
        CoveredGraph cov = CoveredGraph::build(g, s1, s2, 5);
        std::vector<std::vector<int>> expected;
        std::vector<int> seed{s1};
        enumerate_paths(g, seed, 5, expected);
        std::vector<std::vector<int>> got;
        for (int id = 0; id < cov.vertex_count(); ++id) got.push_back(cov.vertex(id).path);
        std::sort(expected.begin(), expected.end());
        std::sort(got.begin(), got.end());
        CHECK(got == expected);
    }
}

TEST_CASE("covering property: neighbor projections are a local bijection") {
    CoxeterGraph g = CoxeterGraph::parse(fixture("triangle_533.graph"));
    CoveredGraph cov = CoveredGraph::build(g, 0, 1, 6);
    for (int id = 0; id < cov.vertex_count(); ++id) {
        if (cov.vertex(id).depth() >= cov.truncation_depth()) continue; // boundary
        std::multiset<int> projections;
        if (cov.parent(id) >= 0) projections.insert(cov.vertex(cov.parent(id)).project());
        for (int c : cov.children(id)) projections.insert(cov.vertex(c).project());
        const auto& nbrs = g.neighbors(cov.vertex(id).project());
        CHECK(std::multiset<int>(nbrs.begin(), nbrs.end()) == projections);
    }
}

TEST_CASE("tree distance and the two-sided partition") {
    CoxeterGraph g = CoxeterGraph::parse(fixture("triangle_533.graph"));
    CoveredGraph cov = CoveredGraph::build(g, 0, 1, 6);
    CHECK(cov.distance(cov.s1_prime(), cov.s2_prime()) == 1);
    CHECK(cov.partition_class(cov.s1_prime()) == 1);
    CHECK(cov.partition_class(cov.s2_prime()) == 2);
    int boundary_edges = 0;
    for (int id = 1; id < cov.vertex_count(); ++id) {
        int p = cov.parent(id);
        CHECK(cov.distance(id, p) == 1);
        CHECK(cov.distance(id, cov.s1_prime()) >= 0);
        if (cov.partition_class(id) != cov.partition_class(p)) ++boundary_edges;
    }
    // only the distinguished lifted edge crosses the partition
    CHECK(boundary_edges == 1);
}

TEST_CASE("fiber neighbors") {
    CoxeterGraph g = CoxeterGraph::parse(fixture("rank2_disjoint.graph"));
    CoveredGraph cov = CoveredGraph::build(g, g.vertex("c"), g.vertex("d"), 4);
    CHECK(cov.neighbor_in_fiber(cov.s1_prime(), g.vertex("d")) == cov.s2_prime());
    CHECK(cov.neighbor_in_fiber(cov.s2_prime(), g.vertex("c")) == cov.s1_prime());
    // non-adjacent base vertices are rejected
    CHECK(thrown_code([&] { cov.neighbor_in_fiber(cov.s1_prime(), g.vertex("f")); }) ==
          ErrorCode::NotAnEdge);
    // a deepest vertex has no child in the fiber of a non-parent neighbor
    for (int id = 0; id < cov.vertex_count(); ++id) {
        if (cov.vertex(id).depth() != cov.truncation_depth()) continue;
        int at = cov.vertex(id).project();
        int prev = cov.vertex(cov.parent(id)).project();
        for (int w : g.neighbors(at)) {
            if (w == prev) continue;
            CHECK(cov.neighbor_in_fiber(id, w) == -1);
        }
        break;
    }
}

TEST_CASE("construction guards") {
    CoxeterGraph g = CoxeterGraph::parse(fixture("rank2_disjoint.graph"));
    CHECK(thrown_code([&] { CoveredGraph::build(g, g.vertex("a"), g.vertex("e"), 4); }) ==
          ErrorCode::NotAnEdge);
    CHECK(thrown_code([&] { CoveredGraph::build(g, 0, 1, 1); }) == ErrorCode::TooShallow);
}
