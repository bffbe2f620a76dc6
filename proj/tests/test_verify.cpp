#include <map>
#include <set>
#include <utility>

#include <doctest.h>

#include "coxrep/verify.hpp"
#include "util.hpp"

using namespace coxrep;

namespace {

RepWindow make_pi1(const std::string& name, int window, int buffer) {
    CoxeterGraph g = CoxeterGraph::parse(fixture(name));
    SpanningTree t = spanning_tree(g, 0);
    auto gens = fundamental_generators(g, t, 0);
    auto ctx = ScalarContext::make(g.finite_labels());
    return build_pi1_rep(g, t, 0, OrientedSpecialEdge{gens[0].tail, gens[0].head},
                         OrientedSpecialEdge{gens[1].tail, gens[1].head}, window,
                         buffer, ctx);
}

RepWindow make_cover(const std::string& name, int s1, int s2, int depth, int buffer) {
    CoxeterGraph g = CoxeterGraph::parse(fixture(name));
    CoveredGraph cov = CoveredGraph::build(g, s1, s2, depth + buffer);
    auto ctx = ScalarContext::make(g.finite_labels());
    return build_cover_rep(g, cov, depth, buffer, ctx);
}

// independent dense elimination with the opposite pivot order (last column
// first, rows scanned bottom-up) as an oracle for the sparse kernel solver
int dense_rank(std::vector<std::vector<Scalar>> rows, const ContextPtr& ctx) {
    if (rows.empty()) return 0;
    int cols = static_cast<int>(rows[0].size());
    int rank = 0;
    for (int col = cols - 1; col >= 0; --col) {
        int pivot = -1;
        for (int i = static_cast<int>(rows.size()) - 1; i >= rank; --i) {
            if (!rows[i][col].is_zero()) { pivot = i; break; }
        }
        if (pivot < 0) continue;
        std::swap(rows[rank], rows[pivot]);
        Scalar inv = rows[rank][col].inverse();
        for (auto& x : rows[rank]) x = x * inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (static_cast<int>(i) == rank) continue;
            Scalar f = rows[i][col];
            if (f.is_zero()) continue;
            for (int j = 0; j < cols; ++j) rows[i][j] = rows[i][j] - f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace

TEST_CASE("full suites pass on the reference instances") {
    {
        RepWindow rep = make_pi1("two_triangles.graph", 3, 8);
        for (const auto& r : run_suite(rep, SuiteConfig{"two_triangles"})) {
            CAPTURE(r.name);
            CAPTURE(r.counterexample);
            CHECK(!r.failed());
        }
    }
    {
        RepWindow rep = make_cover("triangle_533.graph", 0, 1, 4, 10);
        for (const auto& r : run_suite(rep, SuiteConfig{"triangle_533"})) {
            CAPTURE(r.name);
            CAPTURE(r.counterexample);
            CHECK(!r.failed());
        }
    }
    {
        auto ctx = ScalarContext::make({3});
        RepWindow rep = build_pgl_rep(4, 9, ctx);
        for (const auto& r : run_suite(rep, SuiteConfig{"pgl"})) {
            CAPTURE(r.name);
            CAPTURE(r.counterexample);
            CHECK(!r.failed());
        }
    }
}

TEST_CASE("an injected fault is caught with a concrete counterexample") {
    RepWindow rep = make_pi1("two_triangles.graph", 2, 8);
    BasisIndex idx = rep.core_indices().front();
    rep.corrupt_entry(rep.generators().front(), idx, SparseVector());
    VerificationReport r = check_involutions(rep);
    CHECK(r.failed());
    CHECK(!r.counterexample.empty());
}

TEST_CASE("fixed space matches a dense independent elimination") {
    RepWindow rep = make_pi1("two_triangles.graph", 2, 6);
    auto cols = rep.core_indices();
    std::map<BasisIndex, int> col_of;
    for (size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = static_cast<int>(j);

    std::vector<std::vector<Scalar>> rows;
    for (int s : rep.generators()) {
        std::map<BasisIndex, std::vector<Scalar>> by_out;
        for (size_t j = 0; j < cols.size(); ++j) {
            SparseVector w = apply(rep, s, SparseVector::unit(cols[j], rep.context()));
            w.add_term(cols[j], -Scalar::one(rep.context()));
            for (const auto& [idx, c] : w.terms()) {
                auto [it, fresh] = by_out.emplace(
                    idx, std::vector<Scalar>(cols.size(), Scalar::zero(rep.context())));
                it->second[j] += c;
            }
        }
        for (auto& [idx, row] : by_out) rows.push_back(std::move(row));
    }
    int rank = dense_rank(rows, rep.context());

    auto basis = fixed_space(rep, rep.generators());
    CHECK(static_cast<int>(basis.size()) == static_cast<int>(cols.size()) - rank);
    for (const auto& v : basis) {
        for (int s : rep.generators()) CHECK(apply(rep, s, v) == v);
    }
    // the basis is linearly independent
    RowBasis rb;
    for (const auto& v : basis) CHECK(rb.insert(v));
}

TEST_CASE("span membership and support restriction") {
    auto ctx = ScalarContext::make({3});
    SparseVector e0 = SparseVector::unit(BasisIndex::pgl_u(0), ctx);
    SparseVector e1 = SparseVector::unit(BasisIndex::pgl_u(1), ctx);
    SparseVector mix = e0 + e1;
    CHECK(in_span({e0, mix}, e1));
    CHECK(!in_span({mix}, e1));
    CHECK(span_meets_support({mix, e1}, {BasisIndex::pgl_u(1)}));
    CHECK(!span_meets_support({mix}, {BasisIndex::pgl_u(1)}));
    CHECK(!span_meets_support({}, {BasisIndex::pgl_u(1)}));
}

TEST_CASE("invariance of the near side: kept for m = 4, escaped for m = 5") {
    RepWindow r4 = make_cover("triangle_433.graph", 0, 1, 3, 8);
    VerificationReport rep4 = check_V1_invariance(r4);
    CHECK(!rep4.failed());
    CHECK(rep4.details.find("m = 4") != std::string::npos);

    RepWindow r5 = make_cover("triangle_533.graph", 0, 1, 3, 10);
    VerificationReport rep5 = check_V1_invariance(r5);
    CHECK(!rep5.failed());
    CHECK(rep5.details.find("escape witness") != std::string::npos);
}

TEST_CASE("block decomposition: a lone lifted edge is one rho_2 block") {
    RepWindow rep = make_cover("single_edge_m6.graph", 0, 1, 2, 10);
    BlockDecomposition dec = decompose_dihedral_blocks(rep, false);
    CHECK(!dec.report.failed());
    REQUIRE(dec.counts.size() == 1);
    CHECK(dec.counts.begin()->first == IrrepKind{IrrepKind::Rho, 2});
    CHECK(dec.counts.begin()->second == 1);
}

TEST_CASE("block decomposition counts against brute-force pair counting") {
    RepWindow rep = make_cover("triangle_533.graph", 0, 1, 4, 10);
    const CoveredGraph& cov = rep.cover();
    BlockDecomposition dec = decompose_dihedral_blocks(rep, false);
    CHECK(!dec.report.failed());

    // brute-force: count distinct lifted {root, mate} edges met by the core
    std::set<std::pair<int, int>> pairs;
    int singletons = 0;
    for (const BasisIndex& idx : rep.core_indices()) {
        int p = cov.vertex(idx.a).project();
        if (p != cov.root() && p != cov.mate()) {
            ++singletons;
            continue;
        }
        int partner = cov.neighbor_in_fiber(idx.a, p == cov.root() ? cov.mate()
                                                                   : cov.root());
        REQUIRE(partner >= 0);
        pairs.emplace(std::min(idx.a, partner), std::max(idx.a, partner));
    }
    int two_dim = 0, one_dim = 0;
    for (const auto& [kind, count] : dec.counts) {
        (kind.tag == IrrepKind::Rho ? two_dim : one_dim) += count;
    }
    CHECK(one_dim == singletons);
    CHECK(two_dim == static_cast<int>(pairs.size()));
    // exactly one rho_2, everything else rho_1 or trivial
    CHECK(dec.counts[IrrepKind{IrrepKind::Rho, 2}] == 1);
}

TEST_CASE("m = 4 decomposition splits the distinguished block") {
    RepWindow rep = make_cover("triangle_433.graph", 0, 1, 3, 8);
    BlockDecomposition full = decompose_dihedral_blocks(rep, false);
    CHECK(!full.report.failed());
    CHECK(full.counts[IrrepKind{IrrepKind::EpsR}] == 1);
    CHECK(full.counts[IrrepKind{IrrepKind::EpsT}] == 1);
    CHECK(full.counts[IrrepKind{IrrepKind::Rho, 2}] == 0);

    BlockDecomposition v1 = decompose_dihedral_blocks(rep, true);
    CHECK(!v1.report.failed());
    CHECK(v1.counts[IrrepKind{IrrepKind::EpsR}] == 1);
    CHECK(v1.report.details.find("multiplicity 1") != std::string::npos);

    RepWindow r5 = make_cover("triangle_533.graph", 0, 1, 3, 10);
    CHECK(thrown_code([&] { decompose_dihedral_blocks(r5, true); }) ==
          ErrorCode::CaseMismatch);
}

TEST_CASE("cyclic closure gathers the expected lines") {
    auto ctx = ScalarContext::make({3});
    RepWindow rep = build_pgl_rep(4, 9, ctx);
    auto res = cyclic_closure(rep, SparseVector::unit(BasisIndex::pgl_u(0), ctx), 8);
    CHECK(res.report.status == VerificationReport::Status::Evidence);
    std::set<BasisIndex> covered(res.coverage.begin(), res.coverage.end());
    for (int i = 0; i <= 3; ++i) CHECK(covered.count(BasisIndex::pgl_u(i)) == 1);
    for (int i = 1; i <= 3; ++i) CHECK(covered.count(BasisIndex::pgl_v(i)) == 1);
    CHECK(res.dimension >= 7);

    CHECK(thrown_code([&] {
              cyclic_closure(rep, SparseVector::unit(BasisIndex::pgl_u(0), ctx), 10);
          }) == ErrorCode::WindowExceeded);
}

TEST_CASE("remark instance: the signed lift combination is fixed") {
    CoxeterGraph g = CoxeterGraph::parse(fixture("remark.graph"));
    int s1 = g.vertex("s1"), s2 = g.vertex("s2");
    int depth = 4, buffer = 8;
    CoveredGraph cov = CoveredGraph::build(g, s1, s2, depth + buffer);
    auto ctx = ScalarContext::make(g.finite_labels());
    RepWindow rep = build_cover_rep(g, cov, depth, buffer, ctx);

    auto find_path = [&](const std::vector<std::string>& names) {
        std::vector<int> path;
        for (const auto& n : names) path.push_back(g.vertex(n));
        for (int id = 0; id < cov.vertex_count(); ++id) {
            if (cov.vertex(id).path == path) return id;
        }
        throw std::runtime_error("lift not found");
    };
    Scalar one = Scalar::one(ctx);
    SparseVector v;
    v.add_term(BasisIndex::cov(find_path({"s1", "s0", "s4", "s3"})), one);
    v.add_term(BasisIndex::cov(find_path({"s1", "s0", "s4"})), one);
    v.add_term(BasisIndex::cov(find_path({"s1", "s0", "s5", "s6"})), -one);
    v.add_term(BasisIndex::cov(find_path({"s1", "s0", "s5"})), -one);

    for (int s : rep.generators()) CHECK(apply(rep, s, v) == v);
    CHECK(in_span(fixed_space(rep, rep.generators()), v));
}

TEST_CASE("machine-readable reports are deterministic") {
    for (int run = 0; run < 1; ++run) {
        RepWindow r1 = make_pi1("two_triangles.graph", 3, 8);
        RepWindow r2 = make_pi1("two_triangles.graph", 3, 8);
        SuiteConfig cfg{"two_triangles"};
        std::string j1 = suite_json(r1, cfg, run_suite(r1, cfg)).dump(2);
        std::string j2 = suite_json(r2, cfg, run_suite(r2, cfg)).dump(2);
        CHECK(j1 == j2);
        CHECK(j1.find("\"family\": \"pi1\"") != std::string::npos);
    }
}
