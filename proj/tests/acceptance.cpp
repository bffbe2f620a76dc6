// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cmath>
#include <functional>
#include <iostream>
#include <random>
#include <set>

#include "coxrep/verify.hpp"
#include "util.hpp"

using namespace coxrep;

namespace {

int auto_buffer(const CoxeterGraph& g) {
    int b = 2 * g.max_finite_label();
    SpanningTree t = spanning_tree(g, 0);
    for (const auto& c : fundamental_generators(g, t, 0)) {
        b = std::max(b, 2 * g.max_finite_label() + static_cast<int>(c.path.size()) - 1);
    }
    return b;
}

RepWindow make_pi1(const std::string& name, int window) {
    CoxeterGraph g = CoxeterGraph::parse(fixture(name));
    SpanningTree t = spanning_tree(g, 0);
    auto gens = fundamental_generators(g, t, 0);
    auto ctx = ScalarContext::make(g.finite_labels());
    return build_pi1_rep(g, t, 0, OrientedSpecialEdge{gens[0].tail, gens[0].head},
                         OrientedSpecialEdge{gens[1].tail, gens[1].head}, window,
                         auto_buffer(g), ctx);
}

RepWindow make_cover(const std::string& name, int depth) {
    CoxeterGraph g = CoxeterGraph::parse(fixture(name));
    int s1 = -1, s2 = -1;
    for (const auto& e : g.edges()) {
        if (e.label != kInfinity && e.label >= 4) { s1 = e.u; s2 = e.v; break; }
    }
    int buffer = auto_buffer(g);
    CoveredGraph cov = CoveredGraph::build(g, s1, s2, depth + buffer);
    auto ctx = ScalarContext::make(g.finite_labels());
    return build_cover_rep(g, cov, depth, buffer, ctx);
}

void require(bool cond, const std::string& what) {
    if (!cond) throw std::runtime_error(what);
}

void require_all_pass(const std::vector<VerificationReport>& reports,
                      const std::string& where) {
    for (const auto& r : reports) {
        require(!r.failed(), where + ": " + r.name + " failed (" + r.counterexample + ")");
    }
}

// ---- criteria ----

// relation sweeps on the two rank-2 instances, exact, timed
void criterion1() {
    for (const char* name : {"two_triangles.graph", "rank2_disjoint.graph"}) {
        RepWindow rep = make_pi1(name, 6);
        require_all_pass({check_involutions(rep)}, name);
        const auto& gens = rep.generators();
        for (size_t i = 0; i < gens.size(); ++i) {
            for (size_t j = i + 1; j < gens.size(); ++j) {
                auto r = check_braid(rep, gens[i], gens[j]);
                require(!r.failed(), std::string(name) + ": " + r.name);
                require(r.status != VerificationReport::Status::Skipped,
                        std::string(name) + ": " + r.name + " unexpectedly skipped");
            }
        }
    }
}

// monodromy closed forms: shift with weight 1, shift with weight 2^n,
// identity on a third circuit, and the non-commuting witness
void criterion2() {
    CoxeterGraph g = CoxeterGraph::parse(fixture("two_triangles.graph"));
    SpanningTree t = spanning_tree(g, 0);
    auto gens = fundamental_generators(g, t, 0);
    auto ctx = ScalarContext::make(g.finite_labels());
    RepWindow rep = build_pi1_rep(g, t, 0, OrientedSpecialEdge{gens[0].tail, gens[0].head},
                                  OrientedSpecialEdge{gens[1].tail, gens[1].head}, 3, 8,
                                  ctx);
    auto x1 = monodromy(rep, gens[0]);
    auto x2 = monodromy(rep, gens[1]);
    for (int n = -3; n <= 3; ++n) {
        SparseVector up = SparseVector::unit(BasisIndex::pi1(0, n + 1), ctx);
        require(x1.at(n) == up, "X1 shift at n=" + std::to_string(n));
        Rational w = n >= 0 ? Rational(BigInt(1) << n) : Rational(1, BigInt(1) << -n);
        require(x2.at(n) == up.scaled(Scalar::from_rational(ctx, w)),
                "X2 dyadic shift at n=" + std::to_string(n));
    }
    // X1 X2 vs X2 X1 on the center line: coefficients 1 vs 2
    SparseVector x1_after_x2 = x1.at(1).scaled(*x2.at(0).coeff(BasisIndex::pi1(0, 1)));
    SparseVector x2_after_x1 = x2.at(1).scaled(*x1.at(0).coeff(BasisIndex::pi1(0, 1)));
    SparseVector top = SparseVector::unit(BasisIndex::pi1(0, 2), ctx);
    require(x1_after_x2 == top, "X1(X2(.)) gives coefficient 1");
    require(x2_after_x1 == top.scaled(Scalar::from_rational(ctx, Rational(2))),
            "X2(X1(.)) gives coefficient 2");
    require(!(x1_after_x2 == x2_after_x1), "monodromies do not commute");

    CoxeterGraph g3 = CoxeterGraph::parse(fixture("three_triangles.graph"));
    SpanningTree t3 = spanning_tree(g3, 0);
    auto gens3 = fundamental_generators(g3, t3, 0);
    auto ctx3 = ScalarContext::make(g3.finite_labels());
    RepWindow rep3 = build_pi1_rep(g3, t3, 0,
                                   OrientedSpecialEdge{gens3[0].tail, gens3[0].head},
                                   OrientedSpecialEdge{gens3[1].tail, gens3[1].head}, 3,
                                   8, ctx3);
    require(gens3.size() == 3, "three circuits");
    auto x3 = monodromy(rep3, gens3[2]);
    for (int n = -3; n <= 3; ++n) {
        require(x3.at(n) == SparseVector::unit(BasisIndex::pi1(0, n), ctx3),
                "X3 identity at n=" + std::to_string(n));
    }
}

// covering-family suites at depth 8, block multiplicities, near-side dichotomy
void criterion3() {
    RepWindow r5 = make_cover("triangle_533.graph", 8);
    require_all_pass(run_suite(r5, SuiteConfig{"triangle_533"}), "triangle_533");
    auto dec5 = decompose_dihedral_blocks(r5, false);
    require(dec5.counts[IrrepKind{IrrepKind::Rho, 2}] == 1, "exactly one rho_2 block");
    auto inv5 = check_V1_invariance(r5);
    require(!inv5.failed() && inv5.details.find("escape witness") != std::string::npos,
            "escape witness on the label-5 instance");

    RepWindow r4 = make_cover("triangle_433.graph", 8);
    require_all_pass(run_suite(r4, SuiteConfig{"triangle_433"}), "triangle_433");
    auto v1 = decompose_dihedral_blocks(r4, true);
    require(v1.counts[IrrepKind{IrrepKind::EpsR}] == 1,
            "eps_{s1} multiplicity one inside the near side");
    require(!check_V1_invariance(r4).failed(), "near side invariant at label 4");
}

// the 7-vertex instance with infinite labels: signed lift combination is fixed
void criterion4() {
    CoxeterGraph g = CoxeterGraph::parse(fixture("remark.graph"));
    int s1 = g.vertex("s1"), s2 = g.vertex("s2");
    int depth = 4, buffer = auto_buffer(g);
    CoveredGraph cov = CoveredGraph::build(g, s1, s2, depth + buffer);
    auto ctx = ScalarContext::make(g.finite_labels());
    RepWindow rep = build_cover_rep(g, cov, depth, buffer, ctx);

    auto find_path = [&](std::vector<std::string> names) {
        std::vector<int> path;
        for (const auto& n : names) path.push_back(g.vertex(n));
        for (int id = 0; id < cov.vertex_count(); ++id) {
            if (cov.vertex(id).path == path) return id;
        }
        throw std::runtime_error("missing lift");
    };
    Scalar one = Scalar::one(ctx);
    SparseVector v;
    v.add_term(BasisIndex::cov(find_path({"s1", "s0", "s4", "s3"})), one);
    v.add_term(BasisIndex::cov(find_path({"s1", "s0", "s4"})), one);
    v.add_term(BasisIndex::cov(find_path({"s1", "s0", "s5", "s6"})), -one);
    v.add_term(BasisIndex::cov(find_path({"s1", "s0", "s5"})), -one);
    for (int s : rep.generators()) {
        require(apply(rep, s, v) == v, "fixed under generator " + rep.generator_name(s));
    }
    require(in_span(fixed_space(rep, rep.generators()), v),
            "vector lies in the computed fixed space");
}

// the projective-family instance: relations, closure reach, eigen-disjointness
void criterion5() {
    auto ctx = ScalarContext::make({3});
    RepWindow rep = build_pgl_rep(6, 9, ctx);
    require_all_pass({check_involutions(rep)}, "pgl");
    auto b12 = check_braid(rep, 0, 1);
    auto b13 = check_braid(rep, 0, 2);
    auto b23 = check_braid(rep, 1, 2);
    require(!b12.failed() && b12.status == VerificationReport::Status::Pass, "(s1 s2)^3");
    require(!b13.failed() && b13.status == VerificationReport::Status::Pass, "(s1 s3)^2");
    require(b23.status == VerificationReport::Status::Skipped, "infinite pair skipped");

    auto closure = cyclic_closure(rep, SparseVector::unit(BasisIndex::pgl_u(0), ctx), 8);
    std::set<BasisIndex> covered(closure.coverage.begin(), closure.coverage.end());
    for (int i = 0; i <= 3; ++i) {
        require(covered.count(BasisIndex::pgl_u(i)) == 1, "closure reaches u" + std::to_string(i));
        if (i >= 1) {
            require(covered.count(BasisIndex::pgl_v(i)) == 1,
                    "closure reaches v" + std::to_string(i));
        }
    }
    auto fixed = fixed_space(rep, rep.generators());
    std::vector<BasisIndex> v_lines;
    for (const BasisIndex& idx : rep.core_indices()) {
        if (idx.kind == BasisIndex::PglV) v_lines.push_back(idx);
    }
    require(!span_meets_support(fixed, v_lines),
            "no nonzero fixed vector supported on the v-lines");
}

// dihedral layer sweep
void criterion6() {
    for (int m = 3; m <= 12; ++m) {
        auto ctx = ScalarContext::make({m});
        for (int k = 1; 2 * k < m; ++k) {
            require(verify_dihedral_relations(m, k, ctx),
                    "relations at m=" + std::to_string(m) + ", k=" + std::to_string(k));
            require(common_fixed_dimension(m, k, ctx) == 0,
                    "no common fixed vector at m=" + std::to_string(m));
        }
        if (m % 2 == 0) {
            auto [mr, mt] = rho_matrices(m, m / 2, ctx);
            auto kinds = classify_block(mr, mt, m, ctx);
            require(kinds == std::vector<IrrepKind>{IrrepKind{IrrepKind::EpsR},
                                                    IrrepKind{IrrepKind::EpsT}},
                    "boundary block splits at m=" + std::to_string(m));
        }
    }
}

// scalar layer: exact minimal-polynomial roots, float cross-check, field axioms
void criterion7() {
    std::vector<std::set<int>> label_sets = {{3}, {4}, {6}, {3, 4}, {5, 6}};
    std::vector<int> expected_n = {3, 4, 6, 12, 30};
    for (size_t i = 0; i < label_sets.size(); ++i) {
        auto ctx = ScalarContext::make(label_sets[i]);
        require(ctx->modulus() == expected_n[i], "modulus");
        // evaluate psi at theta inside the field: must reduce to the zero scalar
        Scalar acc = Scalar::zero(ctx), pw = Scalar::one(ctx);
        for (const auto& c : ctx->psi()) {
            acc += Scalar::from_rational(ctx, c) * pw;
            pw *= Scalar::theta(ctx);
        }
        require(acc.is_zero(), "psi(theta) = 0 exactly at N=" + std::to_string(ctx->modulus()));
        for (int m = 3; m <= ctx->modulus(); ++m) {
            if (ctx->modulus() % m != 0) continue;
            for (int k = 1; k < m; ++k) {
                double err = std::abs(cos_coeff(k, m, ctx).to_double() -
                                      2 * std::cos(k * M_PI / m));
                require(err < 1e-9, "float cross-check k/m");
            }
        }
    }
    auto ctx = ScalarContext::make({5, 6});
    std::mt19937 rng(424242);
    std::uniform_int_distribution<int> num(-6, 6);
    std::uniform_int_distribution<int> den(1, 5);
    auto random_scalar = [&] {
        Scalar s = Scalar::zero(ctx), p = Scalar::one(ctx);
        for (int i = 0; i < ctx->degree(); ++i) {
            s += Scalar::from_rational(ctx, Rational(num(rng), den(rng))) * p;
            p *= Scalar::theta(ctx);
        }
        return s;
    };
    for (int trial = 0; trial < 200; ++trial) {
        Scalar a = random_scalar(), b = random_scalar(), c = random_scalar();
        require((a + b) + c == a + (b + c), "associativity of +");
        require((a * b) * c == a * (b * c), "associativity of *");
        require(a * (b + c) == a * b + a * c, "distributivity");
        if (!a.is_zero()) require((a * a.inverse()).is_one(), "inverse");
    }
}

// byte-identical reports on every fixture
void criterion8() {
    struct Run {
        std::string name;
        std::function<RepWindow()> build;
    };
    auto pi1_of = [](std::string f, int w) {
        return [f, w] { return make_pi1(f, w); };
    };
    auto cover_of = [](std::string f, int d) {
        return [f, d] { return make_cover(f, d); };
    };
    std::vector<Run> runs = {
        {"two_triangles", pi1_of("two_triangles.graph", 3)},
        {"rank2_disjoint", pi1_of("rank2_disjoint.graph", 3)},
        {"three_triangles", pi1_of("three_triangles.graph", 3)},
        {"triangle_533", cover_of("triangle_533.graph", 4)},
        {"triangle_433", cover_of("triangle_433.graph", 4)},
        {"single_edge_m6", cover_of("single_edge_m6.graph", 3)},
        {"pgl", [] {
             return build_pgl_rep(4, 9, ScalarContext::make({3}));
         }},
    };
    for (const auto& run : runs) {
        SuiteConfig cfg{run.name};
        RepWindow r1 = run.build();
        RepWindow r2 = run.build();
        std::string j1 = suite_json(r1, cfg, run_suite(r1, cfg)).dump(2);
        std::string j2 = suite_json(r2, cfg, run_suite(r2, cfg)).dump(2);
        require(j1 == j2, run.name + ": reruns differ");
    }
}

} // namespace

int main() {
    struct Criterion {
        const char* label;
        void (*fn)();
        bool timed;
    };
    std::vector<Criterion> criteria = {
        {"criterion 1: relation sweeps on both rank-2 instances", criterion1, true},
        {"criterion 2: monodromy closed forms and non-commuting witness", criterion2, false},
        {"criterion 3: covering suites, block multiplicities, near-side dichotomy",
         criterion3, false},
        {"criterion 4: infinite-label instance fixed vector", criterion4, false},
        {"criterion 5: projective family relations, closure, disjointness", criterion5,
         false},
        {"criterion 6: dihedral layer sweep m = 3..12", criterion6, false},
        {"criterion 7: scalar layer exactness and float cross-check", criterion7, false},
        {"criterion 8: byte-identical reports on every fixture", criterion8, false},
    };
    bool all_pass = true;
    for (const auto& c : criteria) {
        try {
            auto start = std::chrono::steady_clock::now();
            c.fn();
            auto secs = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - start)
                            .count();
            if (c.timed && secs >= 60.0) {
                throw std::runtime_error("exceeded the 60 s budget");
            }
            std::cout << "PASS " << c.label << "\n";
        } catch (const std::exception& e) {
            all_pass = false;
            std::cout << "FAIL " << c.label << " -- " << e.what() << "\n";
        }
    }
    return all_pass ? 0 : 1;
}
