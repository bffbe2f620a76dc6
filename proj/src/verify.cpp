#include "coxrep/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace coxrep {

const char* status_name(VerificationReport::Status s) {
    switch (s) {
        case VerificationReport::Status::Pass: return "pass";
        case VerificationReport::Status::Fail: return "fail";
        case VerificationReport::Status::Skipped: return "skipped";
        case VerificationReport::Status::Evidence: return "evidence";
    }
    return "?";
}

std::string render(const RepWindow& rep, const SparseVector& v) {
    if (v.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, c] : v.terms()) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.to_string() << ")*" << rep.index_name(idx);
    }
    return os.str();
}

VerificationReport check_involutions(const RepWindow& rep) {
    VerificationReport report;
    report.name = "involutions";
    int swept = 0;
    for (int s : rep.generators()) {
        for (const BasisIndex& idx : rep.core_indices()) {
            SparseVector unit = SparseVector::unit(idx, rep.context());
            SparseVector back = apply_word(rep, {s, s}, unit);
            ++swept;
            if (!(back == unit)) {
                report.status = VerificationReport::Status::Fail;
                report.counterexample = rep.generator_name(s) + "^2 . " +
                                        rep.index_name(idx) + " = " + render(rep, back);
                report.details = "expected identity";
                return report;
            }
        }
    }
    report.details = std::to_string(swept) + " (generator, index) pairs swept exactly";
    return report;
}

VerificationReport check_braid(const RepWindow& rep, int s, int t) {
    VerificationReport report;
    report.name = "braid(" + rep.generator_name(s) + "," + rep.generator_name(t) + ")";
    int m = rep.graph().label(s, t);
    if (m == kInfinity) {
        report.status = VerificationReport::Status::Skipped;
        report.details = "m = inf: no braid relation";
        return report;
    }
    if (2 * m > rep.buffer()) {
        report.status = VerificationReport::Status::Skipped;
        report.details = "buffer " + std::to_string(rep.buffer()) +
                         " too small for word length " + std::to_string(2 * m);
        return report;
    }
    std::vector<int> word;
    for (int i = 0; i < m; ++i) {
        word.push_back(s);
        word.push_back(t);
    }
    for (const BasisIndex& idx : rep.core_indices()) {
        SparseVector unit = SparseVector::unit(idx, rep.context());
        SparseVector back = apply_word(rep, word, unit);
        if (!(back == unit)) {
            report.status = VerificationReport::Status::Fail;
            report.counterexample = "(" + rep.generator_name(s) + rep.generator_name(t) +
                                    ")^" + std::to_string(m) + " . " + rep.index_name(idx) +
                                    " = " + render(rep, back);
            report.details = "expected identity";
            return report;
        }
    }
    report.details = "(st)^" + std::to_string(m) + " sweep exact";
    return report;
}

std::vector<SparseVector> fixed_space(const RepWindow& rep,
                                      const std::vector<int>& gens) {
    std::vector<BasisIndex> cols = rep.core_indices();
    std::map<BasisIndex, int> col_of;
    for (size_t j = 0; j < cols.size(); ++j) col_of.emplace(cols[j], static_cast<int>(j));

    KernelSolver solver(static_cast<int>(cols.size()));
    for (int s : gens) {
        // rows of (s - id) restricted to core columns, keyed by output index
        std::map<BasisIndex, std::map<int, Scalar>> rows;
        for (size_t j = 0; j < cols.size(); ++j) {
            SparseVector w = apply(rep, s, SparseVector::unit(cols[j], rep.context()));
            w.add_term(cols[j], -Scalar::one(rep.context()));
            for (const auto& [idx, c] : w.terms()) {
                auto [it, inserted] = rows[idx].emplace(static_cast<int>(j), c);
                if (!inserted) it->second += c;
            }
        }
        for (auto& [idx, row] : rows) solver.add_row(std::move(row));
    }
    std::vector<SparseVector> basis;
    for (const auto& kv : solver.kernel_basis(rep.context())) {
        SparseVector v;
        for (const auto& [j, c] : kv) v.add_term(cols[j], c);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(const std::vector<SparseVector>& basis, const SparseVector& v) {
    RowBasis rb;
    for (const auto& b : basis) rb.insert(b);
    return rb.contains(v);
}

bool span_meets_support(const std::vector<SparseVector>& basis,
                        const std::vector<BasisIndex>& inside) {
    std::set<BasisIndex> allowed(inside.begin(), inside.end());
    RowBasis restricted;
    int restricted_rank = 0;
    for (const auto& b : basis) {
        SparseVector outside_part;
        for (const auto& [idx, c] : b.terms()) {
            if (!allowed.count(idx)) outside_part.add_term(idx, c);
        }
        if (restricted.insert(outside_part)) ++restricted_rank;
    }
    // a rank drop means some nonzero combination vanishes outside `inside`
    return restricted_rank < static_cast<int>(basis.size());
}

VerificationReport check_V1_invariance(const RepWindow& rep) {
    VerificationReport report;
    report.name = "V1_invariance";
    const CoveredGraph& cov = rep.cover();
    int m = rep.special_label();
    if (m == 4) {
        for (int s : rep.generators()) {
            for (const BasisIndex& idx : rep.core_indices()) {
                if (cov.partition_class(idx.a) != 1) continue;
                SparseVector img = apply(rep, s, SparseVector::unit(idx, rep.context()));
                for (const auto& [jdx, c] : img.terms()) {
                    if (cov.partition_class(jdx.a) != 1) {
                        report.status = VerificationReport::Status::Fail;
                        report.counterexample =
                            rep.generator_name(s) + " . " + rep.index_name(idx) + " = " +
                            render(rep, img) + " leaves the S1' span";
                        report.details = "m = 4: V1 must be a sub-representation";
                        return report;
                    }
                }
            }
        }
        report.details = "m = 4: every generator maps the S1' span into itself";
        return report;
    }
    // m > 4: the distinguished coupling 2cos(2pi/m) != 0 escapes
    int s2 = cov.mate();
    BasisIndex s1p = BasisIndex::cov(cov.s1_prime());
    SparseVector img = apply(rep, s2, SparseVector::unit(s1p, rep.context()));
    for (const auto& [jdx, c] : img.terms()) {
        if (cov.partition_class(jdx.a) == 2) {
            report.details = "m = " + std::to_string(m) + " > 4: escape witness " +
                             rep.generator_name(s2) + " . " + rep.index_name(s1p) +
                             " = " + render(rep, img);
            return report;
        }
    }
    report.status = VerificationReport::Status::Fail;
    report.details = "m > 4 but no escape from V1 was found";
    return report;
}

namespace {

// 2x2 action of (s1, s2) on the ordered pair (alpha_r, alpha_t); fails if the
// images couple outside the pair.
Mat2 restrict_to_pair(const RepWindow& rep, int gen, BasisIndex r, BasisIndex t) {
    auto ctx = rep.context();
    SparseVector img_r = apply(rep, gen, SparseVector::unit(r, ctx));
    SparseVector img_t = apply(rep, gen, SparseVector::unit(t, ctx));
    for (const auto* img : {&img_r, &img_t}) {
        for (const auto& [idx, c] : img->terms()) {
            if (!(idx == r) && !(idx == t)) {
                throw Error(ErrorCode::NotARepresentation,
                            "pair block couples outside itself");
            }
        }
    }
    Scalar zero = Scalar::zero(ctx);
    return Mat2{img_r.coeff(r).value_or(zero), img_t.coeff(r).value_or(zero),
                img_r.coeff(t).value_or(zero), img_t.coeff(t).value_or(zero)};
}

} // namespace

BlockDecomposition decompose_dihedral_blocks(const RepWindow& rep, bool within_v1) {
    BlockDecomposition out;
    out.report.name = within_v1 ? "dihedral_blocks_V1" : "dihedral_blocks";
    const CoveredGraph& cov = rep.cover();
    auto ctx = rep.context();
    int s1 = cov.root(), s2 = cov.mate();
    int m = rep.special_label();
    if (within_v1 && m != 4) {
        throw Error(ErrorCode::CaseMismatch, "V1 decomposition requires m = 4");
    }

    int pair_blocks = 0, singleton_blocks = 0;
    std::set<int> done;
    bool distinguished_is_rho2 = false;
    int eps_s1_count = 0;
    bool eps_s1_spanned_by_s1_prime = false;

    for (const BasisIndex& idx : rep.core_indices()) {
        int id = idx.a;
        if (done.count(id)) continue;
        if (within_v1 && cov.partition_class(id) != 1) continue;
        int proj = cov.vertex(id).project();
        if (proj != s1 && proj != s2) {
            // singleton: both generators act with diagonal coefficient +1
            done.insert(id);
            ++singleton_blocks;
            SparseVector u = SparseVector::unit(idx, ctx);
            Scalar zero = Scalar::zero(ctx);
            Scalar rv = apply(rep, s1, u).coeff(idx).value_or(zero);
            Scalar tv = apply(rep, s2, u).coeff(idx).value_or(zero);
            for (auto kind : classify_block(rv, tv)) ++out.counts[kind];
            continue;
        }
        int partner = cov.neighbor_in_fiber(id, proj == s1 ? s2 : s1);
        if (partner < 0) {
            throw Error(ErrorCode::BlockStraddlesBoundary,
                        "pair partner of " + rep.index_name(idx) +
                            " lies beyond the truncation");
        }
        if (within_v1 && cov.partition_class(partner) != 1) {
            // the partner lives on the S2' side; with m = 4 the coupling is 0
            // and the vertex is a 1-dimensional block of V1
            done.insert(id);
            ++singleton_blocks;
            SparseVector u = SparseVector::unit(idx, ctx);
            SparseVector i1 = apply(rep, s1, u);
            SparseVector i2 = apply(rep, s2, u);
            if (!(i1 == u || i1 == -u) || !(i2 == u || i2 == -u)) {
                throw Error(ErrorCode::NotARepresentation,
                            "split vertex still couples across the partition");
            }
            Scalar one = Scalar::one(ctx);
            Scalar rv = i1 == u ? one : -one;
            Scalar tv = i2 == u ? one : -one;
            auto kinds = classify_block(rv, tv);
            for (auto kind : kinds) {
                ++out.counts[kind];
                if (kind == IrrepKind{IrrepKind::EpsR}) {
                    ++eps_s1_count;
                    if (id == cov.s1_prime()) eps_s1_spanned_by_s1_prime = true;
                }
            }
            continue;
        }
        done.insert(id);
        done.insert(partner);
        ++pair_blocks;
        BasisIndex r = proj == s1 ? idx : BasisIndex::cov(partner);
        BasisIndex t = proj == s1 ? BasisIndex::cov(partner) : idx;
        Mat2 mr = restrict_to_pair(rep, s1, r, t);
        Mat2 mt = restrict_to_pair(rep, s2, r, t);
        auto kinds = classify_block(mr, mt, m, ctx);
        bool distinguished = (r.a == cov.s1_prime() && t.a == cov.s2_prime());
        for (auto kind : kinds) {
            ++out.counts[kind];
            if (distinguished && kind == IrrepKind{IrrepKind::Rho, 2}) {
                distinguished_is_rho2 = true;
            }
            if (kind == IrrepKind{IrrepKind::EpsR}) ++eps_s1_count;
        }
    }

    std::ostringstream details;
    details << pair_blocks << " pair blocks, " << singleton_blocks << " singletons:";
    for (const auto& [kind, count] : out.counts) {
        details << " " << kind.to_string() << " x " << count;
    }
    out.report.details = details.str();

    // shape assertions from the multiplicity argument
    int rho2 = 0, rho1 = 0, trivial = 0, other = 0;
    for (const auto& [kind, count] : out.counts) {
        if (kind == IrrepKind{IrrepKind::Rho, 2}) rho2 += count;
        else if (kind == IrrepKind{IrrepKind::Rho, 1}) rho1 += count;
        else if (kind == IrrepKind{IrrepKind::Trivial}) trivial += count;
        else other += count;
    }
    if (within_v1) {
        if (eps_s1_count != 1 || !eps_s1_spanned_by_s1_prime || rho2 != 0 || other != 1) {
            out.report.status = VerificationReport::Status::Fail;
            out.report.counterexample = "eps_{s1} multiplicity " + std::to_string(eps_s1_count);
        } else {
            out.report.details += "; eps_{s1} multiplicity 1, spanned by alpha_{s1'}";
        }
    } else if (m > 4) {
        if (rho2 != 1 || !distinguished_is_rho2 || other != 0) {
            out.report.status = VerificationReport::Status::Fail;
            out.report.counterexample = "rho_2 multiplicity " + std::to_string(rho2);
        } else {
            out.report.details += "; rho_2 appears exactly once, on the distinguished pair";
        }
    } else { // m == 4, full space: the distinguished block splits
        if (rho2 != 0 || out.counts[IrrepKind{IrrepKind::EpsR}] != 1 ||
            out.counts[IrrepKind{IrrepKind::EpsT}] != 1) {
            out.report.status = VerificationReport::Status::Fail;
            out.report.counterexample = "distinguished block did not split into eps_r + eps_t";
        } else {
            out.report.details += "; distinguished block splits as eps_r + eps_t";
        }
    }
    return out;
}

ClosureResult cyclic_closure(const RepWindow& rep, const SparseVector& seed,
                             int word_budget) {
    if (word_budget > rep.buffer()) {
        throw Error(ErrorCode::WindowExceeded,
                    "word budget exceeds the buffer " + std::to_string(rep.buffer()));
    }
    ClosureResult out;
    out.report.name = "cyclic_closure";
    out.report.status = VerificationReport::Status::Evidence;

    RowBasis basis;
    std::vector<SparseVector> frontier;
    if (basis.insert(seed)) frontier.push_back(seed);
    for (int level = 1; level <= word_budget && !frontier.empty(); ++level) {
        std::vector<SparseVector> next;
        for (const auto& v : frontier) {
            for (int s : rep.generators()) {
                SparseVector w = apply(rep, s, v);
                if (basis.insert(w)) next.push_back(std::move(w));
            }
        }
        frontier = std::move(next);
    }
    out.dimension = basis.rank();
    std::set<BasisIndex> support;
    for (const auto& [pivot, row] : basis.rows()) {
        for (const auto& [idx, c] : row.terms()) {
            if (rep.in_core(idx)) support.insert(idx);
        }
    }
    out.coverage.assign(support.begin(), support.end());
    out.report.details = "span dimension " + std::to_string(out.dimension) + ", covers " +
                         std::to_string(out.coverage.size()) +
                         " core indices (window-scale EVIDENCE, not proof)";
    return out;
}

namespace {

void add_fixed_space_reports(const RepWindow& rep,
                             std::vector<VerificationReport>& reports,
                             std::vector<SparseVector>& basis_out) {
    basis_out = fixed_space(rep, rep.generators());
    VerificationReport fixed;
    fixed.name = "fixed_space";
    std::ostringstream details;
    details << "dim V0 (window) = " << basis_out.size();
    for (const auto& v : basis_out) details << "; " << render(rep, v);
    fixed.details = details.str();
    for (const auto& v : basis_out) {
        for (int s : rep.generators()) {
            if (!(apply(rep, s, v) == v)) {
                fixed.status = VerificationReport::Status::Fail;
                fixed.counterexample = rep.generator_name(s) + " does not fix " + render(rep, v);
            }
        }
    }
    reports.push_back(std::move(fixed));

    // window-scale shadow of dim V/V0 = oo: no fixed vector is supported
    // inside a single generator's (-1)-eigenline family
    VerificationReport witness;
    witness.name = "quotient_dimension_witness";
    for (int s : rep.generators()) {
        std::vector<BasisIndex> inside;
        for (const BasisIndex& idx : rep.core_indices()) {
            bool is_minus_line = false;
            switch (rep.family()) {
                case Family::Pi1: is_minus_line = idx.a == s; break;
                case Family::Cover:
                    is_minus_line = rep.cover().vertex(idx.a).project() == s;
                    break;
                case Family::Pgl:
                    // the (-1)-eigenspace of s1 is the v-line family
                    is_minus_line = (s == 0 && idx.kind == BasisIndex::PglV);
                    break;
            }
            if (is_minus_line) inside.push_back(idx);
        }
        if (inside.empty()) continue;
        if (span_meets_support(basis_out, inside)) {
            witness.status = VerificationReport::Status::Fail;
            witness.counterexample =
                "a nonzero fixed vector is supported inside the (-1)-lines of " +
                rep.generator_name(s);
            break;
        }
    }
    if (!witness.failed()) {
        witness.details = "V0 meets no generator's (-1)-eigenline span";
    }
    reports.push_back(std::move(witness));
}

void add_monodromy_reports(const RepWindow& rep,
                           std::vector<VerificationReport>& reports) {
    const CoxeterGraph& g = rep.graph();
    SpanningTree tree = spanning_tree(g, 0);
    auto gens = fundamental_generators(g, tree, 0);
    auto ctx = rep.context();

    auto edge_of = [](const ClosedPathGenerator& c) {
        return std::pair<int, int>{c.tail, c.head};
    };
    auto matches = [&](const ClosedPathGenerator& c, const OrientedSpecialEdge& e) {
        return c.tail == e.tail && c.head == e.head;
    };

    // safe n range for the f-map chains
    std::map<size_t, std::map<int, SparseVector>> tables;
    for (size_t i = 0; i < gens.size(); ++i) tables[i] = monodromy(rep, gens[i]);

    for (size_t i = 0; i < gens.size(); ++i) {
        VerificationReport r;
        r.name = "monodromy_X" + std::to_string(i + 1);
        bool is_e1 = matches(gens[i], rep.special_edge1());
        bool is_e2 = matches(gens[i], rep.special_edge2());
        if (!is_e1 && !is_e2) {
            // the special edges are elsewhere: X_i must be the identity
            bool reverse_special =
                (edge_of(gens[i]) == std::pair<int, int>{rep.special_edge1().head,
                                                         rep.special_edge1().tail}) ||
                (edge_of(gens[i]) == std::pair<int, int>{rep.special_edge2().head,
                                                         rep.special_edge2().tail});
            if (reverse_special) {
                r.status = VerificationReport::Status::Skipped;
                r.details = "special edge crossed against its orientation; no closed form pinned";
                reports.push_back(std::move(r));
                continue;
            }
        }
        for (const auto& [n, img] : tables[i]) {
            SparseVector expected;
            if (is_e1) {
                expected.add_term(BasisIndex::pi1(gens[i].path.front(), n + 1),
                                  Scalar::one(ctx));
            } else if (is_e2) {
                Rational w = n >= 0 ? Rational(BigInt(1) << n)
                                    : Rational(BigInt(1), BigInt(1) << (-n));
                expected.add_term(BasisIndex::pi1(gens[i].path.front(), n + 1),
                                  Scalar::from_rational(ctx, w));
            } else {
                expected.add_term(BasisIndex::pi1(gens[i].path.front(), n),
                                  Scalar::one(ctx));
            }
            if (!(img == expected)) {
                r.status = VerificationReport::Status::Fail;
                r.counterexample = "X_" + std::to_string(i + 1) + "(alpha_{s0," +
                                   std::to_string(n) + "}) = " + render(rep, img);
                break;
            }
        }
        if (!r.failed()) {
            r.details = is_e1   ? "X1: shift n -> n+1, coefficient 1"
                        : is_e2 ? "X2: shift n -> n+1, coefficient 2^n"
                                : "identity on the core";
        }
        reports.push_back(std::move(r));
    }

    // X1 X2 != X2 X1 on alpha_{s0,0}: coefficients 1 vs 2
    VerificationReport nc;
    nc.name = "monodromy_noncommuting_witness";
    size_t i1 = gens.size(), i2 = gens.size();
    for (size_t i = 0; i < gens.size(); ++i) {
        if (matches(gens[i], rep.special_edge1())) i1 = i;
        if (matches(gens[i], rep.special_edge2())) i2 = i;
    }
    if (i1 == gens.size() || i2 == gens.size()) {
        nc.status = VerificationReport::Status::Skipped;
        nc.details = "special edges are not both carried by oriented generators";
    } else {
        auto apply_x = [&](size_t i, const SparseVector& v) {
            SparseVector out;
            for (const auto& [idx, c] : v.terms()) {
                const auto& tab = tables[i];
                auto it = tab.find(idx.b);
                if (it == tab.end())
                    throw Error(ErrorCode::WindowExceeded, "monodromy table bound");
                for (const auto& [jdx, d] : it->second.terms()) out.add_term(jdx, c * d);
            }
            return out;
        };
        int s0 = gens[i1].path.front();
        SparseVector seed = SparseVector::unit(BasisIndex::pi1(s0, 0), ctx);
        SparseVector a = apply_x(i1, apply_x(i2, seed));
        SparseVector b = apply_x(i2, apply_x(i1, seed));
        SparseVector ea, eb;
        ea.add_term(BasisIndex::pi1(s0, 2), Scalar::one(ctx));
        eb.add_term(BasisIndex::pi1(s0, 2), Scalar::from_rational(ctx, Rational(2)));
        if (a == ea && b == eb && !(a == b)) {
            nc.details = "X1 X2 and X2 X1 send alpha_{s0,0} to 1 resp. 2 times alpha_{s0,2}";
        } else {
            nc.status = VerificationReport::Status::Fail;
            nc.counterexample = "X1X2: " + render(rep, a) + "; X2X1: " + render(rep, b);
        }
    }
    reports.push_back(std::move(nc));

    // f_ts f_st = id on the (-1)-eigenlines, all edges
    VerificationReport finv;
    finv.name = "f_map_inversion";
    for (const auto& e : g.edges()) {
        for (int n = -rep.core_bound(); n <= rep.core_bound() && !finv.failed(); ++n) {
            SparseVector v = SparseVector::unit(BasisIndex::pi1(e.u, n), ctx);
            SparseVector back = f_map(rep, e.v, e.u, f_map(rep, e.u, e.v, v));
            if (!(back == v)) {
                finv.status = VerificationReport::Status::Fail;
                finv.counterexample = "f_" + g.name(e.v) + g.name(e.u) + " f_" + g.name(e.u) +
                                      g.name(e.v) + " . " + rep.index_name(v.terms().begin()->first) +
                                      " = " + render(rep, back);
            }
        }
    }
    if (!finv.failed()) finv.details = "f_ts . f_st = id on every edge, exact";
    reports.push_back(std::move(finv));
}

} // namespace

std::vector<VerificationReport> run_suite(const RepWindow& rep,
                                          const SuiteConfig& config) {
    std::vector<VerificationReport> reports;
    reports.push_back(check_involutions(rep));
    const auto& gens = rep.generators();
    for (size_t i = 0; i < gens.size(); ++i) {
        for (size_t j = i + 1; j < gens.size(); ++j) {
            reports.push_back(check_braid(rep, gens[i], gens[j]));
        }
    }
    std::vector<SparseVector> fixed_basis;
    add_fixed_space_reports(rep, reports, fixed_basis);

    // a structural error below (e.g. an f-map applied to something no longer
    // in the right eigenspace) means the tables are corrupt: report a failure
    // rather than abort the suite
    try {
    switch (rep.family()) {
        case Family::Pi1:
            add_monodromy_reports(rep, reports);
            break;
        case Family::Cover: {
            reports.push_back(check_V1_invariance(rep));
            reports.push_back(decompose_dihedral_blocks(rep, false).report);
            if (rep.special_label() == 4) {
                reports.push_back(decompose_dihedral_blocks(rep, true).report);
            }
            int budget = std::min(rep.core_bound() - 1, rep.buffer());
            SparseVector seed =
                SparseVector::unit(BasisIndex::cov(rep.cover().s1_prime()), rep.context());
            auto closure = cyclic_closure(rep, seed, budget);
            closure.report.name = "cyclic_closure_alpha_s1prime";
            reports.push_back(closure.report);
            break;
        }
        case Family::Pgl: {
            int budget = std::min(config.closure_budget, rep.buffer());
            SparseVector seed = SparseVector::unit(BasisIndex::pgl_u(0), rep.context());
            auto closure = cyclic_closure(rep, seed, budget);
            closure.report.name = "cyclic_closure_u0";
            reports.push_back(closure.report);

            VerificationReport disjoint;
            disjoint.name = "fixed_space_v_disjoint";
            std::vector<BasisIndex> v_lines;
            for (const BasisIndex& idx : rep.core_indices()) {
                if (idx.kind == BasisIndex::PglV) v_lines.push_back(idx);
            }
            if (span_meets_support(fixed_basis, v_lines)) {
                disjoint.status = VerificationReport::Status::Fail;
                disjoint.counterexample = "a nonzero fixed vector is supported on the v_i";
            } else {
                disjoint.details = "no nonzero fixed vector is supported on the v_i lines";
            }
            reports.push_back(std::move(disjoint));
            break;
        }
    }
    } catch (const Error& e) {
        VerificationReport broken;
        broken.name = "structural_integrity";
        broken.status = VerificationReport::Status::Fail;
        broken.details = std::string("suite aborted: [") + error_code_name(e.code()) +
                         "] " + e.what();
        reports.push_back(std::move(broken));
    }
    return reports;
}

nlohmann::ordered_json suite_json(const RepWindow& rep, const SuiteConfig& config,
                                  const std::vector<VerificationReport>& reports) {
    nlohmann::ordered_json j;
    j["graph"] = config.graph_name;
    j["family"] = family_name(rep.family());
    nlohmann::ordered_json window;
    window[rep.family() == Family::Cover ? "depth" : "window"] = rep.core_bound();
    window["buffer"] = rep.buffer();
    window["field_modulus"] = rep.context()->modulus();
    window["field_degree"] = rep.context()->degree();
    if (rep.family() == Family::Pi1) {
        window["edge1"] = {rep.graph().name(rep.special_edge1().tail),
                           rep.graph().name(rep.special_edge1().head)};
        window["edge2"] = {rep.graph().name(rep.special_edge2().tail),
                           rep.graph().name(rep.special_edge2().head)};
        if (config.infinite_labels_replaced) {
            window["infinite_labels_replaced_by"] = 3;
            window["note"] = "representation of the quotient system, pulled back along W ->> W1";
        }
    }
    if (rep.family() == Family::Cover) {
        const auto& cov = rep.cover();
        window["special_edge"] = {rep.graph().name(cov.root()), rep.graph().name(cov.mate())};
        int size1 = 0, size2 = 0;
        for (const BasisIndex& idx : rep.core_indices()) {
            (cov.partition_class(idx.a) == 1 ? size1 : size2) += 1;
        }
        window["partition"] = {{"S1_prime_core", size1},
                               {"S2_prime_core", size2},
                               {"S1_prime_role",
                                "class of s1' (finite-window stand-in for the infinite side)"}};
    }
    j["window"] = window;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json c;
        c["name"] = r.name;
        c["status"] = status_name(r.status);
        c["details"] = r.details;
        if (!r.counterexample.empty()) c["counterexample"] = r.counterexample;
        checks.push_back(std::move(c));
    }
    j["checks"] = std::move(checks);
    return j;
}

} // namespace coxrep
