#include "coxrep/rep.hpp"

#include <algorithm>
#include <sstream>

namespace coxrep {

const char* family_name(Family f) {
    switch (f) {
        case Family::Pi1: return "pi1";
        case Family::Cover: return "cover";
        case Family::Pgl: return "pgl";
    }
    return "?";
}

SparseVector SparseVector::unit(BasisIndex idx, const ContextPtr& ctx) {
    SparseVector v;
    v.add_term(idx, Scalar::one(ctx));
    return v;
}

void SparseVector::add_term(BasisIndex idx, const Scalar& coeff) {
    if (coeff.is_zero()) return;
    auto it = terms_.find(idx);
    if (it == terms_.end()) {
        terms_.emplace(idx, coeff);
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

std::optional<Scalar> SparseVector::coeff(BasisIndex idx) const {
    auto it = terms_.find(idx);
    if (it == terms_.end()) return std::nullopt;
    return it->second;
}

SparseVector SparseVector::operator+(const SparseVector& other) const {
    SparseVector out = *this;
    for (const auto& [idx, c] : other.terms_) out.add_term(idx, c);
    return out;
}

SparseVector SparseVector::operator-(const SparseVector& other) const {
    SparseVector out = *this;
    for (const auto& [idx, c] : other.terms_) out.add_term(idx, -c);
    return out;
}

SparseVector SparseVector::operator-() const {
    SparseVector out;
    for (const auto& [idx, c] : terms_) out.terms_.emplace(idx, -c);
    return out;
}

SparseVector SparseVector::scaled(const Scalar& factor) const {
    SparseVector out;
    if (factor.is_zero()) return out;
    for (const auto& [idx, c] : terms_) out.terms_.emplace(idx, c * factor);
    return out;
}

const CoveredGraph& RepWindow::cover() const {
    if (!cover_) throw Error(ErrorCode::CaseMismatch, "not a cover-family window");
    return *cover_;
}

std::string RepWindow::generator_name(int s) const {
    if (family_ == Family::Pgl) return "s" + std::to_string(s + 1);
    return graph_.name(s);
}

bool RepWindow::in_core(BasisIndex idx) const {
    switch (idx.kind) {
        case BasisIndex::Pi1: return std::abs(idx.b) <= core_;
        case BasisIndex::Cov: return cover_->vertex(idx.a).depth() <= core_;
        case BasisIndex::PglU: return idx.a <= core_;
        case BasisIndex::PglV: return idx.a <= core_;
    }
    return false;
}

std::vector<BasisIndex> RepWindow::core_indices() const {
    std::vector<BasisIndex> out;
    switch (family_) {
        case Family::Pi1:
            for (int s = 0; s < graph_.vertex_count(); ++s) {
                for (int n = -core_; n <= core_; ++n) out.push_back(BasisIndex::pi1(s, n));
            }
            break;
        case Family::Cover:
            for (int id = 0; id < cover_->vertex_count(); ++id) {
                if (cover_->vertex(id).depth() <= core_) out.push_back(BasisIndex::cov(id));
            }
            break;
        case Family::Pgl:
            for (int i = 0; i <= core_; ++i) out.push_back(BasisIndex::pgl_u(i));
            for (int i = 1; i <= core_; ++i) out.push_back(BasisIndex::pgl_v(i));
            break;
    }
    return out;
}

std::string RepWindow::index_name(BasisIndex idx) const {
    std::ostringstream os;
    switch (idx.kind) {
        case BasisIndex::Pi1:
            os << "(" << graph_.name(idx.a) << "," << idx.b << ")";
            break;
        case BasisIndex::Cov:
            os << "(" << cover_->vertex_name(idx.a) << ")";
            break;
        case BasisIndex::PglU:
            os << "u" << idx.a;
            break;
        case BasisIndex::PglV:
            os << "v" << idx.a;
            break;
    }
    return os.str();
}

const SparseVector* RepWindow::image(int s, BasisIndex idx) const {
    auto git = table_.find(s);
    if (git == table_.end()) return nullptr;
    auto it = git->second.find(idx);
    if (it == git->second.end()) return nullptr;
    return &it->second;
}

void RepWindow::corrupt_entry(int s, BasisIndex idx, SparseVector image) {
    table_[s][idx] = std::move(image);
}

namespace {

Rational pow2(int e) {
    Rational r(1);
    if (e >= 0) {
        r = Rational(BigInt(1) << e);
    } else {
        r = Rational(BigInt(1), BigInt(1) << (-e));
    }
    return r;
}

} // namespace

RepWindow build_pi1_rep(const CoxeterGraph& g, const SpanningTree& t, int s0,
                        OrientedSpecialEdge e1, OrientedSpecialEdge e2,
                        int window, int buffer, const ContextPtr& ctx) {
    if (g.cycle_rank() < 2) {
        throw Error(ErrorCode::CaseMismatch, "need at least two circuits");
    }
    if (window < 1 || buffer < 1) {
        throw Error(ErrorCode::CaseMismatch, "window and buffer must be >= 1");
    }
    auto is_non_tree = [&](const OrientedSpecialEdge& e) {
        for (const auto& nt : t.non_tree_edges) {
            if (nt.touches(e.tail, e.head)) return true;
        }
        return false;
    };
    if (!is_non_tree(e1) || !is_non_tree(e2)) {
        throw Error(ErrorCode::CaseMismatch, "special edges must be non-tree edges");
    }
    bool same = (e1.tail == e2.tail && e1.head == e2.head) ||
                (e1.tail == e2.head && e1.head == e2.tail);
    if (same) throw Error(ErrorCode::CaseMismatch, "special edges must be distinct");
    for (const auto& e : g.edges()) {
        if (e.label == kInfinity) {
            throw Error(ErrorCode::CaseMismatch,
                        "infinite labels must be replaced before the pi1 construction");
        }
    }
    (void)s0;

    RepWindow rep;
    rep.family_ = Family::Pi1;
    rep.ctx_ = ctx;
    rep.graph_ = g;
    rep.core_ = window;
    rep.buffer_ = buffer;
    rep.e1_ = e1;
    rep.e2_ = e2;
    for (int s = 0; s < g.vertex_count(); ++s) rep.generators_.push_back(s);

    const int ext = window + buffer;
    Scalar c1 = cos_coeff(1, g.label(e1.tail, e1.head), ctx);
    Scalar c2 = cos_coeff(1, g.label(e2.tail, e2.head), ctx);

    for (int s = 0; s < g.vertex_count(); ++s) {
        auto& tab = rep.table_[s];
        for (int tv = 0; tv < g.vertex_count(); ++tv) {
            for (int n = -ext; n <= ext; ++n) {
                BasisIndex idx = BasisIndex::pi1(tv, n);
                SparseVector img;
                if (s == tv) {
                    img.add_term(idx, -Scalar::one(ctx));
                } else if (s == e1.head && tv == e1.tail) {
                    // s1 . alpha_{t1,n} = alpha_{t1,n} + 2cos(pi/m) alpha_{s1,n+1}
                    if (n + 1 > ext) continue;
                    img.add_term(idx, Scalar::one(ctx));
                    img.add_term(BasisIndex::pi1(s, n + 1), c1);
                } else if (s == e1.tail && tv == e1.head) {
                    // t1 . alpha_{s1,n} = alpha_{s1,n} + 2cos(pi/m) alpha_{t1,n-1}
                    if (n - 1 < -ext) continue;
                    img.add_term(idx, Scalar::one(ctx));
                    img.add_term(BasisIndex::pi1(s, n - 1), c1);
                } else if (s == e2.head && tv == e2.tail) {
                    // s2 . alpha_{t2,n} = alpha_{t2,n} + 2^{n+1}cos(pi/m) alpha_{s2,n+1}
                    if (n + 1 > ext) continue;
                    img.add_term(idx, Scalar::one(ctx));
                    img.add_term(BasisIndex::pi1(s, n + 1),
                                 Scalar::from_rational(ctx, pow2(n)) * c2);
                } else if (s == e2.tail && tv == e2.head) {
                    // t2 . alpha_{s2,n} = alpha_{s2,n} + 2^{-n+2}cos(pi/m) alpha_{t2,n-1}
                    if (n - 1 < -ext) continue;
                    img.add_term(idx, Scalar::one(ctx));
                    img.add_term(BasisIndex::pi1(s, n - 1),
                                 Scalar::from_rational(ctx, pow2(-n + 1)) * c2);
                } else {
                    int m = g.label(s, tv);
                    img.add_term(idx, Scalar::one(ctx));
                    if (m != 2) {
                        img.add_term(BasisIndex::pi1(s, n), cos_coeff(1, m, ctx));
                    }
                }
                tab.emplace(idx, std::move(img));
            }
        }
    }
    return rep;
}

RepWindow build_cover_rep(const CoxeterGraph& g, const CoveredGraph& cov,
                          int depth, int buffer, const ContextPtr& ctx) {
    if (depth < 1 || buffer < 1) {
        throw Error(ErrorCode::CaseMismatch, "depth and buffer must be >= 1");
    }
    if (cov.truncation_depth() < depth + buffer) {
        throw Error(ErrorCode::TooShallow,
                    "cover truncated at depth " + std::to_string(cov.truncation_depth()) +
                        ", need " + std::to_string(depth + buffer));
    }
    int m12 = g.label(cov.root(), cov.mate());
    if (m12 == kInfinity || m12 < 4) {
        throw Error(ErrorCode::CaseMismatch,
                    "distinguished edge must carry a finite label >= 4");
    }

    RepWindow rep;
    rep.family_ = Family::Cover;
    rep.ctx_ = ctx;
    rep.graph_ = g;
    rep.cover_ = cov;
    rep.core_ = depth;
    rep.buffer_ = buffer;
    rep.special_label_ = m12;
    rep.e1_ = OrientedSpecialEdge{cov.root(), cov.mate()};
    for (int s = 0; s < g.vertex_count(); ++s) rep.generators_.push_back(s);

    const int ext = depth + buffer;
    Scalar c_special = cos_coeff(2, m12, ctx);

    for (int s = 0; s < g.vertex_count(); ++s) {
        auto& tab = rep.table_[s];
        for (int id = 0; id < cov.vertex_count(); ++id) {
            if (cov.vertex(id).depth() > ext) continue;
            BasisIndex idx = BasisIndex::cov(id);
            int pa = cov.vertex(id).project();
            SparseVector img;
            if (s == pa) {
                img.add_term(idx, -Scalar::one(ctx));
            } else if (s == cov.root() && id == cov.s2_prime()) {
                img.add_term(idx, Scalar::one(ctx));
                img.add_term(BasisIndex::cov(cov.s1_prime()), c_special);
            } else if (s == cov.mate() && id == cov.s1_prime()) {
                img.add_term(idx, Scalar::one(ctx));
                img.add_term(BasisIndex::cov(cov.s2_prime()), c_special);
            } else if (g.label(pa, s) == 2) {
                img.add_term(idx, Scalar::one(ctx));
            } else {
                int b = cov.neighbor_in_fiber(id, s);
                if (b < 0 || cov.vertex(b).depth() > ext) continue; // boundary
                img.add_term(idx, Scalar::one(ctx));
                img.add_term(BasisIndex::cov(b), cos_coeff(1, g.label(pa, s), ctx));
            }
            tab.emplace(idx, std::move(img));
        }
    }
    return rep;
}

RepWindow build_pgl_rep(int window, int buffer, const ContextPtr& ctx) {
    if (window < 1 || buffer < 1) {
        throw Error(ErrorCode::CaseMismatch, "window and buffer must be >= 1");
    }
    if (ctx->modulus() % 3 != 0) {
        throw Error(ErrorCode::IncompatibleModulus, "context must contain label 3");
    }
    RepWindow rep;
    rep.family_ = Family::Pgl;
    rep.ctx_ = ctx;
    rep.graph_ = CoxeterGraph::parse(
        "vertices: s1 s2 s3\nedge s1 s2 3\nedge s2 s3 inf\n");
    rep.core_ = window;
    rep.buffer_ = buffer;
    rep.generators_ = {0, 1, 2};

    const int ext = window + buffer;
    Scalar one = Scalar::one(ctx);
    Scalar half = Scalar::from_rational(ctx, Rational(1, 2));
    Scalar three_half = Scalar::from_rational(ctx, Rational(3, 2));

    auto& t1 = rep.table_[0];
    auto& t2 = rep.table_[1];
    auto& t3 = rep.table_[2];
    for (int i = 0; i <= ext; ++i) {
        BasisIndex ui = BasisIndex::pgl_u(i);
        // s1 fixes every u_i
        { SparseVector v; v.add_term(ui, one); t1.emplace(ui, std::move(v)); }
        // s2: u_0 fixed, u_i -> (3 v_i - u_i)/2
        {
            SparseVector v;
            if (i == 0) {
                v.add_term(ui, one);
            } else {
                v.add_term(ui, -half);
                v.add_term(BasisIndex::pgl_v(i), three_half);
            }
            t2.emplace(ui, std::move(v));
        }
        // s3: u_{2k} <-> u_{2k+1}
        {
            int j = (i % 2 == 0) ? i + 1 : i - 1;
            if (j <= ext) {
                SparseVector v;
                v.add_term(BasisIndex::pgl_u(j), one);
                t3.emplace(ui, std::move(v));
            }
        }
    }
    for (int i = 1; i <= ext; ++i) {
        BasisIndex vi = BasisIndex::pgl_v(i);
        { SparseVector v; v.add_term(vi, -one); t1.emplace(vi, std::move(v)); }
        {
            SparseVector v;
            v.add_term(BasisIndex::pgl_u(i), half);
            v.add_term(vi, half);
            t2.emplace(vi, std::move(v));
        }
        // s3: v_{2k-1} <-> v_{2k}
        {
            int j = (i % 2 == 1) ? i + 1 : i - 1;
            if (j >= 1 && j <= ext) {
                SparseVector v;
                v.add_term(BasisIndex::pgl_v(j), one);
                t3.emplace(vi, std::move(v));
            }
        }
    }
    return rep;
}

SparseVector apply(const RepWindow& rep, int s, const SparseVector& v) {
    SparseVector out;
    for (const auto& [idx, coeff] : v.terms()) {
        const SparseVector* img = rep.image(s, idx);
        if (img == nullptr) {
            throw Error(ErrorCode::WindowExceeded,
                        "support touches the extended-window boundary at " +
                            rep.index_name(idx));
        }
        for (const auto& [jdx, c] : img->terms()) out.add_term(jdx, coeff * c);
    }
    return out;
}

SparseVector apply_word(const RepWindow& rep, const std::vector<int>& word,
                        const SparseVector& v) {
    SparseVector out = v;
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        out = apply(rep, *it, out);
    }
    return out;
}

SparseVector f_map(const RepWindow& rep, int s, int t, const SparseVector& v) {
    int m = rep.graph().label(s, t);
    if (m == 2) throw Error(ErrorCode::NotAnEdge, "f_st requires an edge {s,t}");
    if (!(apply(rep, s, v) == -v)) {
        throw Error(ErrorCode::NotInMinusEigenspace,
                    "argument of f_st is not in the (-1)-eigenspace of s");
    }
    Scalar c = cos_coeff(1, m, rep.context());
    return (apply(rep, t, v) - v).scaled(c.inverse());
}

std::map<int, SparseVector> monodromy(const RepWindow& rep,
                                      const ClosedPathGenerator& c) {
    if (rep.family() != Family::Pi1) {
        throw Error(ErrorCode::CaseMismatch, "monodromy is defined for the pi1 family");
    }
    std::map<int, SparseVector> table;
    int s0 = c.path.front();
    for (int n = -rep.core_bound(); n <= rep.core_bound(); ++n) {
        SparseVector v = SparseVector::unit(BasisIndex::pi1(s0, n), rep.context());
        for (size_t i = 0; i + 1 < c.path.size(); ++i) {
            v = f_map(rep, c.path[i], c.path[i + 1], v);
        }
        table.emplace(n, std::move(v));
    }
    return table;
}

} // namespace coxrep
