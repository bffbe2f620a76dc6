#ifndef COXREP_REP_HPP
#define COXREP_REP_HPP

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "coxrep/cover.hpp"
#include "coxrep/dihedral.hpp"
#include "coxrep/graph.hpp"
#include "coxrep/scalar.hpp"

namespace coxrep {

enum class Family { Pi1, Cover, Pgl };
const char* family_name(Family f);

// Index into one of the three basis families:
//   Pi1:  alpha_{s,n}   (a = base vertex, b = n)
//   Cov:  alpha_a       (a = cover vertex id)
//   PglU / PglV: u_i / v_i (a = i)
struct BasisIndex {
    enum Kind : int { Pi1 = 0, Cov = 1, PglU = 2, PglV = 3 };
    int kind;
    int a;
    int b;

    auto operator<=>(const BasisIndex&) const = default;

    static BasisIndex pi1(int s, int n) { return {Pi1, s, n}; }
    static BasisIndex cov(int id) { return {Cov, id, 0}; }
    static BasisIndex pgl_u(int i) { return {PglU, i, 0}; }
    static BasisIndex pgl_v(int i) { return {PglV, i, 0}; }
};

// Finite linear combination of basis indices; zero coefficients absent.
class SparseVector {
public:
    SparseVector() = default;

    static SparseVector unit(BasisIndex idx, const ContextPtr& ctx);

    void add_term(BasisIndex idx, const Scalar& coeff);
    bool is_zero() const { return terms_.empty(); }
    std::optional<Scalar> coeff(BasisIndex idx) const;
    const std::map<BasisIndex, Scalar>& terms() const { return terms_; }

    SparseVector operator+(const SparseVector& other) const;
    SparseVector operator-(const SparseVector& other) const;
    SparseVector operator-() const;
    SparseVector scaled(const Scalar& factor) const;
    bool operator==(const SparseVector& other) const { return terms_ == other.terms_; }

private:
    std::map<BasisIndex, Scalar> terms_;
};

// Orientation of a special non-tree edge: the generator path crosses it
// tail -> head ("goes through t first and then s").
struct OrientedSpecialEdge {
    int tail = -1;
    int head = -1;
};

// A family of exact involutive generator actions truncated to a finite
// window.  Actions are total on the extended window (core + buffer) except
// at the outer boundary, where applying a generator is a hard error rather
// than a silent truncation.
class RepWindow {
public:
    Family family() const { return family_; }
    const ContextPtr& context() const { return ctx_; }
    const CoxeterGraph& graph() const { return graph_; }
    const CoveredGraph& cover() const; // Cover family only
    int core_bound() const { return core_; }
    int buffer() const { return buffer_; }

    // Generators in deterministic order (base vertex ids; 0,1,2 for Pgl).
    const std::vector<int>& generators() const { return generators_; }
    std::string generator_name(int s) const;

    bool in_core(BasisIndex idx) const;
    std::vector<BasisIndex> core_indices() const;
    std::string index_name(BasisIndex idx) const;

    // Image of the basis vector `idx` under generator s, or nullopt at the
    // extended-window boundary.
    const SparseVector* image(int s, BasisIndex idx) const;

    const OrientedSpecialEdge& special_edge1() const { return e1_; }
    const OrientedSpecialEdge& special_edge2() const { return e2_; }
    int special_label() const { return special_label_; } // Cover family

    // Test hook: overwrite one action-table entry (fault injection).
    void corrupt_entry(int s, BasisIndex idx, SparseVector image);

    friend RepWindow build_pi1_rep(const CoxeterGraph& g, const SpanningTree& t,
                                   int s0, OrientedSpecialEdge e1,
                                   OrientedSpecialEdge e2, int window, int buffer,
                                   const ContextPtr& ctx);
    friend RepWindow build_cover_rep(const CoxeterGraph& g, const CoveredGraph& cov,
                                     int depth, int buffer, const ContextPtr& ctx);
    friend RepWindow build_pgl_rep(int window, int buffer, const ContextPtr& ctx);

private:
    Family family_ = Family::Pi1;
    ContextPtr ctx_;
    CoxeterGraph graph_;
    std::optional<CoveredGraph> cover_;
    int core_ = 0;
    int buffer_ = 0;
    std::vector<int> generators_;
    OrientedSpecialEdge e1_, e2_;
    int special_label_ = 0;
    // per generator: basis index -> image
    std::map<int, std::map<BasisIndex, SparseVector>> table_;
};

// Section-3 construction: the fundamental-group gluing on the doubly
// infinite ladder of rho_1 blocks, with the dyadic weights on e2.
RepWindow build_pi1_rep(const CoxeterGraph& g, const SpanningTree& t, int s0,
                        OrientedSpecialEdge e1, OrientedSpecialEdge e2,
                        int window, int buffer, const ContextPtr& ctx);

// Section-4 construction on a truncated universal covering; the
// distinguished lifted edge carries 2cos(2 pi / m), all others 2cos(pi / m).
RepWindow build_cover_rep(const CoxeterGraph& g, const CoveredGraph& cov,
                          int depth, int buffer, const ContextPtr& ctx);

// Section-5 PGL(2,Z) example on u_0, {u_i, v_i}.
RepWindow build_pgl_rep(int window, int buffer, const ContextPtr& ctx);

SparseVector apply(const RepWindow& rep, int s, const SparseVector& v);
SparseVector apply_word(const RepWindow& rep, const std::vector<int>& word,
                        const SparseVector& v);

// f_st(v) = (t.v - v) / 2cos(pi/m_st) for v in the (-1)-eigenspace of s.
SparseVector f_map(const RepWindow& rep, int s, int t, const SparseVector& v);

// Monodromy of the f-maps along a fundamental generator: n -> image of
// alpha_{s0,n}, for every core n.
std::map<int, SparseVector> monodromy(const RepWindow& rep,
                                      const ClosedPathGenerator& c);

} // namespace coxrep

#endif
