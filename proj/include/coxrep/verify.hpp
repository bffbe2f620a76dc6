#ifndef COXREP_VERIFY_HPP
#define COXREP_VERIFY_HPP

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxrep/linalg.hpp"
#include "coxrep/rep.hpp"

namespace coxrep {

struct VerificationReport {
    enum class Status { Pass, Fail, Skipped, Evidence };

    std::string name;
    Status status = Status::Pass;
    std::string details;
    std::string counterexample; // nonempty iff a concrete failure witness exists

    bool failed() const { return status == Status::Fail; }
};

const char* status_name(VerificationReport::Status s);

std::string render(const RepWindow& rep, const SparseVector& v);

// s^2 = e on every core index, exact.
VerificationReport check_involutions(const RepWindow& rep);

// (st)^{m_st} = e on every core index (m_st = 2 checks commutation);
// skipped for m_st = oo.
VerificationReport check_braid(const RepWindow& rep, int s, int t);

// Exact kernel of {(s - id) v = 0 : s in gens} over core-supported vectors.
std::vector<SparseVector> fixed_space(const RepWindow& rep,
                                      const std::vector<int>& gens);

bool in_span(const std::vector<SparseVector>& basis, const SparseVector& v);

// True iff some nonzero vector of span(basis) is supported inside `inside`.
bool span_meets_support(const std::vector<SparseVector>& basis,
                        const std::vector<BasisIndex>& inside);

// m = 4: V_1 must be invariant; m > 4: the coupling across the distinguished
// edge escapes and the witness is recorded.  Pass iff observed == expected.
VerificationReport check_V1_invariance(const RepWindow& rep);

struct BlockDecomposition {
    std::map<IrrepKind, int> counts;
    VerificationReport report;
};

// Partition of the core into <s1,s2>-blocks: lifted-edge pairs and
// singletons; within_v1 restricts to the S1' side (m = 4 only).
BlockDecomposition decompose_dihedral_blocks(const RepWindow& rep, bool within_v1);

struct ClosureResult {
    int dimension = 0;
    std::vector<BasisIndex> coverage; // core indices met by the reduced span
    VerificationReport report;
};

// Span of {w . seed : |w| <= word_budget} by incremental exact reduction.
ClosureResult cyclic_closure(const RepWindow& rep, const SparseVector& seed,
                             int word_budget);

struct SuiteConfig {
    std::string graph_name;
    int closure_budget = 8;
    bool infinite_labels_replaced = false; // pi1 pullback metadata
};

std::vector<VerificationReport> run_suite(const RepWindow& rep,
                                          const SuiteConfig& config);

nlohmann::ordered_json suite_json(const RepWindow& rep, const SuiteConfig& config,
                                  const std::vector<VerificationReport>& reports);

} // namespace coxrep

#endif
