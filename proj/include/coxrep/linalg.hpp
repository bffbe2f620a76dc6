#ifndef COXREP_LINALG_HPP
#define COXREP_LINALG_HPP

#include <map>
#include <vector>

#include "coxrep/rep.hpp"
#include "coxrep/scalar.hpp"

namespace coxrep {

// Incremental exact row reduction over the scalar field, pivoting by index
// order (never by magnitude).  Rows are kept fully reduced against each
// other, so the basis is in reduced row echelon form at all times.
class RowBasis {
public:
    // Reduce v against the current basis; the remainder has no pivot terms.
    SparseVector reduce(SparseVector v) const;

    // Reduce and, if the remainder is nonzero, normalize and insert it
    // (back-reducing the existing rows).  Returns true if the rank grew.
    bool insert(SparseVector v);

    bool contains(const SparseVector& v) const { return reduce(v).is_zero(); }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::map<BasisIndex, SparseVector>& rows() const { return rows_; }

private:
    std::map<BasisIndex, SparseVector> rows_; // pivot index -> row, leading coeff 1
};

// Exact kernel of a stacked sparse system A v = 0 where the columns are a
// fixed ordered list of basis indices.  Rows may touch indices outside the
// column list only through the column variables (rows are given directly
// over column positions).  Returns a deterministic kernel basis.
class KernelSolver {
public:
    explicit KernelSolver(int num_columns) : num_columns_(num_columns) {}

    void add_row(std::map<int, Scalar> row);
    // RREF + free-variable extraction; each kernel vector is indexed by column.
    std::vector<std::map<int, Scalar>> kernel_basis(const ContextPtr& ctx) const;
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    int num_columns_;
    std::map<int, std::map<int, Scalar>> rows_; // pivot column -> reduced row
};

} // namespace coxrep

#endif
