#include "coxrep/linalg.hpp"

namespace coxrep {

SparseVector RowBasis::reduce(SparseVector v) const {
    // pivots are visited in increasing order, matching the term order of v
    for (const auto& [pivot, row] : rows_) {
        auto c = v.coeff(pivot);
        if (!c) continue;
        v = v - row.scaled(*c);
    }
    return v;
}

bool RowBasis::insert(SparseVector v) {
    v = reduce(std::move(v));
    if (v.is_zero()) return false;
    BasisIndex pivot = v.terms().begin()->first;
    SparseVector normalized = v.scaled(v.terms().begin()->second.inverse());
    // back-reduce existing rows
    for (auto& [p, row] : rows_) {
        auto c = row.coeff(pivot);
        if (c) row = row - normalized.scaled(*c);
    }
    rows_.emplace(pivot, std::move(normalized));
    return true;
}

void KernelSolver::add_row(std::map<int, Scalar> row) {
    for (auto it = row.begin(); it != row.end();) {
        it = it->second.is_zero() ? row.erase(it) : std::next(it);
    }
    while (!row.empty()) {
        int lead = row.begin()->first;
        auto pit = rows_.find(lead);
        if (pit == rows_.end()) {
            Scalar inv = row.begin()->second.inverse();
            std::map<int, Scalar> normalized;
            for (const auto& [j, c] : row) {
                Scalar x = c * inv;
                if (!x.is_zero()) normalized.emplace(j, x);
            }
            // back-reduce existing rows against the new pivot
            for (auto& [p, r] : rows_) {
                auto cit = r.find(lead);
                if (cit == r.end()) continue;
                Scalar f = cit->second;
                for (const auto& [j, c] : normalized) {
                    auto jt = r.find(j);
                    if (jt == r.end()) {
                        Scalar x = -(f * c);
                        if (!x.is_zero()) r.emplace(j, x);
                    } else {
                        jt->second -= f * c;
                        if (jt->second.is_zero()) r.erase(jt);
                    }
                }
            }
            rows_.emplace(lead, std::move(normalized));
            return;
        }
        // eliminate the leading entry with the existing pivot row
        Scalar f = row.begin()->second;
        for (const auto& [j, c] : pit->second) {
            auto jt = row.find(j);
            if (jt == row.end()) {
                Scalar x = -(f * c);
                if (!x.is_zero()) row.emplace(j, x);
            } else {
                jt->second -= f * c;
                if (jt->second.is_zero()) row.erase(jt);
            }
        }
    }
}

std::vector<std::map<int, Scalar>> KernelSolver::kernel_basis(const ContextPtr& ctx) const {
    std::vector<std::map<int, Scalar>> basis;
    for (int f = 0; f < num_columns_; ++f) {
        if (rows_.count(f)) continue; // pivot column
        std::map<int, Scalar> v;
        v.emplace(f, Scalar::one(ctx));
        for (const auto& [p, row] : rows_) {
            auto it = row.find(f);
            if (it != row.end()) v.emplace(p, -it->second);
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace coxrep
