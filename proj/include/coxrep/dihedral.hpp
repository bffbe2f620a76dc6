#ifndef COXREP_DIHEDRAL_HPP
#define COXREP_DIHEDRAL_HPP

#include <string>
#include <vector>

#include "coxrep/scalar.hpp"

namespace coxrep {

// Row-major 2x2 matrix over the scalar field, column convention: column i
// is the image of basis vector i in the order (beta_r, beta_t).
struct Mat2 {
    Scalar a, b, c, d; // [[a, b], [c, d]]

    static Mat2 identity(const ContextPtr& ctx);
    Mat2 operator*(const Mat2& other) const;
    bool operator==(const Mat2& other) const;
    Mat2 pow(int e) const;
    Scalar trace() const { return a + d; }
};

// Irrep of the dihedral group D_m occurring in the constructions:
// the trivial and sign characters, eps_r / eps_t for even m, and the
// 2-dimensional rho_k with coupling 2cos(k pi / m).
struct IrrepKind {
    enum Tag { Trivial, Sign, EpsR, EpsT, Rho } tag;
    int k = 0; // meaningful for Rho only

    bool operator==(const IrrepKind& o) const { return tag == o.tag && k == o.k; }
    bool operator<(const IrrepKind& o) const {
        return tag != o.tag ? tag < o.tag : k < o.k;
    }
    std::string to_string() const;
};

// The pair (M_r, M_t) of rho_k.  k = m/2 is allowed (the reducible case).
std::pair<Mat2, Mat2> rho_matrices(int m, int k, const ContextPtr& ctx);

// Exact check of r^2 = t^2 = (rt)^m = e on rho_k.
bool verify_dihedral_relations(int m, int k, const ContextPtr& ctx);

// dim { v : M_r v = v and M_t v = v }; zero for every irreducible rho_k.
int common_fixed_dimension(int m, int k, const ContextPtr& ctx);

// +1-eigenspace dimension of an involutive 2x2 matrix.
int plus_one_eigenspace_dimension(const Mat2& m);

// Classify a 1-dimensional block by the two scalars r, t act by.
std::vector<IrrepKind> classify_block(const Scalar& r_value, const Scalar& t_value);

// Classify a 2-dimensional block; either a single rho_k (identified by the
// trace of M_r M_t) or a split pair of 1-dimensional kinds.
std::vector<IrrepKind> classify_block(const Mat2& mr, const Mat2& mt, int m,
                                      const ContextPtr& ctx);

} // namespace coxrep

#endif
