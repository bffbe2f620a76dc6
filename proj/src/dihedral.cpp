#include "coxrep/dihedral.hpp"

namespace coxrep {

Mat2 Mat2::identity(const ContextPtr& ctx) {
    return Mat2{Scalar::one(ctx), Scalar::zero(ctx), Scalar::zero(ctx), Scalar::one(ctx)};
}

Mat2 Mat2::operator*(const Mat2& o) const {
    return Mat2{a * o.a + b * o.c, a * o.b + b * o.d,
                c * o.a + d * o.c, c * o.b + d * o.d};
}

bool Mat2::operator==(const Mat2& o) const {
    return a == o.a && b == o.b && c == o.c && d == o.d;
}

Mat2 Mat2::pow(int e) const {
    Mat2 result = Mat2::identity(a.context());
    for (int i = 0; i < e; ++i) result = result * *this;
    return result;
}

std::string IrrepKind::to_string() const {
    switch (tag) {
        case Trivial: return "Trivial";
        case Sign: return "Sign";
        case EpsR: return "EpsR";
        case EpsT: return "EpsT";
        case Rho: return "Rho(" + std::to_string(k) + ")";
    }
    return "?";
}

std::pair<Mat2, Mat2> rho_matrices(int m, int k, const ContextPtr& ctx) {
    if (m < 3 || k < 1 || 2 * k > m) {
        throw Error(ErrorCode::BadK, "need 1 <= k <= m/2, got k=" + std::to_string(k) +
                                         ", m=" + std::to_string(m));
    }
    Scalar c = cos_coeff(k, m, ctx);
    Scalar one = Scalar::one(ctx);
    Scalar zero = Scalar::zero(ctx);
    Mat2 mr{-one, c, zero, one};
    Mat2 mt{one, zero, c, -one};
    return {mr, mt};
}

bool verify_dihedral_relations(int m, int k, const ContextPtr& ctx) {
    auto [mr, mt] = rho_matrices(m, k, ctx);
    Mat2 id = Mat2::identity(ctx);
    return mr * mr == id && mt * mt == id && (mr * mt).pow(m) == id;
}

namespace {

// rank of a stack of 2-column rows by exact elimination
int rank2(std::vector<std::array<Scalar, 2>> rows) {
    int rank = 0;
    for (int col = 0; col < 2; ++col) {
        size_t pivot = rows.size();
        for (size_t i = rank; i < rows.size(); ++i) {
            if (!rows[i][col].is_zero()) { pivot = i; break; }
        }
        if (pivot == rows.size()) continue;
        std::swap(rows[rank], rows[pivot]);
        Scalar inv = rows[rank][col].inverse();
        for (int j = 0; j < 2; ++j) rows[rank][j] = rows[rank][j] * inv;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == static_cast<size_t>(rank)) continue;
            Scalar f = rows[i][col];
            if (f.is_zero()) continue;
            for (int j = 0; j < 2; ++j) rows[i][j] = rows[i][j] - f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

} // namespace

int common_fixed_dimension(int m, int k, const ContextPtr& ctx) {
    auto [mr, mt] = rho_matrices(m, k, ctx);
    Scalar one = Scalar::one(ctx);
    std::vector<std::array<Scalar, 2>> rows = {
        {mr.a - one, mr.b}, {mr.c, mr.d - one},
        {mt.a - one, mt.b}, {mt.c, mt.d - one},
    };
    return 2 - rank2(std::move(rows));
}

int plus_one_eigenspace_dimension(const Mat2& m) {
    Scalar one = Scalar::one(m.a.context());
    std::vector<std::array<Scalar, 2>> rows = {
        {m.a - one, m.b}, {m.c, m.d - one},
    };
    return 2 - rank2(std::move(rows));
}

std::vector<IrrepKind> classify_block(const Scalar& r_value, const Scalar& t_value) {
    auto ctx = r_value.context();
    Scalar one = Scalar::one(ctx);
    Scalar minus_one = -one;
    bool rp = r_value == one, rm = r_value == minus_one;
    bool tp = t_value == one, tm = t_value == minus_one;
    if (!(rp || rm) || !(tp || tm)) {
        throw Error(ErrorCode::NotARepresentation, "1-dim block values are not +-1");
    }
    if (rp && tp) return {IrrepKind{IrrepKind::Trivial}};
    if (rm && tm) return {IrrepKind{IrrepKind::Sign}};
    if (rm && tp) return {IrrepKind{IrrepKind::EpsR}};
    return {IrrepKind{IrrepKind::EpsT}};
}

std::vector<IrrepKind> classify_block(const Mat2& mr, const Mat2& mt, int m,
                                      const ContextPtr& ctx) {
    Mat2 id = Mat2::identity(ctx);
    if (!(mr * mr == id) || !(mt * mt == id) || !((mr * mt).pow(m) == id)) {
        throw Error(ErrorCode::NotARepresentation,
                    "block does not satisfy the dihedral relations");
    }
    Scalar tau = (mr * mt).trace();
    Scalar two = Scalar::from_rational(ctx, Rational(2));
    if (tau == two) {
        // M_r M_t = I (semisimple of finite order with double eigenvalue 1)
        if (mr == id) return {IrrepKind{IrrepKind::Trivial}, IrrepKind{IrrepKind::Trivial}};
        Mat2 neg_id{-id.a, id.b, id.c, -id.d};
        if (mr == neg_id) return {IrrepKind{IrrepKind::Sign}, IrrepKind{IrrepKind::Sign}};
        return {IrrepKind{IrrepKind::Trivial}, IrrepKind{IrrepKind::Sign}};
    }
    if (tau == -two) {
        // M_r M_t = -I, so M_t = -M_r and the block is eps_r + eps_t
        Mat2 neg_id{-id.a, id.b, id.c, -id.d};
        if (mr == id) return {IrrepKind{IrrepKind::EpsT}, IrrepKind{IrrepKind::EpsT}};
        if (mr == neg_id) return {IrrepKind{IrrepKind::EpsR}, IrrepKind{IrrepKind::EpsR}};
        return {IrrepKind{IrrepKind::EpsR}, IrrepKind{IrrepKind::EpsT}};
    }
    for (int k = 1; 2 * k < m; ++k) {
        if (tau == cos_coeff(2 * k, m, ctx)) return {IrrepKind{IrrepKind::Rho, k}};
    }
    throw Error(ErrorCode::UnrecognizedBlock, "trace matches no rho_k");
}

} // namespace coxrep
