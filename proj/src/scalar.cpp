#include "coxrep/scalar.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace coxrep {

const char* error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::SyntaxError: return "SyntaxError";
        case ErrorCode::LoopEdge: return "LoopEdge";
        case ErrorCode::DuplicateEdge: return "DuplicateEdge";
        case ErrorCode::BadLabel: return "BadLabel";
        case ErrorCode::Disconnected: return "Disconnected";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::NotSpanningTree: return "NotSpanningTree";
        case ErrorCode::NotAnEdge: return "NotAnEdge";
        case ErrorCode::IncompatibleModulus: return "IncompatibleModulus";
        case ErrorCode::DivisionByZero: return "DivisionByZero";
        case ErrorCode::ContextMismatch: return "ContextMismatch";
        case ErrorCode::BadK: return "BadK";
        case ErrorCode::NotARepresentation: return "NotARepresentation";
        case ErrorCode::UnrecognizedBlock: return "UnrecognizedBlock";
        case ErrorCode::TooShallow: return "TooShallow";
        case ErrorCode::CaseMismatch: return "CaseMismatch";
        case ErrorCode::WindowExceeded: return "WindowExceeded";
        case ErrorCode::NotInMinusEigenspace: return "NotInMinusEigenspace";
        case ErrorCode::BlockStraddlesBoundary: return "BlockStraddlesBoundary";
    }
    return "UnknownError";
}

namespace {

using Poly = std::vector<Rational>; // coeffs[i] is the coefficient of x^i

int poly_degree(const Poly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i) {
        if (p[i] != 0) return i;
    }
    return -1;
}

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact division; remainder must be zero for our callers on integer input.
Poly poly_div(const Poly& num, const Poly& den) {
    Poly rem = num;
    int dd = poly_degree(den);
    Poly quot(std::max<int>(0, poly_degree(num) - dd + 1), Rational(0));
    for (int i = poly_degree(rem); i >= dd; i = poly_degree(rem)) {
        Rational f = rem[i] / den[dd];
        quot[i - dd] = f;
        for (int j = 0; j <= dd; ++j) rem[i - dd + j] -= f * den[j];
    }
    return quot;
}

// Phi_n via iterated exact division of x^n - 1 by Phi_d for proper divisors d.
Poly cyclotomic(int n) {
    Poly num(n + 1, Rational(0));
    num[0] = -1;
    num[n] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        num = poly_div(num, cyclotomic(d));
    }
    poly_trim(num);
    return num;
}

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

BigInt binomial(int n, int k) {
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= n - i;
        r /= i + 1;
    }
    return r;
}

// Phi_{2N}(z) = z^d psi(z + 1/z) with d = phi(2N)/2; peel off psi's
// coefficients from the top using z^{d-k} (z^2+1)^k = z^d (z + 1/z)^k.
Poly half_companion(const Poly& phi) {
    int d = poly_degree(phi) / 2;
    Poly rem = phi;
    Poly psi(d + 1, Rational(0));
    for (int k = d; k >= 0; --k) {
        Rational c = rem[d + k];
        psi[k] = c;
        if (c == 0) continue;
        for (int i = 0; i <= k; ++i) {
            rem[d - k + 2 * i] -= c * Rational(binomial(k, i));
        }
    }
    for (const auto& r : rem) {
        if (r != 0) throw Error(ErrorCode::SyntaxError, "palindromic reduction failed");
    }
    return psi;
}

} // namespace

std::shared_ptr<const ScalarContext> ScalarContext::make(const std::set<int>& labels) {
    long long n = labels.empty() ? 3 : 1;
    for (int m : labels) {
        if (m < 3) throw Error(ErrorCode::BadLabel, "label " + std::to_string(m));
        n = std::lcm<long long>(n, m);
    }
    auto ctx = std::shared_ptr<ScalarContext>(new ScalarContext());
    ctx->n_ = static_cast<int>(n);
    Poly phi = cyclotomic(2 * ctx->n_);
    ctx->psi_ = half_companion(phi);
    ctx->degree_ = poly_degree(ctx->psi_);
    if (ctx->degree_ != euler_phi(2 * ctx->n_) / 2) {
        throw Error(ErrorCode::SyntaxError, "unexpected field degree");
    }
    ctx->theta_ = 2.0 * std::cos(M_PI / ctx->n_);
    // sanity: psi(theta) vanishes numerically
    double acc = 0.0, pw = 1.0;
    for (const auto& c : ctx->psi_) {
        acc += c.convert_to<double>() * pw;
        pw *= ctx->theta_;
    }
    if (std::abs(acc) > 1e-9) {
        throw Error(ErrorCode::SyntaxError, "minimal polynomial check failed");
    }
    return ctx;
}

Scalar::Scalar(ContextPtr ctx, std::vector<Rational> coeffs)
    : ctx_(std::move(ctx)), coeffs_(std::move(coeffs)) {
    coeffs_.resize(ctx_->degree(), Rational(0));
}

Scalar Scalar::zero(const ContextPtr& ctx) {
    return Scalar(ctx, std::vector<Rational>(ctx->degree(), Rational(0)));
}

Scalar Scalar::one(const ContextPtr& ctx) { return from_rational(ctx, Rational(1)); }

Scalar Scalar::from_rational(const ContextPtr& ctx, const Rational& q) {
    std::vector<Rational> c(ctx->degree(), Rational(0));
    c[0] = q;
    return Scalar(ctx, std::move(c));
}

Scalar Scalar::theta(const ContextPtr& ctx) {
    std::vector<Rational> c(ctx->degree(), Rational(0));
    if (ctx->degree() == 1) {
        // theta = 1 when N = 3: reduce x mod (x - 1)
        c[0] = 1;
    } else {
        c[1] = 1;
    }
    return Scalar(ctx, std::move(c));
}

bool Scalar::is_zero() const {
    for (const auto& c : coeffs_) {
        if (c != 0) return false;
    }
    return true;
}

bool Scalar::is_one() const {
    if (coeffs_.empty() || coeffs_[0] != 1) return false;
    for (size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) return false;
    }
    return true;
}

void Scalar::check_same_context(const Scalar& other) const {
    if (ctx_ != other.ctx_) {
        throw Error(ErrorCode::ContextMismatch, "operands from different scalar contexts");
    }
}

Scalar Scalar::operator+(const Scalar& other) const {
    check_same_context(other);
    std::vector<Rational> c = coeffs_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += other.coeffs_[i];
    return Scalar(ctx_, std::move(c));
}

Scalar Scalar::operator-(const Scalar& other) const { return *this + (-other); }

Scalar Scalar::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (auto& x : c) x = -x;
    return Scalar(ctx_, std::move(c));
}

Scalar Scalar::operator*(const Scalar& other) const {
    check_same_context(other);
    int d = ctx_->degree();
    std::vector<Rational> prod(2 * d - 1, Rational(0));
    for (int i = 0; i < d; ++i) {
        if (coeffs_[i] == 0) continue;
        for (int j = 0; j < d; ++j) {
            if (other.coeffs_[j] == 0) continue;
            prod[i + j] += coeffs_[i] * other.coeffs_[j];
        }
    }
    const auto& psi = ctx_->psi();
    for (int i = static_cast<int>(prod.size()) - 1; i >= d; --i) {
        Rational f = prod[i];
        if (f == 0) continue;
        prod[i] = 0;
        for (int j = 0; j < d; ++j) prod[i - d + j] -= f * psi[j];
    }
    prod.resize(d);
    return Scalar(ctx_, std::move(prod));
}

Scalar& Scalar::operator+=(const Scalar& other) { return *this = *this + other; }
Scalar& Scalar::operator-=(const Scalar& other) { return *this = *this - other; }
Scalar& Scalar::operator*=(const Scalar& other) { return *this = *this * other; }

bool Scalar::operator==(const Scalar& other) const {
    check_same_context(other);
    return coeffs_ == other.coeffs_;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    // extended Euclid of coeff polynomial with psi in Q[x]
    Poly r0 = ctx_->psi();
    Poly r1 = coeffs_;
    poly_trim(r1);
    Poly s0; // coefficient of "this" in r0 = psi: zero
    Poly s1{Rational(1)};
    while (poly_degree(r1) > 0) {
        int d0 = poly_degree(r0);
        int d1 = poly_degree(r1);
        Poly q(d0 - d1 + 1, Rational(0));
        Poly rem = r0;
        for (int i = poly_degree(rem); i >= d1; i = poly_degree(rem)) {
            Rational f = rem[i] / r1[d1];
            q[i - d1] = f;
            for (int j = 0; j <= d1; ++j) rem[i - d1 + j] -= f * r1[j];
        }
        poly_trim(rem);
        // s_new = s0 - q * s1
        Poly snew = s0;
        snew.resize(std::max(snew.size(), q.size() + s1.size()), Rational(0));
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i] == 0) continue;
            for (size_t j = 0; j < s1.size(); ++j) snew[i + j] -= q[i] * s1[j];
        }
        poly_trim(snew);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(snew);
    }
    if (poly_degree(r1) != 0) {
        throw Error(ErrorCode::DivisionByZero, "non-invertible element");
    }
    Rational lead = r1[0];
    std::vector<Rational> c(ctx_->degree(), Rational(0));
    for (size_t i = 0; i < s1.size() && i < c.size(); ++i) c[i] = s1[i] / lead;
    return Scalar(ctx_, std::move(c));
}

double Scalar::to_double() const {
    double acc = 0.0, pw = 1.0;
    for (const auto& c : coeffs_) {
        acc += c.convert_to<double>() * pw;
        pw *= ctx_->theta();
    }
    return acc;
}

std::string Scalar::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        Rational a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (i == 0 || a != 1) {
            os << a.str();
            if (i > 0) os << "*";
        }
        if (i == 1) os << "t";
        if (i > 1) os << "t^" << i;
    }
    if (first) os << "0";
    return os.str();
}

Scalar cos_coeff(int k, int m, const ContextPtr& ctx) {
    if (m == kInfinity) {
        if (k != 1) throw Error(ErrorCode::IncompatibleModulus, "k must be 1 for m = inf");
        return Scalar::from_rational(ctx, Rational(2));
    }
    if (m < 3 || ctx->modulus() % m != 0) {
        throw Error(ErrorCode::IncompatibleModulus,
                    "label " + std::to_string(m) + " does not divide N = " +
                        std::to_string(ctx->modulus()));
    }
    long long j = static_cast<long long>(k) * ctx->modulus() / m;
    // 2 cos(j phi) = D_j(2 cos phi): D_0 = 2, D_1 = x, D_{j+1} = x D_j - D_{j-1}
    Scalar x = Scalar::theta(ctx);
    Scalar prev = Scalar::from_rational(ctx, Rational(2));
    if (j == 0) return prev;
    Scalar cur = x;
    for (long long i = 1; i < j; ++i) {
        Scalar next = x * cur - prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

} // namespace coxrep
