#ifndef COXREP_SCALAR_HPP
#define COXREP_SCALAR_HPP

#include <memory>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxrep/errors.hpp"

namespace coxrep {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Sentinel for an infinite edge label m_st = oo.
constexpr int kInfinity = -1;

// The real cyclotomic field Q(theta), theta = 2 cos(pi/N).  All edge
// coefficients 2 cos(k pi / m) with m | N live here, as do plain rationals
// (the degenerate case N = 3 gives theta = 1 and the field is Q itself).
class ScalarContext {
public:
    // N = lcm of the given finite labels (N = 3 when the set is empty).
    static std::shared_ptr<const ScalarContext> make(const std::set<int>& labels);

    int modulus() const { return n_; }
    int degree() const { return degree_; }
    // Monic minimal polynomial of theta; coefficient of x^i at position i.
    const std::vector<Rational>& psi() const { return psi_; }
    double theta() const { return theta_; }

private:
    ScalarContext() = default;
    int n_ = 0;
    int degree_ = 0;
    std::vector<Rational> psi_;
    double theta_ = 0.0;
};

using ContextPtr = std::shared_ptr<const ScalarContext>;

// Element of Q(theta) in canonical form: c0 + c1 theta + ... + c_{d-1} theta^{d-1}.
class Scalar {
public:
    Scalar() = default;

    static Scalar zero(const ContextPtr& ctx);
    static Scalar one(const ContextPtr& ctx);
    static Scalar from_rational(const ContextPtr& ctx, const Rational& q);
    static Scalar theta(const ContextPtr& ctx);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;

    Scalar operator+(const Scalar& other) const;
    Scalar operator-(const Scalar& other) const;
    Scalar operator-() const;
    Scalar operator*(const Scalar& other) const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    Scalar inverse() const;

    double to_double() const;
    // Exact polynomial rendering in "t", e.g. "1/2*t^2 - 1".
    std::string to_string() const;

private:
    Scalar(ContextPtr ctx, std::vector<Rational> coeffs);
    void check_same_context(const Scalar& other) const;

    ContextPtr ctx_;
    std::vector<Rational> coeffs_;
};

// The exact value 2 cos(k pi / m).  Requires m | N; for m = oo (k must be 1)
// returns the constant 2, the limit convention used for infinite labels.
Scalar cos_coeff(int k, int m, const ContextPtr& ctx);

} // namespace coxrep

#endif
