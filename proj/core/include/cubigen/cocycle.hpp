#pragma once

#include "cubigen/factor.hpp"
#include "cubigen/mordell.hpp"
#include "cubigen/numeric.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace cubigen {

enum class DedekindType { I, II };

/// A prime of the cube-free class fell outside the context's support; this
/// points at an off-curve input, a wrong n, or a bug.
struct SupportViolation : std::domain_error {
    using std::domain_error::domain_error;
};

/// Raised by primitive_ratio on (0, -9n), where the ratio is undefined.
struct DualKernelPoint : std::domain_error {
    using std::domain_error::domain_error;
};

/// Fixed data for analysing the fields of discriminant D = -3n^2.
/// Support: [3, primes of n] when 3 does not divide n (type II branch),
/// [primes of n'] with n = 3n' otherwise (type I branch).
struct AnalysisContext {
    BigInt n;
    BigInt D;
    DedekindType branch = DedekindType::II;
    BigInt n_prime = 0;  // n/3 in the type I branch, 0 otherwise
    std::vector<BigInt> prime_support;

    static AnalysisContext for_n(const BigInt& n);

    /// D must be of the form -3n^2; throws std::invalid_argument otherwise.
    static AnalysisContext for_discriminant(const BigInt& D);
};

/// F3 exponent vector over a context's prime support, defined up to global
/// sign; canonical form has first nonzero entry 1.
struct LambdaVector {
    std::vector<uint8_t> entries;  // values in {0, 1, 2}

    bool is_zero() const;
    LambdaVector negated() const;
    LambdaVector canonical() const;
    bool operator==(const LambdaVector&) const = default;
};

LambdaVector lambda_add(const LambdaVector& a, const LambdaVector& b);
LambdaVector lambda_scale(uint8_t s, const LambdaVector& a);

/// A pure cubic field Q(cbrt(m)); m is the canonical representative
/// min(h k^2, h^2 k) of the isomorphism class.
struct FieldDescriptor {
    BigInt m;
    BigInt h;
    BigInt k;
    DedekindType type = DedekindType::I;
    BigInt disc;
    bool trivially_monogenic = false;  // type I with k = 1: the index form is X^3 - m Y^3

    bool operator==(const FieldDescriptor& other) const { return m == other.m; }
    bool operator<(const FieldDescriptor& other) const { return m < other.m; }
};

/// (y0 - 9n)/(y0 + 9n) for affine P = (x0, y0) on E^{-27D}; zero exactly at
/// (0, 9n). Throws DualKernelPoint on (0, -9n).
Rational primitive_ratio(const MordellPoint& P, const AnalysisContext& ctx);

/// The cube-free class of the point's primitive ratio (of D itself when
/// x0 = 0). Trivial classes (m = 1) are cross-checked against membership in
/// phi_D(E^D(Q)) and reported as std::nullopt.
std::optional<FieldDescriptor> field_of_point(const MordellPoint& P, const AnalysisContext& ctx);

/// Exponents mod 3 of the point's cube-free class over the context support,
/// canonicalized; the zero vector for trivial classes.
LambdaVector lambda_vector(const MordellPoint& P, const AnalysisContext& ctx);

/// Exponent vector of an explicit cube-free class over the support; throws
/// SupportViolation when a prime falls outside it.
LambdaVector lambda_from_class(const CubeFreeClass& cls, const AnalysisContext& ctx);

/// The field Q(cbrt(n/3)) when 3 | n and the cube-free reduction of n/3 is
/// not +-1 mod 9; its index form represents 1 trivially.
std::optional<FieldDescriptor> trivially_monogenic(const AnalysisContext& ctx);

/// Type, h/k split, discriminant and canonical representative of Q(cbrt(m));
/// m must be cube-free and > 1.
FieldDescriptor classify_field(const BigInt& m);

}  // namespace cubigen
