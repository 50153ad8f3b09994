#pragma once

#include "cubigen/cocycle.hpp"
#include "cubigen/forms.hpp"
#include "cubigen/numeric.hpp"

#include <array>
#include <optional>
#include <utility>

namespace cubigen {

/// Integral basis of Q(cbrt(m)), m = h k^2 cube-free, in coordinates over
/// (1, theta, theta^2) with theta^3 = m. Type I: {1, theta, theta^2/k};
/// type II: {1, theta, (u + v theta + theta^2)/(3k)}.
struct IntegralBasis {
    BigInt m, h, k;
    DedekindType type = DedekindType::I;
    std::array<std::array<Rational, 3>, 3> elements;
    BigInt denominator;  // 1 for type I, 3k for type II
    BigInt disc;
};

/// Basis construction with the discriminant postcondition (-27(hk)^2 for
/// type I, -3(hk)^2 for type II) verified exactly.
IntegralBasis integral_basis(const BigInt& m);

/// Index form of the maximal order in the basis above. Type I yields
/// k X^3 - h Y^3; type II is computed from the multiplication table.
BinaryCubicForm index_form_of_field(const BigInt& m);

struct MonogenityCertificate {
    bool monogenic = false;
    std::optional<std::pair<BigInt, BigInt>> witness;
    std::optional<int> unit_value;  // f(witness), +1 or -1
};

/// Bounded index-form-equation search; absence of a witness leaves the
/// status undetermined.
MonogenityCertificate certify_monogenic(const BigInt& m, const BigInt& bound);

/// X^3 + c2 X^2 + c1 X + c0 with integer coefficients.
struct MonicCubic {
    BigInt c2, c1, c0;

    BigInt disc() const;
    bool has_rational_root() const;
};

/// Compares factorization shapes of f and g modulo every prime up to
/// prime_bound away from both discriminants. Returning false certifies the
/// fields are not isomorphic; true is consistency only. Both inputs must be
/// irreducible with nonzero discriminant.
bool splitting_consistent(const MonicCubic& f, const MonicCubic& g, long prime_bound);

}  // namespace cubigen
