#pragma once

#include "cubigen/factor.hpp"
#include "cubigen/mordell.hpp"
#include "cubigen/numeric.hpp"

#include <optional>
#include <utility>

namespace cubigen {

/// a X^3 + b X^2 Y + c X Y^2 + d Y^3 with exact rational coefficients.
struct BinaryCubicForm {
    Rational a, b, c, d;

    Rational evaluate(const Rational& x, const Rational& y) const;
    bool operator==(const BinaryCubicForm&) const = default;
};

/// a X^2 + b X Y + c Y^2.
struct BinaryQuadraticForm {
    Rational a, b, c;

    bool operator==(const BinaryQuadraticForm&) const = default;
};

struct GL2Matrix {
    Rational m11, m12, m21, m22;

    Rational det() const { return m11 * m22 - m12 * m21; }
};

/// Structure constants of a cubic ring in a normal basis {1, w2, w3}:
///   w2*w3 = n,  w2^2 = m - b*w2 + a*w3,  w3^2 = l - d*w2 + c*w3.
struct CubicRingData {
    Rational a, b, c, d, l, m, n;
};

/// b^2 c^2 + 18abcd - 4ac^3 - 4db^3 - 27a^2 d^2.
Rational disc_form(const BinaryCubicForm& f);

/// Twisted action det(g)^-1 f((X,Y)*g); g must be invertible.
BinaryCubicForm act(const GL2Matrix& g, const BinaryCubicForm& f);

/// Hessian h_f = (f_xx f_yy - f_xy^2)/4 and the Jacobian covariant
/// g_f = f_x (h_f)_y - f_y (h_f)_x.
std::pair<BinaryQuadraticForm, BinaryCubicForm> covariants(const BinaryCubicForm& f);

/// Checks g_f^2 + 27 disc(f) f^2 + 4 h_f^3 = 0 coefficientwise.
bool syzygy_holds(const BinaryCubicForm& f);

/// The index form (a, b, c, d) of the ring; throws std::domain_error when the
/// structure constants fail the associativity relations m=-ac, n=-ad, l=-bd.
BinaryCubicForm index_form_from_ring(const CubicRingData& ring);

/// Lexicographically smallest integer pair (x, y) with max(|x|,|y|) <= bound
/// and f(x, y) = +-1, if any. f must have integer coefficients.
std::optional<std::pair<BigInt, BigInt>> represents_unit(const BinaryCubicForm& f,
                                                         const BigInt& bound);

/// Reconstructs the matrix of the twisted equivalence between X^3 - m Y^3 and
/// the shifted defining cubic of the point's field and checks it exactly.
/// P = (x0, y0) must lie on E^{-27D} for D = -3n^2 with x0 != 0, and m must
/// represent the cube-free class of (y0 - 9n)/(y0 + 9n). Both sign branches
/// of the entry formulas are tried.
bool verify_gamma_equivalence(const MordellPoint& P, const BigInt& n, const CubeFreeClass& m);

}  // namespace cubigen
