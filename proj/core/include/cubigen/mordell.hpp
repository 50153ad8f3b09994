#pragma once

#include "cubigen/numeric.hpp"

#include <optional>
#include <vector>

namespace cubigen {

/// Coordinate convention for a Mordell curve with parameter k:
///   four_x3: Y^2 = 4X^3 + k      (the working model)
///   x3q:     y^2 = x^3 + k/4     (the halved model used by generator data)
enum class CurveModel { four_x3, x3q };

struct MordellCurve {
    Rational k;
    CurveModel model = CurveModel::four_x3;
};

struct MordellPoint {
    bool infinity = true;
    Rational x, y;
    CurveModel model = CurveModel::four_x3;

    static MordellPoint at_infinity(CurveModel m = CurveModel::four_x3) {
        return MordellPoint{true, 0, 0, m};
    }
    static MordellPoint affine(Rational px, Rational py, CurveModel m = CurveModel::four_x3) {
        return MordellPoint{false, std::move(px), std::move(py), m};
    }

    bool operator==(const MordellPoint& other) const {
        if (infinity != other.infinity) return false;
        if (infinity) return true;
        return x == other.x && y == other.y && model == other.model;
    }
};

/// Exact model-equation check; the point's model must match the curve's.
bool on_curve(const MordellCurve& c, const MordellPoint& P);

/// (x, y) in x3q <-> (x, 2y) in four_x3; involutive.
MordellPoint convert_model(const MordellPoint& P);

MordellPoint negate(const MordellCurve& c, const MordellPoint& P);

/// Chord-tangent law; throws std::domain_error on off-curve input.
MordellPoint add(const MordellCurve& c, const MordellPoint& P, const MordellPoint& Q);

/// [t]P via signed binary expansion; [0]P is infinity.
MordellPoint scalar_mul(const MordellCurve& c, const BigInt& t, const MordellPoint& P);

/// The 3-isogeny E^D -> E^{-27D},
///   (x, y) |-> ((x^3 + D)/x^2, y(x^3 - 2D)/x^3),
/// with kernel <(0, +-sqrt(D))>. Kernel points and infinity map to infinity.
MordellPoint phi(const Rational& D, const MordellPoint& Q);

/// The dual isogeny E^{-27D} -> E^D,
///   (x, y) |-> ((x^3 - 27D)/(9x^2), y(x^3 + 54D)/(27x^3)),
/// with kernel <(0, sqrt(-27D))>.
MordellPoint phi_hat(const Rational& D, const MordellPoint& P);

/// A rational Q on E^D with phi(Q) = P, if one exists; the x-coordinates of
/// candidates are the rational roots of X^3 - x0 X^2 + D. Doubles as the
/// membership test P in phi_D(E^D(Q)).
std::optional<MordellPoint> preimage_by_phi(const Rational& D, const MordellPoint& P);

/// A rational Q on E^{-27D} with phi_hat(Q) = P, via the rational roots of
/// X^3 - 9 x0 X^2 - 27D.
std::optional<MordellPoint> preimage_by_phi_hat(const Rational& D, const MordellPoint& P);

enum class TorsionClass { trivial, z2, z3, z6 };

struct TorsionInfo {
    TorsionClass cls = TorsionClass::trivial;
    int delta = 0;  // 1 iff the torsion is Z/3Z
};

/// Torsion of Y^2 = 4X^3 + k, classified through the sixth-power-free
/// reduction kappa of k/4: Z/6 iff kappa = 1, Z/3 iff kappa is a square != 1
/// or kappa = -432, Z/2 iff kappa is a cube != 1, trivial otherwise.
TorsionInfo torsion_class(const Rational& k);

/// All affine points with x = u/v^2, gcd(u,v) = 1, |u| <= bound, 1 <= v <= 8,
/// deduplicated up to sign (y >= 0), ascending by (x, y).
std::vector<MordellPoint> naive_search(const MordellCurve& c, const BigInt& bound);

}  // namespace cubigen
