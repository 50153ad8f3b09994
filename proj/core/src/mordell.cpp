#include "cubigen/mordell.hpp"

#include "cubigen/factor.hpp"

#include <algorithm>
#include <stdexcept>

namespace cubigen {

namespace {

// Both models reduce to y^2 = x^3 + k/4; the four_x3 model halves y.
Rational std_y(const MordellPoint& P) {
    return P.model == CurveModel::four_x3 ? P.y / 2 : P.y;
}

MordellPoint from_std(const Rational& x, const Rational& y, CurveModel model) {
    return MordellPoint::affine(x, model == CurveModel::four_x3 ? y * 2 : y, model);
}

void require_on_curve(const MordellCurve& c, const MordellPoint& P, const char* who) {
    if (!on_curve(c, P)) throw std::domain_error(std::string(who) + ": point not on curve");
}

}  // namespace

bool on_curve(const MordellCurve& c, const MordellPoint& P) {
    if (P.infinity) return true;
    if (P.model != c.model) throw std::domain_error("on_curve: point/curve model mismatch");
    if (c.model == CurveModel::four_x3) return P.y * P.y == 4 * P.x * P.x * P.x + c.k;
    return P.y * P.y == P.x * P.x * P.x + c.k / 4;
}

MordellPoint convert_model(const MordellPoint& P) {
    CurveModel target =
        P.model == CurveModel::four_x3 ? CurveModel::x3q : CurveModel::four_x3;
    if (P.infinity) return MordellPoint::at_infinity(target);
    if (P.model == CurveModel::four_x3) return MordellPoint::affine(P.x, P.y / 2, target);
    return MordellPoint::affine(P.x, P.y * 2, target);
}

MordellPoint negate(const MordellCurve& c, const MordellPoint& P) {
    require_on_curve(c, P, "negate");
    if (P.infinity) return P;
    return MordellPoint::affine(P.x, -P.y, P.model);
}

MordellPoint add(const MordellCurve& c, const MordellPoint& P, const MordellPoint& Q) {
    require_on_curve(c, P, "add");
    require_on_curve(c, Q, "add");
    if (P.infinity) return Q;
    if (Q.infinity) return P;

    Rational x1 = P.x, y1 = std_y(P);
    Rational x2 = Q.x, y2 = std_y(Q);

    Rational slope;
    if (x1 == x2) {
        if (y1 == -y2) return MordellPoint::at_infinity(c.model);
        slope = 3 * x1 * x1 / (2 * y1);
    } else {
        slope = (y2 - y1) / (x2 - x1);
    }
    Rational x3 = slope * slope - x1 - x2;
    Rational y3 = slope * (x1 - x3) - y1;
    return from_std(x3, y3, c.model);
}

MordellPoint scalar_mul(const MordellCurve& c, const BigInt& t, const MordellPoint& P) {
    require_on_curve(c, P, "scalar_mul");
    if (t == 0 || P.infinity) return MordellPoint::at_infinity(c.model);

    BigInt n = abs(t);
    // non-adjacent form, most significant digit first
    std::vector<int> digits;
    while (n > 0) {
        if ((n & 1) != 0) {
            int d = static_cast<int>(n % 4);
            if (d == 3) {
                digits.push_back(-1);
                n += 1;
            } else {
                digits.push_back(1);
                n -= 1;
            }
        } else {
            digits.push_back(0);
        }
        n >>= 1;
    }
    MordellPoint acc = MordellPoint::at_infinity(c.model);
    MordellPoint minus_p = negate(c, P);
    for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
        acc = add(c, acc, acc);
        if (*it == 1) acc = add(c, acc, P);
        if (*it == -1) acc = add(c, acc, minus_p);
    }
    if (t < 0) acc = negate(c, acc);
    return acc;
}

MordellPoint phi(const Rational& D, const MordellPoint& Q) {
    MordellCurve source{D, CurveModel::four_x3};
    require_on_curve(source, Q, "phi");
    if (Q.infinity || Q.x == 0) return MordellPoint::at_infinity(CurveModel::four_x3);
    Rational x3 = Q.x * Q.x * Q.x;
    MordellPoint image = MordellPoint::affine((x3 + D) / (Q.x * Q.x), Q.y * (x3 - 2 * D) / x3);
    MordellCurve target{-27 * D, CurveModel::four_x3};
    if (!on_curve(target, image)) throw std::logic_error("phi: image escaped the target curve");
    return image;
}

MordellPoint phi_hat(const Rational& D, const MordellPoint& P) {
    MordellCurve source{-27 * D, CurveModel::four_x3};
    require_on_curve(source, P, "phi_hat");
    if (P.infinity || P.x == 0) return MordellPoint::at_infinity(CurveModel::four_x3);
    Rational x3 = P.x * P.x * P.x;
    MordellPoint image =
        MordellPoint::affine((x3 - 27 * D) / (9 * P.x * P.x), P.y * (x3 + 54 * D) / (27 * x3));
    MordellCurve target{D, CurveModel::four_x3};
    if (!on_curve(target, image)) throw std::logic_error("phi_hat: image escaped the target curve");
    return image;
}

namespace {

// Rational roots of X^3 + s2 X^2 + s0 over rational coefficients: clear
// denominators and defer to the integer routine.
std::vector<Rational> depressed_cubic_roots(const Rational& s2, const Rational& s0) {
    BigInt den = lcm(denominator(s2), denominator(s0));
    BigInt c3 = den;
    BigInt c2 = numerator(s2) * (den / denominator(s2));
    BigInt c0 = numerator(s0) * (den / denominator(s0));
    return rational_roots_cubic(c3, c2, 0, c0);
}

}  // namespace

std::optional<MordellPoint> preimage_by_phi(const Rational& D, const MordellPoint& P) {
    MordellCurve target{-27 * D, CurveModel::four_x3};
    require_on_curve(target, P, "preimage_by_phi");
    if (P.infinity) return MordellPoint::at_infinity(CurveModel::four_x3);
    for (const Rational& alpha : depressed_cubic_roots(-P.x, D)) {
        if (alpha == 0) continue;
        Rational rhs = 4 * alpha * alpha * alpha + D, root;
        if (!is_square(rhs, &root)) continue;
        for (const Rational& y : {root, Rational(-root)}) {
            MordellPoint Q = MordellPoint::affine(alpha, y);
            if (phi(D, Q) == P) return Q;
            if (rhs == 0) break;
        }
    }
    return std::nullopt;
}

std::optional<MordellPoint> preimage_by_phi_hat(const Rational& D, const MordellPoint& P) {
    MordellCurve source{D, CurveModel::four_x3};
    require_on_curve(source, P, "preimage_by_phi_hat");
    if (P.infinity) return MordellPoint::at_infinity(CurveModel::four_x3);
    for (const Rational& alpha : depressed_cubic_roots(-9 * P.x, -27 * D)) {
        if (alpha == 0) continue;
        Rational rhs = 4 * alpha * alpha * alpha - 27 * D, root;
        if (!is_square(rhs, &root)) continue;
        for (const Rational& y : {root, Rational(-root)}) {
            MordellPoint Q = MordellPoint::affine(alpha, y);
            if (phi_hat(D, Q) == P) return Q;
            if (rhs == 0) break;
        }
    }
    return std::nullopt;
}

TorsionInfo torsion_class(const Rational& k) {
    if (k == 0) throw std::domain_error("torsion_class: k must be nonzero");
    // sixth-power-free representative of k/4 in Q*/(Q*)^6
    BigInt kappa = k < 0 ? -1 : 1;
    for (const auto& [p, e] : factor_signed(k / 4).factors) {
        long long r = ((e % 6) + 6) % 6;
        kappa *= pow_bigint(p, static_cast<unsigned>(r));
    }
    TorsionInfo info;
    if (kappa == 1) {
        info.cls = TorsionClass::z6;
    } else if (is_perfect_square(kappa) || kappa == -432) {
        info.cls = TorsionClass::z3;
    } else if (is_perfect_cube(kappa)) {
        info.cls = TorsionClass::z2;
    } else {
        info.cls = TorsionClass::trivial;
    }
    info.delta = info.cls == TorsionClass::z3 ? 1 : 0;
    return info;
}

std::vector<MordellPoint> naive_search(const MordellCurve& c, const BigInt& bound) {
    if (bound < 1) throw std::domain_error("naive_search: bound must be positive");
    std::vector<MordellPoint> found;
    for (BigInt v = 1; v <= 8; ++v) {
        for (BigInt u = -bound; u <= bound; ++u) {
            if (gcd(abs(u), v) != 1) continue;
            Rational x(u, v * v);
            Rational rhs = c.model == CurveModel::four_x3 ? Rational(4 * x * x * x + c.k)
                                                          : Rational(x * x * x + c.k / 4);
            Rational y;
            if (rhs < 0 || !is_square(rhs, &y)) continue;
            found.push_back(MordellPoint::affine(x, y, c.model));
        }
    }
    std::sort(found.begin(), found.end(), [](const MordellPoint& a, const MordellPoint& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    });
    return found;
}

}  // namespace cubigen
