#include "cubigen/forms.hpp"

#include <array>
#include <stdexcept>
#include <vector>

namespace cubigen {

Rational BinaryCubicForm::evaluate(const Rational& x, const Rational& y) const {
    return a * x * x * x + b * x * x * y + c * x * y * y + d * y * y * y;
}

Rational disc_form(const BinaryCubicForm& f) {
    return f.b * f.b * f.c * f.c + 18 * f.a * f.b * f.c * f.d - 4 * f.a * f.c * f.c * f.c -
           4 * f.d * f.b * f.b * f.b - 27 * f.a * f.a * f.d * f.d;
}

BinaryCubicForm act(const GL2Matrix& g, const BinaryCubicForm& f) {
    Rational det = g.det();
    if (det == 0) throw std::domain_error("act: singular matrix");
    // substitute (X, Y) -> (X, Y) * g = (p X + r Y, q X + s Y)
    const Rational &p = g.m11, &q = g.m12, &r = g.m21, &s = g.m22;
    Rational a2 = f.a * p * p * p + f.b * p * p * q + f.c * p * q * q + f.d * q * q * q;
    Rational b2 = 3 * f.a * p * p * r + f.b * (p * p * s + 2 * p * q * r) +
                  f.c * (2 * p * q * s + q * q * r) + 3 * f.d * q * q * s;
    Rational c2 = 3 * f.a * p * r * r + f.b * (2 * p * r * s + q * r * r) +
                  f.c * (p * s * s + 2 * q * r * s) + 3 * f.d * q * s * s;
    Rational d2 = f.a * r * r * r + f.b * r * r * s + f.c * r * s * s + f.d * s * s * s;
    return BinaryCubicForm{a2 / det, b2 / det, c2 / det, d2 / det};
}

std::pair<BinaryQuadraticForm, BinaryCubicForm> covariants(const BinaryCubicForm& f) {
    BinaryQuadraticForm h{3 * f.a * f.c - f.b * f.b, 9 * f.a * f.d - f.b * f.c,
                          3 * f.b * f.d - f.c * f.c};
    // g = f_x h_y - f_y h_x
    BinaryCubicForm g{3 * f.a * h.b - 2 * f.b * h.a,
                      6 * f.a * h.c + f.b * h.b - 4 * f.c * h.a,
                      4 * f.b * h.c - f.c * h.b - 6 * f.d * h.a,
                      2 * f.c * h.c - 3 * f.d * h.b};
    return {h, g};
}

namespace {

// coefficient vector over the monomials X^i Y^(deg-i), index i = 0..deg
using FormCoeffs = std::vector<Rational>;

FormCoeffs mul(const FormCoeffs& u, const FormCoeffs& v) {
    FormCoeffs w(u.size() + v.size() - 1, Rational(0));
    for (size_t i = 0; i < u.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) w[i + j] += u[i] * v[j];
    return w;
}

FormCoeffs coeffs(const BinaryCubicForm& f) { return {f.d, f.c, f.b, f.a}; }
FormCoeffs coeffs(const BinaryQuadraticForm& h) { return {h.c, h.b, h.a}; }

}  // namespace

bool syzygy_holds(const BinaryCubicForm& f) {
    auto [h, g] = covariants(f);
    Rational delta = disc_form(f);
    FormCoeffs lhs = mul(coeffs(g), coeffs(g));
    FormCoeffs f2 = mul(coeffs(f), coeffs(f));
    FormCoeffs h3 = mul(mul(coeffs(h), coeffs(h)), coeffs(h));
    for (size_t i = 0; i < lhs.size(); ++i) {
        Rational total = lhs[i] + 27 * delta * f2[i] + 4 * h3[i];
        if (total != 0) return false;
    }
    return true;
}

BinaryCubicForm index_form_from_ring(const CubicRingData& ring) {
    // associativity of the multiplication table pins l, m, n
    if (ring.m != -ring.a * ring.c || ring.n != -ring.a * ring.d || ring.l != -ring.b * ring.d)
        throw std::domain_error("index_form_from_ring: inconsistent structure constants");
    return BinaryCubicForm{ring.a, ring.b, ring.c, ring.d};
}

std::optional<std::pair<BigInt, BigInt>> represents_unit(const BinaryCubicForm& f,
                                                         const BigInt& bound) {
    if (bound < 1) throw std::domain_error("represents_unit: bound must be positive");
    std::array<BigInt, 4> fc;
    const Rational* parts[4] = {&f.a, &f.b, &f.c, &f.d};
    for (size_t i = 0; i < 4; ++i) {
        if (denominator(*parts[i]) != 1)
            throw std::domain_error("represents_unit: form must have integer coefficients");
        fc[i] = numerator(*parts[i]);
    }
    std::optional<std::pair<BigInt, BigInt>> best;
    auto consider = [&](const BigInt& x, const BigInt& y) {
        if (abs(x) > bound) return;
        std::pair<BigInt, BigInt> cand{x, y};
        if (!best || cand < *best) best = cand;
    };
    for (BigInt y = -bound; y <= bound; ++y) {
        for (int target : {1, -1}) {
            // f(x, y) = target as a cubic in x
            BigInt c3 = fc[0], c2 = fc[1] * y, c1 = fc[2] * y * y, c0 = fc[3] * y * y * y - target;
            if (c3 == 0 && c2 == 0 && c1 == 0 && c0 == 0) continue;
            for (const Rational& root : rational_roots_cubic(c3, c2, c1, c0)) {
                if (denominator(root) != 1) continue;
                consider(numerator(root), y);
            }
        }
    }
    return best;
}

bool verify_gamma_equivalence(const MordellPoint& P, const BigInt& n, const CubeFreeClass& m) {
    Rational D = Rational(-3) * n * n;
    MordellCurve target{-27 * D, CurveModel::four_x3};
    if (P.infinity || !on_curve(target, P))
        throw std::domain_error("verify_gamma_equivalence: point must be affine on E^{-27D}");
    if (P.x == 0)
        throw std::domain_error("verify_gamma_equivalence: kernel point has no such matrix");

    const Rational &x0 = P.x, &y0 = P.y;
    Rational ratio = (y0 - 9 * n) / (y0 + 9 * n);
    Rational u;
    if (!is_cube(ratio / m.m, &u))
        throw std::domain_error("verify_gamma_equivalence: m does not represent the point's class");

    BinaryCubicForm F{1, 0, 0, Rational(-m.m)};
    BinaryCubicForm G{1, 0, -x0 * x0 / 3, (27 * D - 2 * x0 * x0 * x0) / 27};

    Rational g11 = x0 * u / 3;
    Rational g12 = x0 * x0 / (9 * m.m * g11);
    Rational base = 2 * x0 * x0 * x0 - 27 * D;
    for (int sign : {1, -1}) {
        Rational g21 = (base + sign * 9 * y0 * n) * g11 / (6 * x0 * x0);
        Rational g22 = (base - sign * 9 * y0 * n) / (54 * m.m * g11);
        GL2Matrix gamma{g11, g12, g21, g22};
        if (gamma.det() == 0) continue;
        if (act(gamma, F) == G) return true;
    }
    return false;
}

}  // namespace cubigen
