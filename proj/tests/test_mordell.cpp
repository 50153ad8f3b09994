#include "cubigen/mordell.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cubigen;
using namespace cubigen::testing;

namespace {

const MordellCurve e8100{8100, CurveModel::four_x3};
const MordellCurve e81{81, CurveModel::four_x3};

}  // namespace

TEST_CASE("on_curve checks the model equation exactly") {
    CHECK(on_curve(e8100, MordellPoint::affine(-9, 72)));
    CHECK(on_curve(e8100, MordellPoint::at_infinity()));
    CHECK_FALSE(on_curve(e8100, MordellPoint::affine(-9, 71)));
    CHECK_THROWS_AS(on_curve(e8100, MordellPoint::affine(-9, 72, CurveModel::x3q)),
                    std::domain_error);
}

TEST_CASE("model conversion is the documented involution") {
    MordellCurve big{656100, CurveModel::x3q};
    MordellPoint p = MordellPoint::affine(-54, 81, CurveModel::x3q);
    CHECK(on_curve(big, p));
    MordellPoint q = convert_model(p);
    CHECK(q == MordellPoint::affine(-54, 162, CurveModel::four_x3));
    CHECK(on_curve(MordellCurve{656100, CurveModel::four_x3}, q));
    CHECK(convert_model(q) == p);

    CHECK(convert_model(MordellPoint::affine(-45, 270, CurveModel::x3q)) ==
          MordellPoint::affine(-45, 540, CurveModel::four_x3));
    CHECK(convert_model(MordellPoint::at_infinity()).infinity);
}

TEST_CASE("group law identities") {
    MordellPoint p = MordellPoint::affine(-9, 72);
    CHECK(add(e8100, p, MordellPoint::at_infinity()) == p);
    CHECK(add(e8100, p, negate(e8100, p)).infinity);
    CHECK_THROWS_AS(add(e8100, p, MordellPoint::affine(1, 1)), std::domain_error);
}

TEST_CASE("doubling matches the division polynomial oracle") {
    MordellPoint p = MordellPoint::affine(-2, 7);
    MordellPoint twice = add(e81, p, p);
    REQUIRE_FALSE(twice.infinity);
    CHECK(twice.x == doubling_x_oracle(p.x, e81.k));
    CHECK(twice == MordellPoint::affine(Rational(340, 49), Rational(-12913, 343)));
    CHECK(on_curve(e81, twice));

    std::mt19937_64 rng(20240921);
    for (const MordellPoint& q : naive_search(e8100, 30)) {
        if (q.y == 0) continue;
        CHECK(add(e8100, q, q).x == doubling_x_oracle(q.x, e8100.k));
    }
}

TEST_CASE("scalar multiplication basics") {
    MordellPoint p = MordellPoint::affine(-9, 72);
    CHECK(scalar_mul(e8100, 1, p) == p);
    CHECK(scalar_mul(e8100, 0, p).infinity);
    // (0, sqrt(k)) is 3-torsion
    CHECK(scalar_mul(e8100, 3, MordellPoint::affine(0, 90)).infinity);
    CHECK(scalar_mul(e8100, -2, p) == negate(e8100, scalar_mul(e8100, 2, p)));
    // consistency with repeated addition
    MordellPoint sum = MordellPoint::at_infinity();
    for (int i = 0; i < 7; ++i) sum = add(e8100, sum, p);
    CHECK(scalar_mul(e8100, 7, p) == sum);
}

TEST_CASE("group law is commutative and associative on searched points") {
    auto points = naive_search(e8100, 30);
    REQUIRE(points.size() >= 3);
    std::mt19937_64 rng(20240922);
    std::uniform_int_distribution<size_t> pick(0, points.size() - 1);
    std::uniform_int_distribution<int> sign(0, 1);
    int checked = 0;
    while (checked < 120) {
        MordellPoint a = points[pick(rng)];
        MordellPoint b = points[pick(rng)];
        MordellPoint c = points[pick(rng)];
        if (sign(rng)) a = negate(e8100, a);
        if (sign(rng)) b = negate(e8100, b);
        CHECK(add(e8100, a, b) == add(e8100, b, a));
        CHECK(add(e8100, add(e8100, a, b), c) == add(e8100, a, add(e8100, b, c)));
        ++checked;
    }
}

TEST_CASE("phi on the documented inputs") {
    CHECK(phi(-3, MordellPoint::affine(1, 1)) == MordellPoint::affine(-2, 7));
    CHECK(phi(9, MordellPoint::affine(0, 3)).infinity);
    CHECK(phi(9, MordellPoint::at_infinity()).infinity);
    CHECK_THROWS_AS(phi(-3, MordellPoint::affine(2, 2)), std::domain_error);
}

TEST_CASE("phi_hat on the documented inputs") {
    CHECK(phi_hat(-3, MordellPoint::affine(-2, 7)) ==
          MordellPoint::affine(Rational(73, 36), Rational(595, 108)));
    // (0, 9n) spans the kernel for D = -3n^2
    CHECK(phi_hat(-3, MordellPoint::affine(0, 9)).infinity);
    CHECK(phi_hat(-300, MordellPoint::affine(0, 90)).infinity);
}

TEST_CASE("isogeny composition is multiplication by 3") {
    for (int n = 1; n <= 12; ++n) {  // covers all D = -3n^2 with |D| <= 500
        Rational D = Rational(-3) * n * n;
        MordellCurve down{D, CurveModel::four_x3};
        MordellCurve up{-27 * D, CurveModel::four_x3};
        for (const MordellPoint& q : naive_search(down, 20))
            CHECK(phi_hat(D, phi(D, q)) == scalar_mul(down, 3, q));
        for (const MordellPoint& p : naive_search(up, 20)) {
            CHECK(phi(D, phi_hat(D, p)) == scalar_mul(up, 3, p));
            CHECK(on_curve(down, phi_hat(D, p)) );
        }
    }
}

TEST_CASE("only kernel points map to infinity") {
    // D = 9 is a square: kernel of phi is {inf, (0, +-3)}
    MordellCurve e9{9, CurveModel::four_x3};
    for (const MordellPoint& q : naive_search(e9, 25)) {
        CHECK(phi(9, q).infinity == (q.x == 0));
        MordellPoint neg = negate(e9, q);
        CHECK(phi(9, neg).infinity == (neg.x == 0));
    }
    // dual kernel on E^{-27D}: (0, +-sqrt(-27D))
    for (const MordellPoint& p : naive_search(e8100, 25))
        CHECK(phi_hat(-300, p).infinity == (p.x == 0));
}

TEST_CASE("preimage_by_phi on the documented inputs") {
    auto q = preimage_by_phi(-3, MordellPoint::affine(-2, 7));
    REQUIRE(q.has_value());
    CHECK(*q == MordellPoint::affine(1, 1));

    CHECK_FALSE(preimage_by_phi(-300, MordellPoint::affine(-9, 72)).has_value());
    CHECK(preimage_by_phi(-300, MordellPoint::at_infinity())->infinity);
    // verified round trip on every found preimage
    for (const MordellPoint& p : naive_search(e8100, 20)) {
        auto pre = preimage_by_phi(-300, p);
        if (pre && !pre->infinity) CHECK(phi(-300, *pre) == p);
    }
}

TEST_CASE("preimage_by_phi_hat on the documented inputs") {
    auto p = preimage_by_phi_hat(-3, MordellPoint::affine(Rational(73, 36), Rational(595, 108)));
    REQUIRE(p.has_value());
    CHECK(*p == MordellPoint::affine(-2, 7));

    CHECK(preimage_by_phi_hat(-3, MordellPoint::at_infinity())->infinity);

    // the documented lift for n = 10
    auto lifted = preimage_by_phi_hat(-300, MordellPoint::affine(Rational(91, 9), Rational(1672, 27)));
    REQUIRE(lifted.has_value());
    CHECK(lifted->x == -9);

    // a point whose candidate cubic is irreducible has no rational preimage
    CHECK_FALSE(preimage_by_phi_hat(-3, MordellPoint::affine(1, 1)).has_value());
}

TEST_CASE("torsion classification") {
    TorsionInfo t = torsion_class(8100);  // kappa = 2025 = 45^2
    CHECK(t.cls == TorsionClass::z3);
    CHECK(t.delta == 1);

    // D = -27n^2 with squarefree n >= 3 has trivial torsion; n = 1 gives
    // kappa = -432 (Z/3) and n = 2 gives kappa = -27 (Z/2)
    for (int n : {3, 5, 6, 7, 10, 11, 13, 14, 15}) {
        TorsionInfo info = torsion_class(Rational(-27) * n * n);
        CHECK(info.cls == TorsionClass::trivial);
        CHECK(info.delta == 0);
    }
    CHECK(torsion_class(Rational(-27)).cls == TorsionClass::z3);
    CHECK(torsion_class(Rational(-108)).cls == TorsionClass::z2);
    CHECK(torsion_class(Rational(-108)).delta == 0);

    CHECK(torsion_class(32).cls == TorsionClass::z2);   // kappa = 8
    CHECK(torsion_class(4).cls == TorsionClass::z6);    // kappa = 1
    CHECK(torsion_class(-1728).cls == TorsionClass::z3);  // kappa = -432
    CHECK_THROWS_AS(torsion_class(0), std::domain_error);
}

TEST_CASE("naive_search on the documented curves") {
    auto big = naive_search(e8100, 10);
    auto contains = [](const std::vector<MordellPoint>& pts, const MordellPoint& p) {
        for (const auto& q : pts)
            if (q == p) return true;
        return false;
    };
    CHECK(contains(big, MordellPoint::affine(0, 90)));
    CHECK(contains(big, MordellPoint::affine(-9, 72)));

    CHECK(contains(naive_search(e81, 3), MordellPoint::affine(-2, 7)));
    CHECK(naive_search(MordellCurve{7, CurveModel::four_x3}, 1).empty());

    // ordering is deterministic and ascending
    for (size_t i = 1; i < big.size(); ++i) {
        CHECK((big[i - 1].x < big[i].x ||
               (big[i - 1].x == big[i].x && big[i - 1].y < big[i].y)));
    }
    // every reported point is on the curve with y >= 0
    for (const auto& p : big) {
        CHECK(on_curve(e8100, p));
        CHECK(p.y >= 0);
    }
}

TEST_CASE("model conversion commutes with the group law") {
    MordellCurve half{8100, CurveModel::x3q};
    auto points = naive_search(e8100, 20);
    for (size_t i = 0; i + 1 < points.size(); ++i) {
        MordellPoint sum = add(e8100, points[i], points[i + 1]);
        MordellPoint half_sum = add(half, convert_model(points[i]), convert_model(points[i + 1]));
        CHECK(convert_model(sum) == half_sum);
    }
}
