#include "cubigen/fieldkit.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace cubigen;
using namespace cubigen::testing;

namespace {

bool is_cube_free(const BigInt& m) {
    BigInt n = m;
    for (BigInt p = 2; p * p * p <= n; ++p) {
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e >= 3) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("integral bases of the documented fields") {
    IntegralBasis two = integral_basis(2);
    CHECK(two.type == DedekindType::I);
    CHECK(two.disc == -108);
    CHECK(two.elements[2] == std::array<Rational, 3>{0, 0, 1});
    CHECK(two.denominator == 1);

    IntegralBasis ten = integral_basis(10);
    CHECK(ten.type == DedekindType::II);
    CHECK(ten.disc == -300);
    CHECK(ten.denominator == 3);
    CHECK(ten.elements[2] == std::array<Rational, 3>{Rational(1, 3), Rational(1, 3), Rational(1, 3)});

    IntegralBasis thirty = integral_basis(30);
    CHECK(thirty.type == DedekindType::I);
    CHECK(thirty.disc == -24300);
    CHECK(thirty.elements[2] == std::array<Rational, 3>{0, 0, 1});

    CHECK_THROWS_AS(integral_basis(1), std::domain_error);
    CHECK_THROWS_AS(integral_basis(24), std::domain_error);  // 24 = 2^3 * 3
}

TEST_CASE("integral basis discriminants for all cube-free m up to 1000") {
    int built = 0;
    for (BigInt m = 2; m <= 1000; ++m) {
        if (!is_cube_free(m)) continue;
        IntegralBasis basis = integral_basis(m);
        BigInt hk = basis.h * basis.k;
        BigInt expected = (basis.type == DedekindType::II ? -3 : -27) * hk * hk;
        CHECK(basis.disc == expected);
        CHECK(basis.disc == classify_field(m).disc);
        ++built;
    }
    CHECK(built >= 800);
}

TEST_CASE("index forms of the documented fields") {
    CHECK(index_form_of_field(30) == BinaryCubicForm{1, 0, 0, -30});
    CHECK(index_form_of_field(60) == BinaryCubicForm{2, 0, 0, -15});
    CHECK(index_form_of_field(90) == BinaryCubicForm{3, 0, 0, -10});

    BinaryCubicForm ten = index_form_of_field(10);
    CHECK(disc_form(ten) == -300);
    CHECK(ten == BinaryCubicForm{3, 3, 1, -1});
}

TEST_CASE("index form discriminants equal the field discriminants") {
    for (BigInt m = 2; m <= 300; ++m) {
        if (!is_cube_free(m)) continue;
        BinaryCubicForm form = index_form_of_field(m);
        CHECK(disc_form(form) == Rational(classify_field(m).disc));
        // the dehomogenization stays irreducible
        CHECK(rational_roots_cubic(numerator(form.a), numerator(form.b), numerator(form.c),
                                   numerator(form.d))
                  .empty());
    }
}

TEST_CASE("certify_monogenic on the documented fields") {
    MonogenityCertificate ninety = certify_monogenic(90, 3);
    REQUIRE(ninety.monogenic);
    CHECK(*ninety.witness == brute_force_unit(BinaryCubicForm{3, 0, 0, -10}, 3).value());
    CHECK(*ninety.witness == std::pair<BigInt, BigInt>{-3, -2});
    CHECK(*ninety.unit_value == -1);
    // the documented witness is also a valid representation
    CHECK(BinaryCubicForm{3, 0, 0, -10}.evaluate(-3, -2) == -1);

    MonogenityCertificate one_fifty = certify_monogenic(150, 2);
    REQUIRE(one_fifty.monogenic);
    CHECK(*one_fifty.witness == brute_force_unit(BinaryCubicForm{5, 0, 0, -6}, 2).value());
    CHECK(BinaryCubicForm{5, 0, 0, -6}.evaluate(1, 1) == -1);

    // squarefree type I: the index form X^3 - 7Y^3 represents 1 immediately
    MonogenityCertificate seven = certify_monogenic(7, 2);
    REQUIRE(seven.monogenic);
    CHECK(*seven.witness == brute_force_unit(BinaryCubicForm{1, 0, 0, -7}, 2).value());

    // type II path through the nu-basis multiplication table
    MonogenityCertificate seventeen = certify_monogenic(17, 3);
    BinaryCubicForm form17 = index_form_of_field(17);
    CHECK(disc_form(form17) == -867);
    auto oracle17 = brute_force_unit(form17, 3);
    CHECK(seventeen.monogenic == oracle17.has_value());
    if (oracle17) CHECK(*seventeen.witness == *oracle17);
}

TEST_CASE("all four fields of the n'=30 example certify with bound 5") {
    for (int m : {30, 60, 90, 150}) {
        MonogenityCertificate cert = certify_monogenic(m, 5);
        CHECK(cert.monogenic);
    }
}

TEST_CASE("splitting consistency") {
    // X^3 + 9X^2 - 300 defines the same field as X^3 - 3
    CHECK(splitting_consistent(MonicCubic{9, 0, -300}, MonicCubic{0, 0, -3}, 1000));
    // cbrt(2) and cbrt(3) separate below 100
    CHECK_FALSE(splitting_consistent(MonicCubic{0, 0, -2}, MonicCubic{0, 0, -3}, 100));
    CHECK(splitting_consistent(MonicCubic{0, 0, -2}, MonicCubic{0, 0, -2}, 200));

    CHECK_THROWS_AS(splitting_consistent(MonicCubic{0, 0, -1}, MonicCubic{0, 0, -2}, 100),
                    std::domain_error);  // X^3 - 1 is reducible
    CHECK_THROWS_AS(splitting_consistent(MonicCubic{0, 0, 0}, MonicCubic{0, 0, -2}, 100),
                    std::domain_error);

    // symmetry on a few irreducible pairs
    MonicCubic cubics[] = {{0, 0, -2}, {0, 0, -3}, {0, -2, -2}, {1, 1, -1}, {9, 0, -300}};
    for (const auto& f : cubics)
        for (const auto& g : cubics)
            CHECK(splitting_consistent(f, g, 200) == splitting_consistent(g, f, 200));
}
