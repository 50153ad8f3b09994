#include "cubigen/factor.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <map>

using namespace cubigen;

namespace {

// trial-division oracle, independent of the library path
std::map<long long, int> trial_factor(long long n) {
    std::map<long long, int> out;
    for (long long p = 2; p * p <= n; ++p) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n > 1) ++out[n];
    return out;
}

bool squarefree_oracle(const BigInt& n) {
    if (n < 1) return false;
    BigInt m = n;
    for (BigInt p = 2; p * p <= m; ++p) {
        int e = 0;
        while (m % p == 0) {
            m /= p;
            ++e;
        }
        if (e > 1) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("factor_signed on the documented inputs") {
    SignedFactorization f = factor_signed(Rational(-648, 972));
    CHECK(f.sign == -1);
    REQUIRE(f.factors.size() == 2);
    CHECK(f.factors[0] == std::pair<BigInt, long long>{2, 1});
    CHECK(f.factors[1] == std::pair<BigInt, long long>{3, -1});

    SignedFactorization unit = factor_signed(Rational(1));
    CHECK(unit.sign == 1);
    CHECK(unit.factors.empty());

    BigInt primorial("200560490130");
    SignedFactorization prim = factor_signed(Rational(primorial));
    auto oracle = trial_factor(200560490130LL);
    REQUIRE(prim.factors.size() == oracle.size());
    for (const auto& [p, e] : prim.factors) {
        CHECK(e == 1);
        CHECK(oracle.at(static_cast<long long>(p)) == 1);
    }
    CHECK(prim.reconstruct() == Rational(primorial));

    CHECK_THROWS_AS(factor_signed(Rational(0)), std::domain_error);
}

TEST_CASE("factor_signed round trip on random rationals") {
    std::mt19937_64 rng(20240901);
    for (int i = 0; i < 200; ++i) {
        Rational q = testing::random_nonzero_rational(rng, 1000000000LL);
        CHECK(factor_signed(q).reconstruct() == q);
    }
}

TEST_CASE("cube_free_class on the documented inputs") {
    CubeFreeClass a = cube_free_class(Rational(-1, 9));
    CHECK(a.m == 3);
    CHECK(a.h == 3);
    CHECK(a.k == 1);

    CubeFreeClass b = cube_free_class(Rational(-2, 3));
    CHECK(b.m == 18);
    CHECK(b.h == 2);
    CHECK(b.k == 3);

    CHECK(cube_free_class(Rational(8)).m == 1);
}

TEST_CASE("cube_free_class invariants on random rationals") {
    std::mt19937_64 rng(20240902);
    for (int i = 0; i < 200; ++i) {
        Rational q = testing::random_nonzero_rational(rng, 100000);
        CubeFreeClass cls = cube_free_class(q);
        CHECK(cls.m > 0);
        CHECK(cls.h * cls.k * cls.k == cls.m);
        CHECK(gcd(cls.h, cls.k) == 1);
        CHECK(squarefree_oracle(cls.h));
        CHECK(squarefree_oracle(cls.k));
        // the quotient must be an exact rational cube
        CHECK(is_cube(q / cls.m));
        // idempotence
        CHECK(cube_free_class(Rational(cls.m)).m == cls.m);
    }
}

TEST_CASE("valuation on the documented inputs") {
    CHECK(valuation(Rational(-648, 972), 2) == 1);
    CHECK(valuation(Rational(1), 7) == 0);
    CHECK(valuation(Rational(27, 4), 3) == 3);
    CHECK(valuation(Rational(27, 4), 2) == -2);
    CHECK_THROWS_AS(valuation(Rational(5), BigInt(6)), std::domain_error);
    CHECK_THROWS_AS(valuation(Rational(0), BigInt(2)), std::domain_error);
}

TEST_CASE("valuation agrees with the signed factorization") {
    std::mt19937_64 rng(20240903);
    for (int i = 0; i < 100; ++i) {
        Rational q = testing::random_nonzero_rational(rng, 100000);
        for (const auto& [p, e] : factor_signed(q).factors) CHECK(valuation(q, p) == e);
    }
}

TEST_CASE("residue_mod9 classification") {
    CHECK(residue_mod9(10) == ResidueMod9::plus_one);
    CHECK(residue_mod9(17) == ResidueMod9::minus_one);
    CHECK(residue_mod9(5) == ResidueMod9::other);
    CHECK(residue_mod9(-1) == ResidueMod9::minus_one);
    CHECK(residue_mod9(-10) == ResidueMod9::minus_one);
    CHECK_THROWS_AS(residue_mod9(30), std::domain_error);
}

TEST_CASE("primality spot checks") {
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK(is_prime(1000000007));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(-7));
    CHECK_FALSE(is_prime(561));  // Carmichael
    // 2^89 - 1 is a Mersenne prime; exercises the bigint path
    CHECK(is_prime(BigInt("618970019642690137449562111")));
    CHECK_FALSE(is_prime(BigInt("618970019642690137449562111") * 3));
}

TEST_CASE("factorization of a semiprime beyond the trial ladder") {
    BigInt p("10000000019"), q("10000000033");
    auto factors = factor_positive(p * q);
    REQUIRE(factors.size() == 2);
    CHECK(factors[0] == std::pair<BigInt, unsigned>{p, 1});
    CHECK(factors[1] == std::pair<BigInt, unsigned>{q, 1});
}
