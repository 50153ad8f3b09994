#pragma once

#include "cubigen/numeric.hpp"

#include <utility>
#include <vector>

namespace cubigen {

/// Miller-Rabin with the first thirteen prime witnesses: deterministic below
/// 3.3e24, a strong probable-prime test beyond.
bool is_prime(const BigInt& n);

/// Prime factorization of n >= 1 as ascending (prime, exponent) pairs; empty
/// for n = 1. Trial division to 1e6, then Brent-cycle Pollard rho with a
/// fixed polynomial ladder, so the output is deterministic.
std::vector<std::pair<BigInt, unsigned>> factor_positive(BigInt n);

/// A nonzero rational written as sign * prod p^e with integer exponents;
/// negative exponents carry the denominator.
struct SignedFactorization {
    int sign = 1;
    std::vector<std::pair<BigInt, long long>> factors;  // primes ascending, exponents nonzero

    Rational reconstruct() const;
};

/// The canonical cube-free representative m = h*k^2 of a class in Q*/(Q*)^3.
/// h and k are coprime and squarefree; the sign is dropped (-1 is a cube).
struct CubeFreeClass {
    BigInt m;
    BigInt h;
    BigInt k;
};

SignedFactorization factor_signed(const Rational& q);

CubeFreeClass cube_free_class(const Rational& q);

/// Exact p-adic valuation of q != 0; p must be prime.
long long valuation(const Rational& q, const BigInt& p);

enum class ResidueMod9 { plus_one, minus_one, other };

/// Classifies m mod 9 for m coprime to 3; throws std::domain_error when 3 | m.
ResidueMod9 residue_mod9(const BigInt& m);

}  // namespace cubigen
