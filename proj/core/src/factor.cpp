#include "cubigen/factor.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>

namespace cubigen {

namespace {

constexpr uint64_t kTrialLimit = 1000000;
constexpr uint64_t kU64Max = std::numeric_limits<uint64_t>::max();

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

uint64_t powmod_u64(uint64_t base, uint64_t exp, uint64_t m) {
    uint64_t result = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1u) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1u;
    }
    return result;
}

constexpr uint64_t kWitnesses[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t p : kWitnesses)
        if (n % p == 0) return n == p;
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1u) == 0) {
        d >>= 1u;
        ++s;
    }
    for (uint64_t a : kWitnesses) {
        uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

uint64_t gcd_u64(uint64_t a, uint64_t b) {
    while (b) {
        a %= b;
        std::swap(a, b);
    }
    return a;
}

// Brent's cycle variant of Pollard rho; returns n on failure for this c.
uint64_t brent_u64(uint64_t n, uint64_t x0, uint64_t c) {
    auto f = [&](uint64_t v) { return (mulmod_u64(v, v, n) + c) % n; };
    uint64_t x = x0, g = 1, q = 1, xs = 0, y = 0;
    const int m = 128;
    int l = 1;
    while (g == 1) {
        y = x;
        for (int i = 1; i < l; ++i) x = f(x);
        int k = 0;
        while (k < l && g == 1) {
            xs = x;
            for (int i = 0; i < m && i < l - k; ++i) {
                x = f(x);
                q = mulmod_u64(q, x > y ? x - y : y - x, n);
            }
            g = gcd_u64(q, n);
            k += m;
        }
        l *= 2;
    }
    if (g == n) {
        do {
            xs = f(xs);
            g = gcd_u64(xs > y ? xs - y : y - xs, n);
        } while (g == 1);
    }
    return g;
}

uint64_t split_u64(uint64_t n) {
    for (uint64_t c = 1;; ++c) {
        uint64_t g = brent_u64(n, 2, c);
        if (g != n) return g;
    }
}

// n odd, free of factors <= kTrialLimit
void factor_rough_u64(uint64_t n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[BigInt(n)];
        return;
    }
    uint64_t d = split_u64(n);
    factor_rough_u64(d, out);
    factor_rough_u64(n / d, out);
}

void factor_u64_full(uint64_t n, std::map<BigInt, unsigned>& out) {
    for (uint64_t p : {2ull, 3ull, 5ull}) {
        while (n % p == 0) {
            ++out[BigInt(p)];
            n /= p;
        }
    }
    for (uint64_t p = 7; p <= kTrialLimit && p * p <= n; p += 6) {
        for (uint64_t q : {p, p + 4}) {
            while (n % q == 0) {
                ++out[BigInt(q)];
                n /= q;
            }
        }
    }
    if (n == 1) return;
    if (n <= kTrialLimit * kTrialLimit || is_prime_u64(n)) {
        // no factor <= 1e6 left, so a cofactor below 1e12 is prime
        ++out[BigInt(n)];
        return;
    }
    factor_rough_u64(n, out);
}

bool miller_rabin_bigint(const BigInt& n) {
    BigInt d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : kWitnesses) {
        BigInt x = boost::multiprecision::powm(BigInt(a), d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = x * x % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

bool is_prime_bigint(const BigInt& n) {
    for (uint64_t p : kWitnesses)
        if (n % p == 0) return n == p;
    return miller_rabin_bigint(n);
}

BigInt brent_bigint(const BigInt& n, const BigInt& x0, const BigInt& c) {
    auto f = [&](const BigInt& v) { return (v * v + c) % n; };
    BigInt x = x0, g = 1, q = 1, xs = 0, y = 0;
    const int m = 128;
    long l = 1;
    while (g == 1) {
        y = x;
        for (long i = 1; i < l; ++i) x = f(x);
        long k = 0;
        while (k < l && g == 1) {
            xs = x;
            for (long i = 0; i < m && i < l - k; ++i) {
                x = f(x);
                q = q * abs(x - y) % n;
            }
            g = gcd(q, n);
            k += m;
        }
        l *= 2;
    }
    if (g == n) {
        do {
            xs = f(xs);
            g = gcd(abs(xs - y), n);
        } while (g == 1);
    }
    return g;
}

BigInt split_bigint(const BigInt& n) {
    for (BigInt c = 1;; ++c) {
        BigInt g = brent_bigint(n, 2, c);
        if (g != n) return g;
    }
}

// n free of factors <= kTrialLimit
void factor_rough_bigint(const BigInt& n, std::map<BigInt, unsigned>& out) {
    if (n == 1) return;
    if (n <= kU64Max) {
        factor_rough_u64(static_cast<uint64_t>(n), out);
        return;
    }
    if (is_prime_bigint(n)) {
        ++out[n];
        return;
    }
    BigInt d = split_bigint(n);
    factor_rough_bigint(d, out);
    factor_rough_bigint(n / d, out);
}

}  // namespace

bool is_prime(const BigInt& n) {
    if (n < 2) return false;
    if (n <= kU64Max) return is_prime_u64(static_cast<uint64_t>(n));
    return is_prime_bigint(n);
}

std::vector<std::pair<BigInt, unsigned>> factor_positive(BigInt n) {
    if (n < 1) throw std::domain_error("factor_positive: input must be >= 1");
    std::map<BigInt, unsigned> acc;
    if (n <= kU64Max) {
        factor_u64_full(static_cast<uint64_t>(n), acc);
        return {acc.begin(), acc.end()};
    }
    for (uint64_t p : {2ull, 3ull, 5ull}) {
        while (n % p == 0) {
            ++acc[BigInt(p)];
            n /= p;
        }
    }
    for (uint64_t p = 7; p <= kTrialLimit; p += 6) {
        if (n <= kU64Max) break;
        for (uint64_t q : {p, p + 4}) {
            while (n % q == 0) {
                ++acc[BigInt(q)];
                n /= q;
            }
        }
    }
    if (n <= kU64Max) {
        factor_u64_full(static_cast<uint64_t>(n), acc);
        return {acc.begin(), acc.end()};
    }
    factor_rough_bigint(n, acc);
    return {acc.begin(), acc.end()};
}

Rational SignedFactorization::reconstruct() const {
    Rational value(sign);
    for (const auto& [p, e] : factors) {
        if (e > 0)
            value *= Rational(pow_bigint(p, static_cast<unsigned>(e)));
        else
            value /= Rational(pow_bigint(p, static_cast<unsigned>(-e)));
    }
    return value;
}

SignedFactorization factor_signed(const Rational& q) {
    if (q == 0) throw std::domain_error("factor_signed: zero input");
    SignedFactorization out;
    out.sign = q < 0 ? -1 : 1;
    std::map<BigInt, long long> merged;
    for (const auto& [p, e] : factor_positive(abs(numerator(q)))) merged[p] += e;
    for (const auto& [p, e] : factor_positive(denominator(q))) merged[p] -= e;
    for (const auto& [p, e] : merged)
        if (e != 0) out.factors.emplace_back(p, e);
    return out;
}

CubeFreeClass cube_free_class(const Rational& q) {
    if (q == 0) throw std::domain_error("cube_free_class: zero input");
    CubeFreeClass cls{1, 1, 1};
    for (const auto& [p, e] : factor_signed(q).factors) {
        long long r = ((e % 3) + 3) % 3;
        if (r == 1)
            cls.h *= p;
        else if (r == 2)
            cls.k *= p;
    }
    cls.m = cls.h * cls.k * cls.k;
    return cls;
}

long long valuation(const Rational& q, const BigInt& p) {
    if (q == 0) throw std::domain_error("valuation: zero input");
    if (!is_prime(p)) throw std::domain_error("valuation: modulus is not prime");
    long long v = 0;
    // q is stored reduced, so p divides at most one of numerator/denominator
    BigInt n = abs(numerator(q));
    while (n % p == 0) {
        n /= p;
        ++v;
    }
    if (v > 0) return v;
    BigInt d = denominator(q);
    while (d % p == 0) {
        d /= p;
        --v;
    }
    return v;
}

ResidueMod9 residue_mod9(const BigInt& m) {
    if (m % 3 == 0) throw std::domain_error("residue_mod9: input divisible by 3");
    BigInt r = m % 9;
    if (r < 0) r += 9;
    if (r == 1) return ResidueMod9::plus_one;
    if (r == 8) return ResidueMod9::minus_one;
    return ResidueMod9::other;
}

}  // namespace cubigen
