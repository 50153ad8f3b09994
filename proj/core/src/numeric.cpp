#include "cubigen/numeric.hpp"

#include "cubigen/factor.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace cubigen {

BigInt isqrt_floor(const BigInt& n) {
    if (n < 0) throw std::domain_error("isqrt_floor: negative input");
    return boost::multiprecision::sqrt(n);
}

bool is_perfect_square(const BigInt& n, BigInt* root) {
    if (n < 0) return false;
    BigInt r = boost::multiprecision::sqrt(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

BigInt icbrt_floor(const BigInt& n) {
    if (n < 0) {
        // floor for negatives: -ceil(cbrt(-n))
        BigInt m = -n;
        BigInt r = icbrt_floor(m);
        if (r * r * r == m) return -r;
        return -(r + 1);
    }
    if (n == 0) return 0;
    BigInt lo = 0, hi = BigInt(1) << (static_cast<unsigned>(boost::multiprecision::msb(n)) / 3 + 2);
    while (lo < hi) {
        BigInt mid = (lo + hi + 1) >> 1;
        if (mid * mid * mid <= n)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

bool is_perfect_cube(const BigInt& n, BigInt* root) {
    BigInt r = icbrt_floor(n);
    if (r * r * r != n) return false;
    if (root) *root = r;
    return true;
}

bool is_square(const Rational& q, Rational* root) {
    if (q < 0) return false;
    BigInt rn, rd;
    if (!is_perfect_square(numerator(q), &rn)) return false;
    if (!is_perfect_square(denominator(q), &rd)) return false;
    if (root) *root = Rational(rn, rd);
    return true;
}

bool is_cube(const Rational& q, Rational* root) {
    BigInt rn, rd;
    if (!is_perfect_cube(numerator(q), &rn)) return false;
    if (!is_perfect_cube(denominator(q), &rd)) return false;
    if (root) *root = Rational(rn, rd);
    return true;
}

BigInt pow_bigint(const BigInt& base, unsigned exp) {
    BigInt result = 1, b = base;
    while (exp) {
        if (exp & 1u) result *= b;
        exp >>= 1u;
        if (exp) b *= b;
    }
    return result;
}

Rational pow_rational(const Rational& base, long exp) {
    if (exp < 0) {
        if (base == 0) throw std::domain_error("pow_rational: zero base with negative exponent");
        return 1 / pow_rational(base, -exp);
    }
    Rational result = 1, b = base;
    while (exp) {
        if (exp & 1L) result *= b;
        exp >>= 1L;
        if (exp) b *= b;
    }
    return result;
}

namespace {

std::vector<BigInt> divisors_of(const BigInt& n) {
    std::vector<BigInt> divs{1};
    for (const auto& [p, e] : factor_positive(abs(n))) {
        size_t count = divs.size();
        BigInt pk = 1;
        for (unsigned i = 1; i <= e; ++i) {
            pk *= p;
            for (size_t j = 0; j < count; ++j) divs.push_back(divs[j] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Rational eval_cubic(const BigInt& c3, const BigInt& c2, const BigInt& c1, const BigInt& c0,
                    const Rational& x) {
    return ((Rational(c3) * x + c2) * x + c1) * x + c0;
}

std::vector<Rational> roots_quadratic(const BigInt& a, const BigInt& b, const BigInt& c) {
    std::vector<Rational> roots;
    if (a == 0) {
        if (b != 0) roots.push_back(Rational(-c, b));
        return roots;
    }
    BigInt disc = b * b - 4 * a * c, r;
    if (!is_perfect_square(disc, &r)) return roots;
    roots.push_back(Rational(-b + r, 2 * a));
    if (r != 0) roots.push_back(Rational(-b - r, 2 * a));
    return roots;
}

}  // namespace

std::vector<Rational> rational_roots_cubic(const BigInt& c3, const BigInt& c2,
                                           const BigInt& c1, const BigInt& c0) {
    if (c3 == 0 && c2 == 0 && c1 == 0 && c0 == 0)
        throw std::invalid_argument("rational_roots_cubic: zero polynomial");

    std::set<Rational> roots;
    if (c3 == 0) {
        for (const auto& r : roots_quadratic(c2, c1, c0)) roots.insert(r);
    } else if (c0 == 0) {
        roots.insert(0);
        for (const auto& r : roots_quadratic(c3, c2, c1)) roots.insert(r);
    } else {
        // root p/q in lowest terms requires p | c0 and q | c3
        for (const BigInt& p : divisors_of(c0)) {
            for (const BigInt& q : divisors_of(c3)) {
                if (gcd(p, q) != 1) continue;
                Rational cand(p, q);
                if (eval_cubic(c3, c2, c1, c0, cand) == 0) roots.insert(cand);
                cand = -cand;
                if (eval_cubic(c3, c2, c1, c0, cand) == 0) roots.insert(cand);
            }
        }
    }
    return {roots.begin(), roots.end()};
}

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(parse_bigint(text));
    BigInt num = parse_bigint(text.substr(0, slash));
    BigInt den = parse_bigint(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("parse_rational: zero denominator in '" + text + "'");
    return Rational(num, den);
}

std::string rational_to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string bigint_to_string(const BigInt& n) { return n.str(); }

BigInt parse_bigint(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("parse_bigint: empty string");
    size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
    if (start == text.size()) throw std::invalid_argument("parse_bigint: no digits in '" + text + "'");
    for (size_t i = start; i < text.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw std::invalid_argument("parse_bigint: invalid integer '" + text + "'");
    return BigInt(text);
}

}  // namespace cubigen
