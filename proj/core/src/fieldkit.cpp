#include "cubigen/fieldkit.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cubigen {

namespace {

using Coords = std::array<Rational, 3>;  // coordinates over (1, theta, theta^2)

Coords mul(const Coords& a, const Coords& b, const BigInt& m) {
    // theta^3 = m
    return Coords{a[0] * b[0] + m * (a[1] * b[2] + a[2] * b[1]),
                  a[0] * b[1] + a[1] * b[0] + m * a[2] * b[2],
                  a[0] * b[2] + a[1] * b[1] + a[2] * b[0]};
}

Rational trace(const Coords& a) {
    // Tr(1) = 3, Tr(theta) = Tr(theta^2) = 0
    return 3 * a[0];
}

Rational basis_disc(const std::array<Coords, 3>& basis, const BigInt& m) {
    std::array<std::array<Rational, 3>, 3> t;
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j) t[i][j] = trace(mul(basis[i], basis[j], m));
    return t[0][0] * (t[1][1] * t[2][2] - t[1][2] * t[2][1]) -
           t[0][1] * (t[1][0] * t[2][2] - t[1][2] * t[2][0]) +
           t[0][2] * (t[1][0] * t[2][1] - t[1][1] * t[2][0]);
}

// characteristic polynomial x^3 + c2 x^2 + c1 x + c0 of multiplication by a
std::array<Rational, 3> char_poly(const Coords& a, const BigInt& m) {
    // columns of the multiplication matrix: a*1, a*theta, a*theta^2
    Coords col0 = a;
    Coords col1 = mul(a, Coords{0, 1, 0}, m);
    Coords col2 = mul(a, Coords{0, 0, 1}, m);
    Rational tr = col0[0] + col1[1] + col2[2];
    Rational minors = col0[0] * col1[1] - col1[0] * col0[1] + col0[0] * col2[2] -
                      col2[0] * col0[2] + col1[1] * col2[2] - col2[1] * col1[2];
    Rational det = col0[0] * (col1[1] * col2[2] - col2[1] * col1[2]) -
                   col1[0] * (col0[1] * col2[2] - col2[1] * col0[2]) +
                   col2[0] * (col0[1] * col1[2] - col1[1] * col0[2]);
    return {-tr, minors, -det};  // coefficients (c2, c1, c0)
}

bool is_integral(const Coords& a, const BigInt& m) {
    for (const Rational& c : char_poly(a, m))
        if (denominator(c) != 1) return false;
    return true;
}

}  // namespace

IntegralBasis integral_basis(const BigInt& m) {
    if (m <= 1) throw std::domain_error("integral_basis: m must be > 1");
    BigInt h = 1, k = 1;
    for (const auto& [p, e] : factor_positive(m)) {
        if (e == 1)
            h *= p;
        else if (e == 2)
            k *= p;
        else
            throw std::domain_error("integral_basis: m is not cube-free");
    }
    IntegralBasis basis;
    basis.m = m;
    basis.h = h;
    basis.k = k;
    bool type_two = m % 3 != 0 && residue_mod9(m) != ResidueMod9::other;
    basis.type = type_two ? DedekindType::II : DedekindType::I;
    basis.elements[0] = {1, 0, 0};
    basis.elements[1] = {0, 1, 0};
    if (!type_two) {
        basis.elements[2] = {0, 0, Rational(1, k)};
        basis.denominator = 1;
    } else {
        BigInt bound = 3 * k;
        bool found = false;
        for (BigInt u = 0; u < bound && !found; ++u) {
            for (BigInt v = 0; v < bound && !found; ++v) {
                Coords nu{Rational(u, bound), Rational(v, bound), Rational(1, bound)};
                if (is_integral(nu, m)) {
                    basis.elements[2] = nu;
                    found = true;
                }
            }
        }
        if (!found) throw std::logic_error("integral_basis: no integral third element found");
        basis.denominator = bound;
    }
    BigInt hk = h * k;
    Rational expected = Rational(type_two ? -3 : -27) * hk * hk;
    Rational actual = basis_disc(basis.elements, m);
    if (actual != expected) throw std::logic_error("integral_basis: discriminant postcondition failed");
    basis.disc = numerator(expected);
    return basis;
}

BinaryCubicForm index_form_of_field(const BigInt& m) {
    IntegralBasis basis = integral_basis(m);
    const Coords& w3 = basis.elements[2];
    // squares and cross products of (theta, w3) over (1, theta, theta^2)
    Coords t_theta2 = {0, 0, 1};
    Coords t_cross = mul(Coords{0, 1, 0}, w3, m);
    Coords t_w3sq = mul(w3, w3, m);

    // change to coordinates over (1, theta, w3): the matrix is triangular
    // because w3 = (w0 + w1 theta + w2 theta^2)
    auto in_basis3 = [&](const Coords& c) {
        Rational z3 = c[2] / w3[2];
        Rational z2 = c[1] - w3[1] * z3;
        return std::pair<Rational, Rational>{z2, z3};
    };
    auto [a2_t, a3_t] = in_basis3(t_theta2);
    auto [b2_t, b3_t] = in_basis3(t_cross);
    auto [c2_t, c3_t] = in_basis3(t_w3sq);

    // (x theta + y w3)^2 = ... + q2 theta + q3 w3 with
    //   q2 = a2 x^2 + 2 b2 xy + c2 y^2,  q3 = a3 x^2 + 2 b3 xy + c3 y^2;
    // the index form is x q3 - y q2.
    BinaryCubicForm form{a3_t, 2 * b3_t - a2_t, c3_t - 2 * b2_t, -c2_t};
    for (const Rational* c : {&form.a, &form.b, &form.c, &form.d})
        if (denominator(*c) != 1)
            throw std::logic_error("index_form_of_field: non-integral index form");
    if (disc_form(form) != Rational(basis.disc))
        throw std::logic_error("index_form_of_field: discriminant mismatch");
    return form;
}

MonogenityCertificate certify_monogenic(const BigInt& m, const BigInt& bound) {
    if (bound < 1) throw std::domain_error("certify_monogenic: bound must be positive");
    BinaryCubicForm form = index_form_of_field(m);
    MonogenityCertificate cert;
    auto witness = represents_unit(form, bound);
    if (witness) {
        cert.monogenic = true;
        cert.witness = witness;
        cert.unit_value = form.evaluate(Rational(witness->first), Rational(witness->second)) == 1
                              ? 1
                              : -1;
    }
    return cert;
}

BigInt MonicCubic::disc() const {
    return 18 * c2 * c1 * c0 - 4 * c2 * c2 * c2 * c0 + c2 * c2 * c1 * c1 - 4 * c1 * c1 * c1 -
           27 * c0 * c0;
}

bool MonicCubic::has_rational_root() const {
    return !rational_roots_cubic(1, c2, c1, c0).empty();
}

namespace {

int root_count_mod_p(const MonicCubic& f, long p) {
    auto reduce = [&](const BigInt& c) {
        long r = static_cast<long>(c % p);
        return r < 0 ? r + p : r;
    };
    long a = reduce(f.c2), b = reduce(f.c1), c = reduce(f.c0);
    int count = 0;
    for (long x = 0; x < p; ++x) {
        long long v = x;
        v = (v * x + a) % p;
        v = (v * x + b) % p;
        v = (v * x + c) % p;
        if (v % p == 0) ++count;
    }
    return count;
}

std::vector<long> primes_up_to(long n) {
    std::vector<bool> sieve(static_cast<size_t>(std::max(n + 1, 2L)), true);
    std::vector<long> primes;
    for (long i = 2; i <= n; ++i) {
        if (!sieve[static_cast<size_t>(i)]) continue;
        primes.push_back(i);
        for (long j = 2 * i; j <= n; j += i) sieve[static_cast<size_t>(j)] = false;
    }
    return primes;
}

}  // namespace

bool splitting_consistent(const MonicCubic& f, const MonicCubic& g, long prime_bound) {
    BigInt df = f.disc(), dg = g.disc();
    if (df == 0 || dg == 0)
        throw std::domain_error("splitting_consistent: zero discriminant");
    if (f.has_rational_root() || g.has_rational_root())
        throw std::domain_error("splitting_consistent: inputs must be irreducible");
    for (long p : primes_up_to(prime_bound)) {
        if (df % p == 0 || dg % p == 0) continue;
        // away from the discriminants the shape (1,1,1)/(1,2)/(3) is
        // determined by the number of roots
        if (root_count_mod_p(f, p) != root_count_mod_p(g, p)) return false;
    }
    return true;
}

}  // namespace cubigen
