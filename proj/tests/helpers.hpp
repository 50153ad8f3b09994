#pragma once

#include "cubigen/forms.hpp"
#include "cubigen/mordell.hpp"
#include "cubigen/numeric.hpp"

#include <optional>
#include <random>
#include <utility>
#include <vector>

namespace cubigen::testing {

inline Rational random_rational(std::mt19937_64& rng, long long magnitude = 1000) {
    std::uniform_int_distribution<long long> num(-magnitude, magnitude);
    std::uniform_int_distribution<long long> den(1, magnitude);
    return Rational(num(rng), den(rng));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, long long magnitude = 1000) {
    Rational q = 0;
    while (q == 0) q = random_rational(rng, magnitude);
    return q;
}

inline BinaryCubicForm random_form(std::mt19937_64& rng, long long magnitude = 50) {
    return BinaryCubicForm{random_rational(rng, magnitude), random_rational(rng, magnitude),
                           random_rational(rng, magnitude), random_rational(rng, magnitude)};
}

inline GL2Matrix random_invertible(std::mt19937_64& rng, long long magnitude = 20) {
    while (true) {
        GL2Matrix g{random_rational(rng, magnitude), random_rational(rng, magnitude),
                    random_rational(rng, magnitude), random_rational(rng, magnitude)};
        if (g.det() != 0) return g;
    }
}

// Exhaustive oracle for the bounded unit-representation search.
inline std::optional<std::pair<BigInt, BigInt>> brute_force_unit(const BinaryCubicForm& f,
                                                                 long bound) {
    std::optional<std::pair<BigInt, BigInt>> best;
    for (long x = -bound; x <= bound; ++x) {
        for (long y = -bound; y <= bound; ++y) {
            Rational value = f.evaluate(x, y);
            if (value != 1 && value != -1) continue;
            std::pair<BigInt, BigInt> cand{x, y};
            if (!best || cand < *best) best = cand;
            break;  // smallest y for this x is enough under lex order
        }
    }
    return best;
}

// Division-polynomial route to the duplication x-coordinate on Y^2 = 4X^3+k.
inline Rational doubling_x_oracle(const Rational& x, const Rational& k) {
    return (x * x * x * x - 2 * k * x) / (4 * x * x * x + k);
}

}  // namespace cubigen::testing
