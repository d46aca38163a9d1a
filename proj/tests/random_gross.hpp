#pragma once

// Seeded random gross-number generators shared by the property tests.

#include <random>
#include <vector>

#include "gross/grossnum.hpp"

namespace tg {

inline gross::Rat small_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> numd(-6, 6);
    std::uniform_int_distribution<int> dend(1, 4);
    return gross::Rat(numd(rng), dend(rng));
}

inline gross::Rat small_nonzero_rat(std::mt19937& rng) {
    for (;;) {
        gross::Rat r = small_rat(rng);
        if (r != 0) return r;
    }
}

// Arbitrary well-formed values, including fractional g-powers that the
// expression grammar cannot spell. Good for algebraic laws.
inline gross::GrossNumber random_gross(std::mt19937& rng) {
    static const gross::Rat gross_powers[] = {
        gross::Rat(0),     gross::Rat(1),  gross::Rat(-1),    gross::Rat(2),
        gross::Rat(-2),    gross::Rat(3),  gross::Rat(1, 2),  gross::Rat(-1, 2),
        gross::Rat(3, 2)};
    static const gross::Rat poly_powers[] = {gross::Rat(1), gross::Rat(2), gross::Rat(1, 2)};
    static const int primes[] = {2, 3, 5};

    std::uniform_int_distribution<int> ntermsd(0, 3);
    std::uniform_int_distribution<int> gpd(0, 8);
    std::uniform_int_distribution<int> coin(0, 1);
    std::uniform_int_distribution<int> primed(0, 2);
    std::uniform_int_distribution<int> polyd(0, 2);

    std::vector<gross::GrossTerm> terms;
    int n = ntermsd(rng);
    for (int i = 0; i < n; ++i) {
        gross::GrossTerm t;
        t.coefficient = small_nonzero_rat(rng);
        t.gross_power = gross_powers[gpd(rng)];
        if (coin(rng)) {
            int nf = 1 + coin(rng);
            for (int f = 0; f < nf; ++f) {
                gross::ExponentPoly poly;
                int nm = 1 + coin(rng);
                for (int m = 0; m < nm; ++m)
                    poly.add_monomial(poly_powers[polyd(rng)], small_rat(rng));
                if (!poly.empty()) t.exp_factors[gross::Int(primes[primed(rng)])] = poly;
            }
        }
        terms.push_back(t);
    }
    return gross::GrossNumber::from_terms(terms);
}

// Values built only through parse-reachable operations, so canonical printing
// of the result is guaranteed to re-parse.
inline gross::GrossNumber random_reachable(std::mt19937& rng, int depth = 0) {
    std::uniform_int_distribution<int> pick(0, depth >= 3 ? 2 : 5);
    std::uniform_int_distribution<int> intd(-9, 9);
    std::uniform_int_distribution<int> based(0, 5);
    std::uniform_int_distribution<int> cd(-3, 3);
    std::uniform_int_distribution<int> halves(0, 1);
    static const int bases[] = {2, 3, 4, 5, 6, 10};

    switch (pick(rng)) {
        case 0:
            return gross::GrossNumber(gross::Rat(intd(rng)));
        case 1:
            return gross::grossone();
        case 2: {
            // b^(c0 + c1*g + c2*g^2), coefficients possibly half-integral
            gross::GrossNumber e(gross::Rat(cd(rng)));
            gross::Rat c1(cd(rng), halves(rng) ? 2 : 1);
            gross::Rat c2(cd(rng), halves(rng) ? 2 : 1);
            e += gross::GrossNumber(c1) * gross::grossone();
            e += gross::GrossNumber(c2) * gross::grossone() * gross::grossone();
            return gross::pow(bases[based(rng)], e);
        }
        case 3:
            return random_reachable(rng, depth + 1) + random_reachable(rng, depth + 1);
        case 4:
            return random_reachable(rng, depth + 1) - random_reachable(rng, depth + 1);
        default:
            return random_reachable(rng, depth + 1) * random_reachable(rng, depth + 1);
    }
}

}  // namespace tg
