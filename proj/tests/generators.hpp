#pragma once

// Seeded random generators for property tests.

#include <algorithm>
#include <random>
#include <vector>

#include "eulersum/term.hpp"

namespace eulersum::testing {

inline std::vector<DenominatorFactor> random_denoms(std::mt19937& rng, int max_factors, int max_shift,
                                                    int max_power) {
    std::uniform_int_distribution<int> count(1, max_factors);
    std::uniform_int_distribution<int> power(1, max_power);
    std::vector<int> shifts;
    for (int s = 0; s <= max_shift; ++s) shifts.push_back(s);
    std::shuffle(shifts.begin(), shifts.end(), rng);
    const int n = std::min<int>(count(rng), static_cast<int>(shifts.size()));
    std::vector<DenominatorFactor> out;
    for (int i = 0; i < n; ++i) out.push_back({shifts[static_cast<std::size_t>(i)], power(rng)});
    return out;
}

/// Up to three distinct harmonic shifts, each exponent <= max_exponent,
/// total harmonic degree <= max_degree.
inline GeneralTerm random_term(std::mt19937& rng, int max_shift, int max_exponent, int max_degree,
                               int max_power) {
    std::uniform_int_distribution<int> num(-12, 12);
    std::uniform_int_distribution<int> den(1, 9);
    std::uniform_int_distribution<int> nh(0, 3);
    std::uniform_int_distribution<int> exponent(1, max_exponent);
    int c = 0;
    while (c == 0) c = num(rng);
    std::vector<int> shifts;
    for (int s = 0; s <= max_shift; ++s) shifts.push_back(s);
    std::shuffle(shifts.begin(), shifts.end(), rng);
    std::vector<HarmonicFactor> h;
    int degree = 0;
    const int count = nh(rng);
    for (int i = 0; i < count; ++i) {
        const int e = std::min(exponent(rng), max_degree - degree);
        if (e < 1) break;
        h.push_back({shifts[static_cast<std::size_t>(i)], e});
        degree += e;
    }
    return GeneralTerm(Rational(c, den(rng)), h, random_denoms(rng, 4, max_shift, max_power));
}

}  // namespace eulersum::testing
