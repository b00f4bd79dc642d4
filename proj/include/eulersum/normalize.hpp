#pragma once

// Reduction of general summands to rational combinations of canonical terms
// H_{k+m}^l / (k+m)^n by partial fractions and harmonic shifting.

#include <map>
#include <span>
#include <vector>

#include "eulersum/rational.hpp"
#include "eulersum/term.hpp"

namespace eulersum {

/// Coefficients alpha with 1/prod (k+a_i)^{p_i} = sum alpha_{a,r} / (k+a)^r,
/// keyed by (shift a, power r). Zero coefficients are omitted.
using PartialFractions = std::map<DenominatorFactor, Rational>;

/// Requires a non-empty list of factors with distinct shifts.
PartialFractions partial_fraction(std::span<const DenominatorFactor> denoms);

/// One signed unit fraction sign/(k+shift).
struct UnitFraction {
    int shift = 0;
    int sign = 1;
    friend bool operator==(const UnitFraction&, const UnitFraction&) = default;
};

/// H_{k+from} written as H_{k+to} + sum of unit fractions.
struct ShiftedHarmonic {
    int base = 0;
    std::vector<UnitFraction> tail;
};

/// H_{k+p} = H_{k+q} + 1/(k+q+1) + ... + 1/(k+p) when p > q, and
/// H_{k+p} = H_{k+q} - 1/(k+p+1) - ... - 1/(k+q) when p < q.
ShiftedHarmonic shift_harmonic(int from, int to);

struct NormalizationResult {
    std::vector<CanonicalTerm> terms;  // merged, sorted by (hexp, shift, npow)
    int passes = 0;
};

/// Each pass partial-fractions every pending term, rewrites its harmonic
/// factors onto the single remaining denominator shift, and keeps the
/// products that still mix shifts for the next pass. Those always carry a
/// strictly smaller harmonic degree, so at most degree + 1 passes are needed;
/// exceeding that throws IterationOverflow.
NormalizationResult normalize_traced(const GeneralTerm& term);

std::vector<CanonicalTerm> normalize(const GeneralTerm& term);

/// Normalizes every term of the series and merges the results.
std::vector<CanonicalTerm> normalize(const SeriesExpression& series);

/// Exact value of the summand at index k >= 1.
Rational eval_term_at(const GeneralTerm& term, long k);
Rational eval_term_at(const CanonicalTerm& term, long k);
Rational eval_term_at(const SeriesExpression& series, long k);

}  // namespace eulersum
