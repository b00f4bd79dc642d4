#pragma once

// Summand representation: products of shifted harmonic numbers over products
// of shifted linear factors, all in the single summation index k >= 1.

#include <compare>
#include <map>
#include <span>
#include <vector>

#include "eulersum/rational.hpp"

namespace eulersum {

/// H_{k+shift}^exponent
struct HarmonicFactor {
    int shift = 0;
    int exponent = 1;
    friend auto operator<=>(const HarmonicFactor&, const HarmonicFactor&) = default;
};

/// (k+shift)^power, always in the denominator.
struct DenominatorFactor {
    int shift = 0;
    int power = 1;
    friend auto operator<=>(const DenominatorFactor&, const DenominatorFactor&) = default;
};

/// coeff * prod H_{k+m}^e / prod (k+a)^p. Factors with equal shifts are merged
/// on construction; both lists are sorted by strictly increasing shift.
class GeneralTerm {
public:
    GeneralTerm(Rational coeff, std::vector<HarmonicFactor> harmonics,
                std::vector<DenominatorFactor> denoms);

    [[nodiscard]] const Rational& coeff() const { return coeff_; }
    [[nodiscard]] const std::vector<HarmonicFactor>& harmonics() const { return harmonics_; }
    [[nodiscard]] const std::vector<DenominatorFactor>& denoms() const { return denoms_; }

    [[nodiscard]] int harmonic_degree() const;
    [[nodiscard]] int denominator_degree() const;
    [[nodiscard]] int max_shift() const;

    [[nodiscard]] GeneralTerm scaled(const Rational& factor) const;

    friend bool operator==(const GeneralTerm&, const GeneralTerm&) = default;

private:
    Rational coeff_;
    std::vector<HarmonicFactor> harmonics_;
    std::vector<DenominatorFactor> denoms_;
};

/// coeff * H_{k+shift}^hexp / (k+shift)^npow
struct CanonicalTerm {
    Rational coeff;
    int hexp = 0;
    int shift = 0;
    int npow = 1;

    [[nodiscard]] GeneralTerm to_general() const;
    friend bool operator==(const CanonicalTerm&, const CanonicalTerm&) = default;
};

/// Sum over k >= 1 of a list of general terms with pairwise distinct factor
/// signatures (like terms merged, zero coefficients dropped).
class SeriesExpression {
public:
    SeriesExpression() = default;
    explicit SeriesExpression(std::span<const GeneralTerm> terms);
    SeriesExpression(std::initializer_list<GeneralTerm> terms)
        : SeriesExpression(std::span<const GeneralTerm>(terms.begin(), terms.size())) {}

    [[nodiscard]] const std::vector<GeneralTerm>& terms() const { return terms_; }
    [[nodiscard]] bool empty() const { return terms_.empty(); }

    [[nodiscard]] SeriesExpression scaled(const Rational& factor) const;
    friend SeriesExpression operator+(const SeriesExpression& a, const SeriesExpression& b);
    friend bool operator==(const SeriesExpression&, const SeriesExpression&) = default;

private:
    std::vector<GeneralTerm> terms_;
};

}  // namespace eulersum
