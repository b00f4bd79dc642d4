#include "eulersum/term.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "eulersum/errors.hpp"

namespace eulersum {

namespace {

using Signature = std::pair<std::vector<HarmonicFactor>, std::vector<DenominatorFactor>>;

void check_shift(int shift) {
    if (shift < 0) throw InvalidTerm("negative shift " + std::to_string(shift));
}

}  // namespace

GeneralTerm::GeneralTerm(Rational coeff, std::vector<HarmonicFactor> harmonics,
                         std::vector<DenominatorFactor> denoms)
    : coeff_(std::move(coeff)) {
    if (denoms.empty()) throw InvalidTerm("summand has no denominator factor");
    std::map<int, int> h;
    for (const auto& f : harmonics) {
        check_shift(f.shift);
        if (f.exponent < 1) throw InvalidTerm("harmonic exponent must be >= 1");
        h[f.shift] += f.exponent;
    }
    std::map<int, int> d;
    for (const auto& f : denoms) {
        check_shift(f.shift);
        if (f.power < 1) throw InvalidTerm("denominator power must be >= 1");
        d[f.shift] += f.power;
    }
    for (auto [s, e] : h) harmonics_.push_back({s, e});
    for (auto [s, p] : d) denoms_.push_back({s, p});
}

int GeneralTerm::harmonic_degree() const {
    int total = 0;
    for (const auto& f : harmonics_) total += f.exponent;
    return total;
}

int GeneralTerm::denominator_degree() const {
    int total = 0;
    for (const auto& f : denoms_) total += f.power;
    return total;
}

int GeneralTerm::max_shift() const {
    int m = 0;
    for (const auto& f : harmonics_) m = std::max(m, f.shift);
    for (const auto& f : denoms_) m = std::max(m, f.shift);
    return m;
}

GeneralTerm GeneralTerm::scaled(const Rational& factor) const {
    GeneralTerm t = *this;
    t.coeff_ *= factor;
    return t;
}

GeneralTerm CanonicalTerm::to_general() const {
    std::vector<HarmonicFactor> h;
    if (hexp > 0) h.push_back({shift, hexp});
    return GeneralTerm(coeff, std::move(h), {{shift, npow}});
}

SeriesExpression::SeriesExpression(std::span<const GeneralTerm> terms) {
    std::map<Signature, Rational> merged;
    for (const auto& t : terms) merged[{t.harmonics(), t.denoms()}] += t.coeff();
    for (auto& [sig, c] : merged) {
        if (c.is_zero()) continue;
        terms_.emplace_back(c, sig.first, sig.second);
    }
}

SeriesExpression SeriesExpression::scaled(const Rational& factor) const {
    std::vector<GeneralTerm> out;
    for (const auto& t : terms_) out.push_back(t.scaled(factor));
    return SeriesExpression(out);
}

SeriesExpression operator+(const SeriesExpression& a, const SeriesExpression& b) {
    std::vector<GeneralTerm> all = a.terms_;
    all.insert(all.end(), b.terms_.begin(), b.terms_.end());
    return SeriesExpression(all);
}

}  // namespace eulersum
