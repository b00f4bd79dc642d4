#pragma once

// Exact asymptotic expansions for x -> infinity in the monomials
// x^{-a} * lambda^i with lambda = ln x + gamma, rational coefficients.
// Harmonic numbers extend as H_x = lambda + 1/(2x) - sum_j B_{2j} / (2j x^{2j}),
// so every summand built from shifted harmonics over shifted linear factors
// expands with exact rational coefficients and cancellations are exact.

#include <map>
#include <optional>
#include <utility>

#include "eulersum/bigfloat.hpp"
#include "eulersum/rational.hpp"
#include "eulersum/term.hpp"

namespace eulersum {

class AsymptoticSeries {
public:
    using Key = std::pair<int, int>;  // (power of 1/x, power of lambda)

    /// Terms with a > max_order are discarded.
    explicit AsymptoticSeries(int max_order) : max_order_(max_order) {}

    static AsymptoticSeries harmonic(int shift, int max_order);
    /// (x + shift)^{-power}
    static AsymptoticSeries inverse_linear(int shift, int power, int max_order);
    static AsymptoticSeries of(const GeneralTerm& term, int max_order);
    static AsymptoticSeries of(const SeriesExpression& series, int max_order);

    [[nodiscard]] int max_order() const { return max_order_; }
    [[nodiscard]] const std::map<Key, Rational>& coeffs() const { return coeffs_; }
    [[nodiscard]] std::optional<int> leading_order() const;

    void add(Key key, const Rational& c);
    AsymptoticSeries& operator+=(const AsymptoticSeries& o);
    AsymptoticSeries& operator*=(const Rational& r);
    friend AsymptoticSeries operator*(const AsymptoticSeries& a, const AsymptoticSeries& b);

    [[nodiscard]] AsymptoticSeries derivative() const;
    /// Only the terms with power of 1/x equal to `order`.
    [[nodiscard]] AsymptoticSeries slice(int order) const;
    [[nodiscard]] AsymptoticSeries truncated(int order) const;

    [[nodiscard]] BigFloat evaluate(const BigFloat& x, const BigFloat& lambda) const;
    /// integral_K^infinity of the series; every term needs a >= 2.
    [[nodiscard]] BigFloat integral_from(const BigFloat& K, const BigFloat& lambda) const;
    /// The same integral with every coefficient replaced by its magnitude.
    [[nodiscard]] BigFloat abs_integral_from(const BigFloat& K, const BigFloat& lambda) const;

private:
    int max_order_;
    std::map<Key, Rational> coeffs_;
};

struct TailEstimate {
    BigFloat value;
    BigFloat error;
};

/// Estimates sum_{k > K} f(k) for the expansion f by Euler-Maclaurin summation
/// of every order up to `usable_order`. The error estimate doubles the size
/// of the first two omitted orders plus the first omitted correction term.
TailEstimate tail_sum(const AsymptoticSeries& f, long K, int usable_order, mpfr_prec_t bits, int em_terms = 8);

}  // namespace eulersum
