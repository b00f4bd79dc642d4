#pragma once

// Independent numerical oracle: zeta values by Euler-Maclaurin summation,
// series by direct partial summation plus an asymptotic tail estimate, and
// numeric evaluation of closed forms.

#include <string>

#include "eulersum/bigfloat.hpp"
#include "eulersum/closed_form.hpp"
#include "eulersum/term.hpp"

namespace eulersum {

/// Extra decimal digits carried beyond the requested precision.
inline constexpr int kGuardDigits = 10;

struct NumericValue {
    BigFloat value;
    BigFloat error_bound;

    [[nodiscard]] std::string str(int digits) const;
};

/// zeta(n) for n >= 2 with at least `digits` correct digits (digits >= 10).
NumericValue zeta_numeric(int n, int digits);

struct SummationOptions {
    long terms = 100000;  // K, at least 10
    int digits = 30;      // at least 10
    int workers = 1;      // threads for the partial sum; the result does not depend on this
};

struct SeriesEstimate {
    BigFloat partial_sum;  // sum_{k=1}^K in ascending order
    BigFloat tail;         // estimate of sum_{k>K}
    NumericValue total;    // partial_sum + tail with its error bound
};

/// Throws DivergentSeries when the engine's convergence check fails.
SeriesEstimate series_numeric(const SeriesExpression& series, const SummationOptions& options = {});

/// sum_{k>=1} H_k^{(m)} / k^n for m >= 2, n >= 2.
NumericValue generalized_sum_numeric(int m, int n, const SummationOptions& options = {});

/// Symbolic constants are evaluated from their defining series with the same options.
NumericValue closed_form_numeric(const ClosedForm& value, const SummationOptions& options = {});

struct VerifyReport {
    bool pass = false;
    BigFloat residual;
    SeriesEstimate series;
    NumericValue closed_form;
    long terms = 0;
    int digits = 0;

    [[nodiscard]] BigFloat tolerance() const;
    [[nodiscard]] std::string text() const;
    [[nodiscard]] std::string json() const;
};

/// Passes iff |series - closed form| is within the sum of both error bounds.
VerifyReport verify(const SeriesExpression& series, const ClosedForm& value, const SummationOptions& options = {});

}  // namespace eulersum
