#pragma once

// Evaluation of series to closed forms.
//
// For fixed (l, n) a group sum_m c_m H_{k+m}^l/(k+m)^n summed over k >= 1 is
//   (sum_m c_m) * E(l, n) - sum_m c_m * P(l, n, m)
// where P is the finite prefix sum over j <= m. When the coefficients cancel
// the full Euler sum drops out and the group telescopes to a rational.

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "eulersum/closed_form.hpp"
#include "eulersum/euler_table.hpp"
#include "eulersum/rational.hpp"
#include "eulersum/term.hpp"

namespace eulersum {

struct CanonicalGroup {
    int hexp = 0;
    int npow = 1;
    std::map<int, Rational> coeffs;  // shift -> coefficient

    [[nodiscard]] Rational coeff_sum() const;
    friend bool operator==(const CanonicalGroup&, const CanonicalGroup&) = default;
};

/// Partitions canonical terms by (hexp, npow), sorted by that key.
std::vector<CanonicalGroup> group_canonical(std::span<const CanonicalTerm> terms);

struct Divergence {
    int hexp = 0;
    int npow = 1;
    Rational coeff_sum;
};

/// The first group with n = 1 and a nonzero coefficient sum, if any.
std::optional<Divergence> check_convergence(std::span<const CanonicalGroup> groups);

struct EvaluationOptions {
    /// Throw NotReducible instead of emitting an EulerSum(l,n) constant.
    bool strict = false;
};

ClosedForm evaluate_group(const CanonicalGroup& group, const EulerTable& table,
                          const EvaluationOptions& options = {});

struct GroupValue {
    CanonicalGroup group;
    ClosedForm value;
};

struct Evaluation {
    std::vector<CanonicalTerm> canonical;
    std::vector<GroupValue> groups;
    ClosedForm value;
};

/// Throws DivergentSeries for divergent input and NotReducible in strict mode.
Evaluation evaluate_series_traced(const SeriesExpression& series, const EulerTable& table,
                                  const EvaluationOptions& options = {});

ClosedForm evaluate_series(const SeriesExpression& series, const EulerTable& table,
                           const EvaluationOptions& options = {});

}  // namespace eulersum
