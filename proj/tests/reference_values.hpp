#pragma once

// Published values for the quartic consecutive-product series and the
// classical Euler-sum corpus, shared by the unit and acceptance suites.

#include <algorithm>
#include <string>
#include <tuple>
#include <vector>

#include "eulersum/closed_form.hpp"
#include "eulersum/parser.hpp"
#include "eulersum/term.hpp"

namespace eulersum::testing {

inline const char* const kQuartic = "H[k]*H[k+1]*H[k+2]*H[k+3]/(k*(k+1)*(k+2)*(k+3))";
inline const char* const kQuarticValue =
    "-4/9*zeta(2) - 1/6*zeta(2)*zeta(3) - 7/24*zeta(3) + 191/144*zeta(4) + 1/2*zeta(5)";

/// Canonical expansion of H_k H_{k+1} H_{k+2} H_{k+3} / (k(k+1)(k+2)(k+3)),
/// as printed, in print order: {coeff, l, m, n}.
inline std::vector<CanonicalTerm> quartic_expansion() {
    auto t = [](long p, long q, int l, int m, int n) { return CanonicalTerm{Rational(p, q), l, m, n}; };
    return {
        t(11, 24, 0, 1, 2),  t(-131, 72, 0, 2, 2), t(11, 12, 0, 3, 2),  t(-5, 9, 0, 1, 3),
        t(109, 72, 0, 2, 3), t(-41, 36, 0, 3, 3),  t(1, 6, 0, 1, 4),    t(-5, 12, 0, 2, 4),
        t(11, 36, 0, 3, 4),  t(11, 24, 1, 0, 1),   t(-41, 18, 1, 1, 1), t(197, 72, 1, 2, 1),
        t(-11, 12, 1, 3, 1), t(73, 72, 2, 0, 1),   t(-11, 3, 2, 1, 1),  t(97, 24, 2, 2, 1),
        t(-25, 18, 2, 3, 1), t(13, 18, 3, 0, 1),   t(-13, 6, 3, 1, 1),  t(13, 6, 3, 2, 1),
        t(-13, 18, 3, 3, 1), t(1, 6, 4, 0, 1),     t(-1, 2, 4, 1, 1),   t(1, 2, 4, 2, 1),
        t(-1, 6, 4, 3, 1),   t(9, 4, 1, 1, 2),     t(-29, 6, 1, 2, 2),  t(91, 36, 1, 3, 2),
        t(-2, 3, 1, 1, 3),   t(13, 6, 1, 2, 3),    t(-4, 3, 1, 3, 3),   t(1, 6, 1, 3, 4),
        t(9, 4, 2, 1, 2),    t(-15, 4, 2, 2, 2),   t(7, 4, 2, 3, 2),    t(1, 2, 2, 2, 3),
        t(-1, 2, 2, 3, 3),   t(1, 2, 3, 1, 2),     t(-1, 1, 3, 2, 2),   t(1, 2, 3, 3, 2),
    };
}

/// The same terms in (l, m, n) order.
inline std::vector<CanonicalTerm> quartic_expansion_sorted() {
    auto terms = quartic_expansion();
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return std::tie(a.hexp, a.shift, a.npow) < std::tie(b.hexp, b.shift, b.npow);
    });
    return terms;
}

/// The thirteen grouped sub-series of the quartic evaluation, their published
/// values and the weights with which they add up to the quartic series.
struct GroupedSeries {
    std::string name;
    std::string series;
    std::string value;
    Rational weight;
};

inline std::vector<GroupedSeries> quartic_groups() {
    return {
        {"S1", "11/(2*(k+1)^2) - 131/(6*(k+2)^2) + 11/(k+3)^2", "491/72 - 16/3*zeta(2)", Rational(1, 12)},
        {"S2", "-5/(k+1)^3 + 109/(8*(k+2)^3) - 41/(4*(k+3)^3)", "2735/1728 - 13/8*zeta(3)", Rational(1, 9)},
        {"S3", "1/(k+1)^4 - 5/(2*(k+2)^4) + 11/(6*(k+3)^4)", "-611/1944 + 1/3*zeta(4)", Rational(1, 6)},
        {"S4", "11*H[k]/(4*k) - 41*H[k+1]/(3*(k+1)) + 197*H[k+2]/(12*(k+2)) - 11*H[k+3]/(2*(k+3))", "-299/144",
         Rational(1, 6)},
        {"S5",
         "73*H[k]^2/(24*k) - 11*H[k+1]^2/(k+1) + 97*H[k+2]^2/(8*(k+2)) - 25*H[k+3]^2/(6*(k+3))", "-6445/5184",
         Rational(1, 3)},
        {"S6", "H[k]^3/(3*k) - H[k+1]^3/(k+1) + H[k+2]^3/(k+2) - H[k+3]^3/(3*(k+3))", "-26/243",
         Rational(13, 6)},
        {"S7", "H[k]^4/(3*k) - H[k+1]^4/(k+1) + H[k+2]^4/(k+2) - H[k+3]^4/(3*(k+3))", "-577/5832",
         Rational(1, 2)},
        {"S8", "9*H[k+1]/(2*(k+1)^2) - 29*H[k+2]/(3*(k+2)^2) + 91*H[k+3]/(18*(k+3)^2)",
         "3151/3888 - 2/9*zeta(3)", Rational(1, 2)},
        {"S9", "-2*H[k+1]/(k+1)^3 + 13*H[k+2]/(2*(k+2)^3) - 4*H[k+3]/(k+3)^3", "-1807/2592 + 5/8*zeta(4)",
         Rational(1, 3)},
        {"S10", "H[k+3]/(k+3)^4", "-8681/7776 - zeta(2)*zeta(3) + 3*zeta(5)", Rational(1, 6)},
        {"S11", "9*H[k+1]^2/(k+1)^2 - 15*H[k+2]^2/(k+2)^2 + 7*H[k+3]^2/(k+3)^2", "287/324 + 17/4*zeta(4)",
         Rational(1, 4)},
        {"S12", "H[k+2]^2/(k+2)^3 - H[k+3]^2/(k+3)^3", "121/972", Rational(1, 2)},
        {"S13", "H[k+1]^3/(2*(k+1)^2) - H[k+2]^3/(k+2)^2 + H[k+3]^3/(2*(k+3)^2)", "1237/15552", Rational(1)},
    };
}

struct CorpusEntry {
    std::string name;
    std::string series;
    std::string value;
};

/// Classical evaluations: the two Euler-Goldbach values, the linear Euler sum
/// for n = 2..7, the powers (H_k/k)^p for p = 2, 3, 4, and the consecutive products
/// for q = 1, 2, 3.
inline std::vector<CorpusEntry> corpus() {
    return {
        {"H_k/k^2", "H[k]/k^2", "2*zeta(3)"},
        {"H_k/k^3", "H[k]/k^3", "5/4*zeta(4)"},
        {"linear n=2", "H[k]/k^2", "2*zeta(3)"},
        {"linear n=3", "H[k]/k^3", "5/4*zeta(4)"},
        {"linear n=4", "H[k]/k^4", "-zeta(2)*zeta(3) + 3*zeta(5)"},
        {"linear n=5", "H[k]/k^5", "-1/2*zeta(3)^2 + 7/4*zeta(6)"},
        {"linear n=6", "H[k]/k^6", "-zeta(2)*zeta(5) - zeta(3)*zeta(4) + 4*zeta(7)"},
        {"linear n=7", "H[k]/k^7", "-zeta(3)*zeta(5) + 9/4*zeta(8)"},
        {"Au-Yeung quadratic", "H[k]^2/k^2", "17/4*zeta(4)"},
        {"Au-Yeung cubic", "H[k]^3/k^3", "93/16*zeta(6) - 5/2*zeta(3)^2"},
        {"Au-Yeung quartic", "H[k]^4/k^4", "13559/144*zeta(8) - 92*zeta(3)*zeta(5) - 2*zeta(2)*zeta(3)^2 + 26*S(2,6)"},
        {"consecutive q=1", "H[k]*H[k+1]/(k*(k+1))", "zeta(2) + 2*zeta(3)"},
        {"consecutive q=2", "H[k]*H[k+1]*H[k+2]/(k*(k+1)*(k+2))", "-1/2*zeta(2) + 5/4*zeta(3) + 5/8*zeta(4)"},
        {"consecutive q=3", kQuartic, kQuarticValue},
    };
}

}  // namespace eulersum::testing
