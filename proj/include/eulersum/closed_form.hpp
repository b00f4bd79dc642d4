#pragma once

// Closed-form values: a rational constant plus rational combinations of zeta
// products and of named Euler-sum constants that have no known reduction.

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "eulersum/rational.hpp"

namespace eulersum {

/// zeta(a_1) * ... * zeta(a_r); args sorted ascending, each >= 2. Empty is 1.
class ZetaMonomial {
public:
    ZetaMonomial() = default;
    explicit ZetaMonomial(std::vector<int> args);

    [[nodiscard]] const std::vector<int>& args() const { return args_; }
    [[nodiscard]] bool is_unit() const { return args_.empty(); }
    [[nodiscard]] int weight() const;

    friend ZetaMonomial operator*(const ZetaMonomial& a, const ZetaMonomial& b);
    friend auto operator<=>(const ZetaMonomial&, const ZetaMonomial&) = default;

private:
    std::vector<int> args_;
};

/// Key of E(l, n) = sum_{k>=1} H_k^l / k^n.
struct EulerSumKey {
    int hexp = 0;
    int npow = 2;
    friend auto operator<=>(const EulerSumKey&, const EulerSumKey&) = default;
};

enum class SumKind {
    Power,        // EulerSum(l,n) = sum H_k^l / k^n
    Generalized,  // S(m,n) = sum H_k^{(m)} / k^n, H_k^{(m)} = sum_{j<=k} 1/j^m
};

struct SymbolicSum {
    SumKind kind = SumKind::Power;
    int order = 1;  // l for Power, m for Generalized
    int npow = 2;
    friend auto operator<=>(const SymbolicSum&, const SymbolicSum&) = default;
};

class ClosedForm {
public:
    ClosedForm() = default;

    static ClosedForm constant(const Rational& value);
    static ClosedForm zeta(int arg, const Rational& coeff = Rational(1));
    static ClosedForm monomial(const ZetaMonomial& m, const Rational& coeff = Rational(1));
    static ClosedForm symbolic(const SymbolicSum& s, const Rational& coeff = Rational(1));

    /// Coefficients of zeta monomials; the unit monomial carries the rational constant.
    [[nodiscard]] const std::map<ZetaMonomial, Rational>& coeffs() const { return coeffs_; }
    [[nodiscard]] const std::map<SymbolicSum, Rational>& symbolics() const { return symbolic_; }

    [[nodiscard]] Rational rational_part() const;
    [[nodiscard]] Rational coeff_of(const ZetaMonomial& m) const;
    [[nodiscard]] bool is_zero() const { return coeffs_.empty() && symbolic_.empty(); }
    [[nodiscard]] bool has_symbolic() const { return !symbolic_.empty(); }

    ClosedForm& operator+=(const ClosedForm& o);
    ClosedForm& operator-=(const ClosedForm& o);
    ClosedForm& operator*=(const Rational& r);

    friend ClosedForm operator+(ClosedForm a, const ClosedForm& b) { return a += b; }
    friend ClosedForm operator-(ClosedForm a, const ClosedForm& b) { return a -= b; }
    friend ClosedForm operator-(ClosedForm a) { return a *= Rational(-1); }
    friend ClosedForm operator*(const Rational& r, ClosedForm a) { return a *= r; }
    friend ClosedForm operator*(ClosedForm a, const Rational& r) { return a *= r; }

    /// Ring product; throws UnsupportedProduct if either side has a symbolic constant.
    friend ClosedForm operator*(const ClosedForm& a, const ClosedForm& b);

    friend bool operator==(const ClosedForm&, const ClosedForm&) = default;

private:
    void add_monomial(const ZetaMonomial& m, const Rational& c);
    void add_symbolic(const SymbolicSum& s, const Rational& c);

    std::map<ZetaMonomial, Rational> coeffs_;
    std::map<SymbolicSum, Rational> symbolic_;
};

enum class Format { Text, Latex, Json };

std::string format(const ClosedForm& value, Format style);

/// Bernoulli number B_n (B_1 = -1/2).
Rational bernoulli(int n);

/// Rational r with zeta(2n) = r * pi^{2n}.
Rational even_zeta_pi_coefficient(int two_n);

/// pi^pi_power * zeta(odd_1) * ... ; odd_args sorted, all odd.
struct PiMonomial {
    int pi_power = 0;
    std::vector<int> odd_args;
    friend auto operator<=>(const PiMonomial&, const PiMonomial&) = default;
};

using PiForm = std::map<PiMonomial, Rational>;

/// Replaces every even zeta factor by its rational multiple of a power of pi.
/// The input must be free of symbolic constants.
PiForm even_zeta_to_pi(const ClosedForm& value);

std::string format(const PiForm& value, Format style);

}  // namespace eulersum
