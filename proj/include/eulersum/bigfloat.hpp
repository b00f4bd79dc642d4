#pragma once

// RAII wrapper over an MPFR value with a per-value binary precision. Binary
// operations produce the larger precision of their operands.

#include <compare>
#include <string>

#include <mpfr.h>

#include "eulersum/rational.hpp"

namespace eulersum {

/// Bits needed for `digits` significant decimal digits.
mpfr_prec_t bits_for_digits(int digits);

class BigFloat {
public:
    explicit BigFloat(mpfr_prec_t bits);
    BigFloat(long value, mpfr_prec_t bits);
    BigFloat(const Rational& value, mpfr_prec_t bits);
    BigFloat(const BigFloat& other);
    BigFloat(BigFloat&& other) noexcept;
    BigFloat& operator=(const BigFloat& other);
    BigFloat& operator=(BigFloat&& other) noexcept;
    ~BigFloat();

    static BigFloat pi(mpfr_prec_t bits);
    static BigFloat euler_gamma(mpfr_prec_t bits);
    /// 10^exponent.
    static BigFloat pow10(long exponent, mpfr_prec_t bits);

    [[nodiscard]] mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    [[nodiscard]] double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Scientific notation with `digits` significant digits.
    [[nodiscard]] std::string str(int digits) const;
    [[nodiscard]] bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    [[nodiscard]] int sign() const { return mpfr_sgn(v_); }

    [[nodiscard]] BigFloat abs() const;
    [[nodiscard]] BigFloat log() const;
    [[nodiscard]] BigFloat pow(long exponent) const;

    BigFloat& operator+=(const BigFloat& o);
    BigFloat& operator-=(const BigFloat& o);
    BigFloat& operator*=(const BigFloat& o);
    BigFloat& operator/=(const BigFloat& o);

    friend BigFloat operator+(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator*(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator/(const BigFloat& a, const BigFloat& b);
    friend BigFloat operator-(const BigFloat& a);

    friend bool operator==(const BigFloat& a, const BigFloat& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
    friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b);

    [[nodiscard]] mpfr_srcptr get() const { return v_; }
    [[nodiscard]] mpfr_ptr get() { return v_; }

private:
    mpfr_t v_;
};

}  // namespace eulersum
