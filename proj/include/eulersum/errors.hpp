#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "eulersum/rational.hpp"

namespace eulersum {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidTerm : public Error {
public:
    using Error::Error;
};

class IterationOverflow : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t position)
        : Error(message + " at position " + std::to_string(position)), position_(position) {}
    [[nodiscard]] std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

/// Negative or non-integer shift in H[k+m] or (k+a).
class ShiftError : public ParseError {
public:
    using ParseError::ParseError;
};

/// A group with n = 1 whose coefficients do not cancel.
class DivergentSeries : public Error {
public:
    DivergentSeries(int hexp, int npow, Rational coeff_sum)
        : Error("divergent: group (l=" + std::to_string(hexp) + ", n=" + std::to_string(npow) +
                ") has nonzero coefficient sum " + coeff_sum.str()),
          hexp_(hexp), npow_(npow), coeff_sum_(std::move(coeff_sum)) {}
    [[nodiscard]] int hexp() const { return hexp_; }
    [[nodiscard]] int npow() const { return npow_; }
    [[nodiscard]] const Rational& coeff_sum() const { return coeff_sum_; }

private:
    int hexp_;
    int npow_;
    Rational coeff_sum_;
};

class NotReducible : public Error {
public:
    using Error::Error;
};

class UnsupportedProduct : public Error {
public:
    using Error::Error;
};

}  // namespace eulersum
