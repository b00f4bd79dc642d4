#include "eulersum/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace eulersum {

Rational::Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    const std::string s(text);
    const auto slash = s.find('/');
    mpz_class num;
    mpz_class den{1};
    auto read = [](const std::string& part, mpz_class& out) {
        std::string digits = part;
        if (!digits.empty() && digits.front() == '+') digits.erase(0, 1);
        if (digits.empty() || out.set_str(digits, 10) != 0)
            throw std::invalid_argument("malformed rational: '" + part + "'");
    };
    if (slash == std::string::npos) {
        read(s, num);
    } else {
        read(s.substr(0, slash), num);
        read(s.substr(slash + 1), den);
    }
    return Rational(num, den);
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(v_))); }

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero");
    return Rational(v_.get_den(), v_.get_num());
}

Rational Rational::pow(unsigned exponent) const {
    mpz_class n;
    mpz_class d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num_mpz_t(), exponent);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den_mpz_t(), exponent);
    return Rational(n, d);
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    v_ /= o.v_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational binomial(long n, long k) {
    if (k < 0) return Rational(0);
    Rational result(1);
    for (long i = 0; i < k; ++i) result *= Rational(n - i, i + 1);
    return result;
}

}  // namespace eulersum
