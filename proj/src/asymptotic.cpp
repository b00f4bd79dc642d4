#include "eulersum/asymptotic.hpp"

#include <stdexcept>

#include "eulersum/closed_form.hpp"

namespace eulersum {

AsymptoticSeries AsymptoticSeries::harmonic(int shift, int max_order) {
    AsymptoticSeries h(max_order);
    h.add({0, 1}, Rational(1));
    h.add({1, 0}, Rational(1, 2));
    for (int j = 2; j <= max_order; j += 2) h.add({j, 0}, -bernoulli(j) / Rational(j));
    // H_{x+m} = H_x + sum_{t=1}^m 1/(x+t)
    for (int t = 1; t <= shift; ++t) h += inverse_linear(t, 1, max_order);
    return h;
}

AsymptoticSeries AsymptoticSeries::inverse_linear(int shift, int power, int max_order) {
    // (x+a)^{-p} = x^{-p} sum_r C(-p, r) a^r x^{-r}
    AsymptoticSeries s(max_order);
    Rational a_pow(1);
    for (int r = 0; power + r <= max_order; ++r) {
        s.add({power + r, 0}, binomial(-power, r) * a_pow);
        a_pow *= Rational(shift);
    }
    return s;
}

AsymptoticSeries AsymptoticSeries::of(const GeneralTerm& term, int max_order) {
    AsymptoticSeries out(max_order);
    out.add({0, 0}, term.coeff());
    for (const auto& d : term.denoms()) out = out * inverse_linear(d.shift, d.power, max_order);
    for (const auto& h : term.harmonics()) {
        const auto base = harmonic(h.shift, max_order);
        for (int i = 0; i < h.exponent; ++i) out = out * base;
    }
    return out;
}

AsymptoticSeries AsymptoticSeries::of(const SeriesExpression& series, int max_order) {
    AsymptoticSeries out(max_order);
    for (const auto& t : series.terms()) out += of(t, max_order);
    return out;
}

std::optional<int> AsymptoticSeries::leading_order() const {
    if (coeffs_.empty()) return std::nullopt;
    return coeffs_.begin()->first.first;
}

void AsymptoticSeries::add(Key key, const Rational& c) {
    if (key.first > max_order_ || c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

AsymptoticSeries& AsymptoticSeries::operator+=(const AsymptoticSeries& o) {
    for (const auto& [k, c] : o.coeffs_) add(k, c);
    return *this;
}

AsymptoticSeries& AsymptoticSeries::operator*=(const Rational& r) {
    if (r.is_zero()) coeffs_.clear();
    for (auto& [k, c] : coeffs_) c *= r;
    return *this;
}

AsymptoticSeries operator*(const AsymptoticSeries& a, const AsymptoticSeries& b) {
    AsymptoticSeries out(std::min(a.max_order_, b.max_order_));
    for (const auto& [ka, ca] : a.coeffs_) {
        for (const auto& [kb, cb] : b.coeffs_) {
            if (ka.first + kb.first > out.max_order_) break;  // inner keys ascend in a
            out.add({ka.first + kb.first, ka.second + kb.second}, ca * cb);
        }
    }
    return out;
}

AsymptoticSeries AsymptoticSeries::derivative() const {
    // d/dx x^{-a} lambda^i = -a x^{-a-1} lambda^i + i x^{-a-1} lambda^{i-1}
    AsymptoticSeries out(max_order_ + 1);
    for (const auto& [k, c] : coeffs_) {
        const auto [a, i] = k;
        out.add({a + 1, i}, c * Rational(-a));
        if (i > 0) out.add({a + 1, i - 1}, c * Rational(i));
    }
    return out;
}

AsymptoticSeries AsymptoticSeries::slice(int order) const {
    AsymptoticSeries out(max_order_);
    for (const auto& [k, c] : coeffs_)
        if (k.first == order) out.add(k, c);
    return out;
}

AsymptoticSeries AsymptoticSeries::truncated(int order) const {
    AsymptoticSeries out(order);
    for (const auto& [k, c] : coeffs_) out.add(k, c);
    return out;
}

BigFloat AsymptoticSeries::evaluate(const BigFloat& x, const BigFloat& lambda) const {
    const mpfr_prec_t bits = std::max(x.precision(), lambda.precision());
    BigFloat sum(bits);
    const BigFloat inv = BigFloat(1, bits) / x;
    for (const auto& [k, c] : coeffs_) sum += BigFloat(c, bits) * inv.pow(k.first) * lambda.pow(k.second);
    return sum;
}

namespace {

// integral_K^infinity x^{-a} lambda^i dx = K^{1-a} sum_{r<=i} i!/(i-r)! lambda_K^{i-r} / (a-1)^{r+1}
BigFloat monomial_integral(int a, int i, const BigFloat& K, const BigFloat& lambda) {
    if (a < 2) throw std::domain_error("tail integral diverges for x^{-1}");
    const mpfr_prec_t bits = std::max(K.precision(), lambda.precision());
    BigFloat acc(bits);
    Rational falling(1);
    for (int r = 0; r <= i; ++r) {
        acc += BigFloat(falling / Rational(a - 1).pow(static_cast<unsigned>(r + 1)), bits) * lambda.pow(i - r);
        falling *= Rational(i - r);
    }
    return acc * K.pow(1 - a);
}

}  // namespace

BigFloat AsymptoticSeries::integral_from(const BigFloat& K, const BigFloat& lambda) const {
    BigFloat sum(std::max(K.precision(), lambda.precision()));
    for (const auto& [k, c] : coeffs_) sum += BigFloat(c, sum.precision()) * monomial_integral(k.first, k.second, K, lambda);
    return sum;
}

BigFloat AsymptoticSeries::abs_integral_from(const BigFloat& K, const BigFloat& lambda) const {
    BigFloat sum(std::max(K.precision(), lambda.precision()));
    for (const auto& [k, c] : coeffs_)
        sum += BigFloat(c.abs(), sum.precision()) * monomial_integral(k.first, k.second, K, lambda);
    return sum;
}

TailEstimate tail_sum(const AsymptoticSeries& f, long K, int usable_order, mpfr_prec_t bits, int em_terms) {
    const BigFloat x(K, bits);
    const BigFloat lambda = x.log() + BigFloat::euler_gamma(bits);
    const AsymptoticSeries g = f.truncated(usable_order);

    // sum_{k>K} g(k) = int_K^inf g - g(K)/2 - sum_j B_{2j}/(2j)! g^{(2j-1)}(K) + R
    BigFloat value = g.integral_from(x, lambda) - g.evaluate(x, lambda) / BigFloat(2, bits);
    AsymptoticSeries d = g.derivative();
    Rational factorial(1);
    BigFloat em_error(bits);
    for (int j = 1; j <= em_terms + 1; ++j) {
        factorial *= Rational((2 * j - 1) * (2 * j));
        const BigFloat term = BigFloat(bernoulli(2 * j) / factorial, bits) * d.evaluate(x, lambda);
        if (j <= em_terms) {
            value -= term;
        } else {
            em_error = term.abs();
        }
        d = d.derivative().derivative();
    }

    BigFloat truncation(bits);
    for (int a = usable_order + 1; a <= usable_order + 2 && a <= f.max_order(); ++a) {
        const AsymptoticSeries block = f.slice(a);
        truncation += block.abs_integral_from(x, lambda) + block.evaluate(x, lambda).abs();
    }
    BigFloat two(2, bits);
    return {value, two * (truncation + em_error)};
}

}  // namespace eulersum
