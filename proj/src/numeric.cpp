#include "eulersum/numeric.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <vector>

#include "eulersum/asymptotic.hpp"
#include "eulersum/engine.hpp"
#include "eulersum/errors.hpp"
#include "eulersum/normalize.hpp"
#include "json.hpp"

namespace eulersum {

namespace {

constexpr long kChunkSize = 4096;
// Orders of the tail expansion kept beyond the leading one.
constexpr int kTailOrders = 14;

mpfr_prec_t working_bits(int digits) { return bits_for_digits(digits + kGuardDigits); }

void check_options(const SummationOptions& o) {
    if (o.terms < 10) throw std::invalid_argument("need at least 10 terms");
    if (o.terms > 1'000'000'000L) throw std::invalid_argument("at most 1e9 terms");
    if (o.digits < 10) throw std::invalid_argument("need at least 10 digits");
}

// Requested-precision floor; dominates rounding in the partial sums for K <= 1e9.
BigFloat precision_floor(int digits, mpfr_prec_t bits) { return BigFloat::pow10(-digits, bits); }

// Sums f(k) for k = 1..K in fixed chunks combined in index order, so the
// result is the same for any number of workers.
template <typename F>
BigFloat chunked_sum(long K, int workers, mpfr_prec_t bits, const F& f) {
    const long chunks = (K + kChunkSize - 1) / kChunkSize;
    std::vector<BigFloat> partial(static_cast<std::size_t>(chunks), BigFloat(bits));
    auto run = [&](long first_chunk, long stride) {
        for (long c = first_chunk; c < chunks; c += stride) {
            BigFloat s(bits);
            const long lo = c * kChunkSize + 1;
            const long hi = std::min(K, lo + kChunkSize - 1);
            for (long k = lo; k <= hi; ++k) s += f(k);
            partial[static_cast<std::size_t>(c)] = std::move(s);
        }
    };
    const long n = std::clamp<long>(workers, 1, chunks);
    if (n == 1) {
        run(0, 1);
    } else {
        std::vector<std::jthread> pool;
        for (long w = 0; w < n; ++w) pool.emplace_back(run, w, n);
    }
    BigFloat total(bits);
    for (const auto& p : partial) total += p;
    return total;
}

struct ZetaCache {
    std::mutex mutex;
    std::map<std::pair<int, int>, NumericValue> values;
};

ZetaCache& zeta_cache() {
    static ZetaCache cache;
    return cache;
}

}  // namespace

std::string NumericValue::str(int digits) const { return value.str(digits) + " +- " + error_bound.str(3); }

NumericValue zeta_numeric(int n, int digits) {
    if (n < 2) throw std::invalid_argument("zeta_numeric: n must be >= 2");
    if (digits < 10) throw std::invalid_argument("zeta_numeric: need at least 10 digits");
    {
        std::lock_guard lock(zeta_cache().mutex);
        const auto it = zeta_cache().values.find({n, digits});
        if (it != zeta_cache().values.end()) return it->second;
    }
    const mpfr_prec_t bits = working_bits(digits);
    const long N = digits + kGuardDigits;
    const BigFloat target = BigFloat::pow10(-(digits + kGuardDigits), bits);

    // zeta(s) = sum_{k<N} k^{-s} + N^{1-s}/(s-1) + N^{-s}/2 + sum_j B_{2j}/(2j)! (s)_{2j-1} N^{-s-2j+1} + R
    BigFloat sum(bits);
    for (long k = 1; k < N; ++k) sum += BigFloat(k, bits).pow(-n);
    const BigFloat bn(N, bits);
    sum += bn.pow(1 - n) / BigFloat(n - 1, bits);
    sum += bn.pow(-n) / BigFloat(2, bits);

    Rational rising(n);  // (s)_{2j-1}
    Rational factorial(2);
    BigFloat remainder(bits);
    for (int j = 1;; ++j) {
        const BigFloat term = BigFloat(bernoulli(2 * j) / factorial * rising, bits) * bn.pow(-n - 2 * j + 1);
        if (term.abs() < target || j > 4 * N) {
            // For x^{-s} the remainder is bounded by the first omitted term.
            remainder = term.abs();
            break;
        }
        sum += term;
        rising *= Rational((n + 2 * j - 1) * static_cast<long>(n + 2 * j));
        factorial *= Rational((2 * j + 1) * static_cast<long>(2 * j + 2));
    }
    NumericValue out{sum, BigFloat(2, bits) * remainder + BigFloat::pow10(-(digits + kGuardDigits - 2), bits)};
    std::lock_guard lock(zeta_cache().mutex);
    zeta_cache().values.emplace(std::pair{n, digits}, out);
    return out;
}

SeriesEstimate series_numeric(const SeriesExpression& series, const SummationOptions& options) {
    check_options(options);
    {
        const auto canonical = normalize(series);
        const auto groups = group_canonical(canonical);
        if (const auto bad = check_convergence(groups)) throw DivergentSeries(bad->hexp, bad->npow, bad->coeff_sum);
    }
    const mpfr_prec_t bits = working_bits(options.digits);
    const long K = options.terms;

    int max_shift = 0;
    int min_power = 1 << 20;
    for (const auto& t : series.terms()) {
        max_shift = std::max(max_shift, t.max_shift());
        min_power = std::min(min_power, t.denominator_degree());
    }
    if (series.empty()) {
        BigFloat zero(bits);
        return {zero, zero, {zero, precision_floor(options.digits, bits)}};
    }

    std::vector<BigFloat> h;
    h.reserve(static_cast<std::size_t>(K + max_shift) + 1);
    h.emplace_back(bits);
    for (long j = 1; j <= K + max_shift; ++j) h.push_back(h.back() + BigFloat(1, bits) / BigFloat(j, bits));

    struct Prepared {
        BigFloat coeff;
        const GeneralTerm* term;
    };
    std::vector<Prepared> prepared;
    for (const auto& t : series.terms()) prepared.push_back({BigFloat(t.coeff(), bits), &t});

    const BigFloat partial = chunked_sum(K, options.workers, bits, [&](long k) {
        BigFloat s(bits);
        for (const auto& p : prepared) {
            BigFloat num = p.coeff;
            for (const auto& f : p.term->harmonics()) num *= h[static_cast<std::size_t>(k + f.shift)].pow(f.exponent);
            BigFloat den(1, bits);
            for (const auto& f : p.term->denoms()) den *= BigFloat(k + f.shift, bits).pow(f.power);
            s += num / den;
        }
        return s;
    });

    const int usable = min_power + kTailOrders;
    const AsymptoticSeries expansion = AsymptoticSeries::of(series, usable + 2);
    if (const auto lead = expansion.leading_order(); lead && *lead <= 1)
        throw DivergentSeries(0, 1, Rational(0));
    const TailEstimate tail = tail_sum(expansion, K, usable, bits);

    SeriesEstimate out{partial, tail.value, {partial + tail.value, tail.error + precision_floor(options.digits, bits)}};
    return out;
}

NumericValue generalized_sum_numeric(int m, int n, const SummationOptions& options) {
    check_options(options);
    if (m < 2 || n < 2) throw std::invalid_argument("generalized_sum_numeric: need m, n >= 2");
    const mpfr_prec_t bits = working_bits(options.digits);
    const long K = options.terms;
    std::vector<BigFloat> hm;
    hm.reserve(static_cast<std::size_t>(K) + 1);
    hm.emplace_back(bits);
    for (long j = 1; j <= K; ++j) hm.push_back(hm.back() + BigFloat(j, bits).pow(-m));
    const BigFloat partial = chunked_sum(K, options.workers, bits, [&](long k) {
        return hm[static_cast<std::size_t>(k)] / BigFloat(k, bits).pow(n);
    });
    // H_k^{(m)} = zeta(m) - r_k with 0 < r_k < k^{1-m}/(m-1), so the tail is
    // zeta(m) * sum_{k>K} k^{-n} up to at most 1/((m-1)(m+n-2) K^{m+n-2}).
    const NumericValue zm = zeta_numeric(m, options.digits);
    const AsymptoticSeries power = AsymptoticSeries::inverse_linear(0, n, n + kTailOrders + 2);
    const TailEstimate t = tail_sum(power, K, n + kTailOrders, bits);
    const BigFloat tail = zm.value * t.value;
    BigFloat err = BigFloat(Rational(1, static_cast<long>(m - 1) * (m + n - 2)), bits) * BigFloat(K, bits).pow(-(m + n - 2));
    err += zm.value * t.error + zm.error_bound * t.value.abs();
    return {partial + tail, err + precision_floor(options.digits, bits)};
}

NumericValue closed_form_numeric(const ClosedForm& value, const SummationOptions& options) {
    const mpfr_prec_t bits = working_bits(options.digits);
    BigFloat sum(bits);
    BigFloat err(bits);
    for (const auto& [m, c] : value.coeffs()) {
        // product with first-order error propagation: |d(xy)| <= |x| dy + |y| dx + dx dy
        BigFloat prod(1, bits);
        BigFloat perr(bits);
        for (int a : m.args()) {
            const NumericValue z = zeta_numeric(a, options.digits);
            const BigFloat next = prod * z.value;
            perr = prod.abs() * z.error_bound + z.value.abs() * perr + perr * z.error_bound;
            prod = next;
        }
        const BigFloat cf(c, bits);
        sum += cf * prod;
        err += cf.abs() * perr;
    }
    for (const auto& [s, c] : value.symbolics()) {
        NumericValue v{BigFloat(bits), BigFloat(bits)};
        if (s.kind == SumKind::Power) {
            std::vector<HarmonicFactor> hf;
            if (s.order > 0) hf.push_back({0, s.order});
            const SeriesExpression defining{GeneralTerm(Rational(1), hf, {{0, s.npow}})};
            v = series_numeric(defining, options).total;
        } else {
            v = generalized_sum_numeric(s.order, s.npow, options);
        }
        const BigFloat cf(c, bits);
        sum += cf * v.value;
        err += cf.abs() * v.error_bound;
    }
    return {sum, err + precision_floor(options.digits + kGuardDigits - 2, bits)};
}

BigFloat VerifyReport::tolerance() const { return series.total.error_bound + closed_form.error_bound; }

std::string VerifyReport::text() const {
    std::string out;
    out += std::string(pass ? "pass" : "FAIL") + "\n";
    out += "series       " + series.total.value.str(digits) + "\n";
    out += "closed form  " + closed_form.value.str(digits) + "\n";
    out += "residual     " + residual.str(6) + "\n";
    out += "bound        " + tolerance().str(6) + "\n";
    out += "partial sum  " + series.partial_sum.str(digits) + "\n";
    out += "tail         " + series.tail.str(6) + "\n";
    out += "terms        " + std::to_string(terms) + "\n";
    out += "digits       " + std::to_string(digits) + "\n";
    return out;
}

std::string VerifyReport::json() const {
    nlohmann::ordered_json j;
    j["pass"] = pass;
    j["residual"] = residual.str(6);
    j["bound"] = tolerance().str(6);
    j["series_value"] = series.total.value.str(digits);
    j["series_bound"] = series.total.error_bound.str(6);
    j["closed_form_value"] = closed_form.value.str(digits);
    j["closed_form_bound"] = closed_form.error_bound.str(6);
    j["partial_sum"] = series.partial_sum.str(digits);
    j["tail"] = series.tail.str(6);
    j["K"] = terms;
    j["digits"] = digits;
    return j.dump();
}

VerifyReport verify(const SeriesExpression& series, const ClosedForm& value, const SummationOptions& options) {
    VerifyReport r{false, BigFloat(2), series_numeric(series, options), closed_form_numeric(value, options),
                   options.terms, options.digits};
    r.residual = (r.series.total.value - r.closed_form.value).abs();
    r.pass = r.residual <= r.tolerance();
    return r;
}

}  // namespace eulersum
