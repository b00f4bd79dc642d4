#include "eulersum/normalize.hpp"

#include <stdexcept>
#include <string>
#include <tuple>

#include "eulersum/errors.hpp"
#include "eulersum/euler_table.hpp"

namespace eulersum {

namespace {

using ShiftPowers = std::map<int, int>;

// Pending term: coefficient attached to (harmonic shift -> exponent, denominator shift -> power).
using Signature = std::pair<ShiftPowers, ShiftPowers>;
using CanonicalKey = std::tuple<int, int, int>;

// Taylor coefficients in x of (x + d)^{-p} up to x^order.
std::vector<Rational> inverse_power_series(int d, int p, int order) {
    std::vector<Rational> out;
    const Rational inv_d = Rational(1, d);
    const Rational lead = inv_d.pow(static_cast<unsigned>(p));
    Rational scale = lead;
    for (int r = 0; r <= order; ++r) {
        out.push_back(binomial(-p, r) * scale);
        scale *= inv_d;
    }
    return out;
}

std::vector<Rational> truncated_product(const std::vector<Rational>& a, const std::vector<Rational>& b,
                                        int order) {
    std::vector<Rational> out(static_cast<std::size_t>(order) + 1);
    for (int i = 0; i <= order && i < static_cast<int>(a.size()); ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; i + j <= order && j < static_cast<int>(b.size()); ++j) out[i + j] += a[i] * b[j];
    }
    return out;
}

// Expansion of a product of shifted harmonics over a common base:
// (power of H_{k+base}, unit-fraction denominators) -> coefficient.
using Expansion = std::map<std::pair<int, ShiftPowers>, Rational>;

Expansion multiply(const Expansion& e, const ShiftedHarmonic& h) {
    Expansion out;
    for (const auto& [key, c] : e) {
        out[{key.first + 1, key.second}] += c;
        for (const auto& u : h.tail) {
            ShiftPowers d = key.second;
            d[u.shift] += 1;
            out[{key.first, std::move(d)}] += c * Rational(u.sign);
        }
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

}  // namespace

PartialFractions partial_fraction(std::span<const DenominatorFactor> denoms) {
    if (denoms.empty()) throw std::invalid_argument("partial_fraction: empty factor list");
    for (std::size_t i = 0; i < denoms.size(); ++i)
        for (std::size_t j = i + 1; j < denoms.size(); ++j)
            if (denoms[i].shift == denoms[j].shift)
                throw std::invalid_argument("partial_fraction: repeated shift");

    PartialFractions out;
    for (const auto& f : denoms) {
        const int order = f.power - 1;
        // Around k = -a the other factors are (x + (a_i - a))^{-p_i}, x = k + a.
        std::vector<Rational> series{Rational(1)};
        for (const auto& g : denoms) {
            if (g.shift == f.shift) continue;
            series = truncated_product(series, inverse_power_series(g.shift - f.shift, g.power, order), order);
        }
        for (int j = 0; j <= order; ++j) {
            if (j < static_cast<int>(series.size()) && !series[j].is_zero())
                out[{f.shift, f.power - j}] = series[j];
        }
    }
    return out;
}

ShiftedHarmonic shift_harmonic(int from, int to) {
    if (from < 0 || to < 0) throw std::invalid_argument("shift_harmonic: negative shift");
    ShiftedHarmonic out{to, {}};
    if (from > to) {
        for (int t = to + 1; t <= from; ++t) out.tail.push_back({t, +1});
    } else {
        for (int t = from + 1; t <= to; ++t) out.tail.push_back({t, -1});
    }
    return out;
}

NormalizationResult normalize_traced(const GeneralTerm& term) {
    const int limit = term.harmonic_degree() + 1;
    std::map<CanonicalKey, Rational> result;
    std::map<Signature, Rational> pending;
    {
        Signature sig;
        for (const auto& h : term.harmonics()) sig.first[h.shift] = h.exponent;
        for (const auto& d : term.denoms()) sig.second[d.shift] = d.power;
        pending[sig] = term.coeff();
    }

    int passes = 0;
    while (!pending.empty()) {
        if (++passes > limit)
            throw IterationOverflow("normalization exceeded " + std::to_string(limit) + " passes");
        std::map<Signature, Rational> next;
        for (const auto& [sig, coeff] : pending) {
            std::vector<DenominatorFactor> denoms;
            for (auto [s, p] : sig.second) denoms.push_back({s, p});
            for (const auto& [frac, alpha] : partial_fraction(denoms)) {
                const Rational c = coeff * alpha;
                Expansion e{{{0, {}}, Rational(1)}};
                for (auto [m, exponent] : sig.first) {
                    const auto rewritten = shift_harmonic(m, frac.shift);
                    for (int i = 0; i < exponent; ++i) e = multiply(e, rewritten);
                }
                for (const auto& [key, beta] : e) {
                    const auto& [hpow, extra] = key;
                    if (extra.empty()) {
                        result[{hpow, frac.shift, frac.power}] += c * beta;
                        continue;
                    }
                    Signature s;
                    if (hpow > 0) s.first[frac.shift] = hpow;
                    s.second = extra;
                    s.second[frac.shift] += frac.power;
                    next[s] += c * beta;
                }
            }
        }
        std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
        pending = std::move(next);
    }

    NormalizationResult out;
    out.passes = passes;
    for (const auto& [key, c] : result) {
        if (c.is_zero()) continue;
        const auto [l, m, n] = key;
        out.terms.push_back({c, l, m, n});
    }
    return out;
}

std::vector<CanonicalTerm> normalize(const GeneralTerm& term) { return normalize_traced(term).terms; }

std::vector<CanonicalTerm> normalize(const SeriesExpression& series) {
    std::map<CanonicalKey, Rational> merged;
    for (const auto& t : series.terms())
        for (const auto& c : normalize(t)) merged[{c.hexp, c.shift, c.npow}] += c.coeff;
    std::vector<CanonicalTerm> out;
    for (const auto& [key, c] : merged) {
        if (c.is_zero()) continue;
        const auto [l, m, n] = key;
        out.push_back({c, l, m, n});
    }
    return out;
}

Rational eval_term_at(const GeneralTerm& term, long k) {
    if (k < 1) throw std::invalid_argument("eval_term_at: k must be >= 1");
    Rational v = term.coeff();
    for (const auto& h : term.harmonics()) v *= harmonic(k + h.shift).pow(static_cast<unsigned>(h.exponent));
    for (const auto& d : term.denoms()) v /= Rational(k + d.shift).pow(static_cast<unsigned>(d.power));
    return v;
}

Rational eval_term_at(const CanonicalTerm& term, long k) {
    if (k < 1) throw std::invalid_argument("eval_term_at: k must be >= 1");
    return term.coeff * harmonic(k + term.shift).pow(static_cast<unsigned>(term.hexp)) /
           Rational(k + term.shift).pow(static_cast<unsigned>(term.npow));
}

Rational eval_term_at(const SeriesExpression& series, long k) {
    Rational v;
    for (const auto& t : series.terms()) v += eval_term_at(t, k);
    return v;
}

}  // namespace eulersum
