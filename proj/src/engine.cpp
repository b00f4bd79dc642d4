#include "eulersum/engine.hpp"

#include <string>
#include <tuple>

#include "eulersum/errors.hpp"
#include "eulersum/normalize.hpp"

namespace eulersum {

Rational CanonicalGroup::coeff_sum() const {
    Rational s;
    for (const auto& [m, c] : coeffs) s += c;
    return s;
}

std::vector<CanonicalGroup> group_canonical(std::span<const CanonicalTerm> terms) {
    std::map<std::pair<int, int>, std::map<int, Rational>> by_key;
    for (const auto& t : terms) {
        if (t.coeff.is_zero()) continue;
        by_key[{t.hexp, t.npow}][t.shift] += t.coeff;
    }
    std::vector<CanonicalGroup> out;
    for (auto& [key, coeffs] : by_key) {
        std::erase_if(coeffs, [](const auto& kv) { return kv.second.is_zero(); });
        if (coeffs.empty()) continue;
        out.push_back({key.first, key.second, std::move(coeffs)});
    }
    return out;
}

std::optional<Divergence> check_convergence(std::span<const CanonicalGroup> groups) {
    for (const auto& g : groups) {
        if (g.npow > 1) continue;
        const Rational s = g.coeff_sum();
        if (!s.is_zero()) return Divergence{g.hexp, g.npow, s};
    }
    return std::nullopt;
}

ClosedForm evaluate_group(const CanonicalGroup& group, const EulerTable& table, const EvaluationOptions& options) {
    const Rational total = group.coeff_sum();
    if (group.npow == 1 && !total.is_zero()) throw DivergentSeries(group.hexp, group.npow, total);

    Rational finite;
    for (const auto& [m, c] : group.coeffs) finite += c * partial_euler(group.hexp, group.npow, m);
    ClosedForm out = ClosedForm::constant(-finite);
    if (total.is_zero()) return out;

    const EulerSumKey key{group.hexp, group.npow};
    if (const auto known = table.lookup(key)) {
        out += total * *known;
    } else if (options.strict) {
        throw NotReducible("EulerSum(" + std::to_string(key.hexp) + "," + std::to_string(key.npow) +
                           ") = sum H[k]^" + std::to_string(key.hexp) + "/k^" + std::to_string(key.npow) +
                           " is not in the table");
    } else {
        out += ClosedForm::symbolic({SumKind::Power, key.hexp, key.npow}, total);
    }
    return out;
}

Evaluation evaluate_series_traced(const SeriesExpression& series, const EulerTable& table,
                                  const EvaluationOptions& options) {
    Evaluation ev;
    ev.canonical = normalize(series);
    const auto groups = group_canonical(ev.canonical);
    if (const auto bad = check_convergence(groups)) throw DivergentSeries(bad->hexp, bad->npow, bad->coeff_sum);
    for (const auto& g : groups) {
        ClosedForm v = evaluate_group(g, table, options);
        ev.value += v;
        ev.groups.push_back({g, std::move(v)});
    }
    return ev;
}

ClosedForm evaluate_series(const SeriesExpression& series, const EulerTable& table,
                           const EvaluationOptions& options) {
    return evaluate_series_traced(series, table, options).value;
}

}  // namespace eulersum
