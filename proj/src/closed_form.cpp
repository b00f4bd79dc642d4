#include "eulersum/closed_form.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "eulersum/errors.hpp"
#include "json.hpp"

namespace eulersum {

ZetaMonomial::ZetaMonomial(std::vector<int> args) : args_(std::move(args)) {
    for (int a : args_)
        if (a < 2) throw std::invalid_argument("zeta argument must be >= 2, got " + std::to_string(a));
    std::sort(args_.begin(), args_.end());
}

int ZetaMonomial::weight() const {
    int w = 0;
    for (int a : args_) w += a;
    return w;
}

ZetaMonomial operator*(const ZetaMonomial& a, const ZetaMonomial& b) {
    std::vector<int> merged = a.args_;
    merged.insert(merged.end(), b.args_.begin(), b.args_.end());
    return ZetaMonomial(std::move(merged));
}

ClosedForm ClosedForm::constant(const Rational& value) { return monomial(ZetaMonomial{}, value); }

ClosedForm ClosedForm::zeta(int arg, const Rational& coeff) { return monomial(ZetaMonomial({arg}), coeff); }

ClosedForm ClosedForm::monomial(const ZetaMonomial& m, const Rational& coeff) {
    ClosedForm cf;
    cf.add_monomial(m, coeff);
    return cf;
}

ClosedForm ClosedForm::symbolic(const SymbolicSum& s, const Rational& coeff) {
    if (s.npow < 2 || s.order < 0) throw std::invalid_argument("symbolic sum must have n >= 2");
    ClosedForm cf;
    cf.add_symbolic(s, coeff);
    return cf;
}

Rational ClosedForm::rational_part() const { return coeff_of(ZetaMonomial{}); }

Rational ClosedForm::coeff_of(const ZetaMonomial& m) const {
    const auto it = coeffs_.find(m);
    return it == coeffs_.end() ? Rational(0) : it->second;
}

void ClosedForm::add_monomial(const ZetaMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = coeffs_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
}

void ClosedForm::add_symbolic(const SymbolicSum& s, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = symbolic_.try_emplace(s, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) symbolic_.erase(it);
    }
}

ClosedForm& ClosedForm::operator+=(const ClosedForm& o) {
    for (const auto& [m, c] : o.coeffs_) add_monomial(m, c);
    for (const auto& [s, c] : o.symbolic_) add_symbolic(s, c);
    return *this;
}

ClosedForm& ClosedForm::operator-=(const ClosedForm& o) {
    for (const auto& [m, c] : o.coeffs_) add_monomial(m, -c);
    for (const auto& [s, c] : o.symbolic_) add_symbolic(s, -c);
    return *this;
}

ClosedForm& ClosedForm::operator*=(const Rational& r) {
    if (r.is_zero()) {
        coeffs_.clear();
        symbolic_.clear();
        return *this;
    }
    for (auto& [m, c] : coeffs_) c *= r;
    for (auto& [s, c] : symbolic_) c *= r;
    return *this;
}

ClosedForm operator*(const ClosedForm& a, const ClosedForm& b) {
    const auto pure_rational = [](const ClosedForm& f) {
        return f.symbolics().empty() && (f.coeffs().empty() ||
                                         (f.coeffs().size() == 1 && f.coeffs().begin()->first.args().empty()));
    };
    if (pure_rational(a)) return a.rational_part() * b;
    if (pure_rational(b)) return b.rational_part() * a;
    if (a.has_symbolic() || b.has_symbolic())
        throw UnsupportedProduct("product involving a symbolic Euler-sum constant");
    ClosedForm out;
    for (const auto& [ma, ca] : a.coeffs_)
        for (const auto& [mb, cb] : b.coeffs_) out.add_monomial(ma * mb, ca * cb);
    return out;
}

namespace {

struct Piece {
    Rational coeff;
    std::string body;  // empty for a bare rational
};

std::string join_text(const std::vector<Piece>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& p = pieces[i];
        const bool negative = p.coeff.sign() < 0;
        if (i == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = p.coeff.abs();
        if (p.body.empty()) {
            out += mag.str();
        } else if (mag == Rational(1)) {
            out += p.body;
        } else {
            out += mag.str() + "*" + p.body;
        }
    }
    return out;
}

std::string latex_coeff(const Rational& mag) {
    if (mag.is_integer()) return mag.str();
    return "\\frac{" + mag.num().get_str() + "}{" + mag.den().get_str() + "}";
}

std::string join_latex(const std::vector<Piece>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        const auto& p = pieces[i];
        const bool negative = p.coeff.sign() < 0;
        if (i == 0) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        const Rational mag = p.coeff.abs();
        if (p.body.empty()) {
            out += latex_coeff(mag);
        } else if (mag == Rational(1)) {
            out += p.body;
        } else {
            out += latex_coeff(mag) + p.body;
        }
    }
    return out;
}

// Runs of equal arguments, in ascending order.
std::vector<std::pair<int, int>> runs(const std::vector<int>& args) {
    std::vector<std::pair<int, int>> out;
    for (int a : args) {
        if (!out.empty() && out.back().first == a) {
            ++out.back().second;
        } else {
            out.emplace_back(a, 1);
        }
    }
    return out;
}

std::string zeta_text(const ZetaMonomial& m) {
    std::string out;
    for (auto [arg, count] : runs(m.args())) {
        if (!out.empty()) out += "*";
        out += "zeta(" + std::to_string(arg) + ")";
        if (count > 1) out += "^" + std::to_string(count);
    }
    return out;
}

std::string zeta_latex(const ZetaMonomial& m) {
    std::string out;
    for (auto [arg, count] : runs(m.args())) {
        out += "\\zeta(" + std::to_string(arg) + ")";
        if (count > 1) out += "^{" + std::to_string(count) + "}";
    }
    return out;
}

std::string symbolic_text(const SymbolicSum& s) {
    const char* name = s.kind == SumKind::Power ? "EulerSum" : "S";
    return std::string(name) + "(" + std::to_string(s.order) + "," + std::to_string(s.npow) + ")";
}

std::string symbolic_latex(const SymbolicSum& s) {
    const char* name = s.kind == SumKind::Power ? "\\mathtt{E}" : "\\mathtt{S}";
    return std::string(name) + "_{" + std::to_string(s.order) + "," + std::to_string(s.npow) + "}";
}

std::vector<Piece> pieces(const ClosedForm& cf, Format style) {
    std::vector<Piece> out;
    for (const auto& [m, c] : cf.coeffs())
        out.push_back({c, style == Format::Latex ? zeta_latex(m) : zeta_text(m)});
    for (const auto& [s, c] : cf.symbolics())
        out.push_back({c, style == Format::Latex ? symbolic_latex(s) : symbolic_text(s)});
    return out;
}

std::string to_json(const ClosedForm& cf) {
    nlohmann::ordered_json j;
    j["rational"] = cf.rational_part().str();
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& [m, c] : cf.coeffs()) {
        if (m.is_unit()) continue;
        nlohmann::ordered_json t;
        t["zeta_args"] = m.args();
        t["coeff"] = c.str();
        j["terms"].push_back(t);
    }
    j["symbolic"] = nlohmann::ordered_json::array();
    for (const auto& [s, c] : cf.symbolics()) {
        nlohmann::ordered_json t;
        t["kind"] = s.kind == SumKind::Power ? "E" : "S";
        t["l"] = s.order;
        t["n"] = s.npow;
        t["coeff"] = c.str();
        j["symbolic"].push_back(t);
    }
    return j.dump();
}

}  // namespace

std::string format(const ClosedForm& value, Format style) {
    switch (style) {
        case Format::Text: return join_text(pieces(value, style));
        case Format::Latex: return join_latex(pieces(value, style));
        case Format::Json: return to_json(value);
    }
    return {};
}

Rational bernoulli(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli: negative index");
    static std::mutex mutex;
    static std::vector<Rational> cache{Rational(1)};
    std::lock_guard lock(mutex);
    while (static_cast<int>(cache.size()) <= n) {
        // sum_{k=0}^{m} C(m+1, k) B_k = 0
        const long m = static_cast<long>(cache.size());
        Rational acc;
        for (long k = 0; k < m; ++k) acc += binomial(m + 1, k) * cache[static_cast<std::size_t>(k)];
        cache.push_back(-acc / Rational(m + 1));
    }
    return cache[static_cast<std::size_t>(n)];
}

Rational even_zeta_pi_coefficient(int two_n) {
    if (two_n < 2 || two_n % 2 != 0) throw std::invalid_argument("even_zeta_pi_coefficient: need even n >= 2");
    // zeta(2n) = (-1)^{n+1} B_{2n} (2 pi)^{2n} / (2 (2n)!)
    const int n = two_n / 2;
    Rational factorial(1);
    for (int i = 2; i <= two_n; ++i) factorial *= Rational(i);
    Rational r = bernoulli(two_n) * Rational(2).pow(static_cast<unsigned>(two_n - 1)) / factorial;
    return n % 2 == 1 ? r : -r;
}

PiForm even_zeta_to_pi(const ClosedForm& value) {
    if (value.has_symbolic()) throw std::invalid_argument("even_zeta_to_pi: symbolic constants present");
    PiForm out;
    for (const auto& [m, c] : value.coeffs()) {
        PiMonomial pm;
        Rational coeff = c;
        for (int a : m.args()) {
            if (a % 2 == 0) {
                pm.pi_power += a;
                coeff *= even_zeta_pi_coefficient(a);
            } else {
                pm.odd_args.push_back(a);
            }
        }
        out[pm] += coeff;
    }
    std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
    return out;
}

std::string format(const PiForm& value, Format style) {
    if (style == Format::Json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& [pm, c] : value) {
            nlohmann::ordered_json t;
            t["pi_power"] = pm.pi_power;
            t["zeta_args"] = pm.odd_args;
            t["coeff"] = c.str();
            j.push_back(t);
        }
        return j.dump();
    }
    std::vector<Piece> ps;
    for (const auto& [pm, c] : value) {
        std::string body;
        if (pm.pi_power > 0) {
            if (style == Format::Latex) {
                body = "\\pi^{" + std::to_string(pm.pi_power) + "}";
            } else {
                body = "pi^" + std::to_string(pm.pi_power);
            }
        }
        const ZetaMonomial odd(pm.odd_args);
        const std::string z = style == Format::Latex ? zeta_latex(odd) : zeta_text(odd);
        if (!z.empty()) body += (body.empty() || style == Format::Latex) ? z : "*" + z;
        ps.push_back({c, body});
    }
    return style == Format::Latex ? join_latex(ps) : join_text(ps);
}

}  // namespace eulersum
