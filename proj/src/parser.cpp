#include "eulersum/parser.hpp"

#include <cctype>
#include <optional>
#include <vector>

#include "eulersum/errors.hpp"
#include "json.hpp"

namespace eulersum {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view src) : src_(src) {}

    void skip_ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    [[nodiscard]] bool at_end() {
        skip_ws();
        return pos_ >= src_.size();
    }
    [[nodiscard]] char peek() {
        skip_ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }
    bool accept(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c) {
        if (!accept(c)) fail(std::string("expected '") + c + "'");
    }
    [[nodiscard]] bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    std::string digits() {
        if (!peek_digit()) fail("expected an integer");
        std::string out;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) out += src_[pos_++];
        return out;
    }

    int small_int() {
        const std::size_t start = position();
        const std::string d = digits();
        if (d.size() > 6) throw ParseError("integer too large", start);
        return std::stoi(d);
    }

    std::string word() {
        skip_ws();
        std::string out;
        while (pos_ < src_.size() && std::isalpha(static_cast<unsigned char>(src_[pos_]))) out += src_[pos_++];
        return out;
    }

    [[nodiscard]] std::size_t position() {
        skip_ws();
        return pos_;
    }
    [[nodiscard]] char raw_peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

    [[noreturn]] void fail(const std::string& message) { throw ParseError(message, position()); }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

// ---- series ----

struct TermBuilder {
    Rational coeff{1};
    std::vector<HarmonicFactor> harmonics;
    std::vector<DenominatorFactor> denoms;
};

int parse_shift(Cursor& in) {
    // after 'k'
    if (in.peek() == '-') throw ShiftError("negative shift", in.position());
    if (!in.accept('+')) return 0;
    const std::size_t at = in.position();
    const int shift = in.small_int();
    if (in.raw_peek() == '.' || in.peek() == '/') throw ShiftError("non-integer shift", at);
    return shift;
}

// A shift is read only inside H[...] or parentheses: a bare "1/k+1" is 1/k + 1.
int parse_index(Cursor& in, bool shifted = true) {
    if (in.peek() != 'k') {
        if (in.peek_digit()) in.fail("only the bare index k (plus an integer shift) is supported");
        in.fail("expected 'k'");
    }
    in.expect('k');
    return shifted ? parse_shift(in) : 0;
}

std::optional<int> try_bare_k(Cursor& in) {
    if (in.peek() == 'k') return parse_index(in, false);
    return std::nullopt;
}

int positive_exponent(Cursor& in) {
    const std::size_t at = in.position();
    const int e = in.small_int();
    if (e < 1) throw ParseError("exponent must be >= 1", at);
    return e;
}

void numerator_factor(Cursor& in, TermBuilder& t) {
    const char c = in.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff *= Rational::parse(in.digits());
        return;
    }
    if (c == 'H') {
        in.expect('H');
        in.expect('[');
        const int shift = parse_index(in);
        in.expect(']');
        int e = 1;
        if (in.accept('^')) e = positive_exponent(in);
        t.harmonics.push_back({shift, e});
        return;
    }
    if (c == 'k' || c == '(') {
        const std::size_t at = in.position();
        int shift = 0;
        if (in.accept('(')) {
            shift = parse_index(in);
            in.expect(')');
        } else {
            shift = parse_index(in, false);
        }
        if (!in.accept('^') || !in.accept('-'))
            throw ParseError("linear factors must appear in the denominator (use '/' or a negative power)", at);
        t.denoms.push_back({shift, positive_exponent(in)});
        return;
    }
    in.fail("expected a factor");
}

void divisor_factor(Cursor& in, std::vector<DenominatorFactor>& denoms, Rational& scale) {
    if (in.peek_digit()) {
        const std::size_t at = in.position();
        const Rational d = Rational::parse(in.digits());
        if (d.is_zero()) throw ParseError("division by zero", at);
        scale *= d;
        return;
    }
    if (in.peek() == 'H') in.fail("harmonic numbers cannot appear in the denominator");
    if (const auto shift = try_bare_k(in)) {
        int p = 1;
        if (in.accept('^')) p = positive_exponent(in);
        denoms.push_back({*shift, p});
        return;
    }
    if (in.accept('(')) {
        if (in.peek() == 'k') {
            // parenthesized linear factor, e.g. (k+1)^2
            const int shift = parse_index(in);
            in.expect(')');
            int p = 1;
            if (in.accept('^')) p = positive_exponent(in);
            denoms.push_back({shift, p});
            return;
        }
        in.fail("expected 'k'");
    }
    in.fail("expected a denominator factor");
}

void divisor(Cursor& in, TermBuilder& t) {
    if (in.peek() != '(') {
        Rational scale{1};
        divisor_factor(in, t.denoms, scale);
        t.coeff /= scale;
        return;
    }
    // '(' either opens a single linear factor or a product.
    in.expect('(');
    std::vector<DenominatorFactor> group;
    Rational scale{1};
    if (in.peek() == 'k') {
        const int shift = parse_index(in);
        if (in.peek() == ')') {
            in.expect(')');
            int p = 1;
            if (in.accept('^')) p = positive_exponent(in);
            t.denoms.push_back({shift, p});
            return;
        }
        if (shift != 0) in.fail("expected ')'");
        int p = 1;
        if (in.accept('^')) p = positive_exponent(in);
        group.push_back({shift, p});
        if (!in.accept('*')) in.fail("expected '*' or ')'");
    }
    for (;;) {
        divisor_factor(in, group, scale);
        if (in.accept('*')) continue;
        break;
    }
    in.expect(')');
    int p = 1;
    if (in.accept('^')) p = positive_exponent(in);
    for (auto& f : group) t.denoms.push_back({f.shift, f.power * p});
    t.coeff /= scale.pow(static_cast<unsigned>(p));
}

GeneralTerm parse_term(Cursor& in, int sign) {
    const std::size_t start = in.position();
    TermBuilder t;
    t.coeff = Rational(sign);
    numerator_factor(in, t);
    for (;;) {
        if (in.accept('*')) {
            numerator_factor(in, t);
        } else if (in.accept('/')) {
            divisor(in, t);
        } else {
            break;
        }
    }
    if (t.denoms.empty()) throw ParseError("summand has no denominator factor, the series cannot converge", start);
    return GeneralTerm(t.coeff, t.harmonics, t.denoms);
}

// ---- closed forms ----

ClosedForm parse_cfactor(Cursor& in) {
    if (in.peek_digit()) return ClosedForm::constant(Rational::parse(in.digits()));
    const std::size_t at = in.position();
    const std::string name = in.word();
    if (name == "zeta") {
        in.expect('(');
        const std::size_t arg_at = in.position();
        const int arg = in.small_int();
        in.expect(')');
        if (arg < 2) throw ParseError("zeta argument must be >= 2", arg_at);
        int e = 1;
        if (in.accept('^')) e = positive_exponent(in);
        return ClosedForm::monomial(ZetaMonomial(std::vector<int>(static_cast<std::size_t>(e), arg)));
    }
    if (name == "EulerSum" || name == "S") {
        in.expect('(');
        const int a = in.small_int();
        in.expect(',');
        const std::size_t n_at = in.position();
        const int n = in.small_int();
        in.expect(')');
        if (n < 2) throw ParseError("Euler-sum constant needs n >= 2", n_at);
        return ClosedForm::symbolic({name == "S" ? SumKind::Generalized : SumKind::Power, a, n});
    }
    throw ParseError(name.empty() ? "expected a closed-form factor" : "unknown name '" + name + "'", at);
}

ClosedForm parse_cterm(Cursor& in) {
    const std::size_t start = in.position();
    ClosedForm value = parse_cfactor(in);
    try {
        for (;;) {
            if (in.accept('*')) {
                value = value * parse_cfactor(in);
            } else if (in.accept('/')) {
                const std::size_t at = in.position();
                const Rational d = Rational::parse(in.digits());
                if (d.is_zero()) throw ParseError("division by zero", at);
                value *= d.inverse();
            } else {
                break;
            }
        }
    } catch (const UnsupportedProduct& e) {
        throw ParseError(e.what(), start);
    }
    return value;
}

// ---- printing ----

std::string linear_text(int shift) { return shift == 0 ? "k" : "(k+" + std::to_string(shift) + ")"; }

struct Fraction {
    std::string num;  // empty means 1
    std::vector<std::string> den;
};

Fraction text_parts(const Rational& mag, const std::vector<HarmonicFactor>& h, const std::vector<DenominatorFactor>& d) {
    Fraction f;
    std::vector<std::string> num;
    if (mag.num() != 1 || h.empty()) num.push_back(mag.num().get_str());
    for (const auto& x : h) {
        std::string s = "H[k" + (x.shift ? "+" + std::to_string(x.shift) : std::string()) + "]";
        if (x.exponent > 1) s += "^" + std::to_string(x.exponent);
        num.push_back(s);
    }
    for (std::size_t i = 0; i < num.size(); ++i) f.num += (i ? "*" : "") + num[i];
    if (mag.den() != 1) f.den.push_back(mag.den().get_str());
    for (const auto& x : d) {
        std::string s = linear_text(x.shift);
        if (x.power > 1) s += "^" + std::to_string(x.power);
        f.den.push_back(s);
    }
    return f;
}

std::string text_body(const Rational& mag, const std::vector<HarmonicFactor>& h,
                      const std::vector<DenominatorFactor>& d) {
    const Fraction f = text_parts(mag, h, d);
    std::string out = f.num + "/";
    if (f.den.size() == 1) return out + f.den.front();
    out += "(";
    for (std::size_t i = 0; i < f.den.size(); ++i) out += (i ? "*" : "") + f.den[i];
    return out + ")";
}

std::string latex_body(const Rational& mag, const std::vector<HarmonicFactor>& h,
                       const std::vector<DenominatorFactor>& d) {
    std::string num;
    if (mag.num() != 1 || h.empty()) num = mag.num().get_str();
    for (const auto& x : h) {
        if (!num.empty()) num += " ";
        num += "H_{k" + (x.shift ? "+" + std::to_string(x.shift) : std::string()) + "}";
        if (x.exponent > 1) num += "^{" + std::to_string(x.exponent) + "}";
    }
    std::string den;
    if (mag.den() != 1) den = mag.den().get_str();
    for (const auto& x : d) {
        if (!den.empty()) den += " ";
        den += linear_text(x.shift);
        if (x.power > 1) den += "^{" + std::to_string(x.power) + "}";
    }
    return "\\frac{" + num + "}{" + den + "}";
}

std::string join_signed(const std::vector<std::pair<int, std::string>>& parts) {
    if (parts.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const bool negative = parts[i].first < 0;
        if (i == 0) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        out += parts[i].second;
    }
    return out;
}

std::string format_terms(const std::vector<GeneralTerm>& terms, Format style) {
    if (style == Format::Json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& t : terms) {
            nlohmann::ordered_json e;
            e["coeff"] = t.coeff().str();
            e["harmonics"] = nlohmann::ordered_json::array();
            for (const auto& h : t.harmonics()) e["harmonics"].push_back({{"shift", h.shift}, {"exponent", h.exponent}});
            e["denoms"] = nlohmann::ordered_json::array();
            for (const auto& d : t.denoms()) e["denoms"].push_back({{"shift", d.shift}, {"power", d.power}});
            j.push_back(e);
        }
        return j.dump();
    }
    std::vector<std::pair<int, std::string>> parts;
    for (const auto& t : terms) {
        const Rational mag = t.coeff().abs();
        parts.emplace_back(t.coeff().sign(), style == Format::Latex ? latex_body(mag, t.harmonics(), t.denoms())
                                                                     : text_body(mag, t.harmonics(), t.denoms()));
    }
    return join_signed(parts);
}

}  // namespace

SeriesExpression parse_series(std::string_view src) {
    Cursor in(src);
    std::vector<GeneralTerm> terms;
    int sign = 1;
    if (in.accept('-')) {
        sign = -1;
    } else {
        in.accept('+');
    }
    for (;;) {
        terms.push_back(parse_term(in, sign));
        if (in.at_end()) break;
        if (in.accept('+')) {
            sign = 1;
        } else if (in.accept('-')) {
            sign = -1;
        } else {
            in.fail("unexpected character");
        }
    }
    return SeriesExpression(terms);
}

ClosedForm parse_closed_form(std::string_view src) {
    Cursor in(src);
    ClosedForm out;
    int sign = 1;
    if (in.accept('-')) {
        sign = -1;
    } else {
        in.accept('+');
    }
    for (;;) {
        out += Rational(sign) * parse_cterm(in);
        if (in.at_end()) break;
        if (in.accept('+')) {
            sign = 1;
        } else if (in.accept('-')) {
            sign = -1;
        } else {
            in.fail("unexpected character");
        }
    }
    return out;
}

std::string format(const GeneralTerm& term, Format style) { return format_terms({term}, style); }

std::string format(const SeriesExpression& series, Format style) { return format_terms(series.terms(), style); }

std::string format(std::span<const CanonicalTerm> terms, Format style) {
    if (style == Format::Json) {
        nlohmann::ordered_json j = nlohmann::ordered_json::array();
        for (const auto& t : terms)
            j.push_back({{"coeff", t.coeff.str()}, {"l", t.hexp}, {"m", t.shift}, {"n", t.npow}});
        return j.dump();
    }
    std::vector<GeneralTerm> general;
    for (const auto& t : terms) general.push_back(t.to_general());
    return format_terms(general, style);
}

}  // namespace eulersum
