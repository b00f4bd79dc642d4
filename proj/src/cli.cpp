#include "eulersum/cli.hpp"

#include <algorithm>
#include <ostream>

#include "CLI11.hpp"
#include "eulersum/engine.hpp"
#include "eulersum/errors.hpp"
#include "eulersum/normalize.hpp"
#include "eulersum/numeric.hpp"
#include "eulersum/parser.hpp"

namespace eulersum::cli {

namespace {

struct Settings {
    std::string expr;
    std::string format = "text";
    bool strict = false;
    bool pi = false;
    bool groups = false;
    std::string table;
    std::string closed_form;
    long terms = 100000;
    int digits = 30;
    int workers = 1;
};

Format to_format(const std::string& name) {
    if (name == "latex") return Format::Latex;
    if (name == "json") return Format::Json;
    return Format::Text;
}

void add_shared(CLI::App* cmd, Settings& s) {
    cmd->add_option("expr", s.expr, "series, e.g. \"H[k]*H[k+1]/(k*(k+1))\"")->required();
    cmd->add_option("--format", s.format, "output style")->check(CLI::IsMember({"text", "latex", "json"}));
    cmd->add_flag("--strict", s.strict, "fail instead of emitting unknown Euler-sum constants");
    cmd->add_flag("--pi", s.pi, "rewrite even zeta values as rational multiples of powers of pi");
    cmd->add_option("--table", s.table, "file with extra `E <l> <n> = <closed form>` entries");
}

std::string render(const ClosedForm& cf, const Settings& s) {
    if (s.pi && !cf.has_symbolic()) return format(even_zeta_to_pi(cf), to_format(s.format));
    return format(cf, to_format(s.format));
}

int eval_command(const Settings& s, const EulerTable& table, std::ostream& out) {
    const auto series = parse_series(s.expr);
    const auto ev = evaluate_series_traced(series, table, {s.strict});
    if (s.groups && to_format(s.format) != Format::Json) {
        for (const auto& g : ev.groups) {
            std::vector<CanonicalTerm> terms;
            for (const auto& [m, c] : g.group.coeffs) terms.push_back({c, g.group.hexp, m, g.group.npow});
            out << "(l=" << g.group.hexp << ", n=" << g.group.npow << ")  " << format(terms, Format::Text)
                << "  =  " << render(g.value, s) << "\n";
        }
    }
    out << render(ev.value, s) << "\n";
    return kOk;
}

int verify_command(const Settings& s, const EulerTable& table, std::ostream& out) {
    const auto series = parse_series(s.expr);
    const ClosedForm cf = s.closed_form.empty() ? evaluate_series(series, table, {s.strict})
                                                : parse_closed_form(s.closed_form);
    const auto report = verify(series, cf, {s.terms, s.digits, s.workers});
    if (to_format(s.format) == Format::Json) {
        out << report.json() << "\n";
    } else {
        out << "closed form  " << format(cf, to_format(s.format)) << "\n" << report.text();
    }
    return report.pass ? kOk : kVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Closed forms of Euler-type series over zeta values", "eulersum"};
    app.require_subcommand(1);
    Settings s;

    auto* expand = app.add_subcommand("expand", "print the canonical expansion of the summand");
    expand->add_option("expr", s.expr, "series")->required();
    expand->add_option("--format", s.format, "output style")->check(CLI::IsMember({"text", "latex", "json"}));

    auto* eval = app.add_subcommand("eval", "evaluate the series in closed form");
    add_shared(eval, s);
    eval->add_flag("--groups", s.groups, "also print every (l, n) group with its value");

    auto* check = app.add_subcommand("verify", "compare the closed form against direct summation");
    add_shared(check, s);
    check->add_option("--terms", s.terms, "number of summed terms K")->check(CLI::Range(10L, 1'000'000'000L));
    check->add_option("--digits", s.digits, "working precision in decimal digits")->check(CLI::Range(10, 2000));
    check->add_option("--workers", s.workers, "threads for the partial sum")->check(CLI::Range(1, 256));
    check->add_option("--closed-form", s.closed_form, "closed form to check instead of the engine's");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        EulerTable table;
        if (!s.table.empty()) table.load_file(s.table);
        if (expand->parsed()) {
            const auto series = parse_series(s.expr);
            out << format(normalize(series), to_format(s.format)) << "\n";
            return kOk;
        }
        if (eval->parsed()) return eval_command(s, table, out);
        return verify_command(s, table, out);
    } catch (const DivergentSeries& e) {
        err << e.what() << "\n";
        return kDivergent;
    } catch (const NotReducible& e) {
        err << "not reducible: " << e.what() << "\n";
        return kNotReducible;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
}

}  // namespace eulersum::cli
