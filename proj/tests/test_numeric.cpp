#include <chrono>

#include "doctest.h"
#include "decimal.hpp"
#include "eulersum/asymptotic.hpp"
#include "eulersum/engine.hpp"
#include "eulersum/errors.hpp"
#include "eulersum/normalize.hpp"
#include "eulersum/euler_table.hpp"
#include "eulersum/numeric.hpp"
#include "eulersum/parser.hpp"
#include "json.hpp"
#include "reference_values.hpp"

using namespace eulersum;
using testing::decimal;

namespace {

double gap(const BigFloat& a, const BigFloat& b) { return (a - b).abs().to_double(); }

bool covers(const NumericValue& v, const BigFloat& truth) { return (v.value - truth).abs() <= v.error_bound; }

const char* const kZeta2 = "1.644934066848226436472415166646025189219";
const char* const kZeta3 = "1.202056903159594285399738161511449990765";
const char* const kZeta4 = "1.082323233711138191516003696541167902775";

}  // namespace

TEST_CASE("zeta values") {
    for (const auto& [n, ref] : {std::pair{2, kZeta2}, {3, kZeta3}, {4, kZeta4}}) {
        CAPTURE(n);
        const auto z = zeta_numeric(n, 12);
        CHECK(z.error_bound <= BigFloat::pow10(-12, z.error_bound.precision()));
        CHECK(covers(z, decimal(ref, 40)));
        const auto z30 = zeta_numeric(n, 30);
        CHECK(gap(z30.value, decimal(ref, 40)) < 1e-30);
    }
    const mpfr_prec_t bits = bits_for_digits(60);
    const BigFloat pi = BigFloat::pi(bits);
    CHECK(gap(zeta_numeric(2, 50).value, pi.pow(2) / BigFloat(6, bits)) < 1e-49);
    CHECK(gap(zeta_numeric(8, 50).value, pi.pow(8) / BigFloat(9450, bits)) < 1e-49);
    CHECK(zeta_numeric(2, 12).value.str(12) == "1.64493406685e+00");
    CHECK_THROWS(zeta_numeric(1, 20));
    CHECK_THROWS(zeta_numeric(2, 5));
}

TEST_CASE("asymptotic expansion of harmonic numbers") {
    const mpfr_prec_t bits = bits_for_digits(50);
    const auto h = AsymptoticSeries::harmonic(0, 12);
    for (long x : {400L, 1000L, 5000L}) {
        CAPTURE(x);
        const BigFloat bx(x, bits);
        const BigFloat lambda = bx.log() + BigFloat::euler_gamma(bits);
        CHECK(gap(h.evaluate(bx, lambda), BigFloat(harmonic(x), bits)) < 1e-25);
        // H_{x+2} = H_x + 1/(x+1) + 1/(x+2)
        const auto h2 = AsymptoticSeries::harmonic(2, 12);
        CHECK(gap(h2.evaluate(bx, lambda), BigFloat(harmonic(x + 2), bits)) < 1e-25);
    }
}

TEST_CASE("asymptotic expansion of a summand matches direct evaluation") {
    const mpfr_prec_t bits = bits_for_digits(50);
    const auto term = parse_series(testing::kQuartic).terms().front();
    const auto f = AsymptoticSeries::of(term, 16);
    CHECK(f.leading_order() == 4);
    const long x = 2000;
    const BigFloat bx(x, bits);
    const BigFloat lambda = bx.log() + BigFloat::euler_gamma(bits);
    const BigFloat exact(eval_term_at(term, x), bits);
    CHECK(gap(f.evaluate(bx, lambda), exact) / exact.to_double() < 1e-30);
}

TEST_CASE("tail estimates") {
    const mpfr_prec_t bits = bits_for_digits(40);
    const auto f = AsymptoticSeries::inverse_linear(0, 2, 20);
    const long K = 1000;
    const auto tail = tail_sum(f, K, 20, bits);
    BigFloat partial(bits);
    for (long k = 1; k <= K; ++k) partial += BigFloat(Rational(1, k * k), bits);
    const BigFloat truth = decimal(kZeta2, 40) - partial;
    // the reference constant carries 40 digits
    CHECK(gap(tail.value, truth) < 1e-36);
    CHECK(tail.error.to_double() < 1e-25);
}

TEST_CASE("series summation") {
    SUBCASE("telescoping") {
        const auto est = series_numeric(parse_series("1/(k*(k+1))"), {1000, 30});
        CHECK(gap(est.partial_sum, BigFloat(Rational(1000, 1001), est.partial_sum.precision())) < 1e-35);
        CHECK(est.partial_sum.str(9) == "9.99000999e-01");
        CHECK(covers(est.total, BigFloat(1, est.total.value.precision())));
    }
    SUBCASE("linear Euler sum") {
        const auto est = series_numeric(parse_series("H[k]/k^2"), {100000, 30});
        const BigFloat two_zeta3 = BigFloat(2, bits_for_digits(40)) * decimal(kZeta3, 40);
        CHECK(covers(est.total, two_zeta3));
        CHECK(est.total.value.str(7) == "2.404114e+00");
    }
    SUBCASE("quartic series") {
        const auto est = series_numeric(parse_series(testing::kQuartic), {100000, 30});
        CHECK(covers(est.total, decimal("0.5428129263265657674837597015263889172082", 40)));
        CHECK(est.total.value.str(7) == "5.428129e-01");
    }
}

TEST_CASE("summation preconditions") {
    CHECK_THROWS_AS(series_numeric(parse_series("H[k]/k")), DivergentSeries);
    CHECK_THROWS(series_numeric(parse_series("1/k^2"), {5, 30}));
    CHECK_THROWS(series_numeric(parse_series("1/k^2"), {1000, 8}));
}

TEST_CASE("error bounds tighten as K grows") {
    for (const char* s : {"H[k]/k^2", "H[k]*H[k+1]/(k*(k+1))", "1/(k*(k+1))", "H[k+1]^2/(k+1)^3"}) {
        CAPTURE(s);
        const auto series = parse_series(s);
        BigFloat last = series_numeric(series, {100, 30}).total.error_bound;
        for (long K : {300L, 1000L, 3000L, 10000L}) {
            const auto bound = series_numeric(series, {K, 30}).total.error_bound;
            CHECK(bound <= last);
            last = bound;
        }
    }
}

TEST_CASE("chunked summation is deterministic") {
    const auto series = parse_series("H[k]*H[k+1]*H[k+2]/(k*(k+1)*(k+2))");
    const auto one = series_numeric(series, {30000, 30, 1});
    for (int workers : {2, 3, 8}) {
        const auto many = series_numeric(series, {30000, 30, workers});
        CHECK(many.partial_sum == one.partial_sum);
        CHECK(many.total.value == one.total.value);
        CHECK(many.total.error_bound == one.total.error_bound);
    }
}

TEST_CASE("closed form evaluation") {
    const auto v = closed_form_numeric(parse_closed_form(testing::kQuarticValue), {100000, 30});
    CHECK(gap(v.value, decimal("0.5428129263265657674837597015263889172082", 40)) < 1e-28);
    const auto q1 = closed_form_numeric(parse_closed_form("zeta(2) + 2*zeta(3)"), {100000, 30});
    CHECK(gap(q1.value, decimal("4.049047873167415007271891489668925170749", 40)) < 1e-28);
    // S(2,6) and EulerSum(2,6) are summed from their defining series
    const auto s26 = closed_form_numeric(parse_closed_form("S(2,6)"), {100000, 30});
    const auto direct = series_numeric(parse_series("H[k]^2/k^6"), {100000, 30});
    CHECK(gap(s26.value, BigFloat(0, bits_for_digits(40))) > 1.0);
    const auto e26 = closed_form_numeric(ClosedForm::symbolic({SumKind::Power, 2, 6}), {100000, 30});
    CHECK(gap(e26.value, direct.total.value) <= (e26.error_bound + direct.total.error_bound).to_double());
}

TEST_CASE("verification reports") {
    SUBCASE("quartic") {
        const auto r = verify(parse_series(testing::kQuartic), parse_closed_form(testing::kQuarticValue));
        CHECK(r.pass);
        CHECK(r.residual.to_double() < 1e-8);
        CHECK(r.terms == 100000);
        CHECK(r.digits == 30);
    }
    SUBCASE("consecutive q=1") {
        const auto r = verify(parse_series("H[k]*H[k+1]/(k*(k+1))"), parse_closed_form("zeta(2) + 2*zeta(3)"));
        CHECK(r.pass);
    }
    SUBCASE("wrong value") {
        const auto r = verify(parse_series("1/(k*(k+1))"), ClosedForm::zeta(2), {1000, 30});
        CHECK_FALSE(r.pass);
        CHECK(r.residual.to_double() == doctest::Approx(0.644934).epsilon(1e-5));
        const auto j = nlohmann::json::parse(r.json());
        CHECK(j["pass"] == false);
        CHECK(j["K"] == 1000);
        CHECK(j["digits"] == 30);
        CHECK(j.contains("residual"));
        CHECK(j.contains("bound"));
        CHECK(r.text().find("FAIL") != std::string::npos);
    }
}

TEST_CASE("the closed form lies inside every corpus interval") {
    const EulerTable table;
    for (const auto& entry : testing::corpus()) {
        CAPTURE(entry.name);
        const auto series = parse_series(entry.series);
        const auto est = series_numeric(series, {20000, 30});
        const auto value = closed_form_numeric(parse_closed_form(entry.value), {20000, 30});
        CHECK((est.total.value - value.value).abs() <= est.total.error_bound + value.error_bound);
    }
}
