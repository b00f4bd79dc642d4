#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "eulersum/cli.hpp"
#include "json.hpp"
#include "reference_values.hpp"

using namespace eulersum;

namespace {

struct Run {
    int status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int status = cli::run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string trim(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    return s;
}

}  // namespace

TEST_CASE("eval") {
    const auto r = run({"eval", "H[k]*H[k+1]/(k*(k+1))"});
    CHECK(r.status == 0);
    CHECK(trim(r.out) == "zeta(2) + 2*zeta(3)");
    CHECK(trim(run({"eval", testing::kQuartic}).out) == testing::kQuarticValue);
    CHECK(trim(run({"eval", "--pi", "H[k]^2/k^2"}).out) == "17/360*pi^4");
    CHECK(trim(run({"eval", "--format", "latex", "H[k]^2/k^2"}).out) == "\\frac{17}{4}\\zeta(4)");
}

TEST_CASE("exit codes") {
    const auto divergent = run({"eval", "H[k]/k"});
    CHECK(divergent.status == 2);
    CHECK(divergent.err.find("divergent") != std::string::npos);
    CHECK(run({"eval", "H[k+1]^2/(k+1)^6"}).status == 0);
    const auto strict = run({"eval", "--strict", "H[k+1]^2/(k+1)^6"});
    CHECK(strict.status == 3);
    CHECK(strict.err.find("EulerSum(2,6)") != std::string::npos);
    const auto parse = run({"eval", "H[2k]/k"});
    CHECK(parse.status == 1);
    CHECK(parse.err.find("position") != std::string::npos);
    CHECK(run({"frobnicate"}).status == 1);
    CHECK(run({}).status == 1);
    CHECK(run({"eval", "--format", "yaml", "1/k^2"}).status == 1);
    CHECK(run({"verify", "1/(k*(k+1))", "--terms", "1000", "--closed-form", "zeta(2)"}).status == 4);
    CHECK(run({"verify", "1/k^2", "--terms", "3"}).status == 1);
    CHECK(run({"eval", "--table", "/nonexistent/table.txt", "1/k^2"}).status == 1);
    CHECK(run({"--help"}).status == 0);
}

TEST_CASE("expand") {
    const auto r = run({"expand", "H[k]*H[k+1]/(k*(k+1))"});
    CHECK(r.status == 0);
    CHECK(trim(r.out) == "1/(k+1)^2 + H[k]/k - H[k+1]/(k+1) + H[k+1]/(k+1)^2 + H[k]^2/k - H[k+1]^2/(k+1)");
    const auto j = nlohmann::json::parse(run({"expand", "--format", "json", testing::kQuartic}).out);
    CHECK(j.size() == 40);
    for (const auto& t : j) {
        CHECK(t["coeff"].is_string());
        CHECK(t["l"].is_number_integer());
        CHECK(t["m"].is_number_integer());
        CHECK(t["n"].is_number_integer());
    }
}

TEST_CASE("verify") {
    const auto r = run({"verify", "H[k]*H[k+1]*H[k+2]/(k*(k+1)*(k+2))", "--terms", "100000"});
    CHECK(r.status == 0);
    CHECK(r.out.find("pass") != std::string::npos);
    const auto j = nlohmann::json::parse(
        run({"verify", "--format", "json", "H[k]/k^3", "--terms", "20000", "--digits", "25", "--workers", "2"})
            .out);
    CHECK(j["pass"] == true);
    CHECK(j["K"] == 20000);
    CHECK(j["digits"] == 25);
    CHECK(j["residual"].is_string());
    CHECK(j["bound"].is_string());
}

TEST_CASE("json output for every corpus entry") {
    for (const auto& e : testing::corpus()) {
        CAPTURE(e.name);
        const auto r = run({"eval", "--format", "json", e.series});
        REQUIRE(r.status == 0);
        const auto j = nlohmann::json::parse(r.out);
        REQUIRE(j.is_object());
        CHECK(j["rational"].is_string());
        REQUIRE(j["terms"].is_array());
        for (const auto& t : j["terms"]) {
            REQUIRE(t["zeta_args"].is_array());
            for (const auto& a : t["zeta_args"]) CHECK(a.get<int>() >= 2);
            CHECK(t["coeff"].is_string());
        }
        CHECK(j["symbolic"].is_array());
    }
}

TEST_CASE("table extension") {
    const auto path = std::filesystem::temp_directory_path() / "eulersum_test_table.txt";
    {
        std::ofstream f(path);
        f << "# quadratic, n = 3\nE 2 3 = 7/2*zeta(5) - zeta(2)*zeta(3)\n";
    }
    CHECK(trim(run({"eval", "H[k]^2/k^3"}).out) == "EulerSum(2,3)");
    CHECK(trim(run({"eval", "--table", path.string(), "H[k]^2/k^3"}).out) == "-zeta(2)*zeta(3) + 7/2*zeta(5)");
    {
        std::ofstream f(path);
        f << "E 2 3 = zeta(\n";
    }
    const auto bad = run({"eval", "--table", path.string(), "H[k]^2/k^3"});
    CHECK(bad.status == 1);
    CHECK(bad.err.find("line 1") != std::string::npos);
    std::filesystem::remove(path);
}
