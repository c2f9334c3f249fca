#include "doctest.h"
#include "qtv/cli.hpp"

#include "json.hpp"

#include <sstream>
#include <string>
#include <vector>

using namespace qtv;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> result;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);) result.push_back(line);
    return result;
}

}  // namespace

TEST_CASE("hurwitz table as CSV") {
    const Run r = run({"hurwitz", "--p", "3", "--n-max", "100", "--format", "csv"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    REQUIRE(rows.size() == 101);
    CHECK(rows[0] == "p,n,H,H_routes_agree,H_1p,H_pp,hstar,hstar_err,relation");
    CHECK(rows[3].rfind("3,3,1/3,true,", 0) == 0);
    // n = 5 is a positive nonsquare discriminant, so h* is filled in.
    CHECK(rows[5].find(",,") == std::string::npos);
    CHECK(r.err.find("total=100 passed=100 failed=0") != std::string::npos);
}

TEST_CASE("configuration errors exit with 2") {
    CHECK(run({"hurwitz", "--prec", "20"}).code == 2);
    CHECK(run({"hurwitz", "--p", "4"}).code == 2);
    CHECK(run({"hurwitz", "--p", "2"}).code == 2);
    CHECK(run({"hurwitz", "--n-min", "10", "--n-max", "5"}).code == 2);
    CHECK(run({"hurwitz", "--format", "xml"}).code == 2);
    CHECK(run({"verify", "everything"}).code == 2);
    CHECK(run({"verify"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"tables"}).code == 2);
}

TEST_CASE("verify constants and special") {
    const Run c = run({"verify", "constants", "--p", "3"});
    CHECK(c.code == 0);
    const auto rows = lines(c.out);
    REQUIRE(rows.size() == 3);
    for (const auto& row : rows) {
        const auto j = nlohmann::json::parse(row);
        CHECK(j["pass"] == true);
        CHECK(j["p"] == 3);
    }
    const Run s = run({"verify", "special"});
    CHECK(s.code == 0);
    CHECK(lines(s.out).size() == 36);
}

TEST_CASE("verify imaginary under each convention") {
    CHECK(run({"verify", "imaginary", "--p", "3", "5", "--n-max", "60"}).code == 0);
    CHECK(run({"verify", "imaginary", "--p", "3", "--p", "7", "--n-max", "40", "--convention", "both-signs"}).code == 0);
    // Positive definite forms alone give half the trace: a failed check exits 1.
    const Run pos = run({"verify", "imaginary", "--p", "3", "--n-max", "20", "--convention", "pos-def"});
    CHECK(pos.code == 1);
    CHECK(pos.err.find("failed=0") == std::string::npos);
    const Run seeds = run({"verify", "imaginary", "--seed-cases"});
    CHECK(seeds.code == 0);
    const auto rows = lines(seeds.out);
    REQUIRE(rows.size() == 5);
    CHECK(nlohmann::json::parse(rows[0])["note"] == "pinned=both-signs");
}

TEST_CASE("JSON-lines schema and byte-identical reruns") {
    const std::vector<std::string> args = {"verify", "real", "--p", "3", "--n-max", "40"};
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    const auto j = nlohmann::ordered_json::parse(lines(a.out).front());
    std::vector<std::string> keys;
    for (const auto& [key, value] : j.items()) keys.push_back(key);
    REQUIRE(keys.size() >= 8);
    const std::vector<std::string> expect = {"check", "p", "n", "lhs", "rhs", "abs_err", "rel_err", "pass"};
    CHECK(std::vector<std::string>(keys.begin(), keys.begin() + 8) == expect);
}

TEST_CASE("coefficient table deltas") {
    const Run r = run({"coeffs", "--p", "3", "--m-max", "12", "--n-max", "24"});
    CHECK(r.code == 0);
    const auto rows = lines(r.out);
    // 12 b rows, c(0), 12 c(m^2) rows, 12 negative indices up to 24, frak_C.
    REQUIRE(rows.size() == 38);
    for (const auto& row : rows) {
        const auto j = nlohmann::json::parse(row);
        CHECK(j["pass"] == "true");
        CHECK(j.contains("err"));
    }
    CHECK(run({"coeffs", "--p", "3", "--m-max", "2", "--n-max", "8"}).out ==
          run({"coeffs", "--p", "3", "--m-max", "2", "--n-max", "8"}).out);
}
