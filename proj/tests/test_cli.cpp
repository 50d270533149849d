#include <doctest.h>

#include <sstream>

#include "superdiag/cli.hpp"
#include "superdiag/formulas.hpp"
#include "superdiag/golden.hpp"

using namespace superdiag;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "superdiag");
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("enumerate text") {
    auto r = run({"enumerate", "10", "palindromic-superdiagonal"});
    CHECK(r.code == 0);
    CHECK(r.out == "10\n5 5\n4 2 4\n3 4 3\n");

    r = run({"enumerate", "0", "superdiagonal"});
    CHECK(r.out == "()\n");
    r = run({"enumerate", "0", "superdiagonal", "--format", "json"});
    CHECK(r.out == "{\"compositions\":[[]],\"count\":1,\"n\":0}\n");

    r = run({"enumerate", "4", "palindromic", "--format", "csv"});
    CHECK(r.out == "rho,1,2,3,4\n1,4\n2,2,2\n3,1,2,1\n4,1,1,1,1\n");
}

TEST_CASE("enumerate JSON count matches the superdiagonal sum") {
    const auto r = run({"enumerate", "20", "superdiagonal", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(Int(j["count"].get<std::int64_t>()) == superdiagonal_total(20));
}

TEST_CASE("enumerate JSON round-trips and counts its array") {
    for (const char* family : {"superdiagonal", "palindromic-superdiagonal", "palindromic"}) {
        for (int n = 0; n <= 16; ++n) {
            CAPTURE(family);
            CAPTURE(n);
            const auto r = run({"enumerate", std::to_string(n), family, "--format", "json"});
            REQUIRE(r.code == 0);
            const auto j = nlohmann::json::parse(r.out);
            CHECK(j.dump() + "\n" == r.out);
            CHECK(j["count"] == j["compositions"].size());
            CHECK(j["n"] == n);
        }
    }
}

TEST_CASE("enumerate limits") {
    auto r = run({"enumerate", "25", "palindromic"});
    CHECK(r.code == 2);
    CHECK(r.err.find("limit of 24") != std::string::npos);
    r = run({"enumerate", "61", "superdiagonal"});
    CHECK(r.code == 2);
    CHECK(r.err.find("limit of 60") != std::string::npos);
    r = run({"enumerate", "61", "palindromic-superdiagonal", "--force"});
    CHECK(r.code == 0);

    std::ostringstream sink;
    CHECK_THROWS_AS(cli::cmd_enumerate(25, cli::Family::palindromic, cli::OutputFormat::text, false, sink),
                    cli::LimitExceeded);
}

TEST_CASE("sequence") {
    CHECK(run({"sequence", "s", "28"}).out ==
          "1, 1, 1, 1, 2, 1, 2, 1, 3, 2, 4, 3, 5, 4, 7, 5, 9, 6, 11, 7, 13, 9, 16, 12, 20, 16, 25, 21, 31\n");
    CHECK(run({"sequence", "c", "10"}).out == "1, 1, 2, 5, 11, 21, 42, 86, 171, 322, 596\n");
    CHECK(run({"sequence", "s", "0"}).out == "1\n");
    CHECK(run({"sequence", "palindromic-total", "4", "--format", "csv"}).out == "0,1,2,3,4\n1,1,2,2,4\n");
    CHECK(run({"sequence", "superdiagonal-total", "4", "--format", "json"}).out ==
          "{\"name\":\"superdiagonal-total\",\"values\":[1,1,1,2,3]}\n");

    const auto r = run({"sequence", "fib", "5"});
    CHECK(r.code == 2);
    std::ostringstream sink;
    CHECK_THROWS_AS(cli::cmd_sequence("fib", 5, cli::OutputFormat::text, sink), cli::UnknownSequence);
}

TEST_CASE("large values become JSON strings") {
    const auto r = run({"sequence", "c", "120", "--format", "json"});
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.dump() + "\n" == r.out);
    const auto& values = j["values"];
    CHECK(values[10] == 596);
    const Int c120 = series_C(120).coeff(120);
    CHECK(c120 > (Int{1} << 53));
    CHECK(values[120] == c120.str());
}

TEST_CASE("table") {
    CHECK(run({"table", "snk", "5", "26", "--format", "csv"}).out == golden::kTable1Csv);
    CHECK(run({"table", "stirling", "1", "1", "--format", "csv"}).out == "n/k,0,1\n0,1,0\n1,0,1\n");
    const auto t = run({"table", "T", "6", "6", "--format", "csv"}).out;
    CHECK(t.find("6,720,-2556,3604,-2521,874,-120,0\n") != std::string::npos);
    CHECK(t.find("3,6,-7,2,0,0,0,0\n") != std::string::npos);

    const auto text = run({"table", "stirling", "1", "1"}).out;
    CHECK(text == "n/k 0 1\n  0 1 0\n  1 0 1\n");

    const auto js = run({"table", "stirling", "25", "3", "--format", "json"}).out;
    const auto j = nlohmann::json::parse(js);
    CHECK(j.dump() + "\n" == js);
    CHECK(j["values"][25][1] == "620448401733239439360000"); // 24!

    CHECK(run({"table", "snk", "0", "3"}).code == 2);
    CHECK(run({"table", "nope", "3", "3"}).code == 2);
}

TEST_CASE("verify") {
    auto r = run({"verify", "--profile", "quick"});
    CHECK(r.code == 0);
    CHECK(r.out.find("all checks passed") != std::string::npos);

    r = run({"verify", "--profile", "full", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.is_array());
    CHECK(j.size() == 7);
    CHECK(j.dump() + "\n" == r.out);

    r = run({"verify", "--profile", "exhaustive"});
    CHECK(r.code == 2);

    CHECK(run({"verify"}).code == 0);
}

TEST_CASE("usage errors and help") {
    CHECK(run({}).code == 2);
    CHECK(run({"bogus"}).code == 2);
    CHECK(run({"enumerate", "4", "hexagonal"}).code == 2);
    CHECK(run({"sequence", "s", "4", "--format", "xml"}).code == 2);
    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("enumerate") != std::string::npos);
}
