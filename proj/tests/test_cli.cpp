#include "doctest.h"

#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypertheta/cli.hpp"

using json = nlohmann::json;
namespace cli = hypertheta::cli;

namespace {

struct Output {
    int code;
    std::string out;
    std::string err;
};

Output run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(HYPERTHETA_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("alpha") {
    Output o = run({"alpha", "--file", data("c5.hg")});
    REQUIRE(o.code == cli::kExitOk);
    json j = json::parse(o.out);
    CHECK(j["value"] == 2.0);
    json w = json::parse(run({"alpha", "--file", data("c5.hg"), "--weights", data("c5_weights.txt")}).out);
    CHECK(w["value"] == 6.0);
}

TEST_CASE("chistar is exact") {
    json j = json::parse(run({"chistar", "--file", data("c5.hg")}).out);
    CHECK(j["exact"] == "5/2");
    CHECK(j["value"] == 2.5);
}

TEST_CASE("theta with certificate") {
    Output o = run({"theta", "--file", data("edge3.hg"), "--certificate"});
    REQUIRE(o.code == cli::kExitOk);
    json j = json::parse(o.out);
    CHECK(j["value"].get<double>() == doctest::Approx(2.0).epsilon(1e-7));
    CHECK(j["diagnostics"]["status"] == "optimal");
    CHECK(j["certificate"]["uniformity"] == 3);
    CHECK(j["certificate"]["children"].size() == 3);
}

TEST_CASE("membership") {
    json in = json::parse(run({"member", "--file", data("edge3.hg"), "--point", data("chi12.txt")}).out);
    CHECK(in["member"] == true);
    Output o = run({"member", "--file", data("edge3.hg"), "--point", data("ones3.txt")});
    CHECK(o.code == cli::kExitOk);
    json out = json::parse(o.out);
    CHECK(out["member"] == false);
    CHECK(out["gauge"].get<double>() == doctest::Approx(1.5).epsilon(1e-6));
}

TEST_CASE("theta-dual") {
    json j = json::parse(run({"theta-dual", "--file", data("edge3.hg")}).out);
    CHECK(j["value"].get<double>() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("mantel and hamming") {
    json m = json::parse(run({"mantel", "--n", "7", "--exact"}).out);
    CHECK(m["value"] == "49/4");
    CHECK(m["beta"] == "5/8");
    json h = json::parse(run({"hamming", "--n", "6", "--s", "2", "--exact"}).out);
    CHECK(h["theta"] == "64/3");
    CHECK(h["theta_link"] == "3");
}

TEST_CASE("scan-decay writes CSV") {
    Output o = run({"scan-decay", "--c", "2,3", "--n", "20:21"});
    REQUIRE(o.code == cli::kExitOk);
    std::istringstream in(o.out);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,c,s,log_density");
    int rows = 0;
    while (std::getline(in, line))
        if (!line.empty() && line[0] != '#') ++rows;
    CHECK(rows == 4);
}

TEST_CASE("hoffman") {
    json j = json::parse(run({"hoffman", "--file", data("weighted.hg")}).out);
    CHECK(j["hoff"].get<double>() == doctest::Approx(2.0 / 3));
    CHECK(j["lambda"].size() == 2);
}

TEST_CASE("check suite passes") {
    Output o = run({"check", "--seed", "42"});
    CHECK(o.code == cli::kExitOk);
}

TEST_CASE("exit codes and error reports") {
    Output bad = run({"theta", "--file", data("bad_token.hg")});
    CHECK(bad.code == cli::kExitBadInput);
    json j = json::parse(bad.out.empty() ? bad.err : bad.out);
    CHECK(j["line"] == 2);
    CHECK(j["column"] == 5);

    CHECK(run({"theta", "--file", data("short.hg")}).code == cli::kExitBadInput);
    CHECK(run({"theta", "--file", data("missing.hg")}).code == cli::kExitBadInput);
    CHECK(run({"mantel", "--n", "3"}).code == cli::kExitBadInput);
    CHECK(run({"hamming", "--n", "5", "--s", "3"}).code == cli::kExitBadInput);
    CHECK(run({"no-such-command"}).code == cli::kExitBadInput);
}

TEST_CASE("output is reproducible") {
    std::vector<std::string> args{"theta", "--file", data("c5.hg"), "--certificate"};
    CHECK(run(args).out == run(args).out);
    std::vector<std::string> scan{"scan-decay", "--c", "2,3,4", "--n", "20:40"};
    CHECK(run(scan).out == run(scan).out);
}
