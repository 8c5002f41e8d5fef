#include "yfrieze/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace {

struct Result {
    int code;
    std::string out, err;
};

Result call(std::vector<std::string> args) {
    args.insert(args.begin(), "yfrieze");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = yfrieze::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("knit grid, json and csv") {
    auto r = call({"knit", "--type", "A2", "--kind", "y", "--initial", "2,1", "--cols", "0..4"});
    CHECK(r.code == 0);
    CHECK(r.out == " 2 1 3 1 2\n  1 2 2 1 3\n");
    r = call({"knit", "-t", "A2", "-i", "2,1", "--format", "json"});
    CHECK(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["cols"] == nlohmann::json::array({0, 5}));
    CHECK(j["rows"][0][2] == 3);
    r = call({"knit", "-t", "A2", "-i", "2,1", "--format", "csv", "--cols", "0..1"});
    CHECK(r.out == "m,row1,row2\n0,2,1\n1,1,2\n");
}

TEST_CASE("knit failure exits 2 with a json error") {
    const auto r = call({"knit", "--type", "A2", "--kind", "y", "--initial", "2,2"});
    CHECK(r.code == 2);
    const auto j = nlohmann::json::parse(r.err);
    CHECK(j["error"] == "KnitFailure");
    CHECK(j["at"]["row"] == 1);
    CHECK(j["at"]["col"] == 1);
    CHECK(j["direction"] == "forward");
}

TEST_CASE("usage errors exit 1") {
    CHECK(call({}).code == 1);
    CHECK(call({"frobnicate"}).code == 1);
    CHECK(call({"knit", "--type", "Q3", "-i", "1"}).code == 1);
    CHECK(call({"knit", "--type", "A2", "-i", "1,2,3"}).code == 1);
    CHECK(call({"knit", "--type", "A2", "--cartan", "2,-1;-1,2", "-i", "1,1"}).code == 1);
    CHECK(call({"knit", "--type", "A2", "-i", "1,1", "--cols", "3..1"}).code == 1);
    CHECK(call({"enumerate", "--type", "A2"}).code == 1);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("knit output round trips through verify") {
    const auto k = call({"knit", "--cartan", "2,-1,0;-1,2,-1;0,-1,2", "-s", "universal", "--format", "json"});
    REQUIRE(k.code == 0);
    const std::string path = "cli_roundtrip.json";
    std::ofstream(path) << k.out;
    const auto v = call({"verify", "--input", path, "--glide"});
    CHECK(v.code == 0);
    CHECK(nlohmann::json::parse(v.out)["valid"] == true);

    auto j = nlohmann::json::parse(k.out);
    j["rows"][1][2] = "y1";
    std::ofstream(path) << j.dump();
    const auto bad = call({"verify", "--input", path});
    CHECK(bad.code == 2);
    CHECK(nlohmann::json::parse(bad.err)["valid"] == false);
    std::remove(path.c_str());
}

TEST_CASE("enumerate report") {
    const auto r = call({"enumerate", "--type", "G2", "--kind", "y", "--cap", "128", "--threads", "2"});
    REQUIRE(r.code == 0);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j["count"] == 21);
    CHECK(j["complete"] == false);
    const auto again = call({"enumerate", "--type", "G2", "--kind", "y", "--cap", "128", "--threads", "1"});
    CHECK(again.out == r.out);
}

TEST_CASE("map, belt, mutate, gca, tropical, glide") {
    auto r = call({"map", "-t", "A3", "-s", "qpos", "-i", "1,2,3", "--format", "csv", "--cols", "0..2"});
    CHECK(r.code == 0);
    CHECK(r.out.substr(0, 16) == "m,row1,row2,row3");

    r = call({"belt", "-t", "A3", "--cols", "0..1", "--check"});
    CHECK(r.code == 0);
    CHECK(r.out.find("y(2,0) = y2 + y1*y2\n") != std::string::npos);
    CHECK(nlohmann::json::parse(r.err)["laurent_positive"] == true);

    r = call({"belt", "-t", "A3", "--unitary"});
    CHECK(r.out.substr(0, 8) == " 1 3 3 1");

    r = call({"mutate", "--matrix", "0,2,-2;-2,0,2;2,-2,0", "--orbit"});
    CHECK(r.out == "0,-2,2;2,0,-2;-2,2,0\n0,2,-2;-2,0,2;2,-2,0\n");

    r = call({"mutate", "-t", "A2", "--sequence", "1,2,1,2,1", "--flavor", "a", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["vars"] == nlohmann::json::array({"x2", "x1"}));

    r = call({"gca", "-b", "2", "-c", "1"});
    CHECK(r.out.substr(0, 10) == "period: 6\n");
    r = call({"gca", "-b", "3", "-c", "1", "--phi"});
    CHECK(nlohmann::json::parse(r.out)["phi"] == true);
    r = call({"gca", "-b", "1", "-c", "3", "--point", "3,8"});
    CHECK(nlohmann::json::parse(r.out)["inside"] == false);

    r = call({"tropical", "-t", "E8"});
    CHECK(nlohmann::json::parse(r.out)["solutions"] == nlohmann::json::array({std::vector<int>(8, 0)}));

    r = call({"glide", "-t", "A3", "-k", "y", "-s", "qpos", "-i", "1/2,3,5/7"});
    CHECK(r.code == 0);
    CHECK(nlohmann::json::parse(r.out)["invariant"] == true);
}
