#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

using nlohmann::json;

std::string cli_path() {
    const char* p = std::getenv("AMALGAM_CLI_PATH");
    REQUIRE_MESSAGE(p != nullptr, "AMALGAM_CLI_PATH must be set");
    return p;
}

struct RunResult {
    int exit_code = -1;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    static int counter = 0;
    std::string out_file = "cli_out_" + std::to_string(counter++) + ".txt";
    std::string cmd = "\"" + cli_path() + "\" " + args + " > " + out_file +
                      " 2> /dev/null";
    int status = std::system(cmd.c_str());
    RunResult r;
#ifdef _WIN32
    r.exit_code = status;
#else
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
#endif
    std::ifstream in(out_file);
    std::stringstream ss;
    ss << in.rdbuf();
    r.stdout_text = ss.str();
    std::remove(out_file.c_str());
    return r;
}

const std::string kChi = R"('{"breakpoints":[0,1],"values":[1,1]}')";
const std::string kHat = R"('{"breakpoints":[0,1],"values":[1,0]}')";

}  // namespace

TEST_CASE("norm seq reports the spike value") {
    auto r = run("norm --kind seq --spec '{\"gen\":\"single-spike\",\"n\":8}'");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.stdout_text);
    CHECK(j["value"].get<double>() == doctest::Approx(4.0));
}

TEST_CASE("norm fun brackets the indicator value") {
    auto r = run("norm --kind fun --tol 1e-10 --spec " + kChi);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.stdout_text);
    CHECK(j["value"].get<double>() ==
          doctest::Approx(2.1050470774275443).epsilon(1e-8));
    CHECK(j["tail_bound"].get<double>() < 1e-9);
}

TEST_CASE("transform point evaluation") {
    auto r = run("transform --kind cos --at 2.0 --spec " + kChi);
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.stdout_text);
    CHECK(j["value"].get<double>() == doctest::Approx(std::sin(2.0) / 2.0));
}

TEST_CASE("transform grid emits CSV with a header") {
    auto r = run("transform --kind t --grid 0.4:0.9:5 --spec " + kChi);
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.stdout_text);
    std::string line;
    REQUIRE(std::getline(lines, line));
    CHECK(line == "x,value");
    int rows = 0;
    while (std::getline(lines, line))
        if (!line.empty()) ++rows;
    CHECK(rows == 5);
    CHECK(r.stdout_text.find(',') != std::string::npos);
}

TEST_CASE("decompose runs on an admissible model") {
    auto r = run("decompose --gamma 1 --grid 0.5:10:8 --spec " + kHat);
    REQUIRE(r.exit_code == 0);
    std::istringstream lines(r.stdout_text);
    std::string header;
    REQUIRE(std::getline(lines, header));
    CHECK(header == "x,transform,main,remainder");
}

TEST_CASE("decompose refuses a jump model with exit code 3") {
    auto r = run("decompose --gamma 1 --spec " + kChi);
    CHECK(r.exit_code == 3);
}

TEST_CASE("grid hitting a pole of the kernel exits 3, not abort") {
    // t = 1.0 lands on the jump of the indicator, a genuine pole of the PV.
    auto r = run("transform --kind t --grid 0.5:1.5:5 --spec " + kChi);
    CHECK(r.exit_code == 3);
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("norm --kind bogus --spec " + kChi).exit_code == 2);
    CHECK(run("norm --spec " + kChi).exit_code == 2);
    CHECK(run("transform --kind cos --spec " + kChi).exit_code == 2);
    CHECK(run("verify --suite no-such-claim").exit_code == 2);
    CHECK(run("frobnicate").exit_code != 0);
}

TEST_CASE("verify single fast suite passes and emits a report array") {
    auto r = run("verify --suite tchi-l1-ln3");
    REQUIRE(r.exit_code == 0);
    json j = json::parse(r.stdout_text);
    REQUIRE(j.is_array());
    REQUIRE(!j.empty());
    for (const auto& rep : j) {
        CHECK(rep["passed"].get<bool>());
        CHECK(rep.contains("claim_id"));
        CHECK(rep.contains("runtime_ms"));
    }
}
