#include "nesthilb/cli.hpp"
#include "nesthilb/error.hpp"

#include "doctest.h"
#include "json.hpp"

#include <sstream>

using namespace nesthilb;
using namespace nesthilb::cli;

namespace {

const std::string kData = NESTHILB_TEST_DATA;

int run_capture(const RunConfig &config, std::string &out, std::string &err) {
    std::ostringstream o, e;
    const int code = run(config, o, e);
    out = o.str();
    err = e.str();
    return code;
}

} // namespace

TEST_CASE("selectors") {
    CHECK(resolve_surface("p2").euler_number() == 3);
    CHECK(resolve_surface("p1xp1").euler_number() == 4);
    CHECK(resolve_surface("fa:3").name == "fa:3");
    CHECK(resolve_surface("file:" + kData + "/plane.json").name == "plane-descriptor");
    CHECK_THROWS_AS(resolve_surface("p3"), Error);
    CHECK_THROWS_AS(resolve_surface("fa:x"), Error);
    const ToricSurface q = resolve_surface("p1xp1");
    CHECK(resolve_bundle(q, "1,1,0,0").divisor == std::vector<int>{1, 1, 0, 0});
    CHECK(resolve_bundle(q, "-1,0,+2,0").divisor == std::vector<int>{-1, 0, 2, 0});
    CHECK(resolve_bundle(q, "K").weights == canonical_bundle(q).weights);
    CHECK_THROWS_AS(resolve_bundle(q, "1,1"), Error);
    CHECK_THROWS_AS(resolve_bundle(q, "L"), Error);
}

TEST_CASE("exit codes") {
    std::string out, err;
    RunConfig ok;
    ok.surface = "p2";
    ok.bundle = "0,0,0";
    ok.check = "theorem7";
    ok.nmax = 2;
    CHECK(run_capture(ok, out, err) == kPass);
    CHECK(out.find("PASS") != std::string::npos);

    RunConfig missing;
    missing.surface = "file:missing.json";
    CHECK(run_capture(missing, out, err) == kUsage);
    CHECK(err.find("missing.json") != std::string::npos);

    RunConfig bad = ok;
    bad.nmax = -1;
    CHECK(run_capture(bad, out, err) == kUsage);
    bad = ok;
    bad.workers = 0;
    CHECK(run_capture(bad, out, err) == kUsage);
    bad = ok;
    bad.format = "xml";
    CHECK(run_capture(bad, out, err) == kUsage);

    RunConfig structural = ok;
    structural.surface = "file:" + kData + "/inconsistent.json";
    structural.bundle = "H";
    structural.nmax = 1;
    CHECK(run_capture(structural, out, err) == kStructural);
    CHECK(err.find("inconsistent") != std::string::npos);
}

TEST_CASE("JSON report schema") {
    RunConfig config;
    config.surface = "p1xp1";
    config.bundle = "1,0,0,0";
    config.check = "all";
    config.nmax = 1;
    config.format = "json";
    const RunResult result = execute(config);
    CHECK(result.pass());
    const auto doc = nlohmann::json::parse(to_json(result));
    CHECK(doc.at("surface") == "p1xp1");
    CHECK(doc.at("bundle") == nlohmann::json::array({1, 0, 0, 0}));
    CHECK(doc.at("seed") == 1);
    CHECK(doc.at("pass") == true);
    std::vector<std::string> names;
    for (const auto &c : doc.at("checks")) {
        names.push_back(c.at("name"));
        CHECK(c.at("pass").is_boolean());
        CHECK(c.at("configs_evaluated").is_number_integer());
        CHECK(c.at("millis") == 0);
        for (const auto &e : c.at("entries")) {
            CHECK(e.at("n1").is_number_integer());
            CHECK(e.at("n2").is_number_integer());
            const std::string lhs = e.at("lhs");
            CHECK(lhs.find('/') != std::string::npos);
            CHECK(e.at("match").is_boolean());
        }
    }
    CHECK(names == std::vector<std::string>{"theorem7", "theorem5", "case2", "case3", "zprod"});

    // Text and JSON carry the same values.
    const std::string text = to_text(result);
    for (const auto &c : doc.at("checks"))
        for (const auto &e : c.at("entries"))
            CHECK(text.find(e.at("rhs").get<std::string>()) != std::string::npos);
}

TEST_CASE("non-Fano surfaces report the nested/product comparison without asserting it") {
    RunConfig config;
    config.surface = "fa:2";
    config.check = "theorem5";
    config.nmax = 1;
    const RunResult result = execute(config);
    REQUIRE(result.checks.size() == 1);
    CHECK_FALSE(result.checks[0].asserted);
    CHECK(to_text(result).find("informational") != std::string::npos);
}

TEST_CASE("custom descriptor runs every check") {
    RunConfig config;
    config.surface = "file:" + kData + "/plane.json";
    config.bundle = "H";
    config.nmax = 2;
    const RunResult result = execute(config);
    CHECK(result.pass());
    for (const auto &c : result.checks)
        CHECK(c.asserted);
}

TEST_CASE("timing is opt-in") {
    RunConfig config;
    config.check = "theorem7";
    config.nmax = 1;
    config.timing = true;
    std::string out, err;
    CHECK(run_capture(config, out, err) == kPass);
}
