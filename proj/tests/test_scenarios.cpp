#include <doctest.h>

#include <rct/scenarios.hpp>

using namespace rct;

TEST_CASE("every registered scenario runs and passes with defaults")
{
    RunOptions opt;
    for (const ScenarioSpec& spec : all_scenarios()) {
        CAPTURE(spec.name);
        REQUIRE(scenario_exists(spec.name));
        ScenarioResult res = run_scenario(spec.name, opt);
        for (const std::string& msg : res.messages)
            MESSAGE(spec.name, ": ", msg);
        CHECK(res.pass);
        CHECK(!res.csv_rows.empty());
        CHECK(res.report.contains("pass"));
    }
}

TEST_CASE("unknown scenarios are rejected")
{
    CHECK(!scenario_exists("no-such-preset"));
    CHECK_THROWS_AS(run_scenario("no-such-preset", RunOptions{}), std::invalid_argument);
}
