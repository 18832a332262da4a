#include "doctest.h"

#include <stdexcept>

#include "gsp4/suites.hpp"

using namespace gsp4;

TEST_CASE("every suite passes") {
    for (const auto& name : suite_names()) {
        SuiteResult r = run_suite(name);
        CHECK(r.suite == name);
        CHECK_FALSE(r.checks.empty());
        for (const auto& c : r.checks) {
            INFO(name << ": " << c.name << " " << c.detail);
            CHECK(c.ok());
        }
    }
}

TEST_CASE("suite lookup") {
    CHECK_THROWS_AS(run_suite("nope"), std::invalid_argument);
    CHECK_THROWS_AS(run_suites({"lie", "nope"}, 2), std::invalid_argument);
    CHECK(suite_names().size() == 5);
}

TEST_CASE("parallel runs keep order and results") {
    auto serial = run_suites({"constants", "lie"}, 1);
    auto parallel = run_suites({"constants", "lie"}, 2);
    REQUIRE(serial.size() == 2);
    REQUIRE(parallel.size() == 2);
    CHECK(parallel[0].suite == "constants");
    CHECK(parallel[1].suite == "lie");
    for (std::size_t i = 0; i < 2; ++i) {
        REQUIRE(serial[i].checks.size() == parallel[i].checks.size());
        for (std::size_t j = 0; j < serial[i].checks.size(); ++j) {
            CHECK(serial[i].checks[j].name == parallel[i].checks[j].name);
            CHECK(serial[i].checks[j].passed == parallel[i].checks[j].passed);
            CHECK(serial[i].checks[j].total == parallel[i].checks[j].total);
        }
    }
}
