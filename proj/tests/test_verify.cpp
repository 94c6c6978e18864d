#include "ea/verify.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace ea;

namespace {

// Reduced budgets keep the unit run fast; the acceptance binary runs the
// full defaults.
Budget small_budget(const std::string& suite) {
    Budget b;
    b.seed = 1;
    if (suite == "kuratowski") b.params = {{"code_max", 1u << 12}, {"random_cases", 500}};
    if (suite == "induction-recursion") b.params = {{"cases", 300}};
    if (suite == "splitting") b.params = {{"code_max", 1u << 12}};
    if (suite == "bounding") b.params = {{"env_count", 10}};
    if (suite == "rank") b.params = {{"code_max", 1u << 10}};
    if (suite == "numeral-base") b.params = {{"term_cap", 64}};
    if (suite == "numeral-length") b.params = {{"term_count", 32}};
    if (suite == "lex-ack") b.params = {{"kmax", 256}};
    if (suite == "ack-phi") b.params = {{"probe", 32}};
    if (suite == "one-point-induction") b.params = {{"cases", 100}};
    return b;
}

}  // namespace

TEST_CASE("every suite passes at reduced budget") {
    for (const std::string& name : suite_names()) {
        SuiteReport rep = run_suite(name, small_budget(name));
        INFO(name << ": " << (rep.total_failures() ? rep.groups[0].name : "ok"));
        for (const auto& g : rep.groups)
            for (const auto& f : g.failures) UNSCOPED_INFO(name << "/" << g.name << ": " << f);
        REQUIRE(rep.passed());
        REQUIRE(rep.total_cases() > 0);
        REQUIRE_FALSE(rep.groups.empty());
        REQUIRE(rep.budget.count("seed") == 1);
    }
}

TEST_CASE("suites are deterministic under a fixed seed") {
    Budget b = small_budget("kuratowski");
    SuiteReport r1 = run_suite("kuratowski", b);
    SuiteReport r2 = run_suite("kuratowski", b);
    REQUIRE(r1.total_cases() == r2.total_cases());
    REQUIRE(r1.groups.size() == r2.groups.size());
    for (std::size_t i = 0; i < r1.groups.size(); ++i) {
        REQUIRE(r1.groups[i].name == r2.groups[i].name);
        REQUIRE(r1.groups[i].cases == r2.groups[i].cases);
    }
}

TEST_CASE("budget parameters are visible in the report") {
    Budget b;
    b.params["code_max"] = 1024;
    SuiteReport rep = run_suite("rank", b);
    REQUIRE(rep.budget.at("code_max") == "1024");
    REQUIRE(rep.seconds >= 0.0);
}

TEST_CASE("budget spec strings parse as key=value lists") {
    Budget b;
    b.merge_spec("code_max=512,cases=7");
    REQUIRE(b.get("code_max", 0) == 512);
    REQUIRE(b.get("cases", 0) == 7);
    REQUIRE(b.get("missing", 42) == 42);
    REQUIRE_THROWS_AS(b.merge_spec("oops"), domain_error);
    REQUIRE_THROWS_AS(b.merge_spec("k=x"), domain_error);
}

TEST_CASE("unknown suite names are rejected") {
    REQUIRE_THROWS_AS(run_suite("no-such-suite", {}), domain_error);
}
