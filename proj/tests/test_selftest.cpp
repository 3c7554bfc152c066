#include <catch2/catch_amalgamated.hpp>

#include "sl2tilt/selftest.hpp"

using namespace sl2tilt;

TEST_CASE("all CLI suites pass on a correct build") {
    auto results = run_selftest({2, 3}, 120);
    for (const auto& res : results) {
        INFO(res.name << " first counterexample: " << res.first_counterexample);
        CHECK(res.passed());
        CHECK(res.checked > 0);
    }
}

TEST_CASE("selftest on max 0 passes trivially") {
    for (const auto& res : run_selftest({2}, 0))
        CHECK(res.passed());
}

TEST_CASE("negative control: a corrupted criterion is caught") {
    DeciderFn corrupted = [](Int p, Int r, Int s) {
        bool v = detail::explicit_tilting(p, r, s);
        return (r == 2 && s == 0) ? !v : v;
    };
    SuiteResult res = suites::oracle_equivalence(2, 10, corrupted);
    CHECK_FALSE(res.passed());
    CHECK(res.first_counterexample == "(p=2, r=2, s=0)");
}

TEST_CASE("extra invariant suites pass") {
    for (Int p : {2, 3, 5, 7}) {
        CHECK(suites::near_diagonal(p, 300).passed());
        CHECK(suites::steinberg_pairs(p, 600).passed());
        CHECK(suites::propagation(p, 100).passed());
        CHECK(suites::necessary_condition(p, 300).passed());
    }
}
