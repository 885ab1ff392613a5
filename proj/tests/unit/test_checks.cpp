#include "delta/checks.hpp"

#include <catch_amalgamated.hpp>

using namespace delta;

namespace {
CheckConfig at(int n, int k = -1) {
    CheckConfig c;
    c.n_max = n;
    c.k = k;
    return c;
}
}  // namespace

TEST_CASE("named checks on small parameters") {
    auto r = run_check("delta-rise", at(4, 2));
    CHECK(r.passed());
    CHECK(r.status == CheckStatus::Conjecture);
    CHECK(r.cases.back().params == "n=4;k=2;N=4");

    auto e = run_check("eq3", at(2, 3));
    REQUIRE(e.cases.size() == 2);  // n = 1 and n = 2 at k = 3, both beyond n
    CHECK(e.passed());

    auto c = run_check("cat4", at(2));
    CHECK(c.passed());
    CHECK(c.status == CheckStatus::Theorem);
}

TEST_CASE("catalog shape") {
    auto names = all_check_names();
    CHECK(std::is_sorted(names.begin(), names.end()));
    for (const char* n : {"delta-rise", "delta-valley", "eq3", "thm-zero", "omp", "minimaj-equi", "t-recip", "schur-pos",
                          "k1", "q=t=1", "llt-sym", "val-sym", "cat4", "cat-touch", "cat-comp", "eh", "eh-touch", "bijections"})
        CHECK(find_check(n) != nullptr);
    CHECK_THROWS_AS(run_check("no-such-check", {}), std::invalid_argument);
    CHECK_THROWS_AS(parse_profile("medium"), std::invalid_argument);
}

TEST_CASE("empty suite gives an empty report") {
    auto rep = run_suite({}, {});
    CHECK(rep.checks.empty());
    CHECK_FALSE(rep.theorem_failure());
    CHECK(report_structured(rep) == "checks=0\ntheorem_failure=0\nconjecture_mismatches=0\n");
}

TEST_CASE("a wrong convention is a theorem failure with both sides reported") {
    CheckConfig cfg = at(3);
    cfg.qt_zero = QtZero::One;
    auto rep = run_suite({"k1"}, cfg);
    REQUIRE(rep.checks.size() == 1);
    CHECK(rep.theorem_failure());
    bool payload = false;
    for (const auto& c : rep.checks[0].cases)
        if (!c.pass) payload = payload || (!c.expected.empty() && !c.actual.empty() && c.expected != c.actual);
    CHECK(payload);
    CHECK(report_text(rep).find("FAIL") != std::string::npos);
}

TEST_CASE("reports are ordered by name and repeatable") {
    auto a = run_suite({"eq3", "cat4", "eq3"}, at(3));
    REQUIRE(a.checks.size() == 2);
    CHECK(a.checks[0].name == "cat4");
    auto b = run_suite({"cat4", "eq3"}, at(3));
    CHECK(report_structured(a) == report_structured(b));
    CHECK(report_text(a) == report_text(b));
}
