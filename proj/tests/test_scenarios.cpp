#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "starq/io.hpp"
#include "starq/printer.hpp"
#include "starq/scenarios.hpp"
#include "test_support.hpp"

using namespace starq;
using namespace starq::testing;

namespace {
void expect_all_pass(const ScenarioReport& rep) {
    for (const auto& c : rep.checks) {
        INFO(rep.name, ": ", c.description, " -- ", c.witness);
        CHECK(c.passed);
    }
    CHECK(rep.passed());
}
}  // namespace

TEST_CASE("cross scenario passes and records the free-term discrepancy") {
    ScenarioReport rep = run_cross();
    expect_all_pass(rep);
    REQUIRE_FALSE(rep.discrepancies.empty());
    CHECK(rep.discrepancies.front().find("4*lambda^2") != std::string::npos);
}

TEST_CASE("double line scenario: family, homomorphism, and the spec matrices") {
    ScenarioReport rep = run_double_line();
    expect_all_pass(rep);
}

TEST_CASE("double point scenario: forced zero slot, constant scalar, multiplication law") {
    ScenarioReport rep = run_double_point();
    expect_all_pass(rep);
}

TEST_CASE("fat circle scenario: harmonic family, operator condition, nontriviality") {
    ScenarioReport rep = run_fat_circle();
    expect_all_pass(rep);
}

TEST_CASE("scenario reports are deterministic for a fixed seed") {
    ScenarioReport a = run_cross(99);
    ScenarioReport b = run_cross(99);
    REQUIRE(a.checks.size() == b.checks.size());
    for (std::size_t i = 0; i < a.checks.size(); ++i) {
        CHECK(a.checks[i].passed == b.checks[i].passed);
        CHECK(a.checks[i].witness == b.checks[i].witness);
    }
    CHECK(a.seed == 99);
}

TEST_CASE("matrix representation of spec instances") {
    // phi(p2-member) and phi(x2-member), then the product against the oracle
    WeylElement p2 = pv(1);
    WeylElement h_p2 =
        p2 - star(StarConfig::moyal(),
                  (p2 * p2).times_parameter(-1).scaled(Gaussian(Rational(1, 2))), xv(1));
    MatrixRep m = matrix_rep(h_p2);
    CHECK(m.at(0, 0).is_zero());
    CHECK(m.at(0, 1) == WeylElement::constant(2, Gaussian(1)));
    CHECK(m.at(1, 0).is_zero());
    CHECK(m.at(1, 1).is_zero());

    MatrixRep mx2 = matrix_rep(xv(1));
    CHECK(mx2.at(1, 0) == WeylElement::parameter(2, 1).scaled(Gaussian(2)));
    CHECK(mx2.at(0, 0).is_zero());

    MatrixRep prod = matrix_star(m, mx2);
    CHECK(prod.at(0, 0) == WeylElement::parameter(2, 1).scaled(Gaussian(2)));
    CHECK(prod.at(0, 1).is_zero());

    CHECK_THROWS_AS(matrix_rep(pv(1) * pv(1)), std::domain_error);
}

TEST_CASE("scenario dispatch and report serialization") {
    CHECK_THROWS_AS(run_scenario("nonsense"), std::invalid_argument);
    CHECK(scenario_names().size() == 4);
    ScenarioReport rep = run_scenario("double_point");
    std::string text = report_to_text(rep);
    CHECK(text.find("double_point") != std::string::npos);
    std::string json = report_to_json(rep);
    CHECK(json.find("\"schema_version\": 1") != std::string::npos);
    CHECK(json.find("\"passed\": true") != std::string::npos);
}
