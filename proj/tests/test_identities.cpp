#include <cmath>

#include <doctest.h>
#include <json.hpp>

#include "hyperverify/identities.hpp"
#include "hyperverify/quadrature.hpp"
#include "hyperverify/transforms.hpp"

using namespace hyperverify;

namespace {

run_config config_with(std::uint64_t seed, int parallelism = 1) {
    run_config cfg;
    cfg.seed = seed;
    cfg.parallelism = parallelism;
    cfg.all_cases = true;
    return cfg;
}

}  // namespace

TEST_CASE("halton points are deterministic and in range") {
    const auto u1 = plan_point("example1", 42, 7, 4);
    const auto u2 = plan_point("example1", 42, 7, 4);
    CHECK(u1 == u2);
    for (double x : u1) {
        CHECK(x >= 0.0);
        CHECK(x < 1.0);
    }
    // different seeds shift the plan
    CHECK(plan_point("example1", 1, 3, 2) != plan_point("example1", 2, 3, 2));
}

TEST_CASE("example1: closed-form anchor and the printed-form failure") {
    // sample 0 pins a = b = 1, t = 1: the convolution equals t e^t = e,
    // the corrected right side matches, the printed one collapses to 0.
    const auto* verbatim = find_case("example1");
    const auto* corrected = find_case("example1_corrected");
    REQUIRE(verbatim != nullptr);
    REQUIRE(corrected != nullptr);
    const auto s_bad = verbatim->eval(0, 11, default_tolerances());
    CHECK(s_bad.lhs.real() ==
          doctest::Approx(std::exp(1.0)).epsilon(1e-10));
    CHECK(std::abs(s_bad.rhs) < 1e-9);
    CHECK(std::abs(s_bad.residual) > 0.1);

    const auto s_good = corrected->eval(0, 11, default_tolerances());
    CHECK(s_good.lhs.real() ==
          doctest::Approx(std::exp(1.0)).epsilon(1e-10));
    CHECK(s_good.rhs.real() ==
          doctest::Approx(std::exp(1.0)).epsilon(1e-10));
    CHECK(std::abs(s_good.residual) < 1e-10);
}

TEST_CASE("flagged cases fail as shipped, corrected forms pass") {
    const run_config cfg = config_with(7);
    for (const char* id : {"example1", "example5c"}) {
        const auto rep = run_case(*find_case(id), cfg);
        CHECK(rep.status == "fail");
        CHECK(rep.max_rel_residual > 1e-3);
    }
    for (const char* id : {"example1_corrected", "example5c_corrected"}) {
        const auto rep = run_case(*find_case(id), cfg);
        CHECK(rep.status == "pass");
    }
}

TEST_CASE("gamma cancellation case passes and is exact at s = 1") {
    const auto* c = find_case("gamma_cancellation");
    REQUIRE(c != nullptr);
    const auto rep = run_case(*c, config_with(3));
    CHECK(rep.status == "pass");
    // alias resolves to the same case
    CHECK(find_case("sigma3_jump_cancel") == c);
    // pinned sample 0 sits at s = 1 where the cancellation is rational
    const auto s0 = c->eval(0, 3, default_tolerances());
    CHECK(s0.inputs.at(0).second == 1.0);
    CHECK(std::abs(s0.lhs) < 1e-13);
}

TEST_CASE("theorem41: gamma-oracle anchor at p=1, m=0") {
    // LHS = G(0.6)G(1.6)/(G(1.1)G(2.1)) - (G(1.1)/G(1.6))^2
    const double expected =
        std::tgamma(0.6) * std::tgamma(1.6) /
            (std::tgamma(1.1) * std::tgamma(2.1)) -
        std::pow(std::tgamma(1.1) / std::tgamma(1.6), 2.0);
    double lhs = 0.0, rhs = 0.0;
    const double res =
        verify_theorem41({0.6}, {1.1}, 0.5, 0.5, 0, 1e-9, &lhs, &rhs);
    CHECK(lhs == doctest::Approx(expected).epsilon(1e-13));
    CHECK(res < 1e-7);
}

TEST_CASE("theorem41: a = b collapses both sides to zero") {
    double lhs = 0.0, rhs = 0.0;
    verify_theorem41({0.7}, {0.7}, 0.9, 0.4, 2, 1e-9, &lhs, &rhs);
    CHECK(std::abs(lhs) < 1e-12);
    CHECK(std::abs(rhs) < 1e-12);
}

TEST_CASE("theorem41: alpha-beta exchange symmetry") {
    double l1 = 0.0, r1 = 0.0, l2 = 0.0, r2 = 0.0;
    verify_theorem41({0.6}, {1.3}, 0.8, 0.35, 1, 1e-9, &l1, &r1);
    verify_theorem41({0.6}, {1.3}, 0.35, 0.8, 1, 1e-9, &l2, &r2);
    CHECK(std::abs(l1 - l2) < 1e-12 * std::max(1.0, std::abs(l1)));
    CHECK(std::abs(r1 - r2) < 1e-10 * std::max(1.0, std::abs(r1)));
}

TEST_CASE("theorem41: residual decreases as quadrature tolerance tightens") {
    double prev = 1e9;
    for (double qtol : {1e-3, 1e-5, 1e-7, 1e-9}) {
        const double res =
            verify_theorem41({0.45, 0.95}, {0.8, 1.4}, 0.7, 1.1, 1, qtol);
        CHECK(res <= prev * 1.5 + 1e-12);
        prev = res;
    }
    CHECK(prev < 1e-7);
}

TEST_CASE("corollary41 matches theorem41 at p = 1 and vanishes at a = b") {
    double l1 = 0.0, r1 = 0.0;
    const double res =
        verify_corollary41(0.6, 1.1, 0.5, 0.5, 0, 1e-9, &l1, &r1);
    CHECK(res < 1e-7);
    double l0 = 0.0, r0 = 0.0;
    verify_corollary41(0.8, 0.8, 0.6, 0.9, 1, 1e-9, &l0, &r0);
    CHECK(std::abs(l0) < 1e-12);
    CHECK(std::abs(r0) < 1e-12);  // 1/Gamma(b - a) = 0 kills the prefactor
}

TEST_CASE("inequality suite: admissible sample has positive slack") {
    const inequality_report rep = verify_inequalities(
        {0.5, 1.0, 1.5}, {1.2, 1.7}, complex_t(-1.0, 0.0));
    CHECK(rep.passed);
    CHECK(rep.min_slack > 0.0);
}

TEST_CASE("inequality suite: Koebe witness attains the first lower bound") {
    // g(z) = 2F1(1,2;1;z) = (1-z)^{-2}, extremal: at z = -1 the first
    // inequality is an equality, 3/4 on both sides.
    const param_vector a{1.0, 2.0};
    const param_vector b{1.0};
    const inequality_report rep =
        verify_inequalities(a, b, complex_t(-1.0, 0.0));
    CHECK(std::abs(rep.slack[0]) < 1e-12);

    const hypergeometric_spec spec(a, b);
    const complex_t f = pfq_continued(spec, complex_t(-1.0, 0.0));
    CHECK(std::abs(f - 0.25) < 1e-13);
    const double lower = 2.0 * 2.0 * 3.0 * 1.0 / (1.0 * 16.0);
    CHECK(std::abs(std::abs(f - 1.0) - lower) < 1e-12);  // 3/4 = 3/4
}

TEST_CASE("inequality bounds pinch to Taylor data as z -> 0-") {
    const param_vector a{0.5, 1.0, 1.5};
    const param_vector b{1.2, 1.7};
    const hypergeometric_spec spec(a, b);
    const double ratio = a.product() / b.product();
    for (double x : {-1e-3, -1e-4}) {
        const complex_t f = pfq_continued(spec, complex_t(x, 0.0));
        CHECK(std::abs(f - 1.0) ==
              doctest::Approx(ratio * std::abs(x)).epsilon(2e-3));
    }
}

TEST_CASE("run_case marks evaluator errors as errored, not failed") {
    identity_case broken;
    broken.id = "broken";
    broken.anchor = "always throws";
    broken.sample_count = 2;
    broken.eval = [](int k, std::uint64_t, const tolerance_config&) {
        if (k == 1) throw evaluation_error("boom");
        sample_record r;
        r.lhs = r.rhs = 1.0;
        return r;
    };
    const auto rep = run_case(broken, config_with(1));
    CHECK(rep.status == "errored");
    CHECK(rep.samples[1].errored);
    CHECK(rep.samples[1].error == "boom");
}

TEST_CASE("reports are deterministic and parallelism-independent") {
    run_config serial = config_with(42);
    serial.cases = {"gamma_cancellation", "sin3arctan", "jump_2F1"};
    serial.all_cases = false;

    run_config parallel = serial;
    parallel.parallelism = 4;

    std::vector<verification_report> r1, r2, r3;
    for (const auto& id : serial.cases) {
        r1.push_back(run_case(*find_case(id), serial));
        r2.push_back(run_case(*find_case(id), serial));
        r3.push_back(run_case(*find_case(id), parallel));
    }
    const std::string j1 = emit_report_json(r1, serial);
    const std::string j2 = emit_report_json(r2, serial);
    const std::string j3 = emit_report_json(r3, parallel);
    CHECK(j1 == j2);
    CHECK(j1 == j3);
}

TEST_CASE("json report round-trips losslessly") {
    run_config cfg = config_with(5);
    cfg.cases = {"gamma_cancellation"};
    cfg.all_cases = false;
    std::vector<verification_report> reps{
        run_case(*find_case("gamma_cancellation"), cfg)};
    const std::string doc = emit_report_json(reps, cfg);
    const auto parsed = nlohmann::ordered_json::parse(doc);
    CHECK(parsed.is_array());
    CHECK(parsed.size() == 1);
    CHECK(parsed[0]["case_id"] == "gamma_cancellation");
    CHECK(parsed[0]["status"] == "pass");
    CHECK(parsed[0]["samples"].size() == 100);
    CHECK(parsed[0]["seed"] == 5);
    // re-serialization is byte-identical
    CHECK(parsed.dump(2) + "\n" == doc);
}

TEST_CASE("csv and text emitters") {
    run_config cfg = config_with(5);
    cfg.cases = {"gamma_cancellation"};
    cfg.all_cases = false;
    std::vector<verification_report> reps{
        run_case(*find_case("gamma_cancellation"), cfg)};
    const std::string csv = emit_report_csv(reps);
    CHECK(csv.find("case_id,status,max_rel_residual,duration_ms") !=
          std::string::npos);
    CHECK(csv.find("gamma_cancellation,pass") != std::string::npos);
    const std::string text = emit_report_text(reps);
    CHECK(text.find("summary: pass=1 fail=0") != std::string::npos);
    // empty report is still a valid document
    const std::string empty = emit_report_json({}, cfg);
    CHECK(nlohmann::ordered_json::parse(empty).is_array());
}
