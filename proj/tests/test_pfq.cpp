#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "hyperverify/errors.hpp"
#include "hyperverify/pfq.hpp"
#include "hyperverify/transforms.hpp"

using namespace hyperverify;

namespace {
constexpr double pi = 3.141592653589793238462643383279502884;
const complex_t I(0.0, 1.0);
}

TEST_CASE("series anchors") {
    const hypergeometric_spec log_spec({1.0, 1.0}, {2.0});
    CHECK(std::abs(pfq_series(log_spec, 0.0) - 1.0) < 1e-15);
    // 2F1(1,1;2;z) = -log(1-z)/z
    CHECK(pfq_series(log_spec, 0.5).real() ==
          doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-13));
    // 1F1(2;2;1) = e
    const hypergeometric_spec exp_spec({2.0}, {2.0});
    CHECK(pfq_series(exp_spec, 1.0).real() ==
          doctest::Approx(std::exp(1.0)).epsilon(1e-13));
}

TEST_CASE("series radius policy and non-convergence error") {
    const hypergeometric_spec spec({1.0, 1.0}, {2.0});
    CHECK_THROWS_AS(pfq_series(spec, complex_t(0.95, 0.0)),
                    evaluation_error);
    tolerance_config tight;
    tight.max_terms = 5;
    CHECK_THROWS_AS(pfq_series(spec, complex_t(0.5, 0.0), tight),
                    non_convergence_error);
}

TEST_CASE("continuation of 2F1(1,1;2;z) across the plane") {
    const hypergeometric_spec spec({1.0, 1.0}, {2.0});
    // -log(1-z)/z at z = -3 (integer-separated upper pair: the Euler
    // reduction path)
    CHECK(pfq_continued(spec, complex_t(-3.0, 0.0)).real() ==
          doctest::Approx(std::log(4.0) / 3.0).epsilon(1e-11));
    CHECK(std::abs(pfq_continued(spec, complex_t(0.0, 0.0)) - 1.0) <
          1e-15);
    // generic complex point
    const complex_t z(-1.3, 2.4);
    const complex_t expect = -std::log(1.0 - z) / z;
    CHECK(std::abs(pfq_continued(spec, z) - expect) < 1e-11);
    // on-cut contact raises
    CHECK_THROWS_AS(pfq_continued(spec, complex_t(1.5, 0.0)),
                    cut_contact_error);
}

TEST_CASE("continuation with generic parameters against closed forms") {
    // 2F1(0.5,1;1;z) = (1-z)^{-1/2} after cancellation
    const hypergeometric_spec spec({0.5, 1.0}, {1.0});
    for (const complex_t z :
         {complex_t(-5.0, 0.0), complex_t(0.3, 1.7), complex_t(-0.97, 0.0),
          complex_t(0.99, 0.9), complex_t(-1.02, 0.01)}) {
        const complex_t expect = std::pow(1.0 - z, -0.5);
        CAPTURE(z.real());
        CAPTURE(z.imag());
        CHECK(std::abs(pfq_continued(spec, z) - expect) <
              1e-10 * std::abs(expect));
    }
}

TEST_CASE("degenerate pair (0.5,0.5;1) via the Euler reduction") {
    const hypergeometric_spec spec({0.5, 0.5}, {1.0});
    // At z = -1, 2F1(1/2,1/2;1;-1) = 1/AGM(1, sqrt 2) (Gauss's constant).
    const double agm_value = 0.8346268416740731;
    CHECK(pfq_continued(spec, complex_t(-1.0, 0.0)).real() ==
          doctest::Approx(agm_value).epsilon(1e-10));
}

TEST_CASE("degenerate pair matches the sigma=2 integral oracle, z < 0") {
    for (double w : {1.4, 2.5}) {
        const auto r = stieltjes_sigma2({0.5, 0.5}, {1.0},
                                        complex_t(w, 0.0));
        CHECK(std::abs(r.rel_residual) < 1e-8);
    }
}

TEST_CASE("continued evaluation matches the series on the overlap ring") {
    const hypergeometric_spec spec({0.4, 0.9, 1.3}, {1.1, 1.7});
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> rad(0.8, 0.9);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * pi);
    for (int i = 0; i < 25; ++i) {
        const complex_t z = std::polar(rad(rng), ang(rng));
        const complex_t direct = pfq_series(spec, z);
        const complex_t cont = pfq_continued(spec, z);
        CHECK(std::abs(direct - cont) < 1e-10 * (1.0 + std::abs(direct)));
    }
    // off the policy radius the accelerated path still matches a patient
    // direct summation
    for (double x : {-0.95, -0.99}) {
        const complex_t direct = detail::series_unchecked(
            spec, complex_t(x, 0.0), default_tolerances());
        const complex_t accel =
            detail::series_levin(spec, complex_t(x, 0.0),
                                 default_tolerances());
        CHECK(std::abs(direct - accel) < 1e-10 * (1.0 + std::abs(direct)));
    }
}

TEST_CASE("euler transformation invariant for 2F1") {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> par(0.3, 1.6);
    std::uniform_real_distribution<double> rad(0.05, 0.85);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * pi);
    for (int i = 0; i < 40; ++i) {
        const double a = par(rng), b = par(rng) + 0.1, c = a + b + par(rng);
        const complex_t z = std::polar(rad(rng), ang(rng));
        const complex_t lhs =
            pfq_continued(hypergeometric_spec({a, b}, {c}), z);
        const complex_t rhs =
            std::pow(1.0 - z, c - a - b) *
            pfq_continued(hypergeometric_spec({c - a, c - b}, {c}), z);
        CHECK(std::abs(lhs - rhs) < 1e-9 * (1.0 + std::abs(lhs)));
    }
}

TEST_CASE("cut values of the logarithmic anchor family") {
    const hypergeometric_spec spec({1.0, 1.0}, {2.0});
    // -log(1-z)/z: above the cut at x the jump is 2 pi i / x and the mean
    // is -log(x-1)/x.
    const cut_evaluation at2 = cut_values(spec, 2.0);
    CHECK(std::abs(at2.jump - I * pi) < 1e-9);
    CHECK(std::abs(at2.mean) < 1e-9);
    CHECK(std::abs(at2.above - std::conj(at2.below)) < 1e-10);

    const double x = std::exp(1.0) + 1.0;
    const cut_evaluation ate = cut_values(spec, x);
    CHECK(ate.mean.real() == doctest::Approx(-1.0 / x).epsilon(1e-9));
    CHECK(std::abs(ate.jump - I * (2.0 * pi / x)) < 1e-9);
}

TEST_CASE("cut values: generic parameters, conjugacy and realness") {
    const hypergeometric_spec spec({0.3, 0.7, 1.1}, {1.2, 1.4});
    for (double x : {1.5, 3.0, 7.0}) {
        const cut_evaluation cv = cut_values(spec, x);
        CHECK(std::abs(cv.above - std::conj(cv.below)) <
              1e-10 * (1.0 + std::abs(cv.above)));
        CHECK(std::abs(cv.jump.real()) < 1e-10 * (1.0 + std::abs(cv.jump)));
        CHECK(std::abs(cv.mean.imag()) < 1e-10 * (1.0 + std::abs(cv.mean)));
        CHECK(std::abs(cv.jump - (cv.above - cv.below)) < 1e-14);
        CHECK(std::abs(cv.mean - 0.5 * (cv.above + cv.below)) < 1e-14);
    }
}

TEST_CASE("cut values against the closed G form, p = 2") {
    const hypergeometric_spec spec({0.3, 0.7, 1.1}, {1.2, 1.4});
    const double x = 3.0;
    const cut_evaluation cv = cut_values(spec, x);
    const complex_t closed = jump_closed_form(spec, x);
    CHECK(std::abs(cv.jump - closed) < 1e-8 * std::abs(closed));
    const double mean_g = mean_closed_form(spec, x);
    CHECK(cv.mean.real() ==
          doctest::Approx(mean_g).epsilon(1e-8));
}

TEST_CASE("jump vanishes as x -> 1+ when c-a-b > 0") {
    const hypergeometric_spec spec({0.4, 0.6}, {1.6});  // c-a-b = 0.6
    const double j_near = std::abs(cut_values(spec, 1.0001).jump);
    const double j_far = std::abs(cut_values(spec, 1.5).jump);
    CHECK(j_near < 0.05 * j_far);
}

TEST_CASE("jump fades linearly as a1 -> 0+") {
    const hypergeometric_spec spec({1e-6, 0.8}, {1.3});
    const complex_t j = jump_closed_form(spec, 2.0);
    CHECK(std::abs(j) < 1e-4);
}

TEST_CASE("derivative formula") {
    // d/dz (1-z)^{-1} = (1-z)^{-2}
    const hypergeometric_spec spec({1.0}, {});
    CHECK(pfq_derivative(spec, complex_t(0.3, 0.0)).real() ==
          doctest::Approx(1.0 / (0.7 * 0.7)).epsilon(1e-12));
    // z = 0 gives (a)/(b)
    const hypergeometric_spec s2({0.7, 1.9}, {1.3});
    CHECK(pfq_derivative(s2, complex_t(0.0, 0.0)).real() ==
          doctest::Approx(0.7 * 1.9 / 1.3).epsilon(1e-13));
}

TEST_CASE("derivative matches central finite differences") {
    const hypergeometric_spec spec({0.5, 1.2}, {1.7});
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> rad(0.05, 0.45);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * pi);
    const double h = 1e-5;
    for (int i = 0; i < 20; ++i) {
        const complex_t z = std::polar(rad(rng), ang(rng));
        const complex_t fd =
            (pfq_continued(spec, z + h) - pfq_continued(spec, z - h)) /
            (2.0 * h);
        const complex_t an = pfq_derivative(spec, z);
        CHECK(std::abs(fd - an) < 1e-7 * (1.0 + std::abs(an)));
    }
}

TEST_CASE("derivative equals the term-by-term differentiated series") {
    const hypergeometric_spec spec({0.8, 1.4}, {2.2});
    const complex_t z(0.31, -0.22);
    // term-wise: sum n c_n z^{n-1}
    complex_t acc = 0.0;
    double cn = 1.0;
    for (int n = 1; n < 200; ++n) {
        cn *= (0.8 + n - 1) * (1.4 + n - 1) / ((2.2 + n - 1) * n);
        acc += double(n) * cn * std::pow(z, n - 1);
    }
    CHECK(std::abs(pfq_derivative(spec, z) - acc) < 1e-10);
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(hypergeometric_spec({1.0}, {-2.0}), pole_error);
    CHECK_THROWS_AS(hypergeometric_spec({1.0, 1.0, 1.0}, {2.0}),
                    evaluation_error);
}
