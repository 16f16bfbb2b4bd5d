#include <cmath>
#include <complex>
#include <random>

#include <doctest.h>

#include "hyperverify/errors.hpp"
#include "hyperverify/gamma.hpp"

using namespace hyperverify;

namespace {
constexpr double pi = 3.141592653589793238462643383279502884;
}

TEST_CASE("log_gamma at classic points") {
    CHECK(std::abs(log_gamma({1.0, 0.0})) < 1e-14);
    CHECK(std::abs(log_gamma({2.0, 0.0})) < 1e-14);
    CHECK(log_gamma({0.5, 0.0}).real() ==
          doctest::Approx(0.5 * std::log(pi)).epsilon(1e-14));
    // Gamma(11) = 10!
    CHECK(std::exp(log_gamma({11.0, 0.0})).real() ==
          doctest::Approx(3628800.0).epsilon(1e-13));
}

TEST_CASE("log_gamma duplication formula at 3.7+2.1i") {
    const complex_t z(3.7, 2.1);
    // Gamma(z) Gamma(z+1/2) = 2^(1-2z) sqrt(pi) Gamma(2z)
    const complex_t lhs = log_gamma(z) + log_gamma(z + 0.5);
    const complex_t rhs = (1.0 - 2.0 * z) * std::log(2.0) +
                          0.5 * std::log(pi) + log_gamma(2.0 * z);
    CHECK(std::abs(std::exp(lhs - rhs) - 1.0) < 1e-12);
}

TEST_CASE("log_gamma pole raises") {
    CHECK_THROWS_AS(log_gamma({0.0, 0.0}), pole_error);
    CHECK_THROWS_AS(log_gamma({-3.0, 0.0}), pole_error);
    CHECK_THROWS_AS(log_gamma_signed(-7.0), pole_error);
}

TEST_CASE("reflection property on 1000 random off-axis points") {
    std::mt19937_64 rng(20240915);
    std::uniform_real_distribution<double> re(-6.0, 6.0);
    std::uniform_real_distribution<double> im(0.05, 5.0);
    for (int i = 0; i < 1000; ++i) {
        const complex_t z(re(rng), (i % 2 ? 1.0 : -1.0) * im(rng));
        const complex_t prod =
            std::exp(log_gamma(z) + log_gamma(1.0 - z)) * std::sin(pi * z) /
            pi;
        CHECK(std::abs(prod - 1.0) < 1e-11);
    }
}

TEST_CASE("principal branch agrees with the recurrence construction") {
    // log Gamma(z) = log Gamma(z+n) - sum log(z+k) is principal by
    // uniqueness of the analytic branch that is real on (0, inf).
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> re(-8.0, 0.4);
    std::uniform_real_distribution<double> im(0.01, 6.0);
    for (int i = 0; i < 200; ++i) {
        const complex_t z(re(rng), (i % 2 ? 1.0 : -1.0) * im(rng));
        const int n = int(std::ceil(0.5 - z.real())) + 1;
        complex_t ref = log_gamma(z + double(n));
        for (int k = 0; k < n; ++k) ref -= std::log(z + double(k));
        CHECK(std::abs(log_gamma(z) - ref) <
              1e-10 * (1.0 + std::abs(ref)));
    }
}

TEST_CASE("signed real log-gamma") {
    // Gamma(-0.5) = -2 sqrt(pi)
    const auto g = log_gamma_signed(-0.5);
    CHECK(g.sign == -1);
    CHECK(std::exp(g.log) ==
          doctest::Approx(2.0 * std::sqrt(pi)).epsilon(1e-13));
    // Gamma(-1.5) = 4 sqrt(pi) / 3 > 0
    const auto h = log_gamma_signed(-1.5);
    CHECK(h.sign == +1);
    CHECK(std::exp(h.log) ==
          doctest::Approx(4.0 * std::sqrt(pi) / 3.0).epsilon(1e-13));
}

TEST_CASE("gamma_ratio") {
    CHECK(gamma_ratio({1.0}, {1.0}) == doctest::Approx(1.0));
    CHECK(gamma_ratio({3.0}, {1.0}) == doctest::Approx(2.0).epsilon(1e-14));
    // brute-force product oracle
    const double direct = std::tgamma(10.5) * std::tgamma(2.2) /
                          (std::tgamma(9.5) * std::tgamma(3.2));
    CHECK(gamma_ratio({10.5, 2.2}, {9.5, 3.2}) ==
          doctest::Approx(direct).epsilon(1e-13));
    CHECK_THROWS_AS(gamma_ratio({-2.0}, {1.0}), pole_error);
    // identical vectors cancel exactly
    const param_vector v{0.3, 1.7, 42.5};
    CHECK(gamma_ratio(v, v) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("gamma_ratio in log space survives huge parameters") {
    // Gamma(250.3)/Gamma(249.3) = 249.3, far beyond direct tgamma range
    // when combined with more factors.
    CHECK(gamma_ratio({250.3, 180.0}, {249.3, 180.0}) ==
          doctest::Approx(249.3).epsilon(1e-12));
}

TEST_CASE("pochhammer") {
    CHECK(pochhammer({2.0}, 3) == doctest::Approx(24.0));
    CHECK(pochhammer({1.0, 1.0}, 0) == doctest::Approx(1.0));
    // iterative multiplication oracle
    double loop = 1.0;
    for (double x : {0.5, 1.5})
        for (int j = 0; j < 4; ++j) loop *= x + j;
    CHECK(pochhammer({0.5, 1.5}, 4) == doctest::Approx(loop).epsilon(1e-15));
    // recurrence property
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> dist(0.1, 4.0);
    for (int i = 0; i < 50; ++i) {
        const param_vector a{dist(rng), dist(rng), dist(rng)};
        for (unsigned n : {0u, 1u, 5u}) {
            double step = 1.0;
            for (double x : a) step *= x + n;
            CHECK(pochhammer(a, n + 1) ==
                  doctest::Approx(pochhammer(a, n) * step).epsilon(1e-13));
        }
    }
}

TEST_CASE("delta_vector") {
    const param_vector one = delta_vector({3.0}, 1);
    CHECK(one.size() == 1);
    CHECK(one[0] == doctest::Approx(3.0));

    const param_vector thirds = delta_vector({1.0}, 3);
    REQUIRE(thirds.size() == 3);
    CHECK(thirds[0] == doctest::Approx(1.0 / 3.0));
    CHECK(thirds[1] == doctest::Approx(2.0 / 3.0));
    CHECK(thirds[2] == doctest::Approx(1.0));

    // entries step by 1/k: (c+j)/k
    const param_vector shifted = delta_vector({0.7 + 2.0}, 3);
    CHECK(shifted[0] == doctest::Approx(0.9));
    CHECK(shifted[1] == doctest::Approx(3.7 / 3.0));
    CHECK(shifted[2] == doctest::Approx(4.7 / 3.0));
}

TEST_CASE("delta_vector is consistent with Gauss multiplication") {
    // product Gamma(Delta(x,3)) = 2 pi 3^{1/2-x} Gamma(x)
    for (double x : {0.4, 1.3, 2.7, 5.1}) {
        const param_vector d = delta_vector({x}, 3);
        double lhs = 1.0;
        for (double e : d) lhs *= std::tgamma(e);
        const double rhs =
            2.0 * pi * std::pow(3.0, 0.5 - x) * std::tgamma(x);
        CHECK(lhs == doctest::Approx(rhs).epsilon(1e-10));
        // entries average to (mean + (k-1)/2)/k with k = 3
        CHECK(d.sum() / 3.0 == doctest::Approx((x + 1.0) / 3.0));
    }
}

TEST_CASE("parameter vector views never mutate the source") {
    const param_vector v{3.0, 1.0, 2.0};
    const param_vector sorted = v.sorted_ascending();
    const param_vector removed = v.with_removed(1);
    const param_vector shifted = v.shifted(0.5);
    CHECK(v[0] == 3.0);
    CHECK(v[1] == 1.0);
    CHECK(v[2] == 2.0);
    CHECK(sorted[0] == 1.0);
    REQUIRE(removed.size() == 2);
    CHECK(removed[0] == 3.0);
    CHECK(removed[1] == 2.0);
    CHECK(shifted[2] == 2.5);
    CHECK(v.product() == doctest::Approx(6.0));
}
