#include <cmath>
#include <complex>

#include <doctest.h>

#include "hyperverify/levin.hpp"

using namespace hyperverify;

TEST_CASE("levin-u accelerates the alternating harmonic series") {
    // sum (-1)^n / (n+1) = ln 2, painfully slow without acceleration
    const double est = levin_sum<double>(
        [](int n) { return (n % 2 ? -1.0 : 1.0) / double(n + 1); }, 1e-14,
        8, 60);
    CHECK(est == doctest::Approx(std::log(2.0)).epsilon(1e-12));
}

TEST_CASE("levin-u resums a divergent alternating geometric-type series") {
    // sum (-3)^n / (n+1) diverges; its Abel/analytic value is ln(4)/3
    // (the z = -3 value of the power series of -log(1-z)/z).
    const double est = levin_sum<double>(
        [](int n) { return std::pow(-3.0, n) / double(n + 1); }, 1e-13, 8,
        80);
    CHECK(est == doctest::Approx(std::log(4.0) / 3.0).epsilon(1e-10));
}

TEST_CASE("levin-u on a slowly convergent geometric tail") {
    // sum 0.97^n = 1/0.03, plain summation needs ~1200 terms for 1e-14
    const double est = levin_sum<double>(
        [](int n) { return std::pow(0.97, n); }, 1e-14, 8, 80);
    CHECK(est == doctest::Approx(1.0 / 0.03).epsilon(1e-11));
}

TEST_CASE("terminating series returns the exact partial sum") {
    const double est = levin_sum<double>(
        [](int n) { return n < 3 ? double(1 << n) : 0.0; }, 1e-14, 8, 60);
    CHECK(est == doctest::Approx(7.0));
}

TEST_CASE("complex series") {
    const std::complex<double> q(0.4, 0.75);  // |q| ~ 0.85
    const std::complex<double> est = levin_sum<std::complex<double>>(
        [q](int n) { return std::pow(q, n); }, 1e-14, 8, 80);
    const std::complex<double> exact = 1.0 / (1.0 - q);
    CHECK(std::abs(est - exact) < 1e-11);
}
