#include <cmath>

#include <doctest.h>

#include "hyperverify/conditions.hpp"
#include "hyperverify/transforms.hpp"

using namespace hyperverify;

namespace {
constexpr double pi = 3.141592653589793238462643383279502884;
}

TEST_CASE("laplace representation of pFp, p = 1 Euler-kernel anchor") {
    const auto r = verify_laplace_pFp({0.7}, {1.9}, 1.3);
    CHECK(std::abs(r.rel_residual) < 1e-9);
    // z = 0 normalization: both sides 1
    const auto r0 = verify_laplace_pFp({0.7}, {1.9}, 0.0);
    CHECK(std::abs(r0.lhs - 1.0) < 1e-13);
    CHECK(std::abs(r0.rel_residual) < 1e-9);
}

TEST_CASE("laplace representation of pFp, p = 2") {
    const auto r = verify_laplace_pFp({0.5, 1.0}, {1.2, 1.6}, 2.0);
    CHECK(std::abs(r.rel_residual) < 1e-8);
}

TEST_CASE("laplace representation of p+1Fp") {
    // p = 0 closed form
    const auto r0 = verify_laplace_p1Fp({0.8}, {}, 0.6);
    CHECK(std::abs(r0.lhs - std::pow(1.6, -0.8)) < 1e-10);
    CHECK(std::abs(r0.rel_residual) < 1e-10);
    // z = 0 normalization
    const auto rz = verify_laplace_p1Fp({0.8}, {}, 0.0);
    CHECK(std::abs(rz.rel_residual) < 1e-9);
    // p = 1
    const auto r1 = verify_laplace_p1Fp({0.5, 1.2}, {1.7}, 1.0);
    CHECK(std::abs(r1.rel_residual) < 1e-8);
}

TEST_CASE("representing measure of pFq(alpha/x)") {
    // 1F0(1; 1/x): density e^t, transform x/(x-1)
    const auto m = representing_measure_1_over_x({1.0}, {}, 1.0);
    CHECK(m.atom_at_zero == 1.0);
    CHECK(m.density(0.7) == doctest::Approx(std::exp(0.7)).epsilon(1e-12));
    const double x = 2.5;
    CHECK(measure_laplace_transform(m, x) ==
          doctest::Approx(x / (x - 1.0)).epsilon(1e-9));

    // empty upper row: e^{1/x}, density 0F1(-; 2; t) = I1(2 sqrt t)/sqrt t
    const auto me = representing_measure_1_over_x({}, {}, 1.0);
    double series = 0.0, term = 1.0;
    for (int k = 0; k < 40; ++k) {
        series += term;
        term *= 0.7 / ((k + 1.0) * (k + 2.0));
    }
    CHECK(me.density(0.7) == doctest::Approx(series).epsilon(1e-12));

    // alpha -> 0: density vanishes, transform -> 1
    const auto m0 = representing_measure_1_over_x({0.9}, {}, 1e-8);
    CHECK(std::abs(m0.density(1.0)) < 1e-7);
    CHECK(measure_laplace_transform(m0, 2.0) ==
          doctest::Approx(1.0).epsilon(1e-7));
}

TEST_CASE("convolution of measures") {
    // nu1 = nu2 = e^t (from 1F0(1; 1/x)): nu0(t) = t e^t + 2 e^t
    const auto nu = representing_measure_1_over_x({1.0}, {}, 1.0);
    const auto nu0 = convolve_measures(nu, nu);
    for (double t : {0.3, 1.0, 2.2}) {
        CHECK(nu0(t) ==
              doctest::Approx((t + 2.0) * std::exp(t)).epsilon(1e-10));
    }
    // zero second density: nu0 = nu1
    representing_measure zero;
    zero.atom_at_zero = 1.0;
    zero.density = [](double) { return 0.0; };
    const auto same = convolve_measures(nu, zero);
    CHECK(same(1.3) == doctest::Approx(std::exp(1.3)).epsilon(1e-11));
    // commutativity
    const auto m2 = representing_measure_1_over_x({0.6}, {}, 1.0);
    const auto ab = convolve_measures(nu, m2);
    const auto ba = convolve_measures(m2, nu);
    CHECK(ab(0.9) == doctest::Approx(ba(0.9)).epsilon(1e-10));
}

TEST_CASE("bessel measure relation") {
    // mu = delta_1: nu(t) = I1(2 sqrt t)/sqrt t = sum t^k/(k!(k+1)!)
    double series = 0.0, term = 1.0;
    for (int k = 0; k < 40; ++k) {
        series += term;
        term *= 0.7 / ((k + 1.0) * (k + 2.0));
    }
    CHECK(bessel_measure_relation({1.0}, {1.0}, 0.7) ==
          doctest::Approx(series).epsilon(1e-12));
    // empty measure
    CHECK(bessel_measure_relation({}, {}, 0.7) == 0.0);
    // single atom scaling: nu(t; delta_u) = u 0F1(-; 2; u t)
    const double u = 1.7, t = 0.4;
    double s2 = 0.0, tm = 1.0;
    for (int k = 0; k < 40; ++k) {
        s2 += tm;
        tm *= u * t / ((k + 1.0) * (k + 2.0));
    }
    CHECK(bessel_measure_relation({u}, {1.0}, t) ==
          doctest::Approx(u * s2).epsilon(1e-12));
}

TEST_CASE("stieltjes density rho") {
    // p = 1 check against the jump: rho(x) = jump/(2 pi i)
    const param_vector a{0.4, 0.9};
    const param_vector b{1.6};
    for (double x : {1.5, 3.0, 10.0}) {
        const double rho = stieltjes_density_rho(a, b, x);
        const complex_t jump =
            jump_closed_form(hypergeometric_spec(a, b), x);
        CHECK(rho == doctest::Approx(jump.imag() / (2.0 * pi))
                         .epsilon(1e-10));
    }
    // x -> infinity decay
    CHECK(std::abs(stieltjes_density_rho(a, b, 1e6)) < 1e-2);
    // Stieltjes transform reproduces the function
    const double z = 0.5;
    auto f = [&](double x) {
        return stieltjes_density_rho(a, b, x) / (x + z);
    };
    quadrature_problem<double> prob;
    prob.integrand = f;
    prob.domain = quad_domain::semi_infinite;
    prob.lo = 1.0;
    prob.rel_tol = 1e-9;
    prob.abs_tol = 1e-12;
    prob.exponent_lo = b.sum() - a.sum();  // rho ~ (x-1)^{sum b - sum a}
    prob.decay_exponent = 1.0 + a.min();
    const double integral = integrate(prob).value;
    const double lhs =
        pfq_continued(hypergeometric_spec(a, b), complex_t(-z, 0.0)).real();
    CHECK(std::abs(integral - lhs) < 1e-7 * std::abs(lhs));
}

TEST_CASE("stieltjes positivity on the admissible box") {
    // 0 < a1 <= 1, b dominated entrywise by the remaining upper entries
    const param_vector a{0.7, 0.9, 1.4};
    const param_vector b{1.1, 1.7};
    for (int i = 1; i <= 100; ++i) {
        const double x = 1.0 + 49.0 * double(i) / 100.0;
        CHECK(stieltjes_density_rho(a, b, x) >= -1e-10);
    }
}

TEST_CASE("sigma = 2 representation") {
    // binomial anchor: 2F1(0.5,1;1;-z) = (1+z)^{-1/2}
    const auto r = stieltjes_sigma2({0.5, 1.0}, {1.0},
                                    complex_t(0.8, 0.0));
    CHECK(std::abs(r.lhs - std::pow(1.8, -0.5)) < 1e-12);
    CHECK(std::abs(r.rel_residual) < 1e-7);
    // z -> 0 limit
    const auto r0 = stieltjes_sigma2({0.6, 1.1}, {1.4},
                                     complex_t(1e-5, 0.0));
    CHECK(std::abs(r0.lhs - 1.0) < 1e-4);
    CHECK(std::abs(r0.rel_residual) < 1e-7);
    // complex z inside the sector
    const auto rc = stieltjes_sigma2({0.5, 1.0}, {1.0},
                                     std::polar(0.5, pi / 4.0));
    CHECK(std::abs(rc.rel_residual) < 1e-7);
}

TEST_CASE("sigma = 3 representation and the psi cross-check") {
    const auto r = stieltjes_sigma3({0.5, 1.0}, {1.0},
                                    complex_t(0.6, 0.0));
    CHECK(std::abs(r.lhs - std::pow(1.6, -0.5)) < 1e-12);
    CHECK(std::abs(r.rel_residual) < 1e-6);

    // psi combination against the real-kernel phi at y = 0.5
    const param_vector a{0.5, 1.0};
    const param_vector b{1.0};
    const param_vector top{3.0, 1.0};
    const double y = 0.5;
    const double viaPsi = sigma3_psi(a, b, 1, y) -
                          2.0 * sigma3_psi(a, b, 2, y) +
                          2.0 * sigma3_psi(a, b, 4, y) -
                          sigma3_psi(a, b, 5, y);
    const double viaPhi =
        sigma3_phi(top, a, y) * (2.0 * pi / (9.0 * std::sqrt(3.0)));
    CHECK(viaPsi == doctest::Approx(viaPhi).epsilon(1e-7));
}

TEST_CASE("sin(3 arctan) reduction, both closed forms") {
    std::uint64_t state = 88172645463325252ull;
    auto next = [&state]() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return double(state % 1000000) / 1000000.0;
    };
    for (int i = 0; i < 100; ++i) {
        const double t = 0.005 + 0.99 * next();
        const double y = 0.005 + 0.99 * next();
        CHECK(std::abs(sin3arctan_lhs(t, y) - sin3arctan_rhs(t, y)) <
              1e-12);
        // second printed form via (1 - s^3)
        const double s = t * y;
        const double alt = 3.0 * std::sqrt(3.0) * s *
                           (1.0 - 2.0 * s + 2.0 * s * s * s -
                            s * s * s * s) /
                           (2.0 * std::pow(1.0 - s * s * s, 3.0));
        CHECK(std::abs(sin3arctan_rhs(t, y) - alt) < 1e-12);
    }
}

TEST_CASE("general sigma kernel consistency") {
    const param_vector a{0.6};
    const param_vector b{1.4};
    // sigma = 2 against the simplified kernel
    const double via_general = stieltjes_sigma_general(a, b, 2.0, 0.7);
    const double via_varphi2 = stieltjes_varphi2(a, b, 0.7);
    CHECK(std::abs(via_general - via_varphi2) <=
          1e-10 * std::max(1.0, std::abs(via_varphi2)));
    // sigma = 3 against the real cubic kernel
    const double g3 = stieltjes_sigma_general(a, b, 3.0, 0.5);
    const double phi3 = sigma3_phi(b, a, 0.5);
    CHECK(std::abs(g3 - phi3) <= 1e-9 * std::max(1.0, std::abs(phi3)));
    // y -> 0 prefactor
    CHECK(std::abs(stieltjes_sigma_general(a, b, 2.5, 1e-4)) < 1e-6);
}

TEST_CASE("sigma = 3 double-series form of the density") {
    const param_vector a{0.6};
    const param_vector b{1.4};
    const double y = 0.3;
    const double series = sigma3_phi_series(a, b, y);
    const double integral = sigma3_phi(b, a, y);
    CHECK(std::abs(series - integral) <=
          1e-6 * std::max(1.0, std::abs(integral)));
}

TEST_CASE("newton-leibnitz representation") {
    // 0F0: e^{1/x} - 1
    const auto r0 = newton_leibnitz_repr({}, {}, 1.0);
    CHECK(std::abs(r0.rel_residual) < 1e-9);
    // large x: both sides -> 1 (difference -> 0)
    const auto rfar = newton_leibnitz_repr({}, {}, 250.0);
    CHECK(std::abs(rfar.lhs - 1.0) < 5e-3);
    CHECK(std::abs(rfar.rel_residual) < 1e-9);
    // 1F1
    const auto r1 = newton_leibnitz_repr({0.5}, {1.5}, 2.0);
    CHECK(std::abs(r1.rel_residual) < 1e-8);
}
