#include "hyperverify/transforms.hpp"

#include <cmath>

#include "hyperverify/errors.hpp"
#include "hyperverify/meijerg.hpp"

namespace hyperverify {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;
constexpr double sqrt3 = 1.7320508075688772935274463415058724;

param_vector with_entry_front(double x, const param_vector& v) {
    param_vector out{x};
    for (double e : v) out.push_back(e);
    return out;
}

}  // namespace

verifier_result make_result(complex_t lhs, complex_t rhs) {
    verifier_result r;
    r.lhs = lhs;
    r.rhs = rhs;
    const double scale = std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    const double mag = std::abs(lhs - rhs) / scale;
    r.rel_residual = ((lhs - rhs).real() >= 0.0) ? mag : -mag;
    return r;
}

verifier_result verify_laplace_pFp(const param_vector& a,
                                   const param_vector& b, double z,
                                   const tolerance_config& tol) {
    const hypergeometric_spec spec(a, b);
    const complex_t lhs = pfq_series(spec, complex_t(-z, 0.0), tol);
    const g_function_spec kernel(unsigned(a.size()), 0, b, a);
    quadrature_problem<double> prob;
    prob.integrand = [&](double t) {
        return std::exp(-z * t) * detail::g_slater_eval(kernel, t, tol) / t;
    };
    // The kernel carries an integrable (1-t)^{sum(b-a)-1} singularity; the
    // distance form keeps the strongly singular cases exact on the mapped
    // panels next to t = 1.
    prob.integrand_hi_dist = [&](double d) {
        return std::exp(-z * (1.0 - d)) *
               detail::g_slater_near_one(kernel, d, tol) / (1.0 - d);
    };
    prob.rel_tol = tol.quad_rel_tol;
    prob.abs_tol = tol.quad_abs_tol;
    prob.exponent_lo = a.min() - 1.0;
    prob.exponent_hi = b.sum() - a.sum() - 1.0;
    const double rhs = gamma_ratio(b, a) * integrate(prob).value;
    return make_result(lhs, rhs);
}

verifier_result verify_laplace_p1Fp(const param_vector& a,
                                    const param_vector& b, double z,
                                    const tolerance_config& tol) {
    const hypergeometric_spec spec(a, b);
    const complex_t lhs = pfq_continued(spec, complex_t(-z, 0.0), tol);
    const g_function_spec kernel(unsigned(a.size()), 0, b, a);
    auto f = [&](double t) {
        return std::exp(-z * t) * g_q_plus_one(kernel, t, tol) / t;
    };
    const double integral = integrate_semi_infinite(
        f, 0.0, tol.quad_rel_tol, tol.quad_abs_tol, a.min() - 1.0);
    const double rhs = gamma_ratio(b, a) * integral;
    return make_result(lhs, rhs);
}

representing_measure representing_measure_1_over_x(
    const param_vector& a, const param_vector& b, double alpha,
    const tolerance_config& tol) {
    representing_measure m;
    m.atom_at_zero = 1.0;
    param_vector lower = b.shifted(1.0);
    lower.push_back(2.0);
    const hypergeometric_spec density_spec(a.shifted(1.0), lower);
    const double factor = alpha * a.product() / b.product();
    m.density = [density_spec, factor, alpha, tol](double t) {
        return factor *
               detail::series_unchecked(density_spec,
                                        complex_t(alpha * t, 0.0), tol)
                   .real();
    };
    return m;
}

double measure_laplace_transform(const representing_measure& m, double x,
                                 const tolerance_config& tol) {
    auto f = [&](double t) {
        // past the underflow line of the exponential weight the density is
        // not worth evaluating (it grows at most exponentially of a
        // smaller rate on the measures this project builds)
        if (x * t > 745.0) return 0.0;
        return std::exp(-x * t) * m.density(t);
    };
    return m.atom_at_zero +
           integrate_semi_infinite(f, 0.0, tol.quad_rel_tol,
                                   tol.quad_abs_tol);
}

std::function<double(double)> convolve_measures(
    const representing_measure& nu1, const representing_measure& nu2,
    const tolerance_config& tol) {
    if (std::abs(nu1.atom_at_zero - 1.0) > 1e-12 ||
        std::abs(nu2.atom_at_zero - 1.0) > 1e-12)
        throw evaluation_error(
            "convolve_measures: both atoms must equal 1 (normalize the "
            "constant terms first)");
    auto d1 = nu1.density;
    auto d2 = nu2.density;
    return [d1, d2, tol](double t) {
        if (t <= 0.0) return d1(0.0) + d2(0.0);
        auto f = [&](double u) { return d2(t - u) * d1(u); };
        const double conv = integrate_finite(f, 0.0, t, tol.quad_rel_tol,
                                             tol.quad_abs_tol);
        return conv + d1(t) + d2(t);
    };
}

double bessel_measure_relation(const std::vector<double>& points,
                               const std::vector<double>& masses, double t,
                               const tolerance_config& tol) {
    if (points.size() != masses.size())
        throw evaluation_error(
            "bessel_measure_relation: points/masses size mismatch");
    const hypergeometric_spec f01({}, {2.0});
    double acc = 0.0;
    for (std::size_t i = 0; i < points.size(); ++i) {
        const double u = points[i];
        acc += masses[i] * u *
               pfq_series(f01, complex_t(u * t, 0.0), tol).real();
    }
    return acc;
}

double stieltjes_density_rho(const param_vector& a, const param_vector& b,
                             double x, const tolerance_config& tol) {
    if (!(x > 1.0))
        throw evaluation_error("stieltjes_density_rho: requires x > 1");
    const g_function_spec gspec(unsigned(a.size()), 0,
                                with_entry_front(1.0, b), a);
    return gamma_ratio(b, a) * detail::g_slater_eval(gspec, 1.0 / x, tol);
}

verifier_result stieltjes_sigma2(const param_vector& a,
                                 const param_vector& b, complex_t z,
                                 const tolerance_config& tol) {
    const hypergeometric_spec spec(a, b);
    const complex_t lhs = pfq_continued(spec, -z, tol);

    param_vector up;
    for (double ai : a) up.push_back((ai + 1.0) / 2.0);
    for (double ai : a) up.push_back((ai + 2.0) / 2.0);
    param_vector low;
    for (double bi : b) low.push_back((bi + 1.0) / 2.0);
    for (double bi : b) low.push_back((bi + 2.0) / 2.0);
    low.push_back(1.5);
    const hypergeometric_spec inner(up, low);

    auto f = [&](double t) -> complex_t {
        const complex_t weight = t * t / (z * z + t * t);
        return weight * pfq_continued(inner, complex_t(-t * t, 0.0), tol);
    };
    const complex_t integral = integrate_semi_infinite(
        f, 0.0, 5e-9, 1e-12, std::nullopt, 1.0 + a.min());
    const complex_t rhs =
        2.0 * a.product() / (pi * b.product()) * integral;
    return make_result(lhs, rhs);
}

double sigma3_phi(const param_vector& top, const param_vector& bottom,
                  double y, const tolerance_config& tol) {
    const g_function_spec gspec(unsigned(bottom.size()), 0, top, bottom);
    double integral;
    if (y <= 2.0) {
        auto f = [&](double t) {
            const double u = t * y;
            return (1.0 + u) / std::pow(1.0 + u + u * u, 3.0) *
                   detail::g_slater_eval(gspec, t, tol);
        };
        integral = integrate_finite(f, 0.0, 1.0, 1e-9, 1e-13, bottom.min(),
                                    top.sum() - bottom.sum() - 1.0);
    } else {
        // Large y concentrates the algebraic kernel near t ~ 1/y; the
        // substitution v = t y keeps it order-one.  The v^-5 decay makes
        // anything past v ~ 1e3 invisible at double scale.
        const double vmax = std::min(y, 1000.0);
        auto f = [&](double v) {
            return (1.0 + v) / std::pow(1.0 + v + v * v, 3.0) *
                   detail::g_slater_eval(gspec, v / y, tol);
        };
        integral = integrate_finite(f, 0.0, vmax, 1e-9, 1e-13,
                                    bottom.min()) /
                   y;
    }
    return 9.0 * sqrt3 * y * y * y * gamma_ratio(top, bottom) /
           (2.0 * pi) * integral;
}

double sigma3_psi(const param_vector& a, const param_vector& b, unsigned m,
                  double y, const tolerance_config& tol) {
    param_vector up{3.0};
    for (double e : delta_vector(a.shifted(double(m)), 3)) up.push_back(e);
    param_vector low;
    for (double e : delta_vector(b.shifted(double(m)), 3)) low.push_back(e);
    for (double e : delta_vector({double(m) + 3.0}, 3)) low.push_back(e);
    const hypergeometric_spec spec(up, low);
    const double pref = std::pow(y, double(m) + 2.0) * pochhammer(a, m) /
                        (pochhammer({3.0}, m) * pochhammer(b, m));
    return pref *
           detail::series_auto(spec, complex_t(y * y * y, 0.0), tol).real();
}

verifier_result stieltjes_sigma3(const param_vector& a,
                                 const param_vector& b, complex_t z,
                                 const tolerance_config& tol) {
    const hypergeometric_spec spec(a, b);
    const complex_t lhs = pfq_continued(spec, -z, tol);
    const param_vector top = with_entry_front(3.0, b);
    auto f = [&](double y) -> complex_t {
        const complex_t z3 = z * z * z;
        return sigma3_phi(top, a, y, tol) / (y * y * y + z3);
    };
    const complex_t rhs = integrate_semi_infinite(
        f, 0.0, 5e-8, 1e-11, 2.0, 1.0 + a.min());
    return make_result(lhs, rhs);
}

double sin3arctan_lhs(double t, double y) {
    const double s = t * y;
    const double c = 0.5;            // cos(pi/3)
    const double sn = 0.5 * sqrt3;   // sin(pi/3)
    const double angle = 3.0 * std::atan2(s * sn, 1.0 + s * c);
    return std::sin(angle) / std::pow(1.0 + 2.0 * s * c + s * s, 1.5);
}

double sin3arctan_rhs(double t, double y) {
    const double s = t * y;
    return 3.0 * sqrt3 * s * (1.0 + s) /
           (2.0 * std::pow(1.0 + s + s * s, 3.0));
}

double sigma3_phi_series(const param_vector& a, const param_vector& b,
                         double y) {
    if (!(std::abs(y) < 1.0))
        throw evaluation_error("sigma3_phi_series: requires |y| < 1");
    double acc = 0.0;
    double poch_ratio = a.product() / b.product();  // (a)_{j+1} / (b)_{j+1}
    for (int j = 0;; ++j) {
        // w_j = sum_{k = ceil((j-1)/2)}^{j} (-1)^k (3)_k / k! * C(k+1, j-k)
        double w = 0.0;
        for (int k = j / 2; k <= j; ++k) {
            const int nn = j - k;
            if (nn > k + 1) continue;
            double term = (k % 2 == 0) ? 1.0 : -1.0;
            for (int i = 0; i < k; ++i)       // (3)_k / k!
                term *= (3.0 + double(i)) / double(i + 1);
            for (int i = 0; i < nn; ++i)      // C(k+1, j-k)
                term *= double(k + 1 - i) / double(i + 1);
            w += term;
        }
        const double contribution = poch_ratio * std::pow(y, j) * w;
        acc += contribution;
        if (j > 8 && std::abs(contribution) < 1e-18 * std::abs(acc))
            break;
        if (j > 400) break;
        double num = 1.0, den = 1.0;
        for (double ai : a) num *= ai + double(j) + 1.0;
        for (double bi : b) den *= bi + double(j) + 1.0;
        poch_ratio *= num / den;
    }
    return 9.0 * sqrt3 * y * y * y / (2.0 * pi) * acc;
}

double stieltjes_sigma_general(const param_vector& a, const param_vector& b,
                               double sigma, double y,
                               const tolerance_config& tol) {
    if (!(sigma >= 2.0))
        throw evaluation_error("stieltjes_sigma_general: requires sigma >= 2");
    const g_function_spec gspec(unsigned(a.size()), 0, b, a);
    const double c = std::cos(pi / sigma);
    const double sn = std::sin(pi / sigma);
    auto f = [&](double t) {
        const double u = t * y;
        const double angle = sigma * std::atan2(u * sn, 1.0 + u * c);
        const double kernel =
            std::sin(angle) /
            (t * std::pow(1.0 + 2.0 * u * c + u * u, sigma / 2.0));
        return kernel * detail::g_slater_eval(gspec, t, tol);
    };
    const double integral = integrate_finite(
        f, 0.0, 1.0, 1e-10, 1e-14, a.min(), b.sum() - a.sum() - 1.0);
    return sigma * std::pow(y, sigma - 1.0) * gamma_ratio(b, a) / pi *
           integral;
}

double stieltjes_varphi2(const param_vector& a, const param_vector& b,
                         double y, const tolerance_config& tol) {
    const g_function_spec gspec(unsigned(a.size()), 0, b, a);
    auto f = [&](double t) {
        const double u = t * y;
        return y * y / std::pow(1.0 + u * u, 2.0) *
               detail::g_slater_eval(gspec, t, tol);
    };
    const double integral = integrate_finite(
        f, 0.0, 1.0, 1e-10, 1e-14, a.min(), b.sum() - a.sum() - 1.0);
    return 4.0 * gamma_ratio(b, a) / pi * integral;
}

verifier_result newton_leibnitz_repr(const param_vector& a,
                                     const param_vector& b, double x,
                                     const tolerance_config& tol) {
    if (a.size() > b.size())
        throw evaluation_error("newton_leibnitz_repr: requires p <= q");
    const hypergeometric_spec spec(a, b);
    const hypergeometric_spec raised = spec.raised();
    const complex_t lhs = pfq_series(spec, complex_t(1.0 / x, 0.0), tol);
    auto f = [&](double t) {
        const double w = x + t;
        return pfq_series(raised, complex_t(1.0 / w, 0.0), tol).real() /
               (w * w);
    };
    const double integral = integrate_semi_infinite(
        f, 0.0, tol.quad_rel_tol, tol.quad_abs_tol, std::nullopt, 2.0);
    const double rhs =
        1.0 + a.product() / b.product() * integral;
    return make_result(lhs, rhs);
}

}  // namespace hyperverify
