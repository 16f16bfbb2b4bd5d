#include "hyperverify/meijerg.hpp"

#include <cmath>

#include "hyperverify/errors.hpp"
#include "hyperverify/gamma.hpp"
#include "hyperverify/pfq.hpp"
#include "hyperverify/quadrature.hpp"

namespace hyperverify {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;

param_vector slice(const param_vector& v, std::size_t from, std::size_t to) {
    param_vector out;
    for (std::size_t i = from; i < to; ++i) out.push_back(v[i]);
    return out;
}

void require_generic(const g_function_spec& spec, double eps) {
    if (!spec.generic_parameters(eps))
        throw degenerate_parameter_error(
            "meijer g: integer-separated bottom parameters", 1e-7);
}

}  // namespace

g_function_spec::g_function_spec(unsigned m_, unsigned n_, param_vector top_,
                                 param_vector bottom_)
    : m(m_),
      n(n_),
      p(unsigned(top_.size())),
      q(unsigned(bottom_.size())),
      top(std::move(top_)),
      bottom(std::move(bottom_)) {
    if (m > q || n > p)
        throw evaluation_error("g_function_spec: requires m <= q and n <= p");
    const bool square = (q == p);
    const bool laplace_kernel = (q == p + 1 && n == 0);
    if (!square && !laplace_kernel)
        throw evaluation_error(
            "g_function_spec: unsupported shape (need q = p, or q = p+1 "
            "with n = 0)");
}

bool g_function_spec::generic_parameters(double eps) const {
    for (std::size_t i = 0; i < bottom.size(); ++i)
        for (std::size_t j = i + 1; j < bottom.size(); ++j) {
            const double d = bottom[i] - bottom[j];
            if (std::abs(d - std::round(d)) < eps) return false;
        }
    return true;
}

double g_slater(const g_function_spec& spec, double x, g_side /*side*/,
                const tolerance_config& tol) {
    if (std::abs(x - 1.0) < 1e-8)
        throw evaluation_error(
            "g_slater: discontinuity on the unit circle, x too close to 1");
    return detail::g_slater_eval(spec, x, tol);
}

namespace detail {

double g_slater_eval(const g_function_spec& spec, double x,
                     const tolerance_config& tol) {
    if (spec.q != spec.p)
        throw evaluation_error("g_slater: requires q = p");
    if (!(x > 0.0)) throw evaluation_error("g_slater: requires x > 0");

    // Beta kernel in closed form: exact arbitrarily close to x = 1.
    if (spec.p == 1 && spec.m == 1 && spec.n == 0) {
        if (x >= 1.0) return 0.0;
        const double a = spec.bottom[0], b = spec.top[0];
        if (is_gamma_pole(b - a)) return 0.0;  // 1/Gamma vanishes
        const signed_log_gamma g = log_gamma_signed(b - a);
        return g.sign * std::pow(x, a) *
               std::exp((b - a - 1.0) * std::log1p(-x) - g.log);
    }

    const param_vector bt = slice(spec.bottom, 0, spec.m);
    const param_vector bb = slice(spec.bottom, spec.m, spec.q);
    const param_vector at = slice(spec.top, 0, spec.n);
    const param_vector ab = slice(spec.top, spec.n, spec.p);

    double sum = 0.0;
    if (x < 1.0) {
        require_generic(spec, tol.degeneracy_eps);
        for (unsigned j = 0; j < spec.m; ++j) {
            const double bj = bt[j];
            param_vector num, den;
            for (unsigned i = 0; i < spec.m; ++i)
                if (i != j) num.push_back(bt[i] - bj);
            for (double ai : at) {
                if (is_gamma_pole(1.0 - ai + bj))
                    throw degenerate_parameter_error(
                        "g_slater: logarithmic top/bottom separation", 1e-7);
                num.push_back(1.0 - ai + bj);
            }
            for (double bi : bb) den.push_back(1.0 - bi + bj);
            for (double ai : ab) den.push_back(ai - bj);
            const double aj = detail::gamma_ratio_zero_on_den_pole(num, den);
            if (aj == 0.0) continue;
            param_vector upper, lower;
            for (double ai : spec.top) upper.push_back(1.0 - ai + bj);
            for (unsigned i = 0; i < spec.q; ++i)
                if (i != j) lower.push_back(1.0 - spec.bottom[i] + bj);
            const hypergeometric_spec series(upper, lower);
            sum += aj * std::pow(x, bj) *
                   detail::series_auto(series, x, tol).real();
        }
        return sum;
    }
    // x > 1: the n-term sum in 1/x.
    for (unsigned j = 0; j < spec.n; ++j) {
        const double aj = at[j];
        for (unsigned i = 0; i < spec.n; ++i)
            if (i != j && is_gamma_pole(aj - at[i]))
                throw degenerate_parameter_error(
                    "g_slater: integer-separated top parameters", 1e-7);
        param_vector num, den;
        for (unsigned i = 0; i < spec.n; ++i)
            if (i != j) num.push_back(aj - at[i]);
        for (double bi : bt) {
            if (is_gamma_pole(1.0 + bi - aj))
                throw degenerate_parameter_error(
                    "g_slater: logarithmic top/bottom separation", 1e-7);
            num.push_back(1.0 + bi - aj);
        }
        for (double ai : ab) den.push_back(1.0 + ai - aj);
        for (double bi : bb) den.push_back(aj - bi);
        const double bjc = detail::gamma_ratio_zero_on_den_pole(num, den);
        if (bjc == 0.0) continue;
        param_vector upper, lower;
        for (double bi : spec.bottom) upper.push_back(1.0 + bi - aj);
        for (unsigned i = 0; i < spec.p; ++i)
            if (i != j) lower.push_back(1.0 + spec.top[i] - aj);
        const hypergeometric_spec series(upper, lower);
        sum += bjc * std::pow(x, aj - 1.0) *
               detail::series_auto(series, 1.0 / x, tol).real();
    }
    return sum;
}

double g_slater_near_one(const g_function_spec& spec, double d,
                         const tolerance_config& tol) {
    if (spec.q != spec.p || spec.n != 0 || spec.m != spec.q || spec.p > 2)
        return g_slater_eval(spec, 1.0 - d, tol);
    if (spec.p == 1) {
        const double a = spec.bottom[0], b = spec.top[0];
        if (is_gamma_pole(b - a)) return 0.0;
        const signed_log_gamma g = log_gamma_signed(b - a);
        return g.sign * std::pow(1.0 - d, a) *
               std::exp((b - a - 1.0) * std::log(d) - g.log);
    }
    require_generic(spec, tol.degeneracy_eps);
    double sum = 0.0;
    for (unsigned j = 0; j < 2; ++j) {
        const double bj = spec.bottom[j];
        const double bo = spec.bottom[j == 0 ? 1 : 0];
        const double aj = gamma_ratio_zero_on_den_pole(
            {bo - bj}, {spec.top[0] - bj, spec.top[1] - bj});
        if (aj == 0.0) continue;
        const complex_t f = gauss_one_minus_w(
            1.0 - spec.top[0] + bj, 1.0 - spec.top[1] + bj, 1.0 - bo + bj,
            complex_t(d, 0.0), tol);
        sum += aj * std::pow(1.0 - d, bj) * f.real();
    }
    return sum;
}

}  // namespace detail

double g_q_plus_one(const g_function_spec& spec, double t,
                    const tolerance_config& tol) {
    if (spec.q != spec.p + 1 || spec.n != 0 || spec.m != spec.q)
        throw evaluation_error(
            "g_q_plus_one: requires shape G^{p+1,0}_{p,p+1}");
    if (!(t > 0.0)) throw evaluation_error("g_q_plus_one: requires t > 0");
    require_generic(spec, tol.degeneracy_eps);

    // The kernel decays like t^theta exp(-t); below the double underflow
    // line there is nothing left to resolve.
    if (t > 760.0) return 0.0;
    // For p >= 2 the expansion is a cancellation of algebraically growing
    // terms; past their noise floor the true value sits below double
    // rounding of the summands, so report it as zero.
    if (spec.p >= 2 && t > 35.0) return 0.0;

    double sum = 0.0;
    for (unsigned j = 0; j < spec.q; ++j) {
        const double aj = spec.bottom[j];
        param_vector num, den;
        for (unsigned i = 0; i < spec.q; ++i)
            if (i != j) num.push_back(spec.bottom[i] - aj);
        for (double bi : spec.top) den.push_back(bi - aj);
        const double cj = detail::gamma_ratio_zero_on_den_pole(num, den);
        if (cj == 0.0) continue;
        double series;
        if (spec.p == 0) {
            series = std::exp(-t);
        } else if (spec.p == 1) {
            // Kummer transform keeps the term cancellation under control at
            // large t: 1F1(alpha; gamma; -t) = e^-t 1F1(gamma-alpha; gamma; t).
            // The sum is seeded with e^-t so no intermediate term overflows.
            const double alpha = 1.0 - spec.top[0] + aj;
            const double gamma = 1.0 - spec.bottom[j == 0 ? 1 : 0] + aj;
            double term = std::exp(-t), acc = 0.0;
            for (int n = 0; n < tol.max_terms; ++n) {
                acc += term;
                term *= (gamma - alpha + n) * t / ((gamma + n) * (n + 1.0));
                if (std::abs(term) <= 1e-17 * std::abs(acc) && n > 2) break;
            }
            series = acc;
        } else {
            param_vector upper, lower;
            for (double bi : spec.top) upper.push_back(1.0 - bi + aj);
            for (unsigned i = 0; i < spec.q; ++i)
                if (i != j) lower.push_back(1.0 - spec.bottom[i] + aj);
            const hypergeometric_spec inner(upper, lower);
            series = detail::series_unchecked(inner, -t, tol).real();
        }
        sum += cj * std::pow(t, aj) * series;
    }
    return sum;
}

g_function_spec g_shift(const g_function_spec& spec, double mu) {
    return {spec.m, spec.n, spec.top.shifted(mu), spec.bottom.shifted(mu)};
}

double mellin_barnes_oracle(const g_function_spec& spec, double x,
                            const tolerance_config& tol) {
    if (!(x > 0.0))
        throw evaluation_error("mellin_barnes_oracle: requires x > 0");

    // Abscissa strictly right of the ascending pole chains of the
    // numerator bottom gammas, capped at 0 (which also keeps clear of the
    // descending chains for every shape this project evaluates).
    double left = -1e30;
    for (unsigned j = 0; j < spec.m; ++j)
        left = std::max(left, -spec.bottom[j]);
    double right = 0.0;
    for (unsigned j = 0; j < spec.n; ++j)
        right = std::min(right, 1.0 - spec.top[j] - 0.05);
    if (!(left < right))
        throw contour_error(
            "mellin_barnes_oracle: no admissible contour abscissa");
    const double c = 0.5 * (left + right);

    const bool square = (spec.q == spec.p);
    if (square && std::abs(x - 1.0) < 0.02)
        throw contour_error(
            "mellin_barnes_oracle: x too close to 1, contour decay too slow");

    auto integrand_log = [&](complex_t s) {
        complex_t acc = -s * std::log(x);
        for (unsigned j = 0; j < spec.q; ++j)
            acc += (j < spec.m) ? log_gamma(spec.bottom[j] + s)
                                : -log_gamma(1.0 - spec.bottom[j] - s);
        for (unsigned j = 0; j < spec.p; ++j)
            acc += (j < spec.n) ? log_gamma(1.0 - spec.top[j] - s)
                                : -log_gamma(spec.top[j] + s);
        return acc;
    };

    double kappa = std::abs(spec.bottom.sum() - spec.top.sum()) + 2.0;
    complex_t total;
    if (square) {
        // Bend the contour toward the decaying side of x^-s: left of the
        // vertical for x < 1, right for x > 1.
        const double dir = (x < 1.0) ? -1.0 : 1.0;
        const double rate = std::abs(std::log(x));
        double big = 42.0 / rate;
        big = (42.0 + kappa * std::log(std::max(big, 2.0))) / rate;
        auto g = [&](double u) {
            const complex_t s(c + dir * std::abs(u), u);
            const complex_t ds(dir * (u >= 0.0 ? 1.0 : -1.0), 1.0);
            return std::exp(integrand_log(s)) * ds;
        };
        total = integrate_finite(g, -big, 0.0, tol.quad_rel_tol, 1e-300) +
                integrate_finite(g, 0.0, big, tol.quad_rel_tol, 1e-300);
    } else {
        // q = p+1: the surplus gamma supplies exp(-pi |tau| / 2) decay on
        // the vertical line itself.
        double big = 2.0 * 42.0 / pi;
        big = 2.0 * (42.0 + kappa * std::log(std::max(big, 2.0))) / pi;
        auto g = [&](double u) {
            const complex_t s(c, u);
            return std::exp(integrand_log(s)) * complex_t(0.0, 1.0);
        };
        total = integrate_finite(g, -big, big, tol.quad_rel_tol, 1e-300);
    }
    // G = (1/2 pi i) * integral; real parameter rows give a real value.
    return (total / complex_t(0.0, 2.0 * pi)).real();
}

}  // namespace hyperverify
