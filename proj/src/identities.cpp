#include "hyperverify/identities.hpp"

#include <chrono>
#include <cmath>

#include "hyperverify/errors.hpp"
#include "hyperverify/meijerg.hpp"
#include "hyperverify/quadrature.hpp"

#if defined(_OPENMP)
#include <omp.h>
#endif

namespace hyperverify {

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

constexpr unsigned primes[8] = {2, 3, 5, 7, 11, 13, 17, 19};

}  // namespace

double halton(std::uint64_t index, unsigned base) {
    double f = 1.0, r = 0.0;
    while (index > 0) {
        f /= double(base);
        r += f * double(index % base);
        index /= base;
    }
    return r;
}

std::vector<double> plan_point(const std::string& case_tag,
                               std::uint64_t seed, int k, unsigned dim) {
    // Offset into the Halton sequence; deterministic in (case, seed, k).
    const std::uint64_t offset =
        1 + (fnv1a(case_tag) % 5407) + 7919 * (seed % 100003);
    std::vector<double> u(dim);
    for (unsigned d = 0; d < dim && d < 8; ++d)
        u[d] = halton(offset + std::uint64_t(k), primes[d]);
    return u;
}

verification_report run_case(const identity_case& c, const run_config& cfg,
                             const tolerance_config& tol) {
    const auto t0 = std::chrono::steady_clock::now();
    verification_report rep;
    rep.case_id = c.id;
    rep.seed = cfg.seed;
    rep.flagged = c.flagged();
    rep.applied_rel_tol =
        (c.expected.type == expected_policy::kind::equality &&
         c.expected.default_tol)
            ? cfg.rel_tol
            : c.expected.rel_tol;
    rep.samples.resize(std::size_t(c.sample_count));

    auto eval_one = [&](int k) {
        try {
            rep.samples[std::size_t(k)] = c.eval(k, cfg.seed, tol);
        } catch (const std::exception& e) {
            sample_record r;
            r.errored = true;
            r.error = e.what();
            rep.samples[std::size_t(k)] = r;
        }
    };

#if defined(_OPENMP)
    if (cfg.parallelism > 1) {
#pragma omp parallel for schedule(dynamic) num_threads(cfg.parallelism)
        for (int k = 0; k < c.sample_count; ++k) eval_one(k);
    } else {
        for (int k = 0; k < c.sample_count; ++k) eval_one(k);
    }
#else
    for (int k = 0; k < c.sample_count; ++k) eval_one(k);
#endif

    bool errored = false;
    double max_res = 0.0;
    for (const auto& s : rep.samples) {
        if (s.errored) {
            errored = true;
            continue;
        }
        max_res = std::max(max_res, std::abs(s.residual));
    }
    rep.max_rel_residual = max_res;
    if (errored) {
        rep.status = "errored";
    } else {
        switch (c.expected.type) {
            case expected_policy::kind::equality:
            case expected_policy::kind::known_discrepancy:
                rep.status =
                    (max_res <= rep.applied_rel_tol) ? "pass" : "fail";
                break;
            case expected_policy::kind::inequality:
                // residual stores the violation -min_slack.
                rep.status =
                    (max_res <= -c.expected.slack) ? "pass" : "fail";
                break;
        }
    }
    const auto t1 = std::chrono::steady_clock::now();
    if (cfg.timings)
        rep.duration_ms =
            std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

double verify_theorem41(const param_vector& a, const param_vector& b,
                        double alpha, double beta, unsigned m,
                        double quad_rel_tol, double* lhs_out,
                        double* rhs_out, const tolerance_config& tol) {
    const double ab = alpha + beta;
    double lhs = 0.0;
    for (unsigned k = 0; k <= m; ++k) {
        const double dk = double(k), dm = double(m);
        lhs += gamma_ratio(
                   concat(a.shifted(dk), a.shifted(ab + dm - dk)),
                   concat(b.shifted(dk), b.shifted(ab + dm - dk))) -
               gamma_ratio(
                   concat(a.shifted(alpha + dk), a.shifted(beta + dm - dk)),
                   concat(b.shifted(alpha + dk), b.shifted(beta + dm - dk)));
    }

    param_vector top, bottom;
    for (double ai : a) top.push_back(1.0 - ai - double(m));
    for (double bi : b) top.push_back(bi + ab);
    for (double ai : a) bottom.push_back(ai + ab);
    for (double bi : b) bottom.push_back(1.0 - bi - double(m));
    const g_function_spec gspec(unsigned(a.size()), unsigned(a.size()), top,
                                bottom);

    auto f = [&](double x) {
        // the double zero of (1-x^alpha)(1-x^beta) makes the last sliver
        // weightless: its mass is O((1e-4)^{2 sum(b-a) + 2}).  Skipping it
        // keeps every series argument inside the deep plain-summation
        // budget.
        if (x > 1.0 - 1e-4) return 0.0;
        double geom = 1.0;  // (1 - x^{m+1}) / (1 - x), summed analytically
        double xp = 1.0;
        for (unsigned i = 1; i <= m; ++i) {
            xp *= x;
            geom += xp;
        }
        const double kernel = geom * (1.0 - std::pow(x, alpha)) *
                              (1.0 - std::pow(x, beta)) /
                              std::pow(x, ab + 1.0);
        return kernel * detail::g_slater_eval(gspec, x, tol);
    };
    const double rhs = integrate_finite(
        f, 0.0, 1.0, quad_rel_tol, 1e-10, a.min() - 1.0,
        2.0 * (b.sum() - a.sum()) + 1.0);

    if (lhs_out) *lhs_out = lhs;
    if (rhs_out) *rhs_out = rhs;
    return std::abs(lhs - rhs) /
           std::max({std::abs(lhs), std::abs(rhs), 1e-300});
}

double verify_corollary41(double a, double b, double alpha, double beta,
                          unsigned m, double quad_rel_tol, double* lhs_out,
                          double* rhs_out, const tolerance_config& tol) {
    const double ab = alpha + beta;
    double lhs = 0.0;
    for (unsigned k = 0; k <= m; ++k) {
        const double dk = double(k), dm = double(m);
        lhs += gamma_ratio({a + dk, a + ab + dm - dk},
                           {b + dk, b + ab + dm - dk}) -
               gamma_ratio({a + alpha + dk, a + beta + dm - dk},
                           {b + alpha + dk, b + beta + dm - dk});
    }

    // 1/Gamma(b-a) legitimately zeroes the right side when a = b
    const double pref = detail::gamma_ratio_zero_on_den_pole(
        {2.0 * a + ab + double(m)}, {a + b + ab + double(m), b - a});
    if (pref == 0.0) {
        if (lhs_out) *lhs_out = lhs;
        if (rhs_out) *rhs_out = 0.0;
        return std::abs(lhs);
    }
    const hypergeometric_spec gauss(
        {2.0 * a + ab + double(m), 1.0 + a - b}, {a + b + ab + double(m)});
    auto f = [&](double x) {
        if (x > 1.0 - 1e-4) return 0.0;
        double geom = 1.0;
        double xp = 1.0;
        for (unsigned i = 1; i <= m; ++i) {
            xp *= x;
            geom += xp;
        }
        return std::pow(x, a - 1.0) * geom * (1.0 - std::pow(x, alpha)) *
               (1.0 - std::pow(x, beta)) *
               detail::series_auto(gauss, complex_t(x, 0.0), tol).real();
    };
    const double rhs =
        pref * integrate_finite(f, 0.0, 1.0, quad_rel_tol, 1e-10, a - 1.0,
                                2.0 * (b - a) + 1.0);
    if (lhs_out) *lhs_out = lhs;
    if (rhs_out) *rhs_out = rhs;
    return std::abs(lhs - rhs) /
           std::max({std::abs(lhs), std::abs(rhs), 1e-300});
}

inequality_report verify_inequalities(const param_vector& a,
                                      const param_vector& b, complex_t z,
                                      const tolerance_config& tol) {
    const hypergeometric_spec spec(a, b);
    const complex_t f = pfq_continued(spec, z, tol);
    const complex_t fup = pfq_continued(spec.raised(), z, tol);
    const double pa = a.product(), pb = b.product();
    const double az = std::abs(z);
    const double az2 = std::abs(z - 2.0);
    const double plus = az2 + az, minus = az2 - az;  // minus > 0 iff Re z < 1

    auto rel_slack = [](double value, double bound, bool lower) {
        const double scale =
            std::max({std::abs(value), std::abs(bound), 1e-300});
        return (lower ? value - bound : bound - value) / scale;
    };

    inequality_report rep;
    const double q1 = std::abs(f - 1.0);
    const double lo1 = 2.0 * pa * az2 * az / (pb * plus * plus);
    const double hi1 = 2.0 * pa * az2 * az / (pb * minus * minus);
    rep.slack[0] = rel_slack(q1, lo1, true);
    rep.slack[1] = rel_slack(q1, hi1, false);

    const double q2 = std::abs(fup);
    const double lo2 = 4.0 * minus / (plus * plus * plus);
    const double hi2 = 4.0 * plus / (minus * minus * minus);
    rep.slack[2] = rel_slack(q2, lo2, true);
    rep.slack[3] = rel_slack(q2, hi2, false);

    // |f'| / |f| in disk coordinates: the ratio of the raised function to
    // the normalized deviation from 1.
    const double q3 = std::abs(fup) / std::abs(f - 1.0);
    const double lo3 = 2.0 * pb * minus / (pa * az * az2 * plus);
    const double hi3 = 2.0 * pb * plus / (pa * az * az2 * minus);
    rep.slack[4] = rel_slack(q3, lo3, true);
    rep.slack[5] = rel_slack(q3, hi3, false);

    rep.min_slack = rep.slack[0];
    for (int i = 1; i < 6; ++i)
        rep.min_slack = std::min(rep.min_slack, rep.slack[i]);
    rep.passed = rep.min_slack >= -1e-9;
    return rep;
}

}  // namespace hyperverify
