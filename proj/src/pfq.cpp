#include "hyperverify/pfq.hpp"

#include <cmath>
#include <iostream>
#include <optional>

#include "hyperverify/errors.hpp"
#include "hyperverify/levin.hpp"
#include "hyperverify/quadrature.hpp"

namespace hyperverify {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;

bool on_positive_cut(complex_t z) {
    return std::abs(z.imag()) < 1e-14 && z.real() >= 1.0 - 1e-12;
}

void kahan_add(complex_t& sum, complex_t& comp, complex_t term) {
    const complex_t t = sum + term;
    if (std::abs(sum) >= std::abs(term))
        comp += (sum - t) + term;
    else
        comp += (term - t) + sum;
    sum = t;
}

// Stateful term generator for the defining series.
class series_terms {
public:
    series_terms(const hypergeometric_spec& spec, complex_t z)
        : spec_(spec), z_(z) {}

    complex_t next() {
        const complex_t t = term_;
        complex_t ratio = z_ / double(n_ + 1);
        for (double ai : spec_.a) ratio *= ai + double(n_);
        for (double bj : spec_.b) ratio /= bj + double(n_);
        term_ *= ratio;
        ++n_;
        return t;
    }

private:
    const hypergeometric_spec& spec_;
    complex_t z_;
    complex_t term_ = 1.0;
    long n_ = 0;
};

// (1 - z)^(-a) with explicit branch selection on the cut.
complex_t pow_one_minus_z(double a, complex_t z, detail::cut_side side) {
    if (side == detail::cut_side::none)
        return std::exp(-a * std::log(1.0 - z));
    const double x = z.real();  // x > 1
    const complex_t logw(std::log(x - 1.0),
                         side == detail::cut_side::above ? -pi : pi);
    return std::exp(-a * logw);
}

// Principal (-z)^(-a) with on-cut branch selection: above the cut means
// arg(-z) -> -pi.
complex_t pow_minus_z(double a, complex_t z, detail::cut_side side) {
    if (side == detail::cut_side::none)
        return std::exp(-a * std::log(-z));
    const double x = z.real();  // x > 1
    const complex_t logw(std::log(x),
                         side == detail::cut_side::above ? -pi : pi);
    return std::exp(-a * logw);
}

complex_t continued_impl(const hypergeometric_spec& spec, complex_t z,
                         detail::cut_side side, const tolerance_config& tol,
                         int depth);

// Euler integral reduction: peel one (upper, lower) parameter pair with
// 0 < a_i < b_j into a Beta-weighted integral of the reduced function.
// Keeps full accuracy for integer-separated upper parameters where the
// connection sum degenerates.
std::optional<complex_t> euler_peel(const hypergeometric_spec& spec,
                                    complex_t z, const tolerance_config& tol,
                                    int depth, bool require_generic) {
    if (depth > 4) return std::nullopt;
    const std::size_t p = spec.p(), q = spec.q();
    long best_i = -1, best_j = -1;
    bool best_generic = false;
    for (std::size_t i = 0; i < p; ++i) {
        if (spec.a[i] <= 1e-8) continue;
        for (std::size_t j = 0; j < q; ++j) {
            if (spec.b[j] - spec.a[i] <= 1e-3) continue;
            const bool generic = !detail::integer_separated(
                spec.a.with_removed(i), tol.degeneracy_eps);
            if (best_i < 0 || (generic && !best_generic)) {
                best_i = long(i);
                best_j = long(j);
                best_generic = generic;
            }
        }
    }
    if (best_i < 0 || (require_generic && !best_generic))
        return std::nullopt;
    const double ai = spec.a[std::size_t(best_i)];
    const double bj = spec.b[std::size_t(best_j)];
    hypergeometric_spec inner(spec.a.with_removed(std::size_t(best_i)),
                              spec.b.with_removed(std::size_t(best_j)));
    const double pref = gamma_ratio({bj}, param_vector{ai, bj - ai});
    // Split at 1/2 and fold the upper half so each Beta-weight singularity
    // sits at the origin, where tiny distances stay exactly representable.
    auto f_lo = [&](double t) -> complex_t {
        return std::pow(t, ai - 1.0) * std::pow(1.0 - t, bj - ai - 1.0) *
               continued_impl(inner, z * t, detail::cut_side::none, tol,
                              depth + 1);
    };
    auto f_hi = [&](double u) -> complex_t {
        return std::pow(1.0 - u, ai - 1.0) * std::pow(u, bj - ai - 1.0) *
               continued_impl(inner, z * (1.0 - u), detail::cut_side::none,
                              tol, depth + 1);
    };
    const complex_t integral =
        integrate_finite(f_lo, 0.0, 0.5, 1e-12, 1e-15, ai - 1.0) +
        integrate_finite(f_hi, 0.0, 0.5, 1e-12, 1e-15, bj - ai - 1.0);
    return pref * integral;
}

// Direct Mellin-Barnes contour for p+1Fp along a vertical line between the
// left and right pole chains.  Parameter-degeneracy free, usable while
// arg(-z) stays well inside (-pi/2, pi/2).
std::optional<complex_t> mb_direct(const hypergeometric_spec& spec,
                                   complex_t z,
                                   const tolerance_config& /*tol*/) {
    const double amin = spec.a.min();
    if (amin <= 0.0) return std::nullopt;
    const complex_t w = -z;
    const double argw = std::arg(w);
    const double lambda = pi / 2.0 - std::abs(argw);
    if (lambda < 0.15) return std::nullopt;
    const double c = -0.5 * std::min(amin, 1.0);
    const complex_t logw = std::log(w);
    const double kappa =
        std::max(0.0, spec.a.sum() - spec.b.sum() - c - 0.5);
    complex_t integral;
    if (logw.real() > 8.0) {
        // Truly large |w|: bending the contour left lets |w^s| decay like
        // |w|^{-|tau|}, collapsing the oscillatory range to O(1).  The
        // Gamma(-s) factor grows factorially along the bend, but only
        // catches up near |tau| ~ |w|/e, far beyond the truncation here.
        double T = 42.0 / (logw.real() - 2.0);
        const double rate = logw.real() - std::log(std::max(T, 2.0));
        T = (42.0 + kappa * std::log(std::max(T, 2.0))) / rate;
        auto g = [&](double tau) -> complex_t {
            const complex_t s(c - std::abs(tau), tau);
            const complex_t ds(tau >= 0.0 ? -1.0 : 1.0, 1.0);
            return std::exp(log_gamma(-s) +
                            detail::log_gamma_sum(spec.a, s) -
                            detail::log_gamma_sum(spec.b, s) + s * logw) *
                   ds;
        };
        integral = integrate_finite(g, -T, 0.0, 1e-12, 1e-300) +
                   integrate_finite(g, 0.0, T, 1e-12, 1e-300);
        // ds already folded in; the vertical convention divides by i below,
        // so rescale to match.
        integral /= complex_t(0.0, 1.0);
    } else {
        auto g = [&](double tau) -> complex_t {
            const complex_t s(c, tau);
            return std::exp(log_gamma(-s) +
                            detail::log_gamma_sum(spec.a, s) -
                            detail::log_gamma_sum(spec.b, s) + s * logw);
        };
        double T = 42.0 / lambda;
        T = (42.0 + kappa * std::log(std::max(T, 2.0))) / lambda;
        integral = integrate_finite(g, -T, T, 1e-12, 1e-300);
    }
    const double pref = gamma_ratio(spec.b, spec.a);
    return pref * integral / (2.0 * pi);
}

hypergeometric_spec perturb_upper(const hypergeometric_spec& spec,
                                  double eps) {
    param_vector a;
    const double n = double(spec.p());
    for (std::size_t k = 0; k < spec.p(); ++k)
        a.push_back(spec.a[k] + (double(k) - 0.5 * (n - 1.0)) * eps);
    return {a, spec.b};
}

complex_t continued_impl(const hypergeometric_spec& spec, complex_t z,
                         detail::cut_side side, const tolerance_config& tol,
                         int depth) {
    const hypergeometric_spec s = detail::cancel_common_parameters(spec);
    if (s.p() == 0 && s.q() == 0) return std::exp(z);
    if (s.p() == 1 && s.q() == 0) return pow_one_minus_z(s.a[0], z, side);
    if (!s.gauss_type()) return detail::series_unchecked(s, z, tol);

    if (side == detail::cut_side::none && on_positive_cut(z))
        throw cut_contact_error("pfq_continued: z on the branch cut [1,inf)");

    const double az = std::abs(z);
    if (side == detail::cut_side::none && az < 1.0)
        return detail::series_auto(s, z, tol);

    if (!detail::integer_separated(s.a, tol.degeneracy_eps))
        return detail::connection_sum(s, z, side, tol);

    if (side == detail::cut_side::none) {
        // One Beta-weighted reduction when it lands on a generic remainder;
        // otherwise a single Mellin-Barnes contour beats a cascade of
        // nested reductions.
        if (auto v = euler_peel(s, z, tol, depth, true)) return *v;
        if (auto v = mb_direct(s, z, tol)) return *v;
        if (auto v = euler_peel(s, z, tol, depth, false)) return *v;
    }

    static bool warned = false;
    if (!warned) {
        std::cerr << "hyperverify: warning: integer-separated upper "
                     "parameters; applying symmetric epsilon perturbation "
                  << tol.perturbation_eps << "\n";
        warned = true;
    }
    return detail::connection_sum(perturb_upper(s, tol.perturbation_eps), z,
                                  side, tol);
}

}  // namespace

hypergeometric_spec::hypergeometric_spec(param_vector a_, param_vector b_)
    : a(std::move(a_)), b(std::move(b_)) {
    if (a.size() > b.size() + 1)
        throw evaluation_error(
            "hypergeometric_spec: p > q+1 is outside the supported family");
    for (double bj : b)
        if (is_gamma_pole(bj)) throw pole_error("hypergeometric_spec", bj);
}

namespace detail {

hypergeometric_spec cancel_common_parameters(const hypergeometric_spec& spec) {
    std::vector<double> a(spec.a.entries());
    std::vector<double> b(spec.b.entries());
    for (std::size_t i = 0; i < a.size();) {
        bool cancelled = false;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (std::abs(a[i] - b[j]) <=
                1e-13 * std::max(1.0, std::abs(a[i]))) {
                a.erase(a.begin() + long(i));
                b.erase(b.begin() + long(j));
                cancelled = true;
                break;
            }
        }
        if (!cancelled) ++i;
    }
    return {param_vector(std::move(a)), param_vector(std::move(b))};
}

bool integer_separated(const param_vector& v, double eps) {
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j) {
            const double d = v[i] - v[j];
            if (std::abs(d - std::round(d)) < eps) return true;
        }
    return false;
}

complex_t series_unchecked(const hypergeometric_spec& spec, complex_t z,
                           const tolerance_config& tol) {
    series_terms gen(spec, z);
    complex_t sum = 0.0, comp = 0.0;
    int small_count = 0;
    for (int n = 0; n < tol.max_terms; ++n) {
        const complex_t term = gen.next();
        kahan_add(sum, comp, term);
        if (std::abs(term) <=
            tol.series_rel_tol * (std::abs(sum + comp) + 1e-300)) {
            if (++small_count >= tol.consecutive_small_terms)
                return sum + comp;
        } else {
            small_count = 0;
        }
    }
    throw non_convergence_error(
        "pfq series did not converge within max_terms");
}

complex_t series_levin(const hypergeometric_spec& spec, complex_t z,
                       const tolerance_config& tol) {
    // Plain summation is exact whenever it fits the term budget, so this
    // path runs it with a deep budget first (covering |z| up to roughly
    // 1 - 1e-4).  The u-transform only takes over past that, where it is
    // reliable for the alternating/complex-direction series this engine
    // sends it; monotone near-divergent series never reach it because the
    // callers' kernels vanish fast enough at the unit argument.
    try {
        tolerance_config deep = tol;
        deep.max_terms = std::max(tol.max_terms, 400000);
        return series_unchecked(spec, z, deep);
    } catch (const non_convergence_error&) {
    }
    series_terms gen(spec, z);
    return levin_sum<complex_t>([&](int) { return gen.next(); },
                                std::max(tol.series_rel_tol * 10.0, 1e-13),
                                tol.levin_min_terms, tol.levin_max_terms);
}

namespace {

// Logarithmic connection for c = a + b + m, integer m >= 0 (the classical
// psi-series form), as a function of w = 1 - z.
complex_t gauss_near_one_log(double a, double b, double c, int m,
                             complex_t w, const tolerance_config& tol) {
    const complex_t logw = std::log(w);
    complex_t finite = 0.0;
    if (m >= 1) {
        const double coef =
            gamma_ratio_zero_on_den_pole({double(m), c},
                                         {a + m, b + m});
        double term = 1.0;  // (a)_n (b)_n / (n! (1-m)_n)
        complex_t wn = 1.0;
        for (int n = 0; n < m; ++n) {
            finite += coef * term * wn;
            if (n + 1 < m)
                term *= (a + n) * (b + n) /
                        ((n + 1.0) * (1.0 - m + n));
            wn *= w;
        }
    }
    const double pref = gamma_ratio_zero_on_den_pole({c}, {a, b});
    complex_t series = 0.0;
    if (pref != 0.0) {
        double log_mfact = 0.0;
        for (int i = 2; i <= m; ++i) log_mfact += std::log(double(i));
        double cn = std::exp(-log_mfact);  // (a+m)_n (b+m)_n / (n! (n+m)!)
        complex_t wn = 1.0;
        for (int n = 0; n < tol.max_terms; ++n) {
            const double psis = -digamma(n + 1.0) -
                                digamma(double(n + m) + 1.0) +
                                digamma(a + m + n) + digamma(b + m + n);
            const complex_t t = cn * wn * (logw + psis);
            series += t;
            if (n > 3 &&
                std::abs(t) < 1e-17 * (std::abs(series) + 1e-300))
                break;
            cn *= (a + m + n) * (b + m + n) /
                  ((n + 1.0) * double(n + m + 1));
            wn *= w;
        }
    }
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    return finite - sign * pref * std::pow(w, double(m)) * series;
}

}  // namespace

// Generic parametric excess uses the two-series gamma form; (near-)integer
// excess falls through to the logarithmic psi-series, with the Euler
// transformation flipping negative excess first.
complex_t gauss_one_minus_w(double a, double b, double c, complex_t w,
                            const tolerance_config& tol) {
    const double s = c - a - b;
    const double rounded = std::round(s);
    if (std::abs(s - rounded) < 1e-6) {
        const int m = int(rounded);
        if (m >= 0) return gauss_near_one_log(a, b, c, m, w, tol);
        // flip the excess: F(a,b;c;z) = w^s F(c-a, c-b; c; z)
        return std::exp(s * std::log(w)) *
               gauss_near_one_log(c - a, c - b, c, -m, w, tol);
    }
    const double c1 = gamma_ratio_zero_on_den_pole({c, s}, {c - a, c - b});
    const double c2 = gamma_ratio_zero_on_den_pole({c, -s}, {a, b});
    complex_t acc = 0.0;
    if (c1 != 0.0)
        acc += c1 * series_unchecked(
                        hypergeometric_spec({a, b}, {1.0 - s}), w, tol);
    if (c2 != 0.0)
        acc += c2 * std::exp(s * std::log(w)) *
               series_unchecked(
                   hypergeometric_spec({c - a, c - b}, {1.0 + s}), w, tol);
    return acc;
}

complex_t series_auto(const hypergeometric_spec& spec, complex_t z,
                      const tolerance_config& tol) {
    const hypergeometric_spec s = cancel_common_parameters(spec);
    if (s.p() == 0 && s.q() == 0) return std::exp(z);
    if (s.p() == 1 && s.q() == 0)
        return pow_one_minus_z(s.a[0], z, cut_side::none);
    if (!s.gauss_type() || std::abs(z) <= tol.series_policy_radius)
        return series_unchecked(s, z, tol);
    if (s.p() == 2 && std::abs(1.0 - z) < 0.35)
        return gauss_one_minus_w(s.a[0], s.a[1], s.b[0], 1.0 - z, tol);
    return series_levin(s, z, tol);
}

complex_t connection_sum(const hypergeometric_spec& spec, complex_t z,
                         cut_side side, const tolerance_config& tol) {
    const std::size_t p1 = spec.p();
    const complex_t w = 1.0 / z;
    complex_t sum = 0.0;
    for (std::size_t j = 0; j < p1; ++j) {
        const double aj = spec.a[j];
        const param_vector arest = spec.a.with_removed(j);
        param_vector num, den;
        for (double ai : arest) num.push_back(ai - aj);
        for (double bi : spec.b) num.push_back(bi);
        for (double ai : arest) den.push_back(ai);
        for (double bi : spec.b) den.push_back(bi - aj);
        const double cj = gamma_ratio_zero_on_den_pole(num, den);
        if (cj == 0.0) continue;
        param_vector upper{aj};
        for (double bi : spec.b) upper.push_back(1.0 - bi + aj);
        param_vector lower;
        for (double ai : arest) lower.push_back(1.0 - ai + aj);
        const hypergeometric_spec inner(upper, lower);
        sum += cj * pow_minus_z(aj, z, side) * series_auto(inner, w, tol);
    }
    return sum;
}

}  // namespace detail

complex_t pfq_series(const hypergeometric_spec& spec, complex_t z,
                     const tolerance_config& tol) {
    if (spec.gauss_type() &&
        std::abs(z) > tol.series_policy_radius + 1e-12)
        throw evaluation_error(
            "pfq_series: |z| beyond the direct-sum policy radius for "
            "p = q+1; use pfq_continued");
    return detail::series_unchecked(spec, z, tol);
}

complex_t pfq_continued(const hypergeometric_spec& spec, complex_t z,
                        const tolerance_config& tol) {
    return continued_impl(spec, z, detail::cut_side::none, tol, 0);
}

cut_evaluation cut_values(const hypergeometric_spec& spec, double x,
                          const tolerance_config& tol) {
    if (!(x > 1.0))
        throw evaluation_error("cut_values: requires x > 1");
    if (!spec.gauss_type())
        throw evaluation_error("cut_values: requires p = q+1");
    const hypergeometric_spec s = detail::cancel_common_parameters(spec);
    cut_evaluation out;
    out.x = x;
    if (s.p() <= 1 ||
        !detail::integer_separated(s.a, tol.degeneracy_eps)) {
        out.above = continued_impl(s, complex_t(x, 0.0),
                                   detail::cut_side::above, tol, 0);
        out.below = continued_impl(s, complex_t(x, 0.0),
                                   detail::cut_side::below, tol, 0);
        out.jump = out.above - out.below;
        out.mean = 0.5 * (out.above + out.below);
        return out;
    }
    // Integer-separated upper parameters: reconstruct the boundary values
    // from the closed-form jump and mean, which route through degeneracy-
    // free Mellin-Barnes contours.
    out.jump = jump_closed_form(spec, x, tol);
    out.mean = mean_closed_form(spec, x, tol);
    out.above = out.mean + 0.5 * out.jump;
    out.below = out.mean - 0.5 * out.jump;
    return out;
}

complex_t pfq_derivative(const hypergeometric_spec& spec, complex_t z,
                         const tolerance_config& tol) {
    const double factor = spec.a.product() / spec.b.product();
    return factor * pfq_continued(spec.raised(), z, tol);
}

}  // namespace hyperverify
