#include "hyperverify/conditions.hpp"

#include <algorithm>
#include <cmath>

#include "hyperverify/errors.hpp"

namespace hyperverify {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;

double muntz_derivative(const muntz_spec& spec, double t) {
    double d = 0.0;
    for (std::size_t k = 0; k < spec.a.size(); ++k)
        d += spec.a[k] * std::pow(t, spec.a[k] - 1.0) -
             spec.b[k] * std::pow(t, spec.b[k] - 1.0);
    return d;
}

// Binomial coefficients for the forward-difference stencils (n <= 8).
double binom(int n, int k) {
    double c = 1.0;
    for (int i = 0; i < k; ++i) c = c * double(n - i) / double(i + 1);
    return c;
}

}  // namespace

double muntz_eval(const muntz_spec& spec, double t) {
    if (spec.a.size() != spec.b.size())
        throw evaluation_error("muntz_eval: vectors must have equal length");
    double v = 0.0;
    for (std::size_t k = 0; k < spec.a.size(); ++k)
        v += std::pow(t, spec.a[k]) - std::pow(t, spec.b[k]);
    return v;
}

muntz_certificate muntz_nonneg(const muntz_spec& spec) {
    constexpr int grid_n = 2049;
    muntz_certificate cert;
    cert.min_value = 0.0;
    cert.min_location = 1.0;

    double prev_t = 0.0;
    double prev_d = 0.0;
    bool have_prev = false;
    for (int i = 0; i <= grid_n - 1; ++i) {
        const double t = 0.5 * (1.0 - std::cos(pi * double(i) / (grid_n - 1)));
        const double v = muntz_eval(spec, t);
        if (v < cert.min_value) {
            cert.min_value = v;
            cert.min_location = t;
        }
        if (t > 0.0 && t < 1.0) {
            const double d = muntz_derivative(spec, t);
            if (have_prev && prev_d < 0.0 && d > 0.0) {
                // Interior minimum bracketed; bisect the derivative.
                double lo = prev_t, hi = t;
                for (int it = 0; it < 60; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    (muntz_derivative(spec, mid) < 0.0 ? lo : hi) = mid;
                }
                const double tm = 0.5 * (lo + hi);
                const double vm = muntz_eval(spec, tm);
                if (vm < cert.min_value) {
                    cert.min_value = vm;
                    cert.min_location = tm;
                }
            }
            prev_t = t;
            prev_d = d;
            have_prev = true;
        }
    }
    cert.nonnegative = cert.min_value >= -1e-12;
    return cert;
}

bool weak_supermajorization(const param_vector& a, const param_vector& b) {
    if (a.size() != b.size())
        throw evaluation_error(
            "weak_supermajorization: vectors must have equal length");
    const param_vector sa = a.sorted_ascending();
    const param_vector sb = b.sorted_ascending();
    double pa = 0.0, pb = 0.0;
    for (std::size_t k = 0; k < sa.size(); ++k) {
        pa += sa[k];
        pb += sb[k];
        if (pa > pb) return false;
    }
    return true;
}

monotonicity_verdict cm_probe(const std::function<double(double)>& f,
                              const std::vector<double>& grid,
                              int max_order) {
    monotonicity_verdict verdict{monotonicity_kind::completely_monotonic,
                                 true, max_order, std::nullopt};
    const double steps[2] = {1e-2, 1e-3};
    for (double x : grid) {
        for (double h : steps) {
            // f values at the stencil points, reused across orders.
            std::vector<double> fx(std::size_t(max_order) + 1);
            for (int j = 0; j <= max_order; ++j) fx[std::size_t(j)] = f(x + j * h);
            for (int n = 0; n <= max_order; ++n) {
                // (-1)^n Delta^n_h f(x) = sum_j (-1)^j C(n,j) f(x + j h)
                double alt = 0.0;
                double mass = 0.0;  // sum of |terms|, noise scale
                for (int j = 0; j <= n; ++j) {
                    const double c = binom(n, j) * fx[std::size_t(j)];
                    alt += (j % 2 == 0 ? 1.0 : -1.0) * c;
                    mass += std::abs(c);
                }
                if (alt < -1e-7 * std::max(1.0, mass)) {
                    verdict.passed = false;
                    verdict.witness = monotonicity_witness{x, n, alt};
                    return verdict;
                }
            }
        }
    }
    return verdict;
}

monotonicity_verdict cm_probe_coefficients(
    const std::vector<double>& reciprocal_taylor) {
    monotonicity_verdict verdict{monotonicity_kind::completely_monotonic,
                                 true, int(reciprocal_taylor.size()) - 1,
                                 std::nullopt};
    for (std::size_t n = 0; n < reciprocal_taylor.size(); ++n) {
        if (reciprocal_taylor[n] < -1e-14) {
            verdict.passed = false;
            verdict.witness = monotonicity_witness{double(n), int(n),
                                                   reciprocal_taylor[n]};
            return verdict;
        }
    }
    return verdict;
}

monotonicity_verdict am_check(const std::vector<double>& taylor) {
    monotonicity_verdict verdict{monotonicity_kind::absolutely_monotonic,
                                 true, int(taylor.size()) - 1, std::nullopt};
    for (std::size_t n = 0; n < taylor.size(); ++n) {
        if (taylor[n] < -1e-14) {
            verdict.passed = false;
            verdict.witness =
                monotonicity_witness{double(n), int(n), taylor[n]};
            return verdict;
        }
    }
    return verdict;
}

namespace {

// Determinant by partial-pivot elimination; matrices here are tiny.
double det(std::vector<std::vector<double>> mat) {
    const std::size_t n = mat.size();
    double d = 1.0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(mat[r][col]) > std::abs(mat[piv][col])) piv = r;
        if (mat[piv][col] == 0.0) return 0.0;
        if (piv != col) {
            std::swap(mat[piv], mat[col]);
            d = -d;
        }
        d *= mat[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            const double factor = mat[r][col] / mat[col][col];
            for (std::size_t cc = col; cc < n; ++cc)
                mat[r][cc] -= factor * mat[col][cc];
        }
    }
    return d;
}

}  // namespace

monotonicity_verdict stieltjes_moment_check(const std::vector<double>& s,
                                            int order) {
    monotonicity_verdict verdict{monotonicity_kind::stieltjes_moment, true,
                                 order, std::nullopt};
    if (s.size() < std::size_t(2 * order + 2))
        throw evaluation_error(
            "stieltjes_moment_check: need at least 2*order+2 moments");
    for (int k = 0; k <= order; ++k) {
        for (int shift = 0; shift <= 1; ++shift) {
            std::vector<std::vector<double>> h(std::size_t(k) + 1,
                                               std::vector<double>(std::size_t(k) + 1));
            for (int i = 0; i <= k; ++i)
                for (int j = 0; j <= k; ++j)
                    h[std::size_t(i)][std::size_t(j)] =
                        s[std::size_t(i + j + shift)];
            const double d = det(h);
            if (d < -1e-10) {
                verdict.passed = false;
                verdict.witness = monotonicity_witness{double(shift), k, d};
                return verdict;
            }
        }
    }
    return verdict;
}

std::vector<double> cm_default_grid() {
    return {0.1, 0.2, 0.4, 0.7, 1.0, 1.5, 2.2, 3.2, 4.7, 6.8, 10.0};
}

}  // namespace hyperverify
