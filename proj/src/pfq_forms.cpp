#include <cmath>

#include "hyperverify/errors.hpp"
#include "hyperverify/meijerg.hpp"
#include "hyperverify/pfq.hpp"

// Closed forms of the branch-cut jump and mean: gamma-ratio prefactors
// times Meijer G values.  Kept apart from the series/connection machinery
// because they pull in the Meijer G module, which itself reuses the series
// engine.

namespace hyperverify {

namespace {

constexpr double pi = 3.141592653589793238462643383279502884;

double g_value_with_fallback(const g_function_spec& gspec, double x,
                             const tolerance_config& tol) {
    if (gspec.generic_parameters(tol.degeneracy_eps)) {
        try {
            return g_slater(gspec, x, g_side::real, tol);
        } catch (const degenerate_parameter_error&) {
            // near-degenerate rows: fall through to the contour
        }
    }
    return mellin_barnes_oracle(gspec, x, tol);
}

}  // namespace

complex_t jump_closed_form(const hypergeometric_spec& spec, double x,
                           const tolerance_config& tol) {
    if (!spec.gauss_type())
        throw evaluation_error("jump_closed_form: requires p = q+1");
    if (!(x > 1.0))
        throw evaluation_error("jump_closed_form: requires x > 1");
    const double ratio = gamma_ratio(spec.b, spec.a);
    param_vector top{1.0};
    for (double bj : spec.b) top.push_back(bj);
    const g_function_spec gspec(unsigned(spec.p()), 0, top, spec.a);
    const double g = g_value_with_fallback(gspec, 1.0 / x, tol);
    return complex_t(0.0, 2.0 * pi * ratio * g);
}

double mean_closed_form(const hypergeometric_spec& spec, double x,
                        const tolerance_config& tol) {
    if (!spec.gauss_type())
        throw evaluation_error("mean_closed_form: requires p = q+1");
    if (!(x > 1.0))
        throw evaluation_error("mean_closed_form: requires x > 1");
    const double ratio = gamma_ratio(spec.b, spec.a);
    param_vector top{0.5, 1.0};
    for (double bj : spec.b) top.push_back(bj - 0.5);
    param_vector bottom = spec.a.shifted(-0.5);
    bottom.push_back(1.0);
    const g_function_spec gspec(unsigned(spec.p()), 1, top, bottom);
    const double g = g_value_with_fallback(gspec, 1.0 / x, tol);
    return -pi * ratio / std::sqrt(x) * g;
}

}  // namespace hyperverify
