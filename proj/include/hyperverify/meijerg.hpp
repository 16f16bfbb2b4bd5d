#ifndef HYPERVERIFY_MEIJERG_HPP
#define HYPERVERIFY_MEIJERG_HPP

#include "hyperverify/parameter_vector.hpp"
#include "hyperverify/tolerances.hpp"

namespace hyperverify {

// Orders and parameter rows of a Meijer G function G^{m,n}_{p,q}.
// Supported shapes: q = p (both rows equal length) and q = p+1 with n = 0
// (the Laplace kernel of the Gauss-type functions).
struct g_function_spec {
    unsigned m = 0, n = 0, p = 0, q = 0;
    param_vector top;     // length p
    param_vector bottom;  // length q

    g_function_spec(unsigned m_, unsigned n_, param_vector top_,
                    param_vector bottom_);

    // False when bottom entries are pairwise integer-separated, i.e. the
    // Slater constants lose all significant digits.
    bool generic_parameters(double eps) const;
};

enum class g_side { real, above, below };

// Slater-type expansion of G^{m,n}_{p,p}(x): a finite sum of gamma-ratio
// constants times hypergeometric series, one branch inside the unit circle
// and one outside (Heaviside selection).  For real parameter rows both
// one-sided values coincide off |x| = 1, so `side` is accepted only for
// interface parity.
double g_slater(const g_function_spec& spec, double x,
                g_side side = g_side::real,
                const tolerance_config& tol = default_tolerances());

// Everywhere-convergent expansion of G^{q,0}_{p,q}(t), q = p+1, on t > 0:
// the Laplace density of the Gauss-type hypergeometric functions.  Decays
// like t^theta exp(-t) at infinity.
double g_q_plus_one(const g_function_spec& spec, double t,
                    const tolerance_config& tol = default_tolerances());

// Shifting property: G(x | rows + mu) = x^mu G(x | rows).
g_function_spec g_shift(const g_function_spec& spec, double mu);

// Independent Mellin-Barnes contour quadrature for the supported shapes.
// Slower than the expansion and free of the parameter-degeneracy
// restriction; used as the cross-method oracle and as the fallback for
// integer-separated rows.
double mellin_barnes_oracle(const g_function_spec& spec, double x,
                            const tolerance_config& tol =
                                default_tolerances());

namespace detail {
// Expansion evaluation without the public unit-circle guard.  Quadratures
// with declared endpoint exponents probe arbitrarily close to x = 1; the
// near-unity values come from the Gauss connection formulas and the
// closed-form kernels, so these calls stay meaningful where the public
// precondition refuses.
double g_slater_eval(const g_function_spec& spec, double x,
                     const tolerance_config& tol);

// G^{m,0}_{p,p}(1 - d) as a function of the distance d to the unit
// argument; exact for p <= 2, where the kernels reduce to the Beta form
// or to Gauss functions with their own 1-z connection.
double g_slater_near_one(const g_function_spec& spec, double d,
                         const tolerance_config& tol);
}  // namespace detail

}  // namespace hyperverify

#endif
