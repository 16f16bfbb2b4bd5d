#ifndef HYPERVERIFY_PFQ_HPP
#define HYPERVERIFY_PFQ_HPP

#include <complex>

#include "hyperverify/gamma.hpp"
#include "hyperverify/parameter_vector.hpp"
#include "hyperverify/tolerances.hpp"

namespace hyperverify {

// Parameter block of a generalized hypergeometric function pFq(a; b; z).
struct hypergeometric_spec {
    param_vector a;
    param_vector b;

    hypergeometric_spec(param_vector a_, param_vector b_);

    std::size_t p() const { return a.size(); }
    std::size_t q() const { return b.size(); }
    bool gauss_type() const { return a.size() == b.size() + 1; }

    hypergeometric_spec raised() const {  // a+1; b+1 (derivative spec)
        return {a.shifted(1.0), b.shifted(1.0)};
    }
};

// Both one-sided limits of pFq on the branch cut x > 1, plus the derived
// jump and mean.
struct cut_evaluation {
    double x;
    complex_t above;   // pFq(a; b; x + i0)
    complex_t below;   // pFq(a; b; x - i0)
    complex_t jump;    // above - below
    complex_t mean;    // (above + below) / 2
};

// Direct power-series sum.  p <= q: any z.  p = q+1: |z| up to the policy
// radius (0.9 by default); beyond it use pfq_continued.
complex_t pfq_series(const hypergeometric_spec& spec, complex_t z,
                     const tolerance_config& tol = default_tolerances());

// Full evaluation on the cut plane C \ [1, inf) for p = q+1 (and anywhere
// for p <= q).  Zones:
//   |z| <= 0.9          direct series;
//   0.9 < |z| < 1       Levin-u accelerated series;
//   |z| >= 1            connection sum with principal-branch (-z)^(-a_j),
//                       inner series Levin-accelerated near the boundary.
// Upper parameters separated by integers make the connection constants
// blow up; such specs are rerouted through an Euler integral reduction or
// a direct Mellin-Barnes contour before falling back to the documented
// epsilon perturbation.
complex_t pfq_continued(const hypergeometric_spec& spec, complex_t z,
                        const tolerance_config& tol = default_tolerances());

// Boundary values on the cut x > 1 together with jump and mean.
cut_evaluation cut_values(const hypergeometric_spec& spec, double x,
                          const tolerance_config& tol = default_tolerances());

// Closed forms of the jump and of the mean over the cut, as gamma-ratio
// prefactors times Meijer G values (evaluated via the Slater expansion, or
// the Mellin-Barnes contour when the bottom row is integer-separated).
complex_t jump_closed_form(const hypergeometric_spec& spec, double x,
                           const tolerance_config& tol = default_tolerances());
double mean_closed_form(const hypergeometric_spec& spec, double x,
                        const tolerance_config& tol = default_tolerances());

// d/dz pFq(a; b; z) = ((a)/(b)) pFq(a+1; b+1; z).
complex_t pfq_derivative(const hypergeometric_spec& spec, complex_t z,
                         const tolerance_config& tol = default_tolerances());

namespace detail {

// Removes upper/lower parameter pairs that coincide (exact series-level
// cancellation), returning the reduced spec.
hypergeometric_spec cancel_common_parameters(const hypergeometric_spec& spec);

// True when some pair a_i - a_j is within tol.degeneracy_eps of an integer.
bool integer_separated(const param_vector& v, double eps);

// Direct series with no radius policing (used by the connection sum and the
// Meijer G expansions, which control their own arguments).
complex_t series_unchecked(const hypergeometric_spec& spec, complex_t z,
                           const tolerance_config& tol);

// Levin-u accelerated series.
complex_t series_levin(const hypergeometric_spec& spec, complex_t z,
                       const tolerance_config& tol);

// Series dispatch used by expansion code: plain inside the policy radius,
// accelerated outside.
complex_t series_auto(const hypergeometric_spec& spec, complex_t z,
                      const tolerance_config& tol);

enum class cut_side { none, above, below };

// 2F1(a, b; c; 1-w) through the z -> 1-z connection formulas (generic or
// logarithmic excess), taking the distance w to unity directly so that
// arguments like w = 1e-20 keep full precision.
complex_t gauss_one_minus_w(double a, double b, double c, complex_t w,
                            const tolerance_config& tol);

// (p+1)-term connection sum evaluating p+1Fp off the unit disk.  side picks
// the branch of (-z)^(-a_j) on the cut.
complex_t connection_sum(const hypergeometric_spec& spec, complex_t z,
                         cut_side side, const tolerance_config& tol);

}  // namespace detail

}  // namespace hyperverify

#endif
