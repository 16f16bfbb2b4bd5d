#ifndef HYPERVERIFY_TRANSFORMS_HPP
#define HYPERVERIFY_TRANSFORMS_HPP

#include <functional>
#include <vector>

#include "hyperverify/gamma.hpp"
#include "hyperverify/parameter_vector.hpp"
#include "hyperverify/pfq.hpp"
#include "hyperverify/quadrature.hpp"
#include "hyperverify/tolerances.hpp"

namespace hyperverify {

// Every verifier hands back both side values and the signed relative
// residual, never a bare boolean: a failing identity should be quantified.
struct verifier_result {
    complex_t lhs{};
    complex_t rhs{};
    double rel_residual = 0.0;  // |lhs-rhs| / max(|lhs|,|rhs|), signed by Re(lhs-rhs)
};

verifier_result make_result(complex_t lhs, complex_t rhs);

// Nonnegative measure atom*delta_0 + density(t) dt on [0, inf).
struct representing_measure {
    double atom_at_zero = 0.0;
    std::function<double(double)> density;
    bool semi_infinite_support = true;
};

// --- Laplace representations -------------------------------------------

// pFp(a; b; -z) against the finite Laplace transform of the
// G^{p,0}_{p,p} kernel on (0,1).
verifier_result verify_laplace_pFp(const param_vector& a,
                                   const param_vector& b, double z,
                                   const tolerance_config& tol =
                                       default_tolerances());

// p+1Fp(a; b; -z) against the semi-infinite Laplace transform of the
// G^{p+1,0}_{p,p+1} kernel.
verifier_result verify_laplace_p1Fp(const param_vector& a,
                                    const param_vector& b, double z,
                                    const tolerance_config& tol =
                                        default_tolerances());

// Representing measure of x -> pFq(a; b; alpha/x): unit atom at zero plus
// the density alpha ((a)/(b)) pF_{q+1}(a+1; b+1, 2; alpha t).
representing_measure representing_measure_1_over_x(
    const param_vector& a, const param_vector& b, double alpha,
    const tolerance_config& tol = default_tolerances());

// atom + int_0^inf e^{-xt} density(t) dt.
double measure_laplace_transform(const representing_measure& m, double x,
                                 const tolerance_config& tol =
                                     default_tolerances());

// Convolution-of-measures density: nu0(t) = int_0^t nu2(t-u) nu1(u) du
// + nu1(t) + nu2(t).  Both inputs must carry unit atoms.
std::function<double(double)> convolve_measures(
    const representing_measure& nu1, const representing_measure& nu2,
    const tolerance_config& tol = default_tolerances());

// nu(t) = sum_i mass_i (u_i/t)^{1/2} I_1(2 sqrt(u_i t)), evaluated through
// the 0F1(-; 2; u t) series.
double bessel_measure_relation(const std::vector<double>& points,
                               const std::vector<double>& masses, double t,
                               const tolerance_config& tol =
                                   default_tolerances());

// --- Stieltjes representations -----------------------------------------

// rho(x) = Gamma(b)/Gamma(a) G^{p+1,0}_{p+1,p+1}(1/x | 1,b; a), x > 1.
double stieltjes_density_rho(const param_vector& a, const param_vector& b,
                             double x,
                             const tolerance_config& tol =
                                 default_tolerances());

// sigma = 2 representation of p+1Fp(a; b; -z), |arg z| < pi/2.
verifier_result stieltjes_sigma2(const param_vector& a,
                                 const param_vector& b, complex_t z,
                                 const tolerance_config& tol =
                                     default_tolerances());

// sigma = 3 representation, |arg z| < pi/3, with the density evaluated
// through the real double-integral kernel (average-value convention on the
// cut; the psi-combination route is exposed below for the cross-check).
verifier_result stieltjes_sigma3(const param_vector& a,
                                 const param_vector& b, complex_t z,
                                 const tolerance_config& tol =
                                     default_tolerances());

// Density of the sigma = 3 representation via the real kernel
// (9 sqrt3 y^3 / 2 pi) (Gamma(top)/Gamma(bottom)) *
//     int_0^1 (1+ty)/(1+ty+t^2y^2)^3 G^{P,0}_{P,P}(t | top; bottom) dt.
double sigma3_phi(const param_vector& top, const param_vector& bottom,
                  double y,
                  const tolerance_config& tol = default_tolerances());

// psi_m(y), the everywhere-expanded branch used for 0 < y < 1.
double sigma3_psi(const param_vector& a, const param_vector& b, unsigned m,
                  double y,
                  const tolerance_config& tol = default_tolerances());

// Both closed forms of the sigma = 3 angular kernel (for the two-sided
// algebraic reduction check).
double sin3arctan_lhs(double t, double y);
double sin3arctan_rhs(double t, double y);

// Double-hypergeometric-series form of the sigma = 3 density (equal-length
// vectors), truncated at machine-negligible tail for |y| < 1.
double sigma3_phi_series(const param_vector& a, const param_vector& b,
                         double y);

// General sigma >= 2 density (equal-length vectors), single quadrature of
// the arctan kernel against G^{p,0}_{p,p}.
double stieltjes_sigma_general(const param_vector& a, const param_vector& b,
                               double sigma, double y,
                               const tolerance_config& tol =
                                   default_tolerances());

// Simplified sigma = 2 kernel.
double stieltjes_varphi2(const param_vector& a, const param_vector& b,
                         double y,
                         const tolerance_config& tol = default_tolerances());

// Newton-Leibnitz representation of pFq(a; b; 1/x) - 1, p <= q.
verifier_result newton_leibnitz_repr(const param_vector& a,
                                     const param_vector& b, double x,
                                     const tolerance_config& tol =
                                         default_tolerances());

}  // namespace hyperverify

#endif
