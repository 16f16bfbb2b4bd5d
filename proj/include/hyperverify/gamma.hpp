#ifndef HYPERVERIFY_GAMMA_HPP
#define HYPERVERIFY_GAMMA_HPP

#include <complex>
#include <cstddef>

#include "hyperverify/parameter_vector.hpp"
#include "hyperverify/tolerances.hpp"

namespace hyperverify {

using complex_t = std::complex<double>;

// True when x sits (numerically) on a gamma pole.
bool is_gamma_pole(double x);

// Principal-branch log-gamma on the cut plane C \ (-inf, 0].  Lanczos
// rational approximation for Re z >= 1/2, reflection below.  Relative
// accuracy ~1e-14 for moderate |z|.
complex_t log_gamma(complex_t z);

complex_t gamma_fn(complex_t z);

// log|Gamma(x)| together with the sign of Gamma(x), for real x off the
// poles.  This is the workhorse behind every gamma-ratio product: ratios
// are assembled in log space so that parameter boxes where Gamma overflows
// stay representable.
struct signed_log_gamma {
    double log;  // log |Gamma(x)|
    int sign;    // -1 or +1
};
signed_log_gamma log_gamma_signed(double x);

// Gamma(num_1)...Gamma(num_m) / (Gamma(den_1)...Gamma(den_n)), computed in
// log space with sign tracking.  Throws pole_error when any entry of either
// vector is a nonpositive integer.
double gamma_ratio(const param_vector& num, const param_vector& den);

namespace detail {
// As gamma_ratio, but a pole in the denominator makes the ratio vanish
// instead of throwing.  Poles in the numerator still throw.  Used for the
// expansion constants A_j, B_j, M_j where 1/Gamma(nonpositive integer) = 0
// legitimately kills a term.
double gamma_ratio_zero_on_den_pole(const param_vector& num,
                                    const param_vector& den);

// Sum of principal log-gammas over a parameter vector shifted by a complex
// s; used by the Mellin-Barnes contour integrands.
complex_t log_gamma_sum(const param_vector& v, complex_t s);
}  // namespace detail

// Real digamma, via reflection and the Stirling tail; used by the
// logarithmic-excess connection formulas.
double digamma(double x);

// Pochhammer product (a_1)_n (a_2)_n ... (a_p)_n as an iterated product.
// (a)_0 = 1 exactly.  Throws pole_error when some a_k is a nonpositive
// integer (the defining ratio Gamma(a_k+n)/Gamma(a_k) is singular there).
double pochhammer(const param_vector& a, unsigned n);

// Delta(c, k) = ((c_i + j)/k : c_i in c, j = 0..k-1).
param_vector delta_vector(const param_vector& c, unsigned k);

}  // namespace hyperverify

#endif
