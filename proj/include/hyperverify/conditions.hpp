#ifndef HYPERVERIFY_CONDITIONS_HPP
#define HYPERVERIFY_CONDITIONS_HPP

#include <functional>
#include <optional>
#include <vector>

#include "hyperverify/parameter_vector.hpp"
#include "hyperverify/tolerances.hpp"

namespace hyperverify {

// Hypothesis probes: Muntz-polynomial nonnegativity, weak
// supermajorization, complete/absolute monotonicity and the Stieltjes
// moment property.  These decide whether a parameter set satisfies the
// sufficient conditions the representation theorems assume.

struct muntz_spec {
    param_vector a;
    param_vector b;  // same length as a
};

// v_{a,b}(t) = sum_k (t^{a_k} - t^{b_k}).
double muntz_eval(const muntz_spec& spec, double t);

struct muntz_certificate {
    bool nonnegative = false;
    double min_location = 0.0;  // global minimum over the scan
    double min_value = 0.0;
};

// Scan on a 2049-point Chebyshev-spaced grid of [0,1], refined by bisection
// on sign changes of v', then a decision with witness.
muntz_certificate muntz_nonneg(const muntz_spec& spec);

// b \prec^W a: both sorted ascending, every prefix sum of sorted a bounded
// by the matching prefix sum of sorted b.  Implies v_{a,b} >= 0 on [0,1].
bool weak_supermajorization(const param_vector& a, const param_vector& b);

enum class monotonicity_kind { completely_monotonic, absolutely_monotonic,
                               stieltjes_moment };

struct monotonicity_witness {
    double point = 0.0;  // grid point (or coefficient/order index)
    int order = 0;
    double value = 0.0;  // offending signed value
};

struct monotonicity_verdict {
    monotonicity_kind kind;
    bool passed = false;
    int max_order_checked = 0;
    std::optional<monotonicity_witness> witness;
};

// Probes (-1)^n Delta_h^n f(x) >= 0 through forward divided differences
// with h in {1e-2, 1e-3}, orders 0..max_order.  The sign tolerance -1e-7
// (relative to the alternating-sum mass) absorbs series and rounding
// noise; violations beyond it are hard failures.
monotonicity_verdict cm_probe(const std::function<double(double)>& f,
                              const std::vector<double>& grid,
                              int max_order = 8);

// Series-coefficient path of the probe, for functions exposing Taylor
// data in 1/x: nonnegative coefficients certify complete monotonicity
// (each term c_n x^-n is completely monotone).
monotonicity_verdict cm_probe_coefficients(
    const std::vector<double>& reciprocal_taylor);

// Absolute monotonicity from a Taylor-coefficient prefix.
monotonicity_verdict am_check(const std::vector<double>& taylor);

// Stieltjes moment property through the two Hankel determinant chains.
monotonicity_verdict stieltjes_moment_check(const std::vector<double>& s,
                                            int order);

// Default probe grid 0.1 .. 10.
std::vector<double> cm_default_grid();

}  // namespace hyperverify

#endif
