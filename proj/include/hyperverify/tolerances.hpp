#ifndef HYPERVERIFY_TOLERANCES_HPP
#define HYPERVERIFY_TOLERANCES_HPP

namespace hyperverify {

// Central knob record.  Every module takes one of these (defaulted) instead
// of hard-coding magic numbers at the call sites.
struct tolerance_config {
    // Power series summation.
    double series_rel_tol = 1e-15;
    int max_terms = 10000;
    int consecutive_small_terms = 3;
    double series_policy_radius = 0.9;  // direct-sum radius for p = q+1

    // Levin-u acceleration.
    int levin_min_terms = 12;
    int levin_max_terms = 120;

    // Adaptive quadrature defaults.
    double quad_rel_tol = 1e-10;
    double quad_abs_tol = 1e-13;
    int max_panels = 2000;

    // Identity residual comparisons (low-level verifiers).
    double identity_rel_tol = 1e-9;

    // Parameters are "integer separated" below this distance to an integer.
    double degeneracy_eps = 1e-6;
    // Symmetric split applied when perturbing a degenerate vector.
    double perturbation_eps = 1e-7;
};

inline const tolerance_config& default_tolerances() {
    static const tolerance_config cfg{};
    return cfg;
}

}  // namespace hyperverify

#endif
