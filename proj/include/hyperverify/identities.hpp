#ifndef HYPERVERIFY_IDENTITIES_HPP
#define HYPERVERIFY_IDENTITIES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hyperverify/parameter_vector.hpp"
#include "hyperverify/pfq.hpp"
#include "hyperverify/tolerances.hpp"

namespace hyperverify {

// One evaluated sample of an identity case.
struct sample_record {
    std::vector<std::pair<std::string, double>> inputs;
    complex_t lhs{};
    complex_t rhs{};
    double residual = 0.0;
    bool errored = false;
    std::string error;
};

struct expected_policy {
    enum class kind { equality, inequality, known_discrepancy };
    kind type = kind::equality;
    double rel_tol = 1e-6;        // equality cases
    bool default_tol = true;      // true: --rel-tol overrides rel_tol
    double slack = -1e-9;         // inequality cases: minimum allowed slack
    double fail_threshold = 0.1;  // known_discrepancy: expected failure size
    std::string note;
};

// A catalogued equality/inequality with its deterministic sample plan.
struct identity_case {
    std::string id;
    std::string anchor;  // one-line description shown by --help
    expected_policy expected;
    int sample_count = 0;
    // Evaluates sample k of the plan derived from `seed`.
    std::function<sample_record(int k, std::uint64_t seed,
                                const tolerance_config&)>
        eval;

    bool flagged() const {
        return expected.type == expected_policy::kind::known_discrepancy;
    }
};

struct verification_report {
    std::string case_id;
    std::string status;  // "pass" | "fail" | "errored"
    double max_rel_residual = 0.0;
    std::vector<sample_record> samples;
    std::uint64_t seed = 0;
    double applied_rel_tol = 0.0;
    double duration_ms = -1.0;  // negative: not recorded
    bool flagged = false;
};

struct run_config {
    std::vector<std::string> cases;  // empty together with all_cases=false: error
    bool all_cases = false;
    std::uint64_t seed = 0;
    double rel_tol = 1e-6;  // default equality tolerance
    std::string output = "-";
    std::string format = "json";  // json | csv | text
    int parallelism = 1;
    bool timings = false;
};

// The shipped case catalog (stable order, unique ids).
const std::vector<identity_case>& catalog();
// Lookup by id; accepts the documented aliases.  nullptr when unknown.
const identity_case* find_case(const std::string& id);

verification_report run_case(const identity_case& c, const run_config& cfg,
                             const tolerance_config& tol =
                                 default_tolerances());

// --- Theorem-level verifiers shared by the catalog and the tests --------

// Finite gamma-ratio sum against the single Meijer G quadrature over (0,1).
// Returns the relative residual and exposes both sides.
double verify_theorem41(const param_vector& a, const param_vector& b,
                        double alpha, double beta, unsigned m,
                        double quad_rel_tol = 1e-8, double* lhs_out = nullptr,
                        double* rhs_out = nullptr,
                        const tolerance_config& tol = default_tolerances());

// p = 1 closed form: the Gauss-function integrand route.
double verify_corollary41(double a, double b, double alpha, double beta,
                          unsigned m, double quad_rel_tol = 1e-8,
                          double* lhs_out = nullptr, double* rhs_out = nullptr,
                          const tolerance_config& tol = default_tolerances());

// Distortion-bound suite in the half plane Re z < 1: six bounds, slack of
// each, minimum slack (relative).
struct inequality_report {
    double slack[6] = {0, 0, 0, 0, 0, 0};
    double min_slack = 0.0;
    bool passed = false;
};
inequality_report verify_inequalities(const param_vector& a,
                                      const param_vector& b, complex_t z,
                                      const tolerance_config& tol =
                                          default_tolerances());

// --- Deterministic low-discrepancy sampling ------------------------------

double halton(std::uint64_t index, unsigned base);
// Point k of the plan owned by (case_tag, seed); coordinates in [0,1).
std::vector<double> plan_point(const std::string& case_tag,
                               std::uint64_t seed, int k, unsigned dim);

// --- Report emission ------------------------------------------------------

std::string emit_report(const std::vector<verification_report>& reports,
                        const run_config& cfg);
std::string emit_report_json(const std::vector<verification_report>& reports,
                             const run_config& cfg);
std::string emit_report_csv(const std::vector<verification_report>& reports);
std::string emit_report_text(const std::vector<verification_report>& reports);

}  // namespace hyperverify

#endif
