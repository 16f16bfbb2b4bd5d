#ifndef HYPERVERIFY_ERRORS_HPP
#define HYPERVERIFY_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hyperverify {

// Base class for all numerical-evaluation failures raised by this library.
class evaluation_error : public std::runtime_error {
public:
    explicit evaluation_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Gamma function (or a gamma ratio) evaluated at a nonpositive integer.
class pole_error : public evaluation_error {
public:
    pole_error(const std::string& where, double offending)
        : evaluation_error(where + ": gamma pole at " + std::to_string(offending)),
          value(offending) {}
    double value;
};

// A series or an adaptive process exhausted its iteration budget.
class non_convergence_error : public evaluation_error {
public:
    explicit non_convergence_error(const std::string& msg) : evaluation_error(msg) {}
};

// Upper parameters separated by integers: the generic connection/expansion
// formulas lose all significant digits.  The message carries the suggested
// epsilon perturbation.
class degenerate_parameter_error : public evaluation_error {
public:
    degenerate_parameter_error(const std::string& msg, double suggested_eps)
        : evaluation_error(msg + " (suggested symmetric perturbation eps=" +
                           std::to_string(suggested_eps) + ")"),
          suggested_epsilon(suggested_eps) {}
    double suggested_epsilon;
};

// Evaluation point touches the branch cut [1, inf).
class cut_contact_error : public evaluation_error {
public:
    explicit cut_contact_error(const std::string& msg) : evaluation_error(msg) {}
};

// Quadrature failure (NaN in the integrand, budget exhausted, ...).
class quadrature_error : public evaluation_error {
public:
    quadrature_error(const std::string& msg, double where)
        : evaluation_error(msg + " (near x=" + std::to_string(where) + ")"),
          location(where) {}
    double location;
};

// No admissible Mellin-Barnes contour abscissa exists for the given rows.
class contour_error : public evaluation_error {
public:
    explicit contour_error(const std::string& msg) : evaluation_error(msg) {}
};

}  // namespace hyperverify

#endif
