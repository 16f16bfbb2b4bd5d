#ifndef HYPERVERIFY_LEVIN_HPP
#define HYPERVERIFY_LEVIN_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <vector>

#include "hyperverify/errors.hpp"

namespace hyperverify {

// Levin u-transformation on a sequence of partial sums, in the standard
// diagonal-update form: feeding the m-th partial sum updates one diagonal
// of the numerator/denominator tables.
//
// The remainder estimate is the u-variant, omega_n = (beta + n) a_n with
// a_n the n-th term and beta = 1.  That choice accelerates both slowly
// convergent and alternating series well, which is all this project needs
// (power series with |argument| near 1).
template <typename Value>
class levin_accumulator {
public:
    explicit levin_accumulator(double beta = 1.0) : beta_(beta) {}

    // Feed the next term a_n; returns the current transformed estimate.
    Value add_term(Value term) {
        partial_ += term;
        const std::size_t m = num_.size();
        const double omega_scale = beta_ + double(m);
        Value omega = omega_scale * term;
        if (std::abs(omega) == 0.0) {
            // Terminated series: the partial sum is exact.
            terminated_ = true;
            return partial_;
        }
        num_.push_back(partial_ / omega);
        den_.push_back(Value(1.0) / omega);
        for (std::size_t k = 1; k <= m; ++k) {
            const double n = double(m - k);
            const double bn = beta_ + n;
            const double b =
                bn / (bn + double(k)) *
                std::pow((bn + double(k) - 1.0) / (bn + double(k)),
                         double(k) - 2.0);
            num_[m - k] = num_[m - k + 1] - b * num_[m - k];
            den_[m - k] = den_[m - k + 1] - b * den_[m - k];
        }
        if (std::abs(den_[0]) > 0.0) estimate_ = num_[0] / den_[0];
        return estimate_;
    }

    Value estimate() const { return terminated_ ? partial_ : estimate_; }
    Value partial_sum() const { return partial_; }
    bool terminated() const { return terminated_; }
    std::size_t count() const { return num_.size(); }

private:
    double beta_;
    Value partial_{};
    Value estimate_{};
    bool terminated_ = false;
    std::vector<Value> num_;
    std::vector<Value> den_;
};

// Sums a series given a term generator, accelerating with the Levin
// u-transform.  The transform converges to a plateau and then loses digits
// as the table depth grows, so the driver tracks the estimate with the
// smallest consecutive change and bails out once the change starts growing
// again by orders of magnitude.
template <typename Value, typename TermGen>
Value levin_sum(TermGen&& next_term, double rel_tol, int min_terms,
                int max_terms) {
    levin_accumulator<Value> acc;
    Value prev{};
    Value best{};
    double best_delta = std::numeric_limits<double>::infinity();
    int good = 0;
    Value last_term{};
    for (int n = 0; n < max_terms; ++n) {
        last_term = next_term(n);
        const Value est = acc.add_term(last_term);
        if (acc.terminated()) return acc.partial_sum();
        if (n >= min_terms) {
            const double scale = std::abs(est) + 1e-300;
            const double delta = std::abs(est - prev);
            if (delta <= best_delta) {
                best_delta = delta;
                best = est;
            }
            if (delta <= rel_tol * scale) {
                if (++good >= 2) return est;
            } else {
                good = 0;
            }
            if (n > min_terms + 10 && delta > 1e6 * (best_delta + 1e-300))
                return best;
        }
        prev = est;
    }
    const double plain_err = std::abs(last_term);
    if (best_delta <= plain_err) return best;
    if (plain_err <= rel_tol * (std::abs(acc.partial_sum()) + 1e-300))
        return acc.partial_sum();
    return std::isfinite(best_delta) ? best : acc.estimate();
}

}  // namespace hyperverify

#endif
