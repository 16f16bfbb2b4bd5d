#ifndef HYPERVERIFY_PARAMETER_VECTOR_HPP
#define HYPERVERIFY_PARAMETER_VECTOR_HPP

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <vector>

namespace hyperverify {

// An ordered vector of real parameters with the non-mutating views used all
// over the hypergeometric formulas: ascending sort, removal of one entry,
// uniform shift.
class param_vector {
public:
    param_vector() = default;
    param_vector(std::initializer_list<double> xs) : entries_(xs) {}
    explicit param_vector(std::vector<double> xs) : entries_(std::move(xs)) {}

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    double operator[](std::size_t k) const { return entries_[k]; }
    const std::vector<double>& entries() const { return entries_; }

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    param_vector sorted_ascending() const {
        param_vector v(*this);
        std::sort(v.entries_.begin(), v.entries_.end());
        return v;
    }

    // Vector with the k-th entry removed (0-based).
    param_vector with_removed(std::size_t k) const {
        param_vector v;
        v.entries_.reserve(entries_.size() - 1);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (i != k) v.entries_.push_back(entries_[i]);
        return v;
    }

    param_vector shifted(double mu) const {
        param_vector v(*this);
        for (double& x : v.entries_) x += mu;
        return v;
    }

    // First-order Pochhammer product: the plain product of the entries.
    double product() const {
        return std::accumulate(entries_.begin(), entries_.end(), 1.0,
                               [](double p, double x) { return p * x; });
    }

    double sum() const {
        return std::accumulate(entries_.begin(), entries_.end(), 0.0);
    }

    double min() const {
        return *std::min_element(entries_.begin(), entries_.end());
    }

    param_vector concat(const param_vector& other) const {
        param_vector v(*this);
        v.entries_.insert(v.entries_.end(), other.entries_.begin(),
                          other.entries_.end());
        return v;
    }

    void push_back(double x) { entries_.push_back(x); }

private:
    std::vector<double> entries_;
};

inline param_vector concat(const param_vector& a, const param_vector& b) {
    return a.concat(b);
}

}  // namespace hyperverify

#endif
