#pragma once

#include <cmath>
#include <cstddef>

namespace extentlab {

// Neumaier-compensated running sum. Keeps the accumulated rounding error near
// machine epsilon of the final sum irrespective of length, which the analytics
// identities (complement, Fubini, increment-mean) need at their 1e-12 tolerance.
struct NeumaierSum {
    double sum = 0.0;
    double comp = 0.0;

    void add(double x) {
        double t = sum + x;
        if (std::abs(sum) >= std::abs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    }
    double value() const { return sum + comp; }
};

inline double compensated_sum(const double* x, std::size_t n) {
    NeumaierSum s;
    for (std::size_t i = 0; i < n; ++i) s.add(x[i]);
    return s.value();
}

inline double compensated_mean(const double* x, std::size_t n) {
    return n == 0 ? 0.0 : compensated_sum(x, n) / static_cast<double>(n);
}

}  // namespace extentlab
