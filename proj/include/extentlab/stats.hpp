#pragma once

#include <cstddef>
#include <vector>

namespace extentlab {

// Sample mean / sd (n-1 denominator) over a vector; sd of n < 2 is 0.
double sample_mean(const std::vector<double>& x);
double sample_sd(const std::vector<double>& x);

// Linear-interpolation quantile (type 7): h = (n-1)p, x[floor h] interpolated
// toward x[floor h + 1]. Input need not be sorted; p in [0, 1].
double quantile(std::vector<double> x, double p);

// Ordinary least squares y = intercept + slope * x, computed around centered x
// for numerical stability. Requires >= 2 points and non-constant x.
struct OlsFit {
    double intercept = 0.0;
    double slope = 0.0;
};
OlsFit ols_fit(const std::vector<double>& x, const std::vector<double>& y);

// Equal-width histogram over [lo, hi] (data range when lo >= hi), normalized to
// integrate to 1. Values sit in [lo, hi]; the top edge closes the last bin.
struct Histogram {
    double lo = 0.0, hi = 0.0;
    std::vector<double> density;
};
Histogram histogram(const std::vector<double>& x, int n_bins, double lo = 0.0, double hi = -1.0);

}  // namespace extentlab
