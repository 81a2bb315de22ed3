#pragma once

#include <string>
#include <vector>

#include "extentlab/posterior.hpp"

namespace extentlab {

// Convergence diagnostics over per-chain draw sequences. Each element of
// `chains` is one chain's draws of a single scalar; all chains must have the
// same length.

// Cross-chain scale-reduction factor in the form
//   rhat = sqrt(1 + Var(chain means) / W),   W = mean within-chain variance.
// If the chains are identical (between-chain variance zero) this is exactly
// 1.0 regardless of W; if W == 0 while the chain means differ it is +inf.
double rhat(const std::vector<std::vector<double>>& chains);

// Split scale-reduction factor: each chain is halved and the classic
// ((n-1)/n * W + B/n) / W ratio is computed over the split halves. Detects
// within-chain drift that the unsplit form misses. Constant chains give 1.0.
double split_rhat(const std::vector<std::vector<double>>& chains);

// Effective sample size across chains: autocovariances are estimated per
// chain, combined with the between-chain variance into the pooled variance
// estimate, and the autocorrelation sum is truncated at the first
// non-positive pair of consecutive lags (initial positive sequence).
// Clamped to [1, total draw count].
double effective_sample_size(const std::vector<std::vector<double>>& chains);

struct ScalarDiagnostics {
    std::string name;
    double mean = 0.0;
    double sd = 0.0;
    double rhat = 0.0;
    double split_rhat = 0.0;
    double ess = 0.0;
};

// Per-scalar diagnostics over all retained draws in the store, in the
// store's scalar layout order.
std::vector<ScalarDiagnostics> diagnostics(const PosteriorStore& store);

}  // namespace extentlab
