#pragma once

#include <map>
#include <string>

#include "extentlab/model.hpp"
#include "extentlab/posterior.hpp"
#include "extentlab/rng.hpp"

namespace extentlab {

struct PriorConfig {
    double sd_fixed = 100.0;       // N(0, sd^2) on the five fixed effects
    double ig_shape = 0.1;         // all seven variance components
    double ig_rate = 0.1;
    double sd_zrho_mean = 100.0;   // N(0, sd^2) on the Z_rho field mean
    double sd_zsigma_mean = 1.0;   // N(0, sd^2) on the Z_sigma field mean

    void validate() const;
};

struct McmcConfig {
    int n_iter = 4000;   // total sweeps per chain, burn-in included
    int burn_in = 2000;  // sweeps discarded; also the adaptation window
    int thin = 2;        // keep every thin-th post-burn-in sweep
    int n_chains = 2;
    uint64_t seed = 1;
    double target_accept = 0.44;  // scalar random-walk optimum
    double init_step = 0.5;       // initial random-walk scale on the z scale

    void validate() const;
    int draws_per_chain() const { return (n_iter - burn_in) / thin; }
};

// Blocked Gibbs sampler with conjugate normal/inverse-gamma updates and
// adaptive random-walk Metropolis for the transformed AR fields and their
// means. Sweep order is fixed: the joint mean block (fixed effects, b0 field,
// a field, psi — one multivariate normal conditional); per-year joint
// (psi_t, eta_t) blocks; the seven variances; per-site Z_rho; mean of Z_rho;
// per-site Z_sigma; mean of Z_sigma. The wide mean block exists because the
// trend alpha rides a flat ridge against the mean of the a(.) field (and psi
// against per-year eta means): sampling them one at a time mixes those
// directions at a crawl, while the joint draw integrates the ridge out
// exactly. Step sizes adapt toward target_accept during burn-in only and are
// frozen afterwards.
class GibbsSampler {
public:
    GibbsSampler(const DataSet& data, const PriorConfig& priors, const McmcConfig& mcmc);

    // Deterministic data-driven starting point plus mild chain-specific jitter.
    void init_state(RngStream& rng);
    void set_state(const ModelParameters& p);
    const ModelParameters& state() const { return state_; }

    void sweep(RngStream& rng, bool adapt);

    // Individual blocks, exposed so conditional draws can be studied in
    // isolation (each leaves every other block's state fixed).
    void update_mean_block(RngStream& rng);
    void update_year_effects(RngStream& rng);
    void update_variances(RngStream& rng);
    void update_zrho_sites(RngStream& rng, bool adapt);
    void update_zsigma_sites(RngStream& rng, bool adapt);
    void update_field_mean(RngStream& rng, bool adapt, bool for_zsigma);

    // Post-burn-in acceptance rates per Metropolis group.
    std::map<std::string, double> acceptance_rates() const;
    void reset_acceptance();

    const Matrix& station_correlation() const { return r_corr_; }

private:
    void rebuild_mean_table();
    void refresh_cells(std::size_t begin, std::size_t end);
    void refresh_all_cells();

    double site_ar_loglik(int i, double zrho, double zsigma) const;
    // Prior quadratic-form change when component i moves from z to z_new.
    double field_prior_delta(const Vector& z, double mu, double var, int i, double z_new) const;
    void check_finite(const char* block) const;

    void adapt_step(double& log_step, long& count, bool accepted);

    const DataSet& data_;
    PriorConfig priors_;
    McmcConfig mcmc_;
    int n_ = 0, T_ = 0;

    Matrix r_corr_;  // station correlation (fixed decay)
    Matrix q_;       // its inverse (field prior precision up to variance)
    Vector q_one_;   // Q * 1
    double one_q_one_ = 0.0;

    ModelParameters state_;

    // Per-(site, year) non-harmonic mean and per-cell pseudo quantities.
    Matrix c_;  // n x T
    std::vector<double> scale_, var_, ybar_, sin_t_, cos_t_;

    // Metropolis machinery: per-site + two means.
    std::vector<double> log_step_zrho_, log_step_zsigma_;
    double log_step_zrho_mean_ = 0.0, log_step_zsigma_mean_ = 0.0;
    std::vector<long> adapt_count_zrho_, adapt_count_zsigma_;
    long adapt_count_zrho_mean_ = 0, adapt_count_zsigma_mean_ = 0;
    std::map<std::string, long> proposals_, accepts_;
};

// Runs n_chains chains (parallel across threads, one RNG substream per chain)
// and returns the concatenated post-burn-in thinned draws.
PosteriorStore fit(const DataSet& data, const PriorConfig& priors, const McmcConfig& mcmc,
                   int n_threads = 1);

}  // namespace extentlab
