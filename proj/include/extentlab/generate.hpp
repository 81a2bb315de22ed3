#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "extentlab/ensemble.hpp"
#include "extentlab/posterior.hpp"
#include "extentlab/rng.hpp"
#include "extentlab/station.hpp"

namespace extentlab {

// Geometry and factorizations shared by every replicate of one generation run:
// the station-to-grid kriging plan in correlation space, the map of grid
// points that coincide with a station, and the seasonal harmonic tables.
struct GenerationPlan {
    SeasonConfig season;
    std::vector<Site> stations;
    GridSpec grid;
    Projection proj;
    double decay = 0.0;
    double t_center = 0.0;
    int t_first = 1;  // simulated year range, 1-based inclusive
    int t_last = 1;
    KrigingPlan kriging;
    std::vector<int> station_at;           // grid point -> station index, or -1
    std::vector<double> sin_day, cos_day;  // per 0-based window day

    int n_sim_years() const { return t_last - t_first + 1; }
};

GenerationPlan make_generation_plan(const StoreInfo& info, const GridSpec& grid, int t_first,
                                    int t_last);

// One posterior draw's latent fields carried to the grid.
struct GridFields {
    Vector b0, a, zrho, zsigma;  // length n_grid
    Matrix eta;                  // n_grid x n_sim_years
};

// Conditional simulation of the latent fields at the grid points. The four
// smooth fields are drawn from their conditional law given the draw's station
// values (which makes them exact copies where a grid point sits on a
// station); the year-by-site noise field has no spatial correlation, so
// off-station points get fresh draws and station-coincident points copy the
// draw's value. Consumes a fixed number of variates from `rng`.
GridFields krige_fields(const GenerationPlan& plan, const ModelParameters& p, RngStream& rng);

// Simulates one replicate day by day (stationary start each year, then the
// AR(1) step) through the runtime-dispatched kernels and returns the
// site-major float32 chunk. Throws NumericalError if a grid point's AR
// coefficient saturates (|rho| = 1).
std::vector<float> simulate_replicate(const GenerationPlan& plan, const ModelParameters& p,
                                      const GridFields& fields, RngStream& rng);

struct GenerateConfig {
    int n_replicates = 1;
    uint64_t seed = 1;
    // Calendar year range to simulate; 0/0 means the full fitted range.
    int first_year = 0;
    int last_year = 0;
    int n_threads = 1;
};

// Full generation pass: replicate b uses posterior draw (b * n_draws) /
// n_replicates and RNG substream ("gen.replicate", b + 1), so output is
// byte-identical for any thread count. Writes the ensemble file and returns
// its metadata.
EnsembleInfo generate_ensemble(const PosteriorStore& store, const GridSpec& grid,
                               const GenerateConfig& cfg, const std::string& out_path,
                               const std::string& source_hash);

// Parameters for simulating a synthetic study: known fixed effects, field
// means, and variance components on a given station layout. Used by the
// `simulate` command and by end-to-end checks that fit against known truth.
struct TruthConfig {
    SeasonConfig season;
    double beta0 = 24.0;
    double alpha = 0.02;
    double beta_sin = -3.0;
    double beta_cos = -8.0;
    double beta_elev = -0.006;
    double zrho_mean = 1.2;
    double zsigma_mean = 0.0;
    double var_b0 = 1.0;
    double var_a = 4e-4;
    double var_psi = 0.25;
    double var_eta = 0.09;
    double var_zrho = 0.04;
    double var_zsigma = 0.04;
    double var_eps0 = 5.0;
    double missing_rate = 0.0;  // independent chance each day is dropped
    uint64_t seed = 1;

    void validate() const;  // throws ValidationError
};

struct SyntheticTruth {
    std::vector<StationSeries> stations;
    ModelParameters params;  // realized latent values at the stations
};

// Draws the latent fields at the stations from the hierarchical prior (first
// year effect pinned to zero), runs the AR(1) recursion, then thins by
// missing_rate. Requires at least two distinct station locations.
SyntheticTruth simulate_synthetic_truth(const std::vector<Site>& sites, const TruthConfig& cfg);

}  // namespace extentlab
