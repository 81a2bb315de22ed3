#pragma once

#include <optional>
#include <vector>

#include "extentlab/gp.hpp"
#include "extentlab/station.hpp"
#include "extentlab/types.hpp"

namespace extentlab {

// One observed station-day prepared for likelihood work. The AR(1) recursion
// runs within a (station, year) window; a day whose predecessor is missing (or
// is day 1) is an "init" cell evaluated under the stationary marginal
// N(m, sigma^2/(1 - rho^2)) instead of the one-step conditional.
struct DayCell {
    int32_t site = 0;  // 0-based
    int32_t year = 0;  // 0-based
    int32_t day = 0;   // 0-based
    bool is_init = false;
    double y = 0.0;
    double y_prev = 0.0;  // previous-day value; only meaningful when !is_init
};

// Observed data plus fixed geometry: everything the sampler conditions on.
// The trend covariate is centered, t_tilde = t - t_center with
// t_center = (n_years + 1)/2, the canonical parameterization used everywhere
// (store, generation, analytics); the spatial decay is fixed from the maximum
// pairwise station distance at construction and never re-estimated.
class DataSet {
public:
    explicit DataSet(std::vector<StationSeries> stations);

    const SeasonConfig& season() const { return season_; }
    const std::vector<Site>& sites() const { return sites_; }
    const std::vector<StationSeries>& stations() const { return stations_; }
    int n_sites() const { return static_cast<int>(sites_.size()); }
    int n_years() const { return season_.n_years; }
    int season_length() const { return season_.season_length; }

    double t_center() const { return t_center_; }
    double t_tilde(int t) const { return static_cast<double>(t) - t_center_; }  // t 1-based

    const Projection& projection() const { return proj_; }
    const Matrix& station_distances() const { return dist_; }
    bool has_decay() const { return std::isfinite(decay_); }
    double decay() const;  // throws ValidationError when < 2 distinct sites

    // Seasonal harmonic tables indexed by 0-based window day.
    double sin_day(int l0) const { return sin_[static_cast<std::size_t>(l0)]; }
    double cos_day(int l0) const { return cos_[static_cast<std::size_t>(l0)]; }

    const std::vector<DayCell>& cells() const { return cells_; }
    // Cells are sorted by (site, year, day); [site_begin(i), site_begin(i+1))
    // is station i's contiguous range.
    std::size_t site_begin(int i) const { return site_begin_[static_cast<std::size_t>(i)]; }

private:
    std::vector<StationSeries> stations_;
    std::vector<Site> sites_;
    SeasonConfig season_;
    double t_center_ = 0.0;
    Projection proj_;
    Matrix dist_;
    double decay_ = 0.0;
    std::vector<double> sin_, cos_;
    std::vector<DayCell> cells_;
    std::vector<std::size_t> site_begin_;
};

// One draw of every unknown in the hierarchical model.
struct ModelParameters {
    // Fixed effects: intercept, linear trend (per centered year), seasonal
    // harmonic pair, elevation slope.
    double beta0 = 0.0, alpha = 0.0, beta_sin = 0.0, beta_cos = 0.0, beta_elev = 0.0;
    // Site-level fields (length n_sites).
    Vector b0, a, zrho, zsigma;
    // Year effects: psi (length n_years, psi[0] pinned to 0) and the
    // site-by-year white-noise field eta (n_sites x n_years).
    Vector psi;
    Matrix eta;
    // Means of the transformed AR fields.
    double zrho_mean = 0.0, zsigma_mean = 0.0;
    // The seven variance components.
    double var_b0 = 1.0, var_a = 1.0, var_psi = 1.0, var_eta = 1.0;
    double var_zrho = 1.0, var_zsigma = 1.0, var_eps0 = 1.0;

    double rho(int i) const { return rho_from_z(zrho[i]); }
    double sigma2(int i) const { return var_eps0 * sigma2_from_z(zsigma[i]); }

    static ModelParameters zeros(int n_sites, int n_years);
    void validate(int n_sites, int n_years) const;  // shapes, psi[0]==0, vars>0, finite
};

// Mean surface m_{t,l}(s_i): fixed effects + site/year random effects.
// t, l are 1-based.
double mean_value(const ModelParameters& p, const DataSet& data, int i, int t, int l);

// One-step-ahead conditional mean: m + rho*(y_prev - m_prev); without an
// observed predecessor the stationary mean m itself.
double conditional_mean(const ModelParameters& p, const DataSet& data, int i, int t, int l,
                        std::optional<double> y_prev);

// Exact AR(1) log likelihood over all observed cells.
double log_likelihood(const ModelParameters& p, const DataSet& data);

}  // namespace extentlab
